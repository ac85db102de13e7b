#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbg/graph.hpp"

namespace qbg {

// alpha + k delta with alpha a root index of either sign.
struct AffineRoot {
    int alpha = 0;
    Int k = 0;

    bool operator==(const AffineRoot&) const = default;
};

bool is_positive(const RootSystem& rs, const AffineRoot& b);
AffineRoot negate(const RootSystem& rs, const AffineRoot& b);
// "6d-a2", "d-a1-a2", "a1+a2"
std::string format_affine_root(const RootSystem& rs, const AffineRoot& b);

// w t_mu with mu in simple-coroot coordinates.
struct AffineElem {
    Elem w = 0;
    Vec mu;

    bool operator==(const AffineElem&) const = default;
};

class AffineWeyl {
public:
    explicit AffineWeyl(const WeylGroup& W) : W_(&W) {}

    const WeylGroup& finite() const { return *W_; }
    const RootSystem& roots() const { return W_->roots(); }

    AffineElem identity() const { return {W_->identity(), Vec(W_->rank(), 0)}; }
    AffineElem translation(const Vec& mu) const { return {W_->identity(), mu}; }
    AffineElem finite_elem(Elem w) const { return {w, Vec(W_->rank(), 0)}; }
    // r_i for i in 1..n, r_0 = r_theta t_{-theta^vee} for i = 0.
    AffineElem simple(int i) const;

    // (w t_mu)(v t_nu) = wv t_{v^{-1} mu + nu}
    AffineElem mul(const AffineElem& a, const AffineElem& b) const;
    AffineElem inverse(const AffineElem& a) const;
    // w t_mu (alpha + k delta) = w alpha + (k - <mu, alpha>) delta
    AffineRoot act(const AffineElem& x, const AffineRoot& b) const;
    // sum over alpha > 0 of |chi(w alpha < 0) + <mu, alpha>|
    int length(const AffineElem& x) const;
    // r_{alpha + k delta} = r_alpha t_{k alpha^vee}
    AffineElem reflection(const AffineRoot& b) const;
    // The positive affine root of a reflection, if x is one.
    std::optional<AffineRoot> reflection_root(const AffineElem& x) const;

    // <mu, alpha> for mu in coroot and alpha in root coordinates.
    Int pair(const Vec& mu, int alpha) const { return roots().pair(mu, roots().root(alpha)); }
    // "s1s2 t(-2,-4)"
    std::string render(const AffineElem& x) const;

private:
    const WeylGroup* W_;
};

// <mu, alpha> in {0, -1} for every alpha in Phi_J+.
bool is_J_adjusted(const RootSystem& rs, const Vec& mu, const Parabolic& J);
// Antidominant with <mu, alpha> <= -bound on Phi+ \ Phi_J+.
bool is_J_antidominant(const RootSystem& rs, const Vec& mu, const Parabolic& J, Int bound = 1);

// x beta > 0 for every beta in Phi^af+ with classical part in Phi_J.
bool in_affine_quotient(const AffineWeyl& A, const AffineElem& x, const Parabolic& J);
// The factor x1 of x = x1 x2 with x1 in (W^J)_af and x2 in (W_J)_af.
AffineElem project_piJ(const AffineWeyl& A, const AffineElem& x, const Parabolic& J);

// pi_J(t_mu) = z_mu t_{mu + phi_J(mu)}
struct TranslationProjection {
    Elem z;
    Vec phi;
};
TranslationProjection project_translation(const AffineWeyl& A, const Vec& mu, const Parabolic& J);
// Product of the component elements v_{j_m} read off the pairing pattern of a
// J-adjusted mu. Throws ConfigError if mu is not J-adjusted.
Elem z_mu_adjusted(const WeylGroup& W, const Vec& mu, const Parabolic& J);
// v_j for the sub-root system on `component`, j a cominuscule node of it.
Elem component_special_v(const WeylGroup& W, const std::vector<int>& component, int j);

// The image of mu -> z_mu, from the coweight box |<mu, alpha_i>| <= 2.
std::vector<Elem> sigma_J(const AffineWeyl& A, const Parabolic& J);
// A J-adjusted mu with z_mu = z and <mu, alpha> <= -bound on Phi+ \ Phi_J+.
// Throws ConfigError if z is not in Sigma_J.
Vec superantidominant_for(const AffineWeyl& A, const Parabolic& J, Elem z, Int bound);
// The bound used for "mu superantidominant": diameter of QB(W^J) plus 2.
Int superantidominance_bound(const QbgGraph& g);

// y = x r_root with y covered by x.
struct AffineCover {
    AffineElem x;
    AffineElem y;
    AffineRoot root;  // negative; the label is its negative
};

// Lift of an edge w -> target to x = w z t_mu, y = x r_root.
// Throws ConfigError unless mu is J-adjusted, strictly J-antidominant and z = z_mu.
AffineCover lift_edge(const AffineWeyl& A, const Parabolic& J, const Edge& e, Elem z, const Vec& mu);

// The QB(W^J) edge below a cover y < x in Omega_J. Throws ConfigError when the
// connecting root has classical part in Phi_J or x is not of the required form,
// and InvariantViolation when no such edge exists.
Edge project_cover(const AffineWeyl& A, const QbgGraph& g, const AffineElem& x, const AffineElem& y);

// Every y = x r_beta with l(y) = l(x) - 1, beta = alpha + n delta with alpha
// outside Phi_J and |n| <= window, and y = w' z_nu t_nu in (W^J)_af with nu
// strictly J-antidominant.
std::vector<AffineCover> cocovers(const AffineWeyl& A, const Parabolic& J, const AffineElem& x, Int window);

}  // namespace qbg
