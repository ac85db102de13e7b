#include "qbg/affine.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qbg/errors.hpp"

namespace qbg {

bool is_positive(const RootSystem& rs, const AffineRoot& b) { return b.k > 0 || (b.k == 0 && rs.is_positive(b.alpha)); }

AffineRoot negate(const RootSystem& rs, const AffineRoot& b) { return {rs.negate(b.alpha), -b.k}; }

std::string format_affine_root(const RootSystem& rs, const AffineRoot& b) {
    std::string s;
    if (b.k == 1) s = "d";
    else if (b.k == -1) s = "-d";
    else if (b.k != 0) s = std::to_string(b.k) + "d";
    std::string cls = format_combination(rs.root(b.alpha), "a");
    if (!s.empty() && cls[0] != '-') s += '+';
    return s + cls;
}

AffineElem AffineWeyl::simple(int i) const {
    const RootSystem& rs = roots();
    if (i == 0) return {W_->reflection(rs.theta()), neg(rs.coroot(rs.theta()))};
    return finite_elem(W_->simple(i - 1));
}

AffineElem AffineWeyl::mul(const AffineElem& a, const AffineElem& b) const {
    return {W_->mul(a.w, b.w), add(W_->act_coroot(W_->inverse(b.w), a.mu), b.mu)};
}

AffineElem AffineWeyl::inverse(const AffineElem& a) const {
    return {W_->inverse(a.w), neg(W_->act_coroot(a.w, a.mu))};
}

AffineRoot AffineWeyl::act(const AffineElem& x, const AffineRoot& b) const {
    return {W_->act(x.w, b.alpha), b.k - pair(x.mu, b.alpha)};
}

int AffineWeyl::length(const AffineElem& x) const {
    Int total = 0;
    for (int a = 0; a < roots().num_positive(); ++a) {
        Int chi = roots().is_positive(W_->act(x.w, a)) ? 0 : 1;
        Int v = chi + pair(x.mu, a);
        total += v < 0 ? -v : v;
    }
    return static_cast<int>(total);
}

AffineElem AffineWeyl::reflection(const AffineRoot& b) const {
    return {W_->reflection(b.alpha), scale(b.k, roots().coroot(b.alpha))};
}

std::optional<AffineRoot> AffineWeyl::reflection_root(const AffineElem& x) const {
    int beta = W_->reflection_root(x.w);
    if (beta < 0) return std::nullopt;
    const Vec& c = roots().coroot(beta);
    int i = 0;
    while (c[i] == 0) ++i;
    if (x.mu[i] % c[i] != 0) return std::nullopt;
    Int n = x.mu[i] / c[i];
    if (scale(n, c) != x.mu) return std::nullopt;
    AffineRoot r{beta, n};
    return is_positive(roots(), r) ? r : negate(roots(), r);
}

std::string AffineWeyl::render(const AffineElem& x) const {
    std::ostringstream out;
    out << W_->word_string(x.w) << " t(";
    for (std::size_t i = 0; i < x.mu.size(); ++i) out << (i ? "," : "") << x.mu[i];
    out << ")";
    return out.str();
}

bool is_J_adjusted(const RootSystem& rs, const Vec& mu, const Parabolic& J) {
    for (int a = 0; a < rs.num_positive(); ++a) {
        if (!J.in_J[a]) continue;
        Int p = rs.pair(mu, rs.root(a));
        if (p != 0 && p != -1) return false;
    }
    return true;
}

bool is_J_antidominant(const RootSystem& rs, const Vec& mu, const Parabolic& J, Int bound) {
    for (int a = 0; a < rs.num_positive(); ++a) {
        Int p = rs.pair(mu, rs.root(a));
        if (p > 0) return false;
        if (!J.in_J[a] && p > -bound) return false;
    }
    return true;
}

bool in_affine_quotient(const AffineWeyl& A, const AffineElem& x, const Parabolic& J) {
    const RootSystem& rs = A.roots();
    for (int a = 0; a < rs.num_positive(); ++a) {
        if (!J.in_J[a]) continue;
        Int p = A.pair(x.mu, a);
        if (rs.is_positive(A.finite().act(x.w, a)) ? p != 0 : p != -1) return false;
    }
    return true;
}

AffineElem project_piJ(const AffineWeyl& A, const AffineElem& x, const Parabolic& J) {
    const RootSystem& rs = A.roots();
    // simple roots of (W_J)_af: alpha_j for j in J and delta - theta_m per component
    std::vector<AffineRoot> simple;
    for (int j : J.nodes) simple.push_back({rs.simple(j), 0});
    for (int t : J.component_theta) simple.push_back({rs.negate(t), 1});
    AffineElem cur = x;
    for (bool changed = true; changed;) {
        changed = false;
        for (const AffineRoot& s : simple) {
            if (!is_positive(rs, A.act(cur, s))) {
                cur = A.mul(cur, A.reflection(s));
                changed = true;
            }
        }
    }
    return cur;
}

TranslationProjection project_translation(const AffineWeyl& A, const Vec& mu, const Parabolic& J) {
    AffineElem p = project_piJ(A, A.translation(mu), J);
    return {p.w, sub(p.mu, mu)};
}

Elem component_special_v(const WeylGroup& W, const std::vector<int>& component, int j) {
    NodeSet mask = 0;
    for (int i : component) mask |= NodeSet{1} << i;
    Parabolic whole = make_parabolic(W.roots(), mask);
    Parabolic rest = make_parabolic(W.roots(), mask & ~(NodeSet{1} << j));
    return W.mul(W.longest(whole), W.inverse(W.longest(rest)));
}

Elem z_mu_adjusted(const WeylGroup& W, const Vec& mu, const Parabolic& J) {
    const RootSystem& rs = W.roots();
    if (!is_J_adjusted(rs, mu, J)) throw ConfigError("coweight " + format_vec(mu) + " is not J-adjusted");
    Vec p = rs.pairings(mu);
    Elem z = W.identity();
    for (const auto& comp : J.components) {
        for (int j : comp)
            if (p[j] != 0) {
                z = W.mul(z, component_special_v(W, comp, j));
                break;
            }
    }
    return z;
}

std::vector<Elem> sigma_J(const AffineWeyl& A, const Parabolic& J) {
    const int n = A.roots().rank();
    std::set<Elem> found;
    Vec p(n, -2);
    while (true) {
        if (auto mu = A.roots().coroot_from_pairings(p)) found.insert(project_translation(A, *mu, J).z);
        int i = 0;
        while (i < n && p[i] == 2) p[i++] = -2;
        if (i == n) break;
        ++p[i];
    }
    return {found.begin(), found.end()};
}

Vec superantidominant_for(const AffineWeyl& A, const Parabolic& J, Elem z, Int bound) {
    const RootSystem& rs = A.roots();
    const int n = rs.rank();
    std::optional<Vec> base;
    Vec p(n, -2);
    while (!base) {
        if (auto mu = rs.coroot_from_pairings(p)) {
            TranslationProjection t = project_translation(A, *mu, J);
            if (t.z == z) base = add(*mu, t.phi);
        }
        int i = 0;
        while (i < n && p[i] == 2) p[i++] = -2;
        if (i == n) break;
        ++p[i];
    }
    if (!base) throw ConfigError("element is not in Sigma_J");
    // W_J-invariant step: -c * sum of omega_i^vee over i outside J
    Vec shift(n, 0);
    for (int i = 0; i < n; ++i)
        if (!J.contains(i)) shift[i] = -rs.coweight_index();
    auto eta = rs.coroot_from_pairings(shift);
    if (!eta) throw InvariantViolation("coweight index does not clear denominators");
    Vec mu = *base;
    while (!is_J_antidominant(rs, mu, J, bound)) mu = add(mu, *eta);
    return mu;
}

Int superantidominance_bound(const QbgGraph& g) { return all_pairs_distances(g).diameter() + 2; }

AffineCover lift_edge(const AffineWeyl& A, const Parabolic& J, const Edge& e, Elem z, const Vec& mu) {
    const RootSystem& rs = A.roots();
    const WeylGroup& W = A.finite();
    if (!is_J_adjusted(rs, mu, J)) throw ConfigError("lift: mu is not J-adjusted");
    if (!is_J_antidominant(rs, mu, J)) throw ConfigError("lift: mu is not strictly J-antidominant");
    if (project_translation(A, mu, J).z != z) throw ConfigError("lift: z differs from z_mu");
    Int chi = e.kind == EdgeKind::Quantum ? 1 : 0;
    int beta = W.act(W.inverse(z), e.label);
    AffineElem x{W.mul(e.src, z), mu};
    AffineRoot root{beta, chi + A.pair(mu, beta)};
    return {x, A.mul(x, A.reflection(root)), root};
}

Edge project_cover(const AffineWeyl& A, const QbgGraph& g, const AffineElem& x, const AffineElem& y) {
    const RootSystem& rs = A.roots();
    const WeylGroup& W = A.finite();
    const Parabolic& J = g.parabolic();
    if (!in_affine_quotient(A, x, J)) throw ConfigError("project: x is not in (W^J)_af");
    auto [w, z] = W.decompose(x.w, J);
    auto refl = A.reflection_root(A.mul(A.inverse(x), y));
    if (!refl) throw ConfigError("project: x^{-1} y is not a reflection");
    int beta = refl->alpha;
    Int n = refl->k;
    int alpha = W.act(z, beta);
    if (!rs.is_positive(alpha)) {
        beta = rs.negate(beta);
        n = -n;
        alpha = rs.negate(alpha);
    }
    if (J.in_J[alpha]) throw ConfigError("project: connecting root has classical part in Phi_J");
    Int chi = n - A.pair(x.mu, beta);
    if (chi != 0 && chi != 1) throw InvariantViolation("project: chi = " + std::to_string(chi));
    auto e = g.find_edge(w, alpha);
    EdgeKind kind = chi ? EdgeKind::Quantum : EdgeKind::Bruhat;
    if (!e || e->kind != kind || e->dst != W.floor(y.w, J))
        throw InvariantViolation("project: no " + std::string(to_string(kind)) + " edge out of " + W.render(w) +
                                 " labeled " + format_combination(rs.root(alpha), "a"));
    return *e;
}

std::vector<AffineCover> cocovers(const AffineWeyl& A, const Parabolic& J, const AffineElem& x, Int window) {
    const RootSystem& rs = A.roots();
    const int lx = A.length(x);
    std::vector<AffineCover> out;
    for (int b = 0; b < rs.num_positive(); ++b) {
        if (J.in_J[b]) continue;
        for (Int n = -window; n <= window; ++n) {
            AffineRoot root{b, n};
            AffineElem y = A.mul(x, A.reflection(root));
            if (A.length(y) != lx - 1) continue;
            if (!in_affine_quotient(A, y, J) || !is_J_antidominant(rs, y.mu, J)) continue;
            out.push_back({x, y, is_positive(rs, root) ? negate(rs, root) : root});
        }
    }
    return out;
}

}  // namespace qbg
