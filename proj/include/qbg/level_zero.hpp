#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qbg/affine.hpp"

namespace qbg {

// w lambda + n delta with w in W^J (the sign flips lambda for the dual poset).
struct LevelZeroWeight {
    Elem w = 0;
    Int n = 0;

    auto operator<=>(const LevelZeroWeight&) const = default;
};

class LevelZeroContext {
public:
    // lambda dominant and nonzero, in fundamental-weight coordinates. With
    // negated = true the orbit is that of -lambda.
    LevelZeroContext(const WeylGroup& W, Vec lambda, bool negated = false);

    const WeylGroup& group() const { return *W_; }
    const Vec& lambda() const { return lambda_; }
    bool negated() const { return negated_; }
    const Parabolic& parabolic() const { return J_; }
    // gcd of <alpha_i^vee, lambda> over i outside J; every n is a multiple.
    Int step() const { return d_; }
    // max over positive alpha of <alpha^vee, lambda>
    Int max_pairing() const { return max_pair_; }

    // classical part in fundamental-weight coordinates
    Vec classical(const LevelZeroWeight& mu) const;
    // <beta^vee, mu> = <alpha^vee, cl mu> for beta = alpha + k delta
    Int pair(const AffineRoot& beta, const LevelZeroWeight& mu) const;
    LevelZeroWeight reflect(const AffineRoot& beta, const LevelZeroWeight& mu) const;
    LevelZeroWeight dual(const LevelZeroWeight& mu) const { return {mu.w, -mu.n}; }
    // The element whose classical part is v; throws ConfigError if v is not in W lambda.
    LevelZeroWeight from_classical(const Vec& v, Int n) const;

    // "(s1s2, -1)"
    std::string render(const LevelZeroWeight& mu) const;
    // affine fundamental weights: "2Λ0 + Λ1 - 3Λ2 + δ"
    std::string render_affine(const LevelZeroWeight& mu) const;

private:
    const WeylGroup* W_;
    Vec lambda_;
    bool negated_;
    Parabolic J_;
    Int d_ = 1;
    Int max_pair_ = 0;
    Vec comarks_;
};

struct PosetCover {
    LevelZeroWeight target;
    AffineRoot label;
};

// Finite slice of the orbit with |n| <= window, closed under the order on a
// larger computed window. Queries outside the reported window throw
// InconclusiveWindow.
class LevelZeroSlice {
public:
    // margin < 0 selects the default |Phi+| * max_pairing.
    static LevelZeroSlice build(const LevelZeroContext& ctx, Int window, Int margin = -1);
    static LevelZeroSlice build_serial(const LevelZeroContext& ctx, Int window, Int margin = -1);

    const LevelZeroContext& context() const { return *ctx_; }
    Int window() const { return window_; }
    Int computed_window() const { return computed_; }
    // Reported elements ordered by (n, w).
    std::vector<LevelZeroWeight> elements() const;
    bool in_window(const LevelZeroWeight& mu) const;

    bool leq(const LevelZeroWeight& mu, const LevelZeroWeight& nu) const;
    // Hasse covers above mu, ordered by target.
    std::vector<PosetCover> covers(const LevelZeroWeight& mu) const;
    // Every beta with nu = r_beta mu and <beta^vee, mu> > 0.
    std::vector<AffineRoot> relation_labels(const LevelZeroWeight& mu, const LevelZeroWeight& nu) const;
    // Longest chain length; throws ConfigError unless mu <= nu.
    int dist(const LevelZeroWeight& mu, const LevelZeroWeight& nu) const;

    // Bit rows of the closure, for comparing builds.
    const std::vector<std::uint64_t>& closure_bits() const { return up_; }

private:
    static LevelZeroSlice make(const LevelZeroContext& ctx, Int window, Int margin, bool parallel);
    std::size_t idx(const LevelZeroWeight& mu) const;
    bool in_computed(const LevelZeroWeight& mu) const;
    LevelZeroWeight at(std::size_t i) const;
    bool bit(std::size_t row, std::size_t col) const { return (up_[row * words_ + col / 64] >> (col % 64)) & 1u; }
    void require_reported(const LevelZeroWeight& mu) const;

    const LevelZeroContext* ctx_ = nullptr;
    Int window_ = 0;
    Int computed_ = 0;
    std::size_t levels_ = 0;
    std::size_t words_ = 0;
    std::vector<Elem> verts_;
    std::vector<int> vindex_;
    std::vector<std::vector<std::size_t>> succ_;
    std::vector<std::vector<std::size_t>> hasse_;
    std::vector<std::uint64_t> up_;
};

// Covers predicted from the out-edges of cl(mu) in QB(W^J): a Bruhat edge
// labeled gamma gives label w gamma, a quantum edge gives delta + w gamma.
std::vector<PosetCover> theorem_covers(const LevelZeroContext& ctx, const QbgGraph& g, const LevelZeroWeight& mu);

// The QB(W^J) edge a cover projects to, with its label; throws InvariantViolation
// if there is none.
Edge cover_to_edge(const LevelZeroContext& ctx, const QbgGraph& g, const LevelZeroWeight& mu, const PosetCover& c);

}  // namespace qbg
