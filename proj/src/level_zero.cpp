#include "qbg/level_zero.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "qbg/errors.hpp"

namespace qbg {

LevelZeroContext::LevelZeroContext(const WeylGroup& W, Vec lambda, bool negated)
    : W_(&W), lambda_(std::move(lambda)), negated_(negated) {
    const RootSystem& rs = W.roots();
    if (static_cast<int>(lambda_.size()) != rs.rank())
        throw ConfigError("lambda needs " + std::to_string(rs.rank()) + " coordinates");
    NodeSet mask = 0;
    for (int i = 0; i < rs.rank(); ++i) {
        if (lambda_[i] < 0) throw ConfigError("lambda must be dominant");
        if (lambda_[i] == 0) mask |= NodeSet{1} << i;
    }
    if (mask + 1 == (NodeSet{1} << rs.rank())) throw ConfigError("lambda = 0 has a trivial orbit");
    J_ = make_parabolic(rs, mask);
    d_ = 0;
    for (int i = 0; i < rs.rank(); ++i) d_ = std::gcd(d_, lambda_[i]);
    for (int a = 0; a < rs.num_positive(); ++a) max_pair_ = std::max(max_pair_, dot(rs.coroot(a), lambda_));
    comarks_ = rs.coroot(rs.theta());
}

Vec LevelZeroContext::classical(const LevelZeroWeight& mu) const {
    Vec v = W_->act_weight(mu.w, lambda_);
    return negated_ ? neg(v) : v;
}

Int LevelZeroContext::pair(const AffineRoot& beta, const LevelZeroWeight& mu) const {
    return dot(W_->roots().coroot(beta.alpha), classical(mu));
}

LevelZeroWeight LevelZeroContext::reflect(const AffineRoot& beta, const LevelZeroWeight& mu) const {
    Int p = pair(beta, mu);
    return {W_->floor(W_->mul(W_->reflection(beta.alpha), mu.w), J_), mu.n - beta.k * p};
}

LevelZeroWeight LevelZeroContext::from_classical(const Vec& v, Int n) const {
    for (Elem w : W_->quotient(J_)) {
        LevelZeroWeight mu{w, n};
        if (classical(mu) == v) return mu;
    }
    throw ConfigError("weight " + format_vec(v) + " is not in the orbit");
}

std::string LevelZeroContext::render(const LevelZeroWeight& mu) const {
    return "(" + W_->render(mu.w) + ", " + std::to_string(mu.n) + ")";
}

std::string LevelZeroContext::render_affine(const LevelZeroWeight& mu) const {
    Vec c = classical(mu);
    Int c0 = -dot(comarks_, c);
    std::vector<std::pair<Int, std::string>> terms{{c0, "Λ0"}};
    for (std::size_t i = 0; i < c.size(); ++i) terms.push_back({c[i], "Λ" + std::to_string(i + 1)});
    terms.push_back({mu.n, "δ"});
    std::ostringstream out;
    bool first = true;
    for (auto& [k, sym] : terms) {
        if (k == 0) continue;
        if (first) out << (k < 0 ? "-" : "");
        else out << (k < 0 ? " - " : " + ");
        Int a = k < 0 ? -k : k;
        if (a != 1) out << a;
        out << sym;
        first = false;
    }
    return first ? "0" : out.str();
}

LevelZeroSlice LevelZeroSlice::build(const LevelZeroContext& ctx, Int window, Int margin) {
    return make(ctx, window, margin, true);
}

LevelZeroSlice LevelZeroSlice::build_serial(const LevelZeroContext& ctx, Int window, Int margin) {
    return make(ctx, window, margin, false);
}

LevelZeroSlice LevelZeroSlice::make(const LevelZeroContext& ctx, Int window, Int margin, bool parallel) {
    if (window < 0) throw ConfigError("window must be nonnegative");
    const WeylGroup& W = ctx.group();
    const RootSystem& rs = W.roots();
    if (margin < 0) margin = rs.num_positive() * ctx.max_pairing();
    LevelZeroSlice s;
    s.ctx_ = &ctx;
    s.window_ = window;
    s.computed_ = window + margin;
    const Int d = ctx.step();
    const Int half = s.computed_ / d;
    s.levels_ = static_cast<std::size_t>(2 * half + 1);
    s.verts_ = W.quotient(ctx.parabolic());
    s.vindex_.assign(W.size(), -1);
    for (std::size_t i = 0; i < s.verts_.size(); ++i) s.vindex_[s.verts_[i]] = static_cast<int>(i);
    const std::size_t total = s.levels_ * s.verts_.size();
    s.words_ = (total + 63) / 64;
    s.succ_.assign(total, {});
    s.hasse_.assign(total, {});
    s.up_.assign(total * s.words_, 0);

    // the relation mu -> r_beta mu, restricted to the computed window
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::size_t i = 0; i < total; ++i) {
        LevelZeroWeight mu = s.at(i);
        Vec cl = ctx.classical(mu);
        auto& out = s.succ_[i];
        for (int a = 0; a < rs.num_roots(); ++a) {
            Int p = dot(rs.coroot(a), cl);
            if (p <= 0) continue;
            Elem w2 = W.floor(W.mul(W.reflection(a), mu.w), ctx.parabolic());
            for (Int k = rs.is_positive(a) ? 0 : 1; mu.n - k * p >= -s.computed_; ++k)
                out.push_back(s.idx({w2, mu.n - k * p}));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

    // up-sets: successors have smaller n, or equal n and larger length
    // (smaller for the dual orbit)
    std::map<std::pair<Int, int>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < total; ++i) {
        LevelZeroWeight mu = s.at(i);
        groups[{mu.n, ctx.negated() ? W.length(mu.w) : -W.length(mu.w)}].push_back(i);
    }
    for (auto& [key, members] : groups) {
#pragma omp parallel for schedule(static) if (parallel)
        for (std::size_t m = 0; m < members.size(); ++m) {
            std::size_t i = members[m];
            std::uint64_t* row = &s.up_[i * s.words_];
            row[i / 64] |= std::uint64_t{1} << (i % 64);
            for (std::size_t t : s.succ_[i]) {
                const std::uint64_t* other = &s.up_[t * s.words_];
                for (std::size_t k = 0; k < s.words_; ++k) row[k] |= other[k];
            }
        }
    }

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::size_t i = 0; i < total; ++i) {
        const auto& sc = s.succ_[i];
        for (std::size_t t : sc) {
            bool minimal = true;
            for (std::size_t u : sc)
                if (u != t && s.bit(u, t)) {
                    minimal = false;
                    break;
                }
            if (minimal) s.hasse_[i].push_back(t);
        }
    }
    return s;
}

std::size_t LevelZeroSlice::idx(const LevelZeroWeight& mu) const {
    Int level = mu.n / ctx_->step() + computed_ / ctx_->step();
    return static_cast<std::size_t>(level) * verts_.size() + static_cast<std::size_t>(vindex_[mu.w]);
}

LevelZeroWeight LevelZeroSlice::at(std::size_t i) const {
    const Int d = ctx_->step();
    Int level = static_cast<Int>(i / verts_.size());
    return {verts_[i % verts_.size()], (level - computed_ / d) * d};
}

bool LevelZeroSlice::in_computed(const LevelZeroWeight& mu) const {
    return mu.w < vindex_.size() && vindex_[mu.w] >= 0 && mu.n % ctx_->step() == 0 && mu.n >= -computed_ &&
           mu.n <= computed_;
}

bool LevelZeroSlice::in_window(const LevelZeroWeight& mu) const {
    return in_computed(mu) && mu.n >= -window_ && mu.n <= window_;
}

void LevelZeroSlice::require_reported(const LevelZeroWeight& mu) const {
    if (!in_window(mu))
        throw InconclusiveWindow(ctx_->render(mu) + " lies outside the certified window |n| <= " +
                                 std::to_string(window_));
}

std::vector<LevelZeroWeight> LevelZeroSlice::elements() const {
    std::vector<LevelZeroWeight> out;
    for (std::size_t i = 0; i < levels_ * verts_.size(); ++i)
        if (in_window(at(i))) out.push_back(at(i));
    return out;
}

bool LevelZeroSlice::leq(const LevelZeroWeight& mu, const LevelZeroWeight& nu) const {
    require_reported(mu);
    require_reported(nu);
    return bit(idx(mu), idx(nu));
}

std::vector<AffineRoot> LevelZeroSlice::relation_labels(const LevelZeroWeight& mu, const LevelZeroWeight& nu) const {
    const RootSystem& rs = ctx_->group().roots();
    std::vector<AffineRoot> out;
    for (int a = 0; a < rs.num_roots(); ++a) {
        Int p = ctx_->pair({a, 0}, mu);
        if (p <= 0) continue;
        Int diff = mu.n - nu.n;
        if (diff % p != 0) continue;
        AffineRoot beta{a, diff / p};
        if (!is_positive(rs, beta)) continue;
        if (ctx_->reflect(beta, mu) == nu) out.push_back(beta);
    }
    return out;
}

std::vector<PosetCover> LevelZeroSlice::covers(const LevelZeroWeight& mu) const {
    require_reported(mu);
    std::vector<PosetCover> out;
    for (std::size_t t : hasse_[idx(mu)]) {
        LevelZeroWeight nu = at(t);
        auto labels = relation_labels(mu, nu);
        if (labels.empty()) throw InvariantViolation("cover without a reflection label");
        out.push_back({nu, labels.front()});
    }
    std::sort(out.begin(), out.end(), [](const PosetCover& a, const PosetCover& b) { return a.target < b.target; });
    return out;
}

int LevelZeroSlice::dist(const LevelZeroWeight& mu, const LevelZeroWeight& nu) const {
    if (!leq(mu, nu)) throw ConfigError(ctx_->render(mu) + " is not below " + ctx_->render(nu));
    const std::size_t target = idx(nu);
    std::map<std::size_t, int> memo;
    auto longest = [&](auto&& self, std::size_t x) -> int {
        if (x == target) return 0;
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        int best = -1;
        for (std::size_t c : hasse_[x])
            if (bit(c, target)) best = std::max(best, 1 + self(self, c));
        memo[x] = best;
        return best;
    };
    return longest(longest, idx(mu));
}

std::vector<PosetCover> theorem_covers(const LevelZeroContext& ctx, const QbgGraph& g, const LevelZeroWeight& mu) {
    if (ctx.negated()) throw ConfigError("cover prediction needs a dominant lambda");
    const WeylGroup& W = ctx.group();
    const RootSystem& rs = W.roots();
    std::vector<PosetCover> out;
    for (const Edge& e : g.out(mu.w)) {
        int beta = W.act(mu.w, e.label);
        Int p = dot(rs.coroot(e.label), ctx.lambda());
        if (e.kind == EdgeKind::Bruhat) out.push_back({{e.dst, mu.n}, {beta, 0}});
        else out.push_back({{e.dst, mu.n - p}, {beta, 1}});
    }
    std::sort(out.begin(), out.end(), [](const PosetCover& a, const PosetCover& b) { return a.target < b.target; });
    return out;
}

Edge cover_to_edge(const LevelZeroContext& ctx, const QbgGraph& g, const LevelZeroWeight& mu, const PosetCover& c) {
    const WeylGroup& W = ctx.group();
    int gamma = W.act(W.inverse(mu.w), c.label.alpha);
    EdgeKind kind = c.label.k == 0 ? EdgeKind::Bruhat : EdgeKind::Quantum;
    bool shape = (c.label.k == 0 && W.roots().is_positive(c.label.alpha)) ||
                 (c.label.k == 1 && !W.roots().is_positive(c.label.alpha));
    auto e = shape && W.roots().is_positive(gamma) ? g.find_edge(mu.w, gamma) : std::nullopt;
    if (!e || e->kind != kind || e->dst != c.target.w)
        throw InvariantViolation("cover " + ctx.render(mu) + " < " + ctx.render(c.target) + " has no edge below it");
    return *e;
}

}  // namespace qbg
