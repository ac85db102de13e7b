#include "qbg/verify.hpp"

#include <algorithm>
#include <functional>
#include <cctype>
#include <map>
#include <sstream>

#include "qbg/errors.hpp"
#include "qbg/level_zero.hpp"
#include "qbg/tilted.hpp"

namespace qbg {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"quantum-roots", "special-nodes", "duality",   "lift",        "diamond",
                                                "level-zero",    "tilted",        "postnikov", "connectivity"};
    return names;
}

std::string suite_header(const std::string& suite) {
    static const std::map<std::string, std::string> headers{
        {"quantum-roots", "quantum roots: l(r_alpha) = <alpha^vee, 2rho> - 1 against the root-shape characterization"},
        {"special-nodes", "special nodes: l(v_i) = <omega_i^vee, 2rho>"},
        {"duality", "duality antiautomorphism of QB(W^J): edges map to edges, involutive"},
        {"lift", "lift of QB(W^J) edges to affine Bruhat covers and projection back; cocovers match out-degree"},
        {"diamond", "diamond completions on QB(W^J), left and right, weights congruent mod Q_J^vee"},
        {"level-zero", "level-zero weight poset: Hasse covers equal the covers predicted by QB(W^J)"},
        {"tilted", "tilted Bruhat order: unique coset minimum, equal to the distance minimizer"},
        {"postnikov", "path weights: any path weighs at least a shortest one mod Q_J^vee, shortest paths agree"},
        {"connectivity", "left multiplication by simple and theta reflections connects QB(W^J)"}};
    auto it = headers.find(suite);
    if (it == headers.end()) throw ConfigError("unknown suite '" + suite + "'");
    return it->second;
}

namespace {

struct Tally {
    SuiteResult r;

    Tally(std::string suite, std::string system, std::string parabolic) {
        r.suite = std::move(suite);
        r.system = std::move(system);
        r.parabolic = std::move(parabolic);
    }

    void check(bool ok, const std::function<std::string()>& what) {
        ++r.checked;
        if (!ok && r.failures++ == 0) r.first_failure = what();
    }
    void fail(const std::string& what) {
        if (r.failures++ == 0) r.first_failure = what;
    }
};

std::vector<NodeSet> masks_for(int rank, const SuiteOptions& opts, bool proper) {
    if (opts.parabolic) return {*opts.parabolic};
    std::vector<NodeSet> out;
    const NodeSet full = (NodeSet{1} << rank) - 1;
    for (NodeSet m = 0; m <= full; ++m)
        if (!proper || m != full) out.push_back(m);
    return out;
}

SuiteResult from_sweep(const std::string& suite, const std::string& system, const std::string& J, const SweepReport& s) {
    return {suite, system, J, s.checked, s.failures, s.first_failure};
}

std::vector<SuiteResult> quantum_roots(const RootSystem& rs) {
    Tally t{"quantum-roots", rs.name(), "-"};
    for (int a = 0; a < rs.num_positive(); ++a) {
        int len = 0;
        for (int b = 0; b < rs.num_positive(); ++b)
            if (!rs.is_positive(rs.index_of(rs.reflect(rs.root(a), rs.root(b))))) ++len;
        const Int bound = rs.pair(rs.coroot(a), rs.two_rho()) - 1;
        t.check(len <= bound && (len == bound) == rs.is_quantum_root(a),
                [&] { return "root " + format_vec(rs.root(a)) + " length " + std::to_string(len); });
    }
    return {t.r};
}

std::vector<SuiteResult> special_nodes(const WeylGroup& W) {
    const RootSystem& rs = W.roots();
    Tally t{"special-nodes", rs.name(), "-"};
    for (int i : rs.special_nodes())
        t.check(W.length(W.special_v(i)) == rs.two_rho()[i], [&] { return "node " + std::to_string(i + 1); });
    return {t.r};
}

std::vector<SuiteResult> per_parabolic(const WeylGroup& W, const std::string& suite, const SuiteOptions& opts, bool proper,
                                       const std::function<void(const QbgGraph&, Tally&)>& body) {
    std::vector<SuiteResult> out;
    for (NodeSet m : masks_for(W.rank(), opts, proper)) {
        QbgGraph g = build_qbg(W, make_parabolic(W.roots(), m));
        Tally t{suite, W.roots().name(), format_nodes(m)};
        try {
            body(g, t);
        } catch (const InvariantViolation& e) {
            t.fail(e.what());
        }
        out.push_back(t.r);
    }
    return out;
}

void duality(const QbgGraph& g, Tally& t) {
    const WeylGroup& W = g.group();
    const Parabolic& J = g.parabolic();
    for (const Edge& e : g.edges()) {
        Edge d = dual_edge(W, J, e);
        auto found = g.find_edge(d.src, d.label);
        t.check(found && *found == d && dual_edge(W, J, d) == e,
                [&] { return "edge " + W.render(e.src) + " -> " + W.render(e.dst); });
    }
}

void lift(const QbgGraph& g, Tally& t) {
    const WeylGroup& W = g.group();
    const RootSystem& rs = W.roots();
    const Parabolic& J = g.parabolic();
    AffineWeyl A(W);
    const Int bound = superantidominance_bound(g);
    for (Elem z : sigma_J(A, J)) {
        Vec mu = superantidominant_for(A, J, z, bound);
        Int window = 2;
        for (int a = 0; a < rs.num_positive(); ++a) window = std::max(window, 2 - A.pair(mu, a));
        for (const Edge& e : g.edges()) {
            AffineCover cv = lift_edge(A, J, e, z, mu);
            bool ok = A.length(cv.y) == A.length(cv.x) - 1 && in_affine_quotient(A, cv.x, J) &&
                      in_affine_quotient(A, cv.y, J) && project_cover(A, g, cv.x, cv.y) == e;
            t.check(ok, [&] { return "edge " + W.render(e.src) + " -> " + W.render(e.dst) + " mu=" + format_vec(mu); });
        }
        for (Elem w : g.vertices()) {
            AffineElem x{W.mul(w, z), mu};
            auto covers = cocovers(A, J, x, window);
            bool ok = covers.size() == g.out(w).size();
            for (const AffineCover& cv : covers) ok = ok && project_cover(A, g, cv.x, cv.y).src == w;
            t.check(ok, [&] { return "cocovers of " + A.render(x); });
        }
    }
}

void diamonds(const QbgGraph& g, Tally& t) {
    const WeylGroup& W = g.group();
    for (DiamondSide side : {DiamondSide::Left, DiamondSide::Right})
        for (const Diamond& d : all_diamonds(g, side)) {
            DiamondCheck c = check_diamond(g, d);
            t.check(c.ok(), [&] {
                return std::string(side == DiamondSide::Left ? "left " : "right ") + to_string(d.family) +
                       " at " + W.render(d.w) + " gamma=" + format_vec(W.roots().root(d.gamma));
            });
        }
}

std::vector<SuiteResult> level_zero(const WeylGroup& W, const SuiteOptions& opts) {
    const RootSystem& rs = W.roots();
    std::vector<Vec> lambdas;
    if (opts.lambda) {
        lambdas.push_back(*opts.lambda);
    } else {
        for (int i = 0; i < rs.rank(); ++i) {
            Vec l(rs.rank(), 0);
            l[i] = 1;
            lambdas.push_back(l);
        }
        lambdas.push_back(Vec(rs.rank(), 1));
    }
    std::vector<SuiteResult> out;
    for (const Vec& lam : lambdas) {
        LevelZeroContext ctx(W, lam);
        QbgGraph g = build_qbg(W, ctx.parabolic());
        LevelZeroSlice s = LevelZeroSlice::build(ctx, opts.window);
        Tally t{"level-zero", rs.name(), "lambda=" + format_vec(lam)};
        try {
            for (const LevelZeroWeight& mu : s.elements()) {
                auto brute = s.covers(mu);
                auto pred = theorem_covers(ctx, g, mu);
                bool ok = brute.size() == pred.size();
                for (std::size_t i = 0; ok && i < brute.size(); ++i) {
                    ok = brute[i].target == pred[i].target && brute[i].label == pred[i].label;
                    cover_to_edge(ctx, g, mu, brute[i]);
                }
                t.check(ok, [&] { return "covers of " + ctx.render(mu); });
            }
        } catch (const InvariantViolation& e) {
            t.fail(e.what());
        }
        out.push_back(t.r);
    }
    return out;
}

}  // namespace

std::vector<SuiteResult> run_suite(const std::string& suite, char type, int rank, const SuiteOptions& opts) {
    suite_header(suite);
    RootSystem rs = RootSystem::build(type, rank);
    if (opts.parabolic && (*opts.parabolic >> rank) != 0) throw ConfigError("parabolic node out of range");
    if (suite == "quantum-roots") return quantum_roots(rs);
    WeylGroup W(rs);
    if (suite == "special-nodes") return special_nodes(W);
    if (suite == "duality") return per_parabolic(W, suite, opts, false, duality);
    if (suite == "lift") {
        if (opts.parabolic && *opts.parabolic == (NodeSet{1} << rank) - 1) throw ConfigError("lift needs J != I");
        return per_parabolic(W, suite, opts, true, lift);
    }
    if (suite == "diamond") return per_parabolic(W, suite, opts, false, diamonds);
    if (suite == "level-zero") return level_zero(W, opts);
    if (suite == "tilted") return {from_sweep(suite, rs.name(), "-", tilted_sweep(W))};
    if (suite == "postnikov")
        return per_parabolic(W, suite, opts, false, [](const QbgGraph& g, Tally& t) {
            SweepReport s = postnikov_sweep(g);
            t.r.checked += s.checked;
            t.r.failures += s.failures;
            t.r.first_failure = s.first_failure;
        });
    return per_parabolic(W, suite, opts, false, [](const QbgGraph& g, Tally& t) {
        t.check(left_steps_strongly_connected(g.group(), g.parabolic()), [] { return std::string("not connected"); });
    });
}

std::vector<TypeSpec> parse_types(const std::string& text) {
    auto one = [](const std::string& s) -> TypeSpec {
        if (s.size() < 2 || !std::isupper(static_cast<unsigned char>(s[0])))
            throw ConfigError("bad Cartan type '" + s + "'");
        std::size_t used = 0;
        int r = 0;
        try {
            r = std::stoi(s.substr(1), &used);
        } catch (const std::exception&) {
            throw ConfigError("bad Cartan type '" + s + "'");
        }
        if (used != s.size() - 1) throw ConfigError("bad Cartan type '" + s + "'");
        return {s[0], r};
    };
    std::vector<TypeSpec> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(one(item));
            continue;
        }
        TypeSpec lo = one(item.substr(0, dots)), hi = one(item.substr(dots + 2));
        if (lo.type != hi.type || lo.rank > hi.rank) throw ConfigError("bad type range '" + item + "'");
        for (int r = lo.rank; r <= hi.rank; ++r) out.push_back({lo.type, r});
    }
    if (out.empty()) throw ConfigError("no Cartan types given");
    return out;
}

}  // namespace qbg
