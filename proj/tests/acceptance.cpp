// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <omp.h>

#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include "qbg/diamond.hpp"
#include "qbg/errors.hpp"
#include "qbg/export.hpp"
#include "qbg/tilted.hpp"
#include "qbg/verify.hpp"

using namespace qbg;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
        if (!cond) ok = false;
    }
};

const std::vector<TypeSpec> kAllTypes = parse_types("A1..A4,B2..B4,C2..C4,D4,F4,G2");

std::vector<NodeSet> all_masks(int rank, bool proper) {
    std::vector<NodeSet> out;
    const NodeSet full = (NodeSet{1} << rank) - 1;
    for (NodeSet m = 0; m <= full; ++m)
        if (!proper || m != full) out.push_back(m);
    return out;
}

void absorb(Outcome& o, const std::vector<SuiteResult>& rs, std::size_t& checked) {
    for (const SuiteResult& r : rs) {
        checked += r.checked;
        o.require(r.ok(), r.suite + " " + r.system + " " + r.parabolic + ": " + r.first_failure);
    }
}

// Edge set of QB(W^J) from the length conditions alone.
std::set<std::tuple<Elem, Elem, int, bool>> oracle_edges(const WeylGroup& W, const Parabolic& J) {
    const RootSystem& rs = W.roots();
    Vec rhoJ(rs.rank(), 0);
    for (int a = 0; a < rs.num_positive(); ++a)
        if (!J.in_J[a]) rhoJ = add(rhoJ, rs.root(a));
    std::set<std::tuple<Elem, Elem, int, bool>> out;
    for (Elem w : W.quotient(J))
        for (int a = 0; a < rs.num_positive(); ++a) {
            if (J.in_J[a]) continue;
            Elem v = W.floor(W.mul(w, W.reflection(a)), J);
            if (W.length(v) == W.length(w) + 1) out.insert({w, v, a, false});
            if (W.length(v) == W.length(w) + 1 - rs.pair(rs.coroot(a), rhoJ)) out.insert({w, v, a, true});
        }
    return out;
}

std::set<std::tuple<Elem, Elem, int, bool>> edge_set(const QbgGraph& g) {
    std::set<std::tuple<Elem, Elem, int, bool>> out;
    for (const Edge& e : g.edges()) out.insert({e.src, e.dst, e.label, e.kind == EdgeKind::Quantum});
    return out;
}

Outcome quantum_roots() {
    Outcome o;
    std::size_t checked = 0;
    for (const TypeSpec& t : kAllTypes) {
        WeylGroup W(RootSystem::build(t.type, t.rank));
        const RootSystem& rs = W.roots();
        Vec two_rho(rs.rank(), 0);
        for (int a = 0; a < rs.num_positive(); ++a) two_rho = add(two_rho, rs.root(a));
        for (int a = 0; a < rs.num_positive(); ++a) {
            bool by_length = W.length(W.reflection(a)) == rs.pair(rs.coroot(a), two_rho) - 1;
            o.require(by_length == rs.is_quantum_root(a), rs.name() + " root " + format_vec(rs.root(a)));
            ++checked;
        }
        absorb(o, run_suite("quantum-roots", t.type, t.rank), checked);
    }
    o.detail = o.ok ? std::to_string(checked) + " roots" : o.detail;
    return o;
}

Outcome full_a2() {
    Outcome o;
    WeylGroup W(RootSystem::build('A', 2));
    const RootSystem& rs = W.roots();
    Parabolic none = make_parabolic(rs, 0);
    QbgGraph g = build_qbg(W, none);
    o.require(g.num_edges() == 15, "edge count " + std::to_string(g.num_edges()));
    o.require(g.num_quantum() == 7, "quantum count " + std::to_string(g.num_quantum()));
    auto top = g.find_edge(W.longest(), rs.theta());
    o.require(top && top->dst == W.identity() && top->kind == EdgeKind::Quantum, "w0 -> e labelled theta");
    o.require(edge_set(g) == oracle_edges(W, none), "edge list differs from the length oracle");
    if (o.ok) o.detail = "15 edges, 7 quantum";
    return o;
}

Outcome figure_a3() {
    Outcome o;
    WeylGroup W(RootSystem::build('A', 3));
    const RootSystem& rs = W.roots();
    Parabolic J = make_parabolic(rs, parse_nodes("1,3", 3));
    QbgGraph g = build_qbg(W, J);
    std::set<std::tuple<std::string, std::string, std::string, bool>> expect{
        {"1234", "1324", "a2", false},       {"1324", "1423", "a2+a3", false}, {"1324", "2314", "a1+a2", false},
        {"2314", "2413", "a2+a3", false},    {"1423", "2413", "a1+a2", false}, {"2413", "1234", "a2", true},
        {"2413", "3412", "a1+a2+a3", false}, {"3412", "1324", "a2", true}};
    std::set<std::tuple<std::string, std::string, std::string, bool>> got;
    for (const Edge& e : g.edges())
        got.insert({W.render(e.src), W.render(e.dst), format_affine_root(rs, {e.label, 0}), e.kind == EdgeKind::Quantum});
    o.require(g.num_vertices() == 6, "vertex count");
    o.require(got == expect, "edge list differs from the pictured one");
    o.require(edge_set(g) == oracle_edges(W, J), "edge list differs from the length oracle");
    if (o.ok) o.detail = "8 edges, 2 quantum labelled a2";
    return o;
}

Outcome example_cycle() {
    Outcome o;
    WeylGroup W(RootSystem::build('A', 2));
    const RootSystem& rs = W.roots();
    AffineWeyl A(W);
    Parabolic J = make_parabolic(rs, parse_nodes("1", 2));
    QbgGraph g = build_qbg(W, J);
    std::set<std::tuple<std::string, std::string, std::string, bool>> cycle;
    for (const Edge& e : g.edges())
        cycle.insert({W.render(e.src), W.render(e.dst), format_affine_root(rs, {e.label, 0}), e.kind == EdgeKind::Quantum});
    o.require(cycle == std::set<std::tuple<std::string, std::string, std::string, bool>>{{"123", "132", "a2", false},
                                                                                         {"132", "231", "a1+a2", false},
                                                                                         {"231", "123", "a2", true}},
              "not the 3-cycle");
    Vec mu = *rs.coroot_from_pairings(Vec{0, -6});  // -6 omega_2^vee
    std::vector<AffineElem> chain{A.translation(mu)};
    for (int i : {2, 1, 0}) chain.push_back(A.mul(A.simple(i), chain.back()));
    const std::vector<std::string> labels{"6d-a2", "6d-a1-a2", "5d-a2"};
    LiftedGraph l = lift_graph(A, g, W.identity(), mu);
    for (std::size_t k = 0; k < 3; ++k) {
        const AffineElem &x = chain[k], &y = chain[k + 1];
        o.require(A.length(y) == A.length(x) - 1, "chain step " + std::to_string(k) + " is not a cover");
        auto beta = A.reflection_root(A.mul(A.inverse(x), y));
        o.require(beta && format_affine_root(rs, *beta) == labels[k], "chain label " + std::to_string(k));
        bool lifted = false;
        for (const AffineCover& c : l.covers)
            lifted = lifted || (c.x == x && c.y == y && format_affine_root(rs, negate(rs, c.root)) == labels[k]);
        o.require(lifted, "lift misses chain step " + std::to_string(k));
    }
    if (o.ok) o.detail = "t > r2 t > r1r2 t > r0r1r2 t with 6d-a2, 6d-a1-a2, 5d-a2";
    return o;
}

Outcome lift_round_trip() {
    Outcome o;
    std::size_t checked = 0;
    for (const TypeSpec& t : parse_types("A2,A3,B2,C2,G2")) absorb(o, run_suite("lift", t.type, t.rank), checked);
    o.require(checked > 0, "nothing checked");
    if (o.ok) o.detail = std::to_string(checked) + " edges and cocover sets";
    return o;
}

Outcome diamond_lemma() {
    Outcome o;
    std::size_t checked = 0;
    std::set<std::pair<DiamondSide, DiamondFamily>> seen;
    for (const TypeSpec& t : parse_types("A2,A3,B2,C2")) {
        absorb(o, run_suite("diamond", t.type, t.rank), checked);
        WeylGroup W(RootSystem::build(t.type, t.rank));
        for (NodeSet m : all_masks(t.rank, false)) {
            QbgGraph g = build_qbg(W, make_parabolic(W.roots(), m));
            for (DiamondSide side : {DiamondSide::Left, DiamondSide::Right})
                for (const Diamond& d : all_diamonds(g, side)) seen.insert({side, d.family});
        }
    }
    o.require(seen.size() == 12, "only " + std::to_string(seen.size()) + " of 12 side/family pairs occur");
    if (o.ok) o.detail = std::to_string(checked) + " diagrams, all six families on both sides";
    return o;
}

Outcome level_zero_covers() {
    Outcome o;
    std::size_t checked = 0;
    SuiteOptions opts;
    opts.window = 3;
    for (const Vec& lam : {Vec{2, 1}, Vec{1, 0}, Vec{1, 1}}) {
        opts.lambda = lam;
        absorb(o, run_suite("level-zero", 'A', 2, opts), checked);
    }
    for (const Vec& lam : {Vec{1, 0}, Vec{0, 1}}) {
        opts.lambda = lam;
        absorb(o, run_suite("level-zero", 'C', 2, opts), checked);
    }
    WeylGroup W(RootSystem::build('A', 2));
    LevelZeroContext ctx(W, Vec{2, 1});
    LevelZeroSlice s = LevelZeroSlice::build(ctx, 1);
    auto elems = s.elements();
    o.require(elems.size() == 18, "slice has " + std::to_string(elems.size()) + " elements");
    // classical parts (Λ1, Λ2 coefficients) of the pictured orbit
    std::set<std::pair<Int, Int>> orbit{{2, 1}, {3, -1}, {-3, 2}, {1, -3}, {-2, 3}, {-1, -2}};
    std::set<std::pair<Int, Int>> seen;
    for (const auto& mu : elems) {
        Vec c = ctx.classical(mu);
        seen.insert({c[0], c[1]});
        o.require(mu.n >= -1 && mu.n <= 1, "element outside |n| <= 1");
    }
    o.require(seen == orbit, "classical parts differ from the pictured orbit");
    if (o.ok) o.detail = std::to_string(checked) + " elements, A2 2w1+w2 slice has 18";
    return o;
}

Outcome tilted_minima() {
    Outcome o;
    std::size_t checked = 0;
    for (const TypeSpec& t : parse_types("A2,A3,B2")) {
        auto start = std::chrono::steady_clock::now();
        SweepReport r = tilted_sweep(WeylGroup(RootSystem::build(t.type, t.rank)));
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        checked += r.checked;
        o.require(r.ok(), t.type + std::to_string(t.rank) + ": " + r.first_failure);
        o.require(secs < 120, "sweep too slow");
    }
    if (o.ok) o.detail = std::to_string(checked) + " (u, z, J) triples";
    return o;
}

Outcome path_weights() {
    Outcome o;
    std::size_t checked = 0;
    auto sweep = [&](char type, int rank, std::vector<NodeSet> masks) {
        WeylGroup W(RootSystem::build(type, rank));
        for (NodeSet m : masks) {
            SweepReport r = postnikov_sweep(build_qbg(W, make_parabolic(W.roots(), m)));
            checked += r.checked;
            o.require(r.ok(), W.roots().name() + " " + format_nodes(m) + ": " + r.first_failure);
        }
    };
    sweep('A', 2, all_masks(2, false));
    sweep('A', 3, {0, parse_nodes("1", 3), parse_nodes("1,3", 3)});
    sweep('B', 2, all_masks(2, false));
    if (o.ok) o.detail = std::to_string(checked) + " path states";
    return o;
}

Outcome connectivity() {
    Outcome o;
    std::size_t checked = 0;
    for (const TypeSpec& t : kAllTypes) {
        if (t.rank > 4) continue;
        WeylGroup W(RootSystem::build(t.type, t.rank));
        for (NodeSet m : all_masks(t.rank, false)) {
            o.require(left_steps_strongly_connected(W, make_parabolic(W.roots(), m)),
                      W.roots().name() + " " + format_nodes(m));
            ++checked;
        }
    }
    WeylGroup A2(RootSystem::build('A', 2));
    o.require(quantum_length(A2, make_parabolic(A2.roots(), 0), A2.longest()) == 1, "ql(w0) != 1 in A2");
    if (o.ok) o.detail = std::to_string(checked) + " (type, J), ql(w0) = 1";
    return o;
}

Outcome special_nodes() {
    Outcome o;
    std::size_t checked = 0;
    for (const TypeSpec& t : kAllTypes) {
        WeylGroup W(RootSystem::build(t.type, t.rank));
        const RootSystem& rs = W.roots();
        Vec two_rho(rs.rank(), 0);
        for (int a = 0; a < rs.num_positive(); ++a) two_rho = add(two_rho, rs.root(a));
        for (int i : rs.special_nodes()) {
            o.require(W.length(W.special_v(i)) == two_rho[i], rs.name() + " node " + std::to_string(i + 1));
            ++checked;
        }
    }
    if (o.ok) o.detail = std::to_string(checked) + " special nodes";
    return o;
}

std::string artifacts() {
    std::ostringstream os;
    for (const TypeSpec& t : parse_types("A2,A3,B2,G2")) {
        WeylGroup W(RootSystem::build(t.type, t.rank));
        AffineWeyl A(W);
        for (NodeSet m : all_masks(t.rank, false)) {
            QbgGraph g = build_qbg(W, make_parabolic(W.roots(), m));
            os << graph_to_dot(g) << graph_to_json(g);
            if (m + 1 < (NodeSet{1} << t.rank)) {
                Vec mu = superantidominant_for(A, g.parabolic(), W.identity(), superantidominance_bound(g));
                LiftedGraph l = lift_graph(A, g, W.identity(), mu);
                os << lift_to_dot(A, l) << lift_to_json(A, l);
            }
        }
    }
    WeylGroup W(RootSystem::build('A', 2));
    LevelZeroContext ctx(W, Vec{2, 1});
    LevelZeroSlice s = LevelZeroSlice::build(ctx, 2);
    os << slice_to_dot(s) << slice_to_json(s);
    return os.str();
}

Outcome determinism() {
    Outcome o;
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const std::string ref = artifacts();
    for (int threads : {1, 2, 3, 8}) {
        omp_set_num_threads(threads);
        o.require(artifacts() == ref, "output differs with " + std::to_string(threads) + " threads");
    }
    omp_set_num_threads(saved);
    if (o.ok) o.detail = std::to_string(ref.size()) + " bytes identical over 5 runs, 1-8 threads";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"quantum-root characterization", quantum_roots},
        {"QB(W) for A2", full_a2},
        {"QB(W^J) for A3, J={1,3}", figure_a3},
        {"A2 J={1} cycle and its affine chain", example_cycle},
        {"lift/project round trip", lift_round_trip},
        {"parabolic diamond diagrams", diamond_lemma},
        {"level-zero covers from QB(W^J)", level_zero_covers},
        {"tilted coset minima", tilted_minima},
        {"path weights against shortest paths", path_weights},
        {"left-step connectivity", connectivity},
        {"lengths of v_i at special nodes", special_nodes},
        {"determinism", determinism}};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << o.detail
                  << ", " << static_cast<int>(secs * 1000) << " ms)" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
