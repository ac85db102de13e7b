#include "qbg/tilted.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "qbg/errors.hpp"

namespace qbg {

TiltedQuery::TiltedQuery(const QbgGraph& g) : g_(&g), d_(all_pairs_distances(g)) {}

TiltedQuery::TiltedQuery(const QbgGraph& g, DistanceTable d) : g_(&g), d_(std::move(d)) {
    if (d_.size() != g.num_vertices()) throw ConfigError("distance table does not match the graph");
}

int TiltedQuery::dist(Elem a, Elem b) const { return d_.at(g_->index(a), g_->index(b)); }

bool TiltedQuery::leq(Elem u, Elem w1, Elem w2) const { return dist(u, w2) == dist(u, w1) + dist(w1, w2); }

namespace {

std::vector<Elem> coset(const WeylGroup& W, Elem z, const Parabolic& J) {
    Elem f = W.floor(z, J);
    std::vector<Elem> out;
    for (Elem y : W.subgroup(J)) out.push_back(W.mul(f, y));
    return out;
}

}  // namespace

Elem TiltedQuery::coset_min(Elem u, Elem z, const Parabolic& J) const {
    if (g_->parabolic().mask != 0) throw ConfigError("coset minima need QB(W), not a parabolic graph");
    const WeylGroup& W = g_->group();
    int best = -1;
    Elem arg = 0;
    bool tie = false;
    for (Elem x : coset(W, z, J)) {
        int d = dist(u, x);
        if (best < 0 || d < best) {
            best = d;
            arg = x;
            tie = false;
        } else if (d == best) {
            tie = true;
        }
    }
    if (tie)
        throw InvariantViolation("two distance minimizers from " + W.render(u) + " in the coset of " + W.render(z));
    return arg;
}

std::vector<Elem> TiltedQuery::minimal_elements(Elem u, Elem z, const Parabolic& J) const {
    auto c = coset(g_->group(), z, J);
    std::vector<Elem> out;
    for (Elem x : c) {
        bool minimal = true;
        for (Elem y : c)
            if (y != x && leq(u, y, x)) minimal = false;
        if (minimal) out.push_back(x);
    }
    return out;
}

namespace {

Vec lambda_for(const RootSystem& rs, const Parabolic& J) {
    Vec lam(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i)
        if (!J.contains(i)) lam[i] = 1;
    return lam;
}

SweepReport run_tilted(const WeylGroup& W, bool parallel) {
    const RootSystem& rs = W.roots();
    QbgGraph g = parallel ? build_qbg(W, make_parabolic(rs, 0)) : build_qbg_serial(W, make_parabolic(rs, 0));
    TiltedQuery q(g, parallel ? all_pairs_distances(g) : all_pairs_distances_serial(g));
    const NodeSet full = (NodeSet{1} << rs.rank()) - 1;
    SweepReport total;
    for (NodeSet mask = 0; mask <= full; ++mask) {
        Parabolic J = make_parabolic(rs, mask);
        ReflectionOrdering ord = lambda_ordering(W, lambda_for(rs, J));
        auto reps = W.quotient(J);
        const auto& us = g.vertices();
        std::vector<SweepReport> per(us.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (std::size_t i = 0; i < us.size(); ++i) {
            const Elem u = us[i];
            SweepReport& r = per[i];
            for (Elem z : reps) {
                ++r.checked;
                std::string bad;
                try {
                    Elem x = q.coset_min(u, z, J);
                    auto mins = q.minimal_elements(u, z, J);
                    if (mins != std::vector<Elem>{x}) bad = "minimal elements differ from the distance minimizer";
                    for (Elem y : coset(W, z, J))
                        if (!q.leq(u, x, y)) bad = "minimum not below " + W.render(y);
                    if (u == W.identity() && x != z) bad = "u = e but the minimum is not the representative";
                    Path p = increasing_path(g, u, x, ord);
                    for (const Edge& e : p.edges)
                        if (J.in_J[e.label]) bad = "increasing path to the minimum has a label in Phi_J";
                } catch (const InvariantViolation& e) {
                    bad = e.what();
                }
                if (!bad.empty() && r.failures++ == 0) {
                    std::ostringstream os;
                    os << rs.name() << " J=" << format_nodes(mask) << " u=" << W.render(u) << " z=" << W.render(z)
                       << ": " << bad;
                    r.first_failure = os.str();
                }
            }
        }
        for (const auto& r : per) {
            total.checked += r.checked;
            if (r.failures && total.failures == 0) total.first_failure = r.first_failure;
            total.failures += r.failures;
        }
    }
    return total;
}

}  // namespace

SweepReport tilted_sweep(const WeylGroup& W) { return run_tilted(W, true); }
SweepReport tilted_sweep_serial(const WeylGroup& W) { return run_tilted(W, false); }

namespace {

// BFS over left-step edges; parent node per vertex index, -2 when unreached.
std::vector<int> left_step_bfs(const WeylGroup& W, const Parabolic& J, Elem from, std::vector<Elem>& parent,
                               const std::vector<Elem>& verts, const std::vector<int>& index) {
    std::vector<int> via(verts.size(), -2);
    parent.assign(verts.size(), 0);
    std::deque<Elem> queue{from};
    via[index[from]] = -3;
    while (!queue.empty()) {
        Elem x = queue.front();
        queue.pop_front();
        for (int node = kAffineNode; node < W.rank(); ++node) {
            LeftStep s = left_multiplication_step(W, J, x, node);
            if (s.kind != Trichotomy::Up) continue;
            int t = index[s.target];
            if (via[t] != -2) continue;
            via[t] = node;
            parent[t] = x;
            queue.push_back(s.target);
        }
    }
    return via;
}

}  // namespace

std::vector<int> quantum_length_word(const WeylGroup& W, const Parabolic& J, Elem u) {
    if (!W.in_quotient(u, J)) throw ConfigError(W.render(u) + " is not a coset representative");
    auto verts = W.quotient(J);
    std::vector<int> index(W.size(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    std::vector<Elem> parent;
    auto via = left_step_bfs(W, J, u, parent, verts, index);
    Elem e = W.identity();
    if (via[index[e]] == -2) throw InvariantViolation("identity unreachable by left steps from " + W.render(u));
    std::vector<int> word;
    for (Elem x = e; x != u; x = parent[index[x]]) word.push_back(via[index[x]]);
    std::reverse(word.begin(), word.end());
    return word;
}

int quantum_length(const WeylGroup& W, const Parabolic& J, Elem u) {
    return static_cast<int>(quantum_length_word(W, J, u).size());
}

bool left_steps_strongly_connected(const WeylGroup& W, const Parabolic& J) {
    auto verts = W.quotient(J);
    std::vector<int> index(W.size(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    std::vector<Elem> parent;
    for (Elem v : verts) {
        auto via = left_step_bfs(W, J, v, parent, verts, index);
        if (std::count(via.begin(), via.end(), -2) != 0) return false;
    }
    return true;
}

namespace {

Trichotomy sign_at(const WeylGroup& W, const Parabolic& J, Elem x, int node) {
    int r = left_step_root(W, x, node);
    if (J.in_J[r]) return Trichotomy::Fixed;
    return W.roots().is_positive(r) ? Trichotomy::Up : Trichotomy::Down;
}

std::vector<Elem> vertices_of(const Path& p) {
    std::vector<Elem> xs{p.start};
    for (const Edge& e : p.edges) xs.push_back(e.dst);
    return xs;
}

// w^{-1} alpha_j^vee for the affine node, zero otherwise
Vec affine_correction(const WeylGroup& W, Elem w, int node) {
    const RootSystem& rs = W.roots();
    if (node != kAffineNode) return Vec(rs.rank(), 0);
    return rs.coroot(left_step_root(W, w, node));
}

Edge shifted(const QbgGraph& g, DiamondSide side, const Edge& e, int node) {
    auto d = match_diamond(g, side, e.src, node, e.label);
    if (!d) throw InvariantViolation("no diamond over the edge " + g.group().render(e.src) + " -> " + g.group().render(e.dst));
    return side == DiamondSide::Right ? d->bottom_right : d->top_left;
}

// cases 1 and 3, which shorten the path
Path shorten_end(const QbgGraph& g, const Path& p, int node, const std::vector<Trichotomy>& s) {
    const WeylGroup& W = g.group();
    const Parabolic& J = g.parabolic();
    const std::size_t n = p.length();
    std::size_t k = n;
    while (s[k] == Trichotomy::Down) --k;
    Path out{p.start, {p.edges.begin(), p.edges.begin() + k}};
    Elem x = W.floor(left_multiplication_step(W, J, p.edges[k].dst, node).target, J);
    require(x == p.edges[k].src, "left step does not return to the previous vertex");
    for (std::size_t i = k + 1; i < n; ++i) out.edges.push_back(shifted(g, DiamondSide::Right, p.edges[i], node));
    return out;
}

Path shorten_start(const QbgGraph& g, const Path& p, int node, const std::vector<Trichotomy>& s) {
    const WeylGroup& W = g.group();
    const Parabolic& J = g.parabolic();
    std::size_t k = 0;
    while (s[k] == Trichotomy::Up) ++k;
    Path out{left_multiplication_step(W, J, p.start, node).target, {}};
    for (std::size_t i = 0; i + 1 < k; ++i) out.edges.push_back(shifted(g, DiamondSide::Left, p.edges[i], node));
    Elem x = left_multiplication_step(W, J, p.edges[k - 1].src, node).target;
    require(x == p.edges[k - 1].dst, "left step does not reach the next vertex");
    out.edges.insert(out.edges.end(), p.edges.begin() + k, p.edges.end());
    return out;
}

bool holds(int which, const std::vector<Trichotomy>& s) {
    auto any_not = [&](Trichotomy t) { return std::any_of(s.begin(), s.end(), [t](Trichotomy x) { return x != t; }); };
    switch (which) {
        case 1: return s.back() == Trichotomy::Down && any_not(Trichotomy::Down);
        case 2: return s.front() == Trichotomy::Down && s.back() == Trichotomy::Down;
        case 3: return s.front() == Trichotomy::Up && any_not(Trichotomy::Up);
        case 4: return s.front() == Trichotomy::Up && s.back() == Trichotomy::Up;
    }
    return false;
}

}  // namespace

std::vector<int> applicable_cases(const QbgGraph& g, const Path& p, int node) {
    std::vector<Trichotomy> s;
    for (Elem x : vertices_of(p)) s.push_back(sign_at(g.group(), g.parabolic(), x, node));
    std::vector<int> out;
    for (int c = 1; c <= 4; ++c)
        if (holds(c, s)) out.push_back(c);
    return out;
}

Transformed transform_path(const QbgGraph& g, const Path& p, int node, int which) {
    const WeylGroup& W = g.group();
    const Parabolic& J = g.parabolic();
    if (node < kAffineNode || node >= W.rank()) throw ConfigError("node out of range");
    if (!g.contains(p.start) || !is_path_in(g, p)) throw ConfigError("not a path of the graph");
    auto xs = vertices_of(p);
    std::vector<Trichotomy> s;
    for (Elem x : xs) s.push_back(sign_at(W, J, x, node));
    if (which < 1 || which > 4 || !holds(which, s))
        throw ConfigError("path surgery: hypotheses of case " + std::to_string(which) + " fail");

    const Elem w1 = xs.front(), w2 = xs.back();
    const Vec c1 = affine_correction(W, w1, node), c2 = affine_correction(W, w2, node);
    Transformed t;
    switch (which) {
        case 1:
            t.path = shorten_end(g, p, node, s);
            t.correction = c2;
            break;
        case 3:
            t.path = shorten_start(g, p, node, s);
            t.correction = scale(-1, c1);
            break;
        case 2: {
            bool all = std::all_of(s.begin(), s.end(), [](Trichotomy x) { return x == Trichotomy::Down; });
            LeftStep first = left_multiplication_step(W, J, w1, node);
            if (all) {
                t.path.start = first.target;
                for (const Edge& e : p.edges) t.path.edges.push_back(shifted(g, DiamondSide::Right, e, node));
            } else {
                Path tail = shorten_end(g, p, node, s);
                t.path.start = first.target;
                t.path.edges.push_back(*first.edge);
                t.path.edges.insert(t.path.edges.end(), tail.edges.begin(), tail.edges.end());
            }
            t.correction = add(scale(-1, c1), c2);
            break;
        }
        case 4: {
            bool all = std::all_of(s.begin(), s.end(), [](Trichotomy x) { return x == Trichotomy::Up; });
            if (all) {
                t.path.start = left_multiplication_step(W, J, w1, node).target;
                for (const Edge& e : p.edges) t.path.edges.push_back(shifted(g, DiamondSide::Left, e, node));
            } else {
                t.path = shorten_start(g, p, node, s);
                t.path.edges.push_back(*left_multiplication_step(W, J, w2, node).edge);
            }
            t.correction = add(scale(-1, c1), c2);
            break;
        }
    }
    t.correction = reduce_mod_J(t.correction, J);
    require(is_path_in(g, t.path), "path surgery produced a non-path");
    return t;
}

Vec postnikov_compare(const QbgGraph& g, const DistanceTable& d, const Path& p, const Path& q) {
    if (!is_path_in(g, p) || !is_path_in(g, q)) throw ConfigError("not a path of the graph");
    if (p.start != q.start || p.end() != q.end()) throw ConfigError("paths have different endpoints");
    if (static_cast<int>(p.length()) != d.at(g.index(p.start), g.index(p.end())))
        throw ConfigError("the reference path is not shortest");
    const RootSystem& rs = g.group().roots();
    return reduce_mod_J(sub(path_weight(rs, q), path_weight(rs, p)), g.parabolic());
}

namespace {

SweepReport run_postnikov(const QbgGraph& g, int extra, bool parallel) {
    const WeylGroup& W = g.group();
    const RootSystem& rs = W.roots();
    const Parabolic& J = g.parabolic();
    DistanceTable d = parallel ? all_pairs_distances(g) : all_pairs_distances_serial(g);
    const int cap = d.diameter() + extra;
    const auto& verts = g.vertices();
    const std::size_t n = verts.size();
    std::vector<SweepReport> per(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::size_t i = 0; i < n; ++i) {
        SweepReport& r = per[i];
        std::vector<Vec> best(n);
        for (std::size_t j = 0; j < n; ++j)
            best[j] = reduce_mod_J(path_weight(rs, shortest_path(g, verts[i], verts[j])), J);
        std::set<std::pair<int, Vec>> layer{{static_cast<int>(i), Vec(rs.rank(), 0)}};
        for (int len = 0; len <= cap; ++len) {
            for (const auto& [j, wt] : layer) {
                ++r.checked;
                Vec diff = sub(wt, best[j]);
                bool bad = std::any_of(diff.begin(), diff.end(), [](Int c) { return c < 0; });
                if (len == d.at(i, j) && diff != Vec(rs.rank(), 0)) bad = true;
                if (bad && r.failures++ == 0)
                    r.first_failure = W.render(verts[i]) + " -> " + W.render(verts[j]) + " length " +
                                      std::to_string(len) + " weight difference " + format_vec(diff);
            }
            if (len == cap) break;
            std::set<std::pair<int, Vec>> next;
            for (const auto& [j, wt] : layer)
                for (const Edge& e : g.out(verts[j]))
                    next.insert({g.index(e.dst), reduce_mod_J(add(wt, edge_weight(rs, e)), J)});
            layer = std::move(next);
        }
    }
    SweepReport total;
    for (const auto& r : per) {
        total.checked += r.checked;
        if (r.failures && total.failures == 0) total.first_failure = r.first_failure;
        total.failures += r.failures;
    }
    return total;
}

}  // namespace

SweepReport postnikov_sweep(const QbgGraph& g, int extra) { return run_postnikov(g, extra, true); }
SweepReport postnikov_sweep_serial(const QbgGraph& g, int extra) { return run_postnikov(g, extra, false); }

std::vector<Path> all_shortest_paths(const QbgGraph& g, const DistanceTable& d, Elem u, Elem v) {
    std::vector<Path> out;
    const int target = g.index(v);
    Path cur{u, {}};
    auto walk = [&](auto&& self, Elem x) -> void {
        if (x == v) {
            out.push_back(cur);
            return;
        }
        int left = d.at(g.index(x), target);
        for (const Edge& e : g.out(x)) {
            if (d.at(g.index(e.dst), target) != left - 1) continue;
            cur.edges.push_back(e);
            self(self, e.dst);
            cur.edges.pop_back();
        }
    };
    if (d.at(g.index(u), target) >= 0) walk(walk, u);
    return out;
}

}  // namespace qbg
