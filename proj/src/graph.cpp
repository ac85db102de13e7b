#include "qbg/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "qbg/errors.hpp"

namespace qbg {

const char* to_string(EdgeKind k) { return k == EdgeKind::Quantum ? "quantum" : "bruhat"; }

std::optional<EdgeTest> edge_between(const WeylGroup& W, const Parabolic& J, Elem w, int alpha) {
    const RootSystem& rs = W.roots();
    if (!rs.is_positive(alpha)) throw std::invalid_argument("edge label must be a positive root");
    if (J.in_J[alpha]) throw std::invalid_argument("edge label lies in Phi_J");
    Elem wr = W.mul(w, W.reflection(alpha));
    if (W.length(wr) == W.length(w) + 1) {
        if (!W.in_quotient(wr, J))
            throw InvariantViolation("Bruhat step " + W.word_string(w) + " * r_alpha left W^J");
        return EdgeTest{EdgeKind::Bruhat, wr};
    }
    Elem f = W.floor(wr, J);
    if (W.length(f) == W.length(w) + 1 - J.pair_rho_quotient[alpha]) return EdgeTest{EdgeKind::Quantum, f};
    return std::nullopt;
}

Vec edge_weight(const RootSystem& rs, const Edge& e) {
    if (e.kind == EdgeKind::Quantum) return rs.coroot(e.label);
    return Vec(rs.rank(), 0);
}

QbgGraph::QbgGraph(const WeylGroup& W, Parabolic J) : W_(&W), J_(std::move(J)) {
    vertices_ = W.quotient(J_);
    vindex_.assign(W.size(), -1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) vindex_[vertices_[i]] = static_cast<int>(i);
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
}

void QbgGraph::finish() {
    for (auto& list : in_) list.clear();
    for (const auto& list : out_)
        for (const Edge& e : list) in_[vindex_[e.dst]].push_back(e);
}

std::size_t QbgGraph::num_edges() const {
    std::size_t n = 0;
    for (const auto& list : out_) n += list.size();
    return n;
}

std::size_t QbgGraph::num_quantum() const {
    std::size_t n = 0;
    for (const auto& list : out_)
        for (const Edge& e : list) n += e.kind == EdgeKind::Quantum;
    return n;
}

std::vector<Edge> QbgGraph::edges() const {
    std::vector<Edge> all;
    for (const auto& list : out_) all.insert(all.end(), list.begin(), list.end());
    return all;
}

std::optional<Edge> QbgGraph::find_edge(Elem src, int label) const {
    if (!contains(src)) return std::nullopt;
    for (const Edge& e : out(src))
        if (e.label == label) return e;
    return std::nullopt;
}

std::vector<Edge> QbgGraph::edges_between(Elem src, Elem dst) const {
    std::vector<Edge> found;
    if (!contains(src)) return found;
    for (const Edge& e : out(src))
        if (e.dst == dst) found.push_back(e);
    return found;
}

namespace {

std::vector<Edge> vertex_edges(const WeylGroup& W, const Parabolic& J, Elem w) {
    std::vector<Edge> list;
    for (int a = 0; a < W.roots().num_positive(); ++a) {
        if (J.in_J[a]) continue;
        if (auto t = edge_between(W, J, w, a)) list.push_back(Edge{w, t->target, a, t->kind});
    }
    return list;
}

}  // namespace

QbgGraph build_qbg(const WeylGroup& W, const Parabolic& J) {
    QbgGraph g(W, J);
    const int n = static_cast<int>(g.vertices_.size());
    bool failed = false;
    std::string failure;
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) {
        try {
            g.out_[i] = vertex_edges(W, g.J_, g.vertices_[i]);
        } catch (const std::exception& e) {
#pragma omp critical
            {
                failed = true;
                failure = e.what();
            }
        }
    }
    if (failed) throw InvariantViolation(failure);
    g.finish();
    return g;
}

QbgGraph build_qbg_serial(const WeylGroup& W, const Parabolic& J) {
    QbgGraph g(W, J);
    for (std::size_t i = 0; i < g.vertices_.size(); ++i) g.out_[i] = vertex_edges(W, g.J_, g.vertices_[i]);
    g.finish();
    return g;
}

Vec path_weight(const RootSystem& rs, const Path& p) {
    Vec wt(rs.rank(), 0);
    for (const Edge& e : p.edges)
        if (e.kind == EdgeKind::Quantum) wt = add(wt, rs.coroot(e.label));
    return wt;
}

Vec reduce_mod_J(const Vec& c, const Parabolic& J) {
    Vec r = c;
    for (int j : J.nodes) r[j] = 0;
    return r;
}

bool is_path_in(const QbgGraph& g, const Path& p) {
    Elem at = p.start;
    if (!g.contains(at)) return false;
    for (const Edge& e : p.edges) {
        if (e.src != at) return false;
        auto found = g.find_edge(e.src, e.label);
        if (!found || *found != e) return false;
        at = e.dst;
    }
    return true;
}

int DistanceTable::diameter() const {
    int d = 0;
    for (int x : d_) d = std::max(d, x);
    return d;
}

std::vector<int> bfs_from(const QbgGraph& g, Elem src) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::deque<Elem> queue{src};
    dist[g.index(src)] = 0;
    while (!queue.empty()) {
        Elem x = queue.front();
        queue.pop_front();
        int dx = dist[g.index(x)];
        for (const Edge& e : g.out(x)) {
            int j = g.index(e.dst);
            if (dist[j] < 0) {
                dist[j] = dx + 1;
                queue.push_back(e.dst);
            }
        }
    }
    return dist;
}

DistanceTable all_pairs_distances(const QbgGraph& g) {
    const int n = static_cast<int>(g.num_vertices());
    DistanceTable t(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < n; ++i) {
        std::vector<int> row = bfs_from(g, g.vertices()[i]);
        for (int j = 0; j < n; ++j) t.at(i, j) = row[j];
    }
    return t;
}

DistanceTable all_pairs_distances_serial(const QbgGraph& g) {
    const std::size_t n = g.num_vertices();
    DistanceTable t(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> row = bfs_from(g, g.vertices()[i]);
        for (std::size_t j = 0; j < n; ++j) t.at(i, j) = row[j];
    }
    return t;
}

int shortest_distance(const QbgGraph& g, Elem u, Elem v) { return bfs_from(g, u)[g.index(v)]; }

Path shortest_path(const QbgGraph& g, Elem u, Elem v) {
    std::vector<Edge> via(g.num_vertices());
    std::vector<char> seen(g.num_vertices(), 0);
    std::deque<Elem> queue{u};
    seen[g.index(u)] = 1;
    while (!queue.empty() && !seen[g.index(v)]) {
        Elem x = queue.front();
        queue.pop_front();
        for (const Edge& e : g.out(x)) {
            int j = g.index(e.dst);
            if (!seen[j]) {
                seen[j] = 1;
                via[j] = e;
                queue.push_back(e.dst);
            }
        }
    }
    if (!seen[g.index(v)]) throw InvariantViolation("target unreachable in QB(W^J)");
    Path p{u, {}};
    for (Elem at = v; at != u; at = via[g.index(at)].src) p.edges.push_back(via[g.index(at)]);
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

Elem dual_involution(const WeylGroup& W, const Parabolic& J, Elem w) {
    return W.mul(W.mul(W.longest(), w), W.longest(J));
}

Edge dual_edge(const WeylGroup& W, const Parabolic& J, const Edge& e) {
    Elem u = W.mul(W.inverse(e.dst), W.mul(e.src, W.reflection(e.label)));
    int label = W.act(W.longest(J), W.act(u, e.label));
    return Edge{dual_involution(W, J, e.dst), dual_involution(W, J, e.src), label, e.kind};
}

ReflectionOrdering make_ordering(const RootSystem& rs, std::vector<int> sequence) {
    ReflectionOrdering ord;
    ord.position.assign(rs.num_positive(), -1);
    for (std::size_t k = 0; k < sequence.size(); ++k) {
        int a = sequence[k];
        if (!rs.is_positive(a) || ord.position[a] >= 0) throw ConfigError("ordering repeats or has a negative root");
        ord.position[a] = static_cast<int>(k);
    }
    ord.sequence = std::move(sequence);
    return ord;
}

ReflectionOrdering ordering_from_word(const WeylGroup& W, const std::vector<int>& word, bool full) {
    const RootSystem& rs = W.roots();
    Elem prefix = W.identity();
    std::vector<int> seq;
    for (int letter : word) {
        if (letter < 1 || letter > rs.rank()) throw ConfigError("word letter out of range");
        int beta = W.act(prefix, rs.simple(letter - 1));
        Elem next = W.right_simple(prefix, letter - 1);
        if (W.length(next) != W.length(prefix) + 1 || !rs.is_positive(beta))
            throw ConfigError("word is not reduced");
        seq.push_back(beta);
        prefix = next;
    }
    if (full && static_cast<int>(seq.size()) != rs.num_positive())
        throw ConfigError("word is not a reduced word of w0");
    return make_ordering(rs, std::move(seq));
}

ReflectionOrdering lambda_ordering(const WeylGroup& W, const Vec& lambda, const std::vector<int>& j_word) {
    const RootSystem& rs = W.roots();
    if (static_cast<int>(lambda.size()) != rs.rank()) throw ConfigError("lambda has the wrong rank");
    NodeSet mask = 0;
    for (int i = 0; i < rs.rank(); ++i) {
        if (lambda[i] < 0) throw ConfigError("lambda is not dominant");
        if (lambda[i] == 0) mask |= NodeSet{1} << i;
    }
    Parabolic J = make_parabolic(rs, mask);
    std::vector<int> top;
    for (int a = 0; a < rs.num_positive(); ++a)
        if (!J.in_J[a]) top.push_back(a);
    auto less = [&](int a, int b) {
        const Vec& c = rs.coroot(a);
        const Vec& d = rs.coroot(b);
        Int pa = rs.pair_weight(c, lambda);
        Int pb = rs.pair_weight(d, lambda);
        for (int i = 0; i < rs.rank(); ++i) {
            Int x = c[i] * pb;
            Int y = d[i] * pa;
            if (x != y) return x < y;
        }
        return false;
    };
    std::stable_sort(top.begin(), top.end(), less);
    for (std::size_t k = 1; k < top.size(); ++k)
        if (!less(top[k - 1], top[k])) throw InvariantViolation("lambda ordering is not injective");

    std::vector<int> word = j_word.empty() ? W.reduced_word(W.longest(J)) : j_word;
    ReflectionOrdering bottom = ordering_from_word(W, word, false);
    for (int a : bottom.sequence)
        if (!J.in_J[a]) throw ConfigError("J-word is not a word in W_J");
    if (bottom.sequence.size() != static_cast<std::size_t>(std::count(J.in_J.begin(), J.in_J.begin() + rs.num_positive(), 1)))
        throw ConfigError("J-word is not a reduced word of w0^J");
    top.insert(top.end(), bottom.sequence.begin(), bottom.sequence.end());
    return make_ordering(rs, std::move(top));
}

bool satisfies_betweenness(const RootSystem& rs, const ReflectionOrdering& ord) {
    for (int a : ord.sequence)
        for (int b : ord.sequence) {
            if (a >= b) continue;
            int s = rs.index_of(add(rs.root(a), rs.root(b)));
            if (s < 0 || !rs.is_positive(s) || !ord.contains(s)) continue;
            int pa = ord.position[a], pb = ord.position[b], ps = ord.position[s];
            if (!((pa < ps && ps < pb) || (pb < ps && ps < pa))) return false;
        }
    return true;
}

namespace {

void increasing_dfs(const QbgGraph& g, const ReflectionOrdering& ord, Path& current, int last, IncreasingPaths& out) {
    Elem at = current.end();
    int idx = g.index(at);
    if (out.count[idx]++ == 0) out.first[idx] = current;
    for (const Edge& e : g.out(at)) {
        if (!ord.contains(e.label)) continue;
        int pos = ord.position[e.label];
        if (pos <= last) continue;
        current.edges.push_back(e);
        increasing_dfs(g, ord, current, pos, out);
        current.edges.pop_back();
    }
}

}  // namespace

IncreasingPaths increasing_paths_from(const QbgGraph& g, Elem v, const ReflectionOrdering& ord) {
    IncreasingPaths out;
    out.count.assign(g.num_vertices(), 0);
    out.first.resize(g.num_vertices());
    Path current{v, {}};
    increasing_dfs(g, ord, current, -1, out);
    return out;
}

Path increasing_path(const QbgGraph& g, Elem v, Elem w, const ReflectionOrdering& ord) {
    IncreasingPaths all = increasing_paths_from(g, v, ord);
    int c = all.count[g.index(w)];
    if (c != 1)
        throw InvariantViolation("found " + std::to_string(c) + " label-increasing paths from " +
                                 g.group().render(v) + " to " + g.group().render(w));
    return all.first[g.index(w)];
}

}  // namespace qbg
