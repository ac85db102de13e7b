#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qbg/weyl.hpp"

namespace qbg {

enum class EdgeKind : std::uint8_t { Bruhat, Quantum };

const char* to_string(EdgeKind k);

// w -> target labeled by the positive root `label` (a root index).
struct Edge {
    Elem src = 0;
    Elem dst = 0;
    int label = 0;
    EdgeKind kind = EdgeKind::Bruhat;

    bool operator==(const Edge&) const = default;
};

struct EdgeTest {
    EdgeKind kind;
    Elem target;
};

// The edge of QB(W^J) out of w with label alpha, if any.
// Throws std::invalid_argument for alpha negative or in Phi_J.
std::optional<EdgeTest> edge_between(const WeylGroup& W, const Parabolic& J, Elem w, int alpha);

// alpha^vee for quantum edges, zero otherwise.
Vec edge_weight(const RootSystem& rs, const Edge& e);

class QbgGraph {
public:
    QbgGraph(const WeylGroup& W, Parabolic J);

    const WeylGroup& group() const { return *W_; }
    const Parabolic& parabolic() const { return J_; }
    const std::vector<Elem>& vertices() const { return vertices_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    int index(Elem w) const { return vindex_[w]; }
    bool contains(Elem w) const { return w < vindex_.size() && vindex_[w] >= 0; }
    const std::vector<Edge>& out(Elem w) const { return out_[vindex_[w]]; }
    const std::vector<Edge>& in(Elem w) const { return in_[vindex_[w]]; }
    std::size_t num_edges() const;
    std::size_t num_quantum() const;
    // All edges, by source vertex then label.
    std::vector<Edge> edges() const;
    std::optional<Edge> find_edge(Elem src, int label) const;
    std::vector<Edge> edges_between(Elem src, Elem dst) const;

private:
    friend QbgGraph build_qbg(const WeylGroup&, const Parabolic&);
    friend QbgGraph build_qbg_serial(const WeylGroup&, const Parabolic&);
    void finish();

    const WeylGroup* W_;
    Parabolic J_;
    std::vector<Elem> vertices_;
    std::vector<int> vindex_;
    std::vector<std::vector<Edge>> out_;
    std::vector<std::vector<Edge>> in_;
};

// OpenMP over vertices; build_qbg_serial is the reference loop.
QbgGraph build_qbg(const WeylGroup& W, const Parabolic& J);
QbgGraph build_qbg_serial(const WeylGroup& W, const Parabolic& J);

struct Path {
    Elem start = 0;
    std::vector<Edge> edges;

    Elem end() const { return edges.empty() ? start : edges.back().dst; }
    std::size_t length() const { return edges.size(); }
};

Vec path_weight(const RootSystem& rs, const Path& p);
// Representative in Q^vee / Q_J^vee: J-coordinates set to zero.
Vec reduce_mod_J(const Vec& c, const Parabolic& J);
// Checks consecutive edges of p exist in g.
bool is_path_in(const QbgGraph& g, const Path& p);

// Distances indexed by vertex index; -1 for unreachable.
class DistanceTable {
public:
    DistanceTable() = default;
    explicit DistanceTable(std::size_t n) : n_(n), d_(n * n, -1) {}
    int at(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    int& at(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
    std::size_t size() const { return n_; }
    int diameter() const;
    bool operator==(const DistanceTable&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<int> d_;
};

std::vector<int> bfs_from(const QbgGraph& g, Elem src);
DistanceTable all_pairs_distances(const QbgGraph& g);
DistanceTable all_pairs_distances_serial(const QbgGraph& g);
int shortest_distance(const QbgGraph& g, Elem u, Elem v);
Path shortest_path(const QbgGraph& g, Elem u, Elem v);

// w0 w w0^J.
Elem dual_involution(const WeylGroup& W, const Parabolic& J, Elem w);
// The image dst° -> src° of an edge. Its label is w0^J u beta where
// src r_beta = dst u with u in W_J; for Bruhat edges u = e.
Edge dual_edge(const WeylGroup& W, const Parabolic& J, const Edge& e);

// A total order on a set of positive roots.
struct ReflectionOrdering {
    std::vector<int> sequence;
    std::vector<int> position;  // per positive root index, -1 if absent

    bool contains(int root) const { return position[root] >= 0; }
    bool before(int a, int b) const { return position[a] < position[b]; }
};

ReflectionOrdering make_ordering(const RootSystem& rs, std::vector<int> sequence);
// beta_k = r_{i1} ... r_{i(k-1)} alpha_{ik}; the word must be reduced.
// With full = true the word must have length |Phi+|.
ReflectionOrdering ordering_from_word(const WeylGroup& W, const std::vector<int>& word, bool full = true);
// Phi+ \ Phi_J+ by exact lex on c / <alpha^vee, lambda>, then Phi_J+ from a
// reduced word of w0^J (the shortlex one when j_word is empty).
ReflectionOrdering lambda_ordering(const WeylGroup& W, const Vec& lambda, const std::vector<int>& j_word = {});
// For alpha, beta, alpha + beta all ordered: alpha + beta lies between them.
bool satisfies_betweenness(const RootSystem& rs, const ReflectionOrdering& ord);

struct IncreasingPaths {
    std::vector<int> count;   // per vertex index
    std::vector<Path> first;  // one witness per vertex index
};

IncreasingPaths increasing_paths_from(const QbgGraph& g, Elem v, const ReflectionOrdering& ord);
// The unique path with strictly increasing labels; throws when not unique.
Path increasing_path(const QbgGraph& g, Elem v, Elem w, const ReflectionOrdering& ord);

}  // namespace qbg
