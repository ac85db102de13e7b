#pragma once

#include <string>
#include <vector>

#include "qbg/level_zero.hpp"

namespace qbg {

// Schema tag written into every JSON document.
inline constexpr const char* kJsonSchema = "qbg/1";

// Graphviz text; quantum edges dashed red.
std::string graph_to_dot(const QbgGraph& g);
std::string graph_to_json(const QbgGraph& g);
// one edge per line: "src -> dst label kind"
std::string graph_to_text(const QbgGraph& g);

// Elements named in the affine fundamental weights; the n = 0 part is red.
std::string slice_to_dot(const LevelZeroSlice& s);
std::string slice_to_json(const LevelZeroSlice& s);
std::string slice_to_text(const LevelZeroSlice& s);

// Lifted covers, one per edge of QB(W^J), all at the same translation.
struct LiftedGraph {
    const QbgGraph* graph;
    Elem z;
    Vec mu;
    std::vector<AffineCover> covers;  // in the order of graph->edges()
};

LiftedGraph lift_graph(const AffineWeyl& A, const QbgGraph& g, Elem z, const Vec& mu);
std::string lift_to_dot(const AffineWeyl& A, const LiftedGraph& l);
std::string lift_to_json(const AffineWeyl& A, const LiftedGraph& l);
std::string lift_to_text(const AffineWeyl& A, const LiftedGraph& l);

}  // namespace qbg
