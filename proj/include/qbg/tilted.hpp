#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qbg/diamond.hpp"

namespace qbg {

// Distances from the all-pairs table of a QBG (J = ∅ for the tilted order).
class TiltedQuery {
public:
    explicit TiltedQuery(const QbgGraph& g);
    TiltedQuery(const QbgGraph& g, DistanceTable d);

    const QbgGraph& graph() const { return *g_; }
    const DistanceTable& distances() const { return d_; }
    int dist(Elem a, Elem b) const;
    // w1 ≼_u w2: l(u => w2) = l(u => w1) + l(w1 => w2)
    bool leq(Elem u, Elem w1, Elem w2) const;
    // The distance minimizer from u over z W_J. The graph must be QB(W).
    // Throws InvariantViolation on a tie.
    Elem coset_min(Elem u, Elem z, const Parabolic& J) const;
    // All ≼_u-minimal elements of z W_J by pairwise comparison.
    std::vector<Elem> minimal_elements(Elem u, Elem z, const Parabolic& J) const;

private:
    const QbgGraph* g_;
    DistanceTable d_;
};

struct SweepReport {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

// Every (u, z, J): unique minimum equal to the distance minimizer and below the
// whole coset; floor(z) for u = e; the increasing path to it (lambda ordering
// for J) has no label in Phi_J. checked counts (u, coset, J) triples.
SweepReport tilted_sweep(const WeylGroup& W);
SweepReport tilted_sweep_serial(const WeylGroup& W);

// Fewest left steps u -> floor(s_i u) with u^{-1} alpha_i in Phi+ \ Phi_J+
// (alpha_0 = -theta) reaching e. Throws ConfigError unless u is in W^J.
int quantum_length(const WeylGroup& W, const Parabolic& J, Elem u);
// One shortest such sequence of nodes (kAffineNode for the affine one).
std::vector<int> quantum_length_word(const WeylGroup& W, const Parabolic& J, Elem u);
// Every vertex reaches every other through left-step edges.
bool left_steps_strongly_connected(const WeylGroup& W, const Parabolic& J);

// Path surgery for the node j. Cases follow the signs of <alpha_j^vee, x lambda>
// along the path (alpha_0 = -theta):
//   1: last < 0, some >= 0       -> w1 to floor(s_j w2), length n-1
//   2: first < 0, last < 0       -> floor(s_j w1) to floor(s_j w2), length n
//   3: first > 0, some <= 0      -> floor(s_j w1) to w2, length n-1
//   4: first > 0, last > 0       -> floor(s_j w1) to floor(s_j w2), length n
struct Transformed {
    Path path;
    // wt(path) - wt(p) mod Q_J^vee predicted by the case
    Vec correction;
};

// Throws ConfigError if the hypotheses of the case fail or p is not a path of g.
Transformed transform_path(const QbgGraph& g, const Path& p, int node, int which);
// Cases whose hypotheses hold for (p, node).
std::vector<int> applicable_cases(const QbgGraph& g, const Path& p, int node);

// wt(q) - wt(p) in Q^vee / Q_J^vee. Throws ConfigError unless p is shortest
// and both are paths of g with the same endpoints.
Vec postnikov_compare(const QbgGraph& g, const DistanceTable& d, const Path& p, const Path& q);

// For every pair, the weights of all paths of length <= diameter + extra
// exceed the shortest weight in every non-J coordinate, and the shortest paths
// agree mod Q_J^vee. Paths are tracked as (endpoint, reduced weight) states per
// length; checked counts states.
SweepReport postnikov_sweep(const QbgGraph& g, int extra = 3);
SweepReport postnikov_sweep_serial(const QbgGraph& g, int extra = 3);

// All shortest paths from u to v.
std::vector<Path> all_shortest_paths(const QbgGraph& g, const DistanceTable& d, Elem u, Elem v);

}  // namespace qbg
