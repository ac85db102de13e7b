#pragma once

#include <optional>
#include <vector>

#include "qbg/affine.hpp"

namespace qbg {

// Node 0 of I ∪ {0}; simple nodes are 0-based 0..n-1 elsewhere.
inline constexpr int kAffineNode = -1;

// w^{-1} applied to alpha_j, or to -theta for the affine node.
int left_step_root(const WeylGroup& W, Elem w, int node);

struct LeftStep {
    Trichotomy kind;   // class of w^{-1} ~alpha_j
    Elem target;       // floor(s_j w)
    std::optional<Edge> edge;  // w -> target for Up, target -> w for Down
    Elem z;            // r_theta w = floor(r_theta w) z; identity unless affine node and Down
};

// w in W^J. Throws InvariantViolation if the z identities fail.
LeftStep left_multiplication_step(const WeylGroup& W, const Parabolic& J, Elem w, int node);

enum class DiamondFamily { DQ1, DQ2, DQ3, DQ31, DQ4, DQ41 };
enum class DiamondSide { Left, Right };

const char* to_string(DiamondFamily f);
// The left family a right diagram of family f relabels to.
DiamondFamily relabeled(DiamondFamily f);

// Vertices: bottom, left, right, top. Left side: bottom edges are the
// hypotheses. Right side: top edges are the hypotheses.
struct Diamond {
    DiamondFamily family;
    DiamondSide side;
    int node;   // simple node or kAffineNode
    Elem w;
    int gamma;
    Elem z = 0;
    Elem z2 = 0;
    Edge bottom_left, bottom_right, top_left, top_right;
};

// Matches (w, node, gamma) against the six configurations using the edges of g
// as hypotheses and fills in the other two edges by formula. Throws ConfigError
// when no configuration applies.
Diamond diamond_complete(const QbgGraph& g, DiamondSide side, Elem w, int node, int gamma);
std::optional<Diamond> match_diamond(const QbgGraph& g, DiamondSide side, Elem w, int node, int gamma);
// Every matching configuration, OpenMP over vertices.
std::vector<Diamond> all_diamonds(const QbgGraph& g, DiamondSide side);
std::vector<Diamond> all_diamonds_serial(const QbgGraph& g, DiamondSide side);

struct DiamondCheck {
    bool edges_exist = false;
    bool weights_congruent = false;
    bool ok() const { return edges_exist && weights_congruent; }
};
DiamondCheck check_diamond(const QbgGraph& g, const Diamond& d);

}  // namespace qbg
