#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qbg/linalg.hpp"

namespace qbg {

using NodeSet = std::uint32_t;  // bit i <-> simple root alpha_{i+1}

// Root indices: 0..N-1 are the positive roots in lexicographic order of their
// simple-root coefficients, N+k is the negative of root k.
class RootSystem {
public:
    static RootSystem build(char type, int rank);

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const;
    const Mat& cartan() const { return cartan_; }
    Int cartan(int i, int j) const { return cartan_[i][j]; }
    const Vec& symmetrizer() const { return sym_; }

    int num_positive() const { return npos_; }
    int num_roots() const { return 2 * npos_; }
    const Vec& root(int idx) const { return roots_[idx]; }
    const Vec& coroot(int idx) const { return coroots_[idx]; }
    bool is_positive(int idx) const { return idx < npos_; }
    int negate(int idx) const { return idx < npos_ ? idx + npos_ : idx - npos_; }
    int abs_index(int idx) const { return idx < npos_ ? idx : idx - npos_; }
    int simple(int i) const { return simple_[i]; }
    // -1 when v is not a root.
    int index_of(const Vec& v) const;
    bool is_long(int idx) const { return long_[abs_index(idx)]; }
    Int height(int idx) const;

    int theta() const { return theta_; }
    const Vec& two_rho() const { return two_rho_; }

    // <c, v> for c in simple-coroot and v in simple-root coordinates.
    Int pair(const Vec& coroot, const Vec& v) const;
    // r_beta(v) = v - <beta^vee, v> beta.
    Vec reflect(const Vec& beta, const Vec& v) const;
    Vec coroot_of(const Vec& root) const;
    // Image of root idx under the simple reflection r_{i+1}.
    int reflect_simple(int i, int idx) const { return simple_refl_[i][idx]; }

    bool is_quantum_root(int idx) const;
    // Nodes whose simple root has coefficient 1 in theta.
    std::vector<int> special_nodes() const;

    // Fundamental-weight coordinates of a root-lattice vector.
    Vec root_to_weight(const Vec& v) const;
    // <c, lambda> with lambda in fundamental-weight coordinates.
    Int pair_weight(const Vec& coroot, const Vec& lambda) const { return dot(coroot, lambda); }
    // The coroot-lattice vector mu with <mu, alpha_k> = p_k, if integral.
    std::optional<Vec> coroot_from_pairings(const Vec& p) const;
    // The pairings <mu, alpha_k>.
    Vec pairings(const Vec& mu) const;
    // Smallest m > 0 such that m * omega_i^vee lies in Q^vee for all i.
    Int coweight_index() const { return coweight_index_; }

private:
    char type_ = 'A';
    int rank_ = 0;
    int npos_ = 0;
    Mat cartan_;
    Vec sym_;
    std::vector<Vec> roots_;
    std::vector<Vec> coroots_;
    std::vector<char> long_;
    std::vector<int> simple_;
    std::vector<std::vector<int>> simple_refl_;
    std::map<Vec, int> index_;
    int theta_ = 0;
    Vec two_rho_;
    Int coweight_index_ = 1;
};

// A subset J of the Dynkin nodes and the data derived from it.
struct Parabolic {
    NodeSet mask = 0;
    std::vector<int> nodes;                    // 0-based, ascending
    std::vector<std::vector<int>> components;  // connected components of J
    std::vector<int> component_theta;          // highest root of each component
    std::vector<char> in_J;                    // per root index (either sign)
    Vec two_rho_J;
    Vec pair_rho_quotient;  // <alpha^vee, 2rho - 2rho_J> per positive root

    bool contains(int node) const { return (mask >> node) & 1u; }
    int component_of(int node) const;
};

Parabolic make_parabolic(const RootSystem& rs, NodeSet mask);

// 1-based comma list "1,3" <-> mask.
NodeSet parse_nodes(const std::string& text, int rank);
std::string format_nodes(NodeSet mask);

}  // namespace qbg
