#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qbg/root_system.hpp"

namespace qbg {

// Interned element id. Ids follow breadth-first order from the identity (id 0)
// over right multiplication by r_1, ..., r_n, so they are stable per type.
using Elem = std::uint32_t;

enum class Trichotomy { Down, Fixed, Up };

class WeylGroup {
public:
    static constexpr std::size_t kMaxOrder = 1'000'000;

    explicit WeylGroup(RootSystem rs);

    const RootSystem& roots() const { return rs_; }
    int rank() const { return rs_.rank(); }
    std::size_t size() const { return length_.size(); }
    Elem identity() const { return 0; }

    int length(Elem w) const { return length_[w]; }
    // Image of a root index.
    int act(Elem w, int root) const { return perm_[static_cast<std::size_t>(w) * nroots_ + root]; }
    Vec act_root(Elem w, const Vec& v) const;
    Vec act_coroot(Elem w, const Vec& c) const;
    // lambda in fundamental-weight coordinates.
    Vec act_weight(Elem w, const Vec& lambda) const;

    Elem mul(Elem a, Elem b) const;
    Elem inverse(Elem w) const { return inverse_[w]; }
    Elem simple(int i) const { return right_[i]; }
    Elem right_simple(Elem w, int i) const { return right_[static_cast<std::size_t>(w) * rank() + i]; }
    Elem left_simple(Elem w, int i) const { return left_[static_cast<std::size_t>(w) * rank() + i]; }
    Elem reflection(int root) const { return reflection_[rs_.abs_index(root)]; }
    // -1 when w is not a reflection.
    int reflection_root(Elem w) const;

    // Letters are 1-based node indices.
    Elem from_word(const std::vector<int>& word) const;
    // Lexicographically smallest reduced word.
    std::vector<int> reduced_word(Elem w) const;
    // Column i holds the image of alpha_{i+1}.
    Mat matrix(Elem w) const;
    // One-line notation in type A ("3412"), empty otherwise.
    std::string permutation(Elem w) const;
    // Permutation in type A, otherwise the reduced word ("e" for the identity).
    std::string render(Elem w) const;
    std::string word_string(Elem w) const;

    Elem longest() const { return longest_; }

    bool in_quotient(Elem w, const Parabolic& J) const;
    bool in_subgroup(Elem w, const Parabolic& J) const;
    Elem floor(Elem w, const Parabolic& J) const;
    // w = floor(w) * w_J
    std::pair<Elem, Elem> decompose(Elem w, const Parabolic& J) const;
    Elem longest(const Parabolic& J) const;
    // v_i = w0 (w0^{I \ {i}})^{-1} for a special node i (0-based).
    Elem special_v(int node) const;
    std::vector<Elem> quotient(const Parabolic& J) const;
    std::vector<Elem> subgroup(const Parabolic& J) const;

    std::vector<Elem> bruhat_covers(Elem w) const;
    bool bruhat_leq(Elem v, Elem w) const;

    // Classifies v^{-1} alpha against Phi_J for a positive root alpha.
    Trichotomy trichotomy(Elem v, int alpha, const Parabolic& J) const;

private:
    std::uint64_t key_of(const int* simple_images) const;
    Elem lookup(std::uint64_t key) const;

    RootSystem rs_;
    int nroots_ = 0;
    std::vector<std::uint8_t> perm_;
    std::vector<int> length_;
    std::vector<Elem> right_;
    std::vector<Elem> left_;
    std::vector<Elem> inverse_;
    std::vector<Elem> reflection_;
    std::unordered_map<Elem, int> reflection_root_;
    std::unordered_map<std::uint64_t, Elem> index_;
    Elem longest_ = 0;
};

// |W| by the classification formula, without enumeration.
std::uint64_t weyl_group_order(char type, int rank);

const char* to_string(Trichotomy t);

}  // namespace qbg
