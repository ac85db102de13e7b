#include "qbg/weyl.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "qbg/errors.hpp"

namespace qbg {

std::uint64_t weyl_group_order(char type, int n) {
    auto factorial = [](int k) {
        std::uint64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
        return f;
    };
    switch (type) {
        case 'A': return factorial(n + 1);
        case 'B':
        case 'C': return (std::uint64_t{1} << n) * factorial(n);
        case 'D': return (std::uint64_t{1} << (n - 1)) * factorial(n);
        case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
        case 'F': return 1152;
        case 'G': return 12;
        default: return 0;
    }
}

const char* to_string(Trichotomy t) {
    switch (t) {
        case Trichotomy::Down: return "DOWN";
        case Trichotomy::Fixed: return "FIXED";
        case Trichotomy::Up: return "UP";
    }
    return "?";
}

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
    const int n = rs_.rank();
    nroots_ = rs_.num_roots();
    const std::uint64_t order = weyl_group_order(rs_.type(), n);
    if (order > kMaxOrder) {
        std::ostringstream msg;
        msg << "Weyl group of " << rs_.name() << " has order " << order << ", above the enumeration cap "
            << kMaxOrder;
        throw ConfigError(msg.str());
    }
    if (n > 8 || nroots_ > 255) throw ConfigError("rank too large for element interning");

    perm_.reserve(order * nroots_);
    length_.reserve(order);
    right_.assign(order * n, 0);

    std::vector<int> images(n);
    for (int k = 0; k < nroots_; ++k) perm_.push_back(static_cast<std::uint8_t>(k));
    length_.push_back(0);
    for (int i = 0; i < n; ++i) images[i] = rs_.simple(i);
    index_.emplace(key_of(images.data()), 0);

    for (Elem w = 0; w < length_.size(); ++w) {
        for (int i = 0; i < n; ++i) {
            const std::uint8_t* pw = &perm_[static_cast<std::size_t>(w) * nroots_];
            // (w r_i)(beta) = w(r_i beta)
            for (int k = 0; k < n; ++k) images[k] = pw[rs_.reflect_simple(i, rs_.simple(k))];
            std::uint64_t key = key_of(images.data());
            auto it = index_.find(key);
            Elem v;
            if (it == index_.end()) {
                v = static_cast<Elem>(length_.size());
                index_.emplace(key, v);
                std::size_t base = perm_.size();
                perm_.resize(base + nroots_);
                pw = &perm_[static_cast<std::size_t>(w) * nroots_];
                int len = 0;
                for (int k = 0; k < nroots_; ++k) {
                    std::uint8_t img = pw[rs_.reflect_simple(i, k)];
                    perm_[base + k] = img;
                    if (k < rs_.num_positive() && !rs_.is_positive(img)) ++len;
                }
                length_.push_back(len);
            } else {
                v = it->second;
            }
            right_[static_cast<std::size_t>(w) * n + i] = v;
        }
    }
    if (length_.size() != order) throw InvariantViolation("Weyl group enumeration size mismatch");

    left_.assign(order * n, 0);
    inverse_.assign(order, 0);
    for (Elem w = 0; w < order; ++w) {
        const std::uint8_t* pw = &perm_[static_cast<std::size_t>(w) * nroots_];
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) images[k] = rs_.reflect_simple(i, pw[rs_.simple(k)]);
            left_[static_cast<std::size_t>(w) * n + i] = lookup(key_of(images.data()));
        }
        for (int k = 0; k < nroots_; ++k)
            for (int i = 0; i < n; ++i)
                if (pw[k] == rs_.simple(i)) images[i] = k;
        inverse_[w] = lookup(key_of(images.data()));
    }

    reflection_.resize(rs_.num_positive());
    for (int a = 0; a < rs_.num_positive(); ++a) {
        for (int k = 0; k < n; ++k)
            images[k] = rs_.index_of(rs_.reflect(rs_.root(a), rs_.root(rs_.simple(k))));
        reflection_[a] = lookup(key_of(images.data()));
        reflection_root_[reflection_[a]] = a;
    }
    longest_ = 0;
    for (Elem w = 0; w < order; ++w)
        if (length_[w] > length_[longest_]) longest_ = w;
}

std::uint64_t WeylGroup::key_of(const int* simple_images) const {
    std::uint64_t key = 0;
    for (int k = 0; k < rank(); ++k) key |= static_cast<std::uint64_t>(simple_images[k]) << (8 * k);
    return key;
}

Elem WeylGroup::lookup(std::uint64_t key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw InvariantViolation("element lookup failed");
    return it->second;
}

int WeylGroup::reflection_root(Elem w) const {
    auto it = reflection_root_.find(w);
    return it == reflection_root_.end() ? -1 : it->second;
}

Vec WeylGroup::act_root(Elem w, const Vec& v) const {
    Vec out(rank(), 0);
    for (int i = 0; i < rank(); ++i)
        if (v[i] != 0) out = add(out, scale(v[i], rs_.root(act(w, rs_.simple(i)))));
    return out;
}

Vec WeylGroup::act_coroot(Elem w, const Vec& c) const {
    Vec out(rank(), 0);
    for (int i = 0; i < rank(); ++i)
        if (c[i] != 0) out = add(out, scale(c[i], rs_.coroot(act(w, rs_.simple(i)))));
    return out;
}

Vec WeylGroup::act_weight(Elem w, const Vec& lambda) const {
    // <alpha_k^vee, w lambda> = <w^{-1} alpha_k^vee, lambda>
    Elem winv = inverse(w);
    Vec out(rank());
    for (int k = 0; k < rank(); ++k) out[k] = dot(rs_.coroot(act(winv, rs_.simple(k))), lambda);
    return out;
}

Elem WeylGroup::mul(Elem a, Elem b) const {
    int images[8];
    for (int k = 0; k < rank(); ++k) images[k] = act(a, act(b, rs_.simple(k)));
    return lookup(key_of(images));
}

Elem WeylGroup::from_word(const std::vector<int>& word) const {
    Elem w = identity();
    for (int letter : word) {
        if (letter < 1 || letter > rank())
            throw ConfigError("word letter " + std::to_string(letter) + " out of range");
        w = right_simple(w, letter - 1);
    }
    return w;
}

std::vector<int> WeylGroup::reduced_word(Elem w) const {
    std::vector<int> word;
    while (w != identity()) {
        Elem winv = inverse(w);
        int i = 0;
        while (rs_.is_positive(act(winv, rs_.simple(i)))) ++i;
        word.push_back(i + 1);
        w = left_simple(w, i);
    }
    return word;
}

Mat WeylGroup::matrix(Elem w) const {
    Mat m(rank(), Vec(rank()));
    for (int i = 0; i < rank(); ++i) {
        const Vec& img = rs_.root(act(w, rs_.simple(i)));
        for (int r = 0; r < rank(); ++r) m[r][i] = img[r];
    }
    return m;
}

std::string WeylGroup::permutation(Elem w) const {
    if (rs_.type() != 'A') return {};
    std::string p;
    for (int k = 1; k <= rank() + 1; ++k) p += static_cast<char>('0' + k);
    for (int letter : reduced_word(w)) std::swap(p[letter - 1], p[letter]);
    return p;
}

std::string WeylGroup::word_string(Elem w) const {
    auto word = reduced_word(w);
    if (word.empty()) return "e";
    std::string s;
    for (int letter : word) s += 's' + std::to_string(letter);
    return s;
}

std::string WeylGroup::render(Elem w) const {
    return rs_.type() == 'A' ? permutation(w) : word_string(w);
}

bool WeylGroup::in_quotient(Elem w, const Parabolic& J) const {
    for (int j : J.nodes)
        if (!rs_.is_positive(act(w, rs_.simple(j)))) return false;
    return true;
}

bool WeylGroup::in_subgroup(Elem w, const Parabolic& J) const {
    // every inversion lies in Phi_J
    for (int a = 0; a < rs_.num_positive(); ++a)
        if (!J.in_J[a] && !rs_.is_positive(act(w, a))) return false;
    return true;
}

Elem WeylGroup::floor(Elem w, const Parabolic& J) const {
    for (bool changed = true; changed;) {
        changed = false;
        for (int j : J.nodes) {
            if (!rs_.is_positive(act(w, rs_.simple(j)))) {
                w = right_simple(w, j);
                changed = true;
            }
        }
    }
    return w;
}

std::pair<Elem, Elem> WeylGroup::decompose(Elem w, const Parabolic& J) const {
    Elem f = floor(w, J);
    return {f, mul(inverse(f), w)};
}

Elem WeylGroup::longest(const Parabolic& J) const {
    Elem w = identity();
    for (bool changed = true; changed;) {
        changed = false;
        for (int j : J.nodes) {
            if (rs_.is_positive(act(w, rs_.simple(j)))) {
                w = right_simple(w, j);
                changed = true;
            }
        }
    }
    return w;
}

Elem WeylGroup::special_v(int node) const {
    auto special = rs_.special_nodes();
    if (std::find(special.begin(), special.end(), node) == special.end())
        throw ConfigError("node " + std::to_string(node + 1) + " is not special");
    NodeSet all = (rank() >= 32) ? ~NodeSet{0} : ((NodeSet{1} << rank()) - 1);
    Parabolic rest = make_parabolic(rs_, all & ~(NodeSet{1} << node));
    return mul(longest(), inverse(longest(rest)));
}

std::vector<Elem> WeylGroup::quotient(const Parabolic& J) const {
    std::vector<Elem> out;
    for (Elem w = 0; w < size(); ++w)
        if (in_quotient(w, J)) out.push_back(w);
    return out;
}

std::vector<Elem> WeylGroup::subgroup(const Parabolic& J) const {
    std::vector<Elem> out;
    for (Elem w = 0; w < size(); ++w)
        if (in_subgroup(w, J)) out.push_back(w);
    return out;
}

std::vector<Elem> WeylGroup::bruhat_covers(Elem w) const {
    std::vector<Elem> out;
    for (int a = 0; a < rs_.num_positive(); ++a) {
        Elem v = mul(w, reflection(a));
        if (length(v) == length(w) + 1) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool WeylGroup::bruhat_leq(Elem v, Elem w) const {
    // If s w < w: v <= w iff min(v, s v) <= s w.
    while (w != identity()) {
        if (length(v) > length(w)) return false;
        Elem winv = inverse(w);
        int i = 0;
        while (rs_.is_positive(act(winv, rs_.simple(i)))) ++i;
        Elem sv = left_simple(v, i);
        if (length(sv) < length(v)) v = sv;
        w = left_simple(w, i);
    }
    return v == identity();
}

Trichotomy WeylGroup::trichotomy(Elem v, int alpha, const Parabolic& J) const {
    if (!rs_.is_positive(alpha)) throw std::invalid_argument("trichotomy: root must be positive");
    int img = act(inverse(v), alpha);
    if (J.in_J[img]) return Trichotomy::Fixed;
    return rs_.is_positive(img) ? Trichotomy::Up : Trichotomy::Down;
}

}  // namespace qbg
