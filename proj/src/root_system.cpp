#include "qbg/root_system.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "qbg/errors.hpp"

namespace qbg {

namespace {

void link(Mat& a, int i, int j, Int aij, Int aji) {
    a[i][j] = aij;
    a[j][i] = aji;
}

Mat cartan_matrix(char type, int n) {
    Mat a(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    switch (type) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1, -1, -1);
            break;
        case 'B':  // alpha_n short
            for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
            link(a, n - 2, n - 1, -1, -2);
            break;
        case 'C':  // alpha_n long
            for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
            link(a, n - 2, n - 1, -2, -1);
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
            link(a, n - 3, n - 1, -1, -1);
            break;
        case 'E':
            link(a, 0, 2, -1, -1);
            link(a, 1, 3, -1, -1);
            for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1, -1, -1);
            break;
        case 'F':  // alpha_1, alpha_2 long
            link(a, 0, 1, -1, -1);
            link(a, 1, 2, -1, -2);
            link(a, 2, 3, -1, -1);
            break;
        case 'G':  // alpha_1 short
            link(a, 0, 1, -3, -1);
            break;
        default:
            break;
    }
    return a;
}

bool valid_type(char type, int n) {
    switch (type) {
        case 'A': return n >= 1;
        case 'B':
        case 'C': return n >= 2;
        case 'D': return n >= 4;
        case 'E': return n >= 6 && n <= 8;
        case 'F': return n == 4;
        case 'G': return n == 2;
        default: return false;
    }
}

// Minimal positive integers e_i with e_i a_ij = e_j a_ji.
Vec symmetrize(const Mat& a) {
    using Q = boost::rational<Int>;
    const int n = static_cast<int>(a.size());
    std::vector<Q> e(n, Q(0));
    e[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j = 0; j < n; ++j) {
            if (j == i || a[i][j] == 0 || e[j] != Q(0)) continue;
            e[j] = e[i] * Q(a[i][j], a[j][i]);
            queue.push_back(j);
        }
    }
    Int l = 1;
    for (const Q& q : e) l = std::lcm(l, q.denominator());
    Vec out(n);
    Int g = 0;
    for (int i = 0; i < n; ++i) {
        out[i] = (e[i] * l).numerator();
        g = std::gcd(g, out[i]);
    }
    for (Int& x : out) x /= g;
    return out;
}

}  // namespace

RootSystem RootSystem::build(char type, int rank) {
    if (!valid_type(type, rank)) {
        std::ostringstream msg;
        msg << "invalid Cartan type " << type << rank;
        throw ConfigError(msg.str());
    }
    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = rank;
    rs.cartan_ = cartan_matrix(type, rank);
    rs.sym_ = symmetrize(rs.cartan_);

    const int n = rank;
    std::set<Vec> found;
    std::deque<Vec> queue;
    for (int i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        found.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        Vec beta = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            Int c = 0;
            for (int j = 0; j < n; ++j) c += rs.cartan_[i][j] * beta[j];
            Vec img = beta;
            img[i] -= c;
            bool positive = std::all_of(img.begin(), img.end(), [](Int x) { return x >= 0; });
            if (positive && !is_zero(img) && found.insert(img).second) queue.push_back(img);
        }
    }
    std::vector<Vec> pos(found.begin(), found.end());  // std::set order is lexicographic
    rs.npos_ = static_cast<int>(pos.size());
    rs.roots_ = pos;
    for (const Vec& v : pos) rs.roots_.push_back(neg(v));
    for (int k = 0; k < rs.num_roots(); ++k) rs.index_[rs.roots_[k]] = k;

    Int max_norm = 0;
    std::vector<Int> norms;
    for (int k = 0; k < rs.npos_; ++k) {
        const Vec& v = rs.roots_[k];
        Int norm = 0;  // (v, v) with (alpha_i, alpha_j) = e_i a_ij
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) norm += v[i] * rs.sym_[i] * rs.cartan_[i][j] * v[j];
        norms.push_back(norm);
        max_norm = std::max(max_norm, norm);
    }
    rs.long_.assign(rs.npos_, 0);
    for (int k = 0; k < rs.npos_; ++k) rs.long_[k] = norms[k] == max_norm;
    rs.coroots_.resize(rs.num_roots());
    for (int k = 0; k < rs.npos_; ++k) {
        Vec c(n);
        for (int i = 0; i < n; ++i) {
            Int num = 2 * rs.roots_[k][i] * rs.sym_[i];
            if (num % norms[k] != 0) throw InvariantViolation("non-integral coroot");
            c[i] = num / norms[k];
        }
        rs.coroots_[k] = c;
        rs.coroots_[k + rs.npos_] = neg(c);
    }

    rs.simple_.resize(n);
    for (int i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        rs.simple_[i] = rs.index_.at(e);
    }
    rs.simple_refl_.assign(n, std::vector<int>(rs.num_roots()));
    for (int i = 0; i < n; ++i) {
        const Vec& ai = rs.roots_[rs.simple_[i]];
        for (int k = 0; k < rs.num_roots(); ++k) {
            int img = rs.index_of(rs.reflect(ai, rs.roots_[k]));
            if (img < 0) throw InvariantViolation("root set not closed under reflection");
            rs.simple_refl_[i][k] = img;
        }
    }

    rs.theta_ = 0;
    for (int k = 1; k < rs.npos_; ++k)
        if (rs.height(k) > rs.height(rs.theta_)) rs.theta_ = k;
    rs.two_rho_.assign(n, 0);
    for (int k = 0; k < rs.npos_; ++k) rs.two_rho_ = add(rs.two_rho_, rs.roots_[k]);

    Int idx = 1;
    for (int i = 0; i < n; ++i) {
        for (Int m = 1;; ++m) {
            Vec p(n, 0);
            p[i] = m;
            if (rs.coroot_from_pairings(p)) {
                idx = std::lcm(idx, m);
                break;
            }
        }
    }
    rs.coweight_index_ = idx;
    return rs;
}

std::string RootSystem::name() const { return std::string(1, type_) + std::to_string(rank_); }

int RootSystem::index_of(const Vec& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

Int RootSystem::height(int idx) const {
    Int h = 0;
    for (Int c : roots_[idx]) h += c;
    return h;
}

Int RootSystem::pair(const Vec& c, const Vec& v) const {
    if (static_cast<int>(c.size()) != rank_ || static_cast<int>(v.size()) != rank_)
        throw std::invalid_argument("pairing rank mismatch");
    Int s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (c[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < rank_; ++j) row += cartan_[i][j] * v[j];
        s += c[i] * row;
    }
    return s;
}

Vec RootSystem::reflect(const Vec& beta, const Vec& v) const {
    return sub(v, scale(pair(coroot_of(beta), v), beta));
}

Vec RootSystem::coroot_of(const Vec& root) const {
    int idx = index_of(root);
    if (idx < 0) throw std::invalid_argument("coroot_of: not a root");
    return coroots_[idx];
}

bool RootSystem::is_quantum_root(int idx) const {
    if (!is_positive(idx)) throw std::invalid_argument("is_quantum_root: root must be positive");
    if (long_[idx]) return true;
    const Vec& c = coroots_[idx];
    for (int i = 0; i < rank_; ++i)
        if (long_[simple_[i]] && c[i] != 0) return false;
    return true;
}

std::vector<int> RootSystem::special_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < rank_; ++i)
        if (roots_[theta_][i] == 1) out.push_back(i);
    return out;
}

Vec RootSystem::root_to_weight(const Vec& v) const {
    Vec w(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) w[i] += cartan_[i][j] * v[j];
    return w;
}

std::optional<Vec> RootSystem::coroot_from_pairings(const Vec& p) const {
    Mat t(rank_, Vec(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) t[i][j] = cartan_[j][i];
    return solve_integral(t, p);
}

Vec RootSystem::pairings(const Vec& mu) const {
    Vec p(rank_, 0);
    for (int k = 0; k < rank_; ++k)
        for (int j = 0; j < rank_; ++j) p[k] += mu[j] * cartan_[j][k];
    return p;
}

int Parabolic::component_of(int node) const {
    for (std::size_t m = 0; m < components.size(); ++m)
        if (std::find(components[m].begin(), components[m].end(), node) != components[m].end())
            return static_cast<int>(m);
    return -1;
}

Parabolic make_parabolic(const RootSystem& rs, NodeSet mask) {
    const int n = rs.rank();
    if (n < 32 && (mask >> n) != 0) throw ConfigError("parabolic node out of range");
    Parabolic p;
    p.mask = mask;
    for (int i = 0; i < n; ++i)
        if (p.contains(i)) p.nodes.push_back(i);

    std::vector<char> seen(n, 0);
    for (int s : p.nodes) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            comp.push_back(i);
            for (int j = 0; j < n; ++j)
                if (j != i && p.contains(j) && !seen[j] && rs.cartan(i, j) != 0) {
                    seen[j] = 1;
                    queue.push_back(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        p.components.push_back(comp);
    }

    p.in_J.assign(rs.num_roots(), 0);
    for (int k = 0; k < rs.num_roots(); ++k) {
        bool inside = true;
        for (int i = 0; i < n; ++i)
            if (rs.root(k)[i] != 0 && !p.contains(i)) inside = false;
        p.in_J[k] = inside;
    }
    for (const auto& comp : p.components) {
        int best = -1;
        for (int k = 0; k < rs.num_positive(); ++k) {
            bool inside = true;
            for (int i = 0; i < n; ++i)
                if (rs.root(k)[i] != 0 && std::find(comp.begin(), comp.end(), i) == comp.end())
                    inside = false;
            if (inside && (best < 0 || rs.height(k) > rs.height(best))) best = k;
        }
        p.component_theta.push_back(best);
    }
    p.two_rho_J.assign(n, 0);
    for (int k = 0; k < rs.num_positive(); ++k)
        if (p.in_J[k]) p.two_rho_J = add(p.two_rho_J, rs.root(k));
    Vec diff = sub(rs.two_rho(), p.two_rho_J);
    p.pair_rho_quotient.resize(rs.num_positive());
    for (int k = 0; k < rs.num_positive(); ++k) p.pair_rho_quotient[k] = rs.pair(rs.coroot(k), diff);
    return p;
}

NodeSet parse_nodes(const std::string& text, int rank) {
    NodeSet mask = 0;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ConfigError("bad node index '" + item + "'");
        }
        if (used != item.size() || v < 1 || v > rank)
            throw ConfigError("node index '" + item + "' out of range 1.." + std::to_string(rank));
        mask |= NodeSet{1} << (v - 1);
    }
    return mask;
}

std::string format_nodes(NodeSet mask) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (!((mask >> i) & 1u)) continue;
        if (!first) out += ',';
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

}  // namespace qbg
