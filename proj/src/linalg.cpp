#include "qbg/linalg.hpp"

#include <boost/rational.hpp>

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qbg {

namespace {

void check_size(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector rank mismatch");
}

}  // namespace

Vec add(const Vec& a, const Vec& b) {
    check_size(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    check_size(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(Int k, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

Vec neg(const Vec& a) { return scale(-1, a); }

bool is_zero(const Vec& a) {
    for (Int x : a)
        if (x != 0) return false;
    return true;
}

Int dot(const Vec& a, const Vec& b) {
    check_size(a, b);
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string format_vec(const Vec& a) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out << ',';
        out << a[i];
    }
    out << ']';
    return out.str();
}

std::string format_combination(const Vec& a, std::string_view symbol) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Int c = a[i];
        if (c == 0) continue;
        if (c < 0)
            out << '-';
        else if (!first)
            out << '+';
        if (std::llabs(c) != 1) out << std::llabs(c);
        out << symbol << (i + 1);
        first = false;
    }
    if (first) return "0";
    return out.str();
}

std::optional<Vec> solve_integral(const Mat& m, const Vec& b) {
    using Q = boost::rational<Int>;
    const std::size_t n = m.size();
    if (b.size() != n) throw std::invalid_argument("solve_integral: size mismatch");
    std::vector<std::vector<Q>> a(n, std::vector<Q>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("solve_integral: not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n] = b[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == Q(0)) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == Q(0)) continue;
            Q f = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) {
        Q v = a[i][n] / a[i][i];
        if (v.denominator() != 1) return std::nullopt;
        x[i] = v.numerator();
    }
    return x;
}

}  // namespace qbg
