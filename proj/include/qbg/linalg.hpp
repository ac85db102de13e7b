#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qbg {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(Int k, const Vec& a);
Vec neg(const Vec& a);
bool is_zero(const Vec& a);
Int dot(const Vec& a, const Vec& b);

// "[1,0,-2]"
std::string format_vec(const Vec& a);
// Linear combination over a symbol: {1,2} with "a" -> "a1+2a2"; zero -> "0".
std::string format_combination(const Vec& a, std::string_view symbol);

// Solves m x = b over Q; returns x when the system is nonsingular and x is integral.
std::optional<Vec> solve_integral(const Mat& m, const Vec& b);

}  // namespace qbg
