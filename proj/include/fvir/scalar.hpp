#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fvir {

/// Exact rational scalar. All arithmetic in the library is over Q; no floating
/// point appears anywhere.
using Scalar = boost::multiprecision::cpp_rational;

using Vec = std::vector<Scalar>;
using Matrix = std::vector<Vec>;

inline Scalar rat(long long num, long long den = 1) { return Scalar(num, den); }

std::string scalar_str(const Scalar& s);

/// Parses "p" or "p/q" with optional sign, q > 0 after normalization.
/// Returns nullopt on anything else (no exceptions, callers report position).
std::optional<Scalar> parse_scalar(std::string_view text);

/// Binomial coefficient C(m, j) for integer m (possibly negative) and j >= 0.
Scalar binomial(long long m, int j);

Scalar factorial(int n);

bool is_zero(const Vec& v);
Vec& add_scaled(Vec& acc, const Scalar& c, const Vec& v);
std::string vec_str(const Vec& v, const std::vector<std::string>& labels);

}  // namespace fvir
