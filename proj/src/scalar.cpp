#include "fvir/scalar.hpp"

#include <cctype>
#include <sstream>

namespace fvir {

std::string scalar_str(const Scalar& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::optional<Scalar> parse_scalar(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos > start;
  };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (!digits(i)) return std::nullopt;
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t den_start = i;
    if (!digits(i)) return std::nullopt;
    if (text.substr(den_start, i - den_start).find_first_not_of('0') == std::string_view::npos)
      return std::nullopt;  // zero denominator
  }
  if (i != text.size()) return std::nullopt;
  if (text[0] == '+') text.remove_prefix(1);
  return Scalar(std::string(text));
}

Scalar binomial(long long m, int j) {
  Scalar r(1);
  for (int t = 0; t < j; ++t) r *= Scalar(m - t, t + 1);
  return r;
}

Scalar factorial(int n) {
  Scalar r(1);
  for (int t = 2; t <= n; ++t) r *= t;
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& s : v)
    if (s != 0) return false;
  return true;
}

Vec& add_scaled(Vec& acc, const Scalar& c, const Vec& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
  return acc;
}

std::string vec_str(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += scalar_str(v[i]);
    out += ' ';
    out += i < labels.size() ? labels[i] : "b" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace fvir
