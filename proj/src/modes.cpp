#include "fvir/modes.hpp"

namespace fvir {

void ModeVector::add(int m, int idx, const Scalar& c) {
  if (c == 0) return;
  ModeKey key{m, idx};
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

ModeVector mv_sum(const ModeVector& a, const ModeVector& b, const Scalar& bs) {
  ModeVector out = a;
  for (const auto& [key, c] : b.terms) out.add(key.m, key.idx, bs * c);
  out.central += bs * b.central;
  return out;
}

std::string mode_str(const ModeVector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& [key, c] : v.terms) {
    if (!out.empty()) out += " + ";
    out += scalar_str(c) + " L(" + std::to_string(key.m) + "," +
           (static_cast<std::size_t>(key.idx) < labels.size() ? labels[static_cast<std::size_t>(key.idx)]
                                                              : "b" + std::to_string(key.idx)) +
           ")";
  }
  if (v.central != 0) {
    if (!out.empty()) out += " + ";
    out += scalar_str(v.central) + " K";
  }
  return out.empty() ? "0" : out;
}

ModeVector bracket(const FrobeniusAlgebra& f, int m, const Vec& x, int n, const Vec& y) {
  ModeVector out;
  const Vec xy = multiply(f, x, y);
  for (std::size_t k = 0; k < xy.size(); ++k) out.add(m + n, static_cast<int>(k), Scalar(m - n) * xy[k]);
  if (m + n == 0) {
    const long long mm = m;
    out.central = Scalar(mm * mm * mm - mm, 6) * pairing(f, x, y);
  }
  return out;
}

ModeVector bracket(const FrobeniusAlgebra& f, int m, const Vec& x, const ModeVector& w) {
  ModeVector out;
  for (const auto& [key, c] : w.terms) {
    ModeVector part = bracket(f, m, x, key.m, basis_vec(f.dim, key.idx));
    out = mv_sum(out, part, c);
  }
  return out;
}

ValidationReport check_lie(const FrobeniusAlgebra& f, int mode_min, int mode_max) {
  check_shape(f);
  ValidationReport rep;
  auto emit = [&](const std::string& identity, std::vector<long long> where, std::string lhs,
                  std::string rhs) {
    for (auto& v : rep.violations)
      if (v.identity == identity) {
        ++v.count;
        return;
      }
    rep.violations.push_back({identity, std::move(where), std::move(lhs), std::move(rhs), 1});
  };
  const int d = f.dim;
  for (int m = mode_min; m <= mode_max; ++m)
    for (int i = 0; i < d; ++i)
      for (int n = mode_min; n <= mode_max; ++n)
        for (int j = 0; j < d; ++j) {
          const Vec x = basis_vec(d, i), y = basis_vec(d, j);
          ModeVector ab = bracket(f, m, x, n, y);
          ModeVector ba = bracket(f, n, y, m, x);
          if (!mv_sum(ab, ba).is_zero())
            emit("antisymmetry", {m, i, n, j}, mode_str(ab, f.labels), mode_str(ba, f.labels));
        }
  for (int m = mode_min; m <= mode_max; ++m)
    for (int i = 0; i < d; ++i)
      for (int n = mode_min; n <= mode_max; ++n)
        for (int j = 0; j < d; ++j)
          for (int p = mode_min; p <= mode_max; ++p)
            for (int k = 0; k < d; ++k) {
              const Vec x = basis_vec(d, i), y = basis_vec(d, j), z = basis_vec(d, k);
              ModeVector sum = bracket(f, m, x, bracket(f, n, y, p, z));
              sum = mv_sum(sum, bracket(f, n, y, bracket(f, p, z, m, x)));
              sum = mv_sum(sum, bracket(f, p, z, bracket(f, m, x, n, y)));
              if (!sum.is_zero())
                emit("jacobi", {m, i, n, j, p, k}, mode_str(sum, f.labels), "0");
            }
  return rep;
}

}  // namespace fvir
