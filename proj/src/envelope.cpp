#include "fvir/envelope.hpp"

#include "fvir/linalg.hpp"
#include "fvir/modes.hpp"

#include <algorithm>
#include <functional>

namespace fvir {

bool monomial_less(const PBWMonomial& a, const PBWMonomial& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t t = 0; t < n; ++t) {
    if (factor_less(a[t], b[t])) return true;
    if (factor_less(b[t], a[t])) return false;
  }
  return a.size() < b.size();
}

int degree_of(const PBWMonomial& mono) {
  int deg = 0;
  for (const auto& fac : mono) deg += fac.level;
  return deg;
}

bool is_sorted_monomial(const PBWMonomial& mono) {
  for (std::size_t t = 0; t + 1 < mono.size(); ++t)
    if (factor_less(mono[t + 1], mono[t])) return false;
  return true;
}

std::string monomial_str(const PBWMonomial& mono, const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& fac : mono) {
    out += "L(" + std::to_string(-fac.level) + ",";
    out += static_cast<std::size_t>(fac.idx) < labels.size()
               ? labels[static_cast<std::size_t>(fac.idx)]
               : "b" + std::to_string(fac.idx);
    out += ") ";
  }
  out += "|0>";
  return out;
}

void State::add(const PBWMonomial& mono, const Scalar& c) {
  if (c == 0) return;
  auto it = coeffs.find(mono);
  if (it == coeffs.end()) {
    coeffs.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

void State::add_state(const State& o, const Scalar& s) {
  if (s == 0 || o.coeffs.empty()) return;
  if (coeffs.empty()) {
    degree = o.degree;
  } else if (degree != o.degree) {
    throw ShapeError("adding states of different degrees");
  }
  for (const auto& [mono, c] : o.coeffs) add(mono, s * c);
}

State& State::scale(const Scalar& s) {
  if (s == 0) {
    coeffs.clear();
    return *this;
  }
  for (auto& [mono, c] : coeffs) c *= s;
  return *this;
}

std::string state_str(const State& v, const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& [mono, c] : v.coeffs) {
    if (!out.empty()) out += " + ";
    out += scalar_str(c) + " " + monomial_str(mono, labels);
  }
  return out.empty() ? "0" : out;
}

namespace {

void gen_monomials(int remaining, int max_level, int min_idx_at_max, int d, PBWMonomial& prefix,
                   std::vector<PBWMonomial>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int level = std::min(max_level, remaining); level >= 2; --level) {
    if (remaining - level == 1) continue;
    const int start_idx = level == max_level ? min_idx_at_max : 0;
    for (int idx = start_idx; idx < d; ++idx) {
      prefix.push_back({level, idx});
      gen_monomials(remaining - level, level, idx, d, prefix, out);
      prefix.pop_back();
    }
  }
}

void gen_partitions(int remaining, int max_part, std::vector<int>& parts,
                    const std::function<void(const std::vector<int>&)>& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (int part = std::min(max_part, remaining); part >= 2; --part) {
    if (remaining - part == 1) continue;
    parts.push_back(part);
    gen_partitions(remaining - part, part, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

std::vector<PBWMonomial> pbw_basis(int d, int degree) {
  if (d <= 0) throw ShapeError("pbw_basis: dimension must be positive");
  if (degree < 0) throw ShapeError("pbw_basis: degree must be non-negative");
  std::vector<PBWMonomial> out;
  PBWMonomial prefix;
  gen_monomials(degree, degree, 0, d, prefix, out);
  return out;
}

long long graded_dim(int d, int degree) {
  if (d <= 0) throw ShapeError("graded_dim: dimension must be positive");
  if (degree < 0) return 0;
  long long total = 0;
  std::vector<int> parts;
  gen_partitions(degree, degree, parts, [&](const std::vector<int>& p) {
    Scalar prod(1);
    std::size_t t = 0;
    while (t < p.size()) {
      std::size_t s = t;
      while (s < p.size() && p[s] == p[t]) ++s;
      const int mult = static_cast<int>(s - t);
      prod *= binomial(d + mult - 1, mult);
      t = s;
    }
    total += static_cast<long long>(numerator(prod));
  });
  return total;
}

Envelope::Envelope(FrobeniusAlgebra f, int cutoff) : m_f(std::move(f)), m_cutoff(cutoff) {
  check_shape(m_f);
  if (cutoff < 0) throw ShapeError("envelope cutoff must be non-negative");
  m_basis_cache.resize(static_cast<std::size_t>(cutoff) + 1);
  m_basis_ready.assign(static_cast<std::size_t>(cutoff) + 1, false);
}

const std::vector<PBWMonomial>& Envelope::basis(int degree) const {
  if (degree < 0 || degree > m_cutoff)
    throw CutoffError("basis: degree " + std::to_string(degree) + " outside [0, " +
                      std::to_string(m_cutoff) + "]");
  const auto k = static_cast<std::size_t>(degree);
  if (!m_basis_ready[k]) {
    m_basis_cache[k] = pbw_basis(m_f.dim, degree);
    m_basis_ready[k] = true;
  }
  return m_basis_cache[k];
}

long long Envelope::dim(int degree) const { return graded_dim(m_f.dim, degree); }

State Envelope::vacuum() const {
  State v;
  v.degree = 0;
  v.add({}, Scalar(1));
  return v;
}

State Envelope::zero(int degree) const {
  State v;
  v.degree = degree;
  return v;
}

bool Envelope::GenKeyLess::operator()(const GenKey& a, const GenKey& b) const {
  if (a.m != b.m) return a.m < b.m;
  if (a.idx != b.idx) return a.idx < b.idx;
  return monomial_less(a.mono, b.mono);
}

State Envelope::apply_gen(int m, int idx, const PBWMonomial& mono) const {
  if (mono.empty()) {
    if (m >= -1) return zero(std::max(-m, 0));
    State v = zero(-m);
    v.add({PBWFactor{-m, idx}}, Scalar(1));
    return v;
  }
  GenKey key{m, idx, mono};
  auto hit = m_memo.find(key);
  if (hit != m_memo.end()) return hit->second;

  const PBWFactor head = mono[0];
  State out = zero(std::max(degree_of(mono) - m, 0));
  if (m <= -2 && (-m > head.level || (-m == head.level && idx <= head.idx))) {
    PBWMonomial sorted;
    sorted.reserve(mono.size() + 1);
    sorted.push_back({-m, idx});
    sorted.insert(sorted.end(), mono.begin(), mono.end());
    out.add(sorted, Scalar(1));
  } else {
    const PBWMonomial rest(mono.begin() + 1, mono.end());
    // move past the head factor: creation re-application plus bracket terms
    const State inner = apply_gen(m, idx, rest);
    if (!inner.is_zero()) out.add_state(apply_gen_state(-head.level, head.idx, inner));
    const ModeVector br = bracket(m_f, m, basis_vec(m_f.dim, idx), -head.level,
                                  basis_vec(m_f.dim, head.idx));
    for (const auto& [key, c] : br.terms) out.add_state(apply_gen(key.m, key.idx, rest), c);
    if (br.central != 0) {
      State rest_state = zero(degree_of(rest));
      rest_state.add(rest, Scalar(1));
      out.add_state(rest_state, br.central);
    }
  }
  m_memo.emplace(std::move(key), out);
  return out;
}

State Envelope::apply_gen_state(int m, int idx, const State& v) const {
  State out = zero(std::max(v.degree - m, 0));
  for (const auto& [mono, c] : v.coeffs) out.add_state(apply_gen(m, idx, mono), c);
  return out;
}

namespace {

void check_state(const State& v, int dim) {
  for (const auto& [mono, c] : v.coeffs) {
    (void)c;
    if (!is_sorted_monomial(mono)) throw ShapeError("state monomial is not in canonical order");
    if (degree_of(mono) != v.degree) throw ShapeError("state is not homogeneous");
    for (const auto& fac : mono)
      if (fac.level < 2 || fac.idx < 0 || fac.idx >= dim)
        throw ShapeError("state monomial factor out of range");
  }
  if (v.degree < 0) throw ShapeError("state degree must be non-negative");
}

/// Mode coefficient of the state L_{-p}(x)|0> = (1/(p-2)!) d^{p-2} L_{-2}(x)|0>:
/// its q-th field mode is gamma(p,q) times the generator mode q-p+1.
Scalar gamma_coeff(int p, int q) {
  Scalar g(1);
  for (int t = 0; t < p - 2; ++t) g *= Scalar(q - t);
  g /= factorial(p - 2);
  if ((p - 2) % 2 != 0) g = -g;
  return g;
}

}  // namespace

State Envelope::apply_mode(int m, const Vec& x, const State& v) const {
  if (x.size() != static_cast<std::size_t>(m_f.dim)) throw ShapeError("apply_mode: vector size mismatch");
  check_state(v, m_f.dim);
  if (v.degree > m_cutoff) throw CutoffError("apply_mode: input degree exceeds cutoff");
  const int rd = v.degree - m;
  if (rd > m_cutoff)
    throw CutoffError("apply_mode: result degree " + std::to_string(rd) + " exceeds cutoff " +
                      std::to_string(m_cutoff));
  if (rd < 0) return zero(0);
  State out = zero(rd);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    out.add_state(apply_gen_state(m, static_cast<int>(i), v), x[i]);
  }
  return out;
}

State Envelope::translate(const State& v) const { return apply_mode(-1, m_f.unit, v); }

State Envelope::embed(const Vec& x) const {
  if (x.size() != static_cast<std::size_t>(m_f.dim)) throw ShapeError("embed: vector size mismatch");
  if (m_cutoff < 2) throw CutoffError("embed: cutoff below degree 2");
  State v = zero(2);
  for (std::size_t i = 0; i < x.size(); ++i) v.add({PBWFactor{2, static_cast<int>(i)}}, x[i]);
  return v;
}

State Envelope::mono_field(const PBWMonomial& mono, int n, const State& v) const {
  if (v.is_zero()) return zero(std::max(degree_of(mono) + v.degree - n - 1, 0));
  if (mono.empty()) return n == -1 ? v : zero(std::max(v.degree - n - 1, 0));
  const int p = mono[0].level;
  const int i = mono[0].idx;
  const PBWMonomial rest(mono.begin() + 1, mono.end());
  const int rest_deg = degree_of(rest);
  State out = zero(std::max(degree_of(mono) + v.degree - n - 1, 0));
  for (int j = 0; j <= rest_deg + v.degree - n - 1; ++j) {
    const State inner = mono_field(rest, n + j, v);
    if (inner.is_zero()) continue;
    out.add_state(apply_gen_state(-j - p, i, inner), gamma_coeff(p, -1 - j));
  }
  for (int j = std::max(0, p - 2); j <= v.degree + p - 1; ++j) {
    const Scalar g = gamma_coeff(p, j);
    if (g == 0) continue;
    const State bv = apply_gen_state(j - p + 1, i, v);
    if (bv.is_zero()) continue;
    out.add_state(mono_field(rest, n - 1 - j, bv), g);
  }
  return out;
}

State Envelope::field_unchecked(const State& u, int n, const State& v) const {
  State out = zero(std::max(u.degree + v.degree - n - 1, 0));
  for (const auto& [mono, c] : u.coeffs) out.add_state(mono_field(mono, n, v), c);
  return out;
}

State Envelope::field_action(const State& u, int n, const State& v) const {
  check_state(u, m_f.dim);
  check_state(v, m_f.dim);
  if (u.degree > m_cutoff || v.degree > m_cutoff)
    throw CutoffError("field_action: input degree exceeds cutoff");
  const int rd = u.degree + v.degree - n - 1;
  if (rd > m_cutoff)
    throw CutoffError("field_action: result degree " + std::to_string(rd) + " exceeds cutoff " +
                      std::to_string(m_cutoff));
  if (rd < 0) return zero(0);
  return field_unchecked(u, n, v);
}

Vec Envelope::coords(const State& v) const {
  const auto& bas = basis(v.degree);
  Vec out(bas.size(), Scalar(0));
  for (std::size_t t = 0; t < bas.size(); ++t) {
    auto it = v.coeffs.find(bas[t]);
    if (it != v.coeffs.end()) out[t] = it->second;
  }
  if (v.coeffs.size() != static_cast<std::size_t>(std::count_if(
                             out.begin(), out.end(), [](const Scalar& s) { return s != 0; })))
    throw ShapeError("coords: state contains monomials outside the basis");
  return out;
}

Matrix Envelope::translate_matrix(int degree) const {
  const auto& from = basis(degree);
  const auto& to = basis(degree + 1);
  Matrix mat(to.size(), Vec(from.size(), Scalar(0)));
  for (std::size_t col = 0; col < from.size(); ++col) {
    State v = zero(degree);
    v.add(from[col], Scalar(1));
    const Vec image = coords(translate(v));
    for (std::size_t row = 0; row < to.size(); ++row) mat[row][col] = image[row];
  }
  return mat;
}

Envelope::RecoveredOps Envelope::recovered_ops(const Vec& x, const Vec& y) const {
  if (m_cutoff < 3) throw CutoffError("recovered_ops: cutoff must be at least 3");
  const State xs = embed(x), ys = embed(y);
  RecoveredOps out;
  out.op1 = coords(field_action(xs, 1, ys));
  const State s0 = field_action(xs, 0, ys);
  const SolveResult sol = solve(translate_matrix(2), coords(s0));
  if (sol.status != SolveStatus::unique)
    throw SolveError(sol.status == SolveStatus::inconsistent
                         ? "recovered_ops: x_(0)y is not in the image of the translation operator"
                         : "recovered_ops: translation operator is not injective in degree 2");
  out.op0t = sol.solution;
  const State s3 = field_action(xs, 3, ys);
  out.form = Scalar(0);
  auto it = s3.coeffs.find(PBWMonomial{});
  if (it != s3.coeffs.end()) out.form = it->second;
  if (s3.coeffs.size() > (it != s3.coeffs.end() ? 1u : 0u))
    throw ShapeError("recovered_ops: x_(3)y has unexpected support");
  return out;
}

}  // namespace fvir
