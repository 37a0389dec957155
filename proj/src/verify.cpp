#include "fvir/verify.hpp"

#include "fvir/algebroid.hpp"
#include "fvir/envelope.hpp"
#include "fvir/modes.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace fvir {

std::vector<long long> character(const FrobeniusAlgebra& f, int degree) {
  check_shape(f);
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(degree) + 1);
  for (int n = 0; n <= degree; ++n) out.push_back(graded_dim(f.dim, n));
  return out;
}

namespace {

std::string charge_note(const FrobeniusAlgebra& f) {
  const Scalar c = charge(f);
  return "charge <e,e> = " + scalar_str(c) +
         "; Virasoro-convention central charge 2<e,e> = " + scalar_str(2 * c) +
         " (normalization follows e_(3)e = <e,e>|0>)";
}

CheckReport from_validation(std::string name, const ValidationReport& rep, long long checked,
                            const std::string& pass_detail = "") {
  CheckReport out;
  out.name = std::move(name);
  out.pass = rep.ok();
  out.checked = checked;
  for (const auto& v : rep.violations) out.failed += v.count;
  out.detail = out.pass ? pass_detail : rep.describe();
  return out;
}

}  // namespace

CheckReport check_frobenius(const FrobeniusAlgebra& f) {
  const ValidationReport rep = validate(f);
  const long long d = f.dim;
  CheckReport out = from_validation("frobenius-axioms", rep,
                                    d * (d - 1) / 2 + d * d * d + d + d * (d - 1) / 2 + d * d * d);
  if (out.pass)
    out.detail = "form rank " + std::to_string(rep.form_rank) + " of " + std::to_string(f.dim);
  return out;
}

CheckReport check_algebroid_axioms(const FrobeniusAlgebra& f) {
  CheckReport out;
  out.name = "algebroid-axioms";
  VirasoroAlgebroid va;
  try {
    va = from_frobenius(f);
  } catch (const std::invalid_argument&) {
    out.pass = false;
    out.failed = 1;
    out.detail = "input algebra fails the Frobenius axioms; Vir(F) not formed";
    return out;
  }
  const long long r = va.rank;
  return from_validation("algebroid-axioms", check_axioms(va), r * (r - 1) + r * r + 5 * r * r * r);
}

CheckReport check_lie_bracket(const FrobeniusAlgebra& f, int mode_min, int mode_max) {
  const ValidationReport rep = check_lie(f, mode_min, mode_max);
  const long long w = (static_cast<long long>(mode_max) - mode_min + 1) * f.dim;
  return from_validation("lie-bracket", rep, w * w + w * w * w);
}

CheckReport check_graded_dimensions(const FrobeniusAlgebra& f, int degree,
                                    const std::vector<long long>* expected) {
  CheckReport out;
  out.name = "graded-dimensions";
  std::string dims;
  for (int n = 0; n <= degree; ++n) {
    const long long closed =
        expected ? (*expected)[static_cast<std::size_t>(n)] : graded_dim(f.dim, n);
    const long long enumerated = static_cast<long long>(pbw_basis(f.dim, n).size());
    ++out.checked;
    if (closed != enumerated) {
      ++out.failed;
      if (out.pass)
        out.detail = "degree " + std::to_string(n) + ": closed form " + std::to_string(closed) +
                     " vs enumeration " + std::to_string(enumerated);
      out.pass = false;
    }
    if (!dims.empty()) dims += ' ';
    dims += std::to_string(enumerated);
  }
  if (out.pass) out.detail = "character " + dims;
  return out;
}

CheckReport check_ope_coefficients(const FrobeniusAlgebra& f) {
  CheckReport out;
  out.name = "ope-coefficients";
  const Envelope env(f, 4);
  const State e = env.embed(f.unit);
  auto expect = [&](const std::string& what, const State& got, const State& want) {
    ++out.checked;
    if (got == want) return;
    ++out.failed;
    if (out.pass)
      out.detail = what + ": got " + state_str(got, f.labels) + ", want " +
                   state_str(want, f.labels);
    out.pass = false;
  };
  expect("e_(0)e = translate(e)", env.field_action(e, 0, e), env.translate(e));
  State two_e = e;
  two_e.scale(Scalar(2));
  expect("e_(1)e = 2e", env.field_action(e, 1, e), two_e);
  expect("e_(2)e = 0", env.field_action(e, 2, e), env.zero(1));
  State charged = env.vacuum();
  charged.scale(charge(f));
  expect("e_(3)e = <e,e>|0>", env.field_action(e, 3, e), charged);
  out.detail += (out.detail.empty() ? "" : "; ") + charge_note(f);
  return out;
}

CheckReport check_virasoro_vector(const FrobeniusAlgebra& f, int degree) {
  CheckReport out;
  out.name = "virasoro-vector";
  const Envelope env(f, std::max(degree + 1, 4));
  const State e = env.embed(f.unit);
  for (int j = 0; j <= degree; ++j) {
    for (const auto& mono : env.basis(j)) {
      State v = env.zero(j);
      v.add(mono, Scalar(1));
      ++out.checked;
      const State lhs0 = env.field_action(e, 0, v);
      const State rhs0 = env.translate(v);
      if (!(lhs0 == rhs0)) {
        ++out.failed;
        if (out.pass)
          out.detail = "e_(0) vs translation on " + monomial_str(mono, f.labels) + ": " +
                       state_str(lhs0, f.labels) + " vs " + state_str(rhs0, f.labels);
        out.pass = false;
      }
      ++out.checked;
      const State lhs1 = env.field_action(e, 1, v);
      State rhs1 = v;
      rhs1.scale(Scalar(j));
      if (!(lhs1 == rhs1)) {
        ++out.failed;
        if (out.pass)
          out.detail = "e_(1) on degree-" + std::to_string(j) + " state " +
                       monomial_str(mono, f.labels) + ": got " + state_str(lhs1, f.labels) +
                       ", want " + state_str(rhs1, f.labels);
        out.pass = false;
      }
    }
  }
  ++out.checked;
  if (!env.field_action(e, 2, e).is_zero()) {
    ++out.failed;
    if (out.pass) out.detail = "e_(2)e is nonzero";
    out.pass = false;
  }
  ++out.checked;
  State charged = env.vacuum();
  charged.scale(charge(f));
  if (!(env.field_action(e, 3, e) == charged)) {
    ++out.failed;
    if (out.pass) out.detail = "e_(3)e does not equal <e,e>|0>";
    out.pass = false;
  }
  out.detail += (out.detail.empty() ? "" : "; ") + charge_note(f);
  return out;
}

CheckReport check_algebroid_recovery(const FrobeniusAlgebra& f) {
  CheckReport out;
  out.name = "algebroid-recovery";
  const Envelope env(f, 4);
  const std::size_t d = static_cast<std::size_t>(f.dim);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec x = basis_vec(f.dim, static_cast<int>(i));
      const Vec y = basis_vec(f.dim, static_cast<int>(j));
      Envelope::RecoveredOps rec;
      try {
        rec = env.recovered_ops(x, y);
      } catch (const SolveError& err) {
        out.checked += 3;
        out.failed += 3;
        if (out.pass)
          out.detail = "pair (" + f.labels[i] + "," + f.labels[j] + "): " + err.what();
        out.pass = false;
        continue;
      }
      Vec want1 = f.mult[i][j];
      for (auto& s : want1) s *= 2;
      const struct {
        const char* what;
        bool ok;
        std::string got, want;
      } comps[3] = {
          {"x_(1)y", rec.op1 == want1, vec_str(rec.op1, f.labels), vec_str(want1, f.labels)},
          {"x_(0~)y", rec.op0t == f.mult[i][j], vec_str(rec.op0t, f.labels),
           vec_str(f.mult[i][j], f.labels)},
          {"<x,y>", rec.form == f.form[i][j], scalar_str(rec.form), scalar_str(f.form[i][j])},
      };
      for (const auto& comp : comps) {
        ++out.checked;
        if (comp.ok) continue;
        ++out.failed;
        if (out.pass)
          out.detail = std::string(comp.what) + " at (" + f.labels[i] + "," + f.labels[j] +
                       "): got " + comp.got + ", want " + comp.want;
        out.pass = false;
      }
    }
  return out;
}

CheckReport check_commutator_formula(const FrobeniusAlgebra& f, const VerifyOptions& opts) {
  CheckReport out;
  out.name = "commutator-formula";
  const int max_abs_mode = std::max(std::abs(opts.comm_mode_min), std::abs(opts.comm_mode_max));
  const Envelope env(f, opts.comm_degree + 2 * max_abs_mode + 2);
  std::vector<std::pair<int, PBWMonomial>> states;
  for (int deg = 0; deg <= opts.comm_degree; ++deg)
    for (const auto& mono : pbw_basis(f.dim, deg)) states.emplace_back(deg, mono);

  auto run_tuple = [&](int ai, int bi, int m, int n, const std::pair<int, PBWMonomial>& vm) {
    const State a = env.embed(basis_vec(f.dim, ai));
    const State b = env.embed(basis_vec(f.dim, bi));
    State v = env.zero(vm.first);
    v.add(vm.second, Scalar(1));
    State lhs = env.field_action(a, m, env.field_action(b, n, v));
    lhs.add_state(env.field_action(b, n, env.field_action(a, m, v)), Scalar(-1));
    State rhs = env.zero(std::max(2 + 2 + vm.first - m - n - 2, 0));
    for (int j = 0; j <= 3; ++j) {
      const Scalar c = binomial(m, j);
      if (c == 0) continue;
      rhs.add_state(env.field_action(env.field_action(a, j, b), m + n - j, v), c);
    }
    ++out.checked;
    if (lhs == rhs) return;
    ++out.failed;
    if (out.pass)
      out.detail = "a=" + f.labels[static_cast<std::size_t>(ai)] +
                   ", b=" + f.labels[static_cast<std::size_t>(bi)] + ", m=" + std::to_string(m) +
                   ", n=" + std::to_string(n) + ", v=" + monomial_str(vm.second, f.labels) +
                   ": lhs " + state_str(lhs, f.labels) + ", rhs " + state_str(rhs, f.labels);
    out.pass = false;
  };

  if (f.dim <= opts.exhaustive_dim) {
    for (int ai = 0; ai < f.dim; ++ai)
      for (int bi = 0; bi < f.dim; ++bi)
        for (int m = opts.comm_mode_min; m <= opts.comm_mode_max; ++m)
          for (int n = opts.comm_mode_min; n <= opts.comm_mode_max; ++n)
            for (const auto& vm : states) run_tuple(ai, bi, m, n, vm);
  } else {
    std::mt19937 rng(opts.sample_seed);
    std::uniform_int_distribution<int> pick_idx(0, f.dim - 1);
    std::uniform_int_distribution<int> pick_mode(opts.comm_mode_min, opts.comm_mode_max);
    std::uniform_int_distribution<std::size_t> pick_state(0, states.size() - 1);
    for (int t = 0; t < opts.sample_count; ++t)
      run_tuple(pick_idx(rng), pick_idx(rng), pick_mode(rng), pick_mode(rng),
                states[pick_state(rng)]);
  }
  return out;
}

CheckReport check_skew_symmetry(const FrobeniusAlgebra& f) {
  CheckReport out;
  out.name = "skew-symmetry";
  const Envelope env(f, 4);
  for (int ai = 0; ai < f.dim; ++ai)
    for (int bi = 0; bi < f.dim; ++bi) {
      const State a = env.embed(basis_vec(f.dim, ai));
      const State b = env.embed(basis_vec(f.dim, bi));
      for (int n = 0; n <= 3; ++n) {
        const State lhs = env.field_action(a, n, b);
        State rhs = env.zero(std::max(3 - n, 0));
        for (int j = 0; j + n <= 3; ++j) {
          State term = env.field_action(b, n + j, a);
          for (int t = 0; t < j; ++t) term = env.translate(term);
          rhs.add_state(term, Scalar(j % 2 == 0 ? 1 : -1) / factorial(j));
        }
        if ((n + 1) % 2 != 0) rhs.scale(Scalar(-1));
        ++out.checked;
        if (lhs == rhs) continue;
        ++out.failed;
        if (out.pass)
          out.detail = "a=" + f.labels[static_cast<std::size_t>(ai)] +
                       ", b=" + f.labels[static_cast<std::size_t>(bi)] +
                       ", n=" + std::to_string(n) + ": lhs " + state_str(lhs, f.labels) +
                       ", rhs " + state_str(rhs, f.labels);
        out.pass = false;
      }
    }
  return out;
}

std::vector<CheckReport> run_all(const FrobeniusAlgebra& f, const VerifyOptions& opts) {
  std::vector<CheckReport> reports;
  reports.push_back(check_frobenius(f));
  if (!reports.back().pass) return reports;
  VerifyOptions clamped = opts;
  clamped.comm_degree = std::min(opts.comm_degree, opts.degree);
  reports.push_back(check_algebroid_axioms(f));
  reports.push_back(check_lie_bracket(f, opts.lie_mode_min, opts.lie_mode_max));
  reports.push_back(check_graded_dimensions(f, opts.degree));
  reports.push_back(check_ope_coefficients(f));
  reports.push_back(check_virasoro_vector(f, opts.degree));
  reports.push_back(check_algebroid_recovery(f));
  reports.push_back(check_commutator_formula(f, clamped));
  reports.push_back(check_skew_symmetry(f));
  return reports;
}

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.pass; });
}

std::string render_human(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << r.name << ": " << (r.pass ? "pass" : "fail") << " (" << r.checked << " checked, "
       << r.failed << " failed)\n";
    if (!r.detail.empty()) {
      std::istringstream lines(r.detail);
      std::string line;
      while (std::getline(lines, line)) os << "  " << line << "\n";
    }
  }
  return os.str();
}

std::string render_machine(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    std::string detail = r.detail;
    for (auto& ch : detail)
      if (ch == '\t' || ch == '\n') ch = ' ';
    os << r.name << '\t' << (r.pass ? "pass" : "fail") << '\t' << "checked=" << r.checked
       << '\t' << "failed=" << r.failed << '\t' << detail << '\n';
  }
  return os.str();
}

}  // namespace fvir
