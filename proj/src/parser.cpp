#include "fvir/parser.hpp"

#include <cctype>
#include <sstream>

namespace fvir {

ParseError::ParseError(int line_, int col_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " +
                         msg),
      line(line_),
      col(col_) {}

namespace {

struct Token {
  std::string text;
  int col = 0;
};

bool is_word(const std::string& t) {
  if (t.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(t[0])) && t[0] != '_') return false;
  for (char ch : t)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '.') return false;
  return true;
}

bool is_plain_label(const std::string& t) {
  return is_word(t) && t.find('.') == std::string::npos;
}

std::vector<Token> tokenize(const std::string& raw, int line_no) {
  std::string text = raw;
  if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    out.push_back({text.substr(start, i - start), static_cast<int>(start) + 1});
  }
  (void)line_no;
  return out;
}

/// Cursor over one logical line of tokens.
struct Line {
  int no = 0;
  std::vector<Token> tokens;
  std::size_t pos = 0;

  bool done() const { return pos >= tokens.size(); }
  const Token& peek() const { return tokens[pos]; }
  const Token& peek_or_fail(const std::string& what) {
    if (done()) fail("expected " + what);
    return tokens[pos];
  }
  Token take() { return tokens[pos++]; }
  Token take_or_fail(const std::string& what) {
    if (done()) fail("expected " + what);
    return take();
  }
  int end_col() const { return tokens.empty() ? 1 : tokens.back().col + static_cast<int>(tokens.back().text.size()); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(no, done() ? end_col() : peek().col, msg);
  }

  std::string word(const std::string& what) {
    if (done()) fail("expected " + what);
    Token t = take();
    if (!is_plain_label(t.text)) throw ParseError(no, t.col, "expected " + what + ", got '" + t.text + "'");
    return t.text;
  }

  void expect(const std::string& lit) {
    if (done()) fail("expected '" + lit + "'");
    Token t = take();
    if (t.text != lit) throw ParseError(no, t.col, "expected '" + lit + "', got '" + t.text + "'");
  }

  Scalar rational(const std::string& what) {
    if (done()) fail("expected " + what);
    Token t = take();
    auto s = parse_scalar(t.text);
    if (!s) throw ParseError(no, t.col, "malformed rational '" + t.text + "' (" + what + ")");
    return *s;
  }
};

bool looks_rational(const std::string& t) {
  return !t.empty() && (std::isdigit(static_cast<unsigned char>(t[0])) ||
                        ((t[0] == '+' || t[0] == '-') && t.size() > 1 &&
                         std::isdigit(static_cast<unsigned char>(t[1]))));
}

int find_label(const std::vector<std::string>& labels, const std::string& name) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return static_cast<int>(i);
  return -1;
}

int require_label(Line& line, const Token& tok, const std::vector<std::string>& labels,
                  const std::string& kind) {
  const int idx = find_label(labels, tok.text);
  if (idx < 0) throw ParseError(line.no, tok.col, "undeclared " + kind + " label '" + tok.text + "'");
  return idx;
}

std::vector<std::string> read_labels(Line& line, const std::string& kind) {
  std::vector<std::string> labels;
  while (!line.done()) {
    Token t = line.take();
    if (!is_plain_label(t.text))
      throw ParseError(line.no, t.col, "bad " + kind + " label '" + t.text + "'");
    if (find_label(labels, t.text) >= 0)
      throw ParseError(line.no, t.col, "duplicate " + kind + " label '" + t.text + "'");
    labels.push_back(t.text);
  }
  if (labels.empty()) line.fail("expected at least one " + kind + " label");
  return labels;
}

/// unit/baseunit right-hand side: <term> [+ <term>...], term = [rational] label.
Vec read_unit(Line& line, const std::vector<std::string>& labels, const std::string& kind) {
  Vec unit(labels.size(), Scalar(0));
  bool first = true;
  while (true) {
    if (line.done()) {
      if (first) line.fail("expected " + kind + " term");
      break;
    }
    if (!first) line.expect("+");
    if (line.done()) line.fail("expected " + kind + " term after '+'");
    Scalar coeff(1);
    if (looks_rational(line.peek().text)) coeff = line.rational(kind + " coefficient");
    if (line.done()) line.fail("expected " + kind + " label");
    Token t = line.take();
    if (!is_plain_label(t.text))
      throw ParseError(line.no, t.col, "bad " + kind + " label '" + t.text + "'");
    unit[static_cast<std::size_t>(require_label(line, t, labels, kind))] += coeff;
    first = false;
  }
  return unit;
}

/// mul/basemul right-hand side: <coeff> <label> [+ ...].
Vec read_combination(Line& line, const std::vector<std::string>& labels, const std::string& kind) {
  Vec out(labels.size(), Scalar(0));
  bool first = true;
  while (true) {
    if (line.done()) {
      if (first) line.fail("expected a coefficient and a " + kind + " label");
      break;
    }
    if (!first) line.expect("+");
    Scalar coeff = line.rational(kind + " coefficient");
    if (line.done()) line.fail("expected " + kind + " label");
    Token t = line.take();
    if (!is_plain_label(t.text))
      throw ParseError(line.no, t.col, "bad " + kind + " label '" + t.text + "'");
    out[static_cast<std::size_t>(require_label(line, t, labels, kind))] += coeff;
    first = false;
  }
  return out;
}

MultTensor make_tensor(std::size_t d) {
  return MultTensor(d, Matrix(d, Vec(d, Scalar(0))));
}

struct AlgebraBuilder {
  AlgebraSpec spec;
  bool have_basis = false, have_unit = false;
  std::vector<std::vector<bool>> mul_seen, form_seen;

  void need_basis(const Line& line) {
    if (!have_basis) throw ParseError(line.no, line.tokens[0].col, "basis must be declared first");
  }
};

struct AlgebroidBuilder {
  AlgebroidSpec spec;
  bool have_base = false, have_base_unit = false, have_basis = false;
  std::vector<std::vector<bool>> basemul_seen, op1_seen, op0t_seen, form_seen;

  void need_base(const Line& line) {
    if (!have_base) throw ParseError(line.no, line.tokens[0].col, "base must be declared first");
  }
  void need_basis(const Line& line) {
    if (!have_basis) throw ParseError(line.no, line.tokens[0].col, "basis must be declared first");
  }
};

AlgebraSpec parse_algebra(std::vector<Line>& lines, std::size_t start, const std::string& name) {
  AlgebraBuilder b;
  b.spec.name = name;
  int last_line = lines.empty() ? 1 : lines.back().no;
  for (std::size_t li = start; li < lines.size(); ++li) {
    Line& line = lines[li];
    Token head = line.take();
    if (head.text == "basis") {
      if (b.have_basis) throw ParseError(line.no, head.col, "duplicate basis directive");
      b.spec.labels = read_labels(line, "basis");
      const std::size_t d = b.spec.labels.size();
      b.spec.mult = make_tensor(d);
      b.spec.unit.assign(d, Scalar(0));
      b.spec.form.assign(d, Vec(d, Scalar(0)));
      b.mul_seen.assign(d, std::vector<bool>(d, false));
      b.form_seen.assign(d, std::vector<bool>(d, false));
      b.have_basis = true;
    } else if (head.text == "unit") {
      b.need_basis(line);
      if (b.have_unit) throw ParseError(line.no, head.col, "duplicate unit directive");
      b.spec.unit = read_unit(line, b.spec.labels, "basis");
      b.have_unit = true;
    } else if (head.text == "mul") {
      b.need_basis(line);
      Token ta = line.peek_or_fail("two labels");
      const int i = require_label(line, line.take_or_fail("a basis label"), b.spec.labels, "basis");
      const int j = require_label(line, line.take_or_fail("a basis label"), b.spec.labels, "basis");
      line.expect("=");
      if (b.mul_seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        throw ParseError(line.no, ta.col, "duplicate mul entry");
      b.mul_seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
      b.spec.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          read_combination(line, b.spec.labels, "basis");
    } else if (head.text == "form") {
      b.need_basis(line);
      Token ta = line.peek_or_fail("two labels");
      const int i = require_label(line, line.take_or_fail("a basis label"), b.spec.labels, "basis");
      const int j = require_label(line, line.take_or_fail("a basis label"), b.spec.labels, "basis");
      line.expect("=");
      if (b.form_seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        throw ParseError(line.no, ta.col, "duplicate form entry");
      b.form_seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
      b.spec.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          line.rational("form value");
      if (!line.done()) line.fail("unexpected trailing tokens");
    } else {
      throw ParseError(line.no, head.col, "unknown directive '" + head.text + "'");
    }
    last_line = line.no;
  }
  if (!b.have_basis) throw ParseError(last_line, 1, "missing basis directive");
  if (!b.have_unit) throw ParseError(last_line, 1, "missing unit directive");
  return b.spec;
}

AlgebroidSpec parse_algebroid(std::vector<Line>& lines, std::size_t start, const std::string& name) {
  AlgebroidBuilder b;
  b.spec.name = name;
  int last_line = lines.empty() ? 1 : lines.back().no;
  for (std::size_t li = start; li < lines.size(); ++li) {
    Line& line = lines[li];
    Token head = line.take();
    const std::size_t da = b.spec.base_labels.size();
    if (head.text == "base") {
      if (b.have_base) throw ParseError(line.no, head.col, "duplicate base directive");
      b.spec.base_labels = read_labels(line, "base");
      const std::size_t d = b.spec.base_labels.size();
      b.spec.base_mult = make_tensor(d);
      b.spec.base_unit.assign(d, Scalar(0));
      b.basemul_seen.assign(d, std::vector<bool>(d, false));
      b.have_base = true;
    } else if (head.text == "baseunit") {
      b.need_base(line);
      if (b.have_base_unit) throw ParseError(line.no, head.col, "duplicate baseunit directive");
      b.spec.base_unit = read_unit(line, b.spec.base_labels, "base");
      b.have_base_unit = true;
    } else if (head.text == "basemul") {
      b.need_base(line);
      Token ta = line.peek_or_fail("two labels");
      const int i = require_label(line, line.take_or_fail("a base label"), b.spec.base_labels, "base");
      const int j = require_label(line, line.take_or_fail("a base label"), b.spec.base_labels, "base");
      line.expect("=");
      if (b.basemul_seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        throw ParseError(line.no, ta.col, "duplicate basemul entry");
      b.basemul_seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
      b.spec.base_mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          read_combination(line, b.spec.base_labels, "base");
    } else if (head.text == "basis") {
      b.need_base(line);
      if (!b.have_base_unit)
        throw ParseError(line.no, head.col, "baseunit must be declared before basis");
      if (b.have_basis) throw ParseError(line.no, head.col, "duplicate basis directive");
      b.spec.labels = read_labels(line, "module");
      const std::size_t r = b.spec.labels.size();
      b.spec.op1.assign(r, std::vector<V2Elem>(r, V2Elem(r, AElem(da, Scalar(0)))));
      b.spec.op0t.assign(r, std::vector<V2Elem>(r, V2Elem(r, AElem(da, Scalar(0)))));
      b.spec.form.assign(r, std::vector<AElem>(r, AElem(da, Scalar(0))));
      b.op1_seen.assign(r, std::vector<bool>(r, false));
      b.op0t_seen.assign(r, std::vector<bool>(r, false));
      b.form_seen.assign(r, std::vector<bool>(r, false));
      b.have_basis = true;
    } else if (head.text == "op1" || head.text == "op0t") {
      b.need_basis(line);
      Token ta = line.peek_or_fail("two labels");
      const int i = require_label(line, line.take_or_fail("a module label"), b.spec.labels, "module");
      const int j = require_label(line, line.take_or_fail("a module label"), b.spec.labels, "module");
      line.expect("=");
      auto& seen = head.text == "op1" ? b.op1_seen : b.op0t_seen;
      if (seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        throw ParseError(line.no, ta.col, "duplicate " + head.text + " entry");
      seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
      auto& cell = (head.text == "op1" ? b.spec.op1 : b.spec.op0t)[static_cast<std::size_t>(i)]
                                                                  [static_cast<std::size_t>(j)];
      bool first = true;
      while (true) {
        if (line.done()) {
          if (first) line.fail("expected a coefficient and a module label");
          break;
        }
        if (!first) line.expect("+");
        Scalar coeff = line.rational("coefficient");
        if (line.done()) line.fail("expected module label");
        Token t = line.take();
        if (!is_word(t.text)) throw ParseError(line.no, t.col, "bad term '" + t.text + "'");
        const auto dot = t.text.find('.');
        if (dot == std::string::npos) {
          const int k = require_label(line, t, b.spec.labels, "module");
          for (std::size_t p = 0; p < da; ++p)
            cell[static_cast<std::size_t>(k)][p] += coeff * b.spec.base_unit[p];
        } else {
          Token atok{t.text.substr(0, dot), t.col};
          Token vtok{t.text.substr(dot + 1), t.col + static_cast<int>(dot) + 1};
          if (!is_plain_label(atok.text) || !is_plain_label(vtok.text))
            throw ParseError(line.no, t.col, "bad term '" + t.text + "'");
          const int p = require_label(line, atok, b.spec.base_labels, "base");
          const int k = require_label(line, vtok, b.spec.labels, "module");
          cell[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] += coeff;
        }
        first = false;
      }
    } else if (head.text == "form") {
      b.need_basis(line);
      Token ta = line.peek_or_fail("two labels");
      const int i = require_label(line, line.take_or_fail("a module label"), b.spec.labels, "module");
      const int j = require_label(line, line.take_or_fail("a module label"), b.spec.labels, "module");
      line.expect("=");
      if (b.form_seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        throw ParseError(line.no, ta.col, "duplicate form entry");
      b.form_seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
      auto& cell = b.spec.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      bool first = true;
      while (true) {
        if (line.done()) {
          if (first) line.fail("expected a form value");
          break;
        }
        if (!first) line.expect("+");
        Scalar coeff = line.rational("form coefficient");
        if (!line.done() && line.peek().text != "+") {
          Token t = line.take();
          if (!is_plain_label(t.text)) throw ParseError(line.no, t.col, "bad base label '" + t.text + "'");
          const int p = require_label(line, t, b.spec.base_labels, "base");
          cell[static_cast<std::size_t>(p)] += coeff;
        } else {
          for (std::size_t p = 0; p < da; ++p) cell[p] += coeff * b.spec.base_unit[p];
        }
        first = false;
      }
    } else {
      throw ParseError(line.no, head.col, "unknown directive '" + head.text + "'");
    }
    last_line = line.no;
  }
  if (!b.have_base) throw ParseError(last_line, 1, "missing base directive");
  if (!b.have_base_unit) throw ParseError(last_line, 1, "missing baseunit directive");
  if (!b.have_basis) throw ParseError(last_line, 1, "missing basis directive");
  return b.spec;
}

}  // namespace

ParsedSpec parse(std::string_view text) {
  std::vector<Line> lines;
  {
    std::istringstream is{std::string(text)};
    std::string raw;
    int no = 0;
    while (std::getline(is, raw)) {
      ++no;
      auto tokens = tokenize(raw, no);
      if (!tokens.empty()) lines.push_back({no, std::move(tokens), 0});
    }
  }
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  Line& first = lines[0];
  Token head = first.take();
  if (head.text != "algebra" && head.text != "algebroid")
    throw ParseError(first.no, head.col, "input must start with 'algebra <name>' or 'algebroid <name>'");
  const std::string name = first.word("name");
  if (!first.done()) first.fail("unexpected trailing tokens");
  if (head.text == "algebra") return parse_algebra(lines, 1, name);
  return parse_algebroid(lines, 1, name);
}

FrobeniusAlgebra to_algebra(const AlgebraSpec& spec) {
  FrobeniusAlgebra f;
  f.dim = static_cast<int>(spec.labels.size());
  f.labels = spec.labels;
  f.mult = spec.mult;
  f.unit = spec.unit;
  f.form = spec.form;
  check_shape(f);
  return f;
}

VirasoroAlgebroid to_algebroid(const AlgebroidSpec& spec) {
  VirasoroAlgebroid va;
  va.base.dim = static_cast<int>(spec.base_labels.size());
  va.base.labels = spec.base_labels;
  va.base.mult = spec.base_mult;
  va.base.unit = spec.base_unit;
  va.rank = static_cast<int>(spec.labels.size());
  va.labels = spec.labels;
  va.op1 = spec.op1;
  va.op0t = spec.op0t;
  va.form = spec.form;
  check_shape(va);
  return va;
}

AlgebraSpec to_spec(const FrobeniusAlgebra& f, std::string name) {
  check_shape(f);
  AlgebraSpec spec;
  spec.name = std::move(name);
  spec.labels = f.labels;
  spec.mult = f.mult;
  spec.unit = f.unit;
  spec.form = f.form;
  return spec;
}

AlgebroidSpec to_spec(const VirasoroAlgebroid& va, std::string name) {
  check_shape(va);
  AlgebroidSpec spec;
  spec.name = std::move(name);
  spec.base_labels = va.base.labels;
  spec.base_mult = va.base.mult;
  spec.base_unit = va.base.unit;
  spec.labels = va.labels;
  spec.op1 = va.op1;
  spec.op0t = va.op0t;
  spec.form = va.form;
  return spec;
}

namespace {

void print_combination(std::ostream& os, const Vec& v, const std::vector<std::string>& labels) {
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    os << (first ? " " : " + ") << scalar_str(v[k]) << ' ' << labels[k];
    first = false;
  }
}

}  // namespace

std::string print(const AlgebraSpec& spec) {
  std::ostringstream os;
  os << "algebra " << spec.name << '\n';
  os << "basis";
  for (const auto& l : spec.labels) os << ' ' << l;
  os << '\n';
  os << "unit";
  print_combination(os, spec.unit, spec.labels);
  os << '\n';
  const std::size_t d = spec.labels.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (is_zero(spec.mult[i][j])) continue;
      os << "mul " << spec.labels[i] << ' ' << spec.labels[j] << " =";
      print_combination(os, spec.mult[i][j], spec.labels);
      os << '\n';
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (spec.form[i][j] == 0) continue;
      os << "form " << spec.labels[i] << ' ' << spec.labels[j] << " = " << scalar_str(spec.form[i][j])
         << '\n';
    }
  return os.str();
}

std::string print(const AlgebroidSpec& spec) {
  std::ostringstream os;
  os << "algebroid " << spec.name << '\n';
  os << "base";
  for (const auto& l : spec.base_labels) os << ' ' << l;
  os << '\n';
  os << "baseunit";
  print_combination(os, spec.base_unit, spec.base_labels);
  os << '\n';
  const std::size_t da = spec.base_labels.size();
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      if (is_zero(spec.base_mult[i][j])) continue;
      os << "basemul " << spec.base_labels[i] << ' ' << spec.base_labels[j] << " =";
      print_combination(os, spec.base_mult[i][j], spec.base_labels);
      os << '\n';
    }
  os << "basis";
  for (const auto& l : spec.labels) os << ' ' << l;
  os << '\n';
  const std::size_t r = spec.labels.size();
  auto print_table = [&](const char* head, const std::vector<std::vector<V2Elem>>& table) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        bool any = false;
        for (const auto& a : table[i][j])
          if (!is_zero(a)) any = true;
        if (!any) continue;
        os << head << ' ' << spec.labels[i] << ' ' << spec.labels[j] << " =";
        bool first = true;
        for (std::size_t k = 0; k < r; ++k)
          for (std::size_t p = 0; p < da; ++p) {
            const Scalar& c = table[i][j][k][p];
            if (c == 0) continue;
            os << (first ? " " : " + ") << scalar_str(c) << ' ' << spec.base_labels[p] << '.'
               << spec.labels[k];
            first = false;
          }
        os << '\n';
      }
  };
  print_table("op1", spec.op1);
  print_table("op0t", spec.op0t);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (is_zero(spec.form[i][j])) continue;
      os << "form " << spec.labels[i] << ' ' << spec.labels[j] << " =";
      bool first = true;
      for (std::size_t p = 0; p < da; ++p) {
        const Scalar& c = spec.form[i][j][p];
        if (c == 0) continue;
        os << (first ? " " : " + ") << scalar_str(c) << ' ' << spec.base_labels[p];
        first = false;
      }
      os << '\n';
    }
  return os.str();
}

}  // namespace fvir
