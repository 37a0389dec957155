#include "fvir/report.hpp"

#include <sstream>

namespace fvir {

std::string ValidationReport::describe() const {
  std::ostringstream os;
  if (violations.empty()) {
    os << "all identities hold";
  } else {
    os << violations.size() << " violation(s)";
  }
  for (const auto& v : violations) {
    os << "\n  " << v.identity << " at (";
    for (std::size_t i = 0; i < v.where.size(); ++i) {
      if (i) os << ",";
      os << v.where[i];
    }
    os << "): lhs = " << v.lhs << ", rhs = " << v.rhs;
    if (v.count > 1) os << "  [" << v.count << " failing instances]";
  }
  if (form_rank >= 0) os << "\n  form rank: " << form_rank;
  return os.str();
}

}  // namespace fvir
