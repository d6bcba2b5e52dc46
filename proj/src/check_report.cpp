#include "qcalc/check_report.hpp"

#include <sstream>

namespace qcalc {

std::string CheckReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.law << " at (";
    for (size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ", ";
      os << v.witness[i];
    }
    os << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace qcalc
