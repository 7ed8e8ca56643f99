#include "padic/axioms.hpp"

#include <sstream>

namespace padic {

bool CheckReport::all_passed() const {
  for (const auto& l : lines) {
    if (!l.ok()) return false;
  }
  return true;
}

const CheckLine& CheckReport::line(const std::string& id) const {
  for (const auto& l : lines) {
    if (l.id == id) return l;
  }
  throw Error("report has no line with id '" + id + "'");
}

std::string format_line(const std::string& key, const CheckLine& line) {
  std::ostringstream os;
  os << key << '=' << line.id << " trials=" << line.trials << " pass=" << line.pass
     << " fail=" << line.fail << " undecided=" << line.undecided << " witness=" << line.witness;
  return os.str();
}

std::string format_report(const std::string& key, const CheckReport& report) {
  std::ostringstream os;
  for (const auto& l : report.lines) os << format_line(key, l) << '\n';
  return os.str();
}

}  // namespace padic
