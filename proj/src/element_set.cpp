#include "wfam/element_set.hpp"

namespace wfam {

std::string element_set::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace wfam
