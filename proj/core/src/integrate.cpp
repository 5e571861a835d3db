#include "symlie/integrate.hpp"

namespace symlie {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Vrkmk: return "vrkmk";
    case Method::Vcg: return "vcg";
    case Method::Rkmk: return "rkmk";
    case Method::Cg: return "cg";
    case Method::Sprk: return "sprk";
  }
  return "?";
}

Method method_from_string(std::string_view id) {
  for (Method m : {Method::Vrkmk, Method::Vcg, Method::Rkmk, Method::Cg, Method::Sprk}) {
    if (to_string(m) == id) return m;
  }
  fail(ErrorKind::InvalidInput, "unknown method '" + std::string(id) + "'");
}

}  // namespace symlie
