#include "symlie/error.hpp"

namespace symlie {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::BranchCut: return "BranchCut";
    case ErrorKind::Singularity: return "Singularity";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::Divergence: return "Divergence";
    case ErrorKind::CalibrationMissing: return "CalibrationMissing";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace symlie
