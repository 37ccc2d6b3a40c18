#include "ekzero/errors.hpp"

namespace ekzero {

const char* errc_name(errc code) {
  switch (code) {
    case errc::non_positive_coefficient: return "NonPositiveCoefficient";
    case errc::too_short: return "TooShort";
    case errc::degenerate_tail: return "DegenerateTail";
    case errc::non_convergence: return "NonConvergence";
    case errc::no_positive_root: return "NoPositiveRoot";
    case errc::multiple_positive_roots: return "MultiplePositiveRoots";
    case errc::epsilon_out_of_range: return "EpsilonOutOfRange";
    case errc::hypothesis_violated: return "HypothesisViolated";
  }
  return "UnknownError";
}

}  // namespace ekzero
