#ifndef GOODSLICE_ERRORS_HPP
#define GOODSLICE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace goodslice {

// One exception type for the whole library; `kind` tells callers (and the
// CLI exit-code mapping) whether the failure is mathematical degeneracy or
// a malformed input.
class MathError : public std::runtime_error {
 public:
  enum class Kind {
    BadInput,               // malformed/contract-violating input
    SingularMatrix,         // inverse of an (identically) singular matrix
    MultipleRoot,           // quartic with vanishing discriminant
    DegenerateSlice,        // t in {0, 1/4} or an infinity marker
    NeedsNumericExtension,  // exact normalization demands an irrational root
    NumericFailure          // tolerance not met / divergence / NaN
  };

  MathError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}

  Kind kind;
};

inline bool is_degenerate_kind(MathError::Kind k) {
  return k == MathError::Kind::MultipleRoot || k == MathError::Kind::DegenerateSlice;
}

}  // namespace goodslice

#endif
