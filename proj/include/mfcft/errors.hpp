#pragma once

#include <stdexcept>
#include <string>

namespace mfcft {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define MFCFT_ERROR(Name)                                   \
  struct Name : Error {                                     \
    explicit Name(const std::string& what = #Name)          \
        : Error(std::string(#Name) + ": " + what) {}        \
  }

MFCFT_ERROR(DivisionByZero);
MFCFT_ERROR(ModulusMismatch);
MFCFT_ERROR(DegenerateRoot);
MFCFT_ERROR(EvenModulus);
MFCFT_ERROR(NotCoprime);
MFCFT_ERROR(NotDivisible);
MFCFT_ERROR(VariableMismatch);
MFCFT_ERROR(RankUnsupported);
MFCFT_ERROR(TooManyInternalVariables);
MFCFT_ERROR(InfiniteHomology);
MFCFT_ERROR(NotPolynomial);
MFCFT_ERROR(StrandMismatch);
MFCFT_ERROR(UndefinedProjector);
MFCFT_ERROR(ParityViolation);
MFCFT_ERROR(OddModulus);
MFCFT_ERROR(ShapeMismatch);
MFCFT_ERROR(OutOfRange);

#undef MFCFT_ERROR

}  // namespace mfcft
