#ifndef WIGREC_ERRORS_HPP
#define WIGREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wigrec {

enum class Errc {
  DivisionByZero,
  DimensionMismatch,
  FieldMismatch,
  Singular,
  NotNormalized,
  NotIdempotent,
  ZeroInput,
  InfiniteField,
  CharTwo,
  DomainGap,
  DependentBasis,
  NotInnerForm,
  SingularCandidate,
  NotAPreserver,
  NoSquareRoot,
  NotOrthogonalForm,
  NotASymmetry,
  AmbiguousPhase,
  BudgetExceeded,
  ParseError,
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace wigrec

#endif
