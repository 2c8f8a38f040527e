#pragma once

#include <stdexcept>
#include <string>

namespace kf {

enum class Errc {
  DivisionByZero,
  NotDivisible,
  ShapeMismatch,
  ZeroMatrix,
  NotFullRank,
  RankDeficient,
  NotSquare,
  NotHermitian,
  Singular,
  DependentBasis,
  SingularGram,
  DegenerateKernel,
  NotSymmetric,
  QTooSmall,
  RangeConditionFails,
  NotNevanlinna,
  InternalVerificationFailed,
  NotANevanlinnaPair,
  NotJUnitary,
  PreconditionViolated,
  EmptyResolvent,
  BadMu,
  NotDefectBasis,
  PolynomialityFailed,
  ParseError,
  SchemaError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }
  // The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace kf
