#include "kf/error.hpp"

namespace kf {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ZeroMatrix: return "ZeroMatrix";
    case Errc::NotFullRank: return "NotFullRank";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::Singular: return "Singular";
    case Errc::DependentBasis: return "DependentBasis";
    case Errc::SingularGram: return "SingularGram";
    case Errc::DegenerateKernel: return "DegenerateKernel";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::QTooSmall: return "QTooSmall";
    case Errc::RangeConditionFails: return "RangeConditionFails";
    case Errc::NotNevanlinna: return "NotNevanlinna";
    case Errc::InternalVerificationFailed: return "InternalVerificationFailed";
    case Errc::NotANevanlinnaPair: return "NotANevanlinnaPair";
    case Errc::NotJUnitary: return "NotJUnitary";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::EmptyResolvent: return "EmptyResolvent";
    case Errc::BadMu: return "BadMu";
    case Errc::NotDefectBasis: return "NotDefectBasis";
    case Errc::PolynomialityFailed: return "PolynomialityFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace kf
