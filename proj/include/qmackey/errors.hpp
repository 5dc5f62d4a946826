#pragma once

#include <stdexcept>
#include <string>

namespace qm {

enum class ErrorKind {
  NotAGroup,
  NotRootsOfUnity,
  NotProjective,
  CocycleMismatch,
  NotScalarRelated,
  NotAutomorphism,
  NotAntihomomorphism,
  NoUniqueHaar,
  PeterWeylMismatch,
  OrbitResolutionFailure,
  NoPositiveIntertwiner,
  NotCovariant,
  CovarianceFailure,
  ProjectionNotInvariant,
  FormulaMismatch,
  OracleDisagreement,
  NotStabilized,
  GaugeFailure,
  CompletenessFailure,
  GramFailure,
  NonUnitaryExtraction,
  NonIntegerCoefficient,
  NotInteger,
  ParseError,
  ValidationError,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& msg)
      : std::runtime_error(std::string(kind_name(k)) + ": " + msg), kind_(k) {}
  ErrorKind kind() const { return kind_; }

  // Disagreements between independent computations, as opposed to bad input.
  bool is_oracle_failure() const {
    return kind_ == ErrorKind::OracleDisagreement || kind_ == ErrorKind::FormulaMismatch ||
           kind_ == ErrorKind::GramFailure || kind_ == ErrorKind::CompletenessFailure;
  }

 private:
  ErrorKind kind_;
};

}  // namespace qm
