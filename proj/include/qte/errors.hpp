#pragma once

#include <stdexcept>
#include <string>

namespace qte {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorCategory : int { Config = 2, Data = 3, Numeric = 4 };

class Error : public std::runtime_error {
public:
  Error(ErrorCategory cat, const std::string& name, const std::string& msg)
      : std::runtime_error(name + ": " + msg), category_(cat), name_(name) {}

  ErrorCategory category() const { return category_; }
  const std::string& name() const { return name_; }

private:
  ErrorCategory category_;
  std::string name_;
};

#define QTE_DEFINE_ERROR(NAME, CATEGORY)                            \
  class NAME : public Error {                                       \
  public:                                                           \
    explicit NAME(const std::string& msg)                           \
        : Error(ErrorCategory::CATEGORY, #NAME, msg) {}             \
  }

// Data-shape errors (exit 3).
QTE_DEFINE_ERROR(UnbalancedTreatment, Data);
QTE_DEFINE_ERROR(BadPair, Data);
QTE_DEFINE_ERROR(ParseError, Data);
QTE_DEFINE_ERROR(OddCount, Data);
QTE_DEFINE_ERROR(EmptyInput, Data);

// Configuration errors (exit 2). MissingPairs is config-class: it means a
// mode was requested that the input's structure cannot support.
QTE_DEFINE_ERROR(MissingPairs, Config);
QTE_DEFINE_ERROR(BadSpec, Config);
QTE_DEFINE_ERROR(BadConfig, Config);

// Numerical failures (exit 4).
QTE_DEFINE_ERROR(SingularDesign, Numeric);
QTE_DEFINE_ERROR(LeverageOne, Numeric);
QTE_DEFINE_ERROR(ZeroTotalWeight, Numeric);
QTE_DEFINE_ERROR(ZeroSe, Numeric);
QTE_DEFINE_ERROR(TooFewDraws, Numeric);
QTE_DEFINE_ERROR(QuadratureFailure, Numeric);
QTE_DEFINE_ERROR(AllCandidatesFailed, Numeric);

#undef QTE_DEFINE_ERROR

}  // namespace qte
