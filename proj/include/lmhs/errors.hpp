#pragma once

#include <stdexcept>
#include <string>

namespace lmhs {

/// Base class for every error raised by the library. `kind()` is the stable
/// machine-readable name used in reports and exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define LMHS_DEFINE_ERROR(Name)                                       \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  };

LMHS_DEFINE_ERROR(DimensionMismatch)
LMHS_DEFINE_ERROR(NoSolution)
LMHS_DEFINE_ERROR(InvalidMHS)
LMHS_DEFINE_ERROR(WrongFiltration)
LMHS_DEFINE_ERROR(IndependenceViolation)
LMHS_DEFINE_ERROR(NoTriple)
LMHS_DEFINE_ERROR(UngradedInput)
LMHS_DEFINE_ERROR(NotFound)
LMHS_DEFINE_ERROR(NonDecomposable)
LMHS_DEFINE_ERROR(XiNotInFperp)
LMHS_DEFINE_ERROR(NotInCell)
LMHS_DEFINE_ERROR(NotIntegral)
LMHS_DEFINE_ERROR(NotInStabilizer)
LMHS_DEFINE_ERROR(BasisNotSpanning)
LMHS_DEFINE_ERROR(InvariantError)

#undef LMHS_DEFINE_ERROR

/// Input document does not match the schema. `path` is a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, std::string reason)
      : Error("SchemaError", path + ": " + reason),
        path_(std::move(path)),
        reason_(std::move(reason)) {}
  const std::string& path() const { return path_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string path_;
  std::string reason_;
};

}  // namespace lmhs
