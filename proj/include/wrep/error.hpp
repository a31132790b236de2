#pragma once

#include <stdexcept>
#include <string>

namespace wrep {

enum class ErrorKind {
	Parse,
	NotPrime,
	ReducibleModulus,
	NoEmbedding,
	NotInSubfield,
	ZeroElement,
	FieldBoundExceeded,
	InvalidModel,
	NotSquarefree,
	EquationMismatch,
	SingularMobius,
	InvalidGenerator,
	UnknownGenerator,
	CapExceeded,
	NoCanonicalShape,
	ShapeIncompatible,
	NonIntegralCoefficient,
	WeilViolation,
	UnclassifiableRoot,
	MultiClass,
	ClassMismatch,
	InvalidCharacterTable,
	NonIntegralMultiplicity,
	NonIntegralDimension,
};

const char *error_name(ErrorKind kind);

// Process exit status for a failure of this kind:
// 2 validation/parse, 3 solvability or bound, 4 mathematical inconsistency.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error
{
  public:
	Error(ErrorKind kind, const std::string &msg)
	    : std::runtime_error(std::string(error_name(kind)) + ": " + msg), kind_(kind)
	{}
	ErrorKind kind() const { return kind_; }

  private:
	ErrorKind kind_;
};

} // namespace wrep
