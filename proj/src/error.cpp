#include "wrep/error.hpp"

namespace wrep {

const char *error_name(ErrorKind kind)
{
	switch (kind)
	{
	case ErrorKind::Parse: return "ParseError";
	case ErrorKind::NotPrime: return "NotPrime";
	case ErrorKind::ReducibleModulus: return "ReducibleModulus";
	case ErrorKind::NoEmbedding: return "NoEmbedding";
	case ErrorKind::NotInSubfield: return "NotInSubfield";
	case ErrorKind::ZeroElement: return "ZeroElement";
	case ErrorKind::FieldBoundExceeded: return "FieldBoundExceeded";
	case ErrorKind::InvalidModel: return "InvalidModel";
	case ErrorKind::NotSquarefree: return "NotSquarefree";
	case ErrorKind::EquationMismatch: return "EquationMismatch";
	case ErrorKind::SingularMobius: return "SingularMobius";
	case ErrorKind::InvalidGenerator: return "InvalidGenerator";
	case ErrorKind::UnknownGenerator: return "UnknownGenerator";
	case ErrorKind::CapExceeded: return "CapExceeded";
	case ErrorKind::NoCanonicalShape: return "NoCanonicalShape";
	case ErrorKind::ShapeIncompatible: return "ShapeIncompatible";
	case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
	case ErrorKind::WeilViolation: return "WeilViolation";
	case ErrorKind::UnclassifiableRoot: return "UnclassifiableRoot";
	case ErrorKind::MultiClass: return "MultiClass";
	case ErrorKind::ClassMismatch: return "ClassMismatch";
	case ErrorKind::InvalidCharacterTable: return "InvalidCharacterTable";
	case ErrorKind::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
	case ErrorKind::NonIntegralDimension: return "NonIntegralDimension";
	}
	return "Error";
}

int exit_code(ErrorKind kind)
{
	switch (kind)
	{
	case ErrorKind::FieldBoundExceeded:
	case ErrorKind::NoCanonicalShape:
	case ErrorKind::CapExceeded:
		return 3;
	case ErrorKind::ShapeIncompatible:
	case ErrorKind::NonIntegralCoefficient:
	case ErrorKind::WeilViolation:
	case ErrorKind::UnclassifiableRoot:
	case ErrorKind::MultiClass:
	case ErrorKind::NonIntegralMultiplicity:
	case ErrorKind::NonIntegralDimension:
		return 4;
	default:
		return 2;
	}
}

} // namespace wrep
