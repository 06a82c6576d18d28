#ifndef TOTALB_ERRORS_HPP
#define TOTALB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace totalb {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
	explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-contract input: parse failures, colour values outside
// [1, k], parameters outside a generator's documented range, graphs that do
// not satisfy a documented precondition of the operation being invoked.
class InputError : public Error {
  public:
	explicit InputError(const std::string& what) : Error(what) {}
};

// The graph lacks structure an algorithm needs (for example a spine vertex
// with too few pendant leaves to host a required assignment).  The message
// names the offending vertex or element.
class StructuralError : public Error {
  public:
	explicit StructuralError(const std::string& what) : Error(what) {}
};

// A colouring offered as a certificate does not satisfy the property the
// transformation relies on.
class CertificateError : public Error {
  public:
	explicit CertificateError(const std::string& what) : Error(what) {}
};

// A postcondition the library guarantees failed to hold.  Indicates a bug in
// the library itself, never user input; constructions verify their own output
// and raise this rather than returning a bad colouring.
class InternalError : public Error {
  public:
	explicit InternalError(const std::string& what) : Error(what) {}
};

// Raised by the exact solver when the node budget is exhausted before the
// search finishes.  Carries the best bounds established so far.
class BudgetExceeded : public Error {
  public:
	BudgetExceeded(const std::string& what, int lower, int upper)
	    : Error(what), lower_bound(lower), upper_bound(upper) {}
	int lower_bound;
	int upper_bound;
};

}  // namespace totalb

#endif  // TOTALB_ERRORS_HPP
