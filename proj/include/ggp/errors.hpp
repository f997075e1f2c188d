#ifndef GGP_ERRORS_HPP
#define GGP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ggp {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what = "invalid input") : Error(what) {}
};

/// Raised when an enumeration would exceed the configured state budget.
/// Carries the number of states visited before giving up.
class BudgetExceeded : public Error {
public:
    long long visited;
    explicit BudgetExceeded(long long n, const std::string& what = "enumeration budget exceeded")
        : Error(what), visited(n) {}
};

class NonRegular : public Error {
public:
    explicit NonRegular(const std::string& what = "point lies on a hyperplane") : Error(what) {}
};

class NonSplitting : public Error {
public:
    explicit NonSplitting(const std::string& what = "characteristic polynomial does not split over Z")
        : Error(what) {}
};

class TheoremViolation : public Error {
public:
    explicit TheoremViolation(const std::string& what) : Error(what) {}
};

class NegativeMultiplicity : public Error {
public:
    explicit NegativeMultiplicity(const std::string& what = "weight multiset is not an sl2 character")
        : Error(what) {}
};

class OutsidePolytope : public Error {
public:
    explicit OutsidePolytope(const std::string& what = "point outside the good grading polytope")
        : Error(what) {}
};

class InvalidPartition : public Error {
public:
    explicit InvalidPartition(const std::string& what = "partition violates the type parity rule")
        : Error(what) {}
};

class Unsupported : public Error {
public:
    explicit Unsupported(const std::string& what = "unsupported nilpotent representative") : Error(what) {}
};

} // namespace ggp

#endif
