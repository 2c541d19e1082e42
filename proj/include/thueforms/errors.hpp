#ifndef THUEFORMS_ERRORS_HPP
#define THUEFORMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thue {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

// numfield
struct NotMonic : Error {
    explicit NotMonic(const std::string& msg = "defining polynomial is not monic") : Error(msg) {}
};
struct NotSquarefree : Error {
    explicit NotSquarefree(const std::string& msg = "polynomial is not squarefree") : Error(msg) {}
};
struct IrreducibilityFailed : Error {
    explicit IrreducibilityFailed(const std::string& msg = "polynomial failed the irreducibility gate") : Error(msg) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero field element") : Error(msg) {}
};
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg = "elements belong to different fields") : Error(msg) {}
};
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& msg = "cannot certify result at the working precision") : Error(msg) {}
};

// forms
struct NotAUnit : Error {
    explicit NotAUnit(const std::string& msg = "eps is not a unit") : Error(msg) {}
};
struct TorsionUnit : Error {
    explicit TorsionUnit(const std::string& msg = "eps is a root of unity") : Error(msg) {}
};
struct AlphaNotPrimitive : Error {
    explicit AlphaNotPrimitive(const std::string& msg = "alpha does not generate the field") : Error(msg) {}
};
struct AlphaZero : Error {
    explicit AlphaZero(const std::string& msg = "alpha must be nonzero") : Error(msg) {}
};
struct NotIntegral : Error {
    explicit NotIntegral(const std::string& msg = "element is not an algebraic integer") : Error(msg) {}
};
struct DegenerateDegree : Error {
    int actual_degree;
    explicit DegenerateDegree(int deg)
        : Error("alpha*eps^a has degree " + std::to_string(deg) + " < field degree"),
          actual_degree(deg) {}
};

// recurrences
struct WindowTooShort : Error {
    explicit WindowTooShort(const std::string& msg = "sequence window too short") : Error(msg) {}
};
struct NoRecurrenceFound : Error {
    explicit NoRecurrenceFound(const std::string& msg = "no recurrence within the probed order") : Error(msg) {}
};
struct NotIrreducible : Error {
    explicit NotIrreducible(const std::string& msg = "unit minimal polynomial is reducible") : Error(msg) {}
};
struct OddDegreeUnsupported : Error {
    explicit OddDegreeUnsupported(const std::string& msg = "dual characteristic polynomial requires even field degree") : Error(msg) {}
};

// families
struct UnsupportedIndex : Error {
    explicit UnsupportedIndex(const std::string& msg = "no closed form for this coefficient index") : Error(msg) {}
};
struct InvalidParams : Error {
    explicit InvalidParams(const std::string& msg) : Error(msg) {}
};

} // namespace thue

#endif
