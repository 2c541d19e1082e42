#ifndef THUEFORMS_FORMS_HPP
#define THUEFORMS_FORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "thueforms/numfield.hpp"

namespace thue {

// Integer binary form F(X,Y) = sum_h c_h X^(d-h) Y^h with c_0 > 0.
struct BinaryForm {
    int degree;
    std::vector<Int> coeffs; // c_0 .. c_d

    Int evaluate(const Int& x, const Int& y) const;
    bool operator==(const BinaryForm& o) const = default;
    std::string str() const;
};

// The pair (alpha, eps) over K, with the invariants delta = absolute norm of
// eps over Q(eps) and nu = [K : Q(eps)].
class TwistedFamily {
public:
    TwistedFamily(FieldPtr field, FieldElement alpha, FieldElement eps);

    const FieldPtr& field() const { return field_; }
    const FieldElement& alpha() const { return alpha_; }
    const FieldElement& eps() const { return eps_; }
    int delta() const { return delta_; }
    int nu() const { return nu_; }
    int degree() const { return field_->degree(); }
    const IntPoly& eps_min_poly() const { return eps_min_poly_; }

    FieldElement alpha_eps_pow(long a) const; // alpha * eps^a, exact

private:
    FieldPtr field_;
    FieldElement alpha_;
    FieldElement eps_;
    FieldElement eps_inv_;
    IntPoly eps_min_poly_;
    int delta_;
    int nu_;
};

TwistedFamily family_new(const FieldPtr& field, const FieldElement& alpha,
                         const FieldElement& eps);

// Homogenized minimal polynomial of alpha*eps^a; throws DegenerateDegree when
// [Q(alpha*eps^a) : Q] < d.
BinaryForm form_at(const TwistedFamily& family, long a);

// U_h(a) = (-1)^h c_h of form_at
Int coefficient_U(const TwistedFamily& family, int h, long a);

struct AdmissibleReport {
    std::vector<long> admissible;
    std::vector<std::pair<long, int>> excluded; // (a, actual degree)
};
AdmissibleReport admissible_range(const TwistedFamily& family, long a_min, long a_max);

struct UdReport {
    bool pass = true;
    std::optional<long> first_failure;     // a with U_d(a) != delta^nu * U_d(a-1)
    std::vector<long> skipped_degenerate;
    long pairs_checked = 0;
};
UdReport check_Ud_recurrence(const TwistedFamily& family, long a_min, long a_max);

} // namespace thue

#endif
