#include "thueforms/forms.hpp"

#include <sstream>

#include "thueforms/errors.hpp"

namespace thue {

Int BinaryForm::evaluate(const Int& x, const Int& y) const {
    // Horner in x, with the y-power carried along
    Int acc = coeffs[0];
    Int ypow(1);
    for (int h = 1; h <= degree; ++h) {
        ypow *= y;
        acc = acc * x + coeffs[h] * ypow;
    }
    return acc;
}

std::string BinaryForm::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ",";
        os << coeffs[i];
    }
    os << "]";
    return os.str();
}

TwistedFamily::TwistedFamily(FieldPtr field, FieldElement alpha, FieldElement eps)
    : field_(std::move(field)),
      alpha_(std::move(alpha)),
      eps_(std::move(eps)),
      eps_inv_(inv(eps_)),
      eps_min_poly_(min_poly(eps_)) {
    int eps_deg = eps_min_poly_.degree();
    Int nrm = (eps_deg % 2 == 0 ? Int(1) : Int(-1)) * eps_min_poly_.coeff(0);
    delta_ = nrm.convert_to<int>();
    nu_ = field_->degree() / eps_deg;
}

FieldElement TwistedFamily::alpha_eps_pow(long a) const {
    FieldElement base = a >= 0 ? eps_ : eps_inv_;
    unsigned long e = a >= 0 ? static_cast<unsigned long>(a)
                             : static_cast<unsigned long>(-(a + 1)) + 1;
    FieldElement acc = alpha_;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

TwistedFamily family_new(const FieldPtr& field, const FieldElement& alpha,
                         const FieldElement& eps) {
    if (!alpha.field()->same_field(*field) || !eps.field()->same_field(*field))
        throw FieldMismatch();
    if (alpha.is_zero()) throw AlphaZero();
    if (!is_unit(eps)) throw NotAUnit();
    IntPoly emp = min_poly(eps);
    if (is_cyclotomic(emp)) throw TorsionUnit();
    if (!is_algebraic_integer(alpha)) throw NotIntegral("alpha must be an algebraic integer");
    if (min_poly(alpha).degree() != field->degree()) throw AlphaNotPrimitive();
    return TwistedFamily(field, alpha, eps);
}

BinaryForm form_at(const TwistedFamily& family, long a) {
    const int d = family.degree();
    IntPoly mp = min_poly(family.alpha_eps_pow(a));
    if (mp.degree() != d) throw DegenerateDegree(mp.degree());
    BinaryForm f;
    f.degree = d;
    f.coeffs.resize(d + 1);
    for (int h = 0; h <= d; ++h) f.coeffs[h] = mp.coeff(d - h);
    return f;
}

Int coefficient_U(const TwistedFamily& family, int h, long a) {
    if (h < 1 || h > family.degree())
        throw std::out_of_range("coefficient index h out of [1, d]");
    BinaryForm f = form_at(family, a);
    return neg_one_pow(h) * f.coeffs[h];
}

AdmissibleReport admissible_range(const TwistedFamily& family, long a_min, long a_max) {
    if (a_min > a_max) throw std::invalid_argument("a_min > a_max");
    AdmissibleReport report;
    FieldElement u = family.alpha_eps_pow(a_min);
    for (long a = a_min;; ++a) {
        int deg = min_poly(u).degree();
        if (deg == family.degree())
            report.admissible.push_back(a);
        else
            report.excluded.emplace_back(a, deg);
        if (a == a_max) break;
        u = u * family.eps();
    }
    return report;
}

UdReport check_Ud_recurrence(const TwistedFamily& family, long a_min, long a_max) {
    UdReport report;
    const int d = family.degree();
    const Int factor = (family.delta() == -1 && family.nu() % 2 == 1) ? Int(-1) : Int(1);
    std::optional<Int> prev;
    for (long a = a_min; a <= a_max; ++a) {
        Int ud;
        try {
            ud = coefficient_U(family, d, a);
        } catch (const DegenerateDegree&) {
            report.skipped_degenerate.push_back(a);
            prev.reset();
            continue;
        }
        if (prev) {
            ++report.pairs_checked;
            if (ud != factor * *prev) {
                report.pass = false;
                if (!report.first_failure) report.first_failure = a;
            }
        }
        prev = ud;
    }
    return report;
}

} // namespace thue
