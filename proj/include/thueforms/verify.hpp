#ifndef THUEFORMS_VERIFY_HPP
#define THUEFORMS_VERIFY_HPP

#include <string>
#include <vector>

#include "thueforms/descriptor.hpp"
#include "thueforms/json_io.hpp"

namespace thue {

struct CheckLine {
    std::string label;
    bool pass;
    std::string detail; // empty on pass unless informative
};

struct SuiteReport {
    std::string name;
    std::vector<CheckLine> lines;

    bool pass() const;
    void add(std::string label, bool ok, std::string detail = "");
    json to_json() const;
    std::string summary() const;
};

// U_h window over the longest contiguous admissible run inside [a_min, a_max]
SequenceWindow u_window(const TwistedFamily& family, int h, long a_min, long a_max);

// closed forms (i), (iii), (iv), (v) against charpoly-derived coefficients,
// the F_0 binomial baseline, V/W decomposition, and the stated recurrences
// with their initial values
SuiteReport suite_prop41(const BernsteinHasseParams& p, long a_min, long a_max);

// exact expansion of the product factorization against form_at
SuiteReport suite_factorization(const BernsteinHasseParams& p, long a_min, long a_max);

// s/t windows, initial triples, recurrences, form equality and the
// trace-duality identity for t_a
SuiteReport suite_shanks(const ShanksParams& p, long a_min, long a_max);

// quadratic-unit recurrence structure for every h: fitted minimal charpoly
// divides both predicted charpolys; both recurrences verify exactly
SuiteReport suite_quadratic(const TwistedFamily& family);

// cubic-unit recurrence structure: U_1 / U_{d-1} recurrences, product
// charpolys for h in {1, 2}, initial conditions in the degree-3 case
SuiteReport suite_cubic(const TwistedFamily& family, long precision_bits = 128);

// U_d(a) = delta^nu U_d(a-1) across the range
SuiteReport suite_ud(const TwistedFamily& family, long a_min, long a_max);

// which of the two printed values of U_2(1) for n = 2 matches exact
// computation (they disagree for D > 1)
struct PropVAdjudication {
    Int ground_truth;      // U_2(1) from the characteristic polynomial route
    bool matches_d2;       // equals -6 c D^2
    bool matches_d6;       // equals -6 c D^6
    bool predictor_agrees; // bh_predict(2, 1) equals ground truth
};
PropVAdjudication adjudicate_prop_v(long long D, int c);

SuiteReport run_suite(const FamilyDescriptor& d, const std::string& suite, long a_min, long a_max,
                      long precision_bits);

} // namespace thue

#endif
