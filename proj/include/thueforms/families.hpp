#ifndef THUEFORMS_FAMILIES_HPP
#define THUEFORMS_FAMILIES_HPP

#include <utility>

#include "thueforms/forms.hpp"

namespace thue {

// Degree-2n field Q(w), w^(2n) = D^(2n) + c, with alpha = D + w and
// eps = D^n + w^n.
struct BernsteinHasseParams {
    long long D = 1;
    int n = 2;
    int c = 1;

    void validate() const; // throws InvalidParams
};

TwistedFamily bh_build(const BernsteinHasseParams& p);

// Closed-form U_h(a) for h in {1, 2, 2n-1, 2n}; throws UnsupportedIndex otherwise.
Int bh_predict(const BernsteinHasseParams& p, int h, long a);

// (V_h(a), w_h(a)) with U_h(a) = V_h(a) + w_h(a) * (D^(2n)+c) for h <= 2n-1;
// w_h is the integer with W_h(a) = w_h(a) * w^n.
std::pair<Int, Int> bh_vw(const BernsteinHasseParams& p, int h, long a);

// Exact expansion of
//   ((X - eps^a D Y)^n - eps^(na) w^n Y^n)((X - conj(eps)^a D Y)^n + conj(eps)^(na) w^n Y^n)
// in K, compared coefficient-by-coefficient against form_at.
bool bh_factorization_check(const BernsteinHasseParams& p, long a);

// Simplest cubic field of X^3 - (n-1)X^2 - (n+2)X - 1 with
// eps = l1^b1 l2^b2 and alpha = l1^c1 l2^c2.
struct ShanksParams {
    long long n = 1;
    long long b1 = 0, b2 = 1;
    long long c1 = 1, c2 = 0;

    void validate() const; // throws InvalidParams when b1*c2 == b2*c1
};

TwistedFamily shanks_build(const ShanksParams& p);

struct IntWindow {
    long base;
    std::vector<Int> values;
    const Int& at_index(long idx) const { return values.at(static_cast<std::size_t>(idx - base)); }
};

// (s_a) and (t_a) on [a_min, a_max], generated by the order-3 recurrences
// from the initial triples, forwards and backwards.
std::pair<IntWindow, IntWindow> shanks_st(long long n, long a_min, long a_max);

// X^3 - s_a X^2 Y + t_a X Y^2 - Y^3
BinaryForm shanks_form(long long n, long a);

} // namespace thue

#endif
