#ifndef THUEFORMS_RECURRENCES_HPP
#define THUEFORMS_RECURRENCES_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "thueforms/poly.hpp"

namespace thue {

// Values of a sequence on a contiguous index window [base, base + size).
struct SequenceWindow {
    long base = 0;
    std::vector<Rat> values;

    long size() const { return static_cast<long>(values.size()); }
    const Rat& at_index(long idx) const { return values.at(static_cast<std::size_t>(idx - base)); }
    static SequenceWindow from_ints(long base, const std::vector<Int>& vals);
};

// Homogeneous recurrence s_{a+k} = -sum_{i<k} p_i s_{a+i}, stored through its
// monic characteristic polynomial T^k + sum p_i T^i.
struct LinearRecurrence {
    RatPoly charpoly;
    int order() const { return charpoly.degree(); }
};

// s_{a+2} = c1 s_{a+1} + c2 s_a + c3 delta^a
struct InhomogeneousRecurrence {
    LinearRecurrence homogeneous;
    int forcing_base = 1; // delta in {-1, 1}
    Rat forcing_coeff;    // c3
};

struct RecurrenceCheck {
    bool pass = true;
    std::optional<long> first_failure; // index of the first predicted value that mismatched
};

RecurrenceCheck verify_recurrence(const LinearRecurrence& rec, const SequenceWindow& w);
RecurrenceCheck verify_inhomogeneous(const InhomogeneousRecurrence& rec, const SequenceWindow& w);

// Minimal-order recurrence satisfied by the whole window, certified by
// requiring window length >= 2*order + 1. Exact Hankel-style elimination.
LinearRecurrence fit_minimal_recurrence(const SequenceWindow& w, int max_order);

// whether the characteristic polynomial of `a` divides that of `b`
bool charpoly_divides(const LinearRecurrence& a, const LinearRecurrence& b);

// prod_{l=0}^{h} (T - eps^l conj(eps)^(h-l)) for the quadratic unit with
// trace t and norm delta; computed exactly in Z[eps].
IntPoly quadratic_unit_charpoly(const Int& eps_trace, int eps_norm, int h);

// prod_{l=0}^{d-h} (T - delta^(d/2) eps^-l conj(eps)^(-(d-h)+l)); d must be even.
IntPoly quadratic_unit_dual_charpoly(const Int& eps_trace, int eps_norm, int d, int h);

// Fit c3 of the order-2 inhomogeneous U_2 relation from a window that covers
// a in {-1, 0, 1}; c1, c2 come from (T - eps^2)(T - conj(eps)^2).
InhomogeneousRecurrence inhomogeneous_U2(const Int& eps_trace, int eps_norm,
                                         const SequenceWindow& w);

// Order-3 recurrences for U_1 and U_{d-1} attached to a cubic unit with
// char poly T^3 - r T^2 + s T - delta.
std::pair<LinearRecurrence, LinearRecurrence> cubic_unit_recurrences(const Int& r, const Int& s,
                                                                     int delta, int d);

// (U_1(-1), U_1(0), U_1(1)) for alpha = A + B eps + C eps^2 in the cubic case
std::array<Rat, 3> cubic_initial_conditions(const Rat& A, const Rat& B, const Rat& C,
                                            const Int& r, const Int& s, int delta);

// prod over l1+l2+l3 = h of (T - eps1^l1 eps2^l2 eps3^l3), degree
// (h+1)(h+2)/2, computed from certified embeddings and rounded to the unique
// integer in each coefficient interval.
IntPoly cubic_unit_charpoly(const Int& r, const Int& s, int delta, int h, long precision_bits);

} // namespace thue

#endif
