#ifndef THUEFORMS_ROOTS_HPP
#define THUEFORMS_ROOTS_HPP

#include <vector>

#include "thueforms/integers.hpp"
#include "thueforms/poly.hpp"

namespace thue {

// Certified enclosure of one complex root: the open disc centered at
// (re, im) with the given radius contains exactly one root of the
// polynomial it was computed from. Midpoint and radius are dyadic
// rationals, so downstream arithmetic can stay exact.
//
// Real roots carry im == 0 exactly and real == true; nonreal roots come in
// conjugate pairs linked through conj_index and satisfy radius < |im|.
struct RootDisc {
    Rat re;
    Rat im;
    Rat radius;
    bool real = true;
    int conj_index = -1;
};

// Isolate all roots of a squarefree integer polynomial with no rational
// roots (degree 1 is allowed and handled exactly). Discs are pairwise
// disjoint, closed under conjugation, have radius <= 2^-precision_bits and
// are sorted by (re, im). Real roots are located by exact Sturm bisection;
// nonreal ones by a Durand-Kerner stage, Newton polishing, and a
// Weierstrass-disc certificate evaluated in interval arithmetic.
// Throws PrecisionExhausted when the certificate cannot be established at
// the internal working precision (2x the requested bits).
std::vector<RootDisc> certified_roots(const IntPoly& p, long precision_bits);

} // namespace thue

#endif
