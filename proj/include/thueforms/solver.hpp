#ifndef THUEFORMS_SOLVER_HPP
#define THUEFORMS_SOLVER_HPP

#include <optional>
#include <vector>

#include "thueforms/forms.hpp"

namespace thue {

struct SearchBox {
    long a_min = 0;
    long a_max = 0;
    long long xy_bound = 1; // |x| <= bound, |y| <= bound
    Int m = 1;

    void validate() const;
};

struct Solution {
    long a;
    long long x, y;
    Int value;                   // F_a(x, y)
    std::optional<double> kappa; // max(log|x|, log|y|, |a|) / log m, when m >= 2

    bool operator==(const Solution& s) const {
        return a == s.a && x == s.x && y == s.y && value == s.value;
    }
};

struct SearchResult {
    std::vector<Solution> solutions;                 // sorted by (a, y, x)
    std::vector<std::pair<long, int>> degenerate_a;  // skipped (a, actual degree)
};

// Exhaustive scan of the whole box. Uses a 128-bit fast path when the
// value bound allows it.
SearchResult brute_force_search(const TwistedFamily& family, const SearchBox& box,
                                int threads = 0);

// Root-window pruned scan; contract: identical solution set to the oracle.
// For each admissible a it isolates the real roots of F_a(X,1), brute-forces
// the band |y| <= y0 and, beyond it, only tests integer x inside certified
// windows around theta*y. The window bound: a solution with |F| <= m and
// |y| >= y1 (so m^(1/d) <= min_sep*|y|/2) has its nearest root theta_i at
// distance <= m / prod_{j != i}(sep_ij*|y|/2); discs around complex roots
// repel solutions entirely once |y| > yc, since there |x - theta y| >=
// |Im theta|*|y| exceeds that bound. All window arithmetic is exact rational
// on top of the certified root discs.
SearchResult pruned_search(const TwistedFamily& family, const SearchBox& box,
                           long precision_bits = 128, int threads = 0);

struct KappaReport {
    bool defined = false; // false when m < 2
    double max_ratio = 0;
    std::optional<Solution> witness;
    std::size_t count = 0;
};

KappaReport kappa_report(const std::vector<Solution>& solutions, const Int& m);

} // namespace thue

#endif
