#include <doctest.h>

#include "thueforms/poly.hpp"

using namespace thue;

namespace {
IntPoly ip(std::vector<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return IntPoly(std::move(v));
}
} // namespace

TEST_CASE("integer polynomial arithmetic") {
    IntPoly f = ip({-1, -3, 0, 1}); // X^3 - 3X - 1
    CHECK(f.degree() == 3);
    CHECK(f.is_monic());
    CHECK(f.eval(Int(2)) == 1);
    CHECK(f.eval(Rat(1, 2)) == Rat(-19, 8));

    IntPoly g = ip({1, 1});
    IntPoly prod = f * g;
    CHECK(prod.degree() == 4);
    CHECK(prod.eval(Int(3)) == f.eval(Int(3)) * g.eval(Int(3)));
    CHECK(prod.divexact_monic(g) == f);

    CHECK((f - f).is_zero());
    CHECK(ip({2, 4, 6}).content() == 2);
    CHECK(ip({-2, -4}).primitive_part() == ip({1, 2}));
    CHECK(ip({2, -4}).primitive_part() == ip({-1, 2}));
}

TEST_CASE("rational polynomial division and gcd") {
    RatPoly f = ip({-2, 0, 1}).to_rat(); // X^2 - 2
    RatPoly g = ip({1, 1}).to_rat();
    auto [q, r] = f.divrem(g);
    CHECK((q * g + r) == f);
    CHECK(r.degree() == 0);

    RatPoly a = ip({-1, 0, 1}).to_rat();        // (X-1)(X+1)
    RatPoly b = ip({-1, 1}).to_rat() * ip({-3, 1}).to_rat(); // (X-1)(X-3)
    CHECK(poly_gcd(a, b) == ip({-1, 1}).to_rat());

    RatPoly sq = ip({1, 2, 1}).to_rat(); // (X+1)^2
    CHECK(squarefree_part(sq) == ip({1, 1}).to_rat());
    CHECK(sq.divides(ip({1, 1}).to_rat()));
}

TEST_CASE("squarefree detection") {
    CHECK(is_squarefree(ip({-1, 0, 1})));
    CHECK_FALSE(is_squarefree(ip({1, 2, 1})));
    CHECK(is_squarefree(ip({-1, -3, 0, 1})));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == ip({-1, 1}));
    CHECK(cyclotomic(2) == ip({1, 1}));
    CHECK(cyclotomic(4) == ip({1, 0, 1}));
    CHECK(cyclotomic(6) == ip({1, -1, 1}));
    CHECK(cyclotomic(12) == ip({1, 0, -1, 0, 1}));

    CHECK(is_cyclotomic(ip({1, 1})));
    CHECK(is_cyclotomic(ip({1, 0, 1})));
    CHECK(is_cyclotomic(ip({1, 1, 1})));
    CHECK_FALSE(is_cyclotomic(ip({1, -3, 1})));  // golden-ratio-squared minimal poly
    CHECK_FALSE(is_cyclotomic(ip({-1, -3, 0, 1})));
}

TEST_CASE("sturm real root counting") {
    CHECK(count_real_roots(ip({-1, -3, 0, 1})) == 3); // totally real cubic
    CHECK(count_real_roots(ip({-2, 0, 0, 0, 1})) == 2); // X^4 - 2
    CHECK(count_real_roots(ip({1, 0, 1})) == 0);
    CHECK(count_real_roots(ip({-2, 0, 1})) == 2);

    // product of known linear factors, shifted to avoid rational roots: use
    // an irreducible quartic with 4 real roots (X^4 - 10X^2 + 1, roots
    // +-sqrt2 +- sqrt3)
    CHECK(count_real_roots(ip({1, 0, -10, 0, 1})) == 4);
}

TEST_CASE("real root isolation brackets sqrt(2) within 2^-64") {
    auto roots = isolate_real_roots(ip({-2, 0, 1}), 64);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first < roots[1].first);
    Rat width = roots[1].second - roots[1].first;
    CHECK(width <= rat_pow(Rat(1, 2), 64));
    // 1.41421356237309504880... lies inside
    Rat approx(14142135623730950488ULL, 10000000000000000000ULL);
    CHECK(roots[1].first <= approx);
    CHECK(approx <= roots[1].second);
    // the two enclosures are symmetric for an even polynomial
    CHECK(roots[0].first == -roots[1].second);
}

TEST_CASE("root bound dominates every real root") {
    IntPoly f = ip({-1, -3, 0, 1});
    Int b = root_bound(f);
    auto seq = sturm_sequence(f.to_rat());
    CHECK(count_real_roots_in(seq, Rat(-b), Rat(b)) == 3);
}
