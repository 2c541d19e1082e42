#ifndef THUEFORMS_POLY_HPP
#define THUEFORMS_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "thueforms/integers.hpp"

namespace thue {

// Univariate polynomials, coefficients ascending by degree.
// Invariant: no trailing zero coefficient; the zero polynomial has an empty
// coefficient vector and degree() == -1.

class RatPoly;

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(Int c);
    static IntPoly monomial(const Int& c, std::size_t k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;

    IntPoly derivative() const;
    Int content() const;          // gcd of coefficients, >= 0; 0 for the zero poly
    IntPoly primitive_part() const; // content removed, leading coefficient > 0

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    // exact division by a monic divisor; asserts remainder == 0
    IntPoly divexact_monic(const IntPoly& divisor) const;

    RatPoly to_rat() const;
    std::string str(const std::string& var = "X") const;

private:
    std::vector<Int> c_;
    void normalize();
};

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    static RatPoly constant(Rat c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const;

    Rat eval(const Rat& x) const;

    RatPoly derivative() const;
    RatPoly monic() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator-() const;
    RatPoly operator*(const Rat& s) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    // Euclidean division; divisor must be nonzero.
    std::pair<RatPoly, RatPoly> divrem(const RatPoly& divisor) const;
    bool divides(const RatPoly& divisor) const; // divisor | *this

    // integer coefficients after clearing denominators and content,
    // leading coefficient > 0
    IntPoly primitive_integer() const;

    std::string str(const std::string& var = "X") const;

private:
    std::vector<Rat> c_;
    void normalize();
};

// monic gcd over Q
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);
// p / gcd(p, p'), monic
RatPoly squarefree_part(const RatPoly& p);
bool is_squarefree(const IntPoly& p);

// k-th cyclotomic polynomial
IntPoly cyclotomic(unsigned long k);
// true when p (monic, integer) is a cyclotomic polynomial, i.e. all of its
// roots are roots of unity
bool is_cyclotomic(const IntPoly& p);

// Sturm sequence machinery (exact).
std::vector<RatPoly> sturm_sequence(const RatPoly& p);
int sign_variations_at(const std::vector<RatPoly>& seq, const Rat& x);
int sign_variations_at_neg_inf(const std::vector<RatPoly>& seq);
int sign_variations_at_pos_inf(const std::vector<RatPoly>& seq);
int count_real_roots(const IntPoly& p); // p squarefree
// number of roots in the half-open interval (a, b]
int count_real_roots_in(const std::vector<RatPoly>& seq, const Rat& a, const Rat& b);

// Isolate all real roots of a squarefree p with no rational roots into
// disjoint dyadic intervals of width <= 2^-width_bits, sorted ascending.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p, long width_bits);

// 1 + max |c_i| / |lead|, as an integer upper bound for all root moduli
Int root_bound(const IntPoly& p);

} // namespace thue

#endif
