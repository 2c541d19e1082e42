#ifndef THUEFORMS_INTERVAL_HPP
#define THUEFORMS_INTERVAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "thueforms/integers.hpp"

namespace thue {

// Thin RAII wrapper over mpfr_t. All arithmetic goes through the static
// helpers, which take an explicit precision and rounding mode; interval
// endpoints are only ever produced with directed rounding.
class Mpf {
public:
    explicit Mpf(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Mpf(const Mpf& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN); // same precision: exact
    }
    Mpf(Mpf&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Mpf& operator=(const Mpf& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Mpf& operator=(Mpf&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mpf() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static Mpf from_rat(const Rat& q, mpfr_prec_t prec, mpfr_rnd_t rnd);
    static Mpf from_long(long v, mpfr_prec_t prec);

    Rat to_rat() const; // exact: mpfr values are dyadic
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    int cmp(const Mpf& o) const { return mpfr_cmp(v_, o.v_); }
    int sgn() const { return mpfr_sgn(v_); }
    bool operator<(const Mpf& o) const { return cmp(o) < 0; }
    bool operator<=(const Mpf& o) const { return cmp(o) <= 0; }
    bool operator==(const Mpf& o) const { return cmp(o) == 0; }

    static Mpf add(const Mpf& a, const Mpf& b, mpfr_prec_t prec, mpfr_rnd_t rnd);
    static Mpf sub(const Mpf& a, const Mpf& b, mpfr_prec_t prec, mpfr_rnd_t rnd);
    static Mpf mul(const Mpf& a, const Mpf& b, mpfr_prec_t prec, mpfr_rnd_t rnd);
    static Mpf div(const Mpf& a, const Mpf& b, mpfr_prec_t prec, mpfr_rnd_t rnd);
    static Mpf sqrt(const Mpf& a, mpfr_prec_t prec, mpfr_rnd_t rnd);
    static Mpf pow(const Mpf& a, const Mpf& b, mpfr_prec_t prec, mpfr_rnd_t rnd);
    static Mpf neg(const Mpf& a);
    static Mpf abs(const Mpf& a);

private:
    mpfr_t v_;
};

// Closed real interval [lo, hi] with dyadic endpoints.
class RealInterval {
public:
    RealInterval() : lo_(64), hi_(64) {}
    RealInterval(Mpf lo, Mpf hi);

    static RealInterval from_rat(const Rat& q, mpfr_prec_t prec);
    static RealInterval from_rat_pair(const Rat& lo, const Rat& hi, mpfr_prec_t prec);
    static RealInterval exact(long v, mpfr_prec_t prec);

    const Mpf& lo() const { return lo_; }
    const Mpf& hi() const { return hi_; }
    mpfr_prec_t prec() const { return std::max(lo_.prec(), hi_.prec()); }

    bool contains_zero() const { return lo_.sgn() <= 0 && hi_.sgn() >= 0; }
    bool certainly_positive() const { return lo_.sgn() > 0; }
    bool certainly_negative() const { return hi_.sgn() < 0; }
    // a.hi < b.lo
    static bool certainly_less(const RealInterval& a, const RealInterval& b);
    // a.lo <= b.hi (the relation a <= b cannot be ruled out)
    static bool possibly_leq(const RealInterval& a, const RealInterval& b);

    Mpf width() const; // hi - lo rounded up
    double width_double() const { return width().to_double(); }
    double mid_double() const;
    Rat lo_rat() const { return lo_.to_rat(); }
    Rat hi_rat() const { return hi_.to_rat(); }

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator/(const RealInterval& a, const RealInterval& b);
    RealInterval operator-() const;

    RealInterval square() const;
    RealInterval sqrt() const; // requires hi >= 0; lower endpoint clamps at 0
    RealInterval abs() const;
    // x^y over the rectangle, requires lo >= 0
    RealInterval pow(const RealInterval& e) const;

    static RealInterval hull(const RealInterval& a, const RealInterval& b);
    std::string str() const;

private:
    Mpf lo_, hi_;
};

// Rectangle enclosure re + i*im.
class ComplexInterval {
public:
    ComplexInterval() = default;
    ComplexInterval(RealInterval re, RealInterval im)
        : re_(std::move(re)), im_(std::move(im)) {}

    static ComplexInterval from_rat(const Rat& re, const Rat& im, mpfr_prec_t prec);
    // disc with rational midpoint and radius, as a rectangle enclosure
    static ComplexInterval from_disc(const Rat& mid_re, const Rat& mid_im, const Rat& radius,
                                     mpfr_prec_t prec);

    const RealInterval& re() const { return re_; }
    const RealInterval& im() const { return im_; }

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
    ComplexInterval operator-() const;

    RealInterval abs() const;
    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    // max of component widths, rounded up
    double width_double() const;
    std::string str() const;

private:
    RealInterval re_, im_;
};

} // namespace thue

#endif
