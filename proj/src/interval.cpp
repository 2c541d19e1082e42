#include "thueforms/interval.hpp"

#include <sstream>
#include <stdexcept>

namespace thue {

// -------------------------------------------------------------------- Mpf

Mpf Mpf::from_rat(const Rat& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Mpf r(prec);
    mpfr_set_q(r.v_, q.backend().data(), rnd);
    return r;
}

Mpf Mpf::from_long(long v, mpfr_prec_t prec) {
    Mpf r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

Rat Mpf::to_rat() const {
    if (!mpfr_number_p(v_)) throw std::domain_error("Mpf::to_rat on non-finite value");
    Rat q;
    mpfr_get_q(q.backend().data(), v_);
    return q;
}

Mpf Mpf::add(const Mpf& a, const Mpf& b, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Mpf r(prec);
    mpfr_add(r.v_, a.v_, b.v_, rnd);
    return r;
}
Mpf Mpf::sub(const Mpf& a, const Mpf& b, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Mpf r(prec);
    mpfr_sub(r.v_, a.v_, b.v_, rnd);
    return r;
}
Mpf Mpf::mul(const Mpf& a, const Mpf& b, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Mpf r(prec);
    mpfr_mul(r.v_, a.v_, b.v_, rnd);
    return r;
}
Mpf Mpf::div(const Mpf& a, const Mpf& b, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Mpf r(prec);
    mpfr_div(r.v_, a.v_, b.v_, rnd);
    return r;
}
Mpf Mpf::sqrt(const Mpf& a, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Mpf r(prec);
    mpfr_sqrt(r.v_, a.v_, rnd);
    return r;
}
Mpf Mpf::pow(const Mpf& a, const Mpf& b, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Mpf r(prec);
    mpfr_pow(r.v_, a.v_, b.v_, rnd);
    return r;
}
Mpf Mpf::neg(const Mpf& a) {
    Mpf r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN); // exact
    return r;
}
Mpf Mpf::abs(const Mpf& a) {
    Mpf r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN); // exact
    return r;
}

// ----------------------------------------------------------- RealInterval

RealInterval::RealInterval(Mpf lo, Mpf hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (mpfr_cmp(lo_.get(), hi_.get()) > 0)
        throw std::logic_error("RealInterval: lo > hi");
}

RealInterval RealInterval::from_rat(const Rat& q, mpfr_prec_t prec) {
    return RealInterval(Mpf::from_rat(q, prec, MPFR_RNDD), Mpf::from_rat(q, prec, MPFR_RNDU));
}

RealInterval RealInterval::from_rat_pair(const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
    return RealInterval(Mpf::from_rat(lo, prec, MPFR_RNDD), Mpf::from_rat(hi, prec, MPFR_RNDU));
}

RealInterval RealInterval::exact(long v, mpfr_prec_t prec) {
    Mpf m = Mpf::from_long(v, prec);
    return RealInterval(m, m);
}

bool RealInterval::certainly_less(const RealInterval& a, const RealInterval& b) {
    return a.hi_.cmp(b.lo_) < 0;
}

bool RealInterval::possibly_leq(const RealInterval& a, const RealInterval& b) {
    return a.lo_.cmp(b.hi_) <= 0;
}

Mpf RealInterval::width() const { return Mpf::sub(hi_, lo_, prec(), MPFR_RNDU); }

double RealInterval::mid_double() const { return (lo_.to_double() + hi_.to_double()) / 2; }

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    return RealInterval(Mpf::add(a.lo_, b.lo_, p, MPFR_RNDD), Mpf::add(a.hi_, b.hi_, p, MPFR_RNDU));
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    return RealInterval(Mpf::sub(a.lo_, b.hi_, p, MPFR_RNDD), Mpf::sub(a.hi_, b.lo_, p, MPFR_RNDU));
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    const Mpf* as[2] = {&a.lo_, &a.hi_};
    const Mpf* bs[2] = {&b.lo_, &b.hi_};
    Mpf lo = Mpf::mul(a.lo_, b.lo_, p, MPFR_RNDD);
    Mpf hi = Mpf::mul(a.lo_, b.lo_, p, MPFR_RNDU);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (i == 0 && j == 0) continue;
            Mpf d = Mpf::mul(*as[i], *bs[j], p, MPFR_RNDD);
            Mpf u = Mpf::mul(*as[i], *bs[j], p, MPFR_RNDU);
            if (d.cmp(lo) < 0) lo = d;
            if (hi.cmp(u) < 0) hi = u;
        }
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by interval containing 0");
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    const Mpf* as[2] = {&a.lo_, &a.hi_};
    const Mpf* bs[2] = {&b.lo_, &b.hi_};
    Mpf lo = Mpf::div(a.lo_, b.lo_, p, MPFR_RNDD);
    Mpf hi = Mpf::div(a.lo_, b.lo_, p, MPFR_RNDU);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (i == 0 && j == 0) continue;
            Mpf d = Mpf::div(*as[i], *bs[j], p, MPFR_RNDD);
            Mpf u = Mpf::div(*as[i], *bs[j], p, MPFR_RNDU);
            if (d.cmp(lo) < 0) lo = d;
            if (hi.cmp(u) < 0) hi = u;
        }
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::operator-() const {
    return RealInterval(Mpf::neg(hi_), Mpf::neg(lo_));
}

RealInterval RealInterval::square() const {
    mpfr_prec_t p = prec();
    Mpf alo = Mpf::abs(lo_), ahi = Mpf::abs(hi_);
    const Mpf& big = alo.cmp(ahi) < 0 ? ahi : alo;
    Mpf hi = Mpf::mul(big, big, p, MPFR_RNDU);
    if (contains_zero()) return RealInterval(Mpf(p), std::move(hi));
    const Mpf& small = alo.cmp(ahi) < 0 ? alo : ahi;
    return RealInterval(Mpf::mul(small, small, p, MPFR_RNDD), std::move(hi));
}

RealInterval RealInterval::sqrt() const {
    if (hi_.sgn() < 0) throw std::domain_error("sqrt of negative interval");
    mpfr_prec_t p = prec();
    Mpf lo(p);
    if (lo_.sgn() > 0) lo = Mpf::sqrt(lo_, p, MPFR_RNDD);
    return RealInterval(std::move(lo), Mpf::sqrt(hi_, p, MPFR_RNDU));
}

RealInterval RealInterval::abs() const {
    mpfr_prec_t p = prec();
    if (lo_.sgn() >= 0) return *this;
    if (hi_.sgn() <= 0) return -*this;
    Mpf alo = Mpf::abs(lo_);
    Mpf big = alo.cmp(hi_) < 0 ? hi_ : alo;
    return RealInterval(Mpf(p), std::move(big));
}

RealInterval RealInterval::pow(const RealInterval& e) const {
    if (lo_.sgn() < 0) throw std::domain_error("interval pow with negative base");
    mpfr_prec_t p = std::max(prec(), e.prec());
    // x^y is monotone in each variable over x >= 0, so corner evaluation is exact
    const Mpf* bs[2] = {&lo_, &hi_};
    const Mpf* es[2] = {&e.lo_, &e.hi_};
    Mpf lo = Mpf::pow(*bs[0], *es[0], p, MPFR_RNDD);
    Mpf hi = Mpf::pow(*bs[0], *es[0], p, MPFR_RNDU);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (i == 0 && j == 0) continue;
            Mpf d = Mpf::pow(*bs[i], *es[j], p, MPFR_RNDD);
            Mpf u = Mpf::pow(*bs[i], *es[j], p, MPFR_RNDU);
            if (d.cmp(lo) < 0) lo = d;
            if (hi.cmp(u) < 0) hi = u;
        }
    return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::hull(const RealInterval& a, const RealInterval& b) {
    return RealInterval(a.lo_.cmp(b.lo_) < 0 ? a.lo_ : b.lo_,
                        a.hi_.cmp(b.hi_) > 0 ? a.hi_ : b.hi_);
}

std::string RealInterval::str() const {
    std::ostringstream os;
    os << "[" << lo_.to_double() << ", " << hi_.to_double() << "]";
    return os.str();
}

// -------------------------------------------------------- ComplexInterval

ComplexInterval ComplexInterval::from_rat(const Rat& re, const Rat& im, mpfr_prec_t prec) {
    return ComplexInterval(RealInterval::from_rat(re, prec), RealInterval::from_rat(im, prec));
}

ComplexInterval ComplexInterval::from_disc(const Rat& mid_re, const Rat& mid_im,
                                           const Rat& radius, mpfr_prec_t prec) {
    return ComplexInterval(RealInterval::from_rat_pair(mid_re - radius, mid_re + radius, prec),
                           RealInterval::from_rat_pair(mid_im - radius, mid_im + radius, prec));
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return ComplexInterval(a.re_ + b.re_, a.im_ + b.im_);
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return ComplexInterval(a.re_ - b.re_, a.im_ - b.im_);
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return ComplexInterval(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
    RealInterval nrm = b.re_.square() + b.im_.square();
    return ComplexInterval((a.re_ * b.re_ + a.im_ * b.im_) / nrm,
                           (a.im_ * b.re_ - a.re_ * b.im_) / nrm);
}

ComplexInterval ComplexInterval::operator-() const { return ComplexInterval(-re_, -im_); }

RealInterval ComplexInterval::abs() const { return (re_.square() + im_.square()).sqrt(); }

double ComplexInterval::width_double() const {
    return std::max(re_.width_double(), im_.width_double());
}

std::string ComplexInterval::str() const {
    return re_.str() + " + i*" + im_.str();
}

} // namespace thue
