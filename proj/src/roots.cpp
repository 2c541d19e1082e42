#include "thueforms/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "thueforms/errors.hpp"
#include "thueforms/interval.hpp"

namespace thue {

namespace {

// plain (non-interval) complex numbers for the iteration stages
struct CNum {
    Mpf re, im;
    CNum(mpfr_prec_t p) : re(p), im(p) {}
};

CNum c_add(const CNum& a, const CNum& b, mpfr_prec_t p) {
    CNum r(p);
    r.re = Mpf::add(a.re, b.re, p, MPFR_RNDN);
    r.im = Mpf::add(a.im, b.im, p, MPFR_RNDN);
    return r;
}
CNum c_sub(const CNum& a, const CNum& b, mpfr_prec_t p) {
    CNum r(p);
    r.re = Mpf::sub(a.re, b.re, p, MPFR_RNDN);
    r.im = Mpf::sub(a.im, b.im, p, MPFR_RNDN);
    return r;
}
CNum c_mul(const CNum& a, const CNum& b, mpfr_prec_t p) {
    CNum r(p);
    Mpf t1 = Mpf::mul(a.re, b.re, p, MPFR_RNDN);
    Mpf t2 = Mpf::mul(a.im, b.im, p, MPFR_RNDN);
    Mpf t3 = Mpf::mul(a.re, b.im, p, MPFR_RNDN);
    Mpf t4 = Mpf::mul(a.im, b.re, p, MPFR_RNDN);
    r.re = Mpf::sub(t1, t2, p, MPFR_RNDN);
    r.im = Mpf::add(t3, t4, p, MPFR_RNDN);
    return r;
}
CNum c_div(const CNum& a, const CNum& b, mpfr_prec_t p) {
    Mpf n1 = Mpf::mul(b.re, b.re, p, MPFR_RNDN);
    Mpf n2 = Mpf::mul(b.im, b.im, p, MPFR_RNDN);
    Mpf nrm = Mpf::add(n1, n2, p, MPFR_RNDN);
    CNum r(p);
    Mpf t1 = Mpf::mul(a.re, b.re, p, MPFR_RNDN);
    Mpf t2 = Mpf::mul(a.im, b.im, p, MPFR_RNDN);
    Mpf t3 = Mpf::mul(a.im, b.re, p, MPFR_RNDN);
    Mpf t4 = Mpf::mul(a.re, b.im, p, MPFR_RNDN);
    r.re = Mpf::div(Mpf::add(t1, t2, p, MPFR_RNDN), nrm, p, MPFR_RNDN);
    r.im = Mpf::div(Mpf::sub(t3, t4, p, MPFR_RNDN), nrm, p, MPFR_RNDN);
    return r;
}
Mpf c_abs(const CNum& a, mpfr_prec_t p) {
    Mpf n1 = Mpf::mul(a.re, a.re, p, MPFR_RNDN);
    Mpf n2 = Mpf::mul(a.im, a.im, p, MPFR_RNDN);
    return Mpf::sqrt(Mpf::add(n1, n2, p, MPFR_RNDN), p, MPFR_RNDN);
}

std::vector<CNum> to_cnum_coeffs(const IntPoly& p, mpfr_prec_t prec) {
    std::vector<CNum> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        CNum x(prec);
        x.re = Mpf::from_rat(Rat(v), prec, MPFR_RNDN);
        c.push_back(std::move(x));
    }
    return c;
}

CNum horner(const std::vector<CNum>& c, const CNum& z, mpfr_prec_t p) {
    CNum acc(p);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = c_add(c_mul(acc, z, p), *it, p);
    return acc;
}

// one Durand-Kerner sweep over all points; returns max relative correction
double dk_sweep(const std::vector<CNum>& coeffs, std::vector<CNum>& z, mpfr_prec_t p) {
    const std::size_t n = z.size();
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
        CNum denom(p);
        denom.re = coeffs.back().re; // leading coefficient (real)
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            denom = c_mul(denom, c_sub(z[i], z[j], p), p);
        }
        CNum val = horner(coeffs, z[i], p);
        CNum w = c_div(val, denom, p);
        z[i] = c_sub(z[i], w, p);
        double scale = std::max(1.0, c_abs(z[i], p).to_double());
        worst = std::max(worst, c_abs(w, p).to_double() / scale);
    }
    return worst;
}

std::vector<CNum> durand_kerner(const IntPoly& p, mpfr_prec_t prec, double angle_offset) {
    const int d = p.degree();
    auto coeffs = to_cnum_coeffs(p, prec);
    double radius = std::min(root_bound(p).convert_to<double>(), 1e12);
    std::vector<CNum> z;
    z.reserve(d);
    for (int k = 0; k < d; ++k) {
        double ang = 2.0 * 3.14159265358979323846 * (k + 0.25) / d + angle_offset;
        CNum s(prec);
        s.re = Mpf::from_rat(Rat(static_cast<long>(radius * std::cos(ang) * (1 << 20)), 1 << 20),
                             prec, MPFR_RNDN);
        s.im = Mpf::from_rat(Rat(static_cast<long>(radius * std::sin(ang) * (1 << 20)), 1 << 20),
                             prec, MPFR_RNDN);
        z.push_back(std::move(s));
    }
    for (int iter = 0; iter < 500; ++iter) {
        double worst = dk_sweep(coeffs, z, prec);
        if (worst < 1e-40) return z;
    }
    return z; // possibly unconverged; certification decides
}

void newton_polish(const std::vector<CNum>& coeffs, const std::vector<CNum>& dcoeffs, CNum& z,
                   mpfr_prec_t p, int iters) {
    for (int i = 0; i < iters; ++i) {
        CNum val = horner(coeffs, z, p);
        CNum der = horner(dcoeffs, z, p);
        if (c_abs(der, p).sgn() == 0) return;
        z = c_sub(z, c_div(val, der, p), p);
    }
}

ComplexInterval eval_int_poly(const IntPoly& p, const ComplexInterval& z, mpfr_prec_t prec) {
    ComplexInterval acc = ComplexInterval::from_rat(Rat(0), Rat(0), prec);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * z + ComplexInterval::from_rat(Rat(*it), Rat(0), prec);
    return acc;
}

struct Candidate {
    Rat re, im; // exact dyadic midpoint
};

// Weierstrass-disc certificate: radius_i = d * |p(z_i) / (lc * prod_{j!=i}(z_i - z_j))|.
// With pairwise disjoint discs each disc contains exactly one root.
std::vector<Rat> weierstrass_radii(const IntPoly& p, const std::vector<Candidate>& z,
                                   mpfr_prec_t prec) {
    const std::size_t n = z.size();
    std::vector<ComplexInterval> pts;
    pts.reserve(n);
    for (const auto& c : z) pts.push_back(ComplexInterval::from_rat(c.re, c.im, prec));
    RealInterval lead = RealInterval::from_rat(Rat(p.leading()), prec);
    std::vector<Rat> radii;
    radii.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ComplexInterval denom(lead, RealInterval::from_rat(Rat(0), prec));
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            denom = denom * (pts[i] - pts[j]);
        }
        ComplexInterval w = eval_int_poly(p, pts[i], prec) / denom;
        Mpf sup = w.abs().hi();
        Rat r = sup.to_rat() * Int(n);
        radii.push_back(r);
    }
    return radii;
}

} // namespace

std::vector<RootDisc> certified_roots(const IntPoly& p, long precision_bits) {
    if (precision_bits < 64) precision_bits = 64;
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("certified_roots: constant polynomial");
    if (!is_squarefree(p)) throw NotSquarefree("certified_roots requires a squarefree polynomial");

    if (d == 1) {
        RootDisc disc;
        disc.re = Rat(-p.coeff(0), p.coeff(1));
        disc.im = 0;
        disc.radius = 0;
        disc.real = true;
        disc.conj_index = 0;
        return {disc};
    }

    long coeff_bits = 0;
    for (const auto& c : p.coeffs())
        coeff_bits = std::max<long>(coeff_bits, static_cast<long>(msb(abs(c) + 1)) + 2);
    const mpfr_prec_t wp = 2 * precision_bits + 32 + coeff_bits;

    auto real_intervals = isolate_real_roots(p, precision_bits + 8);
    const int n_real = static_cast<int>(real_intervals.size());
    const int n_complex = d - n_real;
    if (n_complex % 2 != 0)
        throw PrecisionExhausted("real/complex root count mismatch");

    const Rat target = rat_pow(Rat(1, 2), precision_bits);
    const double offsets[] = {0.37, 1.13, 2.71};
    std::string failure = "no certified disc configuration";

    for (double offset : offsets) {
        std::vector<Candidate> cands;
        for (const auto& [lo, hi] : real_intervals) cands.push_back({(lo + hi) / 2, Rat(0)});

        if (n_complex > 0) {
            mpfr_prec_t stage = std::min<mpfr_prec_t>(wp, 192 + coeff_bits);
            auto approx = durand_kerner(p, stage, offset);
            std::sort(approx.begin(), approx.end(), [&](const CNum& a, const CNum& b) {
                return Mpf::abs(a.im).cmp(Mpf::abs(b.im)) > 0;
            });
            approx.erase(approx.begin() + n_complex, approx.end());
            std::vector<CNum> upper;
            for (auto& z : approx)
                if (z.im.sgn() > 0) upper.push_back(std::move(z));
            if (static_cast<int>(upper.size()) != n_complex / 2) continue;

            auto coeffs = to_cnum_coeffs(p, wp);
            auto dcoeffs = to_cnum_coeffs(p.derivative(), wp);
            int iters = 8;
            for (mpfr_prec_t b = 64; b < wp; b *= 2) ++iters;
            for (auto& z : upper) {
                CNum lifted(wp);
                lifted.re = z.re;
                lifted.im = z.im;
                newton_polish(coeffs, dcoeffs, lifted, wp, iters);
                Rat re = lifted.re.to_rat();
                Rat im = lifted.im.to_rat();
                cands.push_back({re, im});
                cands.push_back({re, -im});
            }
        }

        auto radii = [&]() -> std::vector<Rat> {
            try {
                return weierstrass_radii(p, cands, wp);
            } catch (const std::domain_error&) {
                return {}; // coincident candidates
            }
        }();
        if (radii.empty()) continue;

        bool ok = true;
        for (std::size_t i = 0; i < cands.size() && ok; ++i) {
            if (radii[i] > target) {
                ok = false;
                failure = "disc radius exceeds 2^-" + std::to_string(precision_bits);
            }
            if (cands[i].im != 0 && abs(cands[i].im) <= radii[i]) {
                ok = false;
                failure = "nonreal disc touches the real axis";
            }
        }
        for (std::size_t i = 0; i < cands.size() && ok; ++i)
            for (std::size_t j = i + 1; j < cands.size() && ok; ++j) {
                Rat dist2 = (cands[i].re - cands[j].re) * (cands[i].re - cands[j].re) +
                            (cands[i].im - cands[j].im) * (cands[i].im - cands[j].im);
                Rat rr = radii[i] + radii[j];
                if (dist2 <= rr * rr) {
                    ok = false;
                    failure = "disc separation not certified";
                }
            }
        if (!ok) continue;

        std::vector<RootDisc> out;
        out.reserve(cands.size());
        for (std::size_t i = 0; i < cands.size(); ++i) {
            RootDisc disc;
            disc.re = cands[i].re;
            disc.im = cands[i].im;
            disc.radius = radii[i];
            disc.real = (cands[i].im == 0);
            out.push_back(std::move(disc));
        }
        std::sort(out.begin(), out.end(), [](const RootDisc& a, const RootDisc& b) {
            if (a.re != b.re) return a.re < b.re;
            return a.im < b.im;
        });
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (out[i].real) {
                out[i].conj_index = static_cast<int>(i);
                continue;
            }
            for (std::size_t j = 0; j < out.size(); ++j)
                if (out[j].re == out[i].re && out[j].im == -out[i].im)
                    out[i].conj_index = static_cast<int>(j);
        }
        return out;
    }
    throw PrecisionExhausted("certified_roots: " + failure);
}

} // namespace thue
