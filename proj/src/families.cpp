#include "thueforms/families.hpp"

#include <stdexcept>

#include "thueforms/errors.hpp"

namespace thue {

namespace {

// Lucas-type integer sequences for a quadratic unit with trace t, norm q = +-1:
//   P(a) = eps^a + conj(eps)^a,  S(a) = (eps^a - conj(eps)^a)/(eps - conj(eps))
Int lucas_P(const Int& t, int q, long long a) {
    long long k = a >= 0 ? a : -a;
    Int prev(2), cur(t);
    if (k == 0) return prev;
    for (long long i = 1; i < k; ++i) {
        Int next = t * cur - q * prev;
        prev = cur;
        cur = next;
    }
    if (a < 0) return pm_pow(q, k) * cur;
    return cur;
}

Int lucas_S(const Int& t, int q, long long a) {
    long long k = a >= 0 ? a : -a;
    Int prev(0), cur(1);
    if (k == 0) return prev;
    for (long long i = 1; i < k; ++i) {
        Int next = t * cur - q * prev;
        prev = cur;
        cur = next;
    }
    if (a < 0) return -pm_pow(q, k) * cur;
    return cur;
}

} // namespace

// ---------------------------------------------------------- Bernstein-Hasse

void BernsteinHasseParams::validate() const {
    if (D < 1) throw InvalidParams("D must be a positive integer");
    if (n < 2) throw InvalidParams("n must be >= 2");
    if (c != 1 && c != -1) throw InvalidParams("c must be +-1");
    Int m = int_pow(Int(D), 2 * static_cast<unsigned long>(n)) + c;
    if (m < 2) throw InvalidParams("D^(2n)+c must be >= 2");
}

TwistedFamily bh_build(const BernsteinHasseParams& p) {
    p.validate();
    const int d = 2 * p.n;
    Int m = int_pow(Int(p.D), static_cast<unsigned long>(d)) + p.c;
    std::vector<Int> f(d + 1, Int(0));
    f[0] = -m;
    f[d] = 1;
    auto field = NumberField::create(IntPoly(std::move(f)));
    FieldElement omega = FieldElement::generator(field);
    FieldElement alpha = FieldElement::from_rational(field, Rat(p.D)) + omega;
    FieldElement eps = FieldElement::from_rational(field, Rat(int_pow(Int(p.D), p.n))) +
                       pow(omega, p.n);
    TwistedFamily fam = family_new(field, alpha, eps);
    if (fam.delta() != -p.c || fam.nu() != p.n)
        throw std::logic_error("bh_build: family invariants do not match delta=-c, nu=n");
    return fam;
}

Int bh_predict(const BernsteinHasseParams& p, int h, long a) {
    p.validate();
    const int n = p.n;
    const Int D(p.D);
    const Int t = 2 * int_pow(D, n); // trace of eps
    const int q = -p.c;              // norm of eps
    if (h == 1) return n * D * lucas_P(t, q, a);
    if (h == 2) {
        if (n == 2)
            return 4 * D * D * pm_pow(-p.c, a) + q * lucas_P(t, q, 2L * a - 1);
        return Int(n) * n * D * D * pm_pow(-p.c, a) +
               Int(n) * (n - 1) / 2 * D * D * lucas_P(t, q, 2L * a);
    }
    if (h == 2 * n - 1) {
        Int mn = int_pow(D, 2 * static_cast<unsigned long>(n)) + p.c; // omega^(2n)
        Int inner = int_pow(D, n) * lucas_P(t, q, a) +
                    neg_one_pow(n - 1) * 2 * mn * lucas_S(t, q, a);
        return pm_pow(-p.c, static_cast<long long>(n - 1) * a) * n * int_pow(D, n - 1) * inner;
    }
    if (h == 2 * n) return pm_pow(-p.c, static_cast<long long>(n) * a + 1);
    throw UnsupportedIndex("closed forms cover h in {1, 2, 2n-1, 2n}");
}

std::pair<Int, Int> bh_vw(const BernsteinHasseParams& p, int h, long a) {
    p.validate();
    const int n = p.n;
    if (h < 0 || h > 2 * n) throw std::out_of_range("bh_vw: h out of [0, 2n]");
    const Int D(p.D);
    const Int t = 2 * int_pow(D, n);
    const int q = -p.c;

    // V_h(a) = D^h sum_{i+j=h, 0<=i,j<=n} C(n,i) C(n,j) eps^(ai) conj(eps)^(aj)
    Int v(0);
    for (int i = std::max(0, h - n); i <= std::min(n, h); ++i) {
        int j = h - i;
        if (i < j) continue; // pair (i,j),(j,i) handled once from the larger side
        Int cc = binomial(n, i) * binomial(n, j);
        if (i == j)
            v += cc * pm_pow(q, static_cast<long long>(a) * i);
        else
            v += cc * pm_pow(q, static_cast<long long>(a) * j) *
                 lucas_P(t, q, static_cast<long long>(a) * (i - j));
    }
    v *= int_pow(D, h);

    Int w(0);
    if (h >= n && h <= 2 * n - 1) {
        long long k = static_cast<long long>(a) * (2 * n - h);
        w = 2 * neg_one_pow(n - 1) * pm_pow(-p.c, static_cast<long long>(h - n) * a) *
            binomial(n, 2 * n - h) * int_pow(D, h - n) * lucas_S(t, q, k);
    }
    return {v, w};
}

bool bh_factorization_check(const BernsteinHasseParams& p, long a) {
    p.validate();
    const int n = p.n;
    TwistedFamily fam = bh_build(p);
    BinaryForm reference = form_at(fam, a); // throws on degenerate a
    const auto& field = fam.field();

    FieldElement omega_n = pow(FieldElement::generator(field), n);
    FieldElement Dn = FieldElement::from_rational(field, Rat(int_pow(Int(p.D), n)));
    FieldElement eps = Dn + omega_n;
    FieldElement eps_bar = Dn - omega_n;
    FieldElement eps_a = pow(eps, a);
    FieldElement eps_bar_a = pow(eps_bar, a);
    FieldElement eps_na = pow(eps_a, n);
    FieldElement eps_bar_na = pow(eps_bar_a, n);

    // factor coefficients in Y-degree j, for (X - u D Y)^n -+ u^n w^n Y^n
    auto factor_coeffs = [&](const FieldElement& u, const FieldElement& un, int sign_wn) {
        std::vector<FieldElement> c;
        c.reserve(n + 1);
        FieldElement mud = -(u * Rat(p.D)); // -uD
        FieldElement power = FieldElement::one(field);
        for (int j = 0; j <= n; ++j) {
            c.push_back(power * Rat(binomial(n, j)));
            if (j < n) power = power * mud;
        }
        c[n] = c[n] + (un * omega_n) * Rat(sign_wn);
        return c;
    };

    auto f1 = factor_coeffs(eps_a, eps_na, -1);
    auto f2 = factor_coeffs(eps_bar_a, eps_bar_na, +1);

    std::vector<FieldElement> prod(2 * n + 1, FieldElement::zero(field));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) prod[i + j] = prod[i + j] + f1[i] * f2[j];

    for (int h = 0; h <= 2 * n; ++h) {
        if (!(prod[h] == FieldElement::from_rational(field, Rat(reference.coeffs[h]))))
            return false;
    }
    return true;
}

// ------------------------------------------------------------------- Shanks

void ShanksParams::validate() const {
    if (b1 * c2 == b2 * c1)
        throw InvalidParams("exponents must satisfy b1*c2 != b2*c1");
}

TwistedFamily shanks_build(const ShanksParams& p) {
    p.validate();
    Int n(p.n);
    IntPoly f({Int(-1), -(n + 2), -(n - 1), Int(1)});
    auto field = NumberField::create(f);
    FieldElement l1 = FieldElement::generator(field);
    FieldElement l2 = -inv(l1 + FieldElement::one(field));
    FieldElement eps = pow(l1, p.b1) * pow(l2, p.b2);
    FieldElement alpha = pow(l1, p.c1) * pow(l2, p.c2);
    return family_new(field, alpha, eps);
}

std::pair<IntWindow, IntWindow> shanks_st(long long n, long a_min, long a_max) {
    if (a_min > a_max) throw std::invalid_argument("a_min > a_max");
    Int nn(n);
    // initial triples at a = 0, 1, 2
    std::vector<Int> s0{nn - 1, -nn - 2, -nn * nn - nn - 4};
    std::vector<Int> t0{-nn - 2, nn - 1, Int(3)};

    auto generate = [&](const std::vector<Int>& init, const Int& k2, const Int& k1,
                        const Int& k0) {
        // x_{a+3} = k2 x_{a+2} + k1 x_{a+1} + k0 x_a, with k0 = +-1 for exact backsteps
        IntWindow w;
        w.base = a_min;
        long lo = std::min<long>(a_min, 0), hi = std::max<long>(a_max, 2);
        std::vector<Int> vals(static_cast<std::size_t>(hi - lo + 1));
        auto at = [&](long a) -> Int& { return vals[static_cast<std::size_t>(a - lo)]; };
        for (long a = 0; a <= 2; ++a)
            if (a >= lo && a <= hi) at(a) = init[static_cast<std::size_t>(a)];
        for (long a = 3; a <= hi; ++a) at(a) = k2 * at(a - 1) + k1 * at(a - 2) + k0 * at(a - 3);
        for (long a = -1; a >= lo; --a)
            at(a) = (at(a + 3) - k2 * at(a + 2) - k1 * at(a + 1)) * k0; // k0^-1 = k0
        w.values.assign(vals.begin() + (a_min - lo), vals.begin() + (a_max - lo + 1));
        return w;
    };

    IntWindow s = generate(s0, nn - 1, nn + 2, Int(1));
    IntWindow t = generate(t0, -nn - 2, -(nn - 1), Int(1));
    return {s, t};
}

BinaryForm shanks_form(long long n, long a) {
    auto [s, t] = shanks_st(n, a, a);
    BinaryForm f;
    f.degree = 3;
    f.coeffs = {Int(1), -s.values[0], t.values[0], Int(-1)};
    return f;
}

} // namespace thue
