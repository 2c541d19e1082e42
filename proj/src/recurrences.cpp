#include "thueforms/recurrences.hpp"

#include <stdexcept>

#include "thueforms/errors.hpp"
#include "thueforms/numfield.hpp"

namespace thue {

SequenceWindow SequenceWindow::from_ints(long base, const std::vector<Int>& vals) {
    SequenceWindow w;
    w.base = base;
    w.values.reserve(vals.size());
    for (const auto& v : vals) w.values.emplace_back(v);
    return w;
}

RecurrenceCheck verify_recurrence(const LinearRecurrence& rec, const SequenceWindow& w) {
    const int k = rec.order();
    if (k < 1) throw std::invalid_argument("recurrence order must be >= 1");
    if (w.size() < k + 1) throw WindowTooShort();
    RecurrenceCheck res;
    for (long i = 0; i + k < w.size(); ++i) {
        Rat predicted(0);
        for (int j = 0; j < k; ++j) predicted -= rec.charpoly.coeff(j) * w.values[i + j];
        if (predicted != w.values[i + k]) {
            res.pass = false;
            res.first_failure = w.base + i + k;
            return res;
        }
    }
    return res;
}

RecurrenceCheck verify_inhomogeneous(const InhomogeneousRecurrence& rec, const SequenceWindow& w) {
    if (rec.homogeneous.order() != 2)
        throw std::invalid_argument("inhomogeneous verifier expects order 2");
    if (w.size() < 3) throw WindowTooShort();
    RecurrenceCheck res;
    const Rat c1 = -rec.homogeneous.charpoly.coeff(1);
    const Rat c2 = -rec.homogeneous.charpoly.coeff(0);
    for (long i = 0; i + 2 < w.size(); ++i) {
        long a = w.base + i;
        Rat forcing = rec.forcing_coeff;
        if (rec.forcing_base == -1 && ((a % 2) + 2) % 2 == 1) forcing = -forcing;
        Rat predicted = c1 * w.values[i + 1] + c2 * w.values[i] + forcing;
        if (predicted != w.values[i + 2]) {
            res.pass = false;
            res.first_failure = a + 2;
            return res;
        }
    }
    return res;
}

LinearRecurrence fit_minimal_recurrence(const SequenceWindow& w, int max_order) {
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    for (int k = 1; k <= max_order; ++k) {
        if (w.size() < 2 * k + 1) break; // cannot certify this order
        // unknowns q_0..q_{k-1} with s_{i+k} = sum_j q_j s_{i+j} for all i
        const long rows = w.size() - k;
        std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(k + 1, Rat(0)));
        for (long i = 0; i < rows; ++i) {
            for (int j = 0; j < k; ++j) m[i][j] = w.values[i + j];
            m[i][k] = w.values[i + k];
        }
        // Gaussian elimination with consistency check
        std::vector<int> pivot_col;
        long row = 0;
        for (int col = 0; col < k && row < rows; ++col) {
            long p = -1;
            for (long r = row; r < rows; ++r)
                if (m[r][col] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) continue;
            std::swap(m[p], m[row]);
            Rat inv_p = Rat(1) / m[row][col];
            for (int j = col; j <= k; ++j) m[row][j] *= inv_p;
            for (long r = 0; r < rows; ++r) {
                if (r == row || m[r][col] == 0) continue;
                Rat f = m[r][col];
                for (int j = col; j <= k; ++j) m[r][j] -= f * m[row][j];
            }
            pivot_col.push_back(col);
            ++row;
        }
        bool consistent = true;
        for (long r = row; r < rows; ++r)
            if (m[r][k] != 0) {
                consistent = false;
                break;
            }
        if (!consistent) continue;
        // free variables set to zero
        std::vector<Rat> q(k, Rat(0));
        for (std::size_t i = 0; i < pivot_col.size(); ++i) q[pivot_col[i]] = m[i][k];
        std::vector<Rat> cp(k + 1, Rat(0));
        cp[k] = 1;
        for (int j = 0; j < k; ++j) cp[j] = -q[j];
        LinearRecurrence rec{RatPoly(std::move(cp))};
        if (verify_recurrence(rec, w).pass) return rec;
    }
    throw NoRecurrenceFound();
}

bool charpoly_divides(const LinearRecurrence& a, const LinearRecurrence& b) {
    return b.charpoly.divides(a.charpoly);
}

namespace {

// Z[eps] with eps^2 = t*eps - delta; elements a + b*eps
struct QuadElem {
    Int a, b;
};

QuadElem q_mul(const QuadElem& x, const QuadElem& y, const Int& t, int delta) {
    // (a1 + b1 e)(a2 + b2 e) = a1 a2 - delta b1 b2 + (a1 b2 + a2 b1 + t b1 b2) e
    return {x.a * y.a - Int(delta) * x.b * y.b, x.a * y.b + x.b * y.a + t * x.b * y.b};
}

QuadElem q_pow(QuadElem x, unsigned long e, const Int& t, int delta) {
    QuadElem acc{1, 0};
    while (e > 0) {
        if (e & 1) acc = q_mul(acc, x, t, delta);
        x = q_mul(x, x, t, delta);
        e >>= 1;
    }
    return acc;
}

// multiply out prod (T - gamma_l) with gamma in Z[eps]; assert the result is rational
IntPoly product_of_linear_factors(const std::vector<QuadElem>& gammas, const Int& t, int delta) {
    std::vector<QuadElem> coeffs{{1, 0}}; // polynomial "1"
    for (const auto& g : gammas) {
        std::vector<QuadElem> next(coeffs.size() + 1, QuadElem{0, 0});
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            // * T
            next[i + 1].a += coeffs[i].a;
            next[i + 1].b += coeffs[i].b;
            // * (-gamma)
            QuadElem prod = q_mul(coeffs[i], g, t, delta);
            next[i].a -= prod.a;
            next[i].b -= prod.b;
        }
        coeffs = std::move(next);
    }
    std::vector<Int> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (c.b != 0)
            throw std::logic_error("unit product polynomial has an irrational coefficient");
        out.push_back(c.a);
    }
    return IntPoly(std::move(out));
}

void require_quadratic_irreducible(const Int& t, int delta) {
    if (delta != 1 && delta != -1) throw std::invalid_argument("delta must be +-1");
    Int disc = t * t - 4 * delta;
    if (disc >= 0) {
        Int r = nth_root_floor(disc, 2);
        if (r * r == disc) throw NotIrreducible("T^2 - tT + delta has a rational root");
    }
}

} // namespace

IntPoly quadratic_unit_charpoly(const Int& eps_trace, int eps_norm, int h) {
    if (h < 1) throw std::invalid_argument("h must be >= 1");
    require_quadratic_irreducible(eps_trace, eps_norm);
    // eps = class of T, conj(eps) = t - eps
    std::vector<QuadElem> gammas;
    gammas.reserve(h + 1);
    for (int l = 0; l <= h; ++l) {
        QuadElem e1 = q_pow({0, 1}, static_cast<unsigned long>(l), eps_trace, eps_norm);
        QuadElem e2 = q_pow({eps_trace, -1}, static_cast<unsigned long>(h - l), eps_trace, eps_norm);
        gammas.push_back(q_mul(e1, e2, eps_trace, eps_norm));
    }
    return product_of_linear_factors(gammas, eps_trace, eps_norm);
}

IntPoly quadratic_unit_dual_charpoly(const Int& eps_trace, int eps_norm, int d, int h) {
    if (d % 2 != 0) throw OddDegreeUnsupported();
    if (h < 0 || h > d) throw std::invalid_argument("h out of range");
    require_quadratic_irreducible(eps_trace, eps_norm);
    // delta^(d/2) eps^-l conj(eps)^(l-g) = delta^(d/2+g) eps^(g-l) conj(eps)^l
    // for g = d-h, using eps^-1 = delta * conj(eps)
    const int g = d - h;
    int scale = ((d / 2 + g) % 2 == 1 && eps_norm == -1) ? -1 : 1;
    std::vector<QuadElem> gammas;
    gammas.reserve(g + 1);
    for (int l = 0; l <= g; ++l) {
        QuadElem e1 = q_pow({0, 1}, static_cast<unsigned long>(g - l), eps_trace, eps_norm);
        QuadElem e2 = q_pow({eps_trace, -1}, static_cast<unsigned long>(l), eps_trace, eps_norm);
        QuadElem prod = q_mul(e1, e2, eps_trace, eps_norm);
        gammas.push_back({Int(scale) * prod.a, Int(scale) * prod.b});
    }
    return product_of_linear_factors(gammas, eps_trace, eps_norm);
}

InhomogeneousRecurrence inhomogeneous_U2(const Int& eps_trace, int eps_norm,
                                         const SequenceWindow& w) {
    if (w.base > -1 || w.base + w.size() <= 1)
        throw WindowTooShort("window must cover a in {-1, 0, 1}");
    require_quadratic_irreducible(eps_trace, eps_norm);
    // (T - eps^2)(T - conj(eps)^2) = T^2 - (t^2 - 2 delta) T + delta^2
    Rat c1 = Rat(eps_trace * eps_trace - 2 * eps_norm);
    Rat c2 = Rat(-1); // -delta^2
    InhomogeneousRecurrence rec;
    rec.homogeneous = LinearRecurrence{RatPoly({-c2, -c1, Rat(1)})};
    rec.forcing_base = eps_norm;
    // solve c3 from the instance at a = -1: U2(1) = c1 U2(0) + c2 U2(-1) + c3 delta^-1
    Rat residual = w.at_index(1) - c1 * w.at_index(0) - c2 * w.at_index(-1);
    rec.forcing_coeff = residual * Rat(eps_norm); // delta^-1 = delta
    auto check = verify_inhomogeneous(rec, w);
    if (!check.pass)
        throw std::logic_error("inhomogeneous U_2 relation failed at index " +
                               std::to_string(*check.first_failure));
    return rec;
}

std::pair<LinearRecurrence, LinearRecurrence> cubic_unit_recurrences(const Int& r, const Int& s,
                                                                     int delta, int d) {
    if (delta != 1 && delta != -1) throw std::invalid_argument("delta must be +-1");
    if (r - s == Int(1 - delta) || r + s == Int(-1 - delta))
        throw NotIrreducible("T^3 - rT^2 + sT - delta has a rational root");
    // U_1: char poly of eps itself
    LinearRecurrence u1{RatPoly({Rat(-delta), Rat(s), Rat(-r), Rat(1)})};
    // U_{d-1}: char poly T^3 - delta^{d+1} s T^2 + delta r T - delta^{d+1}
    Rat dp1 = (delta == -1 && d % 2 == 0) ? Rat(-1) : Rat(1);
    LinearRecurrence ud1{RatPoly({-dp1, Rat(delta) * Rat(r), -dp1 * Rat(s), Rat(1)})};
    return {u1, ud1};
}

std::array<Rat, 3> cubic_initial_conditions(const Rat& A, const Rat& B, const Rat& C,
                                            const Int& r, const Int& s, int delta) {
    Rat rr(r), ss(s), dd(delta);
    Rat p2 = rr * rr - 2 * ss;                 // power sum of eps^2
    Rat p3 = rr * rr * rr - 3 * rr * ss + 3 * dd;
    return {A * dd * ss + 3 * B + C * rr,
            3 * A + B * rr + C * p2,
            A * rr + B * p2 + C * p3};
}

IntPoly cubic_unit_charpoly(const Int& r, const Int& s, int delta, int h, long precision_bits) {
    if (h < 1) throw std::invalid_argument("h must be >= 1");
    if (delta != 1 && delta != -1) throw std::invalid_argument("delta must be +-1");
    if (r - s == Int(1 - delta) || r + s == Int(-1 - delta))
        throw NotIrreducible("T^3 - rT^2 + sT - delta has a rational root");
    IntPoly mp({Int(-delta), s, -r, Int(1)});
    auto field = NumberField::create(mp);
    auto set = embeddings(field, precision_bits);
    const mpfr_prec_t wp = static_cast<mpfr_prec_t>(2 * precision_bits);

    std::vector<ComplexInterval> eps_pows[3];
    for (int i = 0; i < 3; ++i) {
        ComplexInterval e =
            ComplexInterval::from_disc(set.roots[i].re, set.roots[i].im, set.roots[i].radius, wp);
        ComplexInterval acc = ComplexInterval::from_rat(Rat(1), Rat(0), wp);
        eps_pows[i].push_back(acc);
        for (int k = 1; k <= h; ++k) {
            acc = acc * e;
            eps_pows[i].push_back(acc);
        }
    }

    std::vector<ComplexInterval> coeffs{ComplexInterval::from_rat(Rat(1), Rat(0), wp)};
    for (int l1 = 0; l1 <= h; ++l1)
        for (int l2 = 0; l1 + l2 <= h; ++l2) {
            int l3 = h - l1 - l2;
            ComplexInterval gamma = eps_pows[0][l1] * eps_pows[1][l2] * eps_pows[2][l3];
            std::vector<ComplexInterval> next(coeffs.size() + 1,
                                              ComplexInterval::from_rat(Rat(0), Rat(0), wp));
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] = next[i + 1] + coeffs[i];
                next[i] = next[i] - coeffs[i] * gamma;
            }
            coeffs = std::move(next);
        }

    std::vector<Int> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (!c.im().contains_zero())
            throw PrecisionExhausted("cubic product coefficient excludes the real axis");
        if (!(c.re().width_double() < 1.0) || !(c.im().width_double() < 1.0))
            throw PrecisionExhausted("cubic product coefficient interval too wide to round");
        Rat lo = c.re().lo_rat(), hi = c.re().hi_rat();
        Int v = rat_ceil(lo);
        if (Rat(v) > hi)
            throw PrecisionExhausted("cubic product coefficient interval contains no integer");
        out.push_back(v);
    }
    return IntPoly(std::move(out));
}

} // namespace thue
