#include "thueforms/numfield.hpp"

#include <algorithm>
#include <stdexcept>

#include "thueforms/errors.hpp"

namespace thue {

// -------------------------------------------------------------- NumberField

std::shared_ptr<const NumberField> NumberField::create(const IntPoly& defining_poly) {
    if (defining_poly.degree() < 2)
        throw IrreducibilityFailed("defining polynomial must have degree >= 2");
    if (!defining_poly.is_monic()) throw NotMonic();
    if (!is_squarefree(defining_poly)) throw NotSquarefree();
    // rational-root exclusion: candidates are divisors of the constant term
    Int c0 = defining_poly.coeff(0);
    if (c0 == 0) throw IrreducibilityFailed("zero constant term (X divides)");
    Int a = abs(c0);
    for (Int q(1); q * q <= a; ++q) {
        if (a % q != 0) continue;
        for (const Int& cand : {q, a / q}) {
            if (defining_poly.eval(cand) == 0 || defining_poly.eval(Int(-cand)) == 0)
                throw IrreducibilityFailed("rational root " + to_string(cand));
        }
    }
    return std::shared_ptr<const NumberField>(new NumberField(defining_poly));
}

// ------------------------------------------------------------- FieldElement

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != field_->degree())
        throw std::invalid_argument("coordinate vector length != field degree");
}

FieldElement FieldElement::zero(FieldPtr field) {
    std::vector<Rat> c(field->degree(), Rat(0));
    return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::one(FieldPtr field) { return from_rational(std::move(field), Rat(1)); }

FieldElement FieldElement::from_rational(FieldPtr field, const Rat& q) {
    std::vector<Rat> c(field->degree(), Rat(0));
    c[0] = q;
    return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::generator(FieldPtr field) {
    std::vector<Rat> c(field->degree(), Rat(0));
    c[1] = 1;
    return FieldElement(std::move(field), std::move(c));
}

bool FieldElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& v) { return v == 0; });
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

namespace {
void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() == b.field()) return;
    if (!a.field()->same_field(*b.field())) throw FieldMismatch();
}

// reduce a coefficient vector of length <= 2d-1 modulo the defining polynomial
std::vector<Rat> reduce_mod(const IntPoly& f, std::vector<Rat> v) {
    const int d = f.degree();
    for (int k = static_cast<int>(v.size()) - 1; k >= d; --k) {
        Rat lead = v[k];
        if (lead == 0) continue;
        v[k] = 0;
        for (int i = 0; i < d; ++i) v[k - d + i] -= lead * Rat(f.coeff(i));
    }
    v.resize(d);
    return v;
}
} // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    std::vector<Rat> c(a.coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    std::vector<Rat> c(a.coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
    return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    const int d = a.field_->degree();
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (int i = 0; i < d; ++i) {
        if (a.coords_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b.coords_[j] == 0) continue;
            prod[i + j] += a.coords_[i] * b.coords_[j];
        }
    }
    return FieldElement(a.field_, reduce_mod(a.field_->defining_poly(), std::move(prod)));
}

FieldElement FieldElement::operator-() const {
    std::vector<Rat> c;
    c.reserve(coords_.size());
    for (const auto& v : coords_) c.push_back(-v);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const Rat& s) const {
    std::vector<Rat> c;
    c.reserve(coords_.size());
    for (const auto& v : coords_) c.push_back(v * s);
    return FieldElement(field_, std::move(c));
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_->same_field(*o.field_) && coords_ == o.coords_;
}

FieldElement inv(const FieldElement& u) {
    if (u.is_zero()) throw DivisionByZero();
    // extended Euclid in Q[X]: s*u + t*f = gcd = const
    const IntPoly& f = u.field()->defining_poly();
    RatPoly a(std::vector<Rat>(u.coords()));
    RatPoly b = f.to_rat();
    RatPoly s0 = RatPoly::constant(Rat(1)), s1;
    RatPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        RatPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0)
        throw DivisionByZero("element is a zero divisor (defining polynomial reducible)");
    RatPoly invpoly = s0 * (Rat(1) / r0.leading());
    std::vector<Rat> c(u.field()->degree(), Rat(0));
    for (int i = 0; i <= invpoly.degree(); ++i) c[i] = invpoly.coeff(i);
    return FieldElement(u.field(), std::move(c));
}

FieldElement pow(const FieldElement& u, long k) {
    FieldElement base = u;
    unsigned long e;
    if (k < 0) {
        base = inv(u); // single inversion, then square-and-multiply
        e = static_cast<unsigned long>(-(k + 1)) + 1;
    } else {
        e = static_cast<unsigned long>(k);
    }
    FieldElement acc = FieldElement::one(u.field());
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::vector<std::vector<Rat>> mul_matrix(const FieldElement& u) {
    const int d = u.field()->degree();
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d, Rat(0)));
    FieldElement col = u;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m[i][j] = col.coords()[i];
        if (j + 1 < d) col = col * FieldElement::generator(u.field());
    }
    return m;
}

RatPoly charpoly(const FieldElement& u) {
    // Faddeev-LeVerrier over exact rationals
    const int d = u.field()->degree();
    auto m = mul_matrix(u);
    std::vector<Rat> c(d + 1, Rat(0));
    c[d] = 1;
    std::vector<std::vector<Rat>> n(d, std::vector<Rat>(d, Rat(0)));
    for (int i = 0; i < d; ++i) n[i][i] = 1;
    for (int k = 1; k <= d; ++k) {
        // n = m * n
        std::vector<std::vector<Rat>> t(d, std::vector<Rat>(d, Rat(0)));
        for (int i = 0; i < d; ++i)
            for (int l = 0; l < d; ++l) {
                if (m[i][l] == 0) continue;
                for (int j = 0; j < d; ++j) t[i][j] += m[i][l] * n[l][j];
            }
        n = std::move(t);
        Rat tr(0);
        for (int i = 0; i < d; ++i) tr += n[i][i];
        c[d - k] = -tr / Rat(k);
        for (int i = 0; i < d; ++i) n[i][i] += c[d - k];
    }
    return RatPoly(std::move(c));
}

IntPoly min_poly(const FieldElement& u) {
    RatPoly sq = squarefree_part(charpoly(u));
    return sq.primitive_integer();
}

Rat trace(const FieldElement& u) {
    auto m = mul_matrix(u);
    Rat tr(0);
    for (std::size_t i = 0; i < m.size(); ++i) tr += m[i][i];
    return tr;
}

Rat norm(const FieldElement& u) {
    // determinant of the multiplication matrix, rational Gaussian elimination
    auto m = mul_matrix(u);
    const int d = static_cast<int>(m.size());
    Rat det(1);
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int row = col; row < d; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv_p = Rat(1) / m[col][col];
        for (int row = col + 1; row < d; ++row) {
            if (m[row][col] == 0) continue;
            Rat f = m[row][col] * inv_p;
            for (int j = col; j < d; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

bool is_totally_real(const FieldElement& u) {
    IntPoly mp = min_poly(u);
    return count_real_roots(mp) == mp.degree();
}

bool is_algebraic_integer(const FieldElement& u) {
    return min_poly(u).is_monic();
}

bool is_unit(const FieldElement& u) {
    if (u.is_zero()) return false;
    IntPoly mp = min_poly(u);
    return mp.is_monic() && abs(mp.coeff(0)) == 1;
}

// --------------------------------------------------------------- embeddings

EmbeddingSet embeddings(const FieldPtr& field, long precision_bits) {
    if (precision_bits < 64) throw std::invalid_argument("precision_bits must be >= 64");
    EmbeddingSet set;
    set.precision_bits = precision_bits;
    set.roots = certified_roots(field->defining_poly(), precision_bits);
    return set;
}

ComplexInterval eval_embedding(const FieldElement& u, const EmbeddingSet& set, int index) {
    if (index < 0 || index >= set.degree()) throw std::out_of_range("embedding index");
    const mpfr_prec_t wp = static_cast<mpfr_prec_t>(2 * set.precision_bits);
    const RootDisc& disc = set.roots[index];
    ComplexInterval z = ComplexInterval::from_disc(disc.re, disc.im, disc.radius, wp);
    ComplexInterval acc = ComplexInterval::from_rat(Rat(0), Rat(0), wp);
    const auto& c = u.coords();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * z + ComplexInterval::from_rat(*it, Rat(0), wp);
    return acc;
}

RealInterval house(const FieldElement& u, const EmbeddingSet& set) {
    RealInterval best = eval_embedding(u, set, 0).abs();
    for (int i = 1; i < set.degree(); ++i) {
        RealInterval v = eval_embedding(u, set, i).abs();
        RealInterval h = RealInterval::hull(best, v);
        // max hull: lower endpoint is the larger of the lows
        best = RealInterval(best.lo().cmp(v.lo()) >= 0 ? best.lo() : v.lo(), h.hi());
    }
    return best;
}

} // namespace thue
