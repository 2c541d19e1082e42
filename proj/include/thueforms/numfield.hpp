#ifndef THUEFORMS_NUMFIELD_HPP
#define THUEFORMS_NUMFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "thueforms/integers.hpp"
#include "thueforms/interval.hpp"
#include "thueforms/poly.hpp"
#include "thueforms/roots.hpp"

namespace thue {

// K = Q[X]/(f) for a monic squarefree integer polynomial f of degree >= 2.
//
// Irreducibility gate: exact squarefree test plus exhaustive rational-root
// exclusion (divisors of the constant term). Monic squarefree polynomials
// that factor into two nonlinear factors slip through this gate; the family
// constructors re-validate their own polynomials, and custom inputs carry
// this residual assumption.
class NumberField {
public:
    static std::shared_ptr<const NumberField> create(const IntPoly& defining_poly);

    const IntPoly& defining_poly() const { return poly_; }
    int degree() const { return degree_; }
    bool same_field(const NumberField& o) const { return poly_ == o.poly_; }

private:
    explicit NumberField(IntPoly p) : poly_(std::move(p)), degree_(poly_.degree()) {}
    IntPoly poly_;
    int degree_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of K in power-basis coordinates (d rationals).
class FieldElement {
public:
    FieldElement(FieldPtr field, std::vector<Rat> coords);

    static FieldElement zero(FieldPtr field);
    static FieldElement one(FieldPtr field);
    static FieldElement from_rational(FieldPtr field, const Rat& q);
    static FieldElement generator(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;
    FieldElement operator*(const Rat& s) const;
    bool operator==(const FieldElement& o) const;

private:
    FieldPtr field_;
    std::vector<Rat> coords_;
};

FieldElement inv(const FieldElement& u);             // throws DivisionByZero
FieldElement pow(const FieldElement& u, long k);     // negative k inverts once

// column j = coordinates of u * X^j mod f
std::vector<std::vector<Rat>> mul_matrix(const FieldElement& u);

RatPoly charpoly(const FieldElement& u); // monic, degree d, exact
IntPoly min_poly(const FieldElement& u); // primitive, leading coefficient > 0

Rat trace(const FieldElement& u);
Rat norm(const FieldElement& u);

bool is_totally_real(const FieldElement& u); // exact, Sturm count == degree
bool is_algebraic_integer(const FieldElement& u);
bool is_unit(const FieldElement& u);

// Certified complex embeddings of the field: one disc per root of the
// defining polynomial, sorted by (re, im).
struct EmbeddingSet {
    long precision_bits;
    std::vector<RootDisc> roots;
    int degree() const { return static_cast<int>(roots.size()); }
};

EmbeddingSet embeddings(const FieldPtr& field, long precision_bits);

// Enclosure of the image of u under the index-th embedding; evaluated at
// twice the set's precision.
ComplexInterval eval_embedding(const FieldElement& u, const EmbeddingSet& set, int index);

// max_phi |phi(u)| as an interval
RealInterval house(const FieldElement& u, const EmbeddingSet& set);

} // namespace thue

#endif
