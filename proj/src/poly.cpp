#include "thueforms/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "thueforms/errors.hpp"

namespace thue {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(const Int& c, std::size_t k) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(k + 1, Int(0));
        p.c_[k] = c;
    }
    return p;
}

const Int& IntPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading() of zero polynomial");
    return c_.back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    std::vector<Int> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Int(i));
    return IntPoly(std::move(d));
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& v : c_) g = gcd(g, v);
    return g < 0 ? Int(-g) : g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> d;
    d.reserve(c_.size());
    for (const auto& v : c_) d.push_back(v / g);
    return IntPoly(std::move(d));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> d(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return IntPoly(std::move(d));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> d(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
    return IntPoly(std::move(d));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> d(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> d;
    d.reserve(c_.size());
    for (const auto& v : c_) d.push_back(-v);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::divexact_monic(const IntPoly& divisor) const {
    if (!divisor.is_monic()) throw std::logic_error("divexact_monic: divisor not monic");
    std::vector<Int> rem = c_;
    int dd = divisor.degree();
    int qd = degree() - dd;
    if (qd < 0) {
        if (is_zero()) return IntPoly();
        throw std::logic_error("divexact_monic: not divisible");
    }
    std::vector<Int> q(qd + 1, Int(0));
    for (int k = qd; k >= 0; --k) {
        Int f = rem[k + dd];
        q[k] = f;
        if (f == 0) continue;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= f * divisor.c_[i];
    }
    for (const auto& v : rem)
        if (v != 0) throw std::logic_error("divexact_monic: nonzero remainder");
    return IntPoly(std::move(q));
}

RatPoly IntPoly::to_rat() const {
    std::vector<Rat> d;
    d.reserve(c_.size());
    for (const auto& v : c_) d.emplace_back(v);
    return RatPoly(std::move(d));
}

namespace {
template <typename C>
std::string poly_str(const std::vector<C>& c, const std::string& var) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        std::string t = to_string(c[i]);
        bool neg = t.size() && t[0] == '-';
        if (neg) t = t.substr(1);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit = (t == "1");
        if (i == 0) {
            os << t;
        } else {
            if (!unit) os << t << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}
} // namespace

std::string IntPoly::str(const std::string& var) const { return poly_str(c_, var); }
std::string RatPoly::str(const std::string& var) const { return poly_str(c_, var); }

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(Rat c) {
    RatPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

const Rat& RatPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading() of zero polynomial");
    return c_.back();
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(i));
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return RatPoly();
    return *this * (Rat(1) / leading());
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> d(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return RatPoly(std::move(d));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> d(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
    return RatPoly(std::move(d));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> d(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(d));
}

RatPoly RatPoly::operator-() const {
    std::vector<Rat> d;
    d.reserve(c_.size());
    for (const auto& v : c_) d.push_back(-v);
    return RatPoly(std::move(d));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    if (s == 0) return RatPoly();
    std::vector<Rat> d;
    d.reserve(c_.size());
    for (const auto& v : c_) d.push_back(v * s);
    return RatPoly(std::move(d));
}

std::pair<RatPoly, RatPoly> RatPoly::divrem(const RatPoly& divisor) const {
    if (divisor.is_zero()) throw std::logic_error("divrem by zero polynomial");
    RatPoly rem = *this;
    int dd = divisor.degree();
    int qd = degree() - dd;
    if (qd < 0) return {RatPoly(), rem};
    std::vector<Rat> q(qd + 1, Rat(0));
    const Rat& lead = divisor.leading();
    while (rem.degree() >= dd) {
        int k = rem.degree() - dd;
        Rat f = rem.leading() / lead;
        q[k] = f;
        std::vector<Rat> r = rem.c_;
        for (int i = 0; i <= dd; ++i) r[k + i] -= f * divisor.c_[i];
        rem = RatPoly(std::move(r));
    }
    return {RatPoly(std::move(q)), rem};
}

bool RatPoly::divides(const RatPoly& divisor) const {
    if (divisor.is_zero()) return is_zero();
    return divrem(divisor).second.is_zero();
}

IntPoly RatPoly::primitive_integer() const {
    if (is_zero()) return IntPoly();
    Int lcm_den(1);
    for (const auto& v : c_) lcm_den = lcm(lcm_den, den(v));
    std::vector<Int> d;
    d.reserve(c_.size());
    for (const auto& v : c_) d.push_back(num(v) * (lcm_den / den(v)));
    return IntPoly(std::move(d)).primitive_part();
}

// ------------------------------------------------------- gcd / squarefree

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly f = a, g = b;
    while (!g.is_zero()) {
        RatPoly r = f.divrem(g).second;
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    return f.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.degree() <= 0) return p.monic();
    RatPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.monic();
    return p.divrem(g).first.monic();
}

bool is_squarefree(const IntPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    return poly_gcd(p.to_rat(), p.to_rat().derivative()).degree() == 0;
}

// ------------------------------------------------------------- cyclotomic

IntPoly cyclotomic(unsigned long k) {
    if (k == 0) throw std::invalid_argument("cyclotomic(0)");
    // X^k - 1 divided by all lower-index cyclotomic factors
    std::vector<Int> xe(k + 1, Int(0));
    xe[0] = -1;
    xe[k] = 1;
    IntPoly p{std::vector<Int>(xe)};
    for (unsigned long d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        p = p.divexact_monic(cyclotomic(d));
    }
    return p;
}

bool is_cyclotomic(const IntPoly& p) {
    if (p.degree() < 1 || !p.is_monic()) return false;
    auto deg = static_cast<unsigned long>(p.degree());
    // phi(k) >= sqrt(k/2), so phi(k) == deg forces k <= 2*deg^2
    for (unsigned long k = 1; k <= 2 * deg * deg + 1; ++k) {
        // Euler phi
        unsigned long n = k, phi = k;
        for (unsigned long q = 2; q * q <= n; ++q) {
            if (n % q == 0) {
                phi -= phi / q;
                while (n % q == 0) n /= q;
            }
        }
        if (n > 1) phi -= phi / n;
        if (phi != deg) continue;
        if (p == cyclotomic(k)) return true;
    }
    return false;
}

// ------------------------------------------------------------------ Sturm

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
    std::vector<RatPoly> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    RatPoly d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        const RatPoly& a = seq[seq.size() - 2];
        const RatPoly& b = seq[seq.size() - 1];
        RatPoly r = a.divrem(b).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

namespace {
int variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}
} // namespace

int sign_variations_at(const std::vector<RatPoly>& seq, const Rat& x) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& q : seq) signs.push_back(sign(q.eval(x)));
    return variations(signs);
}

int sign_variations_at_neg_inf(const std::vector<RatPoly>& seq) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& q : seq) {
        int s = sign(q.leading());
        if (q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

int sign_variations_at_pos_inf(const std::vector<RatPoly>& seq) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& q : seq) signs.push_back(sign(q.leading()));
    return variations(signs);
}

int count_real_roots(const IntPoly& p) {
    if (p.degree() <= 0) return 0;
    auto seq = sturm_sequence(p.to_rat());
    return sign_variations_at_neg_inf(seq) - sign_variations_at_pos_inf(seq);
}

int count_real_roots_in(const std::vector<RatPoly>& seq, const Rat& a, const Rat& b) {
    return sign_variations_at(seq, a) - sign_variations_at(seq, b);
}

Int root_bound(const IntPoly& p) {
    if (p.degree() < 1) return Int(1);
    Rat lead(abs(p.leading()));
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat v = Rat(abs(p.coeff(i))) / lead;
        if (v > m) m = v;
    }
    return rat_ceil(m) + 1;
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p, long width_bits) {
    std::vector<std::pair<Rat, Rat>> out;
    if (p.degree() < 1) return out;
    auto seq = sturm_sequence(p.to_rat());

    // power-of-two outer bound keeps every endpoint dyadic
    Int bound = root_bound(p);
    Int m(2);
    while (m < bound) m *= 2;
    Rat lo(-m), hi(m);
    int total = count_real_roots_in(seq, lo, hi);
    if (total == 0) return out;

    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::vector<Seg> work{{lo, hi, total}};
    std::vector<Seg> isolated;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            isolated.push_back(s);
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        if (p.eval(mid) == 0)
            throw std::logic_error("isolate_real_roots: rational root encountered");
        int left = count_real_roots_in(seq, s.lo, mid);
        work.push_back({s.lo, mid, left});
        work.push_back({mid, s.hi, s.count - left});
    }

    Rat target = rat_pow(Rat(1, 2), width_bits);
    for (auto& s : isolated) {
        while (s.hi - s.lo > target) {
            Rat mid = (s.lo + s.hi) / 2;
            if (p.eval(mid) == 0)
                throw std::logic_error("isolate_real_roots: rational root encountered");
            if (count_real_roots_in(seq, s.lo, mid) == 1)
                s.hi = mid;
            else
                s.lo = mid;
        }
        out.emplace_back(s.lo, s.hi);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace thue
