#ifndef THUEFORMS_INTEGERS_HPP
#define THUEFORMS_INTEGERS_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace thue {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Int& v) { return v.sign(); }
inline int sign(const Rat& q) { return num(q).sign(); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

Int floor_div(const Int& a, const Int& b);

// floor/ceil of a rational, exact
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, long e);

// (-1)^e as an Int, e may be negative
inline Int neg_one_pow(long long e) { return (e % 2 == 0) ? Int(1) : Int(-1); }

// (+-1)^e
inline Int pm_pow(int base, long long e) {
    if (base == 1) return Int(1);
    if (base == -1) return neg_one_pow(e);
    throw std::invalid_argument("pm_pow base must be +-1");
}

Int binomial(unsigned long n, unsigned long k);

// largest r with r^n <= v; requires v >= 0, n >= 1
Int nth_root_floor(const Int& v, unsigned long n);

// a rational q with q^2 <= v (lower bound for sqrt(v)); requires v >= 0
Rat sqrt_lower_bound(const Rat& v);

std::string to_string(const Int& v);
std::string to_string(const Rat& q); // "num/den", or just "num" when den == 1
Int int_from_string(const std::string& s);
Rat rat_from_string(const std::string& s);

// SplitMix64: deterministic seedable stream, splittable by index.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    // independent stream for the k-th trial of a master seed
    static SplitMix64 for_index(std::uint64_t master_seed, std::uint64_t k);
};

} // namespace thue

#endif
