#include "thueforms/integers.hpp"

#include <gmp.h>
#include <stdexcept>

namespace thue {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
    return q;
}

Int rat_floor(const Rat& q) { return floor_div(num(q), den(q)); }

Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.backend().data(), base.backend().data(), e);
    return r;
}

Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) {
        Rat r(int_pow(num(base), static_cast<unsigned long>(e)),
              int_pow(den(base), static_cast<unsigned long>(e)));
        return r;
    }
    if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
    Rat r(int_pow(den(base), static_cast<unsigned long>(-e)),
          int_pow(num(base), static_cast<unsigned long>(-e)));
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

Int nth_root_floor(const Int& v, unsigned long n) {
    if (v < 0) throw std::domain_error("nth_root_floor: negative radicand");
    Int r;
    mpz_root(r.backend().data(), v.backend().data(), n);
    return r;
}

Rat sqrt_lower_bound(const Rat& v) {
    if (v < 0) throw std::domain_error("sqrt_lower_bound: negative argument");
    // (isqrt(num*den) / den)^2 <= num/den
    Int nd = num(v) * den(v);
    return Rat(nth_root_floor(nd, 2), den(v));
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

Int int_from_string(const std::string& s) { return Int(s); }

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(n, d);
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SplitMix64 SplitMix64::for_index(std::uint64_t master_seed, std::uint64_t k) {
    SplitMix64 mixer(master_seed ^ (k * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL));
    return SplitMix64(mixer.next());
}

} // namespace thue
