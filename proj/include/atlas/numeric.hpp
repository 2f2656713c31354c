#ifndef ATLAS_NUMERIC_HPP
#define ATLAS_NUMERIC_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace atlas {

using Int = mpz_class;
using Rat = mpq_class;

inline Int numerator(const Rat& x) { return x.get_num(); }
inline Int denominator(const Rat& x) { return x.get_den(); }

// canonical num/den quotient; GMP arithmetic requires canonical operands
inline Rat frac(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// floor(a/b), b > 0
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& x) {
  return floor_div(numerator(x), denominator(x));
}

// representative of x + Z in [0, 1)
inline Rat mod1(const Rat& x) {
  Rat r = x - Rat(floor_rat(x));
  return r;
}

// representative of x + nZ in [0, n), n >= 1
inline Rat mod_n(const Rat& x, const Int& n) {
  Rat y = x / Rat(n);
  return mod1(y) * Rat(n);
}

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// gcd over a set, ignoring zeros; gcd() of all-zero input is 0
Int gcd_of(const std::vector<Int>& xs);

struct ExtGcd {
  Int g, s, t;  // a*s + b*t = g
};

// Extended gcd for a, b >= 0, not both zero. Canonical solution:
// if b > 0 then 0 <= s < b/g; if b == 0 then (s, t) = (1, 0).
ExtGcd ext_gcd(const Int& a, const Int& b);

std::string rat_str(const Rat& x);

// parses "n" or "n/d"; throws std::invalid_argument on bad syntax or d == 0
Rat parse_rat(const std::string& s);

// splitmix64: deterministic cross-platform stream for sampling
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  // uniform in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

}  // namespace atlas

#endif
