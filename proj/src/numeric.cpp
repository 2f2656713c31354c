#include "atlas/numeric.hpp"

namespace atlas {

Int gcd_of(const std::vector<Int>& xs) {
  Int g = 0;
  for (const Int& x : xs) g = gcd(g, x);
  return g;
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
  if (a < 0 || b < 0) throw std::domain_error("ext_gcd: negative argument");
  if (a == 0 && b == 0) throw std::domain_error("ext_gcd: both arguments zero");
  if (b == 0) return {a, Int(1), Int(0)};
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int step = b / g;
  Int s0 = s - floor_div(s, step) * step;  // 0 <= s0 < b/g
  Int t0 = (g - a * s0) / b;
  return {g, s0, t0};
}

std::string rat_str(const Rat& x) {
  return x.get_str();
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::string body = s;
  auto slash = body.find('/');
  Rat r;
  try {
    if (slash == std::string::npos) {
      r = Rat(Int(body));
    } else {
      Int num(body.substr(0, slash));
      Int den(body.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
      r = Rat(num, den);
      r.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational \"" + s + "\"");
  }
  return r;
}

}  // namespace atlas
