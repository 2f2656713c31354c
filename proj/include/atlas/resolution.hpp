#ifndef ATLAS_RESOLUTION_HPP
#define ATLAS_RESOLUTION_HPP

#include <cstdint>
#include <string>

#include "atlas/cochain.hpp"

namespace atlas {

// the standard third cocycle: exponent sum_{i<j<k} a(i,j,k) e_i x e_j x e_k on G.
// The parameter must be supported on strictly increasing triples.
PolyCochain third_cocycle_c_a(const ParameterA& a);

// the resolving 2-cochain on H: exponent sum a(i,j,k) e_i x e_{j,k};
// satisfies pullback(c_a) = boundary(b_a) identically.
PolyCochain resolve_third_cocycle(const ParameterA& a);

// reinterpret an abelian-flavored polynomial along the quotient pi_0
PolyCochain pullback_to_H(const PolyCochain& c);

struct ResolutionReport {
  int samples = 0;
  int failures = 0;
  Rat max_deviation;  // mod-1 deviation, 0 when everything matches
  bool symbolic_zero = false;
  std::uint64_t seed = 0;

  bool ok() const { return failures == 0; }
};

// samples random H-triples and checks pullback(c_a) - boundary(b) mod 1;
// also reports whether the residual is the zero polynomial
ResolutionReport verify_resolution(const ParameterA& a, const PolyCochain& b, int samples,
                                   std::uint64_t seed);

}  // namespace atlas

#endif
