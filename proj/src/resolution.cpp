#include "atlas/resolution.hpp"

#include <stdexcept>

namespace atlas {

PolyCochain third_cocycle_c_a(const ParameterA& a) {
  if (!a.strictly_increasing_support())
    throw std::domain_error("third_cocycle_c_a: parameter must live on i<j<k");
  PolyCochain c(Flavor::G, a.rank, 3);
  for (const auto& [ijk, v] : a.v)
    c.add_term(mono({sv({ijk[0]}), sv({ijk[1]}), sv({ijk[2]})}), v);
  return c;
}

PolyCochain resolve_third_cocycle(const ParameterA& a) {
  if (!a.strictly_increasing_support())
    throw std::domain_error("resolve_third_cocycle: parameter must live on i<j<k");
  PolyCochain b(Flavor::H, a.rank, 2);
  for (const auto& [ijk, v] : a.v)
    b.add_term(mono({sv({ijk[0]}), sv({var_central(ijk[1], ijk[2])})}), v);
  return b;
}

PolyCochain pullback_to_H(const PolyCochain& c) {
  if (c.flavor != Flavor::G) throw std::domain_error("pullback_to_H: expected G flavor");
  PolyCochain r(Flavor::H, c.rank, c.arity);
  for (const auto& [m, v] : c.terms) r.add_term(m, v);
  return r;
}

ResolutionReport verify_resolution(const ParameterA& a, const PolyCochain& b, int samples,
                                   std::uint64_t seed) {
  if (b.arity != 2) throw std::domain_error("verify_resolution: b must have arity 2");
  ResolutionReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.max_deviation = Rat(0);

  PolyCochain residual = pullback_to_H(third_cocycle_c_a(a)) - boundary(b);
  rep.symbolic_zero = residual.zero();

  Rng rng(seed);
  const int r = a.rank;
  for (int t = 0; t < samples; ++t) {
    std::vector<ElementCoords> args;
    for (int s = 0; s < 3; ++s) {
      HeisenbergElement h{{}, GroupElement(r)};
      for (int i = 1; i <= r; ++i) h.g[i] = Int(rng.range(-3, 3));
      for (int j = 1; j <= r; ++j)
        for (int k = j + 1; k <= r; ++k) {
          Int v(rng.range(-3, 3));
          if (v != 0) h.c[{j, k}] = v;
        }
      args.push_back(coords_of(h));
    }
    Rat dev = torus_value(residual, args);
    if (dev != 0) {
      ++rep.failures;
      Rat dist = dev > Rat(1, 2) ? Rat(1) - dev : dev;
      if (dist > rep.max_deviation) rep.max_deviation = dist;
    }
  }
  return rep;
}

}  // namespace atlas
