#include "atlas/hjr.hpp"

#include <sstream>
#include <stdexcept>

namespace atlas {

Violation h2_membership_check(const ParameterA& a) {
  for (int i = 1; i <= a.rank; ++i)
    for (int j = i + 1; j <= a.rank; ++j)
      for (int k = j + 1; k <= a.rank; ++k)
        if (!is_integer(a.as(i, j, k))) {
          std::ostringstream os;
          os << "H^2 membership: AS a not integral at (i,j,k)=(" << i << "," << j << "," << k << ")";
          return {false, os.str()};
        }
  return {};
}

bool H2Class::zero() const {
  for (const auto& [k, v] : triples)
    if (v.first != 0 || v.second != 0) return false;
  for (const auto& [k, v] : pairs)
    if (v.first != 0 || v.second != 0) return false;
  return true;
}

H2Class h2_class(const ParameterA& a) {
  Violation v = h2_membership_check(a);
  if (!v.ok) throw std::domain_error("h2_class: " + v.what);
  H2Class h;
  for (int i = 1; i <= a.rank; ++i)
    for (int j = i + 1; j <= a.rank; ++j)
      for (int k = j + 1; k <= a.rank; ++k) {
        Rat c1 = mod1(a(j, i, k));
        Rat c2 = mod1(a(k, i, j));
        h.triples[{i, j, k}] = {c1, c2};
      }
  for (int i = 1; i <= a.rank; ++i)
    for (int k = i + 1; k <= a.rank; ++k)
      h.pairs[{i, k}] = {mod_n(a(i, i, k), Int(2)), mod_n(a(k, i, k), Int(2))};
  return h;
}

ClassCoordinates res_map(const ParameterA& a, const ModulusData& m) {
  Violation v = h2_membership_check(a);
  if (!v.ok) throw std::domain_error("res_map: " + v.what);
  return class_coordinates(a, zero_b(m.rank), m);
}

bool ModularObstruction::zero() const {
  for (const auto& [k, v] : a_sector)
    if (v != 0) return false;
  for (const auto& [k, v] : b_diag)
    if (!v.zero()) return false;
  for (const auto& [k, v] : b_off)
    if (!v.zero()) return false;
  for (const auto& v : nu)
    if (v != 0) return false;
  return true;
}

ModularObstruction delta_map(const ParameterA& a, const ParameterB& b, const ModulusData& m) {
  Violation z = membership_Z_check(a, b, m);
  if (!z.ok) throw std::domain_error("delta_map: " + z.what);
  ModularObstruction ob;
  for (int i = 1; i <= m.rank; ++i)
    for (int j = i + 1; j <= m.rank; ++j)
      for (int k = j + 1; k <= m.rank; ++k) {
        Rat v = mod1(a.as(i, j, k));
        if (v != 0) ob.a_sector[{i, j, k}] = v;
      }
  for (int i = 1; i <= m.rank; ++i) ob.b_diag[i] = class_b_ii(b(i, i), b(i, 0), i, m);
  for (int i = 1; i <= m.rank; ++i)
    for (int j = i + 1; j <= m.rank; ++j)
      ob.b_off[{i, j}] = class_b_ij(b(i, j), b(i, 0), b(j, i), b(j, 0), i, j, m);
  ob.nu.resize(m.rank);
  for (int j = 1; j <= m.rank; ++j) ob.nu[j - 1] = mod1(b(j, 0));
  return ob;
}

static void require_hat(const ParameterA& a, const ModulusData& m) {
  if (!a.strictly_increasing_support())
    throw std::domain_error("obstruction: parameter must be a hat-parameter (i<j<k)");
  for (const auto& [ijk, v] : a.v) {
    Int D = gcd_of({m.pi(ijk[0]), m.pi(ijk[1]), m.pi(ijk[2])});
    if (!is_integer(v * Rat(D)))
      throw std::domain_error("obstruction: hat-parameter outside (1/D)Z");
  }
}

Rat obstruction_c_a_exp(const ParameterA& ahat, const QmElement& q1, const QmElement& q2,
                        const QmElement& q3, const ModulusData& m) {
  require_hat(ahat, m);
  Rat total = 0;
  for (const auto& [ijk, v] : ahat.v) {
    const Int& r1 = q1.res[ijk[0] - 1];
    const Int& r2 = q2.res[ijk[1] - 1];
    const Int& r3 = q3.res[ijk[2] - 1];
    total += v * Rat(r1 * r2 * r3);
  }
  return mod1(total);
}

Rat obstruction_c_b_exp(const ParameterB& b, const QmElement& q1, const QmElement& q2,
                        const QmElement& q3, const ModulusData& m) {
  Rat total = 0;
  Int e0 = qm_e0(q1, m);
  for (int i = 1; i <= m.rank; ++i) {
    Int eta = carry1(q2.res[i - 1], q3.res[i - 1], m.pi(i));
    if (eta == 0) continue;
    Rat ein(eta, m.pi(i));  // e_{i,N}(n_N(q2;q3)) in {0,1}
    ein.canonicalize();
    for (int j = 1; j <= m.rank; ++j) {
      Rat bij = b(i, j);
      if (bij != 0) total += bij * ein * Rat(q1.res[j - 1]);
    }
    Rat bi0 = b(i, 0);
    if (bi0 != 0) total += bi0 * ein * Rat(e0);
  }
  return mod1(total);
}

Rat d_part_exp(const ParameterB& b, const QmElement& q2, const QmElement& q3,
               const ModulusData& m) {
  Rat total = 0;
  for (int j = 1; j <= m.rank; ++j) {
    Rat bj0 = b(j, 0);
    if (bj0 == 0) continue;
    Int eta = carry1(q2.res[j - 1], q3.res[j - 1], m.pi(j));
    if (eta == 0) continue;
    Rat r(eta, m.pi(j));
    r.canonicalize();
    total += bj0 * r;
  }
  return mod1(total);
}

Rat nu_b(const ParameterB& b, const GroupElement& g, const ModulusData& m) {
  if (!m.in_N(g)) throw std::domain_error("nu_b: element not in N");
  Rat total = 0;
  for (int j = 1; j <= m.rank; ++j) {
    Rat bj0 = b(j, 0);
    if (bj0 == 0) continue;
    Rat ein(g[j], m.pi(j));
    ein.canonicalize();
    total += bj0 * ein;
  }
  return mod1(total);
}

MultiCharacterClass partial_Qm(const ParameterA& a, const ModulusData& m) {
  if (a.rank != m.rank) throw std::domain_error("partial_Qm: rank mismatch");
  MultiCharacterClass cls;
  cls.arity = 3;
  for (int i = 1; i <= a.rank; ++i)
    for (int j = i + 1; j <= a.rank; ++j)
      for (int k = j + 1; k <= a.rank; ++k) {
        Rat v = mod1(a.as(i, j, k));
        Int D = gcd_of({m.pi(i), m.pi(j), m.pi(k)});
        if (!is_integer(v * Rat(D)))
          throw std::domain_error("partial_Qm: class escapes the pull-back of H^3(Q,T)");
        if (v != 0) cls.w[{i, j, k}] = v;
      }
  return cls;
}

}  // namespace atlas
