#ifndef ATLAS_HJR_HPP
#define ATLAS_HJR_HPP

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "atlas/invariants.hpp"
#include "atlas/resolution.hpp"

namespace atlas {

// ---------------------------------------------------------------------------
// H^2(H, T) in parameter coordinates and the maps of the reduced modified
// HJR sequence.
// ---------------------------------------------------------------------------

// second-cohomology membership: a with integral asymmetrization
Violation h2_membership_check(const ParameterA& a);

struct H2Class {
  std::map<std::array<int, 3>, std::pair<Rat, Rat>> triples;  // ([a(j,i,k)]_1, [a(k,i,j)]_1)
  std::map<std::pair<int, int>, std::pair<Rat, Rat>> pairs;   // mod-2 pair
  bool zero() const;
};

H2Class h2_class(const ParameterA& a);

// Res: H^2(H,T) -> Lambda(H_m, L, M, T); the class of (lambda_a, mu_a)
ClassCoordinates res_map(const ParameterA& a, const ModulusData& m);

struct ModularObstruction {
  std::map<std::array<int, 3>, Rat> a_sector;  // [AS a]_1 in (1/D(i,j,k))Z mod 1
  std::map<int, ClassBii> b_diag;
  std::map<std::pair<int, int>, ClassBij> b_off;
  std::vector<Rat> nu;  // nu(b_j)/T = [b(j,0)]_1
  bool zero() const;
};

ModularObstruction delta_map(const ParameterA& a, const ParameterB& b, const ModulusData& m);

// the a-sector obstruction cocycle on Q_m: exponent
// sum a(i,j,k) {e_i(q1)} {e_j(q2)} {e_k(q3)}.
// The parameter must be a hat-parameter: increasing support, values in (1/D)Z.
Rat obstruction_c_a_exp(const ParameterA& ahat, const QmElement& q1, const QmElement& q2,
                        const QmElement& q3, const ModulusData& m);

// the b-sector obstruction cocycle on Q_m; tilde-e_j of the first argument
// reads the residue for j >= 1 and the z_0-coordinate for j = 0
Rat obstruction_c_b_exp(const ParameterB& b, const QmElement& q1, const QmElement& q2,
                        const QmElement& q3, const ModulusData& m);

// the d-part of c_b: nu_b of the section cocycle
Rat d_part_exp(const ParameterB& b, const QmElement& q2, const QmElement& q3,
               const ModulusData& m);

// nu_b(g) for g in N, stored T-normalized: returns sum b(j,0) e_{j,N}(g) mod 1
Rat nu_b(const ParameterB& b, const GroupElement& g, const ModulusData& m);

// boundary map into H^3(G, T) = X^3: the wedge class with coefficients AS a
MultiCharacterClass partial_Qm(const ParameterA& a, const ModulusData& m);

}  // namespace atlas

#endif
