#ifndef ATLAS_INVARIANTS_HPP
#define ATLAS_INVARIANTS_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "atlas/coboundary.hpp"
#include "atlas/cochain.hpp"

namespace atlas {

// ---------------------------------------------------------------------------
// Parameter lattice membership
// ---------------------------------------------------------------------------

struct Violation {
  bool ok = true;
  std::string what;  // named violated condition when !ok
};

Violation membership_Z_check(const ParameterA& a, const ParameterB& b, const ModulusData& m);
bool membership_Z(const ParameterA& a, const ParameterB& b, const ModulusData& m);

// coboundary lattice (lcm form of the b-side conditions)
Violation membership_B_check(const ParameterA& a, const ParameterB& b, const ModulusData& m);
bool membership_B(const ParameterA& a, const ParameterB& b, const ModulusData& m);
// the gcd form of the b-side lattice: p_j b(i,j) + p_i b(j,i) in gcd(p_i,p_j)Z
bool membership_B_alt(const ParameterA& a, const ParameterB& b, const ModulusData& m);

// ---------------------------------------------------------------------------
// Canonical class coordinates
// ---------------------------------------------------------------------------

struct CyclicCoord {
  Int mod;    // >= 1
  Int value;  // in [0, mod)
  friend bool operator==(const CyclicCoord&, const CyclicCoord&) = default;
  bool zero() const { return value == 0; }
};

struct ClassAijk {
  Int D;            // gcd(p_i, p_j, p_k)
  CyclicCoord cyc;  // [D * AS a]_D
  Rat c1, c2;       // [a(j,i,k)]_1, [a(k,i,j)]_1
  bool zero() const { return cyc.zero() && c1 == 0 && c2 == 0; }
};

struct ClassAik {
  Rat first, second;  // [a(i,i,k)]_2, [a(k,i,k)]_2 in [0,2)
  bool zero() const { return first == 0 && second == 0; }
};

struct ClassBii {
  Int D;            // gcd(p_i, q_i)
  EuclidPair euc;   // p u - q v = D
  CyclicCoord cyc;  // [p_i x - q_i u]_D
  Rat circ;         // [-v_i x + u_i u]_1
  bool zero() const { return cyc.zero() && circ == 0; }
};

// the gcd/Bezout record for an index pair, with the degenerate q branches
struct BezoutIJ {
  Int D;                    // D(i,j) = gcd(p_i, p_j, q_i, q_j)
  Int Dij, Eij;             // gcd(p_i,p_j), gcd(q_i,q_j)
  Int r_ij, r_ji;           // p_i/Dij, p_j/Dij
  Int s_ij, s_ji;           // q_i/Eij, q_j/Eij (0 when Eij = 0)
  Int m, n;                 // Dij/D, Eij/D
  Int w_ij, w_ji;           // q_i w_ij + q_j w_ji = Eij (0,0 when Eij = 0)
  Int x, y;                 // x Dij + y Eij = D
};

BezoutIJ bezout_ij(int i, int j, const ModulusData& m);

struct ClassBij {
  BezoutIJ zz;
  Rat d_circ;  // in (1/D(i,j))Z mod 1
  Rat c1, c2;  // circles
  bool zero() const { return d_circ == 0 && c1 == 0 && c2 == 0; }
};

ClassAijk class_a_ijk(const ParameterA& a, int i, int j, int k, const ModulusData& m);
ClassAik class_a_ik(const ParameterA& a, int i, int k);
ClassBii class_b_ii(const Rat& x, const Rat& u, int i, const ModulusData& m);
ClassBij class_b_ij(const Rat& x, const Rat& u, const Rat& y, const Rat& v, int i, int j,
                    const ModulusData& m);

struct ClassCoordinates {
  std::map<std::array<int, 3>, ClassAijk> a_triples;
  std::map<std::pair<int, int>, ClassAik> a_pairs;
  std::map<int, ClassBii> b_diag;
  std::map<std::pair<int, int>, ClassBij> b_off;
  bool zero() const;
};

// all patterns at the modulus rank; requires membership_Z
ClassCoordinates class_coordinates(const ParameterA& a, const ParameterB& b,
                                   const ModulusData& m);

// ---------------------------------------------------------------------------
// Fiber-product consistency: the circle read from every pattern
// containing index i must be the same [b(i,0)].
// ---------------------------------------------------------------------------

struct BPatternData {
  std::map<int, std::pair<Rat, Rat>> diag;                  // i -> (x, u)
  std::map<std::pair<int, int>, std::array<Rat, 4>> off;    // i<j -> (x, u, y, v)
};

BPatternData b_patterns(const ParameterB& b);
bool fiber_consistency(const BPatternData& data, const ModulusData& m);

// ---------------------------------------------------------------------------
// Characteristic cocycles
// ---------------------------------------------------------------------------

struct CharacteristicCocycle {
  ParameterA a;
  ParameterB b;
  ModulusData m;
  PolyCochain lambda_a_part;  // Y_a + X_{AS-hat a} on H_m x H_m
  PolyCochain eta_part;       // Y_a
  PolyCochain v_part;         // V_a = Z_a + U_a

  // g in L (as (m, Pg, 0) in H_m), h in H_m
  Rat lambda_exp(const HmElement& g, const HmElement& h) const;
  Rat lambda(const HmElement& g, const HmElement& h) const;
  // g, h in L
  Rat mu_exp(const HmElement& g, const HmElement& h) const;
  Rat mu(const HmElement& g, const HmElement& h) const;
  Rat eta_exp(const HmElement& g, const HmElement& h) const;
};

CharacteristicCocycle build_characteristic(const ParameterA& a, const ParameterB& b,
                                           const ModulusData& m);

// Is (lambda_{a,b}, mu_a) a characteristic coboundary, i.e. of the form
// (f(h^-1 g h) - f(g), f(g)+f(h)-f(gh)) for a capped 1-cochain f on L?
// Independent of the gcd class formulas; used as the B-side oracle.
bool characteristic_is_coboundary(const ParameterA& a, const ParameterB& b,
                                  const ModulusData& m);

// the witness itself (exponent 1-cochain on L, in tilde-e_i / central
// coordinates), when one exists
std::optional<PolyCochain> characteristic_witness(const ParameterA& a, const ParameterB& b,
                                                  const ModulusData& m);

// evaluation check of the two coboundary identities on sampled elements
bool verify_characteristic_witness(const CharacteristicCocycle& cc, const PolyCochain& f,
                                   int samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Rank-1 and rank-2 invariants
// ---------------------------------------------------------------------------

struct SingleAutoInvariants {
  Int p1, q1;
  Int D1, r1, s1, u1, v1;        // p1 u1 - q1 v1 = D1, r1 u1 - s1 v1 = 1
  std::array<Int, 2> w0, w1;     // in (z_0, z_1) coordinates
  std::array<Int, 2> z0_in_w, z1_in_w;
  // Q_m = Z w0 + Z_{D1} w1 ; Lambda(G_m, N, T) = T + Z_{D1}
};

SingleAutoInvariants single_automorphism_invariants(const Int& p1, const Int& q1);

// character chi_{x,y} in the (w_0, w_1) basis; returns p_1 * (order of chi(z_0)),
// or 0 on the aperiodic branch (impossible for rational x, y)
Int outer_period(const Rat& x, const Rat& y, const Int& p1, const Int& q1);

struct PairInvariants {
  ClassBii c11, c22;
  ClassBij c12;
  std::vector<Rat> nu;  // nu(b_i) = [b(i,0)] mod 1, T-normalized
};

PairInvariants pair_invariants(const ModulusData& m, const ParameterB& b);

}  // namespace atlas

#endif
