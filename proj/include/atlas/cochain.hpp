#ifndef ATLAS_COCHAIN_HPP
#define ATLAS_COCHAIN_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "atlas/groups.hpp"
#include "atlas/numeric.hpp"

namespace atlas {

// ---------------------------------------------------------------------------
// Torus-valued cochains stored in exponent form: the cochain is
// exp(2*pi*i*phi) where phi is a rational-coefficient polynomial in the
// per-slot coordinate functionals. Equality in T becomes congruence mod Z.
// ---------------------------------------------------------------------------

enum class Flavor { G, Gm, H, Hm };

bool flavor_has_central(Flavor f);  // H, Hm
bool flavor_has_e0(Flavor f);       // Gm, Hm
std::string flavor_name(Flavor f);
Flavor flavor_parse(const std::string& s);

// Variable codes: abelian coordinate i in 0..r is code i (0 = tilde-e_0,
// only meaningful on Gm/Hm); central e_{j,k}, j < k, is CENTRAL_BASE + 256*j + k.
constexpr int CENTRAL_BASE = 1 << 16;
inline int var_abelian(int i) { return i; }
inline int var_central(int j, int k) { return CENTRAL_BASE + 256 * j + k; }
inline bool is_central_var(int code) { return code >= CENTRAL_BASE; }
inline std::pair<int, int> central_of(int code) {
  return {(code - CENTRAL_BASE) / 256, (code - CENTRAL_BASE) % 256};
}

// A slot monomial: sorted (var, exponent) pairs, exponents >= 1.
using SlotMonomial = std::vector<std::pair<int, int>>;
// One slot monomial per argument slot; an empty slot is the constant 1.
using Monomial = std::vector<SlotMonomial>;

SlotMonomial slot_mul(const SlotMonomial& a, const SlotMonomial& b);
// abelian degree + 2 * central degree
int slot_weight(const SlotMonomial& s);
std::string slot_str(const SlotMonomial& s);
std::string monomial_str(const Monomial& m);

struct PolyCochain {
  Flavor flavor = Flavor::G;
  int rank = 0;
  int arity = 0;
  std::map<Monomial, Rat> terms;

  PolyCochain() = default;
  PolyCochain(Flavor f, int r, int n) : flavor(f), rank(r), arity(n) {}

  bool zero() const { return terms.empty(); }
  void add_term(const Monomial& m, const Rat& c);
  PolyCochain& operator+=(const PolyCochain& o);
  PolyCochain& operator-=(const PolyCochain& o);
  PolyCochain& operator*=(const Rat& c);
  friend PolyCochain operator+(PolyCochain a, const PolyCochain& b) { return a += b; }
  friend PolyCochain operator-(PolyCochain a, const PolyCochain& b) { return a -= b; }
  friend PolyCochain operator*(const Rat& c, PolyCochain a) { return a *= c; }
  friend bool operator==(const PolyCochain& a, const PolyCochain& b) = default;
};

// simple constructors for terms written as products of functionals
Monomial mono(std::initializer_list<SlotMonomial> slots);
SlotMonomial sv(std::initializer_list<int> vars);  // product of degree-1 factors

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

struct ElementCoords {
  std::vector<Int> ab;  // index 0..rank; [0] = tilde-e_0 where applicable
  CentralPart central;
};

ElementCoords coords_of(const GroupElement& g);
ElementCoords coords_of(const GmElement& x, const ModulusData& m);
ElementCoords coords_of(const HeisenbergElement& h);
ElementCoords coords_of(const HmElement& x, const ModulusData& m);

Rat evaluate(const PolyCochain& c, const std::vector<ElementCoords>& args);
Rat torus_value(const PolyCochain& c, const std::vector<ElementCoords>& args);

// ---------------------------------------------------------------------------
// Boundary and asymmetrization
// ---------------------------------------------------------------------------

// (dc)(g_1..g_{n+1}) = c(g_2..g_{n+1}) + sum_k (-1)^k c(..,g_k g_{k+1},..)
//                      + (-1)^{n+1} c(g_1..g_n), expanded symbolically.
PolyCochain boundary(const PolyCochain& c);

// (AS c)(g_1..g_n) = sum_{sigma} sign(sigma) c(g_sigma(1),..,g_sigma(n))
PolyCochain asymmetrize(const PolyCochain& c);

int factorial(int n);

bool is_capped(const PolyCochain& c, int cap = 2);

// all slot monomials of the given weight cap for one slot of this flavor/rank
std::vector<SlotMonomial> slot_monomials(Flavor f, int rank, int cap);

// ---------------------------------------------------------------------------
// Parameter records
// ---------------------------------------------------------------------------

// a: Delta patterns (i,j,k) with i<j<k, (i,i,k) with i<k, (k,i,k) with i<k.
struct ParameterA {
  int rank = 0;
  std::map<std::array<int, 3>, Rat> v;

  ParameterA() = default;
  explicit ParameterA(int r) : rank(r) {}
  void set(int i, int j, int k, const Rat& x);
  Rat operator()(int i, int j, int k) const;
  Rat as(int i, int j, int k) const;  // AS a = a(i,j,k) - a(j,i,k) + a(k,i,j), i<j<k
  bool strictly_increasing_support() const;
};

// pattern check: is (x,j,k) a legal Delta index?
bool parameter_a_pattern_ok(int x, int j, int k);

// hat-a: (AS a)(i,j,k) on increasing triples, zero elsewhere; the canonical
// obstruction representative
ParameterA as_hat(const ParameterA& a);

// AS a as a parameter, extended antisymmetrically in the first index:
// (i,j,k) -> S, (j,i,k) -> -S, (k,i,j) -> S. This is the version entering
// the lambda evaluator and the X - Y comparison on M x H_m.
ParameterA as_full(const ParameterA& a);

// b: (i,j) with i in 1..r, j in 0..r
struct ParameterB {
  int rank = 0;
  std::map<std::pair<int, int>, Rat> v;

  ParameterB() = default;
  explicit ParameterB(int r) : rank(r) {}
  void set(int i, int j, const Rat& x);
  Rat operator()(int i, int j) const;
};

// ---------------------------------------------------------------------------
// Named cochain families
// ---------------------------------------------------------------------------

// the potential B_{jk} with d B_{jk} = pullback(e_j x e_k), a 1-cochain on H_m
PolyCochain cochain_B(int rank, int j, int k);

// f_{i,j,k} (distinct indices), arity 2 on G
PolyCochain f_ijk(int rank, int i, int j, int k);

// det_{ijk} = AS(e_i x e_j x e_k), arity 3 on G, i < j < k
PolyCochain det_ijk(int rank, int i, int j, int k);

// B_{eta,zeta}(g) = sum eta(a_j) zeta(a_k) e_{j,k}(m_0(g)), arity 1 on H
PolyCochain b_eta_zeta(int rank, const std::vector<Rat>& eta, const std::vector<Rat>& zeta);

struct FamilyXYZUV {
  PolyCochain X, Y, Z, U, V;  // arity 2, flavor Hm
};

FamilyXYZUV family_xyzuv(const ParameterA& a);

ParameterA zero_a(int rank);
ParameterB zero_b(int rank);

}  // namespace atlas

#endif
