#ifndef ATLAS_COBOUNDARY_HPP
#define ATLAS_COBOUNDARY_HPP

#include <map>
#include <optional>
#include <vector>

#include "atlas/cochain.hpp"
#include "atlas/lattice.hpp"

namespace atlas {

// ---------------------------------------------------------------------------
// Integrality of exponent polynomials.
//
// A polynomial with per-variable degree <= d is integer-valued on Z^vars iff
// its coordinates in the binomial basis {1, x, C(x,2), C(x,3), ...} are all
// integers, iff its values on {0..d}^vars are integers. We work with the
// binomial coordinates; the grid formulation is kept in the tests.
// ---------------------------------------------------------------------------

// monomial exponents reinterpreted as binomial-basis degrees
using BinPoly = std::map<Monomial, Rat>;

BinPoly to_binomial_map(const std::map<Monomial, Rat>& poly);
BinPoly to_binomial(const PolyCochain& c);
bool integer_valued(const PolyCochain& c);

// true iff the exponent of the boundary is integer-valued, i.e. the torus
// cochain exp(2 pi i c) is a cocycle
bool is_cocycle(const PolyCochain& c);

// ---------------------------------------------------------------------------
// Multi-character classes (torsion-free abelian flavors only)
// ---------------------------------------------------------------------------

struct MultiCharacterClass {
  int arity = 0;
  std::map<std::vector<int>, Rat> w;  // strictly increasing var tuples -> [0,1)

  bool zero() const { return w.empty(); }
  Rat at(const std::vector<int>& key) const;
  friend bool operator==(const MultiCharacterClass& a, const MultiCharacterClass& b) = default;
};

// the class of a cocycle under H^n(Z^r, T) = X^n: wedge coefficients of AS c
MultiCharacterClass multicharacter_class(const PolyCochain& c);

// AS-class test on abelian flavors; on H/Hm falls back to the witness lattice
bool is_coboundary(const PolyCochain& c);

// ---------------------------------------------------------------------------
// Constructive witnesses: solve boundary(f) = c mod integer-valued over the
// capped monomial basis, as an integer linear system (basis coefficients
// scaled by the denominator lcm, one integer slack per binomial coordinate)
// reduced to diagonal form. The reduction is cached per (flavor, rank, arity).
// ---------------------------------------------------------------------------

struct WitnessSystem {
  Flavor flavor;
  int rank = 0;
  int target_arity = 0;           // arity of the cochains being tested
  std::vector<Monomial> basis;    // witness monomials (arity target_arity - 1)
  std::map<Monomial, int> row_of; // binomial keys covered by boundary images
  DiagResult diag;
};

const WitnessSystem& witness_system(Flavor f, int rank, int target_arity);

// independent decision path (no asymmetrization involved)
bool witness_exists(const PolyCochain& c);

// returns f with boundary(f) = c mod integer-valued, verified before return;
// nullopt if no witness exists in the capped basis
std::optional<PolyCochain> try_coboundary_witness(const PolyCochain& c);

// requires is_coboundary(c); failure to solve is a hard error
PolyCochain coboundary_witness(const PolyCochain& c);

// one-shot solve over a caller-supplied witness basis (uncached); a found
// witness is verified, a miss only means "not in this span"
std::optional<PolyCochain> try_witness_over(const PolyCochain& c,
                                            const std::vector<Monomial>& basis);

// Fast repeated decisions for targets supported on a fixed set of binomial
// keys: rows are a Hermite basis of the annihilator lattice projected to the
// support, so each query is a handful of integer dot products.
struct IntegralityTester {
  std::vector<Monomial> support;
  IntMat reduced;
  bool test(const std::vector<Rat>& coeffs) const;
};

IntegralityTester make_tester(const WitnessSystem& ws, const std::vector<Monomial>& support);

// ---------------------------------------------------------------------------
// Standard form relative to the distinguished central generator z_0, read
// through the tilde-e_0 coordinate of the chosen slot.
// ---------------------------------------------------------------------------

struct StandardForm {
  PolyCochain base;    // c_s: the z_0-independent part
  PolyCochain d_part;  // d_c, arity n-1; multiplies tilde-e_0 of the z-slot
};

StandardForm standard_form(const PolyCochain& c, int zslot = 1);

// ---------------------------------------------------------------------------
// Generic mod-Z affine systems over raw polynomial maps (used by the
// characteristic-cocycle witness oracle).
// ---------------------------------------------------------------------------

struct GenericModZ {
  int ncols = 0;
  std::map<Monomial, int> row_of;
  DiagResult diag;
};

// columns given in the ordinary monomial basis; converted internally
GenericModZ prepare_modz(const std::vector<std::map<Monomial, Rat>>& cols);
bool modz_solvable(const GenericModZ& sys, const std::map<Monomial, Rat>& rhs);
std::optional<std::vector<Rat>> modz_solve(const GenericModZ& sys,
                                           const std::map<Monomial, Rat>& rhs);

}  // namespace atlas

#endif
