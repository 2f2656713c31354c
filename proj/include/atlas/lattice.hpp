#ifndef ATLAS_LATTICE_HPP
#define ATLAS_LATTICE_HPP

#include <vector>

#include "atlas/numeric.hpp"

namespace atlas {

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}
  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  static IntMat identity(int n);
};

// U * A * V = D with U, V unimodular and D diagonal (diag holds the first
// `rank` nonzero entries). Deterministic: pivot = smallest |entry|, ties by
// (row, col). The divisibility chain of full Smith form is not enforced;
// a diagonal form is all the congruence solver needs.
struct DiagResult {
  IntMat U, V;
  std::vector<Int> diag;  // size = min(rows, cols); zero beyond rank
  int rank = 0;
};

DiagResult diagonalize(IntMat A);

// Row-style Hermite reduction: returns a basis (as matrix rows) of the
// lattice generated by the rows of A. Deterministic.
IntMat hnf_row_basis(IntMat A);

// Solve A y = c (mod Z^rows) for rational y given the diagonalization of A.
// Returns false if no solution; otherwise fills y (size cols).
bool solve_mod_z(const DiagResult& d, const std::vector<Rat>& c, std::vector<Rat>* y);

// Decision-only variant.
bool solvable_mod_z(const DiagResult& d, const std::vector<Rat>& c);

}  // namespace atlas

#endif
