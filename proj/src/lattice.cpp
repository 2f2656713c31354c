#include "atlas/lattice.hpp"

#include <cstdlib>
#include <stdexcept>

namespace atlas {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

void row_swap(IntMat& m, int r1, int r2) {
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(r1, j), m.at(r2, j));
}
void col_swap(IntMat& m, int c1, int c2) {
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, c1), m.at(i, c2));
}
// row r1 += f * row r2
void row_add(IntMat& m, int r1, int r2, const Int& f) {
  if (f == 0) return;
  for (int j = 0; j < m.cols; ++j) m.at(r1, j) += f * m.at(r2, j);
}
void col_add(IntMat& m, int c1, int c2, const Int& f) {
  if (f == 0) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, c1) += f * m.at(i, c2);
}
void row_neg(IntMat& m, int r) {
  for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

DiagResult diagonalize(IntMat A) {
  const int R = A.rows, C = A.cols;
  DiagResult res;
  res.U = IntMat::identity(R);
  res.V = IntMat::identity(C);
  int k = 0;
  const int kmax = std::min(R, C);
  while (k < kmax) {
    // pick pivot: min |a_ij| over the trailing block, ties lexicographic
    int pr = -1, pc = -1;
    Int best = 0;
    for (int i = k; i < R; ++i)
      for (int j = k; j < C; ++j) {
        const Int& v = A.at(i, j);
        if (v == 0) continue;
        Int av = abs(v);
        if (pr < 0 || av < best) {
          best = av;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // trailing block is zero
    if (pr != k) {
      row_swap(A, k, pr);
      row_swap(res.U, k, pr);
    }
    if (pc != k) {
      col_swap(A, k, pc);
      col_swap(res.V, k, pc);
    }
    if (A.at(k, k) < 0) {
      row_neg(A, k);
      row_neg(res.U, k);
    }
    // sweep row/column k
    bool clean = true;
    for (int i = k + 1; i < R; ++i) {
      if (A.at(i, k) == 0) continue;
      Int f = -floor_div(A.at(i, k), A.at(k, k));
      row_add(A, i, k, f);
      row_add(res.U, i, k, f);
      if (A.at(i, k) != 0) clean = false;
    }
    for (int j = k + 1; j < C; ++j) {
      if (A.at(k, j) == 0) continue;
      Int f = -floor_div(A.at(k, j), A.at(k, k));
      col_add(A, j, k, f);
      col_add(res.V, j, k, f);
      if (A.at(k, j) != 0) clean = false;
    }
    if (clean) ++k;  // both swept; remainders were zero
  }
  res.diag.assign(kmax, Int(0));
  res.rank = 0;
  for (int i = 0; i < kmax; ++i) {
    res.diag[i] = A.at(i, i);
    if (res.diag[i] != 0) res.rank = i + 1;
  }
  return res;
}

IntMat hnf_row_basis(IntMat A) {
  const int R = A.rows, C = A.cols;
  int r = 0;  // current pivot row
  for (int c = 0; c < C && r < R; ++c) {
    // reduce column c below row r to a single entry via gcd steps
    while (true) {
      int pr = -1;
      Int best = 0;
      for (int i = r; i < R; ++i) {
        const Int& v = A.at(i, c);
        if (v == 0) continue;
        Int av = abs(v);
        if (pr < 0 || av < best) {
          best = av;
          pr = i;
        }
      }
      if (pr < 0) break;
      if (pr != r) row_swap(A, r, pr);
      if (A.at(r, c) < 0) row_neg(A, r);
      bool done = true;
      for (int i = r + 1; i < R; ++i) {
        if (A.at(i, c) == 0) continue;
        Int f = -floor_div(A.at(i, c), A.at(r, c));
        row_add(A, i, r, f);
        if (A.at(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (A.at(r, c) != 0) {
      // reduce rows above
      for (int i = 0; i < r; ++i) {
        Int f = -floor_div(A.at(i, c), A.at(r, c));
        row_add(A, i, r, f);
      }
      ++r;
    }
  }
  IntMat B(r, C);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < C; ++j) B.at(i, j) = A.at(i, j);
  return B;
}

bool solve_mod_z(const DiagResult& d, const std::vector<Rat>& c, std::vector<Rat>* y) {
  const int R = d.U.rows, C = d.V.rows;
  if (static_cast<int>(c.size()) != R) throw std::domain_error("solve_mod_z: size mismatch");
  // chat = U c
  std::vector<Rat> chat(R, Rat(0));
  for (int j = 0; j < R; ++j) {
    if (c[j] == 0) continue;
    for (int i = 0; i < R; ++i)
      if (d.U.at(i, j) != 0) chat[i] += Rat(d.U.at(i, j)) * c[j];
  }
  for (int i = d.rank; i < R; ++i) {
    if (!is_integer(chat[i])) return false;
  }
  if (y) {
    std::vector<Rat> yhat(C, Rat(0));
    for (int i = 0; i < d.rank; ++i) yhat[i] = chat[i] / Rat(d.diag[i]);
    y->assign(C, Rat(0));
    for (int i = 0; i < C; ++i) {
      Rat acc = 0;
      for (int j = 0; j < C; ++j)
        if (d.V.at(i, j) != 0 && yhat[j] != 0) acc += Rat(d.V.at(i, j)) * yhat[j];
      acc.canonicalize();
      (*y)[i] = acc;
    }
  }
  return true;
}

bool solvable_mod_z(const DiagResult& d, const std::vector<Rat>& c) {
  return solve_mod_z(d, c, nullptr);
}

}  // namespace atlas
