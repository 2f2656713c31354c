#include "atlas/coboundary.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace atlas {

namespace {

// x^n = sum_k S2(n,k) k! C(x,k)
constexpr int MAX_POW = 8;

const std::vector<std::vector<Int>>& power_to_binomial_table() {
  static const std::vector<std::vector<Int>> table = [] {
    std::vector<std::vector<Int>> s2(MAX_POW + 1, std::vector<Int>(MAX_POW + 1, Int(0)));
    s2[0][0] = 1;
    for (int n = 1; n <= MAX_POW; ++n)
      for (int k = 1; k <= n; ++k) s2[n][k] = s2[n - 1][k - 1] + Int(k) * s2[n - 1][k];
    std::vector<std::vector<Int>> t(MAX_POW + 1, std::vector<Int>(MAX_POW + 1, Int(0)));
    for (int n = 0; n <= MAX_POW; ++n) {
      Int kf = 1;
      for (int k = 0; k <= n; ++k) {
        if (k > 0) kf *= k;
        t[n][k] = s2[n][k] * kf;
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

BinPoly to_binomial_map(const std::map<Monomial, Rat>& poly) {
  const auto& tab = power_to_binomial_table();
  BinPoly out;
  for (const auto& [m, coeff] : poly) {
    // accumulate slot-by-slot, factor-by-factor
    std::vector<std::pair<Monomial, Int>> acc{{Monomial(m.size()), Int(1)}};
    for (size_t s = 0; s < m.size(); ++s) {
      for (const auto& [v, e] : m[s]) {
        if (e > MAX_POW) throw std::domain_error("binomial conversion: exponent too large");
        std::vector<std::pair<Monomial, Int>> next;
        for (const auto& [base, mult] : acc)
          for (int d = 1; d <= e; ++d) {
            if (tab[e][d] == 0) continue;
            Monomial m2 = base;
            m2[s] = slot_mul(m2[s], {{v, d}});
            next.emplace_back(std::move(m2), mult * tab[e][d]);
          }
        acc = std::move(next);
      }
    }
    for (const auto& [key, mult] : acc) {
      Rat& slot = out[key];
      slot += coeff * Rat(mult);
      if (slot == 0) out.erase(key);
    }
  }
  return out;
}

BinPoly to_binomial(const PolyCochain& c) { return to_binomial_map(c.terms); }

bool integer_valued(const PolyCochain& c) {
  for (const auto& [m, v] : to_binomial(c))
    if (!is_integer(v)) return false;
  return true;
}

bool is_cocycle(const PolyCochain& c) { return integer_valued(boundary(c)); }

// --- multi-character classes ---------------------------------------------------

Rat MultiCharacterClass::at(const std::vector<int>& key) const {
  auto it = w.find(key);
  return it == w.end() ? Rat(0) : it->second;
}

namespace {

// pure tensor of distinct degree-1 abelian factors?
bool pure_distinct_key(const Monomial& m, std::vector<int>* vars) {
  vars->clear();
  for (const auto& s : m) {
    if (s.size() != 1 || s[0].second != 1 || is_central_var(s[0].first)) return false;
    vars->push_back(s[0].first);
  }
  std::vector<int> sorted = *vars;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) return false;
  return true;
}

}  // namespace

MultiCharacterClass multicharacter_class(const PolyCochain& c) {
  if (flavor_has_central(c.flavor))
    throw std::domain_error("multicharacter_class: needs a free abelian flavor");
  if (!is_cocycle(c)) throw std::domain_error("multicharacter_class: not a cocycle");
  PolyCochain as = asymmetrize(c);
  MultiCharacterClass cls;
  cls.arity = c.arity;
  std::vector<int> vars;
  for (const auto& [m, coeff] : to_binomial(as)) {
    if (pure_distinct_key(m, &vars)) {
      bool increasing = true;
      for (size_t i = 1; i < vars.size(); ++i)
        if (vars[i] <= vars[i - 1]) increasing = false;
      if (!increasing) continue;  // determined by antisymmetry
      Rat v = mod1(coeff);
      if (v != 0) cls.w[vars] = v;
    } else if (!is_integer(coeff)) {
      // the asymmetrization of a cocycle is a multi-character; anything
      // else here is a bug
      throw std::logic_error("asymmetrization of a cocycle is not a multi-character");
    }
  }
  return cls;
}

bool is_coboundary(const PolyCochain& c) {
  if (flavor_has_central(c.flavor)) return witness_exists(c);
  return multicharacter_class(c).zero();
}

// --- witness systems -------------------------------------------------------------

namespace {

std::vector<Monomial> witness_basis(Flavor f, int rank, int witness_arity) {
  // arity-1 witnesses need cubic slots (see U_a-type coboundaries); higher
  // arities stay within the weight-2 cap
  int cap = witness_arity == 1 ? 3 : 2;
  std::vector<SlotMonomial> slots = slot_monomials(f, rank, cap);
  std::vector<Monomial> out;
  Monomial cur(witness_arity);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == witness_arity) {
      out.push_back(cur);
      return;
    }
    for (const auto& s : slots) {
      cur[pos] = s;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::map<std::tuple<Flavor, int, int>, WitnessSystem> g_witness_cache;
std::mutex g_witness_mutex;

}  // namespace

const WitnessSystem& witness_system(Flavor f, int rank, int target_arity) {
  if (target_arity < 1) throw std::domain_error("witness_system: arity < 1");
  std::lock_guard<std::mutex> lock(g_witness_mutex);
  auto key = std::make_tuple(f, rank, target_arity);
  auto it = g_witness_cache.find(key);
  if (it != g_witness_cache.end()) return it->second;

  WitnessSystem ws;
  ws.flavor = f;
  ws.rank = rank;
  ws.target_arity = target_arity;
  ws.basis = witness_basis(f, rank, target_arity - 1);

  std::vector<BinPoly> cols;
  cols.reserve(ws.basis.size());
  for (const auto& m : ws.basis) {
    PolyCochain b(f, rank, target_arity - 1);
    b.add_term(m, Rat(1));
    cols.push_back(to_binomial(boundary(b)));
  }
  for (const auto& col : cols)
    for (const auto& [k, v] : col)
      if (!ws.row_of.count(k)) {
        int idx = static_cast<int>(ws.row_of.size());
        ws.row_of.emplace(k, idx);
      }
  IntMat A(static_cast<int>(ws.row_of.size()), static_cast<int>(cols.size()));
  for (int j = 0; j < A.cols; ++j)
    for (const auto& [k, v] : cols[j]) {
      if (!is_integer(v)) throw std::logic_error("witness system: non-integer boundary");
      A.at(ws.row_of.at(k), j) = numerator(v);
    }
  ws.diag = diagonalize(std::move(A));
  auto [pos, inserted] = g_witness_cache.emplace(key, std::move(ws));
  return pos->second;
}

namespace {

// split a target into in-system rows and off-system keys
bool target_vector(const WitnessSystem& ws, const PolyCochain& c, std::vector<Rat>* rows) {
  rows->assign(ws.row_of.size(), Rat(0));
  for (const auto& [k, v] : to_binomial(c)) {
    auto it = ws.row_of.find(k);
    if (it == ws.row_of.end()) {
      if (!is_integer(v)) return false;  // unreachable coordinate, not integral
    } else {
      (*rows)[it->second] = v;
    }
  }
  return true;
}

}  // namespace

bool witness_exists(const PolyCochain& c) {
  const WitnessSystem& ws = witness_system(c.flavor, c.rank, c.arity);
  std::vector<Rat> rows;
  if (!target_vector(ws, c, &rows)) return false;
  return solvable_mod_z(ws.diag, rows);
}

std::optional<PolyCochain> try_coboundary_witness(const PolyCochain& c) {
  const WitnessSystem& ws = witness_system(c.flavor, c.rank, c.arity);
  std::vector<Rat> rows;
  if (!target_vector(ws, c, &rows)) return std::nullopt;
  std::vector<Rat> y;
  if (!solve_mod_z(ws.diag, rows, &y)) return std::nullopt;
  PolyCochain f(c.flavor, c.rank, c.arity - 1);
  for (size_t j = 0; j < ws.basis.size(); ++j)
    if (y[j] != 0) f.add_term(ws.basis[j], y[j]);
  PolyCochain resid = boundary(f) - c;
  if (!integer_valued(resid)) throw std::logic_error("witness verification failed");
  return f;
}

PolyCochain coboundary_witness(const PolyCochain& c) {
  if (!is_coboundary(c)) throw std::domain_error("coboundary_witness: not a coboundary");
  auto f = try_coboundary_witness(c);
  if (!f)
    throw std::logic_error(
        "coboundary_witness: class is trivial but the capped solve failed (cap violation?)");
  return *f;
}

std::optional<PolyCochain> try_witness_over(const PolyCochain& c,
                                            const std::vector<Monomial>& basis) {
  std::vector<std::map<Monomial, Rat>> cols;
  cols.reserve(basis.size());
  for (const auto& m : basis) {
    PolyCochain b(c.flavor, c.rank, c.arity - 1);
    b.add_term(m, Rat(1));
    cols.push_back(boundary(b).terms);
  }
  GenericModZ sys = prepare_modz(cols);
  auto y = modz_solve(sys, c.terms);
  if (!y) return std::nullopt;
  PolyCochain f(c.flavor, c.rank, c.arity - 1);
  for (size_t j = 0; j < basis.size(); ++j)
    if ((*y)[j] != 0) f.add_term(basis[j], (*y)[j]);
  if (!integer_valued(boundary(f) - c)) throw std::logic_error("witness verification failed");
  return f;
}

bool IntegralityTester::test(const std::vector<Rat>& coeffs) const {
  if (coeffs.size() != support.size()) throw std::domain_error("tester: size mismatch");
  for (int i = 0; i < reduced.rows; ++i) {
    Rat dot = 0;
    for (int j = 0; j < reduced.cols; ++j)
      if (reduced.at(i, j) != 0 && coeffs[j] != 0) dot += Rat(reduced.at(i, j)) * coeffs[j];
    if (!is_integer(dot)) return false;
  }
  return true;
}

IntegralityTester make_tester(const WitnessSystem& ws, const std::vector<Monomial>& support) {
  IntegralityTester t;
  t.support = support;
  const int S = static_cast<int>(support.size());
  const int R = ws.diag.U.rows;
  std::vector<int> col_of(S, -1);  // system row index per support key, or -1
  int extras = 0;
  for (int j = 0; j < S; ++j) {
    auto it = ws.row_of.find(support[j]);
    if (it != ws.row_of.end())
      col_of[j] = it->second;
    else
      ++extras;
  }
  IntMat stacked(R - ws.diag.rank + extras, S);
  int r = 0;
  for (int i = ws.diag.rank; i < R; ++i, ++r)
    for (int j = 0; j < S; ++j)
      if (col_of[j] >= 0) stacked.at(r, j) = ws.diag.U.at(i, col_of[j]);
  for (int j = 0; j < S; ++j)
    if (col_of[j] < 0) stacked.at(r++, j) = 1;
  t.reduced = hnf_row_basis(std::move(stacked));
  return t;
}

// --- standard form ----------------------------------------------------------------

StandardForm standard_form(const PolyCochain& c, int zslot) {
  if (!flavor_has_e0(c.flavor))
    throw std::domain_error("standard_form: flavor has no distinguished z_0");
  if (zslot < 1 || zslot > c.arity) throw std::domain_error("standard_form: bad slot");
  if (!is_cocycle(c)) throw std::domain_error("standard_form: not a cocycle");
  const int z = zslot - 1;
  StandardForm sf{PolyCochain(c.flavor, c.rank, c.arity),
                  PolyCochain(c.flavor, c.rank, c.arity - 1)};
  for (const auto& [m, coeff] : c.terms) {
    for (int s = 0; s < c.arity; ++s) {
      if (s == z) continue;
      for (const auto& [v, e] : m[s])
        if (v == 0)
          throw std::domain_error("standard_form: cocycle depends on z_0 outside the z-slot");
    }
    int e0deg = 0;
    for (const auto& [v, e] : m[z])
      if (v == 0) e0deg = e;
    if (e0deg == 0) {
      sf.base.add_term(m, coeff);
    } else if (e0deg == 1 && m[z].size() == 1) {
      Monomial t;
      for (int s = 0; s < c.arity; ++s)
        if (s != z) t.push_back(m[s]);
      sf.d_part.add_term(t, coeff);
    } else {
      throw std::domain_error("standard_form: z_0-dependence is not of standard shape");
    }
  }
  // with the trivial action the d-part is itself a cocycle
  if (!integer_valued(boundary(sf.d_part)))
    throw std::logic_error("standard_form: d-part is not a cocycle");
  return sf;
}

// --- generic mod-Z systems ----------------------------------------------------------

GenericModZ prepare_modz(const std::vector<std::map<Monomial, Rat>>& cols) {
  GenericModZ sys;
  sys.ncols = static_cast<int>(cols.size());
  std::vector<BinPoly> bcols;
  bcols.reserve(cols.size());
  for (const auto& c : cols) bcols.push_back(to_binomial_map(c));
  for (const auto& col : bcols)
    for (const auto& [k, v] : col)
      if (!sys.row_of.count(k)) {
        int idx = static_cast<int>(sys.row_of.size());
        sys.row_of.emplace(k, idx);
      }
  IntMat A(static_cast<int>(sys.row_of.size()), sys.ncols);
  for (int j = 0; j < sys.ncols; ++j)
    for (const auto& [k, v] : bcols[j]) {
      if (!is_integer(v)) throw std::domain_error("prepare_modz: non-integer column");
      A.at(sys.row_of.at(k), j) = numerator(v);
    }
  sys.diag = diagonalize(std::move(A));
  return sys;
}

namespace {

bool modz_vector(const GenericModZ& sys, const std::map<Monomial, Rat>& rhs,
                 std::vector<Rat>* rows) {
  rows->assign(sys.row_of.size(), Rat(0));
  for (const auto& [k, v] : to_binomial_map(rhs)) {
    auto it = sys.row_of.find(k);
    if (it == sys.row_of.end()) {
      if (!is_integer(v)) return false;
    } else {
      (*rows)[it->second] = v;
    }
  }
  return true;
}

}  // namespace

bool modz_solvable(const GenericModZ& sys, const std::map<Monomial, Rat>& rhs) {
  std::vector<Rat> rows;
  if (!modz_vector(sys, rhs, &rows)) return false;
  return solvable_mod_z(sys.diag, rows);
}

std::optional<std::vector<Rat>> modz_solve(const GenericModZ& sys,
                                           const std::map<Monomial, Rat>& rhs) {
  std::vector<Rat> rows;
  if (!modz_vector(sys, rhs, &rows)) return std::nullopt;
  std::vector<Rat> y;
  if (!solve_mod_z(sys.diag, rows, &y)) return std::nullopt;
  return y;
}

}  // namespace atlas
