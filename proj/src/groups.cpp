#include "atlas/groups.hpp"

#include <stdexcept>

namespace atlas {

Int residue1(const Int& i, const Int& p) {
  if (p < 1) throw std::domain_error("residue: p < 1");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), i.get_mpz_t(), p.get_mpz_t());
  return r;
}

Int carry1(const Int& i, const Int& j, const Int& p) {
  return residue1(i, p) + residue1(j, p) - residue1(i + j, p);
}

Int gauss_residue(const Int& i, const Int& p) {
  if (p < 2) throw std::domain_error("gauss_residue: p < 2");
  return residue1(i, p);
}

Int gauss_cocycle(const Int& i, const Int& j, const Int& p) {
  if (p < 2) throw std::domain_error("gauss_cocycle: p < 2");
  return carry1(i, j, p);
}

EuclidPair euclid_pair(const Int& p, const Int& q) {
  if (p < 1 || q < 0) throw std::domain_error("euclid_pair: need p >= 1, q >= 0");
  if (q == 0) return {p, Int(1), Int(0)};
  ExtGcd eg = ext_gcd(p, q);  // p*s + q*t = d, 0 <= s < q/d
  Int u = eg.s;
  if (u == 0) u = q / eg.g;  // smallest positive representative
  Int v = (p * u - eg.g) / q;
  return {eg.g, u, v};
}

// --- GroupElement ----------------------------------------------------------

GroupElement GroupElement::basis(int rank, int i) {
  GroupElement g(rank);
  g[i] = 1;
  return g;
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  if (a.rank() != b.rank()) throw std::domain_error("rank mismatch");
  GroupElement c(a.rank());
  for (int i = 0; i < a.rank(); ++i) c.e[i] = a.e[i] + b.e[i];
  return c;
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) {
  if (a.rank() != b.rank()) throw std::domain_error("rank mismatch");
  GroupElement c(a.rank());
  for (int i = 0; i < a.rank(); ++i) c.e[i] = a.e[i] - b.e[i];
  return c;
}

GroupElement GroupElement::operator-() const {
  GroupElement c(rank());
  for (int i = 0; i < rank(); ++i) c.e[i] = -e[i];
  return c;
}

GroupElement scale(const Int& k, const GroupElement& g) {
  GroupElement c(g.rank());
  for (int i = 0; i < g.rank(); ++i) c.e[i] = k * g.e[i];
  return c;
}

// --- ModulusData ------------------------------------------------------------

ModulusData::ModulusData(int rank_, std::vector<Int> p_, std::vector<Int> q_)
    : rank(rank_), p(std::move(p_)), q(std::move(q_)) {
  if (rank < 1) throw std::domain_error("ModulusData: rank < 1");
  if (static_cast<int>(p.size()) != rank || static_cast<int>(q.size()) != rank)
    throw std::domain_error("ModulusData: p/q size mismatch");
  for (int i = 0; i < rank; ++i) {
    if (p[i] < 1) throw std::domain_error("ModulusData: p_i < 1");
    if (q[i] < 0 || q[i] >= p[i]) throw std::domain_error("ModulusData: need 0 <= q_i < p_i");
  }
}

Rat ModulusData::n_of(const GroupElement& g) const {
  if (g.rank() != rank) throw std::domain_error("rank mismatch");
  Rat n = 0;
  for (int i = 1; i <= rank; ++i) n += frac(g[i] * qi(i), pi(i));
  n.canonicalize();
  return n;
}

bool ModulusData::in_N(const GroupElement& g) const {
  if (g.rank() != rank) throw std::domain_error("rank mismatch");
  for (int i = 1; i <= rank; ++i)
    if (residue1(g[i], pi(i)) != 0) return false;
  return true;
}

// --- GmElement ---------------------------------------------------------------

GmElement gm_make(const GroupElement& g, const Rat& s, const ModulusData& m) {
  if (!is_integer(s - m.n_of(g)))
    throw std::domain_error("GmElement: s is not congruent to m(g)");
  return {g, s};
}

GmElement gm_zero(const ModulusData& m) { return {GroupElement(m.rank), Rat(0)}; }

GmElement gm_z0(const ModulusData& m) { return {GroupElement(m.rank), Rat(1)}; }

GmElement gm_zi(const ModulusData& m, int i) {
  GroupElement a = GroupElement::basis(m.rank, i);
  return {a, frac(m.qi(i), m.pi(i))};
}

GmElement section_sm(const GroupElement& g, const ModulusData& m) {
  return {g, m.n_of(g)};
}

GmElement embed_N(const GroupElement& g, const ModulusData& m) {
  if (!m.in_N(g)) throw std::domain_error("embed_N: element not in N");
  return gm_make(g, Rat(0), m);
}

Int gm_e0(const GmElement& x, const ModulusData& m) {
  Rat d = x.s - m.n_of(x.g);
  if (!is_integer(d)) throw std::domain_error("GmElement: invariant violated");
  return numerator(d);
}

GmElement gm_mul(const GmElement& a, const GmElement& b) {
  return {a.g + b.g, a.s + b.s};
}

GmElement gm_inv(const GmElement& a) { return {-a.g, -a.s}; }

// --- QmElement ---------------------------------------------------------------

QmElement qm_make(const std::vector<Int>& residues, const ModulusData& m, const Int& z0_offset) {
  if (static_cast<int>(residues.size()) != m.rank)
    throw std::domain_error("QmElement: residue count mismatch");
  Rat s(z0_offset);
  for (int i = 1; i <= m.rank; ++i) {
    const Int& r = residues[i - 1];
    if (r < 0 || r >= m.pi(i)) throw std::domain_error("QmElement: residue out of range");
    s += frac(r * m.qi(i), m.pi(i));
  }
  s.canonicalize();
  return {residues, s};
}

QmElement qm_project(const GmElement& x, const ModulusData& m) {
  std::vector<Int> res(m.rank);
  for (int i = 1; i <= m.rank; ++i) res[i - 1] = residue1(x.g[i], m.pi(i));
  return {res, x.s};
}

Int qm_e0(const QmElement& x, const ModulusData& m) {
  Rat s = x.s;
  for (int i = 1; i <= m.rank; ++i) s -= frac(x.res[i - 1] * m.qi(i), m.pi(i));
  if (!is_integer(s)) throw std::domain_error("QmElement: invariant violated");
  return numerator(s);
}

QmElement qm_mul(const QmElement& a, const QmElement& b, const ModulusData& m) {
  std::vector<Int> res(m.rank);
  for (int i = 1; i <= m.rank; ++i) res[i - 1] = residue1(a.res[i - 1] + b.res[i - 1], m.pi(i));
  return {res, a.s + b.s};
}

GmElement qm_section(const QmElement& x, const ModulusData& m) {
  GroupElement g(m.rank);
  for (int i = 1; i <= m.rank; ++i) g[i] = x.res[i - 1];
  return {g, x.s};  // the section keeps the R-component
}

GroupElement nN_cocycle(const QmElement& q1, const QmElement& q2, const ModulusData& m) {
  GroupElement g(m.rank);
  for (int i = 1; i <= m.rank; ++i)
    g[i] = carry1(q1.res[i - 1], q2.res[i - 1], m.pi(i));
  return g;
}

// --- Heisenberg group H -----------------------------------------------------

Int HeisenbergElement::entry(int j, int k) const {
  auto it = c.find({j, k});
  return it == c.end() ? Int(0) : it->second;
}

static void add_entry(CentralPart& c, int j, int k, const Int& v) {
  if (v == 0) return;
  auto it = c.find({j, k});
  if (it == c.end()) {
    c.emplace(std::make_pair(j, k), v);
  } else {
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
}

static CentralPart central_add(const CentralPart& a, const CentralPart& b) {
  CentralPart c = a;
  for (const auto& [jk, v] : b) add_entry(c, jk.first, jk.second, v);
  return c;
}

static CentralPart central_neg(const CentralPart& a) {
  CentralPart c;
  for (const auto& [jk, v] : a) c[jk] = -v;
  return c;
}

CentralPart nM_cocycle(const GroupElement& g, const GroupElement& h) {
  if (g.rank() != h.rank()) throw std::domain_error("rank mismatch");
  CentralPart c;
  for (int j = 1; j <= g.rank(); ++j)
    for (int k = j + 1; k <= g.rank(); ++k) add_entry(c, j, k, g[j] * h[k]);
  return c;
}

HeisenbergElement h_identity(int rank) { return {{}, GroupElement(rank)}; }

HeisenbergElement s_H(const GroupElement& g) { return {{}, g}; }

HeisenbergElement wedge(int rank, int j, int k, const Int& n) {
  if (!(1 <= j && j < k && k <= rank)) throw std::domain_error("wedge: need 1 <= j < k <= rank");
  HeisenbergElement x{{}, GroupElement(rank)};
  add_entry(x.c, j, k, n);
  return x;
}

HeisenbergElement heisenberg_mul(const HeisenbergElement& x, const HeisenbergElement& y) {
  if (x.rank() != y.rank()) throw std::domain_error("rank mismatch");
  return {central_add(central_add(x.c, y.c), nM_cocycle(x.g, y.g)), x.g + y.g};
}

HeisenbergElement heisenberg_inv(const HeisenbergElement& x) {
  // (m,g)^-1 = (-m + n_M(g;g), -g)
  return {central_add(central_neg(x.c), nM_cocycle(x.g, x.g)), -x.g};
}

HeisenbergElement commutator(const HeisenbergElement& x, const HeisenbergElement& y) {
  if (x.rank() != y.rank()) throw std::domain_error("rank mismatch");
  CentralPart c = central_add(nM_cocycle(x.g, y.g), central_neg(nM_cocycle(y.g, x.g)));
  return {c, GroupElement(x.rank())};
}

HeisenbergElement nL_cocycle(const QmElement& q1, const QmElement& q2, const ModulusData& m) {
  GroupElement s1 = qm_section(q1, m).g;
  GroupElement s2 = qm_section(q2, m).g;
  GroupElement nn = nN_cocycle(q1, q2, m);
  GroupElement s12(m.rank);
  for (int i = 1; i <= m.rank; ++i) s12[i] = residue1(q1.res[i - 1] + q2.res[i - 1], m.pi(i));
  CentralPart c = central_add(nM_cocycle(s1, s2), central_neg(nM_cocycle(nn, s12)));
  return {c, nn};
}

// --- H_m ---------------------------------------------------------------------

HmElement hm_make(const CentralPart& c, const GroupElement& g, const Rat& s,
                  const ModulusData& m) {
  if (g.rank() != m.rank) throw std::domain_error("rank mismatch");
  if (!is_integer(s - m.n_of(g))) throw std::domain_error("HmElement: s not congruent to m(g)");
  CentralPart cc;
  for (const auto& [jk, v] : c) {
    if (!(1 <= jk.first && jk.first < jk.second && jk.second <= m.rank))
      throw std::domain_error("HmElement: central key not upper triangular");
    if (v != 0) cc[jk] = v;
  }
  return {cc, g, s};
}

HmElement hm_zero(const ModulusData& m) { return {{}, GroupElement(m.rank), Rat(0)}; }

HmElement section_hm(const HeisenbergElement& h, const ModulusData& m) {
  return {h.c, h.g, m.n_of(h.g)};
}

HmElement embed_L(const HeisenbergElement& h, const ModulusData& m) {
  if (!m.in_N(h.g)) throw std::domain_error("embed_L: abelian part not in N");
  return hm_make(h.c, h.g, Rat(0), m);
}

Int hm_e0(const HmElement& x, const ModulusData& m) {
  Rat d = x.s - m.n_of(x.g);
  if (!is_integer(d)) throw std::domain_error("HmElement: invariant violated");
  return numerator(d);
}

HmElement hm_mul(const HmElement& a, const HmElement& b) {
  if (a.g.rank() != b.g.rank()) throw std::domain_error("rank mismatch");
  return {central_add(central_add(a.c, b.c), nM_cocycle(a.g, b.g)), a.g + b.g, a.s + b.s};
}

HmElement hm_inv(const HmElement& a) {
  return {central_add(central_neg(a.c), nM_cocycle(a.g, a.g)), -a.g, -a.s};
}

HmElement hm_conjugate(const HmElement& g, const HmElement& h) {
  return hm_mul(hm_mul(hm_inv(h), g), h);
}

HmElement hm_commutator(const HmElement& x, const HmElement& y) {
  CentralPart c = central_add(nM_cocycle(x.g, y.g), central_neg(nM_cocycle(y.g, x.g)));
  return {c, GroupElement(x.g.rank()), Rat(0)};
}

bool hm_in_L(const HmElement& x, const ModulusData& m) {
  return m.in_N(x.g) && x.s == 0;
}

}  // namespace atlas
