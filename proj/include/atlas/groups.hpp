#ifndef ATLAS_GROUPS_HPP
#define ATLAS_GROUPS_HPP

#include <map>
#include <utility>
#include <vector>

#include "atlas/numeric.hpp"

namespace atlas {

// ---------------------------------------------------------------------------
// Residue arithmetic on Z_p.
// ---------------------------------------------------------------------------

// {i}_p: Euclidean remainder in {0,...,p-1}. Requires p >= 2.
Int gauss_residue(const Int& i, const Int& p);

// eta_p([i],[j]) = {i}_p + {j}_p - {i+j}_p, the carry cocycle; value in {0,p}.
Int gauss_cocycle(const Int& i, const Int& j, const Int& p);

// Internal variants that also accept p = 1 ({i}_1 = 0, eta_1 = 0).
Int residue1(const Int& i, const Int& p);
Int carry1(const Int& i, const Int& j, const Int& p);

struct EuclidPair {
  Int d, u, v;  // p*u - q*v = d = gcd(p,q)
};

// p >= 1, q >= 0. Canonical solution with the smallest u >= 1.
EuclidPair euclid_pair(const Int& p, const Int& q);

// ---------------------------------------------------------------------------
// G = Z^r and the modulus data defining N = PG and m.
// ---------------------------------------------------------------------------

struct GroupElement {
  std::vector<Int> e;  // coordinates e_i(g), i = 1..r stored at [0..r-1]

  GroupElement() = default;
  explicit GroupElement(int rank) : e(rank, Int(0)) {}
  explicit GroupElement(std::vector<Int> coords) : e(std::move(coords)) {}

  int rank() const { return static_cast<int>(e.size()); }
  const Int& operator[](int i) const { return e[i - 1]; }  // 1-based
  Int& operator[](int i) { return e[i - 1]; }

  static GroupElement basis(int rank, int i);  // a_i

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  GroupElement operator-() const;
  friend bool operator==(const GroupElement& a, const GroupElement& b) = default;
};

GroupElement scale(const Int& k, const GroupElement& g);

// (rank r, p, q): N = PG, m(a_i) = q_i T'/p_i. All R-components are stored
// in units of T', so the extension arithmetic is exact rational.
struct ModulusData {
  int rank = 0;
  std::vector<Int> p, q;

  ModulusData() = default;
  ModulusData(int rank_, std::vector<Int> p_, std::vector<Int> q_);

  const Int& pi(int i) const { return p[i - 1]; }
  const Int& qi(int i) const { return q[i - 1]; }

  // n(g) = sum e_i(g) q_i/p_i  (T'-units)
  Rat n_of(const GroupElement& g) const;
  // m(g) = n(g) mod 1
  Rat m_of(const GroupElement& g) const { return mod1(n_of(g)); }
  bool in_N(const GroupElement& g) const;  // p_i | e_i(g) for all i

  friend bool operator==(const ModulusData& a, const ModulusData& b) = default;
};

// ---------------------------------------------------------------------------
// G_m: pairs (g, s) with s = m(g) in R/T'Z, coordinatized by z_0, z_i.
// ---------------------------------------------------------------------------

struct GmElement {
  GroupElement g;
  Rat s;  // T'-units; invariant: s - n(g) in Z
};

GmElement gm_make(const GroupElement& g, const Rat& s, const ModulusData& m);
GmElement gm_zero(const ModulusData& m);
GmElement gm_z0(const ModulusData& m);               // z_0 = (0, 1)
GmElement gm_zi(const ModulusData& m, int i);        // z_i = (a_i, q_i/p_i)
GmElement section_sm(const GroupElement& g, const ModulusData& m);  // (g, n(g))
GmElement embed_N(const GroupElement& g, const ModulusData& m);     // g in N -> (g, 0)

Int gm_e0(const GmElement& x, const ModulusData& m);  // tilde-e_0 = s - n(g)
GmElement gm_mul(const GmElement& a, const GmElement& b);
GmElement gm_inv(const GmElement& a);

// ---------------------------------------------------------------------------
// Q_m = G_m / N: residues mod p_i plus the R-component.
// ---------------------------------------------------------------------------

struct QmElement {
  std::vector<Int> res;  // entry i-1 in {0..p_i-1}
  Rat s;                 // T'-units; invariant: s - sum {e_i} q_i/p_i in Z
};

QmElement qm_make(const std::vector<Int>& residues, const ModulusData& m,
                  const Int& z0_offset = Int(0));
QmElement qm_project(const GmElement& x, const ModulusData& m);
Int qm_e0(const QmElement& x, const ModulusData& m);
QmElement qm_mul(const QmElement& a, const QmElement& b, const ModulusData& m);
// the residue-representative cross-section s: Q_m -> G_m, keeping the R-part
GmElement qm_section(const QmElement& x, const ModulusData& m);

// n_N = coboundary of the cross-section; lands in N.
GroupElement nN_cocycle(const QmElement& q1, const QmElement& q2, const ModulusData& m);

// ---------------------------------------------------------------------------
// The Heisenberg resolution group H = M x_{n_M} G and its extension H_m.
// ---------------------------------------------------------------------------

using CentralPart = std::map<std::pair<int, int>, Int>;  // (j,k), j < k -> entry

struct HeisenbergElement {
  CentralPart c;
  GroupElement g;

  int rank() const { return g.rank(); }
  Int entry(int j, int k) const;
  friend bool operator==(const HeisenbergElement& a, const HeisenbergElement& b) = default;
};

// n_M(g; h): e_{j,k} = e_j(g) e_k(h)
CentralPart nM_cocycle(const GroupElement& g, const GroupElement& h);

HeisenbergElement h_identity(int rank);
HeisenbergElement s_H(const GroupElement& g);              // (0, g)
HeisenbergElement wedge(int rank, int j, int k, const Int& n = Int(1));  // n*(a_j ^ a_k)
HeisenbergElement heisenberg_mul(const HeisenbergElement& x, const HeisenbergElement& y);
HeisenbergElement heisenberg_inv(const HeisenbergElement& x);
HeisenbergElement commutator(const HeisenbergElement& x, const HeisenbergElement& y);

// n_L: central part n_M(s q1; s q2) - n_M(n_N; s(q1+q2)), abelian part n_N.
HeisenbergElement nL_cocycle(const QmElement& q1, const QmElement& q2, const ModulusData& m);

struct HmElement {
  CentralPart c;
  GroupElement g;
  Rat s;  // invariant: s - n(g) in Z
};

HmElement hm_make(const CentralPart& c, const GroupElement& g, const Rat& s,
                  const ModulusData& m);
HmElement hm_zero(const ModulusData& m);
HmElement section_hm(const HeisenbergElement& h, const ModulusData& m);  // (m, g, n(g))
// L = M x_{n_M} N sits inside H_m as (m, Pg, 0); tilde-e_0 = -sum e_{i,N} q_i
HmElement embed_L(const HeisenbergElement& h, const ModulusData& m);

Int hm_e0(const HmElement& x, const ModulusData& m);
HmElement hm_mul(const HmElement& a, const HmElement& b);
HmElement hm_inv(const HmElement& a);
HmElement hm_conjugate(const HmElement& g, const HmElement& h);  // h^-1 g h
HmElement hm_commutator(const HmElement& x, const HmElement& y); // central, s = 0
bool hm_in_L(const HmElement& x, const ModulusData& m);

}  // namespace atlas

#endif
