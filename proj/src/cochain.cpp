#include "atlas/cochain.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace atlas {

bool flavor_has_central(Flavor f) { return f == Flavor::H || f == Flavor::Hm; }
bool flavor_has_e0(Flavor f) { return f == Flavor::Gm || f == Flavor::Hm; }

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::G: return "G";
    case Flavor::Gm: return "Gm";
    case Flavor::H: return "H";
    case Flavor::Hm: return "Hm";
  }
  return "?";
}

Flavor flavor_parse(const std::string& s) {
  if (s == "G") return Flavor::G;
  if (s == "Gm") return Flavor::Gm;
  if (s == "H") return Flavor::H;
  if (s == "Hm") return Flavor::Hm;
  throw std::invalid_argument("unknown flavor \"" + s + "\"");
}

SlotMonomial slot_mul(const SlotMonomial& a, const SlotMonomial& b) {
  SlotMonomial r = a;
  for (const auto& [v, e] : b) {
    auto it = std::find_if(r.begin(), r.end(), [&](const auto& p) { return p.first == v; });
    if (it == r.end())
      r.emplace_back(v, e);
    else
      it->second += e;
  }
  std::sort(r.begin(), r.end());
  return r;
}

int slot_weight(const SlotMonomial& s) {
  int w = 0;
  for (const auto& [v, e] : s) w += is_central_var(v) ? 2 * e : e;
  return w;
}

std::string slot_str(const SlotMonomial& s) {
  if (s.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : s) {
    if (!first) os << "*";
    first = false;
    if (is_central_var(v)) {
      auto [j, k] = central_of(v);
      os << "c" << j << "," << k;
    } else {
      os << "e" << v;
    }
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

std::string monomial_str(const Monomial& m) {
  std::ostringstream os;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << " x ";
    os << slot_str(m[i]);
  }
  return os.str();
}

static void validate_slot(const SlotMonomial& s, Flavor f, int rank) {
  int last = -1;
  for (const auto& [v, e] : s) {
    if (e < 1) throw std::domain_error("monomial exponent < 1");
    if (v <= last) throw std::domain_error("monomial factors not sorted");
    last = v;
    if (is_central_var(v)) {
      if (!flavor_has_central(f)) throw std::domain_error("central functional on abelian flavor");
      auto [j, k] = central_of(v);
      if (!(1 <= j && j < k && k <= rank)) throw std::domain_error("central index out of range");
    } else {
      if (v == 0 && !flavor_has_e0(f)) throw std::domain_error("tilde-e_0 on flavor without z_0");
      if (v < 0 || v > rank) throw std::domain_error("abelian index out of range");
    }
  }
}

void PolyCochain::add_term(const Monomial& m, const Rat& c) {
  if (static_cast<int>(m.size()) != arity) throw std::domain_error("monomial arity mismatch");
  if (c == 0) return;
  for (const auto& s : m) validate_slot(s, flavor, rank);
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

PolyCochain& PolyCochain::operator+=(const PolyCochain& o) {
  if (flavor != o.flavor || rank != o.rank || arity != o.arity)
    throw std::domain_error("cochain shape mismatch");
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

PolyCochain& PolyCochain::operator-=(const PolyCochain& o) {
  if (flavor != o.flavor || rank != o.rank || arity != o.arity)
    throw std::domain_error("cochain shape mismatch");
  for (const auto& [m, c] : o.terms) add_term(m, -c);
  return *this;
}

PolyCochain& PolyCochain::operator*=(const Rat& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

Monomial mono(std::initializer_list<SlotMonomial> slots) { return Monomial(slots); }

SlotMonomial sv(std::initializer_list<int> vars) {
  SlotMonomial s;
  for (int v : vars) s = slot_mul(s, {{v, 1}});
  return s;
}

// --- evaluation --------------------------------------------------------------

ElementCoords coords_of(const GroupElement& g) {
  ElementCoords c;
  c.ab.resize(g.rank() + 1, Int(0));
  for (int i = 1; i <= g.rank(); ++i) c.ab[i] = g[i];
  return c;
}

ElementCoords coords_of(const GmElement& x, const ModulusData& m) {
  ElementCoords c = coords_of(x.g);
  c.ab[0] = gm_e0(x, m);
  return c;
}

ElementCoords coords_of(const HeisenbergElement& h) {
  ElementCoords c = coords_of(h.g);
  c.central = h.c;
  return c;
}

ElementCoords coords_of(const HmElement& x, const ModulusData& m) {
  ElementCoords c = coords_of(x.g);
  c.ab[0] = hm_e0(x, m);
  c.central = x.c;
  return c;
}

static Int coord_value(const ElementCoords& x, int var) {
  if (is_central_var(var)) {
    auto [j, k] = central_of(var);
    auto it = x.central.find({j, k});
    return it == x.central.end() ? Int(0) : it->second;
  }
  if (var >= static_cast<int>(x.ab.size())) throw std::domain_error("coordinate out of range");
  return x.ab[var];
}

Rat evaluate(const PolyCochain& c, const std::vector<ElementCoords>& args) {
  if (static_cast<int>(args.size()) != c.arity) throw std::domain_error("arity mismatch");
  Rat total = 0;
  for (const auto& [m, coeff] : c.terms) {
    Int prod = 1;
    bool dead = false;
    for (int s = 0; s < c.arity && !dead; ++s) {
      for (const auto& [v, e] : m[s]) {
        Int val = coord_value(args[s], v);
        if (val == 0) {
          dead = true;
          break;
        }
        for (int t = 0; t < e; ++t) prod *= val;
      }
    }
    if (!dead) total += coeff * Rat(prod);
  }
  total.canonicalize();
  return total;
}

Rat torus_value(const PolyCochain& c, const std::vector<ElementCoords>& args) {
  return mod1(evaluate(c, args));
}

// --- boundary ----------------------------------------------------------------

// expansion of one slot monomial over a product g*h of two slots
using SplitPoly = std::map<std::pair<SlotMonomial, SlotMonomial>, Int>;

static SplitPoly split_factor(int var, Flavor f) {
  SplitPoly p;
  p[{sv({var}), {}}] = 1;
  p[{{}, sv({var})}] = 1;
  if (is_central_var(var) && flavor_has_central(f)) {
    auto [j, k] = central_of(var);
    // e_{j,k}(m_0(gh)) = e_{j,k}(g) + e_{j,k}(h) + e_j(g) e_k(h)
    p[{sv({j}), sv({k})}] = 1;
  }
  return p;
}

static SplitPoly split_mul(const SplitPoly& a, const SplitPoly& b) {
  SplitPoly r;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      auto key = std::make_pair(slot_mul(ka.first, kb.first), slot_mul(ka.second, kb.second));
      r[key] += va * vb;
    }
  return r;
}

static SplitPoly split_slot(const SlotMonomial& s, Flavor f) {
  SplitPoly acc;
  acc[{{}, {}}] = 1;
  for (const auto& [v, e] : s) {
    SplitPoly one = split_factor(v, f);
    for (int t = 0; t < e; ++t) acc = split_mul(acc, one);
  }
  return acc;
}

PolyCochain boundary(const PolyCochain& c) {
  const int n = c.arity;
  PolyCochain d(c.flavor, c.rank, n + 1);
  for (const auto& [m, coeff] : c.terms) {
    // k = 0: c(g_2..g_{n+1})
    {
      Monomial t(n + 1);
      for (int i = 0; i < n; ++i) t[i + 1] = m[i];
      d.add_term(t, coeff);
    }
    // k = n+1: (-1)^{n+1} c(g_1..g_n)
    {
      Monomial t(n + 1);
      for (int i = 0; i < n; ++i) t[i] = m[i];
      d.add_term(t, (n + 1) % 2 ? -coeff : coeff);
    }
    // 1 <= k <= n: (-1)^k c(g_1,..,g_k g_{k+1},..,g_{n+1})
    for (int k = 1; k <= n; ++k) {
      Rat sgn = (k % 2) ? -coeff : coeff;
      SplitPoly sp = split_slot(m[k - 1], c.flavor);
      for (const auto& [pairkey, mult] : sp) {
        Monomial t(n + 1);
        for (int i = 0; i < k - 1; ++i) t[i] = m[i];
        t[k - 1] = pairkey.first;
        t[k] = pairkey.second;
        for (int i = k; i < n; ++i) t[i + 1] = m[i];
        d.add_term(t, sgn * Rat(mult));
      }
    }
  }
  return d;
}

int factorial(int n) {
  int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

PolyCochain asymmetrize(const PolyCochain& c) {
  const int n = c.arity;
  PolyCochain r(c.flavor, c.rank, n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    Rat sgn = (inv % 2) ? Rat(-1) : Rat(1);
    for (const auto& [m, coeff] : c.terms) {
      Monomial t(n);
      for (int i = 0; i < n; ++i) t[perm[i]] = m[i];
      r.add_term(t, sgn * coeff);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

bool is_capped(const PolyCochain& c, int cap) {
  for (const auto& [m, coeff] : c.terms)
    for (const auto& s : m)
      if (slot_weight(s) > cap) return false;
  return true;
}

std::vector<SlotMonomial> slot_monomials(Flavor f, int rank, int cap) {
  std::vector<int> abelian;
  for (int i = flavor_has_e0(f) ? 0 : 1; i <= rank; ++i) abelian.push_back(var_abelian(i));
  std::vector<SlotMonomial> out;
  std::function<void(size_t, int, SlotMonomial&)> gen = [&](size_t idx, int rem, SlotMonomial& base) {
    if (idx == abelian.size()) {
      out.push_back(base);
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      if (e > 0) base.emplace_back(abelian[idx], e);
      gen(idx + 1, rem - e, base);
      if (e > 0) base.pop_back();
    }
  };
  SlotMonomial base;
  gen(0, cap, base);
  if (flavor_has_central(f) && cap >= 2) {
    std::vector<SlotMonomial> withc;
    for (int j = 1; j <= rank; ++j)
      for (int k = j + 1; k <= rank; ++k) {
        SlotMonomial cbase{{var_central(j, k), 1}};
        std::function<void(size_t, int, SlotMonomial&)> gen2 = [&](size_t idx, int rem,
                                                                   SlotMonomial& b) {
          if (idx == abelian.size()) {
            SlotMonomial s = slot_mul(cbase, b);
            withc.push_back(s);
            return;
          }
          for (int e = 0; e <= rem; ++e) {
            if (e > 0) b.emplace_back(abelian[idx], e);
            gen2(idx + 1, rem - e, b);
            if (e > 0) b.pop_back();
          }
        };
        SlotMonomial b;
        gen2(0, cap - 2, b);
      }
    out.insert(out.end(), withc.begin(), withc.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- parameter records ---------------------------------------------------------

// a(x,j,k) may be nonzero only for j < k; the first index is free
bool parameter_a_pattern_ok(int x, int j, int k) {
  (void)x;
  return j < k;
}

void ParameterA::set(int i, int j, int k, const Rat& x) {
  if (i < 1 || j < 1 || k < 1 || i > rank || j > rank || k > rank)
    throw std::domain_error("ParameterA: index out of range");
  if (!parameter_a_pattern_ok(i, j, k))
    throw std::domain_error("ParameterA: illegal index pattern");
  if (x == 0)
    v.erase({i, j, k});
  else
    v[{i, j, k}] = x;
}

Rat ParameterA::operator()(int i, int j, int k) const {
  auto it = v.find({i, j, k});
  return it == v.end() ? Rat(0) : it->second;
}

Rat ParameterA::as(int i, int j, int k) const {
  return (*this)(i, j, k) - (*this)(j, i, k) + (*this)(k, i, j);
}

bool ParameterA::strictly_increasing_support() const {
  for (const auto& [ijk, x] : v)
    if (!(ijk[0] < ijk[1] && ijk[1] < ijk[2])) return false;
  return true;
}

ParameterA as_hat(const ParameterA& a) {
  ParameterA h(a.rank);
  for (int i = 1; i <= a.rank; ++i)
    for (int j = i + 1; j <= a.rank; ++j)
      for (int k = j + 1; k <= a.rank; ++k) h.set(i, j, k, a.as(i, j, k));
  return h;
}

ParameterA as_full(const ParameterA& a) {
  ParameterA h(a.rank);
  for (int i = 1; i <= a.rank; ++i)
    for (int j = i + 1; j <= a.rank; ++j)
      for (int k = j + 1; k <= a.rank; ++k) {
        Rat s = a.as(i, j, k);
        h.set(i, j, k, s);
        h.set(j, i, k, -s);
        h.set(k, i, j, s);
      }
  return h;
}

void ParameterB::set(int i, int j, const Rat& x) {
  if (i < 1 || i > rank || j < 0 || j > rank) throw std::domain_error("ParameterB: index out of range");
  if (x == 0)
    v.erase({i, j});
  else
    v[{i, j}] = x;
}

Rat ParameterB::operator()(int i, int j) const {
  auto it = v.find({i, j});
  return it == v.end() ? Rat(0) : it->second;
}

ParameterA zero_a(int rank) { return ParameterA(rank); }
ParameterB zero_b(int rank) { return ParameterB(rank); }

// --- named families --------------------------------------------------------------

static PolyCochain one_cochain_B(Flavor f, int rank, int j, int k) {
  PolyCochain b(f, rank, 1);
  if (j < k) {
    b.add_term(mono({sv({var_central(j, k)})}), Rat(-1));
  } else if (j == k) {
    b.add_term(mono({{{var_abelian(j), 2}}}), Rat(-1, 2));
  } else {
    b.add_term(mono({sv({var_central(k, j)})}), Rat(1));
    b.add_term(mono({sv({var_abelian(k), var_abelian(j)})}), Rat(-1));
  }
  return b;
}

PolyCochain cochain_B(int rank, int j, int k) {
  if (j < 1 || k < 1 || j > rank || k > rank) throw std::domain_error("cochain_B: index out of range");
  return one_cochain_B(Flavor::Hm, rank, j, k);
}

static PolyCochain tensor2(const PolyCochain& a, const PolyCochain& b) {
  if (a.arity != 1 || b.arity != 1 || a.flavor != b.flavor || a.rank != b.rank)
    throw std::domain_error("tensor2: need two 1-cochains of equal shape");
  PolyCochain r(a.flavor, a.rank, 2);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) r.add_term({ma[0], mb[0]}, ca * cb);
  return r;
}

static PolyCochain e1(Flavor f, int rank, int i) {
  PolyCochain c(f, rank, 1);
  c.add_term(mono({sv({var_abelian(i)})}), Rat(1));
  return c;
}

static PolyCochain eprod(Flavor f, int rank, int i, int j) {
  PolyCochain c(f, rank, 1);
  c.add_term(mono({sv({var_abelian(i), var_abelian(j)})}), Rat(1));
  return c;
}

static PolyCochain f_ijk_flavored(Flavor f, int rank, int i, int j, int k) {
  PolyCochain r(f, rank, 2);
  r += Rat(2) * tensor2(eprod(f, rank, i, j), e1(f, rank, k));
  r += Rat(-3) * tensor2(e1(f, rank, i), eprod(f, rank, j, k));
  r += tensor2(e1(f, rank, j), eprod(f, rank, i, k));
  r += Rat(-2) * tensor2(eprod(f, rank, i, k), e1(f, rank, j));
  r += Rat(-1) * tensor2(e1(f, rank, k), eprod(f, rank, i, j));
  return r;
}

PolyCochain f_ijk(int rank, int i, int j, int k) {
  if (i == j || j == k || i == k) throw std::domain_error("f_ijk: indices must be distinct");
  return f_ijk_flavored(Flavor::G, rank, i, j, k);
}

PolyCochain det_ijk(int rank, int i, int j, int k) {
  if (!(i < j && j < k)) throw std::domain_error("det_ijk: need i < j < k");
  PolyCochain t(Flavor::G, rank, 3);
  t.add_term(mono({sv({i}), sv({j}), sv({k})}), Rat(1));
  return asymmetrize(t);
}

PolyCochain b_eta_zeta(int rank, const std::vector<Rat>& eta, const std::vector<Rat>& zeta) {
  if (static_cast<int>(eta.size()) != rank || static_cast<int>(zeta.size()) != rank)
    throw std::domain_error("b_eta_zeta: coefficient size mismatch");
  PolyCochain b(Flavor::H, rank, 1);
  for (int j = 1; j <= rank; ++j)
    for (int k = j + 1; k <= rank; ++k)
      b.add_term(mono({sv({var_central(j, k)})}), eta[j - 1] * zeta[k - 1]);
  return b;
}

FamilyXYZUV family_xyzuv(const ParameterA& a) {
  const int r = a.rank;
  const Flavor f = Flavor::Hm;
  FamilyXYZUV fam{PolyCochain(f, r, 2), PolyCochain(f, r, 2), PolyCochain(f, r, 2),
                  PolyCochain(f, r, 2), PolyCochain(f, r, 2)};
  auto B = [&](int j, int k) { return one_cochain_B(f, r, j, k); };
  auto E = [&](int i) { return e1(f, r, i); };
  auto C = [&](int j, int k) {
    PolyCochain c(f, r, 1);
    c.add_term(mono({sv({var_central(j, k)})}), Rat(1));
    return c;
  };

  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      for (int k = j + 1; k <= r; ++k) {
        Rat a1 = a(i, j, k), a2 = a(j, i, k), a3 = a(k, i, j);
        if (a1 == 0 && a2 == 0 && a3 == 0) continue;
        // X_a(i,j,k)
        fam.X += a1 * tensor2(C(j, k), E(i));
        fam.X += a2 * tensor2(C(i, k), E(j));
        fam.X += a3 * tensor2(C(i, j), E(k));
        // Y_a(i,j,k)
        fam.Y += a1 * (tensor2(B(i, j), E(k)) + tensor2(E(k), B(j, i)) -
                       tensor2(B(i, k), E(j)) - tensor2(E(j), B(k, i)));
        fam.Y += a2 * (tensor2(B(j, i), E(k)) + tensor2(E(k), B(i, j)) -
                       tensor2(B(j, k), E(i)) - tensor2(E(i), B(k, j)));
        fam.Y += a3 * (tensor2(B(k, i), E(j)) + tensor2(E(j), B(i, k)) -
                       tensor2(B(k, j), E(i)) - tensor2(E(i), B(j, k)));
        // Z_a(i,j,k)
        fam.Z += a1 * (tensor2(E(j), C(i, k)) - tensor2(E(k), C(i, j)));
        fam.Z += a2 * (tensor2(E(k), C(i, j)) + tensor2(E(i), C(j, k)));
        fam.Z += a3 * (tensor2(E(j), C(i, k)) - tensor2(E(i), C(j, k)));
        // U_a(i,j,k)
        Rat as = a.as(i, j, k);
        PolyCochain u = a1 * f_ijk_flavored(f, r, i, j, k);
        u += a2 * f_ijk_flavored(f, r, j, i, k);
        u += a3 * f_ijk_flavored(f, r, k, i, j);
        u -= as * f_ijk_flavored(f, r, i, j, k);
        fam.U += Rat(1, 6) * u;
      }

  for (int i = 1; i <= r; ++i)
    for (int k = i + 1; k <= r; ++k) {
      Rat x = a(i, i, k), y = a(k, i, k);
      if (x == 0 && y == 0) continue;
      fam.X += x * tensor2(C(i, k), E(i));
      fam.X += y * tensor2(C(i, k), E(k));
      fam.Y += x * (tensor2(B(i, i), E(k)) + tensor2(E(k), B(i, i)) -
                    tensor2(B(i, k), E(i)) - tensor2(E(i), B(k, i)));
      fam.Y += y * (tensor2(B(k, i), E(k)) + tensor2(E(k), B(i, k)) -
                    tensor2(B(k, k), E(i)) - tensor2(E(i), B(k, k)));
      fam.Z += x * tensor2(E(i), C(i, k));
      fam.Z += y * tensor2(E(k), C(i, k));
      fam.U += Rat(-1) * x * tensor2(B(i, i), E(k));
      fam.U += y * (tensor2(B(k, k), E(i)) - tensor2(E(k), eprod(f, r, i, k)));
    }

  fam.V = fam.Z + fam.U;
  return fam;
}

}  // namespace atlas
