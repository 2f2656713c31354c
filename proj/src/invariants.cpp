#include "atlas/invariants.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace atlas {

// --- membership ---------------------------------------------------------------

static void require_shapes(const ParameterA& a, const ParameterB& b, const ModulusData& m) {
  if (a.rank != m.rank || b.rank != m.rank)
    throw std::domain_error("parameter rank does not match modulus rank");
}

Violation membership_Z_check(const ParameterA& a, const ParameterB& b, const ModulusData& m) {
  require_shapes(a, b, m);
  for (int i = 1; i <= m.rank; ++i)
    for (int j = i + 1; j <= m.rank; ++j)
      for (int k = j + 1; k <= m.rank; ++k) {
        Int D = gcd_of({m.pi(i), m.pi(j), m.pi(k)});
        if (!is_integer(a.as(i, j, k) * Rat(D))) {
          std::ostringstream os;
          os << "AS a not in (1/gcd(p_i,p_j,p_k))Z at (i,j,k)=(" << i << "," << j << "," << k << ")";
          return {false, os.str()};
        }
      }
  for (int i = 1; i <= m.rank; ++i)
    for (int j = 1; j <= m.rank; ++j) {
      if (!is_integer(b(i, j) * Rat(m.pi(j)) - b(i, 0) * Rat(m.qi(j)))) {
        std::ostringstream os;
        os << "p_j b(i,j) - q_j b(i,0) not integral at (i,j)=(" << i << "," << j << ")";
        return {false, os.str()};
      }
    }
  return {};
}

bool membership_Z(const ParameterA& a, const ParameterB& b, const ModulusData& m) {
  return membership_Z_check(a, b, m).ok;
}

static bool in_2z(const Rat& x) { return is_integer(x / 2); }

Violation membership_B_check(const ParameterA& a, const ParameterB& b, const ModulusData& m) {
  Violation z = membership_Z_check(a, b, m);
  if (!z.ok) return z;
  for (int i = 1; i <= m.rank; ++i)
    for (int j = i + 1; j <= m.rank; ++j)
      for (int k = j + 1; k <= m.rank; ++k)
        if (!is_integer(a(i, j, k)) || !is_integer(a(j, i, k)) || !is_integer(a(k, i, j))) {
          std::ostringstream os;
          os << "a not integral at (i,j,k)=(" << i << "," << j << "," << k << ")";
          return {false, os.str()};
        }
  for (int i = 1; i <= m.rank; ++i)
    for (int k = i + 1; k <= m.rank; ++k)
      if (!in_2z(a(i, i, k)) || !in_2z(a(k, i, k))) {
        std::ostringstream os;
        os << "diagonal a not in 2Z at (i,k)=(" << i << "," << k << ")";
        return {false, os.str()};
      }
  for (int i = 1; i <= m.rank; ++i) {
    if (!is_integer(b(i, 0)) || !is_integer(b(i, i))) {
      std::ostringstream os;
      os << "b(i,0) or b(i,i) not integral at i=" << i;
      return {false, os.str()};
    }
  }
  for (int i = 1; i <= m.rank; ++i)
    for (int j = i + 1; j <= m.rank; ++j) {
      Rat s = b(i, j) / Rat(m.pi(i)) + b(j, i) / Rat(m.pi(j));
      if (!is_integer(s * Rat(lcm(m.pi(i), m.pi(j))))) {
        std::ostringstream os;
        os << "b(i,j)/p_i + b(j,i)/p_j not in (1/lcm)Z at (i,j)=(" << i << "," << j << ")";
        return {false, os.str()};
      }
    }
  return {};
}

bool membership_B(const ParameterA& a, const ParameterB& b, const ModulusData& m) {
  return membership_B_check(a, b, m).ok;
}

bool membership_B_alt(const ParameterA& a, const ParameterB& b, const ModulusData& m) {
  Violation z = membership_Z_check(a, b, m);
  if (!z.ok) return false;
  for (int i = 1; i <= m.rank; ++i)
    for (int j = i + 1; j <= m.rank; ++j)
      for (int k = j + 1; k <= m.rank; ++k)
        if (!is_integer(a(i, j, k)) || !is_integer(a(j, i, k)) || !is_integer(a(k, i, j)))
          return false;
  for (int i = 1; i <= m.rank; ++i)
    for (int k = i + 1; k <= m.rank; ++k)
      if (!in_2z(a(i, i, k)) || !in_2z(a(k, i, k))) return false;
  for (int i = 1; i <= m.rank; ++i)
    if (!is_integer(b(i, 0)) || !is_integer(b(i, i))) return false;
  for (int i = 1; i <= m.rank; ++i)
    for (int j = i + 1; j <= m.rank; ++j) {
      Rat s = b(i, j) * Rat(m.pi(j)) + b(j, i) * Rat(m.pi(i));
      Int Dij = gcd(m.pi(i), m.pi(j));
      if (!is_integer(s / Rat(Dij))) return false;
    }
  return true;
}

// --- class coordinates ----------------------------------------------------------

static CyclicCoord cyclic(const Rat& value, const Int& mod) {
  if (!is_integer(value)) throw std::domain_error("cyclic coordinate is not an integer");
  Int v = numerator(value);
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  return {mod, r};
}

ClassAijk class_a_ijk(const ParameterA& a, int i, int j, int k, const ModulusData& m) {
  if (!(1 <= i && i < j && j < k && k <= m.rank))
    throw std::domain_error("class_a_ijk: need 1 <= i < j < k <= rank");
  Int D = gcd_of({m.pi(i), m.pi(j), m.pi(k)});
  Rat as = a.as(i, j, k);
  if (!is_integer(as * Rat(D))) throw std::domain_error("class_a_ijk: AS a not in (1/D)Z");
  ClassAijk c;
  c.D = D;
  c.cyc = cyclic(as * Rat(D), D);
  c.c1 = mod1(a(j, i, k));
  c.c2 = mod1(a(k, i, j));
  return c;
}

ClassAik class_a_ik(const ParameterA& a, int i, int k) {
  if (!(1 <= i && i < k && k <= a.rank)) throw std::domain_error("class_a_ik: need i < k");
  return {mod_n(a(i, i, k), Int(2)), mod_n(a(k, i, k), Int(2))};
}

ClassBii class_b_ii(const Rat& x, const Rat& u, int i, const ModulusData& m) {
  Rat cond = x * Rat(m.pi(i)) - u * Rat(m.qi(i));
  if (!is_integer(cond)) throw std::domain_error("class_b_ii: p_i x - q_i u is not an integer");
  ClassBii c;
  c.euc = euclid_pair(m.pi(i), m.qi(i));
  c.D = c.euc.d;
  c.cyc = cyclic(cond, c.D);
  c.circ = mod1(-Rat(c.euc.v) * x + Rat(c.euc.u) * u);
  return c;
}

BezoutIJ bezout_ij(int i, int j, const ModulusData& m) {
  if (!(1 <= i && i < j && j <= m.rank)) throw std::domain_error("bezout_ij: need i < j");
  BezoutIJ z;
  const Int &pi = m.pi(i), &pj = m.pi(j), &qi = m.qi(i), &qj = m.qi(j);
  z.D = gcd_of({pi, pj, qi, qj});
  z.Dij = gcd(pi, pj);
  z.Eij = gcd(qi, qj);
  z.r_ij = pi / z.Dij;
  z.r_ji = pj / z.Dij;
  if (z.Eij == 0) {
    z.s_ij = 0;
    z.s_ji = 0;
    z.w_ij = 0;
    z.w_ji = 0;
  } else {
    z.s_ij = qi / z.Eij;
    z.s_ji = qj / z.Eij;
    ExtGcd w = ext_gcd(qi, qj);  // q_i w_ij + q_j w_ji = E
    z.w_ij = w.s;
    z.w_ji = w.t;
  }
  z.m = z.Dij / z.D;
  z.n = z.Eij / z.D;
  if (z.Eij == 0) {
    z.x = 1;  // D = Dij here
    z.y = 0;
  } else {
    ExtGcd xy = ext_gcd(z.Dij, z.Eij);
    z.x = xy.s;
    z.y = xy.t;
  }
  return z;
}

ClassBij class_b_ij(const Rat& x, const Rat& u, const Rat& y, const Rat& v, int i, int j,
                    const ModulusData& m) {
  if (!is_integer(x * Rat(m.pi(j)) - u * Rat(m.qi(j))))
    throw std::domain_error("class_b_ij: p_j x - q_j u is not an integer");
  if (!is_integer(y * Rat(m.pi(i)) - v * Rat(m.qi(i))))
    throw std::domain_error("class_b_ij: p_i y - q_i v is not an integer");
  ClassBij c;
  c.zz = bezout_ij(i, j, m);
  const BezoutIJ& z = c.zz;
  Rat rr = x * Rat(z.r_ji) + y * Rat(z.r_ij);
  Rat ss = u * Rat(z.s_ji) + v * Rat(z.s_ij);
  c.d_circ = mod1(Rat(z.m) * rr - Rat(z.n) * ss);
  if (!is_integer(c.d_circ * Rat(z.D)))
    throw std::logic_error("class_b_ij: first coordinate escaped (1/D)Z");
  c.c1 = mod1(Rat(z.y) * rr + Rat(z.x) * ss);
  c.c2 = mod1(-u * Rat(z.w_ij) + v * Rat(z.w_ji));
  return c;
}

bool ClassCoordinates::zero() const {
  for (const auto& [k, v] : a_triples)
    if (!v.zero()) return false;
  for (const auto& [k, v] : a_pairs)
    if (!v.zero()) return false;
  for (const auto& [k, v] : b_diag)
    if (!v.zero()) return false;
  for (const auto& [k, v] : b_off)
    if (!v.zero()) return false;
  return true;
}

ClassCoordinates class_coordinates(const ParameterA& a, const ParameterB& b,
                                   const ModulusData& m) {
  Violation z = membership_Z_check(a, b, m);
  if (!z.ok) throw std::domain_error("class_coordinates: " + z.what);
  ClassCoordinates cc;
  for (int i = 1; i <= m.rank; ++i)
    for (int j = i + 1; j <= m.rank; ++j)
      for (int k = j + 1; k <= m.rank; ++k)
        cc.a_triples[{i, j, k}] = class_a_ijk(a, i, j, k, m);
  for (int i = 1; i <= m.rank; ++i)
    for (int k = i + 1; k <= m.rank; ++k) cc.a_pairs[{i, k}] = class_a_ik(a, i, k);
  for (int i = 1; i <= m.rank; ++i) cc.b_diag[i] = class_b_ii(b(i, i), b(i, 0), i, m);
  for (int i = 1; i <= m.rank; ++i)
    for (int j = i + 1; j <= m.rank; ++j)
      cc.b_off[{i, j}] = class_b_ij(b(i, j), b(i, 0), b(j, i), b(j, 0), i, j, m);
  return cc;
}

// --- fiber consistency ------------------------------------------------------------

BPatternData b_patterns(const ParameterB& b) {
  BPatternData d;
  for (int i = 1; i <= b.rank; ++i) d.diag[i] = {b(i, i), b(i, 0)};
  for (int i = 1; i <= b.rank; ++i)
    for (int j = i + 1; j <= b.rank; ++j)
      d.off[{i, j}] = {b(i, j), b(i, 0), b(j, i), b(j, 0)};
  return d;
}

bool fiber_consistency(const BPatternData& data, const ModulusData& m) {
  for (int i = 1; i <= m.rank; ++i) {
    bool have = false;
    Rat u0;
    auto check = [&](const Rat& u) {
      Rat r = mod1(u);
      if (!have) {
        u0 = r;
        have = true;
        return true;
      }
      return r == u0;
    };
    auto it = data.diag.find(i);
    if (it != data.diag.end() && !check(it->second.second)) return false;
    for (const auto& [ij, z] : data.off) {
      if (ij.first == i && !check(z[1])) return false;
      if (ij.second == i && !check(z[3])) return false;
    }
  }
  return true;
}

// --- characteristic cocycles --------------------------------------------------------

CharacteristicCocycle build_characteristic(const ParameterA& a, const ParameterB& b,
                                           const ModulusData& m) {
  Violation z = membership_Z_check(a, b, m);
  if (!z.ok) throw std::domain_error("build_characteristic: " + z.what);
  CharacteristicCocycle cc{a, b, m, PolyCochain(), PolyCochain(), PolyCochain()};
  FamilyXYZUV fam = family_xyzuv(a);
  FamilyXYZUV hat = family_xyzuv(as_full(a));
  cc.eta_part = fam.Y;
  cc.lambda_a_part = fam.Y + hat.X;
  cc.v_part = fam.V;
  return cc;
}

Rat CharacteristicCocycle::lambda_exp(const HmElement& g, const HmElement& h) const {
  if (!hm_in_L(g, m)) throw std::domain_error("lambda: first argument must lie in L");
  Rat total = evaluate(lambda_a_part, {coords_of(g, m), coords_of(h, m)});
  ElementCoords hc = coords_of(h, m);
  for (int i = 1; i <= m.rank; ++i) {
    Rat ein = frac(g.g[i], m.pi(i));
    if (ein == 0) continue;
    for (int j = 0; j <= m.rank; ++j) {
      Rat bij = b(i, j);
      if (bij == 0) continue;
      total += bij * ein * Rat(hc.ab[j]);
    }
  }
  total.canonicalize();
  return total;
}

Rat CharacteristicCocycle::lambda(const HmElement& g, const HmElement& h) const {
  return mod1(lambda_exp(g, h));
}

Rat CharacteristicCocycle::mu_exp(const HmElement& g, const HmElement& h) const {
  if (!hm_in_L(g, m) || !hm_in_L(h, m))
    throw std::domain_error("mu: both arguments must lie in L");
  return evaluate(v_part, {coords_of(g, m), coords_of(h, m)});
}

Rat CharacteristicCocycle::mu(const HmElement& g, const HmElement& h) const {
  return mod1(mu_exp(g, h));
}

Rat CharacteristicCocycle::eta_exp(const HmElement& g, const HmElement& h) const {
  return evaluate(eta_part, {coords_of(g, m), coords_of(h, m)});
}

// --- characteristic coboundary oracle ----------------------------------------------

namespace {

using RawPoly = std::map<Monomial, Rat>;

void raw_add(RawPoly& a, const Monomial& key, const Rat& c) {
  if (c == 0) return;
  auto it = a.find(key);
  if (it == a.end())
    a.emplace(key, c);
  else {
    it->second += c;
    if (it->second == 0) a.erase(it);
  }
}

void raw_acc(RawPoly& a, const RawPoly& b, const Rat& scale) {
  for (const auto& [k, v] : b) raw_add(a, k, v * scale);
}

RawPoly raw_mul(const RawPoly& a, const RawPoly& b) {
  RawPoly r;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      Monomial key(ka.size());
      for (size_t s = 0; s < ka.size(); ++s) key[s] = slot_mul(ka[s], kb[s]);
      raw_add(r, key, va * vb);
    }
  return r;
}

RawPoly raw_const(const Rat& c) {
  RawPoly r;
  raw_add(r, Monomial(2), c);
  return r;
}

RawPoly raw_var(int slot, int var) {
  Monomial key(2);
  key[slot] = {{var, 1}};
  RawPoly r;
  r.emplace(key, Rat(1));
  return r;
}

// images of the H_m coordinate functionals for an element placed at `slot`
struct ElementImage {
  std::map<int, RawPoly> img;
  const RawPoly& of(int var) const {
    auto it = img.find(var);
    if (it == img.end()) throw std::logic_error("missing coordinate image");
    return it->second;
  }
};

ElementImage identity_image(int slot, const ModulusData& m) {
  ElementImage e;
  for (int i = 0; i <= m.rank; ++i) e.img[var_abelian(i)] = raw_var(slot, var_abelian(i));
  for (int j = 1; j <= m.rank; ++j)
    for (int k = j + 1; k <= m.rank; ++k)
      e.img[var_central(j, k)] = raw_var(slot, var_central(j, k));
  return e;
}

// g in L with free integer coordinates t_i = e_{i,N}(g): tilde-e_i = p_i t_i,
// tilde-e_0 = -sum q_i t_i, central free
ElementImage L_image(int slot, const ModulusData& m) {
  ElementImage e;
  RawPoly e0;
  for (int i = 1; i <= m.rank; ++i) {
    RawPoly t = raw_var(slot, var_abelian(i));
    RawPoly pt;
    raw_acc(pt, t, Rat(m.pi(i)));
    e.img[var_abelian(i)] = pt;
    raw_acc(e0, t, Rat(-m.qi(i)));
  }
  e.img[var_abelian(0)] = e0;
  for (int j = 1; j <= m.rank; ++j)
    for (int k = j + 1; k <= m.rank; ++k)
      e.img[var_central(j, k)] = raw_var(slot, var_central(j, k));
  return e;
}

// h^-1 g h = (g ^ h) g with g in L at slot 0 and h at slot 1
ElementImage conjugate_image(const ModulusData& m) {
  ElementImage e = L_image(0, m);
  for (int j = 1; j <= m.rank; ++j)
    for (int k = j + 1; k <= m.rank; ++k) {
      RawPoly c = raw_var(0, var_central(j, k));
      // + e_j(g) e_k(h) - e_j(h) e_k(g)
      raw_acc(c, raw_mul(raw_var(0, var_abelian(j)), raw_var(1, var_abelian(k))), Rat(m.pi(j)));
      raw_acc(c, raw_mul(raw_var(1, var_abelian(j)), raw_var(0, var_abelian(k))), Rat(-m.pi(k)));
      e.img[var_central(j, k)] = c;
    }
  return e;
}

// g1 g2 with both in L (slots 0, 1)
ElementImage product_image(const ModulusData& m) {
  ElementImage e;
  RawPoly e0;
  for (int i = 1; i <= m.rank; ++i) {
    RawPoly sum = raw_var(0, var_abelian(i));
    raw_acc(sum, raw_var(1, var_abelian(i)), Rat(1));
    RawPoly pt;
    raw_acc(pt, sum, Rat(m.pi(i)));
    e.img[var_abelian(i)] = pt;
    raw_acc(e0, sum, Rat(-m.qi(i)));
  }
  e.img[var_abelian(0)] = e0;
  for (int j = 1; j <= m.rank; ++j)
    for (int k = j + 1; k <= m.rank; ++k) {
      RawPoly c = raw_var(0, var_central(j, k));
      raw_acc(c, raw_var(1, var_central(j, k)), Rat(1));
      raw_acc(c, raw_mul(raw_var(0, var_abelian(j)), raw_var(1, var_abelian(k))),
              Rat(m.pi(j) * m.pi(k)));
      e.img[var_central(j, k)] = c;
    }
  return e;
}

RawPoly subst_slot(const SlotMonomial& s, const ElementImage& img) {
  RawPoly acc = raw_const(Rat(1));
  for (const auto& [v, e] : s)
    for (int t = 0; t < e; ++t) acc = raw_mul(acc, img.of(v));
  return acc;
}

RawPoly subst2(const PolyCochain& c, const ElementImage& i0, const ElementImage& i1) {
  RawPoly out;
  for (const auto& [m2, coeff] : c.terms) {
    RawPoly prod = raw_mul(subst_slot(m2[0], i0), subst_slot(m2[1], i1));
    raw_acc(out, prod, coeff);
  }
  return out;
}

// tag a 2-slot polynomial into the combined system key space
RawPoly tag_block(const RawPoly& p, int block) {
  RawPoly out;
  for (const auto& [k, v] : p) {
    Monomial key(3);
    key[0] = {{block, 1}};
    key[1] = k[0];
    key[2] = k[1];
    out.emplace(key, v);
  }
  return out;
}

struct CharacteristicSystem {
  std::vector<Monomial> fbasis;
  GenericModZ sys;
};

std::map<std::string, CharacteristicSystem> g_char_cache;
std::mutex g_char_mutex;

std::string modulus_key(const ModulusData& m) {
  std::ostringstream os;
  os << m.rank;
  for (int i = 1; i <= m.rank; ++i) os << "|" << m.pi(i) << "," << m.qi(i);
  return os.str();
}

const CharacteristicSystem& characteristic_system(const ModulusData& m) {
  std::lock_guard<std::mutex> lock(g_char_mutex);
  std::string key = modulus_key(m);
  auto it = g_char_cache.find(key);
  if (it != g_char_cache.end()) return it->second;

  CharacteristicSystem cs;
  // f lives on L, where tilde-e_0 is determined by the N-part; monomials in
  // tilde-e_i (i >= 1) and the central coordinates already span everything
  for (const auto& s : slot_monomials(Flavor::H, m.rank, 3)) cs.fbasis.push_back({s});

  ElementImage gL = L_image(0, m);
  ElementImage conj = conjugate_image(m);
  ElementImage g2L = L_image(1, m);
  ElementImage prod = product_image(m);

  std::vector<RawPoly> cols;
  for (const auto& fm : cs.fbasis) {
    // block 1: f(h^-1 g h) - f(g),  g in L, h in H_m
    RawPoly b1 = subst_slot(fm[0], conj);
    raw_acc(b1, subst_slot(fm[0], gL), Rat(-1));
    // block 2: f(g1) + f(g2) - f(g1 g2), g1, g2 in L
    RawPoly b2 = subst_slot(fm[0], L_image(0, m));
    raw_acc(b2, subst_slot(fm[0], g2L), Rat(1));
    raw_acc(b2, subst_slot(fm[0], prod), Rat(-1));
    RawPoly col = tag_block(b1, 1);
    for (auto& [k, v] : tag_block(b2, 2)) raw_add(col, k, v);
    cols.push_back(std::move(col));
  }
  cs.sys = prepare_modz(cols);
  auto [pos, inserted] = g_char_cache.emplace(key, std::move(cs));
  return pos->second;
}

RawPoly characteristic_rhs(const CharacteristicCocycle& cc) {
  const ModulusData& m = cc.m;
  ElementImage gL = L_image(0, m);
  ElementImage hFree = identity_image(1, m);
  ElementImage g2L = L_image(1, m);

  RawPoly lam = subst2(cc.lambda_a_part, gL, hFree);
  for (int i = 1; i <= m.rank; ++i)
    for (int j = 0; j <= m.rank; ++j) {
      Rat bij = cc.b(i, j);
      if (bij == 0) continue;
      // e_{i,N}(g) tilde-e_j(h) = t_i * var_j(h)
      raw_acc(lam, raw_mul(raw_var(0, var_abelian(i)), raw_var(1, var_abelian(j))), bij);
    }
  RawPoly mu = subst2(cc.v_part, gL, g2L);

  RawPoly rhs = tag_block(lam, 1);
  for (auto& [k, v] : tag_block(mu, 2)) raw_add(rhs, k, v);
  return rhs;
}

}  // namespace

bool characteristic_is_coboundary(const ParameterA& a, const ParameterB& b,
                                  const ModulusData& m) {
  CharacteristicCocycle cc = build_characteristic(a, b, m);
  const CharacteristicSystem& cs = characteristic_system(m);
  return modz_solvable(cs.sys, characteristic_rhs(cc));
}

std::optional<PolyCochain> characteristic_witness(const ParameterA& a, const ParameterB& b,
                                                  const ModulusData& m) {
  CharacteristicCocycle cc = build_characteristic(a, b, m);
  const CharacteristicSystem& cs = characteristic_system(m);
  auto y = modz_solve(cs.sys, characteristic_rhs(cc));
  if (!y) return std::nullopt;
  PolyCochain f(Flavor::Hm, m.rank, 1);
  for (size_t j = 0; j < cs.fbasis.size(); ++j)
    if ((*y)[j] != 0) f.add_term(cs.fbasis[j], (*y)[j]);
  return f;
}

bool verify_characteristic_witness(const CharacteristicCocycle& cc, const PolyCochain& f,
                                   int samples, std::uint64_t seed) {
  const ModulusData& m = cc.m;
  Rng rng(seed);
  auto rand_L = [&]() {
    HeisenbergElement h{{}, GroupElement(m.rank)};
    for (int i = 1; i <= m.rank; ++i) h.g[i] = m.pi(i) * Int(rng.range(-2, 2));
    for (int j = 1; j <= m.rank; ++j)
      for (int k = j + 1; k <= m.rank; ++k) {
        Int v(rng.range(-2, 2));
        if (v != 0) h.c[{j, k}] = v;
      }
    return embed_L(h, m);
  };
  auto rand_Hm = [&]() {
    HeisenbergElement h{{}, GroupElement(m.rank)};
    for (int i = 1; i <= m.rank; ++i) h.g[i] = Int(rng.range(-2, 2));
    for (int j = 1; j <= m.rank; ++j)
      for (int k = j + 1; k <= m.rank; ++k) {
        Int v(rng.range(-2, 2));
        if (v != 0) h.c[{j, k}] = v;
      }
    HmElement x = section_hm(h, m);
    x.s += Rat(Int(rng.range(-2, 2)));
    return x;
  };
  auto feval = [&](const HmElement& x) { return evaluate(f, {coords_of(x, m)}); };
  for (int t = 0; t < samples; ++t) {
    HmElement g = rand_L(), g2 = rand_L();
    HmElement h = rand_Hm();
    // del_1 f = lambda on L x H_m
    Rat d1 = feval(hm_conjugate(g, h)) - feval(g);
    if (mod1(d1 - cc.lambda_exp(g, h)) != 0) return false;
    // del_2 f = mu on L x L
    Rat d2 = feval(g) + feval(g2) - feval(hm_mul(g, g2));
    if (mod1(d2 - cc.mu_exp(g, g2)) != 0) return false;
  }
  return true;
}

// --- rank-1 and rank-2 records -----------------------------------------------

SingleAutoInvariants single_automorphism_invariants(const Int& p1, const Int& q1) {
  if (p1 < 1 || q1 < 0 || q1 >= p1)
    throw std::domain_error("single_automorphism_invariants: need p1 >= 1, 0 <= q1 < p1");
  SingleAutoInvariants r;
  r.p1 = p1;
  r.q1 = q1;
  EuclidPair e = euclid_pair(p1, q1);
  r.D1 = e.d;
  r.u1 = e.u;
  r.v1 = e.v;
  r.r1 = p1 / e.d;
  r.s1 = q1 / e.d;
  r.w0 = {e.u, -e.v};
  r.w1 = {-r.s1, r.r1};
  r.z0_in_w = {r.r1, r.v1};
  r.z1_in_w = {r.s1, r.u1};
  return r;
}

Int outer_period(const Rat& x, const Rat& y, const Int& p1, const Int& q1) {
  SingleAutoInvariants inv = single_automorphism_invariants(p1, q1);
  if (!is_integer(y * Rat(inv.D1)))
    throw std::domain_error("outer_period: y must lie in (1/D1)Z");
  Rat t = mod1(x * Rat(inv.r1) + y * Rat(inv.v1));  // chi(z_0) = exp(2 pi i t)
  Int so = denominator(t);
  return p1 * so;
}

PairInvariants pair_invariants(const ModulusData& m, const ParameterB& b) {
  if (m.rank != 2) throw std::domain_error("pair_invariants: rank 2 only");
  Violation z = membership_Z_check(zero_a(2), b, m);
  if (!z.ok) throw std::domain_error("pair_invariants: " + z.what);
  PairInvariants r{class_b_ii(b(1, 1), b(1, 0), 1, m), class_b_ii(b(2, 2), b(2, 0), 2, m),
                   class_b_ij(b(1, 2), b(1, 0), b(2, 1), b(2, 0), 1, 2, m),
                   {mod1(b(1, 0)), mod1(b(2, 0))}};
  return r;
}

}  // namespace atlas
