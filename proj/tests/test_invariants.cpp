#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atlas/invariants.hpp"

using namespace atlas;

namespace {

// random Z-member parameters at the given modulus
ParameterA rand_a_member(Rng& rng, const ModulusData& m, int max_den = 4,
                         bool with_diagonal = true) {
  ParameterA a(m.rank);
  auto rat = [&](long den) -> Rat {
    Rat v(rng.range(-2 * den, 2 * den), den);
    v.canonicalize();
    return v;
  };
  for (int i = 1; i <= m.rank; ++i)
    for (int j = i + 1; j <= m.rank; ++j)
      for (int k = j + 1; k <= m.rank; ++k) {
        Rat ajik = rat(rng.range(1, max_den));
        Rat akij = rat(rng.range(1, max_den));
        Int D = gcd_of({m.pi(i), m.pi(j), m.pi(k)});
        Rat as_target(rng.range(-3, 3), D);
        as_target.canonicalize();
        a.set(j, i, k, ajik);
        a.set(k, i, j, akij);
        a.set(i, j, k, as_target + ajik - akij);
      }
  if (with_diagonal)
    for (int i = 1; i <= m.rank; ++i)
      for (int k = i + 1; k <= m.rank; ++k) {
        a.set(i, i, k, rat(rng.range(1, max_den)));
        a.set(k, i, k, rat(rng.range(1, max_den)));
      }
  return a;
}

ParameterB rand_b_member(Rng& rng, const ModulusData& m, int max_den = 4) {
  ParameterB b(m.rank);
  for (int i = 1; i <= m.rank; ++i) {
    Rat bi0(rng.range(-2 * max_den, 2 * max_den), max_den);
    bi0.canonicalize();
    b.set(i, 0, bi0);
    for (int j = 1; j <= m.rank; ++j) {
      Rat bij = (bi0 * Rat(m.qi(j)) + Rat(rng.range(-2, 2))) / Rat(m.pi(j));
      bij.canonicalize();
      b.set(i, j, bij);
    }
  }
  return b;
}

HmElement rand_L(Rng& rng, const ModulusData& m) {
  const int r = m.rank;
  HeisenbergElement h{{}, GroupElement(r)};
  for (int i = 1; i <= r; ++i) h.g[i] = m.pi(i) * Int(rng.range(-2, 2));
  for (int j = 1; j <= r; ++j)
    for (int k = j + 1; k <= r; ++k) {
      Int v(rng.range(-2, 2));
      if (v != 0) h.c[{j, k}] = v;
    }
  return embed_L(h, m);
}

HmElement rand_Hm(Rng& rng, const ModulusData& m) {
  const int r = m.rank;
  HeisenbergElement h{{}, GroupElement(r)};
  for (int i = 1; i <= r; ++i) h.g[i] = Int(rng.range(-2, 2));
  for (int j = 1; j <= r; ++j)
    for (int k = j + 1; k <= r; ++k) {
      Int v(rng.range(-2, 2));
      if (v != 0) h.c[{j, k}] = v;
    }
  HmElement x = section_hm(h, m);
  x.s += Rat(Int(rng.range(-2, 2)));
  return x;
}

HmElement central_elem(Rng& rng, const ModulusData& m) {
  HeisenbergElement h{{}, GroupElement(m.rank)};
  for (int j = 1; j <= m.rank; ++j)
    for (int k = j + 1; k <= m.rank; ++k) {
      Int v(rng.range(-2, 2));
      if (v != 0) h.c[{j, k}] = v;
    }
  return section_hm(h, m);
}

}  // namespace

TEST_CASE("membership") {
  ModulusData m(3, {Int(2), Int(2), Int(2)}, {Int(0), Int(0), Int(0)});
  CHECK(membership_Z(zero_a(3), zero_b(3), m));
  CHECK(membership_B(zero_a(3), zero_b(3), m));

  ParameterA a(3);
  a.set(1, 2, 3, Rat(1, 2));
  CHECK(membership_Z(a, zero_b(3), m));
  CHECK(!membership_B(a, zero_b(3), m));
  CHECK(!membership_B_alt(a, zero_b(3), m));

  ModulusData m2(2, {Int(2), Int(4)}, {Int(0), Int(2)});
  ParameterB b(2);
  b.set(1, 2, Rat(1, 4));
  b.set(1, 0, Rat(1, 2));
  CHECK(membership_Z(zero_a(2), b, m2));
  CHECK(!membership_B(zero_a(2), b, m2));

  ParameterB bad(2);
  bad.set(1, 2, Rat(1, 3));
  auto v = membership_Z_check(zero_a(2), bad, m2);
  CHECK(!v.ok);
  CHECK(v.what == "p_j b(i,j) - q_j b(i,0) not integral at (i,j)=(1,2)");
}

TEST_CASE("the two B_b lattice formulations agree") {
  Rng rng(3);
  std::vector<ModulusData> mods = {
      ModulusData(2, {Int(2), Int(4)}, {Int(0), Int(2)}),
      ModulusData(2, {Int(3), Int(3)}, {Int(1), Int(2)}),
      ModulusData(2, {Int(4), Int(4)}, {Int(2), Int(2)}),
  };
  for (const auto& m : mods)
    for (int t = 0; t < 300; ++t) {
      ParameterB b = rand_b_member(rng, m);
      CHECK(membership_B(zero_a(2), b, m) == membership_B_alt(zero_a(2), b, m));
    }
}

TEST_CASE("class_a coordinates") {
  ModulusData m(3, {Int(2), Int(2), Int(2)}, {Int(0), Int(0), Int(0)});
  ParameterA ai(3);
  ai.set(1, 2, 3, Rat(4));
  ai.set(2, 1, 3, Rat(-1));
  ai.set(3, 1, 2, Rat(2));
  auto c = class_a_ijk(ai, 1, 2, 3, m);
  CHECK(c.cyc.value == 0);
  CHECK(c.c1 == 0);
  CHECK(c.c2 == 0);

  ParameterA ah(3);
  ah.set(1, 2, 3, Rat(1, 2));
  auto ch = class_a_ijk(ah, 1, 2, 3, m);
  CHECK(ch.D == 2);
  CHECK(ch.cyc.value == 1);
  CHECK(ch.c1 == 0);
  CHECK(ch.c2 == 0);

  ParameterA ax(3);
  ax.set(2, 1, 3, Rat(1, 2));
  auto cx = class_a_ijk(ax, 1, 2, 3, m);
  CHECK(cx.cyc.value == 1);  // AS = -1/2, D*AS = -1 = 1 mod 2
  CHECK(cx.c1 == Rat(1, 2));
  CHECK(cx.c2 == 0);

  ParameterA ad(3);
  ad.set(1, 1, 2, Rat(2));
  auto cd = class_a_ik(ad, 1, 2);
  CHECK(cd.first == 0);
  ad.set(1, 1, 2, Rat(1));
  CHECK(class_a_ik(ad, 1, 2).first == Rat(1));
  ParameterA ae(3);
  ae.set(2, 1, 2, Rat(3, 2));
  auto ce = class_a_ik(ae, 1, 2);
  CHECK(ce.first == 0);
  CHECK(ce.second == Rat(3, 2));
}

TEST_CASE("class_b_ii") {
  ModulusData m(1, {Int(4)}, {Int(2)});
  auto c1 = class_b_ii(Rat(1), Rat(1), 1, m);
  CHECK(c1.D == 2);
  CHECK(c1.cyc.value == 0);
  CHECK(c1.circ == 0);

  auto c2 = class_b_ii(Rat(1, 2), Rat(0), 1, m);
  CHECK(c2.cyc.value == 0);
  CHECK(c2.circ == Rat(1, 2));

  auto c3 = class_b_ii(Rat(1, 4), Rat(1, 2), 1, m);
  CHECK(c3.cyc.value == 0);
  CHECK(c3.circ == Rat(1, 4));

  CHECK_THROWS_AS(class_b_ii(Rat(1, 3), Rat(0), 1, m), std::domain_error);
}

TEST_CASE("bezout data for index pairs") {
  ModulusData m(2, {Int(2), Int(4)}, {Int(0), Int(2)});
  auto z = bezout_ij(1, 2, m);
  CHECK(z.D == 2);
  CHECK(z.Dij == 2);
  CHECK(z.Eij == 2);
  CHECK(z.r_ij == 1);
  CHECK(z.r_ji == 2);
  CHECK(z.s_ij == 0);
  CHECK(z.s_ji == 1);
  CHECK(z.w_ij == 0);
  CHECK(z.w_ji == 1);
  CHECK(z.m == 1);
  CHECK(z.n == 1);
  CHECK(z.x * z.Dij + z.y * z.Eij == z.D);

  // fully degenerate: q = (0,0)
  ModulusData m0(2, {Int(2), Int(4)}, {Int(0), Int(0)});
  auto z0 = bezout_ij(1, 2, m0);
  CHECK(z0.Eij == 0);
  CHECK(z0.w_ij == 0);
  CHECK(z0.w_ji == 0);
  CHECK(z0.x == 1);
  CHECK(z0.y == 0);
  CHECK(z0.D == 2);
}

TEST_CASE("class_b_ij coboundaries vanish") {
  ModulusData m(2, {Int(2), Int(4)}, {Int(0), Int(2)});
  // all-integer z with p_2 x + p_1 y in D_{12} Z, u, v integers
  auto c = class_b_ij(Rat(1), Rat(3), Rat(-2), Rat(1), 1, 2, m);
  CHECK(c.zero());
  // a nonzero class
  auto c2 = class_b_ij(Rat(1, 4), Rat(1, 2), Rat(0), Rat(0), 1, 2, m);
  CHECK(!c2.zero());
}

TEST_CASE("classification: class = 0 iff B-member iff characteristic coboundary") {
  Rng rng(41);
  std::vector<ModulusData> mods = {
      ModulusData(1, {Int(4)}, {Int(2)}),
      ModulusData(2, {Int(2), Int(2)}, {Int(0), Int(1)}),
      ModulusData(2, {Int(2), Int(4)}, {Int(0), Int(2)}),
  };
  for (const auto& m : mods) {
    int zeros = 0;
    for (int t = 0; t < 40; ++t) {
      ParameterB b;
      if (t % 5 == 0) {
        // seed exact coboundaries: integer b supported on (i,0)
        b = zero_b(m.rank);
        for (int i = 1; i <= m.rank; ++i) b.set(i, 0, Rat(rng.range(-2, 2)));
      } else {
        b = rand_b_member(rng, m, 2);
      }
      ParameterA a = zero_a(m.rank);
      bool isB = membership_B(a, b, m);
      bool zero_class = class_coordinates(a, b, m).zero();
      bool oracle = characteristic_is_coboundary(a, b, m);
      CHECK(isB == zero_class);
      CHECK(isB == oracle);
      if (isB) ++zeros;
    }
    CHECK(zeros > 0);
  }
  // a-sector, triple patterns at p = (2,2,2): full equivalence
  ModulusData m3(3, {Int(2), Int(2), Int(2)}, {Int(0), Int(0), Int(0)});
  for (int t = 0; t < 8; ++t) {
    ParameterA a = rand_a_member(rng, m3, 2, /*with_diagonal=*/false);
    bool isB = membership_B(a, zero_b(3), m3);
    bool oracle = characteristic_is_coboundary(a, zero_b(3), m3);
    CHECK(isB == oracle);
    CHECK(isB == class_coordinates(a, zero_b(3), m3).zero());
  }
  // With diagonal patterns, B-membership still implies a (verified) witness,
  // and the formal class-zero test coincides with B-membership; the converse
  // of the oracle fails on the diagonal sector (see the known-gap case below).
  ModulusData modd(3, {Int(3), Int(1), Int(3)}, {Int(2), Int(0), Int(1)});
  for (int t = 0; t < 8; ++t) {
    ParameterA a = rand_a_member(rng, modd, 2);
    bool isB = membership_B(a, zero_b(3), modd);
    CHECK(isB == class_coordinates(a, zero_b(3), modd).zero());
    if (isB) CHECK(characteristic_is_coboundary(a, zero_b(3), modd));
  }
  // explicit nontrivial a-class is not a coboundary
  ParameterA ah(3);
  ah.set(1, 2, 3, Rat(1, 2));
  CHECK(!characteristic_is_coboundary(ah, zero_b(3), m3));
  // integer a is
  ParameterA ai(3);
  ai.set(1, 2, 3, Rat(1));
  CHECK(characteristic_is_coboundary(ai, zero_b(3), m3));
}

TEST_CASE("diagonal-sector gap: odd integers cobound although 2Z is demanded") {
  // At p = (2,2) the pair for a(1,1,2) = 1 is the literally trivial pair
  // (every exponent term is integral on L), and more generally the solver
  // exhibits verified witnesses for odd integer diagonal parameters. The
  // formal (R/2Z)^2 class coordinates are kept; this records the gap.
  ModulusData m(2, {Int(2), Int(2)}, {Int(0), Int(1)});
  ParameterA a(2);
  a.set(1, 1, 2, Rat(1));
  CHECK(!membership_B(a, zero_b(2), m));
  CHECK(!class_coordinates(a, zero_b(2), m).zero());
  auto f = characteristic_witness(a, zero_b(2), m);
  REQUIRE(f.has_value());
  auto cc = build_characteristic(a, zero_b(2), m);
  CHECK(verify_characteristic_witness(cc, *f, 200, 17));
  // fractional diagonal parameters still detect nontrivial classes
  ParameterA ahalf(2);
  ahalf.set(2, 1, 2, Rat(3, 2));
  CHECK(!characteristic_is_coboundary(ahalf, zero_b(2), m));
}

TEST_CASE("fiber consistency") {
  ModulusData m(2, {Int(2), Int(4)}, {Int(0), Int(2)});
  Rng rng(51);
  for (int t = 0; t < 20; ++t) {
    ParameterB b = rand_b_member(rng, m);
    CHECK(fiber_consistency(b_patterns(b), m));
  }
  // hand-assembled inconsistency
  ParameterB b = rand_b_member(rng, m);
  BPatternData d = b_patterns(b);
  d.off[{1, 2}][1] += Rat(1, 3);  // u-reading of pattern (1,2) no longer matches
  CHECK(!fiber_consistency(d, m));
}

TEST_CASE("characteristic cocycle identities") {
  Rng rng(61);
  std::vector<ModulusData> mods = {
      ModulusData(1, {Int(2)}, {Int(0)}),
      ModulusData(2, {Int(4), Int(2)}, {Int(2), Int(1)}),
      ModulusData(3, {Int(2), Int(3), Int(4)}, {Int(1), Int(0), Int(3)}),
  };
  for (const auto& m : mods) {
    for (int rep = 0; rep < 4; ++rep) {
      ParameterA a = rand_a_member(rng, m);
      ParameterB b = rand_b_member(rng, m);
      auto cc = build_characteristic(a, b, m);
      for (int t = 0; t < 25; ++t) {
        HmElement g1 = rand_L(rng, m), g2 = rand_L(rng, m);
        HmElement h = rand_Hm(rng, m), h2 = rand_Hm(rng, m);
        // (a) lambda(g1 g2; h) = lambda(g1; h) + lambda(g2; h) - lambda(g2^h; g1)
        Rat lhs_a = cc.lambda_exp(hm_mul(g1, g2), h);
        Rat rhs_a = cc.lambda_exp(g1, h) + cc.lambda_exp(g2, h) -
                    cc.lambda_exp(hm_commutator(g2, h), g1);
        CHECK(mod1(lhs_a - rhs_a) == 0);
        // (b) lambda(g; h1 h2) = lambda(g; h1) + lambda(g; h2) + lambda(g^h1; h2)
        Rat lhs_b = cc.lambda_exp(g1, hm_mul(h, h2));
        Rat rhs_b = cc.lambda_exp(g1, h) + cc.lambda_exp(g1, h2) +
                    cc.lambda_exp(hm_commutator(g1, h), h2);
        CHECK(mod1(lhs_b - rhs_b) == 0);
        // (c) lambda(g; h) = mu(h; h^-1 g h) - mu(g; h) for g, h in L
        Rat lhs_c = cc.lambda_exp(g1, g2);
        Rat rhs_c = cc.mu_exp(g2, hm_conjugate(g1, g2)) - cc.mu_exp(g1, g2);
        CHECK(mod1(lhs_c - rhs_c) == 0);
        // conjugation shortcut used throughout: h^-1 g h = (g^h) g
        CHECK(hm_conjugate(g1, h).c == hm_mul(hm_commutator(g1, h), g1).c);
        // on L x L the a-part of lambda reduces to eta plus the b-terms
        Rat bpart = cc.lambda_exp(g1, g2) - cc.eta_exp(g1, g2);
        Rat bexp = 0;
        for (int i = 1; i <= m.rank; ++i)
          for (int j = 0; j <= m.rank; ++j)
            bexp += b(i, j) * frac(g1.g[i], m.pi(i)) * Rat(coords_of(g2, m).ab[j]);
        CHECK(mod1(bpart - bexp) == 0);
        // mu via the lambda route: mu(g;h) = lambda(m_0(h); g) + U(g;h)
        HmElement m0g2 = section_hm(HeisenbergElement{g2.c, GroupElement(m.rank)}, m);
        FamilyXYZUV fam = family_xyzuv(a);
        Rat u_only = evaluate(fam.U, {coords_of(g1, m), coords_of(g2, m)});
        Rat mu_alt = cc.lambda_exp(m0g2, g1) + u_only;
        CHECK(mod1(cc.mu_exp(g1, g2) - mu_alt) == 0);
      }
      // section normalization; lambda vanishes on M x M
      for (int t = 0; t < 25; ++t) {
        HmElement mm = central_elem(rng, m), nn = central_elem(rng, m);
        HmElement h = rand_Hm(rng, m);
        CHECK(cc.lambda_exp(mm, hm_mul(nn, h)) == cc.lambda_exp(mm, h));
        CHECK(mod1(cc.lambda_exp(mm, nn)) == 0);
      }
      // mu is a 2-cocycle on L when AS a lies in (1/(p_i p_j p_k))Z
      bool strong = true;
      for (int i = 1; i <= m.rank && strong; ++i)
        for (int j = i + 1; j <= m.rank && strong; ++j)
          for (int k = j + 1; k <= m.rank && strong; ++k)
            if (!is_integer(a.as(i, j, k) * Rat(m.pi(i) * m.pi(j) * m.pi(k)))) strong = false;
      if (strong) {
        for (int t = 0; t < 10; ++t) {
          HmElement x = rand_L(rng, m), y = rand_L(rng, m), z = rand_L(rng, m);
          Rat d = cc.mu_exp(y, z) - cc.mu_exp(hm_mul(x, y), z) + cc.mu_exp(x, hm_mul(y, z)) -
                  cc.mu_exp(x, y);
          CHECK(mod1(d) == 0);
        }
      }
    }
  }
}

TEST_CASE("rank-1 automorphism record") {
  auto inv = single_automorphism_invariants(4, 2);
  CHECK(inv.D1 == 2);
  CHECK(inv.p1 * inv.u1 - inv.q1 * inv.v1 == inv.D1);
  // b_1 = D_1 w_1 in (z_0, z_1) coordinates: b_1 = -q_1 z_0 + p_1 z_1
  CHECK(inv.D1 * inv.w1[0] == -inv.q1);
  CHECK(inv.D1 * inv.w1[1] == inv.p1);
  // {w_0, w_1} is a basis: the change of basis is unimodular
  Int det = inv.w0[0] * inv.w1[1] - inv.w0[1] * inv.w1[0];
  CHECK((det == 1 || det == -1));
  // z_0 = r_1 w_0 + v_1 w_1 and z_1 = s_1 w_0 + u_1 w_1
  CHECK(inv.z0_in_w[0] * inv.w0[0] + inv.z0_in_w[1] * inv.w1[0] == 1);
  CHECK(inv.z0_in_w[0] * inv.w0[1] + inv.z0_in_w[1] * inv.w1[1] == 0);
  CHECK(inv.z1_in_w[0] * inv.w0[0] + inv.z1_in_w[1] * inv.w1[0] == 0);
  CHECK(inv.z1_in_w[0] * inv.w0[1] + inv.z1_in_w[1] * inv.w1[1] == 1);

  // degenerate q = 0: G_m = G + Z
  auto d = single_automorphism_invariants(3, 0);
  CHECK(d.D1 == 3);
  CHECK(d.w0 == std::array<Int, 2>{Int(1), Int(0)});
  CHECK(d.w1 == std::array<Int, 2>{Int(0), Int(1)});

  CHECK_THROWS_AS(single_automorphism_invariants(4, 4), std::domain_error);
}

TEST_CASE("outer period") {
  // chi(z_0) = 1: p_o = p_1
  CHECK(outer_period(Rat(0), Rat(0), 4, 2) == 4);
  CHECK(outer_period(Rat(1), Rat(1, 2), 4, 2) == 8);  // x r1 + y v1 = 5/2, order 2
  // p1=2, q1=0: r_1 = 1, v_1 = 0
  CHECK(outer_period(Rat(1, 3), Rat(0), 2, 0) == 6);
  CHECK(outer_period(Rat(2, 3), Rat(0), 2, 0) == 6);
  CHECK_THROWS_AS(outer_period(Rat(0), Rat(1, 3), 2, 0), std::domain_error);
}

TEST_CASE("rank-2 pair invariants") {
  ModulusData m(2, {Int(2), Int(4)}, {Int(0), Int(2)});
  auto zero = pair_invariants(m, zero_b(2));
  CHECK(zero.c11.zero());
  CHECK(zero.c22.zero());
  CHECK(zero.c12.zero());
  CHECK(zero.nu[0] == 0);
  CHECK(zero.nu[1] == 0);

  Rng rng(71);
  for (int t = 0; t < 20; ++t) {
    ParameterB b = rand_b_member(rng, m);
    auto pi = pair_invariants(m, b);
    auto c11 = class_b_ii(b(1, 1), b(1, 0), 1, m);
    auto c12 = class_b_ij(b(1, 2), b(1, 0), b(2, 1), b(2, 0), 1, 2, m);
    CHECK(pi.c11.cyc == c11.cyc);
    CHECK(pi.c11.circ == c11.circ);
    CHECK(pi.c12.d_circ == c12.d_circ);
    CHECK(pi.c12.c1 == c12.c1);
    CHECK(pi.c12.c2 == c12.c2);
    CHECK(pi.nu[0] == mod1(b(1, 0)));
  }
}
