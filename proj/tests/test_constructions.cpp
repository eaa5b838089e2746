#include <catch2/catch.hpp>

#include <set>

#include "fop/constructions.hpp"
#include "fop/scenario_io.hpp"

using namespace fop;

TEST_CASE("degenerate scenario H = H2 = K = G: orthogonal flag stays false") {
  GroupPtr g = elementary_abelian(2);
  FopScenario s;
  s.name = "degenerate";
  s.group = g;
  s.cocycle = trivial_cocycle(g);
  s.h = s.h2 = s.k = full_subgroup(g);
  s.chi = s.chi2 = s.chi_k = trivial_character(s.cocycle, s.h);
  s.symbols_a = {Symbol{"a"}};
  s.symbols_b = {Symbol{"b"}};
  FopResult r = build_fop(s);
  CHECK(r.a.rows() == 1);
  CHECK(r.a.cols() == 1);
  CHECK_FALSE(r.orthogonal_by_hom);
  CHECK_FALSE(r.formal_zero);
}

TEST_CASE("scenario_z2_4 pipeline") {
  FopScenario s = scenario_z2_4();
  CHECK(s.group->order() == 16);
  CHECK(s.h.order() == 4);
  CHECK(s.h2.order() == 4);
  CHECK(s.k.order() == 2);

  FopResult r = build_fop(s);

  SECTION("shapes and symbol counts match the printed matrices") {
    CHECK(r.a.rows() == 4);
    CHECK(r.a.cols() == 8);
    CHECK(r.b.rows() == 4);
    CHECK(r.b.cols() == 8);
    CHECK(symbols_of(r.a).size() == 2);
    CHECK(symbols_of(r.b).size() == 2);
  }

  SECTION("full support, 16 cells per symbol") {
    std::map<Symbol, int> count;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 8; ++j) {
        auto ss = r.a.at(i, j).as_signed_symbol();
        REQUIRE(ss.has_value());
        ++count[ss->first];
      }
    for (const auto& [sym, c] : count) CHECK(c == 16);
  }

  SECTION("orthogonality") {
    CHECK(r.orthogonal_by_hom);
    CHECK(r.formal_zero);
    CHECK(r.census[2].orientable == 0);
    CHECK(r.transfer_ran);
    CHECK(r.transfer_ok);
  }

  SECTION("slow check: monomial equivalence against the printed factors") {
    FormalMatrix printed_a = read_formal_matrix(
        "4 8\n"
        "b a b -a a b -a -b\n"
        "b a -b -a -a b a b\n"
        "a b a -b b a -b -a\n"
        "a b -a -b -b a b a\n");
    FormalMatrix printed_b = read_formal_matrix(
        "4 8\n"
        "c d d d c -c c d\n"
        "-c -d d -d c c c d\n"
        "-d -c c -c d d d c\n"
        "-d -c -c -c -d d -d -c\n");

    // the pipeline's A reproduces the printed A up to row/column signed
    // permutations and symbol renaming
    CHECK(monomially_equivalent(r.a, printed_a));

    // the two printed factors are equivalent to each other as abstract
    // matrices, and the pipeline's B (built from the coboundary-valid chi')
    // lies in a different class; entry-level agreement is convention-bound,
    // which is why fixture comparison is invariant-based
    CHECK(monomially_equivalent(printed_a, printed_b));
    CHECK_FALSE(monomially_equivalent(r.b, printed_b));
    CHECK_FALSE(monomially_equivalent(r.b, r.a));
  }

  SECTION("monomial equivalence search is sound") {
    FormalMatrix t(4, 8);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 8; ++j) {
        auto ss = r.a.at(3 - i, (j + 2) % 8).as_signed_symbol();
        REQUIRE(ss.has_value());
        int sign = (i % 2 ? -1 : 1) * (j % 3 ? -1 : 1) * ss->second;
        t.at(i, j) = FreePoly::symbol(ss->first.name == "a" ? Symbol{"q"} : Symbol{"p"}, sign);
      }
    CHECK(monomially_equivalent(t, r.a));
    FormalMatrix broken = r.a;
    broken.at(0, 0) = FreePoly();
    CHECK_FALSE(monomially_equivalent(broken, r.a));
  }
}

TEST_CASE("lemma41_check") {
  SECTION("all-zero profiles fail both conditions") {
    CirculantProfile z(4, std::vector<std::int8_t>(4, 0));
    Lemma41Verdict v = lemma41_check(z, z, z);
    CHECK_FALSE(v.orthogonal_ok);
    CHECK_FALSE(v.a_quasi_ok);
  }

  SECTION("the bundled profile triple passes for n = 6") {
    auto p = wreath_profiles(6);
    Lemma41Verdict v = lemma41_check(p[0], p[1], p[2]);
    CHECK(v.orthogonal_ok);
    CHECK(v.a_quasi_ok);
  }

  SECTION("single +1/-1 profile, n = 4: verdicts match direct circulant products") {
    CirculantProfile rho(4, {1, 0, -1, 0});
    Lemma41Verdict v = lemma41_check(rho, rho, rho);
    // direct oracle
    IntMatrix c = circulant(rho);
    IntMatrix abs(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) abs.at(i, j) = c.at(i, j) < 0 ? -c.at(i, j) : c.at(i, j);
    IntMatrix lhs = c * c.transpose();
    IntMatrix rhs = abs * abs.transpose();
    bool ortho = true, quasi = true;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (!(lhs.at(i, j) < rhs.at(i, j))) ortho = false;
        if (i != j && !(lhs.at(i, j) < rhs.at(i, j))) quasi = false;
      }
    CHECK(v.orthogonal_ok == ortho);
    CHECK(v.a_quasi_ok == quasi);
  }

  SECTION("length mismatch is an error") {
    CirculantProfile a(4, {1, 0, -1, 0}), b(5, {1, 0, -1, 0, 0});
    CHECK_THROWS_AS(lemma41_check(a, a, b), input_error);
  }
}

TEST_CASE("scenario_wreath shapes for n = 6") {
  FopScenario s = scenario_wreath(6);
  CHECK(s.group->order() == 384);
  CHECK(s.h.order() == 64);   // all of V
  CHECK(s.h2.order() == 64);  // all of V
  CHECK(s.k.order() == 8);    // 2^(n-3)

  FopResult r = build_fop(s);
  CHECK(r.a.rows() == 6);
  CHECK(r.a.cols() == 48);
  CHECK(symbols_of(r.a).size() == 3);
  CHECK(symbols_of(r.b).size() == 2);
  CHECK(r.orthogonal_by_hom);
  CHECK(r.formal_zero);

  SECTION("every orientable orbit has row weight 8") {
    for (const HomBasis* b : {&r.basis_a, &r.basis_b})
      for (const auto& o : b->orbits)
        if (o.orientable)
          for (int row = 0; row < 6; ++row) CHECK(o.row_weight(row) == 8);
  }

  SECTION("diagonal masses 24 and 16") {
    auto pa = diagonal_profile(mul_transpose(r.a, r.a));
    auto pb = diagonal_profile(mul_transpose(r.b, r.b));
    REQUIRE(pa.has_value());
    REQUIRE(pb.has_value());
    CHECK(pa->mass() == 24);
    CHECK(pb->mass() == 16);
  }

  SECTION("scenario_wreath rejects n < 4") { CHECK_THROWS_AS(scenario_wreath(3), input_error); }
}

TEST_CASE("partial_weighing n = 5") {
  PartialWeighingResult r = partial_weighing_detailed(5);
  CHECK(r.p.rows() == 20);
  CHECK(r.p.cols() == 40);
  for (int i = 0; i < r.p.rows(); ++i) CHECK(r.p.row_support(i) == 32);
  CHECK(is_scalar_identity(gram(r.p), 32));
}

TEST_CASE("partial_weighing n = 6") {
  IntMatrix p = partial_weighing(6);
  CHECK(p.rows() == 24);
  CHECK(p.cols() == 48);
  CHECK(is_scalar_identity(gram(p), 32));
}

TEST_CASE("partial_weighing: every choice of zeroed symbol works for n = 5") {
  // all five orbits have row weight 8, so zeroing any one leaves 32
  for (int z = 0; z < 5; ++z) {
    PartialWeighingResult r = partial_weighing_detailed(5, z);
    CHECK(r.row_weight_ok);
    CHECK(r.gram_ok);
  }
}

TEST_CASE("amicable: 1-dim trivial case") {
  GroupPtr g = elementary_abelian(1);
  AmicableScenario s;
  s.name = "tiny";
  s.group = g;
  s.cocycle = trivial_cocycle(g);
  s.h = full_subgroup(g);
  s.h2 = full_subgroup(g);
  s.chi = trivial_character(s.cocycle, s.h);
  s.chi2 = s.chi;
  s.symbols_a = {Symbol{"a"}};
  s.symbols_b = {Symbol{"b"}};
  AmicableResult r = build_amicable(s);
  CHECK(r.a.rows() == 1);
  CHECK(r.symmetric);
}

TEST_CASE("scenario_dihedral_amicable(6) matches the printed shape") {
  AmicableScenario s = scenario_dihedral_amicable(6);
  CHECK(s.group->order() == 12);
  CHECK(s.h.order() == 2);
  CHECK(s.h2.order() == 2);

  AmicableResult r = build_amicable(s);
  CHECK(r.a.rows() == 6);
  CHECK(r.a.cols() == 6);
  CHECK(symbols_of(r.a).size() == 3);
  CHECK(symbols_of(r.b).size() == 3);
  CHECK(r.symmetric);
  CHECK(r.transfer_ran);
  CHECK(r.transfer_ok);

  SECTION("A and B assemble the same basis with renamed symbols") {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        auto sa = r.a.at(i, j).as_signed_symbol();
        auto sb = r.b.at(i, j).as_signed_symbol();
        REQUIRE(sa.has_value());
        REQUIRE(sb.has_value());
        CHECK(sa->second == sb->second);
      }
  }
}

TEST_CASE("dihedral amicable variants") {
  SECTION("n = 8 and n = 10 pass with 4 and 5 symbols") {
    for (int n : {8, 10}) {
      AmicableResult r = build_amicable(scenario_dihedral_amicable(n));
      CHECK(r.a.rows() == n);
      CHECK(static_cast<int>(symbols_of(r.a).size()) == n / 2);
      CHECK(r.symmetric);
    }
  }

  SECTION("n = 2 is degenerate but runs (report only)") {
    AmicableResult r = build_amicable(scenario_dihedral_amicable(2));
    CHECK(r.a.rows() == 2);
    CHECK(r.symmetric);
  }

  SECTION("trivial chi2 variant still yields a symmetric product") {
    AmicableScenario s = scenario_dihedral_amicable(6);
    s.chi2 = trivial_character(s.cocycle, s.h2);
    AmicableResult r = build_amicable(s);
    CHECK(r.symmetric);
    // census must agree with the rational oracle
    InducedRep va = induce(s.group, s.cocycle, s.h, s.chi);
    InducedRep vb = induce(s.group, s.cocycle, s.h2, s.chi2);
    CHECK(r.basis.orientable_count() == hom_dim_oracle(va, vb));
  }

  SECTION("odd n is rejected") { CHECK_THROWS_AS(scenario_dihedral_amicable(5), input_error); }
}

TEST_CASE("build_amicable rejects asymmetric-orbit setups") {
  // Z/3 regular action: orbits on X x X are classified by the difference,
  // and the orbit of difference 1 does not contain difference 2.
  GroupPtr g = group_from_generators({SignedPerm({1, 2, 0}, {1, 1, 1})});
  REQUIRE(g->order() == 3);
  AmicableScenario s;
  s.name = "z3";
  s.group = g;
  s.cocycle = trivial_cocycle(g);
  s.h = trivial_subgroup(g);
  s.h2 = trivial_subgroup(g);
  s.chi = trivial_character(s.cocycle, s.h);
  s.chi2 = s.chi;
  CHECK_THROWS_AS(build_amicable(s), input_error);
}

TEST_CASE("factor symbol sets must be disjoint") {
  FopScenario s = scenario_z2_4();
  s.symbols_b = {Symbol{"a"}, Symbol{"d"}};  // reuses a factor-A symbol
  CHECK_THROWS_AS(build_fop(s), input_error);
}

TEST_CASE("wreath n = 4 reports the known degenerate outcome") {
  // Orbit counting forbids disjoint supports at n = 4: the pipeline must
  // stop with a construction error rather than fabricate a P.
  CHECK_THROWS_AS(partial_weighing(4), construction_error);
}
