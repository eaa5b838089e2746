#include <catch2/catch.hpp>

#include "fop/induced.hpp"
#include "fop/rng.hpp"

using namespace fop;

namespace {

std::vector<std::vector<int>> cyclic_form_4() {
  std::vector<std::vector<int>> f(4, std::vector<int>(4, 0));
  for (int i = 0; i < 4; ++i) f[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + 1) % 4)] = 1;
  return f;
}

void check_projectivity_exhaustive(const InducedRep& v) {
  const auto& g = *v.group();
  REQUIRE(g.order() <= 256);
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      SignedPerm prod = v.matrix(static_cast<int>(a)).compose(v.matrix(static_cast<int>(b)));
      const SignedPerm& direct = v.matrix(g.mul(static_cast<int>(a), static_cast<int>(b)));
      int w = v.cocycle().at(static_cast<int>(a), static_cast<int>(b));
      for (int i = 0; i < v.dim(); ++i) {
        REQUIRE(prod.image(i) == direct.image(i));
        REQUIRE(prod.sign(i) == w * direct.sign(i));
      }
    }
}

}  // namespace

TEST_CASE("H = G with trivial data gives the 1-dimensional trivial representation") {
  GroupPtr g = dihedral_affine(4);
  TwoCocycle w = trivial_cocycle(g);
  Subgroup h = full_subgroup(g);
  InducedRep v = induce(g, w, h, trivial_character(w, h));
  CHECK(v.dim() == 1);
  for (std::size_t x = 0; x < g->order(); ++x) {
    CHECK(v.matrix(static_cast<int>(x)).image(0) == 0);
    CHECK(v.matrix(static_cast<int>(x)).sign(0) == 1);
  }
}

TEST_CASE("the (Z/2)^4 scenario representations have dims 4, 4, 8") {
  GroupPtr g = elementary_abelian(4);
  TwoCocycle w = cocycle_from_bilinear_form(g, cyclic_form_4());

  Subgroup h = subgroup_generated(g, {0b1111, 0b1110});
  std::map<int, int> vh;
  for (int id : h.members) vh[id] = id == 0 ? 1 : -1;
  InducedRep v1 = induce(g, w, h, character_from_values(w, h, vh));
  CHECK(v1.dim() == 4);
  check_projectivity_exhaustive(v1);

  Subgroup h2 = subgroup_generated(g, {0b1111, 0b1010});
  std::map<int, int> vh2;
  for (int id : h2.members) vh2[id] = (id == 0b1010 || id == 0b0101) ? -1 : 1;
  InducedRep v2 = induce(g, w, h2, character_from_values(w, h2, vh2));
  CHECK(v2.dim() == 4);
  check_projectivity_exhaustive(v2);

  Subgroup k = subgroup_generated(g, {0b1000});
  InducedRep v3 = induce(g, w, k, trivial_character(w, k));
  CHECK(v3.dim() == 8);
  check_projectivity_exhaustive(v3);

  SECTION("rep_matrix fixes the base point with sign chi(h) for h in H") {
    for (int id : h.members) {
      const SignedPerm& m = rep_matrix(v1, id);
      CHECK(m.image(0) == 0);
      CHECK(m.sign(0) == v1.character().value(id));
    }
  }

  SECTION("rep_matrix at the identity and at inverses") {
    CHECK(rep_matrix(v1, 0).is_identity());
    for (std::size_t x = 0; x < g->order(); ++x) {
      int xi = g->inv(static_cast<int>(x));
      SignedPerm prod = rep_matrix(v1, static_cast<int>(x)).compose(rep_matrix(v1, xi));
      int expected = w.at(static_cast<int>(x), xi);
      for (int i = 0; i < v1.dim(); ++i) {
        CHECK(prod.image(i) == i);
        CHECK(prod.sign(i) == expected);
      }
    }
  }
}

TEST_CASE("dihedral induced rep: the rotation acts as a signed 6-cycle") {
  GroupPtr g = dihedral_affine(6);
  TwoCocycle w = trivial_cocycle(g);
  Subgroup h = subgroup_generated(g, {6});  // {x -> +-x}
  std::map<int, int> chi{{0, 1}, {6, -1}};
  InducedRep v = induce(g, w, h, character_from_values(w, h, chi));
  CHECK(v.dim() == 6);

  // Hand oracle: cosets of H are {t^b, s t^-b}; right multiplication of the
  // rotation t on coset representatives walks through all six cosets.
  const SignedPerm& rot = v.matrix(1);
  std::vector<char> hit(6, 0);
  int at = 0, steps = 0;
  do {
    at = rot.image(at);
    hit[static_cast<std::size_t>(at)] = 1;
    ++steps;
  } while (at != 0 && steps <= 6);
  CHECK(steps == 6);
  for (char c : hit) CHECK(c == 1);
  check_projectivity_exhaustive(v);
}

TEST_CASE("induce with trivial data reproduces the permutation representation on cosets") {
  GroupPtr g = dihedral_affine(5);
  TwoCocycle w = trivial_cocycle(g);
  for (auto gens : {std::vector<int>{5}, std::vector<int>{1}}) {
    Subgroup h = subgroup_generated(g, gens);
    InducedRep v = induce(g, w, h, trivial_character(w, h));
    CHECK(static_cast<std::size_t>(v.dim()) * h.order() == g->order());
    for (std::size_t x = 0; x < g->order(); ++x) CHECK(v.matrix(static_cast<int>(x)).is_plain());
  }
}

TEST_CASE("cocyclic_regular_rep") {
  SECTION("trivial cocycle gives the regular permutation representation") {
    GroupPtr g = dihedral_affine(3);
    InducedRep v = cocyclic_regular_rep(g, trivial_cocycle(g));
    CHECK(v.dim() == 6);
    for (std::size_t x = 0; x < g->order(); ++x) CHECK(v.matrix(static_cast<int>(x)).is_plain());
  }

  SECTION("matches the cocyclic action formula (g,[g']) -> w(g,g')[gg']") {
    GroupPtr g = elementary_abelian(2);
    TwoCocycle w = cocycle_from_bilinear_form(g, {{1, 0}, {0, 1}});
    InducedRep v = cocyclic_regular_rep(g, w);
    CHECK(v.dim() == 4);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) {
        CHECK(v.matrix(x).image(y) == g->mul(x, y));
        CHECK(v.matrix(x).sign(y) == w.at(x, y));
      }
    check_projectivity_exhaustive(v);
  }
}

TEST_CASE("forget_signs") {
  GroupPtr g = elementary_abelian(4);
  TwoCocycle w = cocycle_from_bilinear_form(g, cyclic_form_4());
  Subgroup h = subgroup_generated(g, {0b1111, 0b1110});
  std::map<int, int> vh;
  for (int id : h.members) vh[id] = id == 0 ? 1 : -1;
  InducedRep v = induce(g, w, h, character_from_values(w, h, vh));

  InducedRep u = forget_signs(v);
  CHECK(u.dim() == v.dim());
  CHECK(u.cocycle().is_trivial());
  for (std::size_t x = 0; x < g->order(); ++x) {
    CHECK(u.matrix(static_cast<int>(x)).is_plain());
    for (int i = 0; i < v.dim(); ++i)
      CHECK(u.matrix(static_cast<int>(x)).image(i) == v.matrix(static_cast<int>(x)).image(i));
  }

  // idempotent
  InducedRep uu = forget_signs(u);
  for (std::size_t x = 0; x < g->order(); ++x)
    CHECK(uu.matrix(static_cast<int>(x)) == u.matrix(static_cast<int>(x)));
}

TEST_CASE("dim times |H| equals |G| across subgroups") {
  GroupPtr g = wreath_z2_zn(3);
  TwoCocycle w = trivial_cocycle(g);
  for (auto gens : {std::vector<int>{}, std::vector<int>{1}, std::vector<int>{1, 2}, std::vector<int>{8}}) {
    Subgroup h = subgroup_generated(g, gens);
    InducedRep v = induce(g, w, h, trivial_character(w, h));
    CHECK(static_cast<std::size_t>(v.dim()) * h.order() == g->order());
  }
}

TEST_CASE("projectivity sampled on 1e5 random pairs for |G| > 256") {
  GroupPtr g = wreath_z2_zn(6);  // order 384
  TwoCocycle w = trivial_cocycle(g);
  std::vector<int> gens;
  for (int k = 3; k < 6; ++k) gens.push_back(1 << k);
  Subgroup h = subgroup_generated(g, gens);
  std::map<int, int> vals;
  for (int id : h.members) vals[id] = (__builtin_popcount(static_cast<unsigned>(id)) % 2) ? -1 : 1;
  InducedRep v = induce(g, w, h, character_from_values(w, h, vals));

  Rng rng(99);
  for (int t = 0; t < 100000; ++t) {
    int a = static_cast<int>(rng.below(g->order()));
    int b = static_cast<int>(rng.below(g->order()));
    SignedPerm prod = v.matrix(a).compose(v.matrix(b));
    const SignedPerm& direct = v.matrix(g->mul(a, b));
    REQUIRE(prod == direct);  // trivial cocycle: exact equality
  }
}

TEST_CASE("induce rejects a chi that fails the coboundary check") {
  GroupPtr g = elementary_abelian(4);
  TwoCocycle w = cocycle_from_bilinear_form(g, cyclic_form_4());
  TwoCocycle triv = trivial_cocycle(g);
  Subgroup h = subgroup_generated(g, {0b1111, 0b1110});
  // chi == +1 trivializes the trivial cocycle but not w|H
  SignCharacter chi = trivial_character(triv, h);
  CHECK_THROWS_AS(induce(g, w, h, chi), input_error);
}
