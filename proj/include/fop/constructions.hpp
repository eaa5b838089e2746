#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fop/cocycle.hpp"
#include "fop/errors.hpp"
#include "fop/formal.hpp"
#include "fop/group.hpp"
#include "fop/hom_basis.hpp"
#include "fop/induced.hpp"

namespace fop {

/// Everything needed to run the FOP pipeline: a group with a 2-cocycle, row
/// subgroups H, H2 and a column subgroup K, their trivializations, and the
/// symbol names for the two factors. Empty symbol lists mean "derive names
/// from the orbit counts" (factor A gets a, b, c, ...; factor B continues
/// the alphabet).
struct FopScenario {
  std::string name;
  GroupPtr group;
  TwoCocycle cocycle;
  Subgroup h, h2, k;
  SignCharacter chi, chi2, chi_k;
  std::vector<Symbol> symbols_a, symbols_b;
};

struct OrbitCensus {
  std::string pair_name;
  int total = 0;
  int orientable = 0;
};

struct BuildOptions {
  int transfer_trials = 20;
  std::uint64_t seed = default_seed;
  bool run_transfer = true;
};

struct FopResult {
  FormalMatrix a, b;
  HomBasis basis_a, basis_b;
  std::vector<OrbitCensus> census;  // X x Z, X' x Z, X x X'
  bool orthogonal_by_hom = false;   // Hom(V, V') vanished
  bool formal_zero = false;         // A B^T == 0 in the free ring
  bool transfer_ok = false;
  bool transfer_ran = false;
};

namespace detail {

inline std::vector<Symbol> alphabet_symbols(int count, int offset) {
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    int idx = offset + i;
    std::string name;
    if (idx < 26)
      name = std::string(1, static_cast<char>('a' + idx));
    else
      name = "s" + std::to_string(idx);
    out.push_back(Symbol{name});
  }
  return out;
}

inline void require_disjoint_symbols(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
  for (const Symbol& x : a)
    for (const Symbol& y : b)
      if (x == y) throw input_error("scenario: factor symbol sets must be disjoint (symbol '" + x.name + "')");
}

}  // namespace detail

/// Generic FOP pipeline. X = G/H, X' = G/H2, Z = G/K; A assembles the basis
/// of Hom(V_H, V_K) and B the basis of Hom(V_H2, V_K). When Hom(V_H, V_H2)
/// vanishes the orthogonal flag is set and A B^T = 0 is asserted (a failure
/// there is an engine bug); a nonvanishing Hom leaves the flag false, which
/// is a legitimate outcome, not an error.
inline FopResult build_fop(const FopScenario& s, const BuildOptions& opt = {}) {
  InducedRep va = induce(s.group, s.cocycle, s.h, s.chi);
  InducedRep vb = induce(s.group, s.cocycle, s.h2, s.chi2);
  InducedRep vk = induce(s.group, s.cocycle, s.k, s.chi_k);

  FopResult r;
  r.basis_a = hom_basis(va, vk);
  r.basis_b = hom_basis(vb, vk);
  HomBasis cross = hom_basis(va, vb);
  r.census = {{"XxZ", r.basis_a.total_orbits(), r.basis_a.orientable_count()},
              {"X2xZ", r.basis_b.total_orbits(), r.basis_b.orientable_count()},
              {"XxX2", cross.total_orbits(), cross.orientable_count()}};

  if (r.basis_a.orientable_count() == 0 || r.basis_b.orientable_count() == 0)
    throw construction_error("build_fop: degenerate scenario, a factor has an empty basis");

  std::vector<Symbol> sa = s.symbols_a.empty() ? detail::alphabet_symbols(r.basis_a.orientable_count(), 0)
                                               : s.symbols_a;
  std::vector<Symbol> sb = s.symbols_b.empty()
                               ? detail::alphabet_symbols(r.basis_b.orientable_count(),
                                                          s.symbols_a.empty() ? r.basis_a.orientable_count() : 26)
                               : s.symbols_b;
  detail::require_disjoint_symbols(sa, sb);
  r.a = assemble(r.basis_a, sa);
  r.b = assemble(r.basis_b, sb);

  r.orthogonal_by_hom = (cross.orientable_count() == 0);
  r.formal_zero = is_zero(mul_transpose(r.a, r.b));
  if (r.orthogonal_by_hom && !r.formal_zero)
    throw engine_error("build_fop: Hom(V,V') = 0 but A B^T != 0 (orthogonality lemma violated)");

  if (opt.run_transfer && r.formal_zero) {
    r.transfer_ok = orthogonality_transfer_check(r.a, r.b, opt.transfer_trials, opt.seed);
    r.transfer_ran = true;
    if (!r.transfer_ok) throw engine_error("build_fop: block-substitution transfer check failed");
  }
  return r;
}

/// The (Z/2)^4 scenario: bilinear-form cocycle w(v,u) = (-1)^(sum v_i u_{i+1
/// mod 4}), isotropic subgroups H = <1111, 0111>, H2 = <1111, 0101>,
/// K = <0001>, with the non-homomorphic trivialization chi_H = -1 away from
/// 0, chi_H2 = -1 exactly on {0101, 1010}, chi_K = +1. Factor symbols
/// (a, b | c, d). Coordinate k of a vector is bit k of its element id.
inline FopScenario scenario_z2_4() {
  FopScenario s;
  s.name = "z2_4";
  s.group = elementary_abelian(4);
  std::vector<std::vector<int>> form(4, std::vector<int>(4, 0));
  for (int i = 0; i < 4; ++i) form[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + 1) % 4)] = 1;
  s.cocycle = cocycle_from_bilinear_form(s.group, form);

  s.h = subgroup_generated(s.group, {0b1111, 0b1110});   // (1,1,1,1), (0,1,1,1)
  s.h2 = subgroup_generated(s.group, {0b1111, 0b1010});  // (1,1,1,1), (0,1,0,1)
  s.k = subgroup_generated(s.group, {0b1000});           // (0,0,0,1)

  std::map<int, int> chi_h;
  for (int id : s.h.members) chi_h[id] = (id == 0) ? 1 : -1;
  s.chi = character_from_values(s.cocycle, s.h, chi_h);

  // -1 at (0,1,0,1) and, forced by the coboundary identity, at (1,0,1,0).
  std::map<int, int> chi_h2;
  for (int id : s.h2.members) chi_h2[id] = (id == 0b1010 || id == 0b0101) ? -1 : 1;
  s.chi2 = character_from_values(s.cocycle, s.h2, chi_h2);

  s.chi_k = trivial_character(s.cocycle, s.k);
  s.symbols_a = {Symbol{"a"}, Symbol{"b"}};
  s.symbols_b = {Symbol{"c"}, Symbol{"d"}};
  return s;
}

/// {0,-1,1} vector encoding a subgroup of (Z/2)^n spanned by the standard
/// vectors at its nonzero positions, together with the character taking
/// rho[k] at e_k.
struct CirculantProfile {
  int n = 0;
  std::vector<std::int8_t> rho;

  CirculantProfile() = default;
  CirculantProfile(int n_, std::vector<std::int8_t> rho_) : n(n_), rho(std::move(rho_)) {
    if (rho.size() != static_cast<std::size_t>(n)) throw input_error("circulant profile: length mismatch");
    for (std::int8_t v : rho)
      if (v < -1 || v > 1) throw input_error("circulant profile: entries must be 0/+1/-1");
  }
};

/// Circulant matrix whose row k is rho shifted right by k.
inline IntMatrix circulant(const CirculantProfile& p) {
  IntMatrix m(p.n, p.n);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) m.at(i, j) = p.rho[static_cast<std::size_t>(((j - i) % p.n + p.n) % p.n)];
  return m;
}

struct Lemma41Verdict {
  bool orthogonal_ok = false;  // (C1 C2^T)_{ij} < (|C1| |C2|^T)_{ij} for all i,j
  bool a_quasi_ok = false;     // same strict bound for C1 and C2 against themselves, off-diagonal
};

/// Circulant test for the wreath family. The orthogonality condition
/// compares the circulants of the two row profiles rho1, rho2 (their shifts
/// must never agree on common support); the quasi-orthogonality condition
/// bounds each row profile against itself off the diagonal. rho3 fixes the
/// shared column space and does not enter the inequalities.
inline Lemma41Verdict lemma41_check(const CirculantProfile& rho1, const CirculantProfile& rho2,
                                    const CirculantProfile& rho3) {
  if (rho1.n != rho2.n || rho1.n != rho3.n) throw input_error("lemma41_check: profiles of different lengths");
  auto abs_of = [](const IntMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j) < 0 ? -m.at(i, j) : m.at(i, j);
    return out;
  };
  IntMatrix c1 = circulant(rho1), c2 = circulant(rho2);
  IntMatrix a1 = abs_of(c1), a2 = abs_of(c2);

  auto strictly_below = [](const IntMatrix& lhs, const IntMatrix& rhs, bool off_diagonal_only) {
    for (int i = 0; i < lhs.rows(); ++i)
      for (int j = 0; j < lhs.cols(); ++j) {
        if (off_diagonal_only && i == j) continue;
        if (!(lhs.at(i, j) < rhs.at(i, j))) return false;
      }
    return true;
  };

  Lemma41Verdict v;
  v.orthogonal_ok = strictly_below(c1 * c2.transpose(), a1 * a2.transpose(), false);
  v.a_quasi_ok = strictly_below(c1 * c1.transpose(), a1 * a1.transpose(), true) &&
                 strictly_below(c2 * c2.transpose(), a2 * a2.transpose(), true);
  return v;
}

/// The wreath family scenario: G = Z/2 wr Z/n with the trivial cocycle,
/// row profiles rho1 = (-1,1,...,1), rho2 = (1,1,-1,-1,1,...,1) and column
/// profile rho3 = (0,0,0,1,...,1), all inside the normal base (Z/2)^n.
///
/// The -1 block of rho2 sits at positions 3,4 (1-based). One step earlier
/// the d = 0 rotation orbit becomes orientable for both factors, so their
/// supports overlap and no weighing matrix can be assembled; this placement
/// keeps the factor supports disjoint for every n >= 5 while n = 4 still
/// degenerates (see partial_weighing).
inline std::vector<CirculantProfile> wreath_profiles(int n) {
  std::vector<std::int8_t> rho1(static_cast<std::size_t>(n), 1);
  rho1[0] = -1;
  std::vector<std::int8_t> rho2(static_cast<std::size_t>(n), 1);
  rho2[2] = rho2[3] = -1;
  std::vector<std::int8_t> rho3(static_cast<std::size_t>(n), 1);
  rho3[0] = rho3[1] = rho3[2] = 0;
  return {CirculantProfile(n, rho1), CirculantProfile(n, rho2), CirculantProfile(n, rho3)};
}

inline FopScenario scenario_wreath(int n) {
  if (n < 4) throw input_error("scenario_wreath: n must be >= 4");
  FopScenario s;
  s.name = "wreath" + std::to_string(n);
  s.group = wreath_z2_zn(n);
  s.cocycle = trivial_cocycle(s.group);

  auto profile_subgroup = [&](const CirculantProfile& p) {
    std::vector<int> gens;
    for (int k = 0; k < n; ++k)
      if (p.rho[static_cast<std::size_t>(k)] != 0) gens.push_back(1 << k);  // e_k has id 2^k
    return subgroup_generated(s.group, gens);
  };
  auto profile_character = [&](const Subgroup& h, const CirculantProfile& p) {
    std::map<int, int> values;
    for (int id : h.members) {
      int v = 1;
      for (int k = 0; k < n; ++k)
        if ((id >> k) & 1) v *= p.rho[static_cast<std::size_t>(k)];
      values[id] = v;
    }
    return character_from_values(s.cocycle, h, values);
  };

  auto profiles = wreath_profiles(n);
  s.h = profile_subgroup(profiles[0]);
  s.h2 = profile_subgroup(profiles[1]);
  s.k = profile_subgroup(profiles[2]);
  s.chi = profile_character(s.h, profiles[0]);
  s.chi2 = profile_character(s.h2, profiles[1]);
  s.chi_k = profile_character(s.k, profiles[2]);
  // symbol lists left empty: derived from orbit counts (a,b,c and d,e here)
  return s;
}

/// Sylvester Hadamard matrix of order 4 (rows ++++, +-+-, ++--, +--+).
inline IntMatrix sylvester_h4() {
  IntMatrix h(4, 4);
  const int rows[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h.at(i, j) = rows[i][j];
  return h;
}

struct PartialWeighingResult {
  int n = 0;
  FopResult fop;
  FormalMatrix c;           // A + B (disjoint supports)
  FreePoly diagonal;        // common diagonal of C C^T
  Symbol zeroed;            // symbol substituted by the zero column
  IntMatrix p;              // 4n x 8n, every row of weight 32, P P^T = 32 I
  bool row_weight_ok = false;
  bool gram_ok = false;
};

/// Runs the wreath pipeline and substitutes 4x1 columns of the Sylvester
/// H(4) for four of the five symbols (the remaining one gets the zero
/// column, chosen as the first symbol whose removal leaves exactly 32
/// nonzeros in every row of C). Every step failure raises construction_error
/// naming the step; n = 4 is allowed in but expected to fail the disjoint-
/// support step.
inline PartialWeighingResult partial_weighing_detailed(int n, std::optional<int> force_zero_index = {},
                                                       const BuildOptions& opt = {}) {
  if (n < 4) throw input_error("partial_weighing: n must be >= 4");
  PartialWeighingResult r;
  r.n = n;
  r.fop = build_fop(scenario_wreath(n), opt);
  if (!r.fop.formal_zero) throw construction_error("partial_weighing: A B^T != 0");

  // orientable supports of A and B must be disjoint cells of the same grid
  if (r.fop.a.rows() != r.fop.b.rows() || r.fop.a.cols() != r.fop.b.cols())
    throw construction_error("partial_weighing: factors live on different grids");
  for (int i = 0; i < r.fop.a.rows(); ++i)
    for (int j = 0; j < r.fop.a.cols(); ++j)
      if (!r.fop.a.at(i, j).is_zero() && !r.fop.b.at(i, j).is_zero())
        throw construction_error("partial_weighing: orbit supports of A and B overlap");

  r.c = add(r.fop.a, r.fop.b);
  auto profile = diagonal_profile(mul_transpose(r.c, r.c));
  if (!profile) throw construction_error("partial_weighing: C C^T is not a scalar diagonal");
  r.diagonal = *profile;

  std::vector<Symbol> syms = symbols_of(r.c);
  if (syms.size() != 5)
    throw construction_error("partial_weighing: expected five orbit symbols, got " +
                             std::to_string(syms.size()));

  // per-symbol row weight, from the diagonal profile (word s*s with coefficient = row weight)
  std::map<Symbol, long long> weight;
  for (const auto& [w, coef] : r.diagonal.terms()) {
    if (w.size() != 2 || !(w[0] == w[1])) throw construction_error("partial_weighing: non-square diagonal term");
    weight[w[0]] = coef;
  }

  int zero_idx = -1;
  if (force_zero_index) {
    zero_idx = *force_zero_index;
    if (zero_idx < 0 || zero_idx >= 5) throw input_error("partial_weighing: zero index out of range");
  } else {
    for (std::size_t i = 0; i < syms.size(); ++i) {
      long long remaining = 0;
      for (const auto& [sym, wgt] : weight)
        if (!(sym == syms[i])) remaining += wgt;
      if (remaining == 32) {
        zero_idx = static_cast<int>(i);
        break;
      }
    }
    if (zero_idx < 0) throw construction_error("partial_weighing: no symbol choice leaves row weight 32");
  }
  r.zeroed = syms[static_cast<std::size_t>(zero_idx)];

  IntMatrix h4 = sylvester_h4();
  std::map<Symbol, IntMatrix> blocks;
  int col = 0;
  for (std::size_t i = 0; i < syms.size(); ++i) {
    IntMatrix block(4, 1);
    if (static_cast<int>(i) != zero_idx) {
      for (int rr = 0; rr < 4; ++rr) block.at(rr, 0) = h4.at(rr, col);
      ++col;
    }
    blocks.emplace(syms[i], std::move(block));
  }
  if (col != 4) throw construction_error("partial_weighing: exactly four symbols must receive H(4) columns");

  r.p = substitute(r.c, blocks);
  r.row_weight_ok = true;
  for (int i = 0; i < r.p.rows(); ++i)
    if (r.p.row_support(i) != 32) r.row_weight_ok = false;
  if (!r.row_weight_ok) throw construction_error("partial_weighing: a row of P does not have weight 32");
  r.gram_ok = is_scalar_identity(gram(r.p), 32);
  if (!r.gram_ok) throw construction_error("partial_weighing: P P^T != 32 I");
  return r;
}

inline IntMatrix partial_weighing(int n) { return partial_weighing_detailed(n).p; }

/// Amicable-pair scenario data: two row subgroups over the same group, no
/// column subgroup. A and B assemble the same Hom basis with disjoint fresh
/// symbol sets.
struct AmicableScenario {
  std::string name;
  GroupPtr group;
  TwoCocycle cocycle;
  Subgroup h, h2;
  SignCharacter chi, chi2;
  std::vector<Symbol> symbols_a, symbols_b;
};

struct AmicableResult {
  FormalMatrix a, b;
  HomBasis basis;
  std::vector<OrbitCensus> census;  // X x X', X x X
  bool symmetric = false;
  bool transfer_ok = false;
  bool transfer_ran = false;
};

/// Builds a formal amicable pair. Precondition (checked structurally before
/// any matrix work): every G-orbit on X x X is symmetric, where X = G/H.
/// The product A B^T is then asserted to be entrywise symmetric; a failure
/// is reported as a construction error naming the step.
inline AmicableResult build_amicable(const AmicableScenario& s, const BuildOptions& opt = {}) {
  InducedRep va = induce(s.group, s.cocycle, s.h, s.chi);
  InducedRep vb = induce(s.group, s.cocycle, s.h2, s.chi2);

  InducedRep xa = forget_signs(va);
  for (const PairOrbit& o : pair_orbits(xa, xa)) {
    for (const Cell& c : o.cells) {
      bool found = std::binary_search(o.cells.begin(), o.cells.end(), Cell{c.second, c.first});
      if (!found)
        throw input_error("build_amicable: a G-orbit on X x X is not symmetric; amicability unavailable");
    }
  }

  AmicableResult r;
  r.basis = hom_basis(va, vb);
  if (r.basis.orientable_count() == 0)
    throw construction_error("build_amicable: Hom(V, V') = 0, nothing to assemble");

  int count = r.basis.orientable_count();
  std::vector<Symbol> sa = s.symbols_a.empty() ? detail::alphabet_symbols(count, 0) : s.symbols_a;
  std::vector<Symbol> sb = s.symbols_b.empty() ? detail::alphabet_symbols(count, count) : s.symbols_b;
  detail::require_disjoint_symbols(sa, sb);
  r.a = assemble(r.basis, sa);
  r.b = assemble(r.basis, sb);

  HomBasis xx = hom_basis(va, va);
  r.census = {{"XxX2", r.basis.total_orbits(), r.basis.orientable_count()},
              {"XxX", xx.total_orbits(), xx.orientable_count()}};

  r.symmetric = is_symmetric(mul_transpose(r.a, r.b));
  if (!r.symmetric) throw construction_error("build_amicable: A B^T is not formally symmetric");

  if (opt.run_transfer) {
    r.transfer_ok = amicability_transfer_check(r.a, r.b, opt.transfer_trials, opt.seed);
    r.transfer_ran = true;
    if (!r.transfer_ok) throw engine_error("build_amicable: amicable-block transfer check failed");
  }
  return r;
}

/// Dihedral amicable scenario (n even): G the affine dihedral group on Z/n,
/// trivial cocycle, H = {x -> +-x}, H' = {id, x -> x + n/2}, both with their
/// unique nontrivial character (trivial when |H| = 1 in degenerate cases).
inline AmicableScenario scenario_dihedral_amicable(int n) {
  if (n < 2 || n % 2 != 0) throw input_error("scenario_dihedral_amicable: n must be even and >= 2");
  AmicableScenario s;
  s.name = "dihedral" + std::to_string(n);
  s.group = dihedral_affine(n);
  s.cocycle = trivial_cocycle(s.group);

  int reflection = n;      // a = -1, b = 0
  int half_turn = n / 2;   // a = +1, b = n/2
  s.h = subgroup_generated(s.group, {reflection});
  s.h2 = subgroup_generated(s.group, {half_turn});

  auto nontrivial_or_trivial = [&](const Subgroup& h) {
    std::map<int, int> values;
    for (int id : h.members) values[id] = (id == 0) ? 1 : -1;
    return character_from_values(s.cocycle, h, values);
  };
  s.chi = nontrivial_or_trivial(s.h);
  s.chi2 = nontrivial_or_trivial(s.h2);
  // symbol lists left empty: a,b,c | d,e,f for n = 6
  return s;
}

}  // namespace fop
