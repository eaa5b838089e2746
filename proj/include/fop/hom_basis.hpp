#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "fop/errors.hpp"
#include "fop/induced.hpp"
#include "fop/matrices.hpp"
#include "fop/rational.hpp"

namespace fop {

using Cell = std::pair<int, int>;

/// One orbit of the unsigned G-action on basis pairs M x M'. When the orbit
/// is orientable, `signs` carries the unique sign assignment with +1 at the
/// representative (the least cell in row-major order); propagation follows
/// the rule: g sending (v,w) to (v',w') with signs eps, mu forces
/// sign(v',w') = eps * mu * sign(v,w).
struct PairOrbit {
  std::vector<Cell> cells;  // sorted row-major
  Cell representative;
  bool orientable = false;
  std::map<Cell, std::int8_t> signs;  // empty when non-orientable

  int row_weight(int row) const {
    int k = 0;
    for (const Cell& c : cells)
      if (c.first == row) ++k;
    return k;
  }
};

namespace detail {

inline void require_compatible(const InducedRep& v, const InducedRep& w) {
  if (v.group() != w.group()) throw input_error("pair_orbits: representations of different groups");
  if (!(v.cocycle() == w.cocycle())) throw input_error("pair_orbits: cocycle mismatch");
}

}  // namespace detail

/// Sign propagation over one orbit, seeded with +1 at `start`. Returns the
/// orbit's cells, whether propagation is conflict-free, and if so the signs.
/// The verdict does not depend on the start cell; tests re-run this from
/// random cells of an orbit to confirm.
struct Propagation {
  std::vector<Cell> cells;
  bool orientable;
  std::map<Cell, std::int8_t> signs;
};

inline Propagation propagate_from(const InducedRep& v, const InducedRep& w, Cell start) {
  detail::require_compatible(v, w);
  const std::size_t ng = v.group()->order();

  std::map<Cell, std::int8_t> sign{{start, 1}};
  std::vector<Cell> queue{start};
  bool conflict = false;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [i, j] = queue[head];
    const int s0 = sign.at({i, j});
    for (std::size_t g = 0; g < ng; ++g) {
      const SignedPerm& a = v.matrix(static_cast<int>(g));
      const SignedPerm& b = w.matrix(static_cast<int>(g));
      Cell to{a.image(i), b.image(j)};
      int s = s0 * a.sign(i) * b.sign(j);
      auto [it, fresh] = sign.emplace(to, static_cast<std::int8_t>(s));
      if (fresh)
        queue.push_back(to);
      else if (it->second != s)
        conflict = true;
    }
  }
  Propagation out;
  out.cells.reserve(sign.size());
  for (const auto& [c, s] : sign) out.cells.push_back(c);
  out.orientable = !conflict;
  if (!conflict) out.signs = std::move(sign);
  return out;
}

/// Partition of M x M' into G-orbits with orientability decided by sign
/// propagation. Orbits are listed by ascending representative; cells are
/// sorted row-major. Non-orientable orbits are retained and flagged.
inline std::vector<PairOrbit> pair_orbits(const InducedRep& v, const InducedRep& w) {
  detail::require_compatible(v, w);
  const int m = v.dim(), mm = w.dim();
  std::vector<char> visited(static_cast<std::size_t>(m) * mm, 0);
  std::vector<PairOrbit> orbits;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < mm; ++j) {
      if (visited[static_cast<std::size_t>(i) * mm + j]) continue;
      Propagation p = propagate_from(v, w, {i, j});
      for (const Cell& c : p.cells) visited[static_cast<std::size_t>(c.first) * mm + c.second] = 1;
      PairOrbit o;
      o.cells = std::move(p.cells);  // map order == row-major order
      o.representative = {i, j};
      o.orientable = p.orientable;
      o.signs = std::move(p.signs);
      orbits.push_back(std::move(o));
    }
  return orbits;
}

/// Stabilizer-side orientability test, evaluated at the orbit representative
/// (i, j) with coset representatives g_i, g'_j: for every t in
/// g_i H g_i^-1 intersect g'_j H' g'_j^-1, writing h = g_i^-1 t g_i and
/// h' = g'_j^-1 t g'_j, the two lifted character values
///
///   w(t, g_i) w(g_i, h) chi(h)   and   w(t, g'_j) w(g'_j, h') chi'(h')
///
/// must agree. The w-factors carry the conjugation into the central
/// extension determined by w; with a trivial cocycle the condition is the
/// bare chi(g_i^-1 t g_i) = chi'(g'_j^-1 t g'_j). Deliberately computed from
/// group data alone, independent of the propagation dynamics.
inline bool orientable_by_stabilizer(const InducedRep& v, const InducedRep& w, const PairOrbit& orbit) {
  detail::require_compatible(v, w);
  const auto& grp = *v.group();
  const TwoCocycle& omega = v.cocycle();
  const auto [i, j] = orbit.representative;
  const int gi = v.cosets().reps[static_cast<std::size_t>(i)];
  const int gj = w.cosets().reps[static_cast<std::size_t>(j)];
  const int gi_inv = grp.inv(gi);
  const int gj_inv = grp.inv(gj);
  for (std::size_t t = 0; t < grp.order(); ++t) {
    const int tt = static_cast<int>(t);
    const int h = grp.mul(grp.mul(gi_inv, tt), gi);
    if (!v.subgroup().contains(h)) continue;
    const int hp = grp.mul(grp.mul(gj_inv, tt), gj);
    if (!w.subgroup().contains(hp)) continue;
    const int lhs = omega.at(tt, gi) * omega.at(gi, h) * v.character().value(h);
    const int rhs = omega.at(tt, gj) * omega.at(gj, hp) * w.character().value(hp);
    if (lhs != rhs) return false;
  }
  return true;
}

/// The {0,-1,1} basis of Hom_M(V, V'): one sign matrix per orientable orbit,
/// disjoint supports, +1 at each orbit representative.
struct HomBasis {
  int rows = 0;
  int cols = 0;
  bool endomorphism = false;  // V and V' were the same representation
  std::vector<PairOrbit> orbits;
  std::vector<SignMatrix> basis;  // aligned with the orientable orbits in order

  int orientable_count() const { return static_cast<int>(basis.size()); }
  int total_orbits() const { return static_cast<int>(orbits.size()); }
};

inline HomBasis hom_basis(const InducedRep& v, const InducedRep& w) {
  HomBasis out;
  out.rows = v.dim();
  out.cols = w.dim();
  out.endomorphism = (&v == &w) || (v.subgroup() == w.subgroup() && v.character() == w.character() &&
                                    v.cocycle() == w.cocycle());
  out.orbits = pair_orbits(v, w);
  for (const PairOrbit& o : out.orbits) {
    if (!o.orientable) continue;
    SignMatrix e(out.rows, out.cols);
    for (const auto& [cell, s] : o.signs) e.set(cell.first, cell.second, s);
    out.basis.push_back(std::move(e));
  }
  return out;
}

/// Exact dimension of { T : [g] T = T [g'] for all g } over the rationals,
/// solved by sparse rational elimination on the full linear system. This is
/// the independent oracle for the two orientability tests; it never looks at
/// orbits or signs as such.
inline int hom_dim_oracle(const InducedRep& v, const InducedRep& w) {
  detail::require_compatible(v, w);
  const int m = v.dim(), mm = w.dim();
  const int ncells = m * mm;
  auto idx = [mm](int i, int j) { return i * mm + j; };

  std::set<std::tuple<int, int, int>> relations;  // x_lo = s * x_hi, deduplicated
  std::set<int> zero_vars;
  for (std::size_t g = 0; g < v.group()->order(); ++g) {
    const SignedPerm& a = v.matrix(static_cast<int>(g));
    const SignedPerm& b = w.matrix(static_cast<int>(g));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < mm; ++j) {
        int from = idx(i, j);
        int to = idx(a.image(i), b.image(j));
        int s = a.sign(i) * b.sign(j);
        if (from == to) {
          if (s < 0) zero_vars.insert(from);
        } else {
          relations.emplace(std::min(from, to), std::max(from, to), s);
        }
      }
  }

  std::vector<SparseRow> rows;
  rows.reserve(relations.size() + zero_vars.size());
  for (int z : zero_vars) rows.push_back({{z, Rational(1)}});
  for (const auto& [lo, hi, s] : relations)
    rows.push_back({{lo, Rational(1)}, {hi, Rational(-s)}});
  return nullspace_dimension(ncells, rows);
}

/// Structure constants of the endomorphism algebra: E_i E_j = sum_k c E_k
/// with exact integer coefficients. Throws engine_error if any product
/// leaves the span (nonzero residual), which would signal a sign-convention
/// bug upstream.
inline std::vector<std::vector<std::vector<long long>>> structure_constants(const HomBasis& b) {
  if (!b.endomorphism || b.rows != b.cols)
    throw input_error("structure_constants: endomorphism basis required");
  const int n = b.orientable_count();

  // cell -> orientable basis index (or -1)
  std::vector<int> owner(static_cast<std::size_t>(b.rows) * b.cols, -1);
  for (int k = 0; k < n; ++k)
    for (const auto& [cell, s] : b.basis[static_cast<std::size_t>(k)].entries())
      owner[static_cast<std::size_t>(cell.first) * b.cols + cell.second] = k;

  // row-indexed view of each basis matrix
  std::vector<std::vector<std::vector<std::pair<int, int>>>> rows_of(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    rows_of[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(b.rows), {});
    for (const auto& [cell, s] : b.basis[static_cast<std::size_t>(k)].entries())
      rows_of[static_cast<std::size_t>(k)][static_cast<std::size_t>(cell.first)].emplace_back(cell.second, s);
  }

  std::vector<std::vector<std::vector<long long>>> lambda(
      static_cast<std::size_t>(n),
      std::vector<std::vector<long long>>(static_cast<std::size_t>(n),
                                          std::vector<long long>(static_cast<std::size_t>(n), 0)));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::map<Cell, long long> prod;
      for (const auto& [cell, s] : b.basis[static_cast<std::size_t>(i)].entries())
        for (const auto& [c2, s2] : rows_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(cell.second)])
          prod[{cell.first, c2}] += static_cast<long long>(s) * s2;

      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      for (const auto& [cell, val] : prod) {
        if (val == 0) continue;
        int k = owner[static_cast<std::size_t>(cell.first) * b.cols + cell.second];
        if (k < 0) throw engine_error("structure constants: product leaves the orientable span");
        long long coef = val * b.basis[static_cast<std::size_t>(k)].at(cell.first, cell.second);
        if (!seen[static_cast<std::size_t>(k)]) {
          seen[static_cast<std::size_t>(k)] = 1;
          lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = coef;
        } else if (lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] !=
                   coef) {
          throw engine_error("structure constants: inconsistent coefficient across an orbit");
        }
      }
      // residual check: every cell of every used E_k must carry the value
      for (int k = 0; k < n; ++k) {
        long long coef = lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        if (coef == 0) continue;
        for (const auto& [cell, s] : b.basis[static_cast<std::size_t>(k)].entries()) {
          auto it = prod.find(cell);
          long long actual = it == prod.end() ? 0 : it->second;
          if (actual != coef * s) throw engine_error("structure constants: nonzero residual");
        }
      }
    }
  return lambda;
}

/// Weight matrix of End_M(V): the sum of all orientable-orbit sign matrices.
/// Hadamard-multiplying the unsigned orbit indicator F_i by W recovers E_i
/// for orientable orbits and 0 for the rest, so A -> A o W maps the
/// coherent-configuration basis onto the signed one.
inline SignMatrix weight_matrix(const InducedRep& v) {
  HomBasis b = hom_basis(v, v);
  SignMatrix wmat(b.rows, b.cols);
  for (const SignMatrix& e : b.basis)
    for (const auto& [cell, s] : e.entries()) wmat.set(cell.first, cell.second, s);
  return wmat;
}

/// Permutation action of each group element on row/column indices, read off
/// an induced representation with signs dropped.
inline std::vector<std::vector<int>> unsigned_action(const InducedRep& v) {
  std::vector<std::vector<int>> act(v.group()->order(), std::vector<int>(static_cast<std::size_t>(v.dim())));
  for (std::size_t g = 0; g < v.group()->order(); ++g)
    for (int i = 0; i < v.dim(); ++i) act[g][static_cast<std::size_t>(i)] = v.matrix(static_cast<int>(g)).image(i);
  return act;
}

/// Cohomology-developed-matrix test: true iff for every g there are +-1
/// diagonal matrices D1, D2 with gA = D1 A D2, where (gA)_{x,y} =
/// A_{g^-1 x, g^-1 y}. Decided by sign-consistency propagation on the
/// bipartite support graph of A. A support that is not G-stable yields
/// false, not an error.
inline bool is_cdm(const SignMatrix& a, const FiniteGroup& grp, const std::vector<std::vector<int>>& row_act,
                   const std::vector<std::vector<int>>& col_act) {
  if (row_act.size() != grp.order() || col_act.size() != grp.order())
    throw input_error("is_cdm: actions must be total on G");
  for (std::size_t g = 0; g < grp.order(); ++g) {
    const std::vector<int>& rmap = row_act[g];
    const std::vector<int>& cmap = col_act[g];

    // gA via forward images: (gA)_{rmap[x], cmap[y]} = A_{x,y}
    std::map<Cell, int> moved;
    for (const auto& [cell, s] : a.entries())
      moved[{rmap[static_cast<std::size_t>(cell.first)], cmap[static_cast<std::size_t>(cell.second)]}] = s;
    if (moved.size() != a.support_size()) return false;
    for (const auto& [cell, s] : moved)
      if (a.at(cell.first, cell.second) == 0) return false;

    // need r(x) c(y) = moved(x,y) / A(x,y) on the support: 2-color the
    // bipartite graph, sweeping to a fixpoint. Seeding a fresh component
    // with r = +1 loses nothing: negating all of a component's row and
    // column signs together preserves every product.
    std::map<int, int> rsign, csign;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [cell, s] : moved) {
        int need = s * a.at(cell.first, cell.second);
        bool hr = rsign.count(cell.first), hc = csign.count(cell.second);
        if (hr && hc) {
          if (rsign[cell.first] * csign[cell.second] != need) return false;
        } else if (hr) {
          csign[cell.second] = need * rsign[cell.first];
          changed = true;
        } else if (hc) {
          rsign[cell.first] = need * csign[cell.second];
          changed = true;
        } else {
          rsign[cell.first] = 1;
          csign[cell.second] = need;
          changed = true;
        }
      }
    }
  }
  return true;
}

}  // namespace fop
