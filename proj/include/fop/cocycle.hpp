#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fop/errors.hpp"
#include "fop/group.hpp"
#include "fop/rng.hpp"

namespace fop {

/// A {+1,-1}-valued 2-cocycle on a finite group, stored as a dense sign
/// table. Construction validates the cocycle identity
///
///   w(g',g'') * w(g,g'g'') = w(gg',g'') * w(g,g')
///
/// (exhaustively for |G| <= 256, sampled on >= 10^6 triples above) and the
/// normalization w(e,g) = w(g,e) = w(e,e) = +1. The identity forces
/// w(e,.) and w(.,e) to be the constant w(e,e); we additionally require that
/// constant to be +1 so induced signs are reproducible.
class TwoCocycle {
 public:
  static constexpr std::size_t table_limit = 4096;  // |G| cap for the dense table

  static TwoCocycle trivial(GroupPtr group) {
    check_size(*group);
    TwoCocycle w;
    w.group_ = std::move(group);
    w.table_.assign(w.group_->order() * w.group_->order(), 1);
    return w;
  }

  /// w(v,w) = (-1)^(v^T F w) on a group built by elementary_abelian.
  /// form is an n x n 0/1 matrix; bit k of an element id is coordinate k.
  static TwoCocycle from_bilinear_form(GroupPtr group, const std::vector<std::vector<int>>& form) {
    if (group->meta().kind != FiniteGroup::Kind::ElementaryAbelian)
      throw input_error("cocycle_from_bilinear_form: group was not built by elementary_abelian");
    check_size(*group);
    int n = group->meta().n;
    if (form.size() != static_cast<std::size_t>(n)) throw input_error("bilinear form: wrong row count");
    for (const auto& row : form)
      if (row.size() != static_cast<std::size_t>(n)) throw input_error("bilinear form: wrong column count");

    TwoCocycle w;
    w.group_ = std::move(group);
    std::size_t m = w.group_->order();
    w.table_.resize(m * m);
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t u = 0; u < m; ++u) {
        int acc = 0;
        for (int i = 0; i < n; ++i) {
          if (!((v >> i) & 1)) continue;
          for (int j = 0; j < n; ++j)
            if (((u >> j) & 1) && form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) acc ^= 1;
        }
        w.table_[v * m + u] = acc ? -1 : 1;
      }
    return w;  // bilinearity gives the cocycle identity; normalization is w(0,.) = +1
  }

  /// Validates an explicit table (row-major, w(g,h) at g*|G|+h).
  static TwoCocycle from_table(GroupPtr group, std::vector<std::int8_t> table) {
    check_size(*group);
    TwoCocycle w;
    w.group_ = std::move(group);
    if (table.size() != w.group_->order() * w.group_->order())
      throw input_error("cocycle table: wrong size");
    for (std::int8_t s : table)
      if (s != 1 && s != -1) throw input_error("cocycle table: entries must be +1/-1");
    w.table_ = std::move(table);
    if (w.at(0, 0) != 1)
      throw input_error("cocycle table: normalization requires w(e,e) = +1 (negate the table globally)");
    // the identity forces w(e,.) = w(.,e) = w(e,e); check directly so large
    // tables validated by sampling cannot slip through
    for (std::size_t g = 0; g < w.group_->order(); ++g)
      if (w.at(0, static_cast<int>(g)) != 1 || w.at(static_cast<int>(g), 0) != 1)
        throw input_error("cocycle table: w(e,g) and w(g,e) must equal w(e,e)");
    if (!verify(w)) throw input_error("cocycle table: cocycle identity fails");
    return w;
  }

  /// The coboundary of an arbitrary sign function chi on G (chi need not be
  /// a character): w(g,h) = chi(gh) chi(g) chi(h). Always a valid cocycle;
  /// handy for generating nontrivial-looking test tables on any group.
  static TwoCocycle coboundary(GroupPtr group, const std::vector<std::int8_t>& chi) {
    check_size(*group);
    if (chi.size() != group->order()) throw input_error("coboundary: chi must be total on G");
    TwoCocycle w;
    w.group_ = group;
    std::size_t m = group->order();
    w.table_.resize(m * m);
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t h = 0; h < m; ++h) {
        std::size_t gh = static_cast<std::size_t>(group->mul(static_cast<int>(g), static_cast<int>(h)));
        w.table_[g * m + h] = static_cast<std::int8_t>(chi[gh] * chi[g] * chi[h] * chi[0]);
      }
    if (w.at(0, 0) != 1) throw engine_error("coboundary: normalization slipped");
    return w;
  }

  GroupPtr group() const { return group_; }
  int at(int g, int h) const {
    return table_[static_cast<std::size_t>(g) * group_->order() + static_cast<std::size_t>(h)];
  }

  bool is_trivial() const {
    for (std::int8_t s : table_)
      if (s != 1) return false;
    return true;
  }

  friend bool operator==(const TwoCocycle& a, const TwoCocycle& b) {
    return a.group_ == b.group_ && a.table_ == b.table_;
  }

  /// Cocycle identity on every triple. O(|G|^3).
  static bool verify_exhaustive(const TwoCocycle& w) {
    int m = static_cast<int>(w.group_->order());
    for (int g = 0; g < m; ++g)
      for (int h = 0; h < m; ++h) {
        int gh = w.group_->mul(g, h);
        for (int k = 0; k < m; ++k) {
          int hk = w.group_->mul(h, k);
          if (w.at(h, k) * w.at(g, hk) != w.at(gh, k) * w.at(g, h)) return false;
        }
      }
    return true;
  }

  static bool verify_sampled(const TwoCocycle& w, std::size_t triples = 1'000'000,
                             std::uint64_t seed = default_seed) {
    Rng rng(seed);
    int m = static_cast<int>(w.group_->order());
    for (std::size_t t = 0; t < triples; ++t) {
      int g = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
      int h = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
      int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
      if (w.at(h, k) * w.at(g, w.group_->mul(h, k)) != w.at(w.group_->mul(g, h), k) * w.at(g, h)) return false;
    }
    return true;
  }

  /// Exhaustive for |G| <= 256, sampled with 10^6 triples above.
  static bool verify(const TwoCocycle& w) {
    return w.group_->order() <= 256 ? verify_exhaustive(w) : verify_sampled(w);
  }

 private:
  static void check_size(const FiniteGroup& g) {
    if (g.order() > table_limit) throw size_limit_error("cocycle: dense table would exceed the size cap");
  }

  GroupPtr group_;
  std::vector<std::int8_t> table_;
};

inline TwoCocycle trivial_cocycle(GroupPtr group) { return TwoCocycle::trivial(std::move(group)); }
inline TwoCocycle cocycle_from_bilinear_form(GroupPtr group, const std::vector<std::vector<int>>& form) {
  return TwoCocycle::from_bilinear_form(std::move(group), form);
}
inline bool verify_cocycle(const TwoCocycle& w) { return TwoCocycle::verify(w); }

/// A sign function chi on a subgroup H trivializing the restricted cocycle:
///
///   w(h1,h2) = chi(h1 h2) chi(h1) chi(h2)   for all h1,h2 in H
///
/// (values are +-1, so inverses equal themselves). chi(e) = +1 always.
class SignCharacter {
 public:
  SignCharacter() = default;
  SignCharacter(Subgroup subgroup, std::vector<std::int8_t> values)
      : subgroup_(std::move(subgroup)), values_(std::move(values)) {
    if (values_.size() != subgroup_.members.size()) throw input_error("character: values must be total on H");
    for (std::int8_t v : values_)
      if (v != 1 && v != -1) throw input_error("character: values must be +1/-1");
    if (value(0) != 1) throw input_error("character: chi(e) must be +1");
  }

  const Subgroup& subgroup() const { return subgroup_; }

  /// Value at a member id of H.
  int value(int id) const {
    auto it = std::lower_bound(subgroup_.members.begin(), subgroup_.members.end(), id);
    if (it == subgroup_.members.end() || *it != id) throw input_error("character: id not in subgroup");
    return values_[static_cast<std::size_t>(it - subgroup_.members.begin())];
  }

  bool is_trivial() const {
    for (std::int8_t v : values_)
      if (v != 1) return false;
    return true;
  }

  friend bool operator==(const SignCharacter& a, const SignCharacter& b) {
    return a.subgroup_ == b.subgroup_ && a.values_ == b.values_;
  }

 private:
  Subgroup subgroup_;
  std::vector<std::int8_t> values_;  // aligned with subgroup_.members
};

/// Returns a witness pair (h1,h2) violating the coboundary condition, or
/// nothing when chi trivializes w|H.
inline std::optional<std::pair<int, int>> coboundary_violation(const TwoCocycle& w, const SignCharacter& chi) {
  const auto& h = chi.subgroup();
  for (int a : h.members)
    for (int b : h.members) {
      int ab = h.parent->mul(a, b);
      if (w.at(a, b) != chi.value(ab) * chi.value(a) * chi.value(b)) return std::make_pair(a, b);
    }
  return std::nullopt;
}

/// Validated constructor from a full value table (member id -> sign).
/// Rejects tables violating the coboundary condition, naming a witness pair.
inline SignCharacter character_from_values(const TwoCocycle& w, const Subgroup& h,
                                           const std::map<int, int>& values) {
  if (w.group() != h.parent) throw input_error("character_from_values: subgroup/cocycle group mismatch");
  std::vector<std::int8_t> v;
  v.reserve(h.members.size());
  for (int id : h.members) {
    auto it = values.find(id);
    if (it == values.end()) throw input_error("character_from_values: missing value for a member of H");
    v.push_back(static_cast<std::int8_t>(it->second));
  }
  if (values.size() != h.members.size())
    throw input_error("character_from_values: table mentions ids outside H");
  SignCharacter chi(h, std::move(v));
  if (auto bad = coboundary_violation(w, chi)) {
    std::ostringstream os;
    os << "invalid trivialization: coboundary condition fails at pair (" << bad->first << ", " << bad->second
       << ")";
    throw input_error(os.str());
  }
  return chi;
}

/// chi == +1 on H; valid exactly when w restricts trivially to H.
inline SignCharacter trivial_character(const TwoCocycle& w, const Subgroup& h) {
  std::map<int, int> values;
  for (int id : h.members) values[id] = 1;
  return character_from_values(w, h, values);
}

/// Extends generator values to all of H along products using
/// chi(ab) = w(a,b) chi(a) chi(b), then validates the full table. With a
/// nontrivial w this reaches non-homomorphic trivializations from a handful
/// of generator values.
inline SignCharacter character_from_generator_values(const TwoCocycle& w, const Subgroup& h,
                                                     const std::map<int, int>& gen_values) {
  if (w.group() != h.parent) throw input_error("character: subgroup/cocycle group mismatch");
  std::map<int, int> known{{0, 1}};
  for (const auto& [id, s] : gen_values) {
    if (!h.contains(id)) throw input_error("character: generator value for an id outside H");
    if (s != 1 && s != -1) throw input_error("character: values must be +1/-1");
    auto [it, fresh] = known.emplace(id, s);
    if (!fresh && it->second != s) throw input_error("character: conflicting generator values");
  }
  bool grew = true;
  while (grew && known.size() < h.members.size()) {
    grew = false;
    std::vector<std::pair<int, int>> base(known.begin(), known.end());
    for (const auto& [a, sa] : base)
      for (const auto& [b, sb] : base) {
        int ab = h.parent->mul(a, b);
        int sab = w.at(a, b) * sa * sb;
        auto [it, fresh] = known.emplace(ab, sab);
        if (fresh)
          grew = true;
        else if (it->second != sab)
          throw input_error("character: generator values admit no consistent extension");
      }
  }
  if (known.size() != h.members.size())
    throw input_error("character: generator values do not reach all of H");
  return character_from_values(w, h, known);
}

/// Deterministic trivialization of w|H, or nothing when the restricted class
/// is nontrivial. Solved as a linear system over GF(2) on the coboundary
/// equations; free variables are set to +1 in member order.
inline std::optional<SignCharacter> solve_trivialization(const TwoCocycle& w, const Subgroup& h) {
  if (w.group() != h.parent) throw input_error("solve_trivialization: subgroup/cocycle group mismatch");
  const std::size_t n = h.members.size();
  std::map<int, int> pos;  // member id -> variable index
  for (std::size_t i = 0; i < n; ++i) pos[h.members[i]] = static_cast<int>(i);

  // Row = bitmask over n variables plus RHS bit at position n.
  const std::size_t words = (n + 1 + 63) / 64;
  auto bit = [&](std::vector<std::uint64_t>& row, std::size_t i) { row[i / 64] ^= (std::uint64_t{1} << (i % 64)); };
  auto get = [&](const std::vector<std::uint64_t>& row, std::size_t i) {
    return (row[i / 64] >> (i % 64)) & 1;
  };

  std::vector<std::vector<std::uint64_t>> pivots(n);  // pivot row per leading variable
  std::vector<char> has_pivot(n, 0);

  auto reduce_insert = [&](std::vector<std::uint64_t> row) -> bool {
    for (;;) {
      std::size_t lead = n;
      for (std::size_t i = 0; i < n; ++i)
        if (get(row, i)) {
          lead = i;
          break;
        }
      if (lead == n) return !get(row, n);  // empty row: consistent iff RHS is 0
      if (!has_pivot[lead]) {
        pivots[lead] = std::move(row);
        has_pivot[lead] = 1;
        return true;
      }
      for (std::size_t k = 0; k < words; ++k) row[k] ^= pivots[lead][k];
    }
  };

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int ab = h.parent->mul(h.members[a], h.members[b]);
      std::vector<std::uint64_t> row(words, 0);
      bit(row, a);
      bit(row, b);
      bit(row, static_cast<std::size_t>(pos.at(ab)));  // double hits cancel over GF(2)
      if (w.at(h.members[a], h.members[b]) < 0) bit(row, n);
      if (!reduce_insert(std::move(row))) return std::nullopt;
    }

  // Back-substitute with free variables = 0 (chi = +1), highest pivot first.
  std::vector<int> x(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    if (!has_pivot[i]) continue;
    int v = static_cast<int>(get(pivots[i], n));
    for (std::size_t j = i + 1; j < n; ++j)
      if (get(pivots[i], j)) v ^= x[j];
    x[i] = v;
  }
  std::vector<std::int8_t> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = x[i] ? -1 : 1;
  SignCharacter chi(h, std::move(values));
  if (coboundary_violation(w, chi)) throw engine_error("solve_trivialization: solver produced an invalid chi");
  return chi;
}

/// Pointwise product of a trivialization with a {+1,-1}-valued homomorphism
/// psi on the same subgroup (psi given as member id -> sign). Rejects psi
/// that are not homomorphisms.
inline SignCharacter twist_character(const SignCharacter& chi, const std::map<int, int>& psi) {
  const auto& h = chi.subgroup();
  if (psi.size() != h.members.size()) throw input_error("twist_character: psi must be total on H");
  for (int id : h.members) {
    auto it = psi.find(id);
    if (it == psi.end()) throw input_error("twist_character: psi must be total on H");
    if (it->second != 1 && it->second != -1) throw input_error("twist_character: psi values must be +1/-1");
  }
  for (int a : h.members)
    for (int b : h.members)
      if (psi.at(h.parent->mul(a, b)) != psi.at(a) * psi.at(b))
        throw input_error("twist_character: psi is not a homomorphism");
  std::vector<std::int8_t> values;
  values.reserve(h.members.size());
  for (int id : h.members) values.push_back(static_cast<std::int8_t>(chi.value(id) * psi.at(id)));
  return SignCharacter(h, std::move(values));
}

}  // namespace fop
