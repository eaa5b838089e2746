#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fop/errors.hpp"
#include "fop/signed_perm.hpp"

namespace fop {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A fully enumerated finite group. Elements are signed permutations of a
/// fixed finite set (a faithful datum); plain permutation groups carry all-+1
/// signs. Element ids are 0..order()-1 with the identity always at id 0.
///
/// Multiplication uses a dense id table when the order is small enough,
/// otherwise it composes data and looks the product up. All state is
/// immutable after construction and safe to share across threads.
class FiniteGroup {
 public:
  static constexpr std::size_t default_size_limit = std::size_t{1} << 20;
  static constexpr std::size_t dense_table_limit = 4096;

  enum class Kind { Generic, ElementaryAbelian, DihedralAffine, WreathZ2Zn };

  /// Structural tag recording which constructor produced the group, plus its
  /// parameter. Used for element-literal syntax and form-based cocycles.
  struct Meta {
    Kind kind = Kind::Generic;
    int n = 0;  // constructor parameter (rank, n of Z/n, ...)
  };

  std::size_t order() const { return data_.size(); }
  int identity() const { return 0; }
  const Meta& meta() const { return meta_; }
  int points() const { return data_.empty() ? 0 : static_cast<int>(data_[0].size()); }

  const SignedPerm& datum(int id) const { return data_[static_cast<std::size_t>(id)]; }

  int mul(int a, int b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)];
    return id_of(datum(a).compose(datum(b)));
  }

  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

  /// g x g^-1
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }

  /// Id of an element given by its datum; -1 if not a member.
  int find(const SignedPerm& d) const {
    auto it = index_.find(d);
    return it == index_.end() ? -1 : it->second;
  }

  int id_of(const SignedPerm& d) const {
    int id = find(d);
    if (id < 0) throw input_error("element not in group: " + d.to_string());
    return id;
  }

  /// Builds a group from a complete, closed element list. data[0] must be
  /// the identity. Intended for the named constructors below; the closure
  /// property is the caller's responsibility (the dense-table build will
  /// surface any violation).
  static GroupPtr from_elements(std::vector<SignedPerm> data, Meta meta) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->data_ = std::move(data);
    g->meta_ = meta;
    if (g->data_.empty() || !g->data_[0].is_identity())
      throw engine_error("group construction: identity must be element 0");
    for (std::size_t i = 0; i < g->data_.size(); ++i) {
      if (g->data_[i].size() != g->data_[0].size()) throw input_error("group elements act on different sets");
      if (!g->index_.emplace(g->data_[i], static_cast<int>(i)).second)
        throw engine_error("group construction: duplicate element");
    }
    g->inv_.resize(g->data_.size());
    for (std::size_t i = 0; i < g->data_.size(); ++i) {
      int j = g->find(g->data_[i].inverse());
      if (j < 0) throw engine_error("group construction: inverse not in element list");
      g->inv_[i] = j;
    }
    if (g->order() <= dense_table_limit) {
      g->mul_table_.resize(g->order() * g->order());
      for (std::size_t a = 0; a < g->order(); ++a)
        for (std::size_t b = 0; b < g->order(); ++b) {
          int p = g->find(g->data_[a].compose(g->data_[b]));
          if (p < 0) throw engine_error("group construction: element list not closed");
          g->mul_table_[a * g->order() + b] = p;
        }
    }
    return g;
  }

 private:
  FiniteGroup() = default;

  std::vector<SignedPerm> data_;
  std::map<SignedPerm, int> index_;
  std::vector<int> inv_;
  std::vector<int> mul_table_;  // empty when order > dense_table_limit
  Meta meta_;
};

/// Closure of a generating set of signed permutations on a common set.
/// Element order is deterministic: breadth-first from the identity, products
/// explored as element*generator with generators in the given order.
inline GroupPtr group_from_generators(const std::vector<SignedPerm>& gens,
                                      std::size_t size_limit = FiniteGroup::default_size_limit) {
  std::size_t npoints = gens.empty() ? 1 : gens[0].size();
  for (const auto& g : gens)
    if (g.size() != npoints) throw input_error("group_from_generators: generators act on different sets");

  std::vector<SignedPerm> data{SignedPerm::identity(npoints)};
  std::map<SignedPerm, int> seen{{data[0], 0}};
  for (std::size_t head = 0; head < data.size(); ++head) {
    for (const auto& g : gens) {
      SignedPerm next = data[head].compose(g);
      if (seen.emplace(next, static_cast<int>(data.size())).second) {
        data.push_back(std::move(next));
        if (data.size() > size_limit) throw size_limit_error("group_from_generators: closure exceeds size limit");
      }
    }
  }
  return FiniteGroup::from_elements(std::move(data), {FiniteGroup::Kind::Generic, 0});
}

/// (Z/2)^n with elements indexed by bit-vectors (id bit k = coordinate k);
/// group law is XOR of ids. Faithful datum: sign flips on n points.
inline GroupPtr elementary_abelian(int n) {
  if (n < 1 || n > 16) throw input_error("elementary_abelian: n must be in 1..16");
  std::vector<SignedPerm> data;
  data.reserve(std::size_t{1} << n);
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::vector<std::int8_t> sg(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      img[static_cast<std::size_t>(k)] = k;
      sg[static_cast<std::size_t>(k)] = ((v >> k) & 1) ? -1 : 1;
    }
    data.emplace_back(std::move(img), std::move(sg));
  }
  return FiniteGroup::from_elements(std::move(data), {FiniteGroup::Kind::ElementaryAbelian, n});
}

/// Dihedral group of order 2n as affine maps x -> a*x + b on Z/n, a = +-1.
/// Ids: rotations (a=+1) first by b, then reflections (a=-1) by b. The datum
/// is the affine permutation with a constant sign layer equal to a, which
/// keeps the realization faithful for n = 2 as well.
inline GroupPtr dihedral_affine(int n) {
  if (n < 2) throw input_error("dihedral_affine: n must be >= 2");
  std::vector<SignedPerm> data;
  data.reserve(static_cast<std::size_t>(2 * n));
  for (int a : {1, -1})
    for (int b = 0; b < n; ++b) {
      std::vector<int> img(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = ((a * x + b) % n + n) % n;
      data.emplace_back(std::move(img), std::vector<std::int8_t>(static_cast<std::size_t>(n),
                                                                 static_cast<std::int8_t>(a)));
    }
  return FiniteGroup::from_elements(std::move(data), {FiniteGroup::Kind::DihedralAffine, n});
}

/// Wreath product Z/2 wr Z/n of order n*2^n, acting as signed permutations
/// of n points: element (k, v) rotates x -> x+k and flips the sign at
/// position x when bit x of v is set. Id = k*2^n + v, so the normal subgroup
/// (Z/2)^n sits at ids 0..2^n-1 (see wreath_base_subgroup).
inline GroupPtr wreath_z2_zn(int n, std::size_t size_limit = FiniteGroup::default_size_limit) {
  if (n < 2) throw input_error("wreath_z2_zn: n must be >= 2");
  if (n >= 26 || (static_cast<std::size_t>(n) << n) > size_limit)
    throw size_limit_error("wreath_z2_zn: order n*2^n exceeds size limit");
  std::vector<SignedPerm> data;
  data.reserve(static_cast<std::size_t>(n) << n);
  for (int k = 0; k < n; ++k)
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::vector<std::int8_t> sg(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) {
        img[static_cast<std::size_t>(x)] = (x + k) % n;
        sg[static_cast<std::size_t>(x)] = ((v >> x) & 1) ? -1 : 1;
      }
      data.emplace_back(std::move(img), std::move(sg));
    }
  return FiniteGroup::from_elements(std::move(data), {FiniteGroup::Kind::WreathZ2Zn, n});
}

/// Subgroup as a sorted id set, closed under mul and inverse.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted ascending, always contains 0

  std::size_t order() const { return members.size(); }
  bool contains(int id) const { return std::binary_search(members.begin(), members.end(), id); }

  bool operator==(const Subgroup& o) const { return parent == o.parent && members == o.members; }
};

inline Subgroup subgroup_generated(GroupPtr group, const std::vector<int>& gen_ids) {
  for (int g : gen_ids)
    if (g < 0 || static_cast<std::size_t>(g) >= group->order()) throw input_error("subgroup_generated: id out of range");
  std::vector<int> work{0};
  std::vector<char> seen(group->order(), 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < work.size(); ++head)
    for (int g : gen_ids) {
      int next = group->mul(work[head], g);
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = 1;
        work.push_back(next);
      }
    }
  std::sort(work.begin(), work.end());
  return Subgroup{std::move(group), std::move(work)};
}

inline Subgroup trivial_subgroup(GroupPtr group) { return Subgroup{std::move(group), {0}}; }

inline Subgroup full_subgroup(GroupPtr group) {
  std::vector<int> all(group->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return Subgroup{std::move(group), std::move(all)};
}

inline bool is_subgroup(const Subgroup& h) {
  if (h.members.empty() || h.members[0] != 0) return false;
  for (int a : h.members) {
    if (!h.contains(h.parent->inv(a))) return false;
    for (int b : h.members)
      if (!h.contains(h.parent->mul(a, b))) return false;
  }
  return true;
}

/// The base (Z/2)^n of a group built by wreath_z2_zn.
inline Subgroup wreath_base_subgroup(GroupPtr group) {
  if (group->meta().kind != FiniteGroup::Kind::WreathZ2Zn)
    throw input_error("wreath_base_subgroup: group was not built by wreath_z2_zn");
  std::vector<int> members(std::size_t{1} << group->meta().n);
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = static_cast<int>(i);
  return Subgroup{std::move(group), std::move(members)};
}

/// Right coset space G = union of g_i H. reps are the minimal element id of
/// each coset in ascending order, so reps[0] is the identity. coset_of maps
/// every g to (rep index j, h) with g = reps[j] * h exactly.
struct CosetSpace {
  GroupPtr parent;
  Subgroup subgroup;
  std::vector<int> reps;
  std::vector<std::pair<int, int>> coset_of;  // id -> (rep index, h id)

  std::size_t count() const { return reps.size(); }
};

inline CosetSpace right_cosets(GroupPtr group, const Subgroup& h) {
  if (h.parent != group) throw input_error("right_cosets: subgroup belongs to a different group");
  if (!is_subgroup(h)) throw input_error("right_cosets: member set is not a subgroup");
  CosetSpace cs;
  cs.parent = group;
  cs.subgroup = h;
  cs.coset_of.assign(group->order(), {-1, -1});
  for (std::size_t g = 0; g < group->order(); ++g) {
    if (cs.coset_of[g].first >= 0) continue;
    int rep = static_cast<int>(g);  // minimal id in its coset: the sweep is ascending
    int j = static_cast<int>(cs.reps.size());
    cs.reps.push_back(rep);
    for (int hh : h.members) cs.coset_of[static_cast<std::size_t>(group->mul(rep, hh))] = {j, hh};
  }
  return cs;
}

inline Subgroup conjugate_subgroup(int g, const Subgroup& h) {
  std::vector<int> members;
  members.reserve(h.members.size());
  for (int x : h.members) members.push_back(h.parent->conjugate(g, x));
  std::sort(members.begin(), members.end());
  return Subgroup{h.parent, std::move(members)};
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) throw input_error("intersect: subgroups of different groups");
  std::vector<int> members;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(members));
  return Subgroup{a.parent, std::move(members)};
}

}  // namespace fop
