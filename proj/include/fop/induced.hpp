#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fop/cocycle.hpp"
#include "fop/errors.hpp"
#include "fop/group.hpp"
#include "fop/rng.hpp"

namespace fop {

/// Projective monomial representation Ind_H^G(chi) on the right cosets of H.
/// Basis index i stands for the coset of reps[i]; the identity coset is
/// index 0 and plays the role of the base point m_0, with h m_0 = chi(h) m_0
/// for h in H.
///
/// For each group element g the representing matrix is the signed
/// permutation sending basis index i to index j with sign s, where
/// g * g_i = g_j * h via the coset decomposition and
///
///   s = w(g, g_i) * w(g_j, h) * chi(h).
///
/// This is the sign produced by the tensor construction F[G] (x)_H F m_0;
/// the binding contract is projectivity [g][g'] = w(g,g') [g g'], which
/// holds for this convention and is enforced by a sampled check at
/// construction and exhaustive tests.
class InducedRep {
 public:
  InducedRep(GroupPtr group, TwoCocycle cocycle, Subgroup subgroup, SignCharacter chi)
      : group_(std::move(group)),
        cocycle_(std::move(cocycle)),
        subgroup_(std::move(subgroup)),
        chi_(std::move(chi)) {
    if (cocycle_.group() != group_) throw input_error("induce: cocycle lives on a different group");
    if (subgroup_.parent != group_) throw input_error("induce: subgroup of a different group");
    if (!(chi_.subgroup() == subgroup_)) throw input_error("induce: character defined on a different subgroup");
    if (auto bad = coboundary_violation(cocycle_, chi_))
      throw input_error("induce: chi does not trivialize the restricted cocycle");

    cosets_ = right_cosets(group_, subgroup_);
    const int dim = static_cast<int>(cosets_.count());
    matrices_.reserve(group_->order());
    for (std::size_t g = 0; g < group_->order(); ++g) {
      std::vector<int> img(static_cast<std::size_t>(dim));
      std::vector<std::int8_t> sg(static_cast<std::size_t>(dim));
      for (int i = 0; i < dim; ++i) {
        int gi = cosets_.reps[static_cast<std::size_t>(i)];
        int t = group_->mul(static_cast<int>(g), gi);
        auto [j, h] = cosets_.coset_of[static_cast<std::size_t>(t)];
        int gj = cosets_.reps[static_cast<std::size_t>(j)];
        img[static_cast<std::size_t>(i)] = j;
        sg[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(
            cocycle_.at(static_cast<int>(g), gi) * cocycle_.at(gj, h) * chi_.value(h));
      }
      matrices_.emplace_back(std::move(img), std::move(sg));
    }
    spot_check_projectivity();
  }

  GroupPtr group() const { return group_; }
  const TwoCocycle& cocycle() const { return cocycle_; }
  const Subgroup& subgroup() const { return subgroup_; }
  const SignCharacter& character() const { return chi_; }
  const CosetSpace& cosets() const { return cosets_; }
  int dim() const { return static_cast<int>(cosets_.count()); }

  const SignedPerm& matrix(int g) const { return matrices_[static_cast<std::size_t>(g)]; }

 private:
  void spot_check_projectivity() const {
    Rng rng(default_seed);
    const std::size_t m = group_->order();
    const std::size_t trials = m <= 24 ? m * m : 512;
    for (std::size_t t = 0; t < trials; ++t) {
      int g, h;
      if (m <= 24) {
        g = static_cast<int>(t / m);
        h = static_cast<int>(t % m);
      } else {
        g = static_cast<int>(rng.below(m));
        h = static_cast<int>(rng.below(m));
      }
      const SignedPerm prod = matrix(g).compose(matrix(h));
      const SignedPerm& direct = matrix(group_->mul(g, h));
      int w = cocycle_.at(g, h);
      for (int i = 0; i < dim(); ++i)
        if (prod.image(i) != direct.image(i) || prod.sign(i) != w * direct.sign(i))
          throw engine_error("induce: projectivity violated (sign convention bug)");
    }
  }

  GroupPtr group_;
  TwoCocycle cocycle_;
  Subgroup subgroup_;
  SignCharacter chi_;
  CosetSpace cosets_;
  std::vector<SignedPerm> matrices_;
};

inline InducedRep induce(GroupPtr group, TwoCocycle cocycle, Subgroup subgroup, SignCharacter chi) {
  return InducedRep(std::move(group), std::move(cocycle), std::move(subgroup), std::move(chi));
}

/// Cached accessor for the representing matrix of g.
inline const SignedPerm& rep_matrix(const InducedRep& v, int g) { return v.matrix(g); }

/// The cocyclic representation on F[G]: (g, [g']) -> w(g,g') [g g'].
/// Equals induction from the trivial subgroup.
inline InducedRep cocyclic_regular_rep(GroupPtr group, TwoCocycle cocycle) {
  Subgroup e = trivial_subgroup(group);
  SignCharacter chi(e, {1});
  return InducedRep(std::move(group), std::move(cocycle), std::move(e), std::move(chi));
}

/// |V|: the plain permutation action on cosets obtained by forgetting signs.
/// The cocycle becomes trivial and chi becomes +1. Idempotent.
inline InducedRep forget_signs(const InducedRep& v) {
  TwoCocycle triv = TwoCocycle::trivial(v.group());
  SignCharacter chi = trivial_character(triv, v.subgroup());
  return InducedRep(v.group(), std::move(triv), v.subgroup(), std::move(chi));
}

}  // namespace fop
