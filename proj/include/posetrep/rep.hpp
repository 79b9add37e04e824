#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetrep/linalg.hpp"
#include "posetrep/poset.hpp"

namespace posetrep {

/// Dimension vector (d0; d_i) with d_i the successive quotient dimensions
/// dim(V_i / sum of the spaces below i).
struct DimVector {
  std::size_t d0 = 0;
  std::vector<std::size_t> quotient_dims;
  bool operator==(const DimVector&) const = default;
  std::string str() const;
};

/// Plain dimensions (d0; dim V_i), the profile entering slope computations.
struct RawDimProfile {
  std::size_t d0 = 0;
  std::vector<std::size_t> raw_dims;
  bool operator==(const RawDimProfile&) const = default;
  std::string str() const;
};

/// A representation of a poset: one subspace per element, nested along the
/// order. Immutable after construction; construction validates nesting.
class SubspaceRep {
 public:
  SubspaceRep(Poset poset, std::size_t ambient_dim, std::vector<Subspace> spaces);

  const Poset& poset() const { return poset_; }
  std::size_t ambient_dim() const { return ambient_; }
  const Subspace& space(std::size_t i) const { return spaces_[i]; }
  const std::vector<Subspace>& spaces() const { return spaces_; }

  bool operator==(const SubspaceRep&) const = default;

  /// Same spaces listed under a permuted element order: new_rep.space(k) =
  /// space(perm[k]) over the given poset (which must have matching relations).
  SubspaceRep relabel(const Poset& target, const std::vector<std::size_t>& perm) const;

  std::string str() const;

 private:
  Poset poset_;
  std::size_t ambient_;
  std::vector<Subspace> spaces_;
};

SubspaceRep make_rep(const Poset& poset, std::size_t ambient_dim,
                     std::vector<Subspace> spaces);

DimVector dim_vector(const SubspaceRep& rep);
RawDimProfile raw_profile(const SubspaceRep& rep);

SubspaceRep direct_sum(const SubspaceRep& a, const SubspaceRep& b);

/// Basis of { C : C V_i <= W_i for all i }, as ambient(target) x
/// ambient(source) matrices.
struct HomSpace {
  std::vector<RationalMatrix> basis;
  std::size_t dim() const { return basis.size(); }
};

HomSpace hom_space(const SubspaceRep& source, const SubspaceRep& target);

enum class RepClass { Brick, Indecomposable, Decomposable, Unknown };

struct Classification {
  RepClass kind = RepClass::Unknown;
  std::size_t end_dim = 0;
  std::size_t radical_dim = 0;
  std::optional<RationalMatrix> idempotent;  // witness when Decomposable
  std::string str() const;
};

/// dim End = 1 -> Brick. Otherwise the radical of End is computed from the
/// trace form of the regular representation; a one-dimensional quotient means
/// Indecomposable, and a splitting of some trial element's minimal polynomial
/// yields an exact idempotent witness (Decomposable). Unresolved quotients
/// report Unknown rather than guessing.
Classification classify(const SubspaceRep& rep, std::uint64_t seed = 1);

enum class EquivKind { Equivalent, Inequivalent, ProbablyInequivalent };

struct EquivalenceResult {
  EquivKind kind;
  std::optional<RationalMatrix> witness;  // invertible C with C(V_i) = W_i
  double failure_bound = 0.0;             // per-run bound on a wrong negative
  std::string str() const;
};

EquivalenceResult linearly_equivalent(const SubspaceRep& a, const SubspaceRep& b,
                                      std::uint64_t seed = 1, int trials = 8);

struct QuiteSincereResult {
  bool quite_sincere = false;
  bool unknown = false;      // indecomposability could not be resolved
  std::string violated;      // empty, or the violated clause
};

/// Checks pi(i) != 0, pi(i) != V, pi(i) != pi(j) for i < j, plus
/// indecomposability through classify.
QuiteSincereResult is_quite_sincere(const SubspaceRep& rep, std::uint64_t seed = 1);

/// Dual system over the opposite poset. Either explicit complements (one per
/// element) or the canonical orthogonal complements.
SubspaceRep dual_rep(const SubspaceRep& rep,
                     const std::optional<std::vector<Subspace>>& complements = std::nullopt);

/// Family member over extend_poset(poset, I): the new space is
/// sum of the spaces over I plus the line through v1 + lambda*v2.
/// Construction verifies linear independence of v1, v2 and the probe
/// intersection condition at two auxiliary parameter values.
SubspaceRep extended_rep(const SubspaceRep& rep, const std::vector<std::string>& I,
                         const RatVec& v1, const RatVec& v2, const Rat& lambda,
                         const std::string& new_id = "p~");

}  // namespace posetrep
