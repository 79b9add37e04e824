#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetrep/rep.hpp"

namespace posetrep {

/// Strictly positive coefficients, one per poset element.
struct Weight {
  RatVec alphas;
  explicit Weight(RatVec a) : alphas(std::move(a)) {
    for (const Rat& x : alphas)
      if (x <= 0) throw Error("weight entries must be strictly positive");
  }
  std::size_t size() const { return alphas.size(); }
  std::string str() const;
};

/// (dim U; dim(V_i n U)) profile of a subspace, optionally with the witness.
struct SubdimVector {
  std::size_t k = 0;
  std::vector<std::size_t> c;
  std::optional<Subspace> witness;
  bool same_profile(const SubdimVector& o) const { return k == o.k && c == o.c; }
  std::string str() const;
};

/// True when lhs makes rhs redundant in every stability inequality:
/// smaller or equal denominator, componentwise larger or equal numerators.
bool dominates(const SubdimVector& lhs, const SubdimVector& rhs);

/// Slope (1/dim V) * sum alpha_i dim V_i. Plain dimensions throughout.
Rat lambda_chi(const SubspaceRep& rep, const Weight& chi);

/// Slope of a subdimension profile under the weight.
Rat subdim_slope(const SubdimVector& d, const Weight& chi);

/// Exact intersection profile of a nonzero subspace.
SubdimVector restrict(const SubspaceRep& rep, const Subspace& U);

enum class StabilityKind { Stable, StrictlySemistable, Unstable };

struct StabilityVerdict {
  StabilityKind kind;
  std::optional<SubdimVector> certificate;  // tight or violating vector
  Rat lambda;                               // the representation's slope
  std::string str() const;
};

/// Compares every listed profile's slope with lambda_chi. The verdict is
/// certified relative to the completeness of the list. An empty list is only
/// legal at ambient dimension 1 (no proper subspaces exist).
StabilityVerdict is_stable(const SubspaceRep& rep, const Weight& chi,
                           const std::vector<SubdimVector>& subdims);

struct SearchOptions {
  std::size_t budget = 4096;              // cap on the candidate pool
  std::vector<Subspace> extra_witnesses;  // user-supplied or numeric hints
};

/// Maximal subdimension vectors found from the lattice closure of the
/// representation spaces (sums and intersections), coordinate lines, and any
/// supplied witnesses. Heuristic: completeness is established per instance by
/// cross validation, not by this procedure.
std::vector<SubdimVector> search_subdims(const SubspaceRep& rep,
                                         const SearchOptions& opts = {});

/// Stability inequalities in matrix form: one row n(d') - n(dim pi) per
/// maximal subdimension vector, then -I.
struct StabilityMatrix {
  std::vector<RatVec> rows;  // m + n rows of length n
  std::size_t m = 0;         // number of subdimension rows
  std::size_t n = 0;
  std::string str() const;
};

StabilityMatrix build_A_matrix(const SubspaceRep& rep,
                               const std::vector<SubdimVector>& subdims);

/// Extremal-ray description of the weight cone. The only extreme point of
/// {A x <= 0} is the origin; rays are canonical integer vectors (gcd 1).
struct WeightCone {
  std::vector<std::vector<Int>> rays;
  StabilityMatrix matrix;
};

WeightCone extremal_rays(const StabilityMatrix& A);

enum class ConeMembership { Interior, Boundary, Outside };

/// Exact sign test of A*chi: any positive row -> Outside; otherwise zeros
/// (from subdimension rows or the positivity block) -> Boundary; all strictly
/// negative -> Interior.
ConeMembership cone_membership(const StabilityMatrix& A, const RatVec& chi);
std::string to_string(ConeMembership m);

struct ExtendedWeight {
  SubspaceRep system;  // (V; V_1..V_n, U) over the poset plus one new element
  Weight chi;          // original weight extended by R/2
  Rat gap;             // R: minimal stability slack of the input
};

/// Adjoins a proper nonzero subspace to a stable system, with the new
/// coefficient set to half the minimal slack, which keeps the extended
/// system stable.
ExtendedWeight extend_weight(const SubspaceRep& rep, const Weight& chi,
                             const std::vector<SubdimVector>& subdims, const Subspace& U,
                             const std::string& new_id = "u");

}  // namespace posetrep
