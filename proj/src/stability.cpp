#include "posetrep/stability.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace posetrep {

std::string Weight::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < alphas.size(); ++i) os << (i ? "," : "") << to_string(alphas[i]);
  os << ")";
  return os.str();
}

std::string SubdimVector::str() const {
  std::ostringstream os;
  os << "(" << k << ";";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  if (witness) os << " U=" << witness->str();
  return os.str();
}

bool dominates(const SubdimVector& lhs, const SubdimVector& rhs) {
  if (lhs.k > rhs.k) return false;
  bool strict = lhs.k < rhs.k;
  for (std::size_t i = 0; i < lhs.c.size(); ++i) {
    if (lhs.c[i] < rhs.c[i]) return false;
    if (lhs.c[i] > rhs.c[i]) strict = true;
  }
  return strict;
}

Rat lambda_chi(const SubspaceRep& rep, const Weight& chi) {
  if (rep.ambient_dim() == 0) throw ZeroAmbient("lambda_chi of a zero space");
  if (chi.size() != rep.poset().size())
    throw DimensionMismatch("weight length != poset size");
  Rat acc = 0;
  for (std::size_t i = 0; i < chi.size(); ++i)
    acc += chi.alphas[i] * Rat(static_cast<long>(rep.space(i).dim()));
  return acc / Rat(static_cast<long>(rep.ambient_dim()));
}

Rat subdim_slope(const SubdimVector& d, const Weight& chi) {
  if (chi.size() != d.c.size()) throw DimensionMismatch("weight length != profile length");
  Rat acc = 0;
  for (std::size_t i = 0; i < chi.size(); ++i)
    acc += chi.alphas[i] * Rat(static_cast<long>(d.c[i]));
  return acc / Rat(static_cast<long>(d.k));
}

SubdimVector restrict(const SubspaceRep& rep, const Subspace& U) {
  if (U.dim() == 0) throw ZeroSubspace("restrict: U must be nonzero");
  if (U.ambient_dim() != rep.ambient_dim())
    throw DimensionMismatch("restrict: ambient dims differ");
  SubdimVector d;
  d.k = U.dim();
  for (const Subspace& v : rep.spaces()) d.c.push_back(intersect(v, U).dim());
  d.witness = U;
  return d;
}

std::string StabilityVerdict::str() const {
  std::ostringstream os;
  switch (kind) {
    case StabilityKind::Stable: os << "Stable"; break;
    case StabilityKind::StrictlySemistable: os << "StrictlySemistable"; break;
    case StabilityKind::Unstable: os << "Unstable"; break;
  }
  if (certificate) os << " at " << certificate->str();
  return os;
}

StabilityVerdict is_stable(const SubspaceRep& rep, const Weight& chi,
                           const std::vector<SubdimVector>& subdims) {
  if (subdims.empty() && rep.ambient_dim() > 1)
    throw EmptyList("is_stable: empty subdimension list");
  Rat lambda = lambda_chi(rep, chi);
  StabilityVerdict v{StabilityKind::Stable, std::nullopt, lambda};
  std::optional<SubdimVector> tight;
  for (const SubdimVector& d : subdims) {
    Rat mu = subdim_slope(d, chi);
    if (mu > lambda) return {StabilityKind::Unstable, d, lambda};
    if (mu == lambda && !tight) tight = d;
  }
  if (tight) return {StabilityKind::StrictlySemistable, tight, lambda};
  return v;
}

// (out-of-line to keep the verdict printable from the header)

std::vector<SubdimVector> search_subdims(const SubspaceRep& rep, const SearchOptions& opts) {
  std::size_t n0 = rep.ambient_dim();
  // lattice closure of the representation spaces under sum and intersection
  std::vector<Subspace> pool;
  auto add = [&](const Subspace& s) {
    auto it = std::lower_bound(pool.begin(), pool.end(), s,
                               [](const Subspace& a, const Subspace& b) {
                                 return compare(a, b) < 0;
                               });
    if (it != pool.end() && *it == s) return false;
    pool.insert(it, s);
    return true;
  };
  std::vector<Subspace> work;
  for (const Subspace& s : rep.spaces())
    if (add(s)) work.push_back(s);
  for (std::size_t i = 0; i < n0; ++i) {
    Subspace line(n0, {unit_vector(n0, i)});
    if (add(line)) work.push_back(line);
  }
  for (const Subspace& s : opts.extra_witnesses) {
    if (s.ambient_dim() != n0) throw DimensionMismatch("witness ambient dim");
    if (add(s)) work.push_back(s);
  }
  while (!work.empty()) {
    if (pool.size() > opts.budget)
      throw BudgetExceeded("search_subdims: candidate pool exceeded " +
                           std::to_string(opts.budget));
    Subspace s = work.back();
    work.pop_back();
    std::vector<Subspace> snapshot = pool;
    for (const Subspace& t : snapshot) {
      Subspace u = sum(s, t);
      if (add(u)) work.push_back(u);
      Subspace w = intersect(s, t);
      if (add(w)) work.push_back(w);
    }
  }
  std::vector<SubdimVector> found;
  for (const Subspace& s : pool) {
    if (s.dim() == 0 || s.dim() >= n0) continue;
    found.push_back(restrict(rep, s));
  }
  // drop dominated profiles and duplicates
  std::vector<SubdimVector> maximal;
  for (std::size_t i = 0; i < found.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < found.size() && keep; ++j) {
      if (i == j) continue;
      if (dominates(found[j], found[i])) keep = false;
      if (found[j].same_profile(found[i]) && j < i) keep = false;
    }
    if (keep) maximal.push_back(found[i]);
  }
  std::sort(maximal.begin(), maximal.end(), [](const SubdimVector& a, const SubdimVector& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.c < b.c;
  });
  return maximal;
}

std::string StabilityMatrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << (r ? "\n" : "");
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      os << (c ? " " : "") << to_string(rows[r][c]);
  }
  return os.str();
}

StabilityMatrix build_A_matrix(const SubspaceRep& rep,
                               const std::vector<SubdimVector>& subdims) {
  if (subdims.empty()) throw EmptyList("build_A_matrix: empty subdimension list");
  std::size_t n = rep.poset().size();
  RawDimProfile prof = raw_profile(rep);
  StabilityMatrix A;
  A.m = subdims.size();
  A.n = n;
  for (const SubdimVector& d : subdims) {
    RatVec row(n);
    for (std::size_t i = 0; i < n; ++i)
      row[i] = Rat(static_cast<long>(d.c[i]), static_cast<long>(d.k)) -
               Rat(static_cast<long>(prof.raw_dims[i]), static_cast<long>(prof.d0));
    A.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row(n, Rat(0));
    row[i] = -1;
    A.rows.push_back(std::move(row));
  }
  return A;
}

namespace {

std::vector<Int> canonical_ray(const RatVec& x) {
  Int l = 1;
  for (const Rat& v : x) l = boost::multiprecision::lcm(l, denominator(v));
  std::vector<Int> out;
  Int g = 0;
  for (const Rat& v : x) {
    Int e = numerator(v * Rat(l));
    out.push_back(e);
    g = boost::multiprecision::gcd(g, e);
  }
  if (g > 1)
    for (Int& e : out) e /= g;
  return out;
}

Rat dot(const RatVec& a, const std::vector<Rat>& b) {
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

WeightCone extremal_rays(const StabilityMatrix& A) {
  // double description: start from the positive orthant carved out by the -I
  // block, then cut with each subdimension row
  std::size_t n = A.n;
  struct Ray {
    RatVec x;
    std::vector<char> tight;  // per subdim row processed so far
  };
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < n; ++i) {
    Ray r;
    r.x = RatVec(n, Rat(0));
    r.x[i] = 1;
    rays.push_back(std::move(r));
  }
  std::vector<RatVec> cuts(A.rows.begin(), A.rows.begin() + static_cast<std::ptrdiff_t>(A.m));
  for (std::size_t cut_idx = 0; cut_idx < cuts.size(); ++cut_idx) {
    const RatVec& a = cuts[cut_idx];
    std::vector<Ray> keep, plus, minus;
    std::vector<Rat> vals;
    for (Ray& r : rays) {
      Rat v = dot(a, r.x);
      if (v == 0) {
        r.tight.push_back(1);
        keep.push_back(r);
      } else if (v < 0) {
        r.tight.push_back(0);
        minus.push_back(r);
      } else {
        r.tight.push_back(0);
        plus.push_back(r);
      }
    }
    // pair adjacent rays across the hyperplane
    auto zero_set = [&](const Ray& r) {
      // indices of tight subdim rows plus tight coordinate hyperplanes
      std::vector<std::size_t> z;
      for (std::size_t t = 0; t < r.tight.size(); ++t)
        if (r.tight[t]) z.push_back(t);
      for (std::size_t i = 0; i < n; ++i)
        if (r.x[i] == 0) z.push_back(cuts.size() + i);
      return z;
    };
    std::vector<Ray> born;
    for (const Ray& rp : plus)
      for (const Ray& rm : minus) {
        // adjacency: no third ray's zero set contains the common zero set
        std::vector<std::size_t> zp = zero_set(rp), zm = zero_set(rm), common;
        std::set_intersection(zp.begin(), zp.end(), zm.begin(), zm.end(),
                              std::back_inserter(common));
        bool adjacent = true;
        auto covers = [&](const Ray& other) {
          std::vector<std::size_t> zo = zero_set(other);
          return std::includes(zo.begin(), zo.end(), common.begin(), common.end());
        };
        for (const Ray& other : rays) {
          if (&other == &rp || &other == &rm) continue;
          if (covers(other)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Rat vp = dot(a, rp.x), vm = dot(a, rm.x);
        Ray nr;
        nr.x = RatVec(n);
        for (std::size_t i = 0; i < n; ++i) nr.x[i] = vp * rm.x[i] - vm * rp.x[i];
        // normalize to keep entries small
        std::vector<Int> c = canonical_ray(nr.x);
        for (std::size_t i = 0; i < n; ++i) nr.x[i] = Rat(c[i]);
        nr.tight.assign(cut_idx + 1, 0);
        for (std::size_t t = 0; t <= cut_idx; ++t)
          nr.tight[t] = dot(cuts[t], nr.x) == 0 ? 1 : 0;
        born.push_back(std::move(nr));
      }
    rays = keep;
    for (Ray& r : minus) rays.push_back(std::move(r));
    for (Ray& r : born) rays.push_back(std::move(r));
  }
  WeightCone cone;
  cone.matrix = A;
  for (const Ray& r : rays) cone.rays.push_back(canonical_ray(r.x));
  std::sort(cone.rays.begin(), cone.rays.end());
  cone.rays.erase(std::unique(cone.rays.begin(), cone.rays.end()), cone.rays.end());
  return cone;
}

ConeMembership cone_membership(const StabilityMatrix& A, const RatVec& chi) {
  if (chi.size() != A.n) throw DimensionMismatch("cone_membership: weight length");
  bool any_zero = false;
  for (const RatVec& row : A.rows) {
    Rat v = dot(row, chi);
    if (v > 0) return ConeMembership::Outside;
    if (v == 0) any_zero = true;
  }
  return any_zero ? ConeMembership::Boundary : ConeMembership::Interior;
}

std::string to_string(ConeMembership m) {
  switch (m) {
    case ConeMembership::Interior: return "Interior";
    case ConeMembership::Boundary: return "Boundary";
    default: return "Outside";
  }
}

ExtendedWeight extend_weight(const SubspaceRep& rep, const Weight& chi,
                             const std::vector<SubdimVector>& subdims, const Subspace& U,
                             const std::string& new_id) {
  if (U.dim() == 0 || U.dim() >= rep.ambient_dim())
    throw ZeroSubspace("extend_weight: U must be proper and nonzero");
  StabilityVerdict v = is_stable(rep, chi, subdims);
  if (v.kind != StabilityKind::Stable)
    throw NotStable("extend_weight requires a stable input system");
  Rat lambda = v.lambda;
  std::optional<Rat> gap;
  for (const SubdimVector& d : subdims) {
    Rat g = lambda - subdim_slope(d, chi);
    if (!gap || g < *gap) gap = g;
  }
  if (!gap || *gap <= 0) throw ZeroGap("extend_weight: no positive stability gap");
  Poset ext = extend_poset(rep.poset(), {}, new_id);
  std::vector<Subspace> spaces = rep.spaces();
  spaces.push_back(U);
  ExtendedWeight out{SubspaceRep(ext, rep.ambient_dim(), std::move(spaces)),
                     Weight(chi.alphas), *gap};
  out.chi.alphas.push_back(*gap / 2);
  return out;
}

}  // namespace posetrep
