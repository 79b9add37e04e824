#include "posetrep/rep.hpp"

#include <algorithm>
#include <sstream>

namespace posetrep {

std::string DimVector::str() const {
  std::ostringstream os;
  os << "(" << d0 << ";";
  for (std::size_t i = 0; i < quotient_dims.size(); ++i)
    os << (i ? "," : "") << quotient_dims[i];
  os << ")";
  return os.str();
}

std::string RawDimProfile::str() const {
  std::ostringstream os;
  os << "(" << d0 << ";";
  for (std::size_t i = 0; i < raw_dims.size(); ++i) os << (i ? "," : "") << raw_dims[i];
  os << ")";
  return os.str();
}

SubspaceRep::SubspaceRep(Poset poset, std::size_t ambient_dim, std::vector<Subspace> spaces)
    : poset_(std::move(poset)), ambient_(ambient_dim), spaces_(std::move(spaces)) {
  if (spaces_.size() != poset_.size())
    throw DimensionMismatch("one subspace per poset element required");
  for (const Subspace& s : spaces_)
    if (s.ambient_dim() != ambient_)
      throw DimensionMismatch("subspace ambient dimension mismatch");
  for (std::size_t i = 0; i < poset_.size(); ++i)
    for (std::size_t j = 0; j < poset_.size(); ++j)
      if (poset_.less(i, j) && !contains(spaces_[j], spaces_[i]))
        throw NestingViolation("nesting violated: " + poset_.element(i) + " < " +
                                   poset_.element(j),
                               poset_.element(i), poset_.element(j));
}

SubspaceRep SubspaceRep::relabel(const Poset& target,
                                 const std::vector<std::size_t>& perm) const {
  if (perm.size() != poset_.size() || target.size() != poset_.size())
    throw DimensionMismatch("relabel: size mismatch");
  std::vector<Subspace> spaces;
  for (std::size_t k = 0; k < perm.size(); ++k) spaces.push_back(spaces_[perm[k]]);
  return SubspaceRep(target, ambient_, std::move(spaces));
}

std::string SubspaceRep::str() const {
  std::ostringstream os;
  os << "(Q^" << ambient_;
  for (std::size_t i = 0; i < spaces_.size(); ++i)
    os << "; " << poset_.element(i) << "=" << spaces_[i].str();
  os << ")";
  return os.str();
}

SubspaceRep make_rep(const Poset& poset, std::size_t ambient_dim,
                     std::vector<Subspace> spaces) {
  return SubspaceRep(poset, ambient_dim, std::move(spaces));
}

DimVector dim_vector(const SubspaceRep& rep) {
  DimVector d;
  d.d0 = rep.ambient_dim();
  for (std::size_t i = 0; i < rep.poset().size(); ++i) {
    Subspace below(rep.ambient_dim());
    for (std::size_t j = 0; j < rep.poset().size(); ++j)
      if (rep.poset().less(j, i)) below = sum(below, rep.space(j));
    // the sum below i is contained in V_i, so the quotient dimension is a
    // plain difference
    d.quotient_dims.push_back(rep.space(i).dim() - below.dim());
  }
  return d;
}

RawDimProfile raw_profile(const SubspaceRep& rep) {
  RawDimProfile p;
  p.d0 = rep.ambient_dim();
  for (const Subspace& s : rep.spaces()) p.raw_dims.push_back(s.dim());
  return p;
}

SubspaceRep direct_sum(const SubspaceRep& a, const SubspaceRep& b) {
  if (!(a.poset() == b.poset())) throw PosetMismatch("direct_sum: posets differ");
  std::size_t n = a.ambient_dim(), m = b.ambient_dim();
  std::vector<Subspace> spaces;
  for (std::size_t i = 0; i < a.poset().size(); ++i) {
    std::vector<RatVec> gens;
    for (std::size_t c = 0; c < a.space(i).dim(); ++c) {
      RatVec v(n + m, Rat(0));
      RatVec col = a.space(i).basis().column(c);
      std::copy(col.begin(), col.end(), v.begin());
      gens.push_back(std::move(v));
    }
    for (std::size_t c = 0; c < b.space(i).dim(); ++c) {
      RatVec v(n + m, Rat(0));
      RatVec col = b.space(i).basis().column(c);
      std::copy(col.begin(), col.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
      gens.push_back(std::move(v));
    }
    spaces.emplace_back(n + m, gens);
  }
  return SubspaceRep(a.poset(), n + m, std::move(spaces));
}

HomSpace hom_space(const SubspaceRep& source, const SubspaceRep& target) {
  if (!(source.poset() == target.poset())) throw PosetMismatch("hom_space: posets differ");
  std::size_t n = source.ambient_dim(), m = target.ambient_dim();
  // unknowns: C (m x n) flattened row-major; constraints: for each element i,
  // each source basis vector v and each annihilator row l of the target
  // space:  l . C v = 0
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < source.poset().size(); ++i) {
    Subspace ann = orthogonal_complement(target.space(i));
    if (ann.dim() == 0) continue;  // target space is everything: no constraint
    for (std::size_t c = 0; c < source.space(i).dim(); ++c) {
      RatVec v = source.space(i).basis().column(c);
      for (std::size_t t = 0; t < ann.dim(); ++t) {
        RatVec l = ann.basis().column(t);
        RatVec row(m * n, Rat(0));
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t s = 0; s < n; ++s) row[r * n + s] = l[r] * v[s];
        rows.push_back(std::move(row));
      }
    }
  }
  RationalMatrix A(rows.size(), m * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m * n; ++c) A.at(r, c) = rows[r][c];
  HomSpace hom;
  std::vector<RatVec> ker =
      rows.empty() ? RationalMatrix(0, m * n).kernel() : A.kernel();
  for (const RatVec& k : ker) {
    RationalMatrix C(m, n);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < n; ++s) C.at(r, s) = k[r * n + s];
    hom.basis.push_back(std::move(C));
  }
  return hom;
}

namespace {

/// Coordinates of M in the span of the basis matrices; nullopt if outside.
std::optional<RatVec> coordinates_in(const std::vector<RationalMatrix>& basis,
                                     const RationalMatrix& M) {
  if (basis.empty()) return std::nullopt;
  std::size_t dim = basis[0].rows() * basis[0].cols();
  RationalMatrix A(dim, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t r = 0; r < basis[j].rows(); ++r)
      for (std::size_t c = 0; c < basis[j].cols(); ++c)
        A.at(r * basis[j].cols() + c, j) = basis[j].at(r, c);
  RatVec b(dim);
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) b[r * M.cols() + c] = M.at(r, c);
  auto sol = solve_linear(A, b);
  if (!sol) return std::nullopt;
  return sol->particular;
}

/// Monic minimal polynomial of the element with the given multiplication
/// action (square matrix acting on algebra coordinates), applied to the
/// identity coordinates. Returned as coefficient vector c0..ck of
/// x^k + c_{k-1} x^{k-1} + ... (the leading 1 is included, last entry).
RatVec minimal_polynomial(const RationalMatrix& action, const RatVec& unit) {
  std::size_t d = unit.size();
  std::vector<RatVec> powers;  // coordinates of z^0, z^1, ...
  powers.push_back(unit);
  for (std::size_t k = 1;; ++k) {
    RatVec next = action.apply(powers.back());
    // test dependence of powers[0..k-1] + next
    RationalMatrix A(d, powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t i = 0; i < d; ++i) A.at(i, j) = powers[j][i];
    auto sol = solve_linear(A, next);
    if (sol) {
      // z^k = sum c_j z^j  ->  minimal polynomial x^k - sum c_j x^j
      RatVec poly(powers.size() + 1, Rat(0));
      for (std::size_t j = 0; j < powers.size(); ++j) poly[j] = -sol->particular[j];
      poly[powers.size()] = 1;
      return poly;
    }
    powers.push_back(std::move(next));
    if (k > d + 1) throw Error("minimal polynomial search exceeded algebra dimension");
  }
}

RatVec poly_mul(const RatVec& a, const RatVec& b) {
  RatVec c(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// Division with remainder by a monic divisor.
std::pair<RatVec, RatVec> poly_divmod(RatVec num, const RatVec& den) {
  std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {{Rat(0)}, num};
  RatVec quot(num.size() - dn, Rat(0));
  for (std::size_t top = num.size(); top-- > dn;) {
    Rat f = num[top];
    if (f == 0) continue;
    quot[top - dn] = f;
    for (std::size_t j = 0; j <= dn; ++j) num[top - dn + j] -= f * den[j];
  }
  num.resize(dn ? dn : 1);
  return {quot, num};
}

Rat poly_eval(const RatVec& p, const Rat& x) {
  Rat acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

/// Rational roots of a monic rational polynomial, with multiplicity.
std::vector<std::pair<Rat, int>> rational_roots(RatVec poly) {
  // clear denominators -> integer polynomial; candidate roots p/q with
  // p | constant term and q | leading coefficient
  Int lcm = 1;
  for (const Rat& c : poly) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  std::vector<Int> ip;
  for (const Rat& c : poly) ip.push_back(numerator(c * Rat(lcm)));
  while (ip.size() > 1 && ip.back() == 0) ip.pop_back();
  std::vector<std::pair<Rat, int>> roots;
  // strip x = 0 roots
  int zero_mult = 0;
  std::size_t shift = 0;
  while (shift + 1 < ip.size() && ip[shift] == 0) {
    ++zero_mult;
    ++shift;
  }
  if (zero_mult) roots.emplace_back(Rat(0), zero_mult);
  RatVec work(poly.begin() + static_cast<std::ptrdiff_t>(shift), poly.end());
  Int a0 = ip[shift] < 0 ? Int(-ip[shift]) : ip[shift];
  Int an = ip.back() < 0 ? Int(-ip.back()) : ip.back();
  if (a0 == 0 || an == 0) return roots;
  std::vector<Int> ps, qs;
  for (Int d = 1; d * d <= a0; ++d)
    if (a0 % d == 0) {
      ps.push_back(d);
      ps.push_back(a0 / d);
    }
  for (Int d = 1; d * d <= an; ++d)
    if (an % d == 0) {
      qs.push_back(d);
      qs.push_back(an / d);
    }
  std::vector<Rat> candidates;
  for (const Int& p : ps)
    for (const Int& q : qs) {
      candidates.push_back(Rat(p, q));
      candidates.push_back(Rat(-p, q));
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const Rat& r : candidates) {
    int mult = 0;
    while (work.size() > 1 && poly_eval(work, r) == 0) {
      RatVec lin{-r, Rat(1)};
      work = poly_divmod(work, lin).first;
      ++mult;
    }
    if (mult) roots.emplace_back(r, mult);
  }
  return roots;
}

/// Extended Euclid for u*a + v*b = 1 on coprime monic-ish polynomials.
std::pair<RatVec, RatVec> poly_bezout(const RatVec& a, const RatVec& b) {
  auto normalize = [](RatVec p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
  };
  RatVec r0 = normalize(a), r1 = normalize(b);
  RatVec s0{Rat(1)}, s1{Rat(0)}, t0{Rat(0)}, t1{Rat(1)};
  while (!(r1.size() == 1 && r1[0] == 0)) {
    Rat lead = r1.back();
    RatVec r1m = r1;
    for (Rat& c : r1m) c /= lead;
    auto [q, rem] = poly_divmod(r0, r1m);
    for (Rat& c : q) c /= lead;
    auto combine = [&](const RatVec& x0, const RatVec& x1) {
      RatVec qm = poly_mul(q, x1);
      RatVec res(std::max(x0.size(), qm.size()), Rat(0));
      for (std::size_t i = 0; i < x0.size(); ++i) res[i] += x0[i];
      for (std::size_t i = 0; i < qm.size(); ++i) res[i] -= qm[i];
      return normalize(res);
    };
    RatVec s2 = combine(s0, s1), t2 = combine(t0, t1);
    r0 = r1;
    r1 = normalize(rem);
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  // r0 = gcd (a nonzero constant when coprime); scale to 1
  Rat g = r0[0];
  for (Rat& c : s0) c /= g;
  for (Rat& c : t0) c /= g;
  return {s0, t0};
}

struct EndAlgebra {
  std::vector<RationalMatrix> basis;            // matrices E_k
  std::vector<RationalMatrix> left_action;      // L_k on algebra coordinates
  RatVec unit;                                  // coordinates of the identity
};

EndAlgebra build_end_algebra(const std::vector<RationalMatrix>& basis, std::size_t n) {
  EndAlgebra alg;
  alg.basis = basis;
  std::size_t r = basis.size();
  auto unit = coordinates_in(basis, RationalMatrix::identity(n));
  if (!unit) throw Error("endomorphism algebra does not contain the identity");
  alg.unit = *unit;
  for (std::size_t k = 0; k < r; ++k) {
    RationalMatrix L(r, r);
    for (std::size_t j = 0; j < r; ++j) {
      auto coords = coordinates_in(basis, basis[k] * basis[j]);
      if (!coords) throw Error("endomorphism algebra is not closed under products");
      for (std::size_t i = 0; i < r; ++i) L.at(i, j) = (*coords)[i];
    }
    alg.left_action.push_back(std::move(L));
  }
  return alg;
}

RationalMatrix action_of(const EndAlgebra& alg, const RatVec& coords) {
  std::size_t r = alg.basis.size();
  RationalMatrix L(r, r);
  for (std::size_t k = 0; k < r; ++k)
    if (coords[k] != 0) L = L + alg.left_action[k] * coords[k];
  return L;
}

RationalMatrix matrix_of(const EndAlgebra& alg, const RatVec& coords) {
  RationalMatrix M(alg.basis[0].rows(), alg.basis[0].cols());
  for (std::size_t k = 0; k < alg.basis.size(); ++k)
    if (coords[k] != 0) M = M + alg.basis[k] * coords[k];
  return M;
}

}  // namespace

std::string Classification::str() const {
  switch (kind) {
    case RepClass::Brick: return "Brick";
    case RepClass::Indecomposable: return "Indecomposable";
    case RepClass::Decomposable: return "Decomposable";
    default: return "Unknown";
  }
}

Classification classify(const SubspaceRep& rep, std::uint64_t seed) {
  Classification out;
  HomSpace end = hom_space(rep, rep);
  out.end_dim = end.dim();
  if (end.dim() == 1) {
    out.kind = RepClass::Brick;
    return out;
  }
  std::size_t n = rep.ambient_dim();
  EndAlgebra alg = build_end_algebra(end.basis, n);
  std::size_t r = end.dim();

  // radical = kernel of the trace form of the regular representation
  // (characteristic zero)
  RationalMatrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      gram.at(i, j) = (alg.left_action[i] * alg.left_action[j]).trace();
  std::vector<RatVec> radical = gram.kernel();
  out.radical_dim = radical.size();
  std::size_t quotient_dim = r - radical.size();
  if (quotient_dim == 1) {
    out.kind = RepClass::Indecomposable;
    return out;
  }

  // search for a trial element whose minimal polynomial splits into coprime
  // factors; generic elements of a matrix-algebra quotient can have
  // irrational spectra, so basis elements and small combinations go first
  Rng rng(seed);
  std::vector<RatVec> trials;
  for (std::size_t k = 0; k < r; ++k) {
    RatVec e(r, Rat(0));
    e[k] = 1;
    trials.push_back(e);
  }
  for (int t = 0; t < 24; ++t) {
    RatVec v(r);
    for (std::size_t k = 0; k < r; ++k) v[k] = Rat(rng.uniform(-3, 3));
    trials.push_back(v);
  }
  for (int t = 0; t < 8; ++t) {
    RatVec v(r);
    for (std::size_t k = 0; k < r; ++k) v[k] = Rat(rng.uniform(-1000000, 1000000));
    trials.push_back(v);
  }

  RationalMatrix id_mat = RationalMatrix::identity(n);
  for (const RatVec& z : trials) {
    RationalMatrix action = action_of(alg, z);
    RatVec mu = minimal_polynomial(action, alg.unit);
    auto roots = rational_roots(mu);
    if (roots.empty()) continue;
    // try to split mu = (x-root)^mult * rest  with the two parts coprime
    for (const auto& [root, mult] : roots) {
      RatVec f{Rat(1)};
      RatVec lin{-root, Rat(1)};
      for (int k = 0; k < mult; ++k) f = poly_mul(f, lin);
      auto [g, rem] = poly_divmod(mu, f);
      if (!(rem.size() == 1 && rem[0] == 0)) continue;
      if (g.size() == 1) continue;  // mu is a pure power: no split here
      if (poly_eval(g, root) == 0) continue;
      // CRT idempotent: e = u(z) f(z) with u f + v g = 1 maps to (0,1)
      auto [u, v] = poly_bezout(f, g);
      RatVec ef = poly_mul(u, f);
      // evaluate ef at z inside the algebra
      RatVec acc(r, Rat(0));
      RatVec zpow = alg.unit;
      for (std::size_t k = 0; k < ef.size(); ++k) {
        for (std::size_t i = 0; i < r; ++i) acc[i] += ef[k] * zpow[i];
        if (k + 1 < ef.size()) zpow = action.apply(zpow);
      }
      // lift to an exact idempotent along the nilpotent radical:
      // e <- 3e^2 - 2e^3 squares the error term each round
      RatVec e = acc;
      bool lifted = false;
      for (int it = 0; it < 12; ++it) {
        RationalMatrix Le = action_of(alg, e);
        RatVec e2 = Le.apply(e);
        RatVec diff(r);
        bool idem = true;
        for (std::size_t i = 0; i < r; ++i)
          if (e2[i] != e[i]) idem = false;
        if (idem) {
          lifted = true;
          break;
        }
        RatVec e3 = Le.apply(e2);
        for (std::size_t i = 0; i < r; ++i) e[i] = 3 * e2[i] - 2 * e3[i];
      }
      if (!lifted) continue;
      RationalMatrix E = matrix_of(alg, e);
      if (E.is_zero() || E == id_mat) continue;
      if (!((E * E) == E)) continue;
      out.kind = RepClass::Decomposable;
      out.idempotent = E;
      return out;
    }
  }
  out.kind = RepClass::Unknown;
  return out;
}

std::string EquivalenceResult::str() const {
  switch (kind) {
    case EquivKind::Equivalent: return "Equivalent";
    case EquivKind::Inequivalent: return "Inequivalent";
    default: return "ProbablyInequivalent";
  }
}

EquivalenceResult linearly_equivalent(const SubspaceRep& a, const SubspaceRep& b,
                                      std::uint64_t seed, int trials) {
  if (!(a.poset() == b.poset())) throw PosetMismatch("linearly_equivalent: posets differ");
  EquivalenceResult out{EquivKind::Inequivalent, std::nullopt, 0.0};
  if (a.ambient_dim() != b.ambient_dim()) return out;
  if (a == b) {
    out.kind = EquivKind::Equivalent;
    out.witness = RationalMatrix::identity(a.ambient_dim());
    return out;
  }
  HomSpace hom = hom_space(a, b);
  if (hom.dim() == 0 && a.ambient_dim() > 0) return out;
  // an invertible morphism maps V_i onto a subspace of W_i of dim V_i's
  // dimension, so equal raw dimensions are necessary for image equality
  bool dims_match = raw_profile(a).raw_dims == raw_profile(b).raw_dims;
  const std::int64_t B = 1000000;
  Rng rng(seed);
  if (dims_match) {
    for (int t = 0; t < trials; ++t) {
      RationalMatrix C(b.ambient_dim(), a.ambient_dim());
      for (const RationalMatrix& H : hom.basis) C = C + H * Rat(rng.uniform(-B, B));
      if (!C.inverse()) continue;
      out.kind = EquivKind::Equivalent;
      out.witness = C;
      return out;
    }
  }
  out.kind = EquivKind::ProbablyInequivalent;
  // Schwartz-Zippel: det of the sampled combination is a polynomial of degree
  // <= ambient dim over a sample set of 2B+1 integers per coordinate
  out.failure_bound =
      static_cast<double>(a.ambient_dim()) / (2.0 * static_cast<double>(B) + 1.0);
  return out;
}

QuiteSincereResult is_quite_sincere(const SubspaceRep& rep, std::uint64_t seed) {
  QuiteSincereResult out;
  for (std::size_t i = 0; i < rep.poset().size(); ++i)
    if (rep.space(i).dim() == 0) {
      out.violated = "pi(" + rep.poset().element(i) + ") = 0";
      return out;
    }
  for (std::size_t i = 0; i < rep.poset().size(); ++i)
    if (rep.space(i).dim() == rep.ambient_dim()) {
      out.violated = "pi(" + rep.poset().element(i) + ") = pi(0)";
      return out;
    }
  for (std::size_t i = 0; i < rep.poset().size(); ++i)
    for (std::size_t j = 0; j < rep.poset().size(); ++j)
      if (rep.poset().less(i, j) && rep.space(i) == rep.space(j)) {
        out.violated = "pi(" + rep.poset().element(i) + ") = pi(" +
                       rep.poset().element(j) + ") with " + rep.poset().element(i) +
                       " < " + rep.poset().element(j);
        return out;
      }
  Classification c = classify(rep, seed);
  if (c.kind == RepClass::Decomposable) {
    out.violated = "decomposable";
    return out;
  }
  if (c.kind == RepClass::Unknown) {
    out.unknown = true;
    out.violated = "indecomposability unresolved";
    return out;
  }
  out.quite_sincere = true;
  return out;
}

SubspaceRep dual_rep(const SubspaceRep& rep,
                     const std::optional<std::vector<Subspace>>& complements) {
  std::size_t n = rep.ambient_dim();
  std::vector<Subspace> duals;
  if (complements) {
    if (complements->size() != rep.poset().size())
      throw DimensionMismatch("dual_rep: one complement per element required");
    for (std::size_t i = 0; i < rep.poset().size(); ++i) {
      const Subspace& c = (*complements)[i];
      if (c.ambient_dim() != n || c.dim() + rep.space(i).dim() != n ||
          intersect(c, rep.space(i)).dim() != 0)
        throw NotAComplement("dual_rep: not a complement at " + rep.poset().element(i));
      duals.push_back(c);
    }
  } else {
    for (std::size_t i = 0; i < rep.poset().size(); ++i)
      duals.push_back(orthogonal_complement(rep.space(i)));
  }
  return SubspaceRep(rep.poset().opposite(), n, std::move(duals));
}

SubspaceRep extended_rep(const SubspaceRep& rep, const std::vector<std::string>& I,
                         const RatVec& v1, const RatVec& v2, const Rat& lambda,
                         const std::string& new_id) {
  std::size_t n = rep.ambient_dim();
  if (span(n, {v1, v2}).dim() != 2)
    throw DependentVectors("extended_rep: v1, v2 must be linearly independent");
  Subspace base(n);
  for (const std::string& id : I) base = sum(base, rep.space(rep.poset().index_of(id)));
  auto line_space = [&](const Rat& t) {
    RatVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = v1[i] + t * v2[i];
    return sum(base, span(n, {v}));
  };
  // intersection condition at two probe parameters distinct from lambda
  Rat probe1 = lambda + 1, probe2 = lambda + 2;
  for (const Rat& probe : {probe1, probe2}) {
    if (intersect(line_space(lambda), line_space(probe)).dim() != base.dim())
      throw ProbeConditionFailed(
          "extended_rep: intersection condition fails at probe " + to_string(probe));
  }
  Poset ext = extend_poset(rep.poset(), I, new_id);
  std::vector<Subspace> spaces = rep.spaces();
  spaces.push_back(line_space(lambda));
  return SubspaceRep(ext, n, std::move(spaces));
}

}  // namespace posetrep
