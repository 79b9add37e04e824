#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetrep/errors.hpp"

namespace posetrep {

/// Finite strict partial order. Relations are stored transitively closed;
/// covering pairs are derived at construction. The order of `elements` fixes
/// coordinate indexing for every downstream vector (weights, dimension
/// vectors, subdimension vectors).
class Poset {
 public:
  /// Builds from generating relations (pairs of element ids, meaning x < y).
  /// Throws CycleError / DuplicateElement / UnknownElement.
  Poset(std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& generating_relations);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const std::string& id) const;

  /// Strict comparability on element indices (transitively closed).
  bool less(std::size_t a, std::size_t b) const { return lt_[a * size() + b]; }
  bool comparable(std::size_t a, std::size_t b) const {
    return less(a, b) || less(b, a);
  }

  /// Covering pairs (x, y): x < y with nothing strictly between.
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const {
    return hasse_;
  }
  std::vector<std::pair<std::size_t, std::size_t>> relation_pairs() const;

  /// Same elements in the same order with all relations reversed.
  Poset opposite() const;

  /// Induced subposet on the given (sorted) index subset; element ids kept.
  Poset induced(const std::vector<std::size_t>& indices) const;

  bool operator==(const Poset& rhs) const {
    return elements_ == rhs.elements_ && lt_ == rhs.lt_;
  }

  std::string str() const;

 private:
  std::vector<std::string> elements_;
  std::vector<char> lt_;  // size*size adjacency of the closed relation
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
};

Poset make_poset(std::vector<std::string> elements,
                 const std::vector<std::pair<std::string, std::string>>& generating_relations);

/// Disjoint union of chains of the given lengths; elements named a1..,b1..,
/// matching the usual (n1,...,ns) notation.
Poset primitive_poset(const std::vector<int>& chain_lengths);

/// Largest antichain cardinality (brute force; |P| <= 12 in scope).
std::size_t width(const Poset& p);

struct PrimitiveDecomposition {
  bool primitive = false;
  std::vector<int> chain_lengths;  // ascending, set when primitive
};

/// True iff every connected component of the comparability graph is a chain.
PrimitiveDecomposition is_primitive(const Poset& p);

struct CriticalMatch {
  std::string name;                  // "(1,1,1,1)", "(2,2,2)", "(1,3,3)", "(1,2,5)", "(N,4)"
  std::vector<std::size_t> embedding;  // index in p of the k-th critical element
};

/// The five minimal posets of infinite representation type, in fixed order.
const std::vector<std::pair<std::string, Poset>>& critical_posets();

/// First induced copy of a critical poset, if any. none == finite type.
std::optional<CriticalMatch> contains_critical(const Poset& p);

/// Order isomorphism q -> p as an index map, if one exists.
std::optional<std::vector<std::size_t>> order_isomorphism(const Poset& q, const Poset& p);

/// x = (x0; x_i per element). Cross terms run over all comparable pairs of
/// the closed relation.
std::int64_t quadratic_form(const Poset& p, const std::vector<std::int64_t>& x);

/// Adds one element above the subset I (id defaults to "p~"), appended last.
Poset extend_poset(const Poset& p, const std::vector<std::string>& I,
                   const std::string& new_id = "p~");

}  // namespace posetrep
