#include "posetrep/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace posetrep {

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& generating_relations)
    : elements_(std::move(elements)) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index.emplace(elements_[i], i).second)
      throw DuplicateElement("duplicate element id: " + elements_[i]);
  }
  std::size_t n = elements_.size();
  lt_.assign(n * n, 0);
  for (const auto& [x, y] : generating_relations) {
    auto ix = index.find(x), iy = index.find(y);
    if (ix == index.end()) throw UnknownElement("unknown element: " + x);
    if (iy == index.end()) throw UnknownElement("unknown element: " + y);
    lt_[ix->second * n + iy->second] = 1;
  }
  // Warshall closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (lt_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (lt_[k * n + j]) lt_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (lt_[i * n + i]) throw CycleError("relations close to a cycle at " + elements_[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt_[i * n + j]) continue;
      bool covering = true;
      for (std::size_t k = 0; k < n && covering; ++k)
        if (lt_[i * n + k] && lt_[k * n + j]) covering = false;
      if (covering) hasse_.emplace_back(i, j);
    }
}

std::size_t Poset::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == id) return i;
  throw UnknownElement("unknown element: " + id);
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::relation_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (less(i, j)) out.emplace_back(i, j);
  return out;
}

Poset Poset::opposite() const {
  std::vector<std::pair<std::string, std::string>> rel;
  for (const auto& [i, j] : relation_pairs()) rel.emplace_back(elements_[j], elements_[i]);
  return Poset(elements_, rel);
}

Poset Poset::induced(const std::vector<std::size_t>& indices) const {
  std::vector<std::string> els;
  for (std::size_t i : indices) els.push_back(elements_[i]);
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t a : indices)
    for (std::size_t b : indices)
      if (less(a, b)) rel.emplace_back(elements_[a], elements_[b]);
  return Poset(els, rel);
}

std::string Poset::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < size(); ++i) os << (i ? " " : "") << elements_[i];
  os << " |";
  for (const auto& [i, j] : hasse_) os << " " << elements_[i] << "<" << elements_[j];
  os << "}";
  return os.str();
}

Poset make_poset(std::vector<std::string> elements,
                 const std::vector<std::pair<std::string, std::string>>& generating_relations) {
  return Poset(std::move(elements), generating_relations);
}

Poset primitive_poset(const std::vector<int>& chain_lengths) {
  std::vector<std::string> els;
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t c = 0; c < chain_lengths.size(); ++c) {
    std::string prefix(1, static_cast<char>('a' + c));
    for (int k = 1; k <= chain_lengths[c]; ++k) {
      els.push_back(prefix + std::to_string(k));
      if (k > 1) rel.emplace_back(prefix + std::to_string(k - 1), prefix + std::to_string(k));
    }
  }
  return Poset(std::move(els), rel);
}

std::size_t width(const Poset& p) {
  std::size_t n = p.size();
  if (n == 0) throw EmptyPoset("width of empty poset");
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
    bool antichain = true;
    for (std::size_t i = 0; i < n && antichain; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = i + 1; j < n && antichain; ++j)
        if ((mask >> j & 1) && p.comparable(i, j)) antichain = false;
    }
    if (antichain) best = std::max<std::size_t>(best, __builtin_popcountll(mask));
  }
  return best;
}

PrimitiveDecomposition is_primitive(const Poset& p) {
  std::size_t n = p.size();
  // connected components of the comparability graph
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < n; ++u)
        if (comp[u] < 0 && p.comparable(v, u)) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }
  PrimitiveDecomposition out;
  std::vector<int> sizes(ncomp, 0);
  for (std::size_t v = 0; v < n; ++v) ++sizes[comp[v]];
  // each component must be totally ordered
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (comp[i] == comp[j] && !p.comparable(i, j)) return out;
  out.primitive = true;
  out.chain_lengths = sizes;
  std::sort(out.chain_lengths.begin(), out.chain_lengths.end());
  return out;
}

const std::vector<std::pair<std::string, Poset>>& critical_posets() {
  static const std::vector<std::pair<std::string, Poset>> list = [] {
    std::vector<std::pair<std::string, Poset>> v;
    v.emplace_back("(1,1,1,1)", primitive_poset({1, 1, 1, 1}));
    v.emplace_back("(2,2,2)", primitive_poset({2, 2, 2}));
    v.emplace_back("(1,3,3)", primitive_poset({1, 3, 3}));
    v.emplace_back("(1,2,5)", primitive_poset({1, 2, 5}));
    v.emplace_back("(N,4)",
                   Poset({"a1", "a2", "b1", "b2", "c1", "c2", "c3", "c4"},
                         {{"a1", "a2"},
                          {"b1", "b2"},
                          {"b1", "a2"},
                          {"c1", "c2"},
                          {"c2", "c3"},
                          {"c3", "c4"}}));
    return v;
  }();
  return list;
}

namespace {

bool isomorphism_search(const Poset& q, const Poset& p, std::vector<std::size_t>& image,
                        std::vector<char>& used, std::size_t k) {
  if (k == q.size()) return true;
  for (std::size_t cand = 0; cand < p.size(); ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < k && ok; ++prev) {
      if (q.less(prev, k) != p.less(image[prev], cand)) ok = false;
      if (q.less(k, prev) != p.less(cand, image[prev])) ok = false;
    }
    if (!ok) continue;
    image[k] = cand;
    used[cand] = 1;
    if (isomorphism_search(q, p, image, used, k + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> order_isomorphism(const Poset& q, const Poset& p) {
  if (q.size() != p.size()) return std::nullopt;
  std::vector<std::size_t> image(q.size());
  std::vector<char> used(p.size(), 0);
  if (isomorphism_search(q, p, image, used, 0)) return image;
  return std::nullopt;
}

std::optional<CriticalMatch> contains_critical(const Poset& p) {
  std::size_t n = p.size();
  std::size_t w = n ? width(p) : 0;
  for (const auto& [name, crit] : critical_posets()) {
    std::size_t k = crit.size();
    if (k > n) continue;
    if (width(crit) > w) continue;  // width is monotone under induced subposets
    std::vector<std::size_t> subset(k);
    // lexicographically ordered k-subsets of 0..n-1
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    while (true) {
      Poset ind = p.induced(subset);
      if (auto iso = order_isomorphism(crit, ind)) {
        CriticalMatch m;
        m.name = name;
        for (std::size_t t = 0; t < k; ++t) m.embedding.push_back(subset[(*iso)[t]]);
        return m;
      }
      // next subset
      std::size_t i = k;
      while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::int64_t quadratic_form(const Poset& p, const std::vector<std::int64_t>& x) {
  if (x.size() != p.size() + 1) throw DimensionMismatch("quadratic_form: expected |P|+1 coords");
  std::int64_t q = x[0] * x[0];
  for (std::size_t i = 0; i < p.size(); ++i) q += x[i + 1] * x[i + 1];
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.less(a, b)) q += x[a + 1] * x[b + 1];
  for (std::size_t a = 0; a < p.size(); ++a) q -= x[0] * x[a + 1];
  return q;
}

Poset extend_poset(const Poset& p, const std::vector<std::string>& I, const std::string& new_id) {
  std::vector<std::string> els = p.elements();
  els.push_back(new_id);
  std::vector<std::pair<std::string, std::string>> rel;
  for (const auto& [i, j] : p.relation_pairs())
    rel.emplace_back(p.element(i), p.element(j));
  for (const std::string& i : I) {
    p.index_of(i);  // validates membership
    rel.emplace_back(i, new_id);
  }
  return Poset(std::move(els), rel);
}

}  // namespace posetrep
