#include "pcube/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "pcube/errors.hpp"

namespace pcube {

void Poset::finish_init() {
  down_size_.assign(n_, 0);
  for (int x = 0; x < n_; ++x) {
    int d = 1;
    for (int y = 0; y < n_; ++y)
      if (less(y, x)) ++d;
    down_size_[x] = d;
  }
}

Poset Poset::from_relations(const std::vector<std::string>& labels,
                            const std::vector<std::pair<std::string, std::string>>& rels) {
  if (labels.empty()) throw parse_error("poset must have at least one element");
  Poset p;
  p.n_ = static_cast<int>(labels.size());
  p.labels_ = labels;
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < p.n_; ++i) {
    if (!idx.emplace(labels[i], i).second)
      throw parse_error("duplicate element name: " + labels[i]);
  }
  const std::size_t n = static_cast<std::size_t>(p.n_);
  p.lt_.assign(n * n, 0);
  for (const auto& [a, b] : rels) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) throw parse_error("unknown element name: " + a);
    if (ib == idx.end()) throw parse_error("unknown element name: " + b);
    p.lt_[static_cast<std::size_t>(ia->second) * n + ib->second] = 1;
  }
  // Warshall transitive closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.lt_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.lt_[k * n + j]) p.lt_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (p.lt_[i * n + i])
      throw parse_error("relation cycle involving element: " + labels[i]);
  p.finish_init();
  return p;
}

Poset Poset::from_closed_relation(const std::vector<std::string>& labels,
                                  const std::vector<unsigned char>& lt) {
  if (labels.empty()) throw parse_error("poset must have at least one element");
  const std::size_t n = labels.size();
  if (lt.size() != n * n) throw parse_error("relation matrix size mismatch");
  {
    std::set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) throw parse_error("duplicate element name: " + l);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (lt[i * n + i]) throw parse_error("relation is not irreflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (lt[i * n + j] && lt[j * n + i]) throw parse_error("relation is not antisymmetric");
      if (!lt[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (lt[j * n + k] && !lt[i * n + k]) throw parse_error("relation is not transitive");
    }
  }
  Poset p;
  p.n_ = static_cast<int>(n);
  p.labels_ = labels;
  p.lt_ = lt;
  p.finish_init();
  return p;
}

int Poset::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

OrderRelation Poset::compare(int x, int y) const {
  if (x == y) return OrderRelation::eq;
  if (less(x, y)) return OrderRelation::lt;
  if (less(y, x)) return OrderRelation::gt;
  return OrderRelation::incomparable;
}

std::vector<int> Poset::down_set(int x) const {
  std::vector<int> out;
  for (int y = 0; y < n_; ++y)
    if (y == x || less(y, x)) out.push_back(y);
  return out;
}

std::vector<int> Poset::up_set(int x) const {
  std::vector<int> out;
  for (int y = 0; y < n_; ++y)
    if (y == x || less(x, y)) out.push_back(y);
  return out;
}

int Poset::up_size(int x) const {
  int u = 1;
  for (int y = 0; y < n_; ++y)
    if (less(x, y)) ++u;
  return u;
}

bool Poset::is_cover(int x, int y) const {
  if (!less(x, y)) return false;
  for (int z = 0; z < n_; ++z)
    if (less(x, z) && less(z, y)) return false;
  return true;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (is_cover(x, y)) out.emplace_back(x, y);
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (down_size_[x] == 1) out.push_back(x);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (up_size(x) == 1) out.push_back(x);
  return out;
}

bool Poset::is_chain() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (!comparable(x, y)) return false;
  return true;
}

bool Poset::is_antichain() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (comparable(x, y)) return false;
  return true;
}

bool Poset::connected() const {
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y = 0; y < n_; ++y)
      if (!seen[y] && comparable(x, y)) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::optional<Poset> Poset::induced(const std::vector<int>& ids) const {
  if (ids.empty()) return std::nullopt;
  const std::size_t m = ids.size();
  std::vector<std::string> labels(m);
  std::vector<unsigned char> lt(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = labels_[ids[i]];
    for (std::size_t j = 0; j < m; ++j)
      if (less(ids[i], ids[j])) lt[i * m + j] = 1;
  }
  return from_closed_relation(labels, lt);
}

std::vector<int> Poset::heights() const {
  std::vector<int> h(n_, 0);
  for (int x : by_down_size_order())
    for (int y = 0; y < n_; ++y)
      if (less(y, x)) h[x] = std::max(h[x], h[y] + 1);
  return h;
}

std::vector<int> Poset::by_down_size_order() const {
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return down_size_[a] < down_size_[b]; });
  return order;
}

// ---- file format ----------------------------------------------------------

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

} // namespace

Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool saw_header = false, saw_elements = false;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> rels;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!saw_header) {
      if (toks.size() != 2 || toks[0] != "poset" || toks[1] != "v1")
        throw parse_error("line " + std::to_string(lineno) + ": expected header 'poset v1'");
      saw_header = true;
      continue;
    }
    if (toks[0] == "elements") {
      if (saw_elements)
        throw parse_error("line " + std::to_string(lineno) + ": duplicate 'elements' line");
      if (toks.size() < 2)
        throw parse_error("line " + std::to_string(lineno) + ": 'elements' needs at least one name");
      labels.assign(toks.begin() + 1, toks.end());
      saw_elements = true;
      continue;
    }
    if (toks[0] == "rel") {
      if (!saw_elements)
        throw parse_error("line " + std::to_string(lineno) + ": 'rel' before 'elements'");
      if (toks.size() != 4 || toks[2] != "<")
        throw parse_error("line " + std::to_string(lineno) + ": expected 'rel a < b'");
      rels.emplace_back(toks[1], toks[3]);
      continue;
    }
    throw parse_error("line " + std::to_string(lineno) + ": unrecognized directive '" + toks[0] + "'");
  }
  if (!saw_header) throw parse_error("missing 'poset v1' header");
  if (!saw_elements) throw parse_error("missing 'elements' line");
  return Poset::from_relations(labels, rels);
}

std::string serialize_poset(const Poset& p) {
  std::ostringstream out;
  out << "poset v1\n";
  out << "elements";
  for (int i = 0; i < p.size(); ++i) out << ' ' << p.label(i);
  out << '\n';
  for (auto [lo, hi] : p.cover_pairs())
    out << "rel " << p.label(lo) << " < " << p.label(hi) << '\n';
  return out.str();
}

// ---- sums -----------------------------------------------------------------

namespace {

// Labels for a sum of parts; labels appearing in more than one part become
// "p<i>.<label>".
std::vector<std::vector<std::string>> sum_labels(const std::vector<Poset>& parts) {
  std::map<std::string, int> owner_count;
  for (const auto& part : parts) {
    std::set<std::string> here(part.labels().begin(), part.labels().end());
    for (const auto& l : here) owner_count[l]++;
  }
  std::vector<std::vector<std::string>> out(parts.size());
  std::set<std::string> all;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& l : parts[i].labels()) {
      std::string name = owner_count[l] > 1 ? "p" + std::to_string(i) + "." + l : l;
      if (!all.insert(name).second)
        throw parse_error("label collision in sum even after renaming: " + name);
      out[i].push_back(name);
    }
  }
  return out;
}

Poset sum_impl(const std::vector<Poset>& parts, bool vertical) {
  if (parts.empty()) throw parse_error("sum needs at least one part");
  auto names = sum_labels(parts);
  std::vector<std::string> labels;
  std::vector<int> offset(parts.size());
  int n = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    offset[i] = n;
    n += parts[i].size();
    labels.insert(labels.end(), names[i].begin(), names[i].end());
  }
  std::vector<unsigned char> lt(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int a, int b) -> unsigned char& { return lt[static_cast<std::size_t>(a) * n + b]; };
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int a = 0; a < parts[i].size(); ++a)
      for (int b = 0; b < parts[i].size(); ++b)
        if (parts[i].less(a, b)) at(offset[i] + a, offset[i] + b) = 1;
  if (vertical)
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        for (int a = 0; a < parts[i].size(); ++a)
          for (int b = 0; b < parts[j].size(); ++b)
            at(offset[i] + a, offset[j] + b) = 1;
  return Poset::from_closed_relation(labels, lt);
}

} // namespace

Poset disjoint_sum(const std::vector<Poset>& parts) { return sum_impl(parts, false); }
Poset vertical_sum(const std::vector<Poset>& parts) { return sum_impl(parts, true); }

// ---- decompositions --------------------------------------------------------

Decomposition component_decomposition(const Poset& p) {
  const int n = p.size();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y)
        if (comp[y] < 0 && p.comparable(x, y)) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  Decomposition d;
  d.kind = Decomposition::Kind::component;
  d.embedding.resize(ncomp);
  for (int x = 0; x < n; ++x) d.embedding[comp[x]].push_back(x);
  for (auto& ids : d.embedding) d.parts.push_back(*p.induced(ids));
  return d;
}

std::vector<int> vertical_cut_positions(const Poset& p) {
  // Any lower part of a vertical cut is down-closed, and its elements have
  // strictly smaller closed down-sets than everything above the cut, so every
  // cut shows up as a prefix of the down-size order.
  const int n = p.size();
  auto order = p.by_down_size_order();
  std::vector<int> cuts;
  for (int k = 1; k < n; ++k) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = k; j < n; ++j)
        if (!p.less(order[i], order[j])) {
          ok = false;
          break;
        }
    if (ok) cuts.push_back(k);
  }
  return cuts;
}

Decomposition block_decomposition(const Poset& p) {
  const int n = p.size();
  auto order = p.by_down_size_order();
  auto cuts = vertical_cut_positions(p);
  // Segment boundaries: 0, cuts..., n.  Each segment is a singleton or a
  // non-chain vertical prime (a chain of length >= 2 would have internal
  // cuts).  Merging maximal runs of consecutive singletons into chain blocks
  // gives the coarsening with the fewest parts among chain/prime mixes.
  std::vector<int> bounds{0};
  bounds.insert(bounds.end(), cuts.begin(), cuts.end());
  bounds.push_back(n);
  Decomposition d;
  d.kind = Decomposition::Kind::block;
  const std::size_t nseg = bounds.size() - 1; // segment i = [bounds[i], bounds[i+1])
  std::size_t i = 0;
  while (i < nseg) {
    int lo = bounds[i];
    int hi;
    if (bounds[i + 1] - bounds[i] == 1) { // singleton run -> one chain block
      std::size_t j = i;
      while (j < nseg && bounds[j + 1] - bounds[j] == 1) ++j;
      hi = bounds[j];
      i = j;
    } else {
      hi = bounds[i + 1];
      ++i;
    }
    std::vector<int> ids(order.begin() + lo, order.begin() + hi);
    d.embedding.push_back(ids);
    d.parts.push_back(*p.induced(ids));
  }
  return d;
}

// ---- isomorphism ----------------------------------------------------------

namespace {

int rel_code(const Poset& p, int x, int y) {
  switch (p.compare(x, y)) {
    case OrderRelation::lt: return 0;
    case OrderRelation::gt: return 1;
    case OrderRelation::eq: return 2;
    default: return 3;
  }
}

// Jointly refine colors over several posets so colors are comparable across
// them.  Returns one color vector per poset; color values are canonical
// (determined by the isomorphism types alone).
std::vector<std::vector<int>> joint_refine(const std::vector<const Poset*>& ps) {
  std::vector<std::vector<int>> colors(ps.size());
  {
    std::map<std::pair<int, int>, int> code;
    for (std::size_t k = 0; k < ps.size(); ++k)
      for (int x = 0; x < ps[k]->size(); ++x)
        code[{ps[k]->down_size(x), ps[k]->up_size(x)}] = 0;
    int next = 0;
    for (auto& [sig, id] : code) id = next++;
    for (std::size_t k = 0; k < ps.size(); ++k) {
      colors[k].resize(ps[k]->size());
      for (int x = 0; x < ps[k]->size(); ++x)
        colors[k][x] = code[{ps[k]->down_size(x), ps[k]->up_size(x)}];
    }
  }
  for (;;) {
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    std::map<Sig, int> code;
    std::vector<std::vector<Sig>> sigs(ps.size());
    for (std::size_t k = 0; k < ps.size(); ++k) {
      const Poset& p = *ps[k];
      sigs[k].resize(p.size());
      for (int x = 0; x < p.size(); ++x) {
        std::vector<std::pair<int, int>> multi;
        for (int y = 0; y < p.size(); ++y)
          if (y != x) multi.emplace_back(rel_code(p, x, y), colors[k][y]);
        std::sort(multi.begin(), multi.end());
        sigs[k][x] = {colors[k][x], std::move(multi)};
        code[sigs[k][x]] = 0;
      }
    }
    int next = 0;
    for (auto& [sig, id] : code) id = next++;
    bool changed = false;
    for (std::size_t k = 0; k < ps.size(); ++k)
      for (int x = 0; x < ps[k]->size(); ++x) {
        int c = code[sigs[k][x]];
        if (c != colors[k][x]) changed = true;
        colors[k][x] = c;
      }
    if (!changed) return colors;
  }
}

bool iso_backtrack(const Poset& p, const Poset& q, const std::vector<int>& cp,
                   const std::vector<int>& cq, std::vector<int>& map_pq,
                   std::vector<char>& used, const std::vector<int>& order, std::size_t pos) {
  if (pos == order.size()) return true;
  int x = order[pos];
  for (int y = 0; y < q.size(); ++y) {
    if (used[y] || cq[y] != cp[x]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < pos && ok; ++i) {
      int px = order[i];
      ok = rel_code(p, x, px) == rel_code(q, y, map_pq[px]);
    }
    if (!ok) continue;
    map_pq[x] = y;
    used[y] = 1;
    if (iso_backtrack(p, q, cp, cq, map_pq, used, order, pos + 1)) return true;
    used[y] = 0;
  }
  return false;
}

} // namespace

bool are_isomorphic(const Poset& p, const Poset& q, std::vector<int>* witness) {
  if (p.size() != q.size()) return false;
  auto colors = joint_refine({&p, &q});
  const auto& cp = colors[0];
  const auto& cq = colors[1];
  {
    auto a = cp, b = cq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  // Match rarest colors first to prune early.
  std::map<int, int> freq;
  for (int c : cp) freq[c]++;
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (freq[cp[a]] != freq[cp[b]]) return freq[cp[a]] < freq[cp[b]];
    return a < b;
  });
  std::vector<int> map_pq(p.size(), -1);
  std::vector<char> used(q.size(), 0);
  if (!iso_backtrack(p, q, cp, cq, map_pq, used, order, 0)) return false;
  if (witness) *witness = map_pq;
  return true;
}

namespace {

void key_backtrack(const Poset& p, const std::vector<std::vector<int>>& classes,
                   std::vector<int>& slots, std::size_t k, std::uint64_t& best) {
  const int n = p.size();
  if (k == classes.size()) {
    std::uint64_t key = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (p.less(slots[a], slots[b])) key |= std::uint64_t{1} << (a * n + b);
    best = std::min(best, key);
    return;
  }
  std::vector<int> members = classes[k];
  std::size_t base = 0;
  for (std::size_t i = 0; i < k; ++i) base += classes[i].size();
  std::sort(members.begin(), members.end());
  do {
    for (std::size_t i = 0; i < members.size(); ++i) slots[base + i] = members[i];
    key_backtrack(p, classes, slots, k + 1, best);
  } while (std::next_permutation(members.begin(), members.end()));
}

} // namespace

std::uint64_t canonical_key(const Poset& p) {
  const int n = p.size();
  if (n > 8) throw cap_error("canonical_key supports at most 8 elements");
  auto colors = joint_refine({&p})[0];
  std::map<int, std::vector<int>> by_color;
  for (int x = 0; x < n; ++x) by_color[colors[x]].push_back(x);
  std::vector<std::vector<int>> classes;
  for (auto& [c, ids] : by_color) classes.push_back(ids);
  std::vector<int> slots(n, 0);
  std::uint64_t best = ~std::uint64_t{0};
  key_backtrack(p, classes, slots, 0, best);
  return best;
}

} // namespace pcube
