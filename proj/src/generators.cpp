#include "pcube/generators.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "pcube/errors.hpp"

namespace pcube {

long long binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i); // exact: prefix binomial
    if (r > static_cast<unsigned __int128>(LLONG_MAX))
      throw cap_error("binomial coefficient overflows");
  }
  return static_cast<long long>(r);
}

namespace gen {

namespace {

std::vector<std::string> numbered(const std::string& stem, int n, int from = 0) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(from + i));
  return out;
}

} // namespace

Poset chain(int n) {
  if (n < 1) throw std::invalid_argument("chain needs at least one element");
  std::vector<std::pair<std::string, std::string>> rels;
  for (int i = 0; i + 1 < n; ++i) rels.emplace_back("x" + std::to_string(i), "x" + std::to_string(i + 1));
  return Poset::from_relations(numbered("x", n), rels);
}

Poset antichain(int n) {
  if (n < 1) throw std::invalid_argument("antichain needs at least one element");
  return Poset::from_relations(numbered("x", n), {});
}

Poset v() { return Poset::from_relations({"bot", "a", "b"}, {{"bot", "a"}, {"bot", "b"}}); }

Poset lambda() { return Poset::from_relations({"a", "b", "top"}, {{"a", "top"}, {"b", "top"}}); }

Poset z() { return Poset::from_relations({"a", "b", "c", "d"}, {{"a", "b"}}); }

Poset b(int k) {
  if (k < 2) throw std::invalid_argument("the chain part needs at least two elements");
  auto labels = numbered("c", k);
  std::vector<std::pair<std::string, std::string>> rels;
  for (int i = 0; i + 1 < k; ++i) rels.emplace_back(labels[i], labels[i + 1]);
  labels.push_back("m");
  return Poset::from_relations(labels, rels);
}

Poset fan(int s) {
  if (s < 1) throw std::invalid_argument("fan needs at least one minimal element");
  auto labels = numbered("m", s);
  std::vector<std::pair<std::string, std::string>> rels;
  for (const auto& l : labels) rels.emplace_back(l, "t");
  labels.push_back("t");
  return Poset::from_relations(labels, rels);
}

Poset binomial_fan(int t) {
  if (t < 1) throw std::invalid_argument("parameter must be positive");
  long long s = binomial(2 * t + 1, t);
  if (s > 100000) throw cap_error("fan size exceeds 100000 elements");
  return fan(static_cast<int>(s));
}

Poset sigma_poset(const SigmaSpec& spec) {
  const int n = spec.n;
  const int m = static_cast<int>(spec.a.size());
  if (n < 3) throw std::invalid_argument("profile needs at least three lower elements");
  if (m < 3) throw std::invalid_argument("profile needs at least three entries");
  if (!std::is_sorted(spec.a.begin(), spec.a.end()))
    throw std::invalid_argument("profile must be non-decreasing");
  if (spec.a.front() >= n) throw std::invalid_argument("first profile entry must be below n");
  if (spec.a[m - 1] != n || spec.a[m - 2] != n)
    throw std::invalid_argument("last two profile entries must equal n");
  if (spec.a.front() < 1) throw std::invalid_argument("profile entries must be positive");
  std::vector<std::string> labels = numbered("x", n, 1);
  auto ys = numbered("y", m, 1);
  labels.insert(labels.end(), ys.begin(), ys.end());
  std::vector<std::pair<std::string, std::string>> rels;
  for (int j = 0; j < m; ++j)
    for (int i = 1; i <= spec.a[j]; ++i)
      rels.emplace_back("x" + std::to_string(i), ys[j]);
  return Poset::from_relations(labels, rels);
}

SigmaSpec flagship_sigma() { return {8, {1, 1, 1, 2, 2, 2, 2, 4, 4, 4, 8, 8}}; }

std::pair<Poset, Representation> twin_representation(int s, int i) {
  if (s < 3) throw std::invalid_argument("window size must be at least 3");
  if (i < 3 || i > s) throw std::invalid_argument("window offset must lie in [3, s]");
  long long t_ll = binomial(2 * s, s);
  if (t_ll + 2 > 5000) throw cap_error("poset would exceed 5000 elements");
  const int t = static_cast<int>(t_ll);
  // All s-subsets of the 2s labels, ascending as bitmasks.
  std::vector<Mask> subs;
  for (Mask m = 0; m < (Mask{1} << (2 * s)); ++m)
    if (mask_size(m) == s) subs.push_back(m);
  const Mask window1 = (Mask{1} << (s + 1)) - 1;              // labels 1..s+1
  const Mask window2 = ((Mask{1} << (s + 1)) - 1) << (i - 1); // labels i..i+s
  std::vector<Mask> in2, rest;
  for (std::size_t j = s + 1; j < subs.size(); ++j) // first s+1 are the window1 subsets
    (mask_subset(subs[j], window2) ? in2 : rest).push_back(subs[j]);
  // The windows overlap in s+2-i < s labels, so no s-subset fits in both and
  // window2 contributes exactly its own s+1 subsets.
  if (static_cast<int>(in2.size()) != s + 1)
    throw std::logic_error("window subset families intersect");
  // Ordered assignment: window1 subsets, then window2 subsets, then the rest.
  std::vector<Mask> assigned(subs.begin(), subs.begin() + (s + 1));
  assigned.insert(assigned.end(), in2.begin(), in2.end());
  assigned.insert(assigned.end(), rest.begin(), rest.end());

  auto labels = numbered("m", t);
  labels.push_back("u1");
  labels.push_back("u2");
  std::vector<std::pair<std::string, std::string>> rels;
  for (int j = 0; j <= s; ++j) rels.emplace_back(labels[j], "u1");
  for (int j = s + 1; j <= 2 * s + 1; ++j) rels.emplace_back(labels[j], "u2");
  Poset p = Poset::from_relations(labels, rels);

  Representation r;
  r.ground = numbered("", 2 * s, 1);
  r.sets = std::move(assigned);
  r.sets.push_back(window1);
  r.sets.push_back(window2);
  return {std::move(p), std::move(r)};
}

} // namespace gen

std::vector<Poset> enumerate_posets(int n) {
  if (n < 1) throw std::invalid_argument("need at least one element");
  if (n > 7) throw cap_error("isomorphism-type enumeration is capped at 7 elements");
  std::vector<Poset> cur;
  cur.push_back(Poset::from_relations({"e0"}, {}));
  for (int k = 2; k <= n; ++k) {
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("e" + std::to_string(i));
    std::map<std::uint64_t, Poset> next;
    for (const Poset& q : cur) {
      const int m = q.size();
      // Every k-element type arises by planting a new maximal element over a
      // down-closed subset of some (k-1)-element type.
      for (Mask ds = 0; ds < (Mask{1} << m); ++ds) {
        bool closed = true;
        for (int x = 0; x < m && closed; ++x) {
          if (!(ds >> x & 1)) continue;
          for (int y = 0; y < m; ++y)
            if (q.less(y, x) && !(ds >> y & 1)) {
              closed = false;
              break;
            }
        }
        if (!closed) continue;
        std::vector<unsigned char> lt(static_cast<std::size_t>(k) * k, 0);
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y) lt[x * k + y] = q.less(x, y) ? 1 : 0;
        for (int x = 0; x < m; ++x)
          if (ds >> x & 1) lt[x * k + (k - 1)] = 1;
        Poset np = Poset::from_closed_relation(labels, lt);
        std::uint64_t key = canonical_key(np);
        next.try_emplace(key, std::move(np));
      }
    }
    cur.clear();
    for (auto& [key, q] : next) cur.push_back(std::move(q));
  }
  return cur;
}

std::vector<int> sample_indices(int universe, int count, std::uint64_t seed) {
  if (count < 0 || count > universe) throw std::invalid_argument("sample size out of range");
  std::vector<int> idx(universe);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(universe - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

Representation seeded_valid_representation(const Poset& p, std::uint64_t seed) {
  Representation r = canonical_representation(p);
  std::mt19937_64 rng(seed);
  int rounds = 2 + static_cast<int>(rng() % 3);
  for (int t = 0; t < rounds; ++t) {
    if (r.ground_size() >= kGroundCap) break;
    std::string name = "aug" + std::to_string(t);
    while (std::find(r.ground.begin(), r.ground.end(), name) != r.ground.end()) name += "x";
    const Mask nb = Mask{1} << r.ground_size();
    const int kind = static_cast<int>(rng() % 3);
    r.ground.push_back(name);
    if (kind == 0) { // inflate every set; inclusions are unchanged
      for (auto& s : r.sets) s |= nb;
    } else if (kind == 1) { // inflate an up-set; up-sets only grow upward
      int x = static_cast<int>(rng() % static_cast<std::uint64_t>(p.size()));
      for (int y = 0; y < p.size(); ++y)
        if (p.leq(x, y)) r.sets[y] |= nb;
    } else { // duplicate one label's membership pattern
      int g = static_cast<int>(rng() % static_cast<std::uint64_t>(r.ground_size() - 1));
      for (auto& s : r.sets)
        if (s >> g & 1) s |= nb;
    }
  }
  return r;
}

} // namespace pcube
