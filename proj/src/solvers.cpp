#include "pcube/solvers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pcube/characterization.hpp"
#include "pcube/errors.hpp"
#include "pcube/generators.hpp"

namespace pcube {
namespace search {

namespace {

// Backtracking over one subset of {0..max_labels-1} per element. Elements are
// assigned by decreasing down-set size (ties by id), so every element above
// the current one is already placed: candidates live inside the intersection
// of the uppers' sets, and earlier non-uppers are exactly the incomparables.
// New labels enter only as the consecutive smallest unused ones, which loses
// nothing up to relabeling; candidates are tried in ascending mask order, so
// the first hit is deterministic.
struct Engine {
  const Poset& p;
  const Request& req;
  int n;
  std::vector<int> order;                       // position -> element id
  std::vector<std::vector<int>> uppers;         // per position: ids above the element
  std::vector<std::vector<int>> incomparables;  // per position: earlier incomparable ids
  std::vector<int> budget;                      // per element id
  std::vector<long long> cover_capacity;        // per position: max new labels from here on
  std::vector<Mask> assign;                     // per element id
  const std::function<bool(const std::vector<Mask>&)>* visit = nullptr;
  int used = 0;
  bool stopped = false;

  Engine(const Poset& poset, const Request& request) : p(poset), req(request), n(poset.size()) {
    if (req.max_labels < 0 || req.max_labels > kGroundCap)
      throw cap_error("label search exceeds the 64-label cap");
    if (!req.budgets.empty() && req.budgets.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("budget list does not match the element count");
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (p.down_size(a) != p.down_size(b)) return p.down_size(a) > p.down_size(b);
      return a < b;
    });
    uppers.resize(n);
    incomparables.resize(n);
    for (int pos = 0; pos < n; ++pos) {
      int x = order[pos];
      for (int prev = 0; prev < pos; ++prev) {
        int y = order[prev];
        if (p.less(x, y))
          uppers[pos].push_back(y);
        else if (!p.comparable(x, y))
          incomparables[pos].push_back(y);
      }
    }
    budget.resize(n);
    for (int x = 0; x < n; ++x)
      budget[x] = req.budgets.empty() ? req.max_labels
                                      : std::min(req.budgets[x], req.max_labels);
    cover_capacity.assign(n + 1, 0);
    for (int pos = n - 1; pos >= 0; --pos) {
      int x = order[pos];
      bool maximal = uppers[pos].empty(); // all uppers are assigned earlier
      cover_capacity[pos] = cover_capacity[pos + 1] + (maximal ? budget[x] : 0);
    }
    assign.assign(n, 0);
  }

  bool candidate_ok(int pos, Mask c) const {
    for (int y : uppers[pos])
      if (c == assign[y]) return false; // strictness; containment holds by construction
    for (int y : incomparables[pos])
      if (mask_subset(c, assign[y]) || mask_subset(assign[y], c)) return false;
    return true;
  }

  // Returns false once the visitor asked to stop.
  bool rec(int pos) {
    if (pos == n) {
      if (req.exact_cover && used != req.max_labels) return true;
      return (*visit)(assign);
    }
    if (req.exact_cover && used + cover_capacity[pos] < req.max_labels) return true;
    const int x = order[pos];
    Mask allowed = used == kGroundCap ? ~Mask{0} : (Mask{1} << used) - 1;
    for (int y : uppers[pos]) allowed &= assign[y];
    const int max_new = uppers[pos].empty() ? std::min(budget[x], req.max_labels - used) : 0;
    for (int fresh = 0; fresh <= max_new; ++fresh) {
      const Mask fresh_part = ((Mask{1} << fresh) - 1) << used;
      const int room = budget[x] - fresh;
      if (room < 0) break;
      Mask s = 0;
      while (true) { // ascending submask walk, empty set included
        if (mask_size(s) <= room && (!req.exact_sizes || mask_size(s) + fresh == budget[x])) {
          Mask c = s | fresh_part;
          if (candidate_ok(pos, c)) {
            assign[x] = c;
            used += fresh;
            if (!rec(pos + 1)) return false;
            used -= fresh;
            assign[x] = 0;
          }
        }
        s = (s - allowed) & allowed;
        if (s == 0) break;
      }
    }
    return true;
  }
};

} // namespace

void for_each_representation(const Poset& p, const Request& req,
                             const std::function<bool(const std::vector<Mask>&)>& visit) {
  Engine e(p, req);
  e.visit = &visit;
  e.rec(0);
}

std::optional<std::vector<Mask>> find_representation(const Poset& p, const Request& req) {
  std::optional<std::vector<Mask>> out;
  for_each_representation(p, req, [&](const std::vector<Mask>& m) {
    out = m;
    return false;
  });
  return out;
}

bool profile_realizable(const Poset& p, int ground, const std::vector<int>& sizes) {
  Request req{ground, sizes, true, true};
  return find_representation(p, req).has_value();
}

} // namespace search

namespace {

// Engine assignments use a prefix of the label range; name the labels 1..k.
Representation masks_to_representation(const std::vector<Mask>& masks) {
  Mask used = 0;
  for (Mask s : masks) used |= s;
  Representation r;
  for (int i = 0; i < mask_size(used); ++i) r.ground.push_back(std::to_string(i + 1));
  r.sets = masks;
  return r;
}

// Reducibility is a property of the size profile alone: some representation
// must fit ground g and sizes s with one of the quantities strictly smaller.
bool profile_reducible(const Poset& p, int g, const std::vector<int>& sizes,
                       std::vector<Mask>* witness) {
  if (g >= 1) {
    search::Request req{g - 1, sizes, false, false};
    if (auto m = search::find_representation(p, req)) {
      if (witness) *witness = *m;
      return true;
    }
  }
  for (int x = 0; x < p.size(); ++x) {
    if (sizes[x] == 0) continue;
    auto tighter = sizes;
    tighter[x] -= 1;
    search::Request req{g, tighter, false, false};
    if (auto m = search::find_representation(p, req)) {
      if (witness) *witness = *m;
      return true;
    }
  }
  return false;
}

} // namespace

std::pair<bool, std::optional<Representation>> is_irreducible(const Poset& p,
                                                              const Representation& r, int cap) {
  require_valid(p, r, "is_irreducible");
  if (p.size() > cap) throw cap_error("irreducibility test exceeds the brute-force cap");
  auto [g, sizes] = r.profile();
  std::vector<Mask> witness;
  if (profile_reducible(p, g, sizes, &witness))
    return {false, masks_to_representation(witness)};
  return {true, std::nullopt};
}

Representation reduce_to_irreducible(const Poset& p, const Representation& r, int cap) {
  require_valid(p, r, "reduce_to_irreducible");
  Representation cur = r;
  auto adopt_if_strict = [&](Representation cand) {
    if (compare_representations(p, cand, cur).is_strict) {
      cur = std::move(cand);
      return true;
    }
    return false;
  };
  for (;;) {
    // Cheap constructive attempts first; each adoption strictly shrinks the
    // profile, so this loop terminates.
    if (p.size() <= kGroundCap && adopt_if_strict(canonical_representation(p))) continue;
    if (auto viol = find_any_violation(p)) {
      if (adopt_if_strict(strict_reduction_from_violation(p, *viol))) continue;
    }
    // Pivot reductions recurse into a strictly smaller poset; they are worth
    // trying while the profile is still bloated beyond canonical size.
    if (cur.ground_size() > p.size()) {
      bool advanced = false;
      for (int y = 0; y < p.size() && !advanced; ++y) {
        bool unique_max = true;
        for (int x = 0; x < p.size() && unique_max; ++x)
          if (!p.leq(x, y)) unique_max = false;
        if (unique_max) continue;
        try {
          if (adopt_if_strict(pivot_reduce(p, cur, y))) advanced = true;
        } catch (const cap_error&) {
          // the recursive reduction hit its own cap; other pivots may not
        }
      }
      if (advanced) continue;
    }
    auto [irr, witness] = is_irreducible(p, cur, cap);
    if (irr) return cur;
    cur = std::move(*witness);
  }
}

int cube_height(const Poset& p, Representation* witness, int cap) {
  if (p.size() > cap) throw cap_error("cube height exceeds the brute-force cap");
  const int ml = std::min(p.size(), kGroundCap); // some optimal rep is irreducible, so ground <= |P|
  for (int h = 0; h <= p.size(); ++h) {
    search::Request req{ml, std::vector<int>(p.size(), h), false, false};
    if (auto m = search::find_representation(p, req)) {
      if (witness) *witness = masks_to_representation(*m);
      return h;
    }
  }
  throw std::logic_error("no representation with sets up to |P| labels");
}

int two_dimension(const Poset& p, Representation* witness, int cap) {
  if (p.size() > cap) throw cap_error("two-dimension exceeds the brute-force cap");
  for (int w = 0; w <= std::min(p.size(), kGroundCap); ++w) {
    search::Request req{w, {}, false, false};
    if (auto m = search::find_representation(p, req)) {
      if (witness) *witness = masks_to_representation(*m);
      return w;
    }
  }
  throw std::logic_error("no representation with ground up to |P|");
}

int cube_width(const Poset& p, Representation* witness, int cap) {
  if (p.size() > cap) throw cap_error("cube width exceeds the brute-force cap");
  const int h = cube_height(p, nullptr, cap);
  for (int w = 0; w <= std::min(p.size(), kGroundCap); ++w) {
    search::Request req{w, std::vector<int>(p.size(), h), false, false};
    if (auto m = search::find_representation(p, req)) {
      if (witness) *witness = masks_to_representation(*m);
      return w;
    }
  }
  throw std::logic_error("no minimum-height representation with ground up to |P|");
}

int max_irreducible_ground(const Poset& p, Representation* witness, int cap, int start_w) {
  if (p.size() > cap) throw cap_error("irreducible search exceeds the brute-force cap");
  const int n = p.size();
  const int from = start_w < 0 ? n : start_w;
  if (from > kGroundCap) throw cap_error("label search exceeds the 64-label cap");
  std::map<std::pair<int, std::vector<int>>, bool> profile_irr;
  auto irreducible_profile = [&](int g, const std::vector<int>& sizes) {
    auto [it, fresh] = profile_irr.try_emplace({g, sizes}, false);
    if (fresh) it->second = !profile_reducible(p, g, sizes, nullptr);
    return it->second;
  };
  for (int w = from; w >= 0; --w) {
    if (w == n && n <= kGroundCap) {
      // The canonical representation is the preferred full-ground witness.
      Representation canon = canonical_representation(p);
      auto [g, sizes] = canon.profile();
      if (irreducible_profile(g, sizes)) {
        if (witness) *witness = std::move(canon);
        return n;
      }
    }
    std::optional<std::vector<Mask>> found;
    search::Request req{w, {}, false, true};
    search::for_each_representation(p, req, [&](const std::vector<Mask>& m) {
      std::vector<int> sizes(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) sizes[i] = mask_size(m[i]);
      if (irreducible_profile(w, sizes)) {
        found = m;
        return false;
      }
      return true;
    });
    if (found) {
      if (witness) *witness = masks_to_representation(*found);
      return w;
    }
  }
  throw std::logic_error("even the empty ground admits no irreducible representation");
}

int sperner_antichain_dim2(long long count) {
  if (count < 1) throw std::invalid_argument("count must be positive");
  for (int s = 0;; ++s)
    if (binomial(s, s / 2) >= count) return s;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::decomposition: return "decomposition";
    case Method::closed_form: return "closed-form";
  }
  return "?";
}

// ---- parameter reports ------------------------------------------------------

ParamReport params_brute(const Poset& p, int cap) {
  if (p.size() > cap) throw cap_error("poset exceeds the brute-force cap");
  ParamReport r;
  r.n = p.size();
  r.method = Method::brute;
  Representation w;
  r.ch = cube_height(p, &w, cap);
  r.ch_witness = w;
  r.dim2 = two_dimension(p, &w, cap);
  r.dim2_witness = w;
  r.cw = cube_width(p, &w, cap);
  r.cw_witness = w;
  r.iir = max_irreducible_ground(p, &w, cap);
  r.iir_witness = w;
  return r;
}

namespace {

enum class Shape { single, chain, antichain, general };

Shape block_shape(const Poset& q) {
  if (q.size() == 1) return Shape::single;
  if (q.is_chain()) return Shape::chain;
  if (q.is_antichain()) return Shape::antichain;
  return Shape::general;
}

struct BlockParams {
  int ch = 0, dim2 = 0, cw = 0, iir = 0;
  Representation ch_w, dim2_w, cw_w, iir_w;
};

BlockParams chain_params(const Poset& q) {
  const int k = q.size();
  std::vector<int> ord(k);
  std::iota(ord.begin(), ord.end(), 0);
  std::sort(ord.begin(), ord.end(),
            [&](int a, int b) { return q.down_size(a) < q.down_size(b); });
  Representation r; // nested prefixes: sizes 0..k-1 over the lower k-1 labels
  for (int j = 0; j + 1 < k; ++j) r.ground.push_back(q.label(ord[j]));
  r.sets.resize(k);
  Mask m = 0;
  for (int j = 0; j < k; ++j) {
    r.sets[ord[j]] = m;
    m |= Mask{1} << j;
  }
  BlockParams bp{k - 1, k - 1, k - 1, k - 1, r, r, r, r};
  return bp;
}

BlockParams antichain_params(const Poset& q) {
  const int k = q.size();
  BlockParams bp;
  bp.ch = 1;
  bp.dim2 = sperner_antichain_dim2(k);
  bp.cw = k;
  bp.iir = k;
  Representation singletons = canonical_representation(q);
  bp.ch_w = singletons;
  bp.cw_w = singletons;
  bp.iir_w = std::move(singletons);
  // Distinct half-size subsets of a minimal symmetric ground; the first k in
  // ascending mask order always cover every label.
  const int s = bp.dim2;
  Representation d;
  for (int i = 0; i < s; ++i) d.ground.push_back(std::to_string(i + 1));
  for (Mask m = 0; static_cast<int>(d.sets.size()) < k; ++m)
    if (mask_size(m) == s / 2) d.sets.push_back(m);
  bp.dim2_w = std::move(d);
  return bp;
}

BlockParams single_params(const Poset&) {
  BlockParams bp;
  bp.ch_w.sets = {0};
  bp.dim2_w = bp.cw_w = bp.iir_w = bp.ch_w;
  return bp;
}

BlockParams block_params(const Poset& q, int cap) {
  switch (block_shape(q)) {
    case Shape::single: return single_params(q);
    case Shape::chain: return chain_params(q);
    case Shape::antichain: return antichain_params(q);
    case Shape::general: {
      ParamReport r = params_brute(q, cap);
      return {r.ch,         r.dim2,          r.cw,          r.iir,
              *r.ch_witness, *r.dim2_witness, *r.cw_witness, *r.iir_witness};
    }
  }
  return {};
}

// Reorder a vertical-sum representation back to the original element ids.
Representation reorder_to_poset(const Poset& p, const Decomposition& d, Representation comp) {
  Representation out;
  out.ground = std::move(comp.ground);
  out.sets.resize(p.size());
  int pos = 0;
  for (const auto& ids : d.embedding)
    for (int id : ids) out.sets[id] = comp.sets[pos++];
  return out;
}

} // namespace

ParamReport params_via_block_decomposition(const Poset& p, int cap) {
  auto d = block_decomposition(p);
  const std::size_t t = d.parts.size();
  std::vector<BlockParams> bp;
  bp.reserve(t);
  for (const auto& q : d.parts) bp.push_back(block_params(q, cap));
  ParamReport r;
  r.n = p.size();
  if (t >= 2)
    r.method = Method::decomposition;
  else
    r.method = block_shape(p) == Shape::general ? Method::brute : Method::closed_form;
  int prefix_dim2 = 0;
  for (std::size_t i = 0; i + 1 < t; ++i) prefix_dim2 += bp[i].dim2;
  r.ch = prefix_dim2 + bp[t - 1].ch;
  r.dim2 = prefix_dim2 + bp[t - 1].dim2;
  r.cw = prefix_dim2 + bp[t - 1].cw;
  r.iir = 0;
  for (const auto& b : bp) r.iir += b.iir;
  auto build = [&](Representation BlockParams::* prefix_pick, Representation BlockParams::* last_pick) {
    std::vector<std::pair<Poset, Representation>> parts;
    for (std::size_t i = 0; i < t; ++i)
      parts.emplace_back(d.parts[i], bp[i].*(i + 1 < t ? prefix_pick : last_pick));
    return reorder_to_poset(p, d, compose_vertical_reps(parts));
  };
  r.ch_witness = build(&BlockParams::dim2_w, &BlockParams::ch_w);
  r.dim2_witness = build(&BlockParams::dim2_w, &BlockParams::dim2_w);
  r.cw_witness = build(&BlockParams::dim2_w, &BlockParams::cw_w);
  r.iir_witness = build(&BlockParams::iir_w, &BlockParams::iir_w);
  return r;
}

ParamReport params_auto(const Poset& p, int cap) {
  auto d = block_decomposition(p);
  if (d.parts.size() >= 2 || block_shape(p) != Shape::general)
    return params_via_block_decomposition(p, cap);
  return params_brute(p, cap);
}

int disjoint_sum_cube_height(const std::vector<Poset>& parts, int cap) {
  if (parts.size() < 2) throw std::invalid_argument("need at least two parts");
  std::vector<int> ch(parts.size());
  int h0 = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    ch[i] = params_auto(parts[i], cap).ch;
    h0 = std::max(h0, ch[i]);
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (ch[i] == h0 && parts[i].minimal_elements().size() == 1) return h0 + 1;
  return h0;
}

} // namespace pcube
