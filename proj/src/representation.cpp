#include "pcube/representation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pcube/errors.hpp"
#include "pcube/solvers.hpp"

namespace pcube {

std::pair<int, std::vector<int>> Representation::profile() const {
  std::vector<int> sizes(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) sizes[i] = mask_size(sets[i]);
  return {ground_size(), std::move(sizes)};
}

Representation make_representation(std::vector<std::string> ground, std::vector<Mask> sets) {
  if (ground.size() > kGroundCap)
    throw cap_error("representation ground exceeds " + std::to_string(kGroundCap) + " labels");
  std::set<std::string> seen;
  for (const auto& l : ground) {
    if (l.empty()) throw invalid_representation("empty ground label");
    if (!seen.insert(l).second) throw invalid_representation("duplicate ground label: " + l);
  }
  Representation r{std::move(ground), std::move(sets)};
  Mask gm = r.ground_mask(), used = 0;
  for (Mask s : r.sets) {
    if (!mask_subset(s, gm))
      throw invalid_representation("set refers to label outside ground");
    used |= s;
  }
  if (used != gm)
    throw invalid_representation("ground label not used by any set");
  return r;
}

Representation trim_orphan_labels(const Representation& r) {
  Mask used = 0;
  for (Mask s : r.sets) used |= s;
  std::vector<std::string> ground;
  std::vector<int> newbit(r.ground.size(), -1);
  for (int i = 0; i < r.ground_size(); ++i)
    if (used >> i & 1) {
      newbit[i] = static_cast<int>(ground.size());
      ground.push_back(r.ground[i]);
    }
  Representation out;
  out.ground = std::move(ground);
  out.sets.reserve(r.sets.size());
  for (Mask s : r.sets) {
    Mask t = 0;
    for (int i = 0; i < r.ground_size(); ++i)
      if (s >> i & 1) t |= Mask{1} << newbit[i];
    out.sets.push_back(t);
  }
  return out;
}

Representation restrict_representation(const Representation& r, const std::vector<int>& ids) {
  Representation picked;
  picked.ground = r.ground;
  picked.sets.reserve(ids.size());
  for (int id : ids) picked.sets.push_back(r.sets[id]);
  return trim_orphan_labels(picked);
}

Representation canonical_representation(const Poset& p) {
  const int n = p.size();
  if (n > kGroundCap)
    throw cap_error("canonical representation needs one label per element; poset too large");
  Representation r;
  r.ground = p.labels();
  r.sets.resize(n);
  for (int x = 0; x < n; ++x) {
    Mask m = Mask{1} << x;
    for (int y = 0; y < n; ++y)
      if (p.less(y, x)) m |= Mask{1} << y;
    r.sets[x] = m;
  }
  return r;
}

ValidationResult validate_representation(const Poset& p, const Representation& r) {
  auto fail = [](std::string msg, int x = -1, int y = -1) {
    return ValidationResult{false, std::move(msg), x, y};
  };
  if (r.sets.size() != static_cast<std::size_t>(p.size()))
    return fail("representation has " + std::to_string(r.sets.size()) + " sets for " +
                std::to_string(p.size()) + " elements");
  if (r.ground.size() > kGroundCap) return fail("ground exceeds the 64-label cap");
  {
    std::set<std::string> seen;
    for (const auto& l : r.ground) {
      if (l.empty()) return fail("empty ground label");
      if (!seen.insert(l).second) return fail("duplicate ground label: " + l);
    }
  }
  Mask gm = r.ground_mask(), used = 0;
  for (int x = 0; x < p.size(); ++x) {
    if (!mask_subset(r.sets[x], gm))
      return fail("set of '" + p.label(x) + "' refers to a label outside ground", x);
    used |= r.sets[x];
  }
  if (used != gm) {
    int i = std::countr_one(used); // first bit where used and ground disagree
    return fail("ground label '" + r.ground[i] + "' is not used by any set");
  }
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (x == y) continue;
      bool incl = mask_subset(r.sets[x], r.sets[y]);
      bool le = p.less(x, y);
      if (incl && !le)
        return fail("set of '" + p.label(x) + "' is included in set of '" + p.label(y) +
                        "' but the elements are not so ordered",
                    x, y);
      if (!incl && le)
        return fail("'" + p.label(x) + "' < '" + p.label(y) +
                        "' but the set inclusion does not hold",
                    x, y);
    }
  return {};
}

void require_valid(const Poset& p, const Representation& r, const char* who) {
  auto v = validate_representation(p, r);
  if (!v.ok) throw invalid_representation(std::string(who) + ": " + v.message);
}

ComparisonVerdict compare_representations(const Poset& p, const Representation& r,
                                          const Representation& r2) {
  require_valid(p, r, "compare_representations (first)");
  require_valid(p, r2, "compare_representations (second)");
  auto reduction_witness = [&](const Representation& a, const Representation& b)
      -> std::optional<std::string> { // reason a is NOT a reduction of b
    if (a.ground_size() > b.ground_size())
      return "ground " + std::to_string(a.ground_size()) + " > " + std::to_string(b.ground_size());
    for (int x = 0; x < p.size(); ++x)
      if (a.set_size(x) > b.set_size(x))
        return "|S_" + p.label(x) + "| " + std::to_string(a.set_size(x)) + " > " +
               std::to_string(b.set_size(x));
    return std::nullopt;
  };
  ComparisonVerdict v;
  auto fwd = reduction_witness(r, r2);
  auto bwd = reduction_witness(r2, r);
  v.is_reduction = !fwd.has_value();
  v.is_equivalent = !fwd.has_value() && !bwd.has_value();
  v.is_strict = v.is_reduction && !v.is_equivalent;
  if (!v.is_reduction)
    v.witness = *fwd;
  else if (v.is_strict)
    v.witness = "strict: " + *bwd;
  return v;
}

bool representations_isomorphic(const Poset& p, const Representation& r,
                                const Representation& r2, std::vector<int>* witness) {
  require_valid(p, r, "representations_isomorphic (first)");
  require_valid(p, r2, "representations_isomorphic (second)");
  if (r.ground_size() != r2.ground_size()) return false;
  // A ground bijection f carries every S_x onto S'_x iff each label's
  // membership pattern (which elements' sets contain it) matches its image's,
  // so isomorphism holds iff the pattern multisets coincide.
  const int n = p.size();
  const int words = (n + 63) / 64;
  auto patterns = [&](const Representation& rep) {
    std::map<std::vector<std::uint64_t>, std::vector<int>> by_pattern;
    for (int g = 0; g < rep.ground_size(); ++g) {
      std::vector<std::uint64_t> pat(words, 0);
      for (int x = 0; x < n; ++x)
        if (rep.sets[x] >> g & 1) pat[x / 64] |= std::uint64_t{1} << (x % 64);
      by_pattern[pat].push_back(g);
    }
    return by_pattern;
  };
  auto pa = patterns(r), pb = patterns(r2);
  if (pa.size() != pb.size()) return false;
  auto ia = pa.begin();
  auto ib = pb.begin();
  for (; ia != pa.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.size() != ib->second.size()) return false;
  if (witness) {
    witness->assign(r.ground_size(), -1);
    for (ia = pa.begin(), ib = pb.begin(); ia != pa.end(); ++ia, ++ib)
      for (std::size_t i = 0; i < ia->second.size(); ++i)
        (*witness)[ia->second[i]] = ib->second[i];
  }
  return true;
}

// ---- composition and splitting ---------------------------------------------

namespace {

// First unused index for the reserved fresh-label namespace "@k".
int fresh_label_start(const std::vector<std::vector<std::string>>& grounds) {
  int k = 0;
  for (const auto& g : grounds)
    for (const auto& l : g) {
      if (l.size() < 2 || l[0] != '@') continue;
      bool digits = std::all_of(l.begin() + 1, l.end(), [](char c) { return c >= '0' && c <= '9'; });
      if (digits) k = std::max(k, std::stoi(l.substr(1)) + 1);
    }
  return k;
}

// Part grounds with cross-part name clashes renamed to "p<i>.<label>".
std::vector<std::vector<std::string>> disjoint_grounds(
    const std::vector<std::pair<Poset, Representation>>& parts) {
  std::map<std::string, int> count;
  for (const auto& [q, rep] : parts)
    for (const auto& l : rep.ground) count[l]++;
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.emplace_back();
    for (const auto& l : parts[i].second.ground)
      out.back().push_back(count[l] > 1 ? "p" + std::to_string(i) + "." + l : l);
  }
  return out;
}

} // namespace

Representation compose_disjoint_reps(const std::vector<std::pair<Poset, Representation>>& parts) {
  if (parts.empty()) throw parse_error("sum needs at least one part");
  for (const auto& [q, rep] : parts) require_valid(q, rep, "compose_disjoint_reps");
  auto grounds = disjoint_grounds(parts);
  int fresh = fresh_label_start(grounds);
  Representation out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& rep = parts[i].second;
    bool has_empty = std::any_of(rep.sets.begin(), rep.sets.end(), [](Mask s) { return s == 0; });
    int offset = out.ground_size();
    if (offset + grounds[i].size() + (has_empty ? 1 : 0) > kGroundCap)
      throw cap_error("composed ground exceeds the 64-label cap");
    out.ground.insert(out.ground.end(), grounds[i].begin(), grounds[i].end());
    Mask extra = 0;
    if (has_empty) { // the part has a unique minimal element; lift it off bottom
      extra = Mask{1} << out.ground_size();
      out.ground.push_back("@" + std::to_string(fresh++));
    }
    for (Mask s : rep.sets) out.sets.push_back((s << offset) | extra);
  }
  return out;
}

std::vector<Representation> split_component_reps(const Poset& p, const Representation& r) {
  require_valid(p, r, "split_component_reps");
  std::vector<Representation> out;
  for (const auto& ids : component_decomposition(p).embedding)
    out.push_back(restrict_representation(r, ids));
  return out;
}

Representation compose_vertical_reps(const std::vector<std::pair<Poset, Representation>>& parts) {
  if (parts.empty()) throw parse_error("sum needs at least one part");
  for (const auto& [q, rep] : parts) require_valid(q, rep, "compose_vertical_reps");
  auto grounds = disjoint_grounds(parts);
  Representation out;
  Mask below = 0; // union of the grounds of all earlier parts
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int offset = out.ground_size();
    if (offset + grounds[i].size() > kGroundCap)
      throw cap_error("composed ground exceeds the 64-label cap");
    out.ground.insert(out.ground.end(), grounds[i].begin(), grounds[i].end());
    for (Mask s : parts[i].second.sets) out.sets.push_back((s << offset) | below);
    below |= parts[i].second.ground_mask() << offset;
  }
  std::vector<Poset> posets;
  for (const auto& [q, rep] : parts) posets.push_back(q);
  auto v = validate_representation(vertical_sum(posets), out);
  if (!v.ok)
    throw invalid_representation(
        "compose_vertical_reps: parts compose to an invalid representation (" + v.message + ")");
  return out;
}

std::vector<Representation> split_block_reps(const Poset& p, const Representation& r) {
  require_valid(p, r, "split_block_reps");
  std::vector<Representation> out;
  Mask w = 0;
  for (const auto& ids : block_decomposition(p).embedding) {
    Representation part;
    part.ground = r.ground;
    Mask w_next = 0;
    for (int id : ids) {
      part.sets.push_back(r.sets[id] & ~w);
      w_next |= r.sets[id];
    }
    out.push_back(trim_orphan_labels(part));
    w = w_next;
  }
  return out;
}

// ---- pivot reduction --------------------------------------------------------

namespace {

struct PivotData {
  PivotContext ctx;
  std::vector<Mask> delta_masks; // q_prime id -> difference set over r.ground
  std::vector<int> q_ids;        // p ids outside D_P[y]
};

PivotData pivot_data(const Poset& p, const Representation& r, int y) {
  require_valid(p, r, "pivot_reduce");
  if (y < 0 || y >= p.size()) throw std::invalid_argument("pivot id out of range");
  const Mask sy = r.sets[y];
  std::vector<int> q_ids;
  std::set<Mask> distinct;
  for (int x = 0; x < p.size(); ++x)
    if (!p.leq(x, y)) {
      q_ids.push_back(x);
      distinct.insert(r.sets[x] & ~sy);
    }
  if (q_ids.empty())
    throw std::invalid_argument("pivot is the unique maximal element");
  std::vector<Mask> delta_masks(distinct.begin(), distinct.end());
  const int m = static_cast<int>(delta_masks.size());
  std::vector<std::string> labels(m);
  std::vector<unsigned char> lt(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    labels[i] = "q" + std::to_string(i);
    for (int j = 0; j < m; ++j)
      if (i != j && mask_subset(delta_masks[i], delta_masks[j])) lt[i * m + j] = 1;
  }
  Poset q_prime = Poset::from_closed_relation(labels, lt);
  int epsilon = static_cast<int>(q_prime.minimal_elements().size()) == 1 ? 1 : 0;
  std::vector<int> delta_class(p.size(), -1);
  for (int x : q_ids) {
    Mask delta = r.sets[x] & ~sy;
    delta_class[x] = static_cast<int>(
        std::lower_bound(delta_masks.begin(), delta_masks.end(), delta) - delta_masks.begin());
  }
  return PivotData{PivotContext{std::move(q_prime), epsilon, mask_size(sy), std::move(delta_class)},
                   std::move(delta_masks), std::move(q_ids)};
}

} // namespace

PivotContext pivot_context(const Poset& p, const Representation& r, int y) {
  return pivot_data(p, r, y).ctx;
}

Representation pivot_reduce(const Poset& p, const Representation& r, int y) {
  PivotData d = pivot_data(p, r, y);
  const Poset& qp = d.ctx.q_prime;
  // A = the unique minimal difference set (present in every difference set),
  // or empty; shifting it off gives another representation of q_prime.
  Mask a = 0;
  if (d.ctx.epsilon == 1) a = d.delta_masks[qp.minimal_elements()[0]];
  Representation shifted;
  shifted.ground = r.ground;
  for (Mask delta : d.delta_masks) shifted.sets.push_back(delta & ~a);
  shifted = trim_orphan_labels(shifted);
  Representation reduced = reduce_to_irreducible(qp, shifted);
  // Rebuild over the original labels plus a fresh copy of reduced's ground.
  if (r.ground.size() + reduced.ground.size() > kGroundCap)
    throw cap_error("pivot reduction exceeds the 64-label cap");
  int fresh = fresh_label_start({r.ground});
  Representation out;
  out.ground = r.ground;
  for (std::size_t i = 0; i < reduced.ground.size(); ++i)
    out.ground.push_back("@" + std::to_string(fresh++));
  const int offset = r.ground_size();
  Mask a_pick = d.ctx.epsilon == 1 ? a & ~(a - 1) : 0; // lowest label of A
  out.sets.resize(p.size());
  const Mask sy = r.sets[y];
  for (int x = 0; x < p.size(); ++x) {
    if (d.ctx.delta_class[x] < 0) {
      out.sets[x] = r.sets[x];
    } else {
      Mask fresh_part = reduced.sets[d.ctx.delta_class[x]] << offset;
      out.sets[x] = fresh_part | (r.sets[x] & sy) | a_pick;
    }
  }
  return trim_orphan_labels(out);
}

// ---- constructive strict reductions from property violations ----------------

namespace {

Mask open_down_mask(const Poset& p, int y) {
  Mask m = 0;
  for (int x = 0; x < p.size(); ++x)
    if (p.less(x, y)) m |= Mask{1} << x;
  return m;
}

bool two_down_witness_exists(const Poset& p, int y) {
  Mask dy = open_down_mask(p, y);
  for (int z = 0; z < p.size(); ++z)
    if (z != y && !p.comparable(y, z) && mask_subset(dy, open_down_mask(p, z))) return true;
  return false;
}

int lower_cover_count(const Poset& p, int y) {
  int c = 0;
  for (int x = 0; x < p.size(); ++x)
    if (p.is_cover(x, y)) ++c;
  return c;
}

// The two alternatives of the parallel-pair condition for the ordered pair.
bool parallel_pair_alternative(const Poset& p, int x, int y) {
  Mask dx = open_down_mask(p, x);
  for (int y2 = 0; y2 < p.size(); ++y2)
    if (p.leq(y, y2) && !p.comparable(x, y2) && x != y2 && mask_subset(dx, open_down_mask(p, y2)))
      return true;
  return false;
}

} // namespace

Representation strict_reduction_from_violation(const Poset& p, const Violation& v) {
  if (const auto* td = std::get_if<TwoDownViolation>(&v)) {
    int y = td->y;
    if (y < 0 || y >= p.size()) throw std::invalid_argument("element id out of range");
    if (lower_cover_count(p, y) < 2)
      throw std::invalid_argument("not a two-down violation: element covers fewer than 2");
    if (two_down_witness_exists(p, y))
      throw std::invalid_argument("not a two-down violation: a witness exists");
    Representation r = canonical_representation(p);
    r.sets[y] = open_down_mask(p, y);
    return trim_orphan_labels(r);
  }
  if (const auto* pp = std::get_if<ParallelPairViolation>(&v)) {
    int x = pp->x, y = pp->y;
    if (x < 0 || x >= p.size() || y < 0 || y >= p.size() || x == y)
      throw std::invalid_argument("element ids out of range");
    if (p.comparable(x, y))
      throw std::invalid_argument("not a parallel-pair violation: elements are comparable");
    if (parallel_pair_alternative(p, x, y) || parallel_pair_alternative(p, y, x))
      throw std::invalid_argument("not a parallel-pair violation: an alternative holds");
    Representation r = canonical_representation(p);
    for (int u = 0; u < p.size(); ++u)
      if (p.leq(y, u)) r.sets[u] = (r.sets[u] & ~(Mask{1} << y)) | (Mask{1} << x);
    return trim_orphan_labels(r);
  }
  const auto& cb = std::get<ChainBlockViolation>(v);
  auto d = block_decomposition(p);
  if (cb.block_index < 0 || cb.block_index >= static_cast<int>(d.parts.size()))
    throw std::invalid_argument("block index out of range");
  if (!d.parts[cb.block_index].is_chain())
    throw std::invalid_argument("not a chain-block violation: block is not a chain");
  std::vector<std::pair<Poset, Representation>> parts;
  for (const auto& q : d.parts) {
    if (q.is_chain()) {
      // Prefix representation: sizes 0..|C|-1 over the lower |C|-1 labels.
      Representation pre;
      for (int i = 0; i + 1 < q.size(); ++i) pre.ground.push_back(q.label(i));
      Mask m = 0;
      for (int i = 0; i < q.size(); ++i) {
        pre.sets.push_back(m);
        m |= Mask{1} << i;
      }
      parts.emplace_back(q, std::move(pre));
    } else {
      parts.emplace_back(q, canonical_representation(q));
    }
  }
  Representation comp = compose_vertical_reps(parts);
  // Reorder from vertical-sum element order back to p's ids.
  Representation out;
  out.ground = comp.ground;
  out.sets.resize(p.size());
  int pos = 0;
  for (const auto& ids : d.embedding)
    for (int id : ids) out.sets[id] = comp.sets[pos++];
  return out;
}

} // namespace pcube
