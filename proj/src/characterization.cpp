#include "pcube/characterization.hpp"

#include <algorithm>

namespace pcube {

namespace {

bool down_contained(const Poset& p, int y, int z) { // D(y) subset of D(z), both open
  for (int x = 0; x < p.size(); ++x)
    if (p.less(x, y) && !p.less(x, z)) return false;
  return true;
}

int lower_cover_count(const Poset& p, int y) {
  int c = 0;
  for (int x = 0; x < p.size(); ++x)
    if (p.is_cover(x, y)) ++c;
  return c;
}

bool two_down_witness(const Poset& p, int y) {
  for (int z = 0; z < p.size(); ++z)
    if (z != y && !p.comparable(y, z) && down_contained(p, y, z)) return true;
  return false;
}

// One alternative of the parallel-pair condition for the ordered pair (x, y):
// some y' above y has D(x) inside D(y') and stays incomparable to x.
bool parallel_pair_alternative(const Poset& p, int x, int y) {
  for (int y2 = 0; y2 < p.size(); ++y2)
    if (y2 != x && p.leq(y, y2) && !p.comparable(x, y2) && down_contained(p, x, y2)) return true;
  return false;
}

} // namespace

PropertyReport check_property(const Poset& p, PropertyKind kind) {
  PropertyReport rep;
  switch (kind) {
    case PropertyKind::no_chain_block: {
      rep.property = "no-chain-block";
      for (int x = 0; x < p.size(); ++x) {
        bool has_parallel = false;
        for (int y = 0; y < p.size() && !has_parallel; ++y)
          if (y != x && !p.comparable(x, y)) has_parallel = true;
        if (!has_parallel) {
          rep.holds = false;
          rep.witness_elements = {x};
          rep.detail = "'" + p.label(x) + "' is comparable to every other element";
          return rep;
        }
      }
      rep.detail = "every element has an incomparable partner";
      return rep;
    }
    case PropertyKind::two_down: {
      rep.property = "two-down";
      for (int y = 0; y < p.size(); ++y) {
        if (lower_cover_count(p, y) < 2) continue;
        if (!two_down_witness(p, y)) {
          rep.holds = false;
          rep.witness_elements = {y};
          rep.detail = "'" + p.label(y) +
                       "' covers two elements but nothing incomparable to it has a larger strict "
                       "down-set";
          return rep;
        }
      }
      rep.detail = "every element covering two has an incomparable dominator";
      return rep;
    }
    case PropertyKind::parallel_pair: {
      rep.property = "parallel-pair";
      for (int x = 0; x < p.size(); ++x)
        for (int y = x + 1; y < p.size(); ++y) {
          if (p.comparable(x, y)) continue;
          if (parallel_pair_alternative(p, x, y) || parallel_pair_alternative(p, y, x)) continue;
          rep.holds = false;
          rep.witness_elements = {x, y};
          rep.detail = "incomparable pair ('" + p.label(x) + "', '" + p.label(y) +
                       "') admits neither extension";
          return rep;
        }
      rep.detail = "every incomparable pair extends on one side";
      return rep;
    }
  }
  return rep; // unreachable
}

PropertyReport in_miir(const Poset& p) {
  for (auto kind :
       {PropertyKind::no_chain_block, PropertyKind::two_down, PropertyKind::parallel_pair}) {
    PropertyReport r = check_property(p, kind);
    if (!r.holds) {
      r.detail = "fails " + r.property + ": " + r.detail;
      r.property = "max-irreducible";
      return r;
    }
  }
  return {"max-irreducible", true, {}, "all three structural properties hold"};
}

PropertyReport in_nmiir(const Poset& p) {
  PropertyReport out{"nearly-max-irreducible", true, {}, ""};
  PropertyReport m = in_miir(p);
  if (m.holds) {
    out.detail = "already maximal";
    return out;
  }
  auto d = block_decomposition(p);
  if (!d.parts[0].is_chain()) {
    out.holds = false;
    out.witness_elements = m.witness_elements;
    out.detail = "not maximal and the first block is not a chain";
    return out;
  }
  for (std::size_t i = 1; i < d.parts.size(); ++i) {
    if (!in_miir(d.parts[i]).holds) {
      out.holds = false;
      out.witness_elements = d.embedding[i];
      out.detail = "block " + std::to_string(i + 1) + " is not maximal";
      return out;
    }
  }
  out.detail = "first block is a chain and every later block is maximal";
  return out;
}

std::set<BlockClass> classify_block_class(const Poset& p) {
  std::set<BlockClass> out;
  const int n = p.size();
  if (p.is_antichain() && n >= 2) {
    out.insert(BlockClass::A);
    if (n <= 4) out.insert(BlockClass::A234);
  }
  auto comp = component_decomposition(p);
  if (comp.parts.size() == 2) {
    const Poset& a = comp.parts[0];
    const Poset& b = comp.parts[1];
    const Poset& big = a.size() >= b.size() ? a : b;
    const Poset& small = a.size() >= b.size() ? b : a;
    if (small.size() == 1 && big.size() >= 2 && big.is_chain()) out.insert(BlockClass::B);
  }
  if (n == 4 && comp.parts.size() == 3) {
    int singles = 0, two_chains = 0;
    for (const auto& q : comp.parts) {
      if (q.size() == 1) ++singles;
      if (q.size() == 2 && q.is_chain()) ++two_chains;
    }
    if (singles == 2 && two_chains == 1) out.insert(BlockClass::Z);
  }
  return out;
}

namespace {

bool in_max_td_classes(const Poset& q) {
  auto c = classify_block_class(q);
  return c.count(BlockClass::A234) || c.count(BlockClass::B) || c.count(BlockClass::Z);
}

bool in_max_cw_classes(const Poset& q) {
  auto c = classify_block_class(q);
  return c.count(BlockClass::A) || c.count(BlockClass::B) || c.count(BlockClass::Z);
}

} // namespace

PropertyReport in_mtd(const Poset& p) {
  PropertyReport out{"max-two-dimension", true, {}, ""};
  auto d = block_decomposition(p);
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    if (!in_max_td_classes(d.parts[i])) {
      out.holds = false;
      out.witness_elements = d.embedding[i];
      out.detail = "block " + std::to_string(i + 1) +
                   " is not a small antichain, chain-plus-point, or the 4-element exception";
      return out;
    }
  out.detail = "every block realizes maximal two-dimension";
  return out;
}

PropertyReport in_mcw(const Poset& p) {
  PropertyReport out{"max-cube-width", true, {}, ""};
  auto d = block_decomposition(p);
  const std::size_t t = d.parts.size();
  for (std::size_t i = 0; i + 1 < t; ++i)
    if (!in_max_td_classes(d.parts[i])) {
      out.holds = false;
      out.witness_elements = d.embedding[i];
      out.detail = "block " + std::to_string(i + 1) + " does not realize maximal two-dimension";
      return out;
    }
  if (!in_max_cw_classes(d.parts[t - 1])) {
    out.holds = false;
    out.witness_elements = d.embedding[t - 1];
    out.detail = "last block is not an antichain, chain-plus-point, or the 4-element exception";
    return out;
  }
  out.detail = "earlier blocks realize maximal two-dimension and the last maximal cube width";
  return out;
}

std::optional<Violation> find_any_violation(const Poset& p) {
  auto d = block_decomposition(p);
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    if (d.parts[i].is_chain()) return Violation{ChainBlockViolation{static_cast<int>(i)}};
  for (int y = 0; y < p.size(); ++y)
    if (lower_cover_count(p, y) >= 2 && !two_down_witness(p, y))
      return Violation{TwoDownViolation{y}};
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y)
      if (!p.comparable(x, y) && !parallel_pair_alternative(p, x, y) &&
          !parallel_pair_alternative(p, y, x))
        return Violation{ParallelPairViolation{x, y}};
  return std::nullopt;
}

} // namespace pcube
