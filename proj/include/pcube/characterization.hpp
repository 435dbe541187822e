#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcube/poset.hpp"
#include "pcube/representation.hpp"

namespace pcube {

// The three structural properties whose conjunction characterizes the posets
// with a maximum-size irreducible representation, plus the derived classes.
enum class PropertyKind { no_chain_block, two_down, parallel_pair };

struct PropertyReport {
  std::string property;
  bool holds = true;
  std::vector<int> witness_elements; // violating element(s) when !holds
  std::string detail;
};

PropertyReport check_property(const Poset& p, PropertyKind kind);

// All three properties hold (equivalently: the canonical representation is
// irreducible; equivalently: some irreducible representation has ground |P|).
PropertyReport in_miir(const Poset& p);

// Nearly maximal: max irreducible ground is |P|, or |P|-1 with the first
// block a chain. Decided structurally: p in MIIR, or p's first block is a
// chain and every later block is in MIIR.
PropertyReport in_nmiir(const Poset& p);

// Blocks realizing the extremes: antichains (A, and A with 2..4 elements),
// a nontrivial chain plus one extra incomparable element (B), and the
// 4-element poset made of a 2-chain plus two isolated elements (Z).
enum class BlockClass { A, A234, B, Z };

std::set<BlockClass> classify_block_class(const Poset& p);

// Every block is in A234 | B | {Z}  <=>  two-dimension equals |P|.
PropertyReport in_mtd(const Poset& p);

// Last block in A | B | {Z} and the earlier blocks in MTD  <=>  cube width
// equals |P|.
PropertyReport in_mcw(const Poset& p);

// First property violation in a fixed scan order (chain blocks, then
// two-down, then parallel pairs); nullopt when p is in MIIR.
std::optional<Violation> find_any_violation(const Poset& p);

} // namespace pcube
