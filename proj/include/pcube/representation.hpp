#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pcube/poset.hpp"

namespace pcube {

// Ground sets are packed into machine words: at most 64 distinct labels per
// representation.  Every algorithm here keeps grounds <= |P| <= 64.
using Mask = std::uint64_t;
inline constexpr int kGroundCap = 64;

inline int mask_size(Mask m) { return std::popcount(m); }
inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Inclusion representation: one subset of the ground per poset element,
// with x <= y iff sets[x] included in sets[y].  Bit i of a set refers to
// ground[i].  Invariant: every ground label occurs in at least one set.
struct Representation {
  std::vector<std::string> ground;
  std::vector<Mask> sets; // indexed by poset element id

  int ground_size() const { return static_cast<int>(ground.size()); }
  int set_size(int x) const { return mask_size(sets[x]); }
  Mask ground_mask() const {
    return ground.empty() ? 0 : (~Mask{0} >> (kGroundCap - ground.size()));
  }
  // (ground size, per-element set sizes); whether a representation admits a
  // strict reduction depends only on this profile.
  std::pair<int, std::vector<int>> profile() const;
};

// Structural constructor: checks label distinctness, the 64-label cap, that
// set bits stay within the ground, and that no ground label is an orphan.
// Throws invalid_representation.  Does not look at any poset.
Representation make_representation(std::vector<std::string> ground, std::vector<Mask> sets);

// Drops unused ground labels (keeping order) and re-packs set bits.
Representation trim_orphan_labels(const Representation& r);

// Sets taken verbatim on the chosen element ids (output element j = ids[j]),
// ground trimmed to the labels those sets use.
Representation restrict_representation(const Representation& r, const std::vector<int>& ids);

// S_x = D_P[x] over the element labels themselves.
Representation canonical_representation(const Poset& p);

struct ValidationResult {
  bool ok = true;
  std::string message; // empty when ok
  int x = -1, y = -1;  // offending pair/element when applicable
};

// Full check: structure plus the inclusion-iff-order property in both
// directions; on failure reports the first violating pair (smallest ids).
ValidationResult validate_representation(const Poset& p, const Representation& r);
// Throws invalid_representation when validation fails.
void require_valid(const Poset& p, const Representation& r, const char* who);

struct ComparisonVerdict {
  bool is_reduction = false;  // r is a reduction of r2
  bool is_equivalent = false; // reductions both ways
  bool is_strict = false;     // reduction and not equivalent
  std::optional<std::string> witness; // size certificate for the verdict
};

// Verdict on "r is a reduction of r2": |ground(r)| <= |ground(r2)| and
// |r.S_x| <= |r2.S_x| for every x.  Both inputs must be valid for p.
ComparisonVerdict compare_representations(const Poset& p, const Representation& r,
                                          const Representation& r2);

// True iff some ground-label bijection carries every r.S_x onto r2.S_x.
// Decided exactly via label membership patterns; an optional witness maps
// ground indices of r to ground indices of r2.
bool representations_isomorphic(const Poset& p, const Representation& r,
                                const Representation& r2,
                                std::vector<int>* witness = nullptr);

// ---- composition and splitting ---------------------------------------------

// Representation of disjoint_sum(posets of parts): grounds are made disjoint
// by renaming clashes to "p<i>.<label>", and every part whose representation
// contains the empty set gets a fresh "@k" label added to all its sets.
Representation compose_disjoint_reps(const std::vector<std::pair<Poset, Representation>>& parts);

// One representation per connected component, sets verbatim.  Output order
// matches component_decomposition(p).parts.
std::vector<Representation> split_component_reps(const Poset& p, const Representation& r);

// Representation of vertical_sum(posets of parts): an element of part i keeps
// its own set plus the whole grounds of all earlier parts.  The result is
// validated; degenerate inputs (empty-ground parts can make distinct elements
// collapse onto equal sets) throw invalid_representation.
Representation compose_vertical_reps(const std::vector<std::pair<Poset, Representation>>& parts);

// One representation per block: block i keeps S_x minus the union of the
// previous block's sets.  Output order matches block_decomposition(p).parts.
std::vector<Representation> split_block_reps(const Poset& p, const Representation& r);

// ---- pivot reduction --------------------------------------------------------

// The inclusion order Q' on the distinct difference sets {S_x - S_y : x not<= y},
// together with the data the ground bound of pivot_reduce is stated in:
// ground(pivot_reduce(p, r, y)) <= iir(q_prime) + epsilon + pivot_set_size.
struct PivotContext {
  Poset q_prime;                 // inclusion order on the difference sets
  int epsilon = 0;               // 1 iff q_prime has a unique minimal element
  int pivot_set_size = 0;        // |S_y|
  std::vector<int> delta_class;  // per p-element: q_prime id, or -1 inside D[y]
};

PivotContext pivot_context(const Poset& p, const Representation& r, int y);

// Rebuilds r around pivot y: sets over D_P[y] stay, the rest are rebuilt from
// an irreducible reduction of the shifted difference family on fresh labels.
// Per-element sizes never grow.  y must not be the unique maximal element.
Representation pivot_reduce(const Poset& p, const Representation& r, int y);

// ---- constructive strict reductions from property violations ----------------

struct TwoDownViolation { int y; };          // y covers >= 2, no two-down witness
struct ParallelPairViolation { int x, y; };  // incomparable, both alternatives fail
struct ChainBlockViolation { int block_index; };
using Violation = std::variant<TwoDownViolation, ParallelPairViolation, ChainBlockViolation>;

// Builds a valid strict reduction of canonical_representation(p) from a
// genuine property violation; throws std::invalid_argument when the supplied
// witness is not actually a violation.
Representation strict_reduction_from_violation(const Poset& p, const Violation& v);

} // namespace pcube
