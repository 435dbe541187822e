#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pcube {

// How two elements of a poset relate.
enum class OrderRelation { lt, gt, eq, incomparable };

// Finite poset on dense ids 0..n-1 with string labels.  Stores the full
// strict order (transitively closed) as a row-major boolean matrix.
class Poset {
public:
  // Build from element labels and a list of (a, b) pairs meaning a < b.
  // Takes the transitive closure; throws parse_error on duplicate labels,
  // unknown names, or cycles.
  static Poset from_relations(const std::vector<std::string>& labels,
                              const std::vector<std::pair<std::string, std::string>>& rels);

  // Build from an already-closed strict relation matrix (row-major n*n,
  // lt[i*n+j] != 0 means i < j).  Validates irreflexivity + transitivity.
  static Poset from_closed_relation(const std::vector<std::string>& labels,
                                    const std::vector<unsigned char>& lt);

  int size() const { return n_; }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Dense id for a label; -1 if absent.
  int index_of(const std::string& label) const;

  bool less(int x, int y) const { return lt_[static_cast<std::size_t>(x) * n_ + y] != 0; }
  bool leq(int x, int y) const { return x == y || less(x, y); }
  bool comparable(int x, int y) const { return x == y || less(x, y) || less(y, x); }
  OrderRelation compare(int x, int y) const;

  // Closed down-set D[x] = {y : y <= x} and up-set U[x] = {y : y >= x}.
  std::vector<int> down_set(int x) const;
  std::vector<int> up_set(int x) const;
  int down_size(int x) const { return down_size_[x]; }
  int up_size(int x) const;

  bool is_cover(int x, int y) const; // y covers x: x < y, nothing between
  std::vector<std::pair<int, int>> cover_pairs() const; // (lower, upper)

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  bool is_chain() const;
  bool is_antichain() const;
  bool connected() const; // comparability graph connectivity; empty -> true

  // Induced subposet on the given ids (kept in the order given).
  // Empty selection yields nullopt (the library works with nonempty posets).
  std::optional<Poset> induced(const std::vector<int>& ids) const;

  // Element heights: h(x) = length of a longest chain below x (minimal -> 0).
  std::vector<int> heights() const;

  // Ids sorted by (|D[x]| ascending, id ascending).
  std::vector<int> by_down_size_order() const;

private:
  Poset() = default;
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<unsigned char> lt_; // closed strict order, row-major
  std::vector<int> down_size_;
  void finish_init();
};

// ---- file format ----------------------------------------------------------

// Text format:
//   poset v1
//   elements a b c
//   rel a < b
// '#' starts a full-line comment; blank lines are ignored.
Poset parse_poset(const std::string& text);
// Serializes with cover relations only (parse_poset(serialize_poset(p))
// rebuilds the same order).
std::string serialize_poset(const Poset& p);

// ---- sums and decompositions ----------------------------------------------

// Disjoint (parallel) sum and vertical (ordinal) sum.  When parts reuse a
// label, colliding labels are renamed "p<i>.<label>" (i = part index).
Poset disjoint_sum(const std::vector<Poset>& parts);
Poset vertical_sum(const std::vector<Poset>& parts);

struct Decomposition {
  enum class Kind { component, block };
  Kind kind;
  std::vector<Poset> parts;
  // embedding[i][j] = id in the original poset of element j of part i.
  std::vector<std::vector<int>> embedding;
};

// Connected components (parts ordered by their least original id).
Decomposition component_decomposition(const Poset& p);

// Finest vertical decomposition with maximal consecutive chain runs merged,
// i.e. the block decomposition: parts are vertical primes or chains, and the
// number of parts is least among all vertical decompositions.
Decomposition block_decomposition(const Poset& p);

// Positions k (0 < k < n) such that the first k elements of
// by_down_size_order() all lie below all remaining elements.
std::vector<int> vertical_cut_positions(const Poset& p);

// ---- isomorphism ----------------------------------------------------------

// Poset isomorphism; if witness is non-null and the posets are isomorphic,
// *witness receives a mapping ids-of-p -> ids-of-q.
bool are_isomorphic(const Poset& p, const Poset& q, std::vector<int>* witness = nullptr);

// Canonical key of the isomorphism class, for posets with n <= 8: the
// minimum over relabelings of the packed n*n relation matrix.
std::uint64_t canonical_key(const Poset& p);

} // namespace pcube
