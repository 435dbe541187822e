#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pcube/poset.hpp"
#include "pcube/representation.hpp"

namespace pcube {

// Exact binomial coefficient; throws cap_error on long long overflow.
long long binomial(int n, int k);

namespace gen {

Poset chain(int n);     // x0 < x1 < ... < x{n-1}
Poset antichain(int n); // x0, ..., x{n-1} pairwise incomparable
Poset v();              // bot < a, b
Poset lambda();         // a, b < top
Poset z();              // a < b plus isolated c, d
Poset b(int k);         // chain c0 < ... < c{k-1} plus isolated m, k >= 2
Poset fan(int s);       // antichain m0..m{s-1} below a single top t
Poset binomial_fan(int t); // fan over C(2t+1, t) minimal elements

// Bipartite-like family: minimal elements x1..xn, upper elements y1..ym with
// x_i < y_j iff i <= a_j, for a non-decreasing profile a with a_1 < n and the
// last two entries equal to n.
struct SigmaSpec {
  int n = 0;
  std::vector<int> a;
};

Poset sigma_poset(const SigmaSpec& spec);
SigmaSpec flagship_sigma(); // the 20-element instance with profile (1,1,1,2,2,2,2,4,4,4,8,8)

// A poset with two equivalent but non-isomorphic optimal representations:
// C(2s, s) minimal elements assigned the s-subsets of a 2s-label ground in
// ascending order, plus two uppers over consecutive windows of labels.
// Requires s >= 3 and 3 <= i <= s; i selects the second window {i..i+s}.
std::pair<Poset, Representation> twin_representation(int s, int i);

} // namespace gen

// All isomorphism types with exactly n elements (n <= 7), sorted by canonical
// form so the order is stable across runs.
std::vector<Poset> enumerate_posets(int n);

// Deterministic pseudorandom k-subset of {0..universe-1}, ascending.
std::vector<int> sample_indices(int universe, int count, std::uint64_t seed);

// A valid representation derived from the canonical one by seed-driven
// validity-preserving inflations; exercises non-canonical inputs in tests.
Representation seeded_valid_representation(const Poset& p, std::uint64_t seed);

} // namespace pcube
