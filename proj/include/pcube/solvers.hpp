#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pcube/poset.hpp"
#include "pcube/representation.hpp"

namespace pcube {

inline constexpr int kDefaultBruteCap = 8;

namespace search {

// A feasibility query over packed set families: assign one subset of
// {0..max_labels-1} to every element so that inclusion matches the order.
struct Request {
  int max_labels = 0;
  std::vector<int> budgets; // per-element max |S_x|; empty means unbounded
  bool exact_sizes = false; // require |S_x| == budgets[x] exactly
  bool exact_cover = false; // require the union to be all max_labels labels
};

// First valid assignment in deterministic order (elements by decreasing
// down-set size, candidate sets in ascending numeric mask order, new labels
// introduced only as the consecutive smallest unused ones).
std::optional<std::vector<Mask>> find_representation(const Poset& p, const Request& req);

// Visit every valid assignment in the same order; return false to stop early.
void for_each_representation(const Poset& p, const Request& req,
                             const std::function<bool(const std::vector<Mask>&)>& visit);

// Does a representation with exactly this size profile exist?
bool profile_realizable(const Poset& p, int ground, const std::vector<int>& sizes);

} // namespace search

// Exact irreducibility test. Reducibility depends only on the size profile:
// r is reducible iff some valid representation fits ground <= |ground(r)| and
// sizes <= |S_x| with at least one strict drop. Returns the verdict and, when
// reducible, one strict reduction as a witness.
std::pair<bool, std::optional<Representation>> is_irreducible(const Poset& p,
                                                              const Representation& r,
                                                              int cap = kDefaultBruteCap);

// Some irreducible reduction of r (possibly r itself). Tries cheap
// constructive reductions first, then falls back to exhaustive witnesses.
Representation reduce_to_irreducible(const Poset& p, const Representation& r,
                                     int cap = kDefaultBruteCap);

// The four representation parameters. Each solver optionally reports an
// optimal witness representation.
int cube_height(const Poset& p, Representation* witness = nullptr, int cap = kDefaultBruteCap);
int two_dimension(const Poset& p, Representation* witness = nullptr, int cap = kDefaultBruteCap);
int cube_width(const Poset& p, Representation* witness = nullptr, int cap = kDefaultBruteCap);
// Largest ground size among irreducible representations; scans candidate
// ground sizes downward from start_w (default |P|).
int max_irreducible_ground(const Poset& p, Representation* witness = nullptr,
                           int cap = kDefaultBruteCap, int start_w = -1);

// Least s with C(s, floor(s/2)) >= count; the two-dimension of an antichain.
int sperner_antichain_dim2(long long count);

enum class Method { brute, decomposition, closed_form };

struct ParamReport {
  int n = 0;
  int ch = 0;
  int dim2 = 0;
  int cw = 0;
  int iir = 0;
  Method method = Method::brute;
  std::optional<Representation> ch_witness, dim2_witness, cw_witness, iir_witness;
};

ParamReport params_brute(const Poset& p, int cap = kDefaultBruteCap);
ParamReport params_via_block_decomposition(const Poset& p, int cap = kDefaultBruteCap);
ParamReport params_auto(const Poset& p, int cap = kDefaultBruteCap);

// Exact cube height of a disjoint sum, combined from per-part parameters.
int disjoint_sum_cube_height(const std::vector<Poset>& parts, int cap = kDefaultBruteCap);

const char* method_name(Method m);

} // namespace pcube
