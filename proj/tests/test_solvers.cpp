#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pcube/errors.hpp"
#include "pcube/generators.hpp"
#include "pcube/poset.hpp"
#include "pcube/representation.hpp"
#include "pcube/solvers.hpp"

using namespace pcube;

namespace {

int max_set_size(const Representation& r) {
  int h = 0;
  for (std::size_t x = 0; x < r.sets.size(); ++x)
    h = std::max(h, r.set_size(static_cast<int>(x)));
  return h;
}

} // namespace

TEST_SUITE("solvers") {

TEST_CASE("all four parameters match the first-principles oracle up to n=4") {
  for (int n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      oracle::NaiveParams want = oracle::naive_params(p);
      ParamReport got = params_brute(p);
      CAPTURE(n);
      CAPTURE(serialize_poset(p));
      CHECK(got.ch == want.ch);
      CHECK(got.dim2 == want.dim2);
      CHECK(got.cw == want.cw);
      CHECK(got.iir == want.iir);
      CHECK(got.ch <= got.dim2);
      CHECK(got.dim2 <= got.cw);
      CHECK(got.cw <= got.iir);
      CHECK(got.iir <= p.size());
    }
}

TEST_CASE("reported witnesses are valid and attain their parameter") {
  for (int n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      ParamReport r = params_brute(p);
      REQUIRE(r.ch_witness);
      REQUIRE(r.dim2_witness);
      REQUIRE(r.cw_witness);
      REQUIRE(r.iir_witness);
      CHECK(validate_representation(p, *r.ch_witness).ok);
      CHECK(max_set_size(*r.ch_witness) == r.ch);
      CHECK(validate_representation(p, *r.dim2_witness).ok);
      CHECK(r.dim2_witness->ground_size() == r.dim2);
      CHECK(validate_representation(p, *r.cw_witness).ok);
      CHECK(r.cw_witness->ground_size() == r.cw);
      CHECK(max_set_size(*r.cw_witness) <= r.ch);
      CHECK(validate_representation(p, *r.iir_witness).ok);
      CHECK(r.iir_witness->ground_size() == r.iir);
      CHECK(is_irreducible(p, *r.iir_witness).first);
    }
}

TEST_CASE("hand-checked parameter values") {
  ParamReport c4 = params_brute(gen::chain(4));
  CHECK(c4.ch == 3);
  CHECK(c4.dim2 == 3);
  CHECK(c4.cw == 3);
  CHECK(c4.iir == 3);

  ParamReport a5 = params_brute(gen::antichain(5));
  CHECK(a5.ch == 1);
  CHECK(a5.dim2 == 4); // six half-size subsets of four labels hold five sets
  CHECK(a5.cw == 5);   // at most one label per set forces distinct singletons
  CHECK(a5.iir == 5);

  ParamReport v = params_brute(gen::v());
  CHECK(v.ch == 1);
  CHECK(v.dim2 == 2);
  CHECK(v.cw == 2);
  CHECK(v.iir == 2);

  ParamReport lam = params_brute(gen::lambda());
  CHECK(lam.ch == 2); // the top must contain two distinct incomparable sets
  CHECK(lam.dim2 == 2);
  CHECK(lam.cw == 2);
  CHECK(lam.iir == 2);

  ParamReport z = params_brute(gen::z());
  CHECK(z.cw == 4);

  ParamReport f3 = params_brute(gen::fan(3));
  CHECK(f3.ch == 3);
  CHECK(f3.dim2 == 3);
  CHECK(f3.cw == 3);
  CHECK(f3.iir == 3);
}

TEST_CASE("individual solvers agree with the report and fill witnesses") {
  for (const Poset& p : enumerate_posets(4)) {
    ParamReport r = params_brute(p);
    Representation w;
    CHECK(cube_height(p, &w) == r.ch);
    CHECK(validate_representation(p, w).ok);
    CHECK(two_dimension(p, &w) == r.dim2);
    CHECK(w.ground_size() == r.dim2);
    CHECK(cube_width(p, &w) == r.cw);
    CHECK(w.ground_size() == r.cw);
    CHECK(max_irreducible_ground(p, &w) == r.iir);
    CHECK(w.ground_size() == r.iir);
  }
}

TEST_CASE("irreducibility verdicts and reductions") {
  Poset c2 = gen::chain(2);
  Representation canon = canonical_representation(c2);
  auto [irr, witness] = is_irreducible(c2, canon);
  CHECK(!irr); // {x0},{x0,x1} shrinks to {},{x0}
  REQUIRE(witness);
  CHECK(validate_representation(c2, *witness).ok);
  CHECK(compare_representations(c2, *witness, canon).is_strict);

  Representation tight = reduce_to_irreducible(c2, canon);
  CHECK(validate_representation(c2, tight).ok);
  CHECK(is_irreducible(c2, tight).first);
  CHECK(tight.profile() == std::pair<int, std::vector<int>>{1, {0, 1}});

  Poset a2 = gen::antichain(2);
  Representation singles =
      make_representation({"1", "2"}, {Mask{1}, Mask{2}});
  auto [irr2, w2] = is_irreducible(a2, singles);
  CHECK(irr2);
  CHECK(!w2);
  Representation same = reduce_to_irreducible(a2, singles);
  CHECK(same.profile() == singles.profile());

  // reduction chains terminate at an irreducible point from any start
  for (const Poset& p : enumerate_posets(3)) {
    Representation big = canonical_representation(p);
    Representation done = reduce_to_irreducible(p, big);
    CHECK(validate_representation(p, done).ok);
    CHECK(is_irreducible(p, done).first);
    CHECK(compare_representations(p, done, big).is_reduction);
  }
}

TEST_CASE("sperner bound gives the antichain two-dimension") {
  CHECK(sperner_antichain_dim2(1) == 0);
  CHECK(sperner_antichain_dim2(2) == 2);
  CHECK(sperner_antichain_dim2(3) == 3);
  CHECK(sperner_antichain_dim2(4) == 4);
  CHECK(sperner_antichain_dim2(5) == 4);
  CHECK(sperner_antichain_dim2(6) == 4);
  CHECK(sperner_antichain_dim2(7) == 5);
  CHECK(sperner_antichain_dim2(35) == 7);  // C(7,3) = 35
  CHECK(sperner_antichain_dim2(70) == 8);  // C(8,4) = 70
  CHECK(sperner_antichain_dim2(71) == 9);
  for (int c = 1; c <= 4; ++c)
    CHECK(sperner_antichain_dim2(c) == oracle::naive_params(gen::antichain(c)).dim2);
}

TEST_CASE("disjoint-sum cube height composes exactly") {
  Poset a2 = gen::antichain(2), v = gen::v(), c2 = gen::chain(2), pt = gen::chain(1);
  CHECK(disjoint_sum_cube_height({a2, a2}) == 1);
  CHECK(disjoint_sum_cube_height({v, v}) == 2);   // only one part can keep the empty set
  CHECK(disjoint_sum_cube_height({c2, pt}) == 2); // the chain bottom must grow past empty
  CHECK_THROWS_AS(disjoint_sum_cube_height({pt}), std::invalid_argument);

  std::vector<Poset> small;
  for (int n = 1; n <= 3; ++n)
    for (const Poset& p : enumerate_posets(n)) small.push_back(p);
  for (const Poset& p : small)
    for (const Poset& q : small) {
      if (p.size() + q.size() > 5) continue;
      Poset sum = disjoint_sum({p, q});
      CAPTURE(serialize_poset(sum));
      CHECK(disjoint_sum_cube_height({p, q}) == cube_height(sum));
    }
}

TEST_CASE("decomposition and auto methods agree with brute force") {
  for (int n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      ParamReport brute = params_brute(p);
      ParamReport via = params_via_block_decomposition(p);
      ParamReport autod = params_auto(p);
      CHECK(via.ch == brute.ch);
      CHECK(via.dim2 == brute.dim2);
      CHECK(via.cw == brute.cw);
      CHECK(via.iir == brute.iir);
      CHECK(autod.ch == brute.ch);
      CHECK(autod.dim2 == brute.dim2);
      CHECK(autod.cw == brute.cw);
      CHECK(autod.iir == brute.iir);
    }
}

TEST_CASE("closed forms reach far past the brute-force cap") {
  ParamReport c10 = params_auto(gen::chain(10));
  CHECK(c10.ch == 9);
  CHECK(c10.dim2 == 9);
  CHECK(c10.cw == 9);
  CHECK(c10.iir == 9);
  CHECK(c10.method != Method::brute);

  ParamReport a40 = params_auto(gen::antichain(40));
  CHECK(a40.ch == 1);
  CHECK(a40.dim2 == sperner_antichain_dim2(40)); // C(8,4) = 70 >= 40
  CHECK(a40.dim2 == 8);
  CHECK(a40.cw == 40);
  CHECK(a40.iir == 40);
  CHECK(a40.method != Method::brute);

  // the three-level binomial fan decomposes into closed-form blocks
  ParamReport bf = params_auto(gen::binomial_fan(3));
  CHECK(bf.n == 36);
  CHECK(bf.ch == 7);
  CHECK(bf.dim2 == 7);
  CHECK(bf.cw == 7);
  CHECK(bf.iir == 35);
  CHECK(bf.method != Method::brute);
  REQUIRE(bf.cw_witness);
  CHECK(validate_representation(gen::binomial_fan(3), *bf.cw_witness).ok);
  CHECK(bf.cw_witness->ground_size() == 7);
  CHECK(max_set_size(*bf.cw_witness) <= 7);
}

TEST_CASE("brute-force entry points respect the element cap") {
  Poset c9 = gen::chain(9);
  CHECK_THROWS_AS(params_brute(c9), cap_error);
  CHECK_THROWS_AS(cube_height(c9), cap_error);
  CHECK_THROWS_AS(two_dimension(c9), cap_error);
  CHECK_THROWS_AS(cube_width(c9), cap_error);
  CHECK_THROWS_AS(max_irreducible_ground(c9), cap_error);
  CHECK_THROWS_AS(is_irreducible(c9, canonical_representation(c9)), cap_error);
  CHECK_THROWS_AS(reduce_to_irreducible(c9, canonical_representation(c9)), cap_error);
  // a bigger cap lifts the restriction
  CHECK(cube_height(c9, nullptr, 9) == 8);
  // decomposition routes around the cap when the shape allows it
  CHECK(params_auto(c9).ch == 8);
}

TEST_CASE("search requests honor budgets, exactness and cover") {
  Poset a2 = gen::antichain(2);
  CHECK(!search::find_representation(a2, {.max_labels = 1}).has_value());
  auto first = search::find_representation(a2, {.max_labels = 2});
  REQUIRE(first);
  CHECK(*first == std::vector<Mask>{1, 2}); // deterministic first fit

  Poset c2 = gen::chain(2);
  auto pre = search::find_representation(c2, {.max_labels = 2, .budgets = {0, 1}});
  REQUIRE(pre);
  CHECK(*pre == std::vector<Mask>{0, 1});
  CHECK(!search::find_representation(c2, {.max_labels = 2, .budgets = {0, 0}}).has_value());

  auto exact = search::find_representation(
      c2, {.max_labels = 2, .budgets = {1, 2}, .exact_sizes = true});
  REQUIRE(exact);
  CHECK(mask_size((*exact)[0]) == 1);
  CHECK(mask_size((*exact)[1]) == 2);

  auto covered = search::find_representation(c2, {.max_labels = 2, .exact_cover = true});
  REQUIRE(covered);
  CHECK(((*covered)[0] | (*covered)[1]) == 3);

  int visits = 0;
  search::for_each_representation(c2, {.max_labels = 1},
                                  [&](const std::vector<Mask>&) {
                                    ++visits;
                                    return true;
                                  });
  CHECK(visits == 1); // only the empty-set/full-set pair fits one label

  int stopped = 0;
  search::for_each_representation(c2, {.max_labels = 2},
                                  [&](const std::vector<Mask>&) {
                                    ++stopped;
                                    return false;
                                  });
  CHECK(stopped == 1);

  CHECK(search::profile_realizable(a2, 2, {1, 1}));
  CHECK(!search::profile_realizable(a2, 1, {1, 1}));
  CHECK(!search::profile_realizable(a2, 2, {0, 1}));
  CHECK(search::profile_realizable(c2, 1, {0, 1}));
}

TEST_CASE("method names are stable strings") {
  CHECK(std::string(method_name(Method::brute)) == "brute");
  CHECK(std::string(method_name(Method::decomposition)) == "decomposition");
  CHECK(std::string(method_name(Method::closed_form)) == "closed-form");
}

} // TEST_SUITE

