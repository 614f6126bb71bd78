#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "parkmat/matroid.hpp"
#include "parkmat/tutte.hpp"

using namespace parkmat;

namespace {

Mask labels_to_mask(const SetSystem& sys, std::initializer_list<int> labels) {
  Mask m = 0;
  for (int lab : labels)
    for (int s = 0; s < sys.n(); ++s)
      if (sys.ground.labels[s] == std::to_string(lab)) m |= bit(s);
  return m;
}

}  // namespace

TEST_CASE("rank oracle on the worked example") {
  TransversalMatroid m(fixtures::example32());
  CHECK(m.rank(m.ground_mask()) == 3);
  CHECK(m.rank(0) == 0);
  // {3,4,5} all lie only in the third block
  CHECK(m.rank(labels_to_mask(m.system(), {3, 4, 5})) == 1);
  CHECK(m.rank_of_matroid() == 3);
}

TEST_CASE("construction requires a full-rank presentation") {
  auto sys = parse_set_system(R"({"ground":["1"],"blocks":[[1],[1]]})");
  CHECK_THROWS_AS(TransversalMatroid{sys}, std::invalid_argument);
}

TEST_CASE("rank equals the min-formula rank everywhere") {
  TransversalMatroid ex(fixtures::example32());
  CHECK(ex.rank_formula(0) == 0);
  CHECK(ex.rank_formula(ex.ground_mask()) == 3);
  CHECK(ex.rank_formula(labels_to_mask(ex.system(), {3, 4, 5})) == 1);
  for (SetSystem sys :
       {fixtures::example32(), fixtures::tiny(), normalize_presentation(random_system(9, 4, 5)),
        normalize_presentation(random_system(8, 3, 6))}) {
    TransversalMatroid m(sys);
    for (Mask t = 0; t <= m.ground_mask(); ++t) CHECK(m.rank(t) == m.rank_formula(t));
  }
}

TEST_CASE("rank agrees with assignment enumeration") {
  TransversalMatroid m(fixtures::tiny());
  for (Mask t = 0; t <= m.ground_mask(); ++t)
    CHECK(m.rank(t) == oracle::brute_rank(m.system(), t));
}

TEST_CASE("dual rank on the worked example") {
  TransversalMatroid m(fixtures::example32());
  CHECK(m.dual_rank(m.system().blocks[0]) == 4);
  CHECK(m.dual_rank(m.system().blocks[1]) == 3);
  CHECK(m.dual_rank(0) == 0);
  CHECK(m.dual_rank(m.ground_mask()) == m.n() - 3);
}

TEST_CASE("tutte polynomial of the worked example") {
  TransversalMatroid m(fixtures::example32());
  TuttePoly t = tutte(m);
  TuttePoly expected;
  expected.terms = {
      {{0, 1}, 4},  {{0, 2}, 7}, {{0, 3}, 10}, {{0, 4}, 9}, {{0, 5}, 6}, {{0, 6}, 3},
      {{0, 7}, 1},  {{1, 0}, 4}, {{1, 1}, 6},  {{1, 2}, 7}, {{1, 3}, 4}, {{1, 4}, 1},
      {{2, 0}, 3},  {{2, 1}, 2}, {{2, 2}, 2},  {{3, 0}, 1}};
  CHECK(t == expected);
  CHECK(t.eval11() == 70);
  CHECK(t.eval11() == oracle::brute_bases_count(m.system()));
}

TEST_CASE("tutte of a single coloop is x") {
  TransversalMatroid m(fixtures::coloop());
  TuttePoly t = tutte(m);
  CHECK(t.terms == decltype(t.terms){{{1, 0}, 1}});
  CHECK(t.text() == "x");
}

TEST_CASE("tutte of A_tiny is x^2 + x + y") {
  TransversalMatroid m(fixtures::tiny());
  TuttePoly t = tutte(m);
  CHECK(t.terms == decltype(t.terms){{{2, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
}

TEST_CASE("tutte budget") {
  SetSystem sys;
  for (int i = 1; i <= 25; ++i) sys.ground.labels.push_back(std::to_string(i));
  sys.blocks = {full_mask(25)};
  TransversalMatroid m(sys);
  CHECK_THROWS_AS(tutte(m), BudgetError);
}

TEST_CASE("number of bases equals the coefficient sum, random systems") {
  for (std::uint64_t seed = 20; seed < 26; ++seed) {
    SetSystem sys = normalize_presentation(random_system(8, 3, seed));
    TransversalMatroid m(sys);
    TuttePoly t = tutte(m);
    CHECK(t.eval11() == oracle::brute_bases_count(sys));
    for (const auto& [e, c] : t.terms) CHECK(c > 0);
  }
}

TEST_CASE("h-vector from the Tutte specialization") {
  TransversalMatroid ex(fixtures::example32());
  CHECK(h_vector_from_tutte(ex) == HVector{1, 3, 6, 10, 14, 16, 12, 8});
  TransversalMatroid cl(fixtures::coloop());
  CHECK(h_vector_from_tutte(cl) == HVector{1});
  TransversalMatroid ti(fixtures::tiny());
  CHECK(h_vector_from_tutte(ti) == HVector{1, 2});
}

TEST_CASE("h-vector shape invariants") {
  for (std::uint64_t seed = 30; seed < 40; ++seed) {
    SetSystem sys = normalize_presentation(random_system(7, 4, seed));
    TransversalMatroid m(sys);
    TuttePoly t = tutte(m);
    HVector h = h_vector_from_tutte(t, m.n(), m.rank_of_matroid());
    CHECK(h.size() == static_cast<std::size_t>(m.n() - m.rank_of_matroid() + 1));
    CHECK(h.front() == 1);
    long long sum = 0;
    for (long long v : h) {
      CHECK(v >= 0);
      sum += v;
    }
    CHECK(sum == t.eval11());
  }
}

TEST_CASE("cocircuits of the fixtures") {
  TransversalMatroid ti(fixtures::tiny());
  auto cc = ti.cocircuits();
  CHECK(cc == std::vector<Mask>{bit(0) | bit(1), bit(0) | bit(2), bit(1) | bit(2)});

  TransversalMatroid cl(fixtures::coloop());
  CHECK(cl.cocircuits() == std::vector<Mask>{bit(0)});

  TransversalMatroid ex(fixtures::example32());
  CHECK(ex.cocircuits().size() == 11);
}

TEST_CASE("every cocircuit meets every basis; none contains another") {
  for (SetSystem sys : {fixtures::example32(), fixtures::tiny(),
                        normalize_presentation(random_system(8, 3, 77))}) {
    TransversalMatroid m(sys);
    auto cocircs = m.cocircuits();
    const int d = m.rank_of_matroid();
    for_each_subset_of_size(m.n(), d, [&](Mask basis) {
      if (m.rank(basis) != d) return;
      for (Mask c : cocircs) CHECK((c & basis) != 0);
    });
    for (Mask a : cocircs)
      for (Mask b : cocircs)
        if (a != b) CHECK((a & b) != a);
  }
}
