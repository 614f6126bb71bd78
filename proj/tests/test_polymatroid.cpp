#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "parkmat/polymatroid.hpp"

using namespace parkmat;

namespace {

Polymatroid make_poly(const SetSystem& sys) {
  TransversalMatroid m(sys);
  return Polymatroid(parking_submodular(m));
}

}  // namespace

TEST_CASE("parking submodular values of the worked example") {
  TransversalMatroid m(fixtures::example32());
  SubmodularTable f = parking_submodular(m);
  REQUIRE(f.d == 3);
  CHECK(f.f == std::vector<int>{0, 4, 3, 5, 4, 7, 5, 7});
}

TEST_CASE("parking submodular of A_tiny and the coloop") {
  TransversalMatroid ti(fixtures::tiny());
  CHECK(parking_submodular(ti).f == std::vector<int>{0, 1, 1, 1});
  TransversalMatroid cl(fixtures::coloop());
  CHECK(parking_submodular(cl).f == std::vector<int>{0, 0});
}

TEST_CASE("submodular table invariants, exhaustively over pairs") {
  for (std::uint64_t seed = 50; seed < 62; ++seed) {
    SetSystem sys = normalize_presentation(random_system(8, 4, seed));
    TransversalMatroid m(sys);
    SubmodularTable f = parking_submodular(m);
    CHECK(f.f[0] == 0);
    const Mask full = full_mask(f.d);
    for (Mask i = 0; i <= full; ++i)
      for (Mask j = 0; j <= full; ++j) {
        CHECK(f.f[i & j] + f.f[i | j] <= f.f[i] + f.f[j]);
        if ((i & j) == i) CHECK(f.f[i] <= f.f[j]);
      }
  }
}

TEST_CASE("invalid tables are rejected") {
  SubmodularTable bad;
  bad.d = 2;
  bad.f = {0, 1, 1, 3};  // fails submodularity
  CHECK_THROWS_AS(bad.validate(), std::logic_error);
  bad.f = {1, 1, 1, 1};  // f(empty) != 0
  CHECK_THROWS_AS(bad.validate(), std::logic_error);
}

TEST_CASE("membership on the worked example") {
  Polymatroid p = make_poly(fixtures::example32());
  CHECK(p.member({4, 1, 2}));
  CHECK(p.member({0, 0, 0}));
  CHECK(!p.member({4, 2, 0}));  // q1+q2 = 6 > 5
  CHECK_THROWS_AS(p.member({1, 2}), std::invalid_argument);
}

TEST_CASE("lattice points of the worked example") {
  Polymatroid p = make_poly(fixtures::example32());
  const auto& graded = p.lattice_points();
  CHECK(p.graded_counts() == std::vector<long long>{1, 3, 6, 10, 14, 16, 12, 8});
  long long total = 0;
  for (const auto& layer : graded) total += static_cast<long long>(layer.size());
  CHECK(total == 70);
  // degree-0 slice is exactly the origin
  REQUIRE(graded[0].size() == 1);
  CHECK(graded[0][0] == ExponentVec{0, 0, 0});
  // lexicographic order within each degree
  for (const auto& layer : graded)
    for (std::size_t i = 1; i < layer.size(); ++i) CHECK(layer[i - 1] < layer[i]);
}

TEST_CASE("lattice points of A_tiny") {
  Polymatroid p = make_poly(fixtures::tiny());
  const auto& graded = p.lattice_points();
  REQUIRE(graded.size() == 2);
  CHECK(graded[0] == std::vector<ExponentVec>{{0, 0}});
  CHECK(graded[1] == std::vector<ExponentVec>{{0, 1}, {1, 0}});
  CHECK(p.graded_counts() == std::vector<long long>{1, 2});
}

TEST_CASE("coloop polymatroid is the origin") {
  Polymatroid p = make_poly(fixtures::coloop());
  CHECK(p.graded_counts() == std::vector<long long>{1});
  CHECK(p.minimal_nonmembers() == std::vector<ExponentVec>{{1}});
}

TEST_CASE("membership matches the enumerated point set") {
  Polymatroid p = make_poly(fixtures::example32());
  std::set<ExponentVec> points;
  for (const auto& layer : p.lattice_points())
    points.insert(layer.begin(), layer.end());
  for (int k = 0; k <= p.max_degree() + 1; ++k)
    for (const auto& q : oracle::all_exponents_of_degree(k, p.d()))
      CHECK(p.member(q) == (points.count(q) > 0));
}

TEST_CASE("minimal nonmembers of the worked example are the 11 generators") {
  Polymatroid p = make_poly(fixtures::example32());
  std::vector<ExponentVec> expected = {
      {0, 0, 5}, {0, 2, 4}, {0, 3, 3}, {0, 4, 0}, {3, 1, 4}, {3, 2, 3},
      {3, 3, 0}, {4, 0, 4}, {4, 1, 3}, {4, 2, 0}, {5, 0, 0}};
  CHECK(p.minimal_nonmembers() == expected);
}

TEST_CASE("minimal nonmembers of small fixtures") {
  Polymatroid ti = make_poly(fixtures::tiny());
  CHECK(ti.minimal_nonmembers() == std::vector<ExponentVec>{{0, 2}, {1, 1}, {2, 0}});

  SubmodularTable single;
  single.d = 1;
  single.f = {0, 4};
  Polymatroid p(single);
  CHECK(p.minimal_nonmembers() == std::vector<ExponentVec>{{5}});
}

TEST_CASE("each generator is tight at some constraint") {
  for (SetSystem sys : {fixtures::example32(), fixtures::tiny(),
                        normalize_presentation(random_system(8, 3, 70))}) {
    Polymatroid p = make_poly(sys);
    const auto& f = p.table();
    for (const auto& q : p.minimal_nonmembers()) {
      bool tight = false;
      for (Mask j = 1; j < (Mask{1} << f.d); ++j) {
        int sum = 0;
        for (int b = 0; b < f.d; ++b)
          if (has_bit(j, b)) sum += q[b];
        if (sum == f(j) + 1) tight = true;
      }
      CHECK(tight);
    }
  }
}

TEST_CASE("every nonmember in the bounding box dominates a generator") {
  for (std::uint64_t seed = 80; seed < 86; ++seed) {
    Polymatroid p = make_poly(normalize_presentation(random_system(7, 3, seed)));
    auto gens = p.minimal_nonmembers();
    const int d = p.d();
    std::vector<int> box(d);
    for (int j = 0; j < d; ++j) box[j] = p.table()(bit(j)) + 1;
    ExponentVec q(d, 0);
    while (true) {
      if (!p.member(q)) {
        bool dominates = false;
        for (const auto& g : gens) {
          bool ge = true;
          for (int j = 0; j < d && ge; ++j) ge = q[j] >= g[j];
          if (ge) {
            dominates = true;
            break;
          }
        }
        CHECK(dominates);
      }
      int pos = d - 1;
      while (pos >= 0 && q[pos] == box[pos]) q[pos--] = 0;
      if (pos < 0) break;
      ++q[pos];
    }
  }
}

TEST_CASE("purity") {
  CHECK(make_poly(fixtures::example32()).purity_check().pure);
  CHECK(make_poly(fixtures::tiny()).purity_check().pure);
  SubmodularTable origin;
  origin.d = 1;
  origin.f = {0, 0};
  CHECK(Polymatroid(origin).purity_check().pure);
}
