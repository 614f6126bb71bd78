#include <doctest.h>

#include "fixtures.hpp"
#include "parkmat/json_io.hpp"

using namespace parkmat;
using nlohmann::json;

TEST_CASE("set system JSON round-trips") {
  for (SetSystem sys : {fixtures::example32(), fixtures::tiny(), fixtures::coloop()}) {
    json j = set_system_json(sys);
    SetSystem back = parse_set_system(j.dump());
    CHECK(back == sys);
  }
}

TEST_CASE("canonical JSON is byte-stable under reparse") {
  SetSystem ex = fixtures::example32();
  TransversalMatroid m(ex);
  Polymatroid p(parking_submodular(m));
  Representation v = build_representation(ex, ReprMode::powers);

  json j;
  j["system"] = set_system_json(ex);
  j["tutte"] = tutte_json(tutte(m));
  j["h_vector"] = hvector_json(h_vector_from_tutte(m));
  j["polymatroid"] = polytope_json(p);
  j["power_ideal"] = hyperplanes_json(v, hyperplanes_with_forms(v));
  j["verification"] = verification_json(run_verification(ex));

  std::string once = j.dump(2);
  std::string twice = json::parse(once).dump(2);
  CHECK(once == twice);
}

TEST_CASE("tutte JSON terms are sorted by (x, y)") {
  TransversalMatroid m(fixtures::example32());
  json t = tutte_json(tutte(m));
  const auto& terms = t["terms"];
  for (std::size_t i = 1; i < terms.size(); ++i) {
    auto prev = std::pair{terms[i - 1]["x"].get<int>(), terms[i - 1]["y"].get<int>()};
    auto cur = std::pair{terms[i]["x"].get<int>(), terms[i]["y"].get<int>()};
    CHECK(prev < cur);
  }
}

TEST_CASE("facet lines are in ascending bitmask order") {
  TransversalMatroid m(fixtures::example32());
  Polymatroid p(parking_submodular(m));
  auto lines = facet_lines(p.table());
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "q_1 <= 4");
  CHECK(lines[1] == "q_2 <= 3");
  CHECK(lines[2] == "q_1+q_2 <= 5");
  CHECK(lines[3] == "q_3 <= 4");
  CHECK(lines[4] == "q_1+q_3 <= 7");
  CHECK(lines[5] == "q_2+q_3 <= 5");
  CHECK(lines[6] == "q_1+q_2+q_3 <= 7");
}

TEST_CASE("form rendering") {
  CHECK(form_text({1, Rat(-1, 2), 0}) == "x_1 - 1/2 x_2");
  CHECK(form_text({0, 1, 0}) == "x_2");
  CHECK(form_text({0, 0, 0}) == "0");
  CHECK(form_text({Rat(-2), 1, 0}) == "-2 x_1 + x_2");
}

TEST_CASE("mvpoly serialization is sorted and exact") {
  MVPoly p = expand_power({0, -2, 1}, 2);
  json j = mvpoly_json(p);
  REQUIRE(j["terms"].size() == 3);
  CHECK(j["terms"][0]["q"] == json::array({0, 0, 2}));
  CHECK(j["terms"][0]["c"] == "1");
  CHECK(j["terms"][1]["q"] == json::array({0, 1, 1}));
  CHECK(j["terms"][1]["c"] == "-4");
  CHECK(j["terms"][2]["q"] == json::array({0, 2, 0}));
  CHECK(j["terms"][2]["c"] == "4");
}

TEST_CASE("verification report on the worked example") {
  VerificationReport rep = run_verification(fixtures::example32());
  CHECK(rep.pass);
  CHECK(rep.n_hyperplanes == 11);
  CHECK(rep.n_generators == 11);
  CHECK(rep.points_total == 70);
  CHECK(rep.h_from_tutte == HVector{1, 3, 6, 10, 14, 16, 12, 8});
  json j = verification_json(rep);
  CHECK(j["pass"] == true);
  for (const auto& s : j["stages"]) CHECK(s["pass"] == true);
}

TEST_CASE("verification handles a non-full-rank presentation") {
  auto over = parse_set_system(R"({"ground":["1","2"],"blocks":[[1,2],[1,2],[1,2]]})");
  VerificationReport rep = run_verification(over);
  CHECK(rep.pass);
  CHECK(rep.renormalized);
  CHECK(rep.input_d == 3);
  CHECK(rep.d == 2);
}
