#ifndef PARKMAT_TESTS_FIXTURES_HPP
#define PARKMAT_TESTS_FIXTURES_HPP

#include <string>

#include "parkmat/set_system.hpp"

namespace parkmat::fixtures {

// A = ({1,2,7,9,10},{2,6,7,8},{2,3,4,5,6}) over {1,...,10}: the worked
// example instance that all golden values refer to.
inline SetSystem example32() {
  return parse_set_system(R"({"ground":["1","2","3","4","5","6","7","8","9","10"],
    "blocks":[[1,2,7,9,10],[2,6,7,8],[2,3,4,5,6]]})");
}

// A_tiny = ({1,2},{2,3}) over {1,2,3}; its matroid is U_{2,3}.
inline SetSystem tiny() {
  return parse_set_system(R"({"ground":["1","2","3"],"blocks":[[1,2],[2,3]]})");
}

// single coloop
inline SetSystem coloop() {
  return parse_set_system(R"({"ground":["1"],"blocks":[[1]]})");
}

// square system over a ground set {1..d} from d block masks
inline SetSystem square(const std::vector<Mask>& blocks) {
  SetSystem sys;
  for (std::size_t i = 1; i <= blocks.size(); ++i)
    sys.ground.labels.push_back(std::to_string(i));
  sys.blocks = blocks;
  return sys;
}

}  // namespace parkmat::fixtures

#endif
