#pragma once

#include "defenselab/matrix_game.hpp"
#include "defenselab/mtd/layer_game.hpp"

namespace testgames {

// Two configurations exposing overlapping vulnerability pairs out of three.
inline defenselab::mtd::LayerGame fig5_layer() {
  return defenselab::mtd::LayerGame(
      {"c11", "c12"}, {"v11", "v12", "v13"}, {"a11", "a12", "a13"},
      {{0, 1}, {1, 2}},
      defenselab::Matrix{{4, 2}, {1, 1}, {2, 3}});
}

// Each configuration exposes exactly one vulnerability; diagonal-dominant
// damage with a fully mixed saddle point f* = g* = (1/3, 2/3), value 2/3.
inline defenselab::mtd::LayerGame diag_2x2_layer() {
  return defenselab::mtd::LayerGame({"c1", "c2"}, {"v1", "v2"}, {"a1", "a2"},
                                    {{0}, {1}},
                                    defenselab::Matrix{{2, 0}, {0, 1}});
}

// A configuration with an empty attack surface: nothing ever lands.
inline defenselab::mtd::LayerGame sealed_layer() {
  return defenselab::mtd::LayerGame({"c1"}, {"v1", "v2"}, {"a1", "a2"}, {{}},
                                    defenselab::Matrix{{5}, {7}});
}

}  // namespace testgames
