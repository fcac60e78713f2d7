// Small tour: reciprocal of the square, flower sum of two segments, volumes.
#include <cstdio>

#include "flowerkit/flowerkit.hpp"

using namespace flowerkit;

int main() {
  const SphereGrid g = make_grid(2, 4096, 0);
  const Body sq = Body::polytope({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});

  const Body rec = reciprocal(sq, g);
  std::printf("square: area %.6f, flower volume %.6f\n", area(sq), flower_volume(sq, g));
  std::printf("reciprocal: flower volume %.6f, in R: %s\n", flower_volume(rec, g),
              is_reciprocal(rec, g).holds ? "yes" : "no");

  const Body E = oplus(Body::segment({1, 0}), Body::segment({0, 1}), g);
  std::printf("[0,e1] (+) [0,e2]: support at e1 %.6f, flower volume %.6f\n", support(E, {1, 0}), flower_volume(E, g));

  const StarBody F = flower(sq, g);
  std::printf("distance from flower(square) to the unit disc: %.6f\n",
              geometric_distance(F, sample_radial(Body::ball({0, 0}, 1), g)));
}
