#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pierce/instance.hpp"

namespace pierce {

// Indices of the 1..3 instance points that determine the smallest enclosing
// circle (2 diametral points, or 3 points whose triangle is acute or right;
// a single index only for one-point instances).
struct SupportSet {
    std::vector<int> indices;
};

inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ull;

// Smallest enclosing circle with closed containment, plus its support set.
// Randomized incremental construction (Welzl with move-to-front) over a
// shuffle drawn deterministically from `seed`; expected linear time.
// Throws EmptyInstance for n = 0.
std::pair<Circle, SupportSet> smallest_enclosing_circle(const Instance& inst,
                                                        std::uint64_t seed = kDefaultSeed);

// Independent oracle: minimum over all candidate circles (every point pair as
// a diameter, every non-collinear triple's circumcircle) that contain all
// points.  Throws TooLarge for n > 64.
Circle sec_bruteforce(const Instance& inst);

}  // namespace pierce
