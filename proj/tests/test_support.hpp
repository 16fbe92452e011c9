#pragma once

// Shared fixtures: named origamis and a seeded generator of random connected ones.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "origami/origami.hpp"

namespace origami::testing {

inline Origami l_origami() { return parse_origami("n=3; h=(1,2); v=(1,3)"); }
inline Origami wollmilchsau() { return parse_origami("n=8; h=(1,2,3,4)(5,6,7,8); v=(1,5,3,7)(2,8,4,6)"); }
inline Origami unit_torus() { return parse_origami("n=1; h=(); v=()"); }
inline Origami four_square_h11() { return parse_origami("n=4; h=(1,2,3,4); v=(1,3)"); }

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(std::move(im));
}

/// Uniform over transitive pairs of S_n x S_n by rejection.
inline Origami random_origami(int n, std::mt19937_64& rng) {
    for (;;) {
        Permutation h = random_permutation(n, rng);
        Permutation v = random_permutation(n, rng);
        Origami o = Origami::from_trusted(h, v);
        if (o.transitive()) return o;
    }
}

}  // namespace origami::testing
