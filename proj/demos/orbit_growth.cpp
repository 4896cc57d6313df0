// Orbit of E_1 under the Weyl group for a few (n, r): finite types close,
// affine and indefinite ones keep growing in degree.

#include "blowup/blowup.hpp"

#include <iostream>

int main() {
    using namespace blowup;
    for (auto [n, r] : {std::pair{2, 8}, std::pair{5, 8}, std::pair{2, 9}, std::pair{3, 9}}) {
        const auto type = group_type(n, r);
        // Finite types close well within 64 steps; the others are cut off early.
        const int bound = type.infinite() ? 16 : 64;
        const auto orbit = orbit_enumerate(CycleClass::exceptional(Ambient(n, r), n - 1, 1), bound);
        std::cout << "n=" << n << " r=" << r << "  " << to_string(type.kind) << " (sum " << to_string(type.sum) << ")  orbit "
                  << orbit.count() << (orbit.closed ? " closed" : " open at length " + std::to_string(bound)) << ", max degree " << to_string(orbit.max_degree) << '\n';
    }
}
