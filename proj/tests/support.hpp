#pragma once

#include "blowup/blowup.hpp"

#include <random>
#include <vector>

namespace blowup::testing {

inline Rational Q(long p, long q = 1) { return Rational(p, q); }

inline std::vector<Rational> ints(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

inline PointMultiplicityForm form(long a, std::initializer_list<long> b) {
    PointMultiplicityForm f{a, {}};
    for (long x : b) f.multiplicities.emplace_back(x);
    return f;
}

/// Small rationals p/q with |p| <= span, 1 <= q <= max_den.
inline Rational random_rational(std::mt19937_64& rng, int span = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline CycleClass random_class(std::mt19937_64& rng, const Ambient& amb, int dim, int span = 9, int max_den = 5) {
    std::vector<Rational> c;
    for (int i = 0; i <= amb.r(); ++i) c.push_back(random_rational(rng, span, max_den));
    return CycleClass(amb, dim, std::move(c));
}

}  // namespace blowup::testing
