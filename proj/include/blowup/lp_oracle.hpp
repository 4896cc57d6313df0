#pragma once

// Exact feasibility of  G * lambda = v,  lambda >= 0.
//
// Phase-one simplex with integer (Edmonds) pivoting: the tableau is kept as
// integers equal to det(B) * B^{-1} [A | b], so every update is an exact
// division. Bland's rule prevents cycling. The first attempt runs on checked
// 64-bit integers and falls back to arbitrary precision on overflow.

#include "blowup/rational.hpp"

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace blowup {

struct ConeFeasibility {
    bool feasible = false;
    /// One nonnegative solution lambda (same order as the generators) when feasible.
    std::vector<Rational> solution;
};

namespace detail {

struct Overflow : std::exception {};

/// int64 with overflow traps; the fast path of the integer simplex.
struct Checked64 {
    std::int64_t v = 0;

    Checked64() = default;
    Checked64(std::int64_t x) : v(x) {}

    friend Checked64 operator+(Checked64 a, Checked64 b) {
        std::int64_t out;
        if (__builtin_add_overflow(a.v, b.v, &out)) throw Overflow{};
        return out;
    }
    friend Checked64 operator-(Checked64 a, Checked64 b) {
        std::int64_t out;
        if (__builtin_sub_overflow(a.v, b.v, &out)) throw Overflow{};
        return out;
    }
    friend Checked64 operator*(Checked64 a, Checked64 b) {
        std::int64_t out;
        if (__builtin_mul_overflow(a.v, b.v, &out)) throw Overflow{};
        return out;
    }
    friend Checked64 operator/(Checked64 a, Checked64 b) {
        if (b.v == -1 && a.v == INT64_MIN) throw Overflow{};
        return a.v / b.v;
    }
    friend Checked64 operator-(Checked64 a) { return Checked64(0) - a; }
    friend auto operator<=>(Checked64 a, Checked64 b) = default;
    friend bool operator==(Checked64 a, Checked64 b) = default;
};

inline int sign_of(const Checked64& x) { return (x.v > 0) - (x.v < 0); }
inline int sign_of(const Integer& x) { return x.sign(); }
inline Rational as_rational(const Checked64& x) { return Rational(x.v); }
inline Rational as_rational(const Integer& x) { return Rational(x); }

template <class Int, class Src>
Int from_integer(const Src& z) {
    if constexpr (std::is_same_v<Int, Integer> || std::is_same_v<Src, std::int64_t>) {
        return Int(z);
    } else {
        if (z > INT64_MAX || z < INT64_MIN) throw Overflow{};
        return Int(static_cast<std::int64_t>(z));
    }
}

/// Phase one on integer data: rows of A and b (b >= 0 required).
template <class Int, class Src>
ConeFeasibility integer_phase_one(const std::vector<std::vector<Src>>& a_rows, const std::vector<Src>& rhs,
                                  std::size_t columns, bool want_solution) {
    const std::size_t m = a_rows.size();
    const std::size_t width = columns + m + 1;  // structurals, artificials, rhs
    const std::size_t rhs_col = width - 1;
    std::vector<std::vector<Int>> t(m + 1, std::vector<Int>(width, Int(0)));
    std::vector<std::size_t> basis(m);

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < columns; ++j) t[i][j] = from_integer<Int>(a_rows[i][j]);
        t[i][columns + i] = Int(1);
        t[i][rhs_col] = from_integer<Int>(rhs[i]);
        basis[i] = columns + i;
    }
    // Reduced costs of the phase-one objective (sum of artificials).
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < columns; ++j) t[m][j] = t[m][j] - t[i][j];
        t[m][rhs_col] = t[m][rhs_col] - t[i][rhs_col];
    }

    Int det(1);
    for (;;) {
        const int det_sign = sign_of(det);
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs_col; ++j) {
            if (sign_of(t[m][j]) * det_sign < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;

        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (sign_of(t[i][enter]) * det_sign <= 0) continue;
            if (leave == m) {
                leave = i;
                continue;
            }
            // ratio_i < ratio_leave, both pivot-column entries share det's sign
            const Int lhs = t[i][rhs_col] * t[leave][enter];
            const Int rhs_v = t[leave][rhs_col] * t[i][enter];
            if (lhs < rhs_v || (lhs == rhs_v && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) break;  // unbounded direction; cannot happen in phase one

        const Int pivot = t[leave][enter];
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const Int factor = t[i][enter];
            // Zero products leave the exact quotient unchanged; det = +-1 needs no division.
            const bool unit_det = det == Int(1) || det == Int(-1);
            for (std::size_t j = 0; j < width; ++j) {
                if (j == enter) continue;
                Int num = sign_of(factor) == 0 || sign_of(t[leave][j]) == 0
                              ? (sign_of(t[i][j]) == 0 ? Int(0) : t[i][j] * pivot)
                              : t[i][j] * pivot - factor * t[leave][j];
                t[i][j] = unit_det ? (det == Int(1) ? num : -num) : num / det;
            }
            t[i][enter] = Int(0);
        }
        det = pivot;
        basis[leave] = enter;
    }

    ConeFeasibility result;
    result.feasible = sign_of(t[m][rhs_col]) == 0;
    if (result.feasible && want_solution) {
        result.solution.assign(columns, Rational(0));
        const Rational d = as_rational(det);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < columns) result.solution[basis[i]] = as_rational(t[i][rhs_col]) / d;
    }
    return result;
}

template <class T>
Rational to_exact(const T& x) {
    if constexpr (std::is_same_v<T, Rational>)
        return x;
    else
        return Rational(x);
}

}  // namespace detail

/// Auto runs on 64-bit integers and restarts on arbitrary precision after an overflow.
enum class LpArithmetic { Auto, BigInteger };

/// Decides whether `target` lies in the nonnegative hull of `generators`
/// (each generator has target.size() entries). T is an integral type or Rational.
template <class T>
ConeFeasibility cone_feasibility(std::span<const T> target, std::span<const std::vector<T>> generators,
                                 bool want_solution = true, LpArithmetic arithmetic = LpArithmetic::Auto) {
    const std::size_t m = target.size();
    const std::size_t columns = generators.size();
    for (const auto& g : generators)
        if (g.size() != m) throw std::invalid_argument("generator length differs from target length");

    // int64 data goes straight to the checked tableau; rows with a negative
    // right-hand side are flipped so that b >= 0.
    if constexpr (std::is_same_v<T, std::int64_t>) {
        if (arithmetic == LpArithmetic::Auto) {
            std::vector<std::vector<std::int64_t>> rows(m, std::vector<std::int64_t>(columns));
            std::vector<std::int64_t> rhs(m);
            bool representable = true;
            for (std::size_t i = 0; i < m; ++i) {
                const bool flip = target[i] < 0;
                if (flip && target[i] == INT64_MIN) representable = false;
                rhs[i] = flip ? -target[i] : target[i];
                for (std::size_t j = 0; j < columns; ++j) {
                    if (flip && generators[j][i] == INT64_MIN) representable = false;
                    rows[i][j] = flip ? -generators[j][i] : generators[j][i];
                }
            }
            if (representable) {
                try {
                    return detail::integer_phase_one<detail::Checked64>(rows, rhs, columns, want_solution);
                } catch (const detail::Overflow&) {
                }
            }
        }
    }

    // Clear denominators row by row, then flip rows so that b >= 0.
    std::vector<std::vector<Integer>> rows(m, std::vector<Integer>(columns));
    std::vector<Integer> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        Integer scale = 1;
        if constexpr (std::is_same_v<T, Rational>) {
            scale = denominator_of(target[i]);
            for (const auto& g : generators) scale = boost::multiprecision::lcm(scale, denominator_of(g[i]));
        }
        auto scaled = [&](const T& x) -> Integer {
            if constexpr (std::is_same_v<T, Rational>)
                return numerator_of(x) * (scale / denominator_of(x));
            else
                return Integer(x);
        };
        rhs[i] = scaled(target[i]);
        for (std::size_t j = 0; j < columns; ++j) rows[i][j] = scaled(generators[j][i]);
        if (rhs[i] < 0) {
            rhs[i] = -rhs[i];
            for (auto& e : rows[i]) e = -e;
        }
    }

    if (arithmetic == LpArithmetic::BigInteger) return detail::integer_phase_one<Integer>(rows, rhs, columns, want_solution);
    try {
        return detail::integer_phase_one<detail::Checked64>(rows, rhs, columns, want_solution);
    } catch (const detail::Overflow&) {
        return detail::integer_phase_one<Integer>(rows, rhs, columns, want_solution);
    }
}

template <class T>
bool lp_membership_oracle(std::span<const T> target, std::span<const std::vector<T>> generators) {
    return cone_feasibility<T>(target, generators, false).feasible;
}

inline bool lp_membership_oracle(const std::vector<Rational>& target, const std::vector<std::vector<Rational>>& generators) {
    return lp_membership_oracle<Rational>(std::span<const Rational>(target),
                                          std::span<const std::vector<Rational>>(generators));
}

}  // namespace blowup
