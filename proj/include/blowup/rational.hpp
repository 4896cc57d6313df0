#pragma once

// Exact scalars. Every coefficient in the library is a Rational; there is no
// floating point anywhere in the core.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blowup {

// Expression templates are off so that mixed expressions have a single value type.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

/// Canonical text form: "p" for integers, "p/q" otherwise, always in lowest terms.
inline std::string to_string(const Rational& q) {
    if (is_integral(q)) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses "p", "-p", "p/q". Decimal points and exponents are rejected.
inline Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!digits(num) || !digits(den))
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    Integer p{std::string(num)};
    Integer q{std::string(den)};
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    return negative ? Rational(-r) : r;
}

inline Integer lcm_of_denominators(std::span<const Rational> values) {
    Integer l = 1;
    for (const auto& v : values) l = boost::multiprecision::lcm(l, denominator_of(v));
    return l;
}

inline std::vector<Rational> to_rationals(std::span<const std::int64_t> values) {
    return {values.begin(), values.end()};
}

}  // namespace blowup
