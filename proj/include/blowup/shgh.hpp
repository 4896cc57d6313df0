#pragma once

// Planar expected dimensions and the lattice bookkeeping for a smooth quadric
// Q ~ X^2_10 sitting in X^3_9.
//
// Q has two bases of N_1(Q):
//   planar  (h, e_0, ..., e_9)       with h^2 = 1, e_i^2 = -1;
//   ruling  (r_1, r_2, f_1, ..., f_9) with e_0 = r_1 - f_1, e_1 = r_2 - f_1,
//            f_1 = h - e_0 - e_1, e_j = f_j for j >= 2.
// The pushforward to X^3_9 sends r_1, r_2 to the line class and f_i to E_{i,1};
// its kernel is spanned by r_1 - r_2.

#include "blowup/class_text.hpp"
#include "blowup/classgroup.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace blowup {

struct PlanarSystem {
    Integer d;
    std::vector<Integer> m;
};

struct ShghCount {
    Integer expected_dim;  // C(d+2,2) - sum C(m_i+1,2), unclamped
    bool applicable = false;
    Integer top_three;  // m_1 + m_2 + m_3 after sorting, the quantity d must exceed
};

inline ShghCount shgh_expected_dim(const PlanarSystem& sys) {
    ShghCount out;
    out.expected_dim = (sys.d + 2) * (sys.d + 1) / 2;
    for (const auto& m : sys.m) out.expected_dim -= (m + 1) * m / 2;
    std::vector<Integer> sorted = sys.m;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    out.top_three = 0;
    for (std::size_t i = 0; i < std::min<std::size_t>(3, sorted.size()); ++i) out.top_three += sorted[i];
    out.applicable = sorted.size() >= 10 && sys.d > out.top_three;
    return out;
}

enum class QuadricBasis { Planar, Ruling };

/// 11 coordinates: planar (h, e_0..e_9) or ruling (r_1, r_2, f_1..f_9).
struct QuadricBasisClass {
    QuadricBasis basis = QuadricBasis::Planar;
    std::array<Rational, 11> coords{};
    friend bool operator==(const QuadricBasisClass&, const QuadricBasisClass&) = default;
};

inline std::vector<std::string> quadric_symbol_names(QuadricBasis basis) {
    std::vector<std::string> names;
    if (basis == QuadricBasis::Planar) {
        names.push_back("h");
        for (int i = 0; i <= 9; ++i) names.push_back("e" + std::to_string(i));
    } else {
        names = {"r1", "r2"};
        for (int i = 1; i <= 9; ++i) names.push_back("f" + std::to_string(i));
    }
    return names;
}

inline QuadricBasisClass quadric_basis_change(const QuadricBasisClass& x, QuadricBasis target) {
    if (x.basis == target) return x;
    const auto& c = x.coords;
    QuadricBasisClass y{target, {}};
    if (target == QuadricBasis::Ruling) {
        y.coords[0] = c[0] + c[1];
        y.coords[1] = c[0] + c[2];
        y.coords[2] = -c[0] - c[1] - c[2];
    } else {
        y.coords[0] = c[0] + c[1] + c[2];
        y.coords[1] = -c[1] - c[2];
        y.coords[2] = -c[0] - c[2];
    }
    for (std::size_t j = 3; j < 11; ++j) y.coords[j] = c[j];
    return y;
}

inline std::string format_quadric(const QuadricBasisClass& x) {
    return format_linear_form({x.coords.begin(), x.coords.end()}, quadric_symbol_names(x.basis));
}

/// Parses lowercase symbols; the basis is inferred from the symbols used.
inline QuadricBasisClass parse_quadric(std::string_view text) {
    std::optional<QuadricBasis> basis;
    const auto resolver = [&](const Symbol& s, std::size_t position) -> SlotLookup {
        auto pin = [&](QuadricBasis b) {
            if (basis && *basis != b) detail::parse_fail(position, "planar (h, e_i) and ruling (r_i, f_i) symbols are mixed");
            basis = b;
        };
        auto need_index = [&](int lo, int hi) {
            if (!s.index || *s.index < lo || *s.index > hi)
                detail::parse_fail(position, "'" + s.name + "' needs an index in " + std::to_string(lo) + ".." + std::to_string(hi));
            return *s.index;
        };
        if (s.name == "h") {
            if (s.index) detail::parse_fail(position, "h takes no index");
            pin(QuadricBasis::Planar);
            return {0, "h"};
        }
        if (s.name == "e") {
            pin(QuadricBasis::Planar);
            return {static_cast<std::size_t>(need_index(0, 9)) + 1, "e"};
        }
        if (s.name == "r") {
            pin(QuadricBasis::Ruling);
            return {static_cast<std::size_t>(need_index(1, 2)) - 1, "r"};
        }
        if (s.name == "f") {
            pin(QuadricBasis::Ruling);
            return {static_cast<std::size_t>(need_index(1, 9)) + 1, "f"};
        }
        detail::parse_fail(position, "unknown symbol '" + s.name + "'");
    };
    const auto coeffs = parse_linear_form(text, 11, resolver);
    QuadricBasisClass out{basis.value_or(QuadricBasis::Planar), {}};
    std::copy(coeffs.begin(), coeffs.end(), out.coords.begin());
    return out;
}

/// Intersection on Q, evaluated in the planar basis.
inline Rational quadric_intersection(const QuadricBasisClass& x, const QuadricBasisClass& y) {
    const auto p = quadric_basis_change(x, QuadricBasis::Planar).coords;
    const auto q = quadric_basis_change(y, QuadricBasis::Planar).coords;
    Rational out = p[0] * q[0];
    for (std::size_t i = 1; i < 11; ++i) out -= p[i] * q[i];
    return out;
}

inline QuadricBasisClass quadric_canonical() {
    QuadricBasisClass k{QuadricBasis::Planar, {}};
    k.coords[0] = -3;
    for (std::size_t i = 1; i < 11; ++i) k.coords[i] = 1;
    return k;
}

/// The planar basis as X^2_10: e_i becomes E_{i+1}.
inline CycleClass quadric_as_planar_blowup(const QuadricBasisClass& x) {
    const auto p = quadric_basis_change(x, QuadricBasis::Planar).coords;
    return CycleClass(Ambient(2, 10), 1, {p.begin(), p.end()});
}

inline QuadricBasisClass planar_blowup_as_quadric(const CycleClass& x) {
    if (x.n() != 2 || x.r() != 10) throw Error(ErrorKind::AmbientMismatch, "expected a class on X^2_10");
    QuadricBasisClass out{QuadricBasis::Planar, {}};
    std::copy(x.coeffs().begin(), x.coeffs().end(), out.coords.begin());
    return out;
}

/// r_1, r_2 |-> H_1 and f_i |-> E_{i,1} on X^3_9.
inline CycleClass pushforward_to_X39(const QuadricBasisClass& x) {
    const auto y = quadric_basis_change(x, QuadricBasis::Ruling).coords;
    std::vector<Rational> c{y[0] + y[1]};
    for (std::size_t j = 2; j < 11; ++j) c.push_back(y[j]);
    return CycleClass(Ambient(3, 9), 1, std::move(c));
}

struct DDeltaParams {
    Rational delta;
    Rational delta_prime;
};

/// D = h - delta (e_0 + e_1) - delta' (e_2 + ... + e_9).
inline QuadricBasisClass ddelta_class(const DDeltaParams& p) {
    QuadricBasisClass d{QuadricBasis::Planar, {}};
    d.coords[0] = 1;
    d.coords[1] = d.coords[2] = -p.delta;
    for (std::size_t j = 3; j < 11; ++j) d.coords[j] = -p.delta_prime;
    return d;
}

struct CertificateCheck {
    std::string name;
    std::string condition;
    bool passed = false;
    std::vector<std::pair<std::string, Rational>> values;
};

struct CertificateReport {
    DDeltaParams params;
    std::vector<CertificateCheck> checks;
    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.passed; });
    }
};

/// Sufficient numeric conditions for i_* D to span an extremal ray of the
/// curve cone of X^3_9. Intersection numbers go through quadric_intersection;
/// the closed forms are recorded alongside as a cross-check.
inline CertificateReport certify_ddelta(const DDeltaParams& p) {
    const Rational& d = p.delta;
    const Rational& dp = p.delta_prime;
    const auto D = ddelta_class(p);
    auto basis_vector = [](std::size_t slot) {
        QuadricBasisClass e{QuadricBasis::Planar, {}};
        e.coords[slot] = 1;
        return e;
    };

    CertificateReport report{p, {}};

    report.checks.push_back({"range", "0 < delta' < delta < 1/3", dp > 0 && dp < d && d < Rational(1, 3),
                             {{"delta", d}, {"delta'", dp}}});

    const Rational sq = quadric_intersection(D, D);
    const Rational conic = 2 * d * d + 8 * dp * dp;
    const Integer l = boost::multiprecision::lcm(denominator_of(d), denominator_of(dp));
    const Rational ld = d * Rational(l);
    const Rational ldp = dp * Rational(l);
    report.checks.push_back({"null", "2 delta^2 + 8 delta'^2 = 1, i.e. D^2 = 0",
                             conic == 1 && sq == 0,
                             {{"2 delta^2 + 8 delta'^2", conic},
                              {"D^2", sq},
                              {"2 (L delta)^2 + 8 (L delta')^2", 2 * ld * ld + 8 * ldp * ldp},
                              {"L^2", Rational(l * l)}}});

    const Rational dk = quadric_intersection(D, quadric_canonical());
    report.checks.push_back({"canonical", "D.K_Q = -3 + 2 delta + 8 delta' > 0", dk > 0 && dk == -3 + 2 * d + 8 * dp,
                             {{"D.K_Q", dk}}});

    const Rational de0 = quadric_intersection(D, basis_vector(1));
    const Rational de1 = quadric_intersection(D, basis_vector(2));
    report.checks.push_back({"symmetry", "D.e_0 = D.e_1", de0 == de1, {{"D.e_0", de0}, {"D.e_1", de1}}});

    const Rational lines = 1 - d - 2 * dp;
    report.checks.push_back({"lines", "delta > delta' and 1 - delta - 2 delta' > 0", d > dp && lines > 0,
                             {{"delta - delta'", d - dp}, {"1 - delta - 2 delta'", lines}}});
    return report;
}

/// D^2 >= 0 and D.H >= 0 on X^2_10.
inline bool positive_cone_predicate(const CycleClass& x) {
    if (x.n() != 2 || x.r() != 10) throw Error(ErrorKind::AmbientMismatch, "positive cone test is on X^2_10");
    return top_self_intersection(x) >= 0 && x.degree() >= 0;
}

/// Rational points on 2x^2 + 8y^2 = 1 from a Pythagorean triple p^2 + q^2 = c^2:
/// x = (p + q) / (2c), y = (p - q) / (4c).
inline DDeltaParams ddelta_from_triple(const Integer& p, const Integer& q, const Integer& c) {
    if (p * p + q * q != c * c || c == 0) throw Error(ErrorKind::InvalidQuery, "not a Pythagorean triple");
    return {Rational(p + q, 2 * c), Rational(p - q, 4 * c)};
}

}  // namespace blowup
