#pragma once

// Generation-status oracle over (n, r, k, configuration) and a small library
// of named classes.
//
// Rules live in one table in precedence order. For each of the two verdict
// fields the earliest rule that decides it wins; every applicable rule is
// cited. Two implications close the result: linear Yes => finite Yes, and
// finite No => linear No.

#include "blowup/classgroup.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blowup {

enum class LinearVerdict { Yes, No, Unknown };
enum class FiniteVerdict { Yes, No, ConditionalNo, Unknown };

inline std::string to_string(LinearVerdict v) {
    switch (v) {
        case LinearVerdict::Yes: return "Yes";
        case LinearVerdict::No: return "No";
        case LinearVerdict::Unknown: return "Unknown";
    }
    return "?";
}

inline std::string to_string(FiniteVerdict v) {
    switch (v) {
        case FiniteVerdict::Yes: return "Yes";
        case FiniteVerdict::No: return "No";
        case FiniteVerdict::ConditionalNo: return "ConditionalNo(SHGH)";
        case FiniteVerdict::Unknown: return "Unknown";
    }
    return "?";
}

struct Citation {
    std::string rule;
    std::string statement;
};

struct GenerationStatus {
    LinearVerdict linear = LinearVerdict::Unknown;
    FiniteVerdict finite = FiniteVerdict::Unknown;
    std::optional<std::string> assumption;  // "SHGH" for ConditionalNo
    std::vector<Citation> citations;
    std::vector<std::string> notes;
    std::optional<CycleClass> witness;
    /// Rule ids that fixed each field, or "implied" when closed by implication.
    std::string linear_source;
    std::string finite_source;
};

struct StatusQuery {
    int n;
    int r;
    int k;
    ConfigTag config;
};

struct RuleOutcome {
    std::optional<LinearVerdict> linear;
    std::optional<FiniteVerdict> finite;
    std::optional<std::string> note;
    std::optional<CycleClass> witness;
};

struct StatusRule {
    std::string_view id;
    std::string_view statement;
    std::optional<RuleOutcome> (*apply)(const StatusQuery&);
};

inline CycleClass cone_over_rnc(int n, int k, int r, ConfigTag config = config::VeryGeneral{});

namespace detail {

inline bool is_very_general(const StatusQuery& q) { return std::holds_alternative<config::VeryGeneral>(q.config); }
inline bool is_linearly_general(const StatusQuery& q) {
    return is_very_general(q) || std::holds_alternative<config::LinearlyGeneral>(q.config);
}

/// (n, r) for which X^n_r at very general points is a Mori dream space.
inline bool mori_dream_pair(int n, int r) {
    if (n == 2) return r <= 8;
    if (n == 3) return r <= 7;
    if (n == 4) return r <= 8;
    return r <= n + 3;
}

inline std::optional<int> span_dimension(const ConfigTag& tag) {
    if (std::holds_alternative<config::Collinear>(tag)) return 1;
    if (const auto* s = std::get_if<config::SpanDim>(&tag)) return s->m;
    return std::nullopt;
}

inline RuleOutcome linear_only(LinearVerdict v) { return {v, std::nullopt, std::nullopt, std::nullopt}; }
inline RuleOutcome finite_only(FiniteVerdict v) { return {std::nullopt, v, std::nullopt, std::nullopt}; }

// clang-format off
inline const std::vector<StatusRule>& status_rules() {
    static const std::vector<StatusRule> rules{
        {"toric-range",
         "at most n+1 linearly general points: the blow-up is toric and every Effb_k is spanned by linear spaces",
         [](const StatusQuery& q) -> std::optional<RuleOutcome> {
             if (is_linearly_general(q) && q.r <= q.n + 1) return linear_only(LinearVerdict::Yes);
             return std::nullopt;
         }},
        {"span-reduction",
         "points spanning a P^m: Effb_k is linearly generated for m <= k <= n-1",
         [](const StatusQuery& q) -> std::optional<RuleOutcome> {
             const auto m = span_dimension(q.config);
             if (m && q.k >= *m) return linear_only(LinearVerdict::Yes);
             return std::nullopt;
         }},
        {"planar-nine-plus",
         "nine general points in a plane plus s-1 linearly general points: Effb_k is not finitely generated for k <= s and linearly generated for k > s",
         [](const StatusQuery& q) -> std::optional<RuleOutcome> {
             const auto* p = std::get_if<config::PlanarNinePlus>(&q.config);
             if (!p) return std::nullopt;
             if (q.k <= p->s) return finite_only(FiniteVerdict::No);
             return linear_only(LinearVerdict::Yes);
         }},
        {"divisor-classification",
         "divisors at very general points: linearly generated iff r <= n+2; finitely generated iff (n,r) is (2,<=8), (3,<=7), (4,<=8) or (>=5,<=n+3)",
         [](const StatusQuery& q) -> std::optional<RuleOutcome> {
             if (!is_very_general(q) || q.k != q.n - 1) return std::nullopt;
             return RuleOutcome{q.r <= q.n + 2 ? LinearVerdict::Yes : LinearVerdict::No,
                                mori_dream_pair(q.n, q.r) ? FiniteVerdict::Yes : FiniteVerdict::No, std::nullopt, std::nullopt};
         }},
        {"very-general-curves",
         "curves at very general points: linearly generated iff r <= 2^n",
         [](const StatusQuery& q) -> std::optional<RuleOutcome> {
             if (!is_very_general(q) || q.k != 1) return std::nullopt;
             const bool small = q.n < 30 && q.r <= (1L << q.n);
             return linear_only(small ? LinearVerdict::Yes : LinearVerdict::No);
         }},
        {"very-general-linear-range",
         "very general points: Effb_k is linearly generated when r <= 2n-k+1",
         [](const StatusQuery& q) -> std::optional<RuleOutcome> {
             if (is_very_general(q) && q.r <= 2 * q.n - q.k + 1) return linear_only(LinearVerdict::Yes);
             return std::nullopt;
         }},
        {"iterated-cone-obstruction",
         "very general points: Effb_k is not linearly generated when r >= 2^(n-k+1) + k, by iterated cones over a curve violating 2a >= sum b_i",
         [](const StatusQuery& q) -> std::optional<RuleOutcome> {
             if (!is_very_general(q)) return std::nullopt;
             const int e = q.n - q.k + 1;
             if (e < 30 && q.r >= (1L << e) + q.k) return linear_only(LinearVerdict::No);
             return std::nullopt;
         }},
        {"surfaces-up-to-2n",
         "very general points, surfaces in P^n with n >= 4: Effb_2 is linearly generated for r <= 2n",
         [](const StatusQuery& q) -> std::optional<RuleOutcome> {
             if (is_very_general(q) && q.k == 2 && q.n >= 4 && q.r <= 2 * q.n) return linear_only(LinearVerdict::Yes);
             return std::nullopt;
         }},
        {"eight-points-p4",
         "eight very general points in P^4: Effb_2 is linearly generated",
         [](const StatusQuery& q) -> std::optional<RuleOutcome> {
             if (is_very_general(q) && q.n == 4 && q.r == 8 && q.k == 2) return linear_only(LinearVerdict::Yes);
             return std::nullopt;
         }},
        {"codim-two-shgh",
         "very general points, n >= 3, r >= n+6: Effb_{n-2} is not finitely generated, assuming SHGH",
         [](const StatusQuery& q) -> std::optional<RuleOutcome> {
             if (is_very_general(q) && q.n >= 3 && q.k == q.n - 2 && q.r >= q.n + 6)
                 return finite_only(FiniteVerdict::ConditionalNo);
             return std::nullopt;
         }},
        {"linearly-general-range",
         "linearly general points: Effb_k is linearly generated when r <= max(n+2, n + n/k)",
         [](const StatusQuery& q) -> std::optional<RuleOutcome> {
             if (!is_linearly_general(q)) return std::nullopt;
             if (q.r <= q.n + 2 || Rational(q.r) <= Rational(q.n) + Rational(q.n, q.k)) return linear_only(LinearVerdict::Yes);
             return std::nullopt;
         }},
        {"seven-points-p4",
         "seven linearly general points in P^4: Effb_2 is linearly generated",
         [](const StatusQuery& q) -> std::optional<RuleOutcome> {
             if (is_linearly_general(q) && q.n == 4 && q.r == 7 && q.k == 2) return linear_only(LinearVerdict::Yes);
             return std::nullopt;
         }},
        {"linearly-general-sharp",
         "for r > 2n-k+1 some linearly general configuration has Effb_k not linearly generated; witness: a cone over a rational normal curve",
         [](const StatusQuery& q) -> std::optional<RuleOutcome> {
             if (!std::holds_alternative<config::LinearlyGeneral>(q.config) || q.r <= 2 * q.n - q.k + 1) return std::nullopt;
             return RuleOutcome{std::nullopt, std::nullopt,
                                "a configuration exists where this cone is not linearly generated; not a verdict for every configuration",
                                cone_over_rnc(q.n, q.k, q.r, config::LinearlyGeneral{})};
         }},
        {"mori-dream",
         "very general points with X^n_r a Mori dream space: every Effb_k is finitely generated",
         [](const StatusQuery& q) -> std::optional<RuleOutcome> {
             if (is_very_general(q) && mori_dream_pair(q.n, q.r)) return finite_only(FiniteVerdict::Yes);
             return std::nullopt;
         }},
    };
    return rules;
}
// clang-format on

inline const Citation open_region{"open-region",
                                  "no stated result decides this case; it lies in the open range of the generation questions"};

}  // namespace detail

inline const std::vector<StatusRule>& status_rules() { return detail::status_rules(); }

inline void validate_status_query(const StatusQuery& q) {
    if (q.n < 2) throw Error(ErrorKind::InvalidQuery, "n must be at least 2");
    if (q.r < 0) throw Error(ErrorKind::InvalidQuery, "r must be nonnegative");
    if (q.k < 1 || q.k > q.n - 1) throw Error(ErrorKind::InvalidQuery, "need 1 <= k <= n-1");
    try {
        Ambient(q.n, q.r, q.config);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidQuery, e.what());
    }
}

inline GenerationStatus status(const StatusQuery& q) {
    validate_status_query(q);
    GenerationStatus out;
    for (const auto& rule : status_rules()) {
        const auto outcome = rule.apply(q);
        if (!outcome) continue;
        out.citations.push_back({std::string(rule.id), std::string(rule.statement)});
        if (outcome->linear && out.linear == LinearVerdict::Unknown) {
            out.linear = *outcome->linear;
            out.linear_source = rule.id;
        }
        if (outcome->finite && out.finite == FiniteVerdict::Unknown) {
            out.finite = *outcome->finite;
            out.finite_source = rule.id;
        }
        if (outcome->note) out.notes.push_back(*outcome->note);
        if (outcome->witness && !out.witness) out.witness = outcome->witness;
    }
    if (out.linear == LinearVerdict::Yes && out.finite == FiniteVerdict::Unknown) {
        out.finite = FiniteVerdict::Yes;
        out.finite_source = "implied";
    }
    if (out.finite == FiniteVerdict::No && out.linear == LinearVerdict::Unknown) {
        out.linear = LinearVerdict::No;
        out.linear_source = "implied";
    }
    if (out.finite == FiniteVerdict::ConditionalNo) out.assumption = "SHGH";
    if (out.linear == LinearVerdict::Unknown || out.finite == FiniteVerdict::Unknown) out.citations.push_back(detail::open_region);
    return out;
}

inline GenerationStatus status(int n, int r, int k, ConfigTag config = config::VeryGeneral{}) {
    return status(StatusQuery{n, r, k, std::move(config)});
}

/// (n; 1^r), the class of a rational normal curve through the points.
inline CycleClass rnc(int n, int r, ConfigTag config = config::VeryGeneral{}) {
    return CycleClass::from_form(Ambient(n, r, std::move(config)), 1, uniform_form(n, 1, r));
}

/// (n-k+1; (n-k+1)^(k-1), 1^(r-k+1)): cone with a (k-2)-plane vertex through
/// k-1 of the points over a rational normal curve through the rest.
inline CycleClass cone_over_rnc(int n, int k, int r, ConfigTag config) {
    if (k < 1 || k > n - 1) throw Error(ErrorKind::InvalidQuery, "need 1 <= k <= n-1");
    if (r < k - 1) throw Error(ErrorKind::InvalidQuery, "need r >= k-1");
    const int a = n - k + 1;
    PointMultiplicityForm form{a, {}};
    for (int i = 0; i < k - 1; ++i) form.multiplicities.push_back(a);
    for (int i = k - 1; i < r; ++i) form.multiplicities.push_back(1);
    return CycleClass::from_form(Ambient(n, r, std::move(config)), k, form);
}

/// Secant variety of a rational normal quartic through 7 points of P^4: a threefold double at each point.
inline CycleClass secant_quartic_p4() { return CycleClass::from_form(Ambient(4, 7), 3, uniform_form(3, 2, 7)); }

/// The plane curve of degree 57 with ten points of multiplicity 18.
inline CycleClass cm_curve() { return CycleClass::from_form(Ambient(2, 10), 1, uniform_form(57, 18, 10)); }

/// Complete intersection of n-1 degree-d hypersurfaces through the points.
inline CycleClass ci_curve(int d, int n, int r) {
    if (d < 1) throw Error(ErrorKind::InvalidQuery, "need d >= 1");
    Integer deg = 1;
    for (int i = 0; i < n - 1; ++i) deg *= d;
    return CycleClass::from_form(Ambient(n, r), 1, uniform_form(Rational(deg), 1, r));
}

inline const std::vector<std::pair<std::string, std::string>>& named_class_signatures() {
    static const std::vector<std::pair<std::string, std::string>> sigs{
        {"rnc", "n r"}, {"cone_over_rnc", "n k r"}, {"secant_quartic_p4", ""}, {"cm_curve", ""}, {"ci_curve", "d n r"}};
    return sigs;
}

inline CycleClass named_class(std::string_view name, const std::vector<int>& params) {
    auto arity = [&](std::size_t want) {
        if (params.size() != want)
            throw Error(ErrorKind::InvalidQuery, std::string(name) + " takes " + std::to_string(want) + " parameters");
    };
    if (name == "rnc") {
        arity(2);
        return rnc(params[0], params[1]);
    }
    if (name == "cone_over_rnc") {
        arity(3);
        return cone_over_rnc(params[0], params[1], params[2]);
    }
    if (name == "secant_quartic_p4") {
        arity(0);
        return secant_quartic_p4();
    }
    if (name == "cm_curve") {
        arity(0);
        return cm_curve();
    }
    if (name == "ci_curve") {
        arity(3);
        return ci_curve(params[0], params[1], params[2]);
    }
    throw Error(ErrorKind::UnknownClass, "no named class '" + std::string(name) + "'");
}

}  // namespace blowup
