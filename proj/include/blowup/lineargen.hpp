#pragma once

// Membership in the cone spanned by linear cycle classes.
//
// In point-multiplicity coordinates (a; b_1..b_r) the generators are
//   h_I = (1; 1 at i in I)   for |I| = s   (a k-plane through the points of I, s = k+1)
//   e_i = (0; -1 at i)                      (a k-plane inside E_i)
// and a vector with b_i >= 0 lies in their cone iff
//   (1) a >= 0,  (2) a >= b_i for all i,  (3) s*a >= sum b_i.

#include "blowup/classgroup.hpp"
#include "blowup/lp_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace blowup {

struct ExceptionalGenerator {
    int index;  // 1-based
    auto operator<=>(const ExceptionalGenerator&) const = default;
};

/// h_I; `points` is sorted ascending and 1-based. Fewer than s points is
/// allowed: such an h_I is h_{I'} + sum e_j for any I' of size s containing I.
struct LinearGenerator {
    std::vector<int> points;
    auto operator<=>(const LinearGenerator&) const = default;
};

using GeneratorId = std::variant<LinearGenerator, ExceptionalGenerator>;

struct DecompositionTerm {
    GeneratorId generator;
    Rational coefficient;
    bool operator==(const DecompositionTerm&) const = default;
};

struct Decomposition {
    std::vector<DecompositionTerm> terms;
    bool operator==(const Decomposition&) const = default;
};

enum class InequalityKind { DegreeNonnegative, DegreeBoundsMultiplicity, SumBound };

inline std::string to_string(InequalityKind kind) {
    switch (kind) {
        case InequalityKind::DegreeNonnegative: return "a >= 0";
        case InequalityKind::DegreeBoundsMultiplicity: return "a >= b_i";
        case InequalityKind::SumBound: return "s*a >= sum b_i";
    }
    return "?";
}

/// A failed inequality, stated as lhs >= rhs with the offending values.
struct ViolatedInequality {
    InequalityKind kind;
    int index = 0;  // the i of a >= b_i, otherwise 0
    Rational lhs;
    Rational rhs;
    bool operator==(const ViolatedInequality&) const = default;
};

enum class MembershipMethod { Greedy, LpOracle };

struct MembershipVerdict {
    bool member = false;
    std::optional<Decomposition> witness;
    std::optional<ViolatedInequality> violated;
    MembershipMethod method = MembershipMethod::Greedy;
};

class NotInConeError : public Error {
public:
    explicit NotInConeError(ViolatedInequality v)
        : Error(ErrorKind::NotInCone, "violates " + to_string(v.kind) + ": " + blowup::to_string(v.lhs) + " < " +
                                          blowup::to_string(v.rhs)),
          violated_(std::move(v)) {}
    const ViolatedInequality& violated() const noexcept { return violated_; }

private:
    ViolatedInequality violated_;
};

inline std::string to_string(const GeneratorId& g) {
    if (const auto* e = std::get_if<ExceptionalGenerator>(&g)) return "e" + std::to_string(e->index);
    const auto& pts = std::get<LinearGenerator>(g).points;
    std::string out = "h{";
    for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? "," : "") + std::to_string(pts[i]);
    return out + "}";
}

/// Generator as a point-multiplicity vector (a; b_1..b_r).
inline std::vector<Rational> generator_vector(const GeneratorId& g, int r) {
    std::vector<Rational> v(static_cast<std::size_t>(r) + 1);
    if (const auto* e = std::get_if<ExceptionalGenerator>(&g)) {
        v.at(static_cast<std::size_t>(e->index)) = -1;
    } else {
        v[0] = 1;
        for (int i : std::get<LinearGenerator>(g).points) v.at(static_cast<std::size_t>(i)) = 1;
    }
    return v;
}

/// The finite generator list of the cone: h_I for every |I| = min(s, r) in
/// lexicographic order, then e_1..e_r.
inline std::vector<GeneratorId> linear_generators(int r, int s) {
    std::vector<GeneratorId> out;
    const int size = std::min(s, r);
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 1);
    for (;;) {
        out.emplace_back(LinearGenerator{pick});
        int pos = size - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == r - size + pos + 1) --pos;
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < size; ++q) pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
    }
    for (int i = 1; i <= r; ++i) out.emplace_back(ExceptionalGenerator{i});
    return out;
}

inline std::vector<std::vector<Rational>> linear_generator_vectors(int r, int s) {
    std::vector<std::vector<Rational>> out;
    for (const auto& g : linear_generators(r, s)) out.push_back(generator_vector(g, r));
    return out;
}

/// Sum of coefficient * generator, as (a; b_1..b_r).
inline PointMultiplicityForm resum(const Decomposition& d, int r) {
    PointMultiplicityForm f{0, std::vector<Rational>(static_cast<std::size_t>(r))};
    for (const auto& t : d.terms) {
        if (const auto* e = std::get_if<ExceptionalGenerator>(&t.generator)) {
            f.multiplicities.at(static_cast<std::size_t>(e->index) - 1) -= t.coefficient;
            continue;
        }
        f.degree += t.coefficient;
        for (int i : std::get<LinearGenerator>(t.generator).points) f.multiplicities.at(static_cast<std::size_t>(i) - 1) += t.coefficient;
    }
    return f;
}

inline std::string format_decomposition(const Decomposition& d) {
    std::string out;
    for (const auto& t : d.terms) out += to_string(t.coefficient) + " * " + to_string(t.generator) + "\n";
    return out;
}

/// First violated inequality of (a; max(b_i, 0)), or nothing when all hold.
inline std::optional<ViolatedInequality> check_inequalities(const PointMultiplicityForm& v, int s) {
    if (v.degree < 0) return ViolatedInequality{InequalityKind::DegreeNonnegative, 0, v.degree, 0};
    Rational sum = 0;
    for (std::size_t i = 0; i < v.multiplicities.size(); ++i) {
        const auto& b = v.multiplicities[i];
        if (b > v.degree)
            return ViolatedInequality{InequalityKind::DegreeBoundsMultiplicity, static_cast<int>(i) + 1, v.degree, b};
        if (b > 0) sum += b;
    }
    const Rational bound = Rational(s) * v.degree;
    if (bound < sum) return ViolatedInequality{InequalityKind::SumBound, 0, bound, sum};
    return std::nullopt;
}

/// Constructive decomposition by induction on the degree: repeatedly subtract
/// h_J where J holds the min(s, #nonzero) largest b_i (ties to the smaller
/// index). Rational input is first scaled to integers by the common denominator.
inline Decomposition greedy_decompose(const PointMultiplicityForm& v, int s) {
    if (s < 1) throw Error(ErrorKind::InvalidQuery, "s must be at least 1");
    for (const auto& b : v.multiplicities)
        if (b < 0) throw Error(ErrorKind::InvalidClass, "greedy decomposition needs b_i >= 0");
    if (auto bad = check_inequalities(v, s)) throw NotInConeError(*bad);

    const bool integral = is_integral(v.degree) && std::all_of(v.multiplicities.begin(), v.multiplicities.end(),
                                                               [](const Rational& x) { return is_integral(x); });
    Integer scale = 1;
    if (!integral) {
        std::vector<Rational> all{v.degree};
        all.insert(all.end(), v.multiplicities.begin(), v.multiplicities.end());
        scale = lcm_of_denominators(all);
    }
    auto scaled = [&](const Rational& x) { return integral ? numerator_of(x) : Integer(numerator_of(x) * (scale / denominator_of(x))); };
    Integer a = scaled(v.degree);
    std::vector<Integer> b;
    b.reserve(v.multiplicities.size());
    for (const auto& x : v.multiplicities) b.push_back(scaled(x));

    std::map<std::vector<int>, Integer> uses;
    std::vector<int> order;
    for (;;) {
        order.clear();
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] != 0) order.push_back(static_cast<int>(i));
        if (order.empty()) break;
        const std::size_t j = std::min<std::size_t>(static_cast<std::size_t>(s), order.size());
        std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(j), order.end(), [&](int x, int y) {
            if (b[static_cast<std::size_t>(x)] != b[static_cast<std::size_t>(y)])
                return b[static_cast<std::size_t>(x)] > b[static_cast<std::size_t>(y)];
            return x < y;
        });
        std::vector<int> chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(j));
        // The same J is picked for `steps` unit steps in a row: until the
        // smallest chosen b meets the largest unchosen one (or reaches 0).
        const Integer low = b[static_cast<std::size_t>(chosen.back())];
        Integer next = 0;
        for (std::size_t q = j; q < order.size(); ++q) next = std::max(next, b[static_cast<std::size_t>(order[q])]);
        const Integer steps = low > next ? Integer(low - next) : Integer(1);
        std::sort(chosen.begin(), chosen.end());
        for (int i : chosen) b[static_cast<std::size_t>(i)] -= steps;
        a -= steps;
        for (int& i : chosen) ++i;
        uses[chosen] += steps;
    }
    if (a > 0) uses[{}] += a;

    Decomposition d;
    for (const auto& [points, count] : uses) d.terms.push_back({LinearGenerator{points}, integral ? Rational(count) : Rational(count, scale)});
    return d;
}

inline Decomposition decomposition_from_solution(const std::vector<GeneratorId>& gens, const std::vector<Rational>& lambda) {
    Decomposition d;
    for (std::size_t j = 0; j < gens.size(); ++j)
        if (lambda[j] != 0) d.terms.push_back({gens[j], lambda[j]});
    return d;
}

/// Membership of (a; b) in the cone of the h_I (|I| = s) and e_i. Uses the
/// greedy construction when every b_i >= 0; otherwise the exact LP decides and
/// supplies the witness.
inline MembershipVerdict simplex_cone_membership(const PointMultiplicityForm& v, int s) {
    if (s < 1) throw Error(ErrorKind::InvalidQuery, "s must be at least 1");
    MembershipVerdict verdict;
    const bool has_negative = std::any_of(v.multiplicities.begin(), v.multiplicities.end(), [](const Rational& b) { return b < 0; });
    if (!has_negative) {
        verdict.method = MembershipMethod::Greedy;
        if (auto bad = check_inequalities(v, s)) {
            verdict.violated = bad;
            return verdict;
        }
        verdict.member = true;
        verdict.witness = greedy_decompose(v, s);
        return verdict;
    }

    verdict.method = MembershipMethod::LpOracle;
    const int r = static_cast<int>(v.multiplicities.size());
    const auto gens = linear_generators(r, s);
    std::vector<std::vector<Rational>> columns;
    for (const auto& g : gens) columns.push_back(generator_vector(g, r));
    std::vector<Rational> target{v.degree};
    target.insert(target.end(), v.multiplicities.begin(), v.multiplicities.end());
    auto lp = cone_feasibility<Rational>(target, columns, true);
    verdict.member = lp.feasible;
    if (lp.feasible)
        verdict.witness = decomposition_from_solution(gens, lp.solution);
    else
        verdict.violated = check_inequalities(v, s);
    return verdict;
}

/// Linear generation test for a single k-cycle class (k >= 1): s = k + 1.
inline MembershipVerdict is_linearly_generated_class(const CycleClass& y) {
    if (y.dim() < 1) throw Error(ErrorKind::InvalidDims, "linear generation is tested for k >= 1");
    return simplex_cone_membership(y.form(), y.dim() + 1);
}

}  // namespace blowup
