#pragma once

// Coxeter group of type T_{2,n+1,r-n-1} acting on N^1(X^n_r).
//
// Simple roots: alpha_0 = H - E_1 - ... - E_{n+1} (Cremona) and
// alpha_i = E_i - E_{i+1}, 1 <= i < r. Each has Mukai square -2, so
// s_alpha(x) = x + (x, alpha) alpha is an involutive isometry.

#include "blowup/classgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

namespace blowup {

enum class RootKind { Cremona, Permutation };

struct Root {
    CycleClass vector;
    RootKind kind;
    int index;  // 0 for Cremona, i for E_i - E_{i+1}
};

inline bool has_cremona_root(const Ambient& amb) { return amb.r() >= amb.n() + 1; }

inline Root simple_root(const Ambient& amb, int index) {
    const int n = amb.n();
    const int r = amb.r();
    std::vector<Rational> c(static_cast<std::size_t>(r) + 1, Rational(0));
    if (index == 0) {
        if (!has_cremona_root(amb))
            throw Error(ErrorKind::NoCremonaRoot, "the Cremona root needs r >= n+1, got n=" + std::to_string(n) +
                                                      ", r=" + std::to_string(r));
        c[0] = 1;
        for (int i = 1; i <= n + 1; ++i) c[static_cast<std::size_t>(i)] = -1;
        return {CycleClass(amb, n - 1, std::move(c)), RootKind::Cremona, 0};
    }
    if (index < 1 || index >= r) throw Error(ErrorKind::InvalidQuery, "no simple root with index " + std::to_string(index));
    c[static_cast<std::size_t>(index)] = 1;
    c[static_cast<std::size_t>(index) + 1] = -1;
    return {CycleClass(amb, n - 1, std::move(c)), RootKind::Permutation, index};
}

/// Cremona root first (when it exists), then alpha_1..alpha_{r-1}.
inline std::vector<Root> simple_roots(const Ambient& amb) {
    std::vector<Root> out;
    if (has_cremona_root(amb)) out.push_back(simple_root(amb, 0));
    for (int i = 1; i < amb.r(); ++i) out.push_back(simple_root(amb, i));
    return out;
}

inline CycleClass reflect(const CycleClass& x, const Root& alpha) {
    if (!x.is_divisor()) throw Error(ErrorKind::InvalidDims, "reflections act on divisor classes");
    return x + mukai_pairing(x, alpha.vector) * alpha.vector;
}

/// Generator indices, applied left to right.
using WeylWord = std::vector<int>;

inline CycleClass apply_word(const WeylWord& word, CycleClass x) {
    for (int g : word) x = reflect(x, simple_root(x.ambient(), g));
    return x;
}

enum class GroupKind { Finite, Affine, Indefinite };

inline std::string to_string(GroupKind k) {
    switch (k) {
        case GroupKind::Finite: return "Finite";
        case GroupKind::Affine: return "Affine";
        case GroupKind::Indefinite: return "Indefinite";
    }
    return "?";
}

struct GroupType {
    GroupKind kind;
    Rational sum;  // 1/2 + 1/(n+1) + 1/(r-n-1)
    bool infinite() const { return kind != GroupKind::Finite; }
};

inline GroupType group_type(int n, int r) {
    if (n < 2) throw Error(ErrorKind::InvalidQuery, "n must be at least 2");
    if (r < n + 2) throw Error(ErrorKind::NoTShape, "T-shaped diagram needs r >= n+2");
    const Rational sum = Rational(1, 2) + Rational(1, n + 1) + Rational(1, r - n - 1);
    const GroupKind kind = sum > 1 ? GroupKind::Finite : sum == 1 ? GroupKind::Affine : GroupKind::Indefinite;
    return {kind, sum};
}

struct OrbitOptions {
    int max_word_length = 0;
    /// Elements whose H-degree exceeds the cap are dropped and not expanded.
    std::optional<Rational> max_degree;
    unsigned threads = 1;
    /// Uses only the transposition roots, which exist for every r.
    bool permutations_only = false;
};

struct OrbitElement {
    CycleClass cls;
    int word_length;
};

struct OrbitResult {
    /// Sorted lexicographically by raw coefficient vector.
    std::vector<OrbitElement> elements;
    Rational max_degree;
    /// True when a BFS level produced nothing new and no element was dropped by the cap.
    bool closed = false;
    bool truncated_by_degree = false;
    int levels_expanded = 0;
    std::size_t count() const { return elements.size(); }
};

namespace detail {

using IntVec = std::vector<std::int64_t>;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::InvalidQuery, "orbit coefficients overflow 64 bits");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::InvalidQuery, "orbit coefficients overflow 64 bits");
    return out;
}

/// Reflection on a scaled integer vector; generator 0 is the Cremona root.
inline IntVec reflect_int(const IntVec& x, int generator, int n) {
    IntVec y = x;
    if (generator == 0) {
        std::int64_t p = checked_mul(n - 1, x[0]);
        for (int i = 1; i <= n + 1; ++i) p = checked_add(p, x[static_cast<std::size_t>(i)]);
        y[0] = checked_add(y[0], p);
        for (int i = 1; i <= n + 1; ++i) y[static_cast<std::size_t>(i)] = checked_add(y[static_cast<std::size_t>(i)], -p);
    } else {
        std::swap(y[static_cast<std::size_t>(generator)], y[static_cast<std::size_t>(generator) + 1]);
    }
    return y;
}

struct Scaled {
    IntVec vec;
    Integer scale;
};

inline Scaled scale_to_integers(const CycleClass& x) {
    const Integer l = lcm_of_denominators(x.coeffs());
    IntVec v;
    v.reserve(x.coeffs().size());
    for (const auto& c : x.coeffs()) {
        const Integer z = numerator_of(c * Rational(l));
        if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
            throw Error(ErrorKind::InvalidQuery, "orbit seed does not fit in 64 bits");
        v.push_back(static_cast<std::int64_t>(z));
    }
    return {std::move(v), l};
}

inline CycleClass unscale(const IntVec& v, const Integer& scale, const Ambient& amb) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (auto z : v) c.push_back(Rational(Integer(z), scale));
    return CycleClass(amb, amb.n() - 1, std::move(c));
}

inline void validate_orbit_input(const CycleClass& x, const OrbitOptions& opt) {
    if (!x.is_divisor()) throw Error(ErrorKind::InvalidDims, "orbits are computed for divisor classes");
    if (opt.max_word_length < 0) throw Error(ErrorKind::InvalidQuery, "word length bound must be nonnegative");
    if (!opt.permutations_only && x.r() < x.n() + 2) throw Error(ErrorKind::NoTShape, "T-shaped diagram needs r >= n+2");
}

inline OrbitResult run_orbit_bfs(const Ambient& amb, const Integer& scale, std::set<IntVec> seen_init,
                                 std::vector<std::pair<IntVec, int>> known, std::vector<IntVec> frontier, int start_level,
                                 const OrbitOptions& opt) {
    const int n = amb.n();
    const int r = amb.r();
    std::vector<int> gens;
    if (!opt.permutations_only) gens.push_back(0);
    for (int i = 1; i < r; ++i) gens.push_back(i);

    std::optional<std::int64_t> cap;
    if (opt.max_degree) {
        const Rational scaled = *opt.max_degree * Rational(scale);
        const Integer floor_cap = numerator_of(scaled) / denominator_of(scaled);
        cap = floor_cap > std::numeric_limits<std::int64_t>::max() ? std::numeric_limits<std::int64_t>::max()
                                                                   : static_cast<std::int64_t>(floor_cap);
    }

    std::set<IntVec> seen = std::move(seen_init);
    OrbitResult result;
    const unsigned threads = std::max(1u, opt.threads);
    int level = start_level;
    while (level < opt.max_word_length && !frontier.empty()) {
        // Children are computed in parallel per chunk; the merge is sequential in
        // frontier order, so the outcome is schedule-independent.
        std::vector<std::vector<IntVec>> children(frontier.size());
        auto expand = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t f = lo; f < hi; ++f)
                for (int g : gens) children[f].push_back(reflect_int(frontier[f], g, n));
        };
        if (threads == 1 || frontier.size() < 2 * threads) {
            expand(0, frontier.size());
        } else {
            std::vector<std::jthread> pool;
            const std::size_t chunk = (frontier.size() + threads - 1) / threads;
            for (std::size_t lo = 0; lo < frontier.size(); lo += chunk)
                pool.emplace_back(expand, lo, std::min(frontier.size(), lo + chunk));
        }
        std::vector<IntVec> next;
        for (auto& list : children)
            for (auto& y : list) {
                if (cap && y[0] > *cap) {
                    result.truncated_by_degree = true;
                    continue;
                }
                if (seen.insert(y).second) {
                    known.emplace_back(y, level + 1);
                    next.push_back(std::move(y));
                }
            }
        ++level;
        result.levels_expanded = level;
        frontier = std::move(next);
    }
    result.closed = frontier.empty() && !result.truncated_by_degree;

    std::sort(known.begin(), known.end());
    std::int64_t best = known.empty() ? 0 : known.front().first[0];
    for (const auto& [v, len] : known) {
        best = std::max(best, v[0]);
        result.elements.push_back({unscale(v, scale, amb), len});
    }
    result.max_degree = Rational(Integer(best), scale);
    return result;
}

}  // namespace detail

/// Breadth-first closure of {x} under the simple reflections, up to the word-length bound.
inline OrbitResult orbit_enumerate(const CycleClass& x, const OrbitOptions& opt) {
    detail::validate_orbit_input(x, opt);
    auto [seed, scale] = detail::scale_to_integers(x);
    return detail::run_orbit_bfs(x.ambient(), scale, {seed}, {{seed, 0}}, {seed}, 0, opt);
}

inline OrbitResult orbit_enumerate(const CycleClass& x, int max_word_length) {
    OrbitOptions opt;
    opt.max_word_length = max_word_length;
    return orbit_enumerate(x, opt);
}

/// One record per line: "degree;m_1,...,m_r;word_length".
inline void write_orbit_dump(std::ostream& out, const OrbitResult& orbit) {
    for (const auto& e : orbit.elements) {
        out << to_string(e.cls.degree()) << ';';
        for (int i = 1; i <= e.cls.r(); ++i) out << (i > 1 ? "," : "") << to_string(e.cls.multiplicity(i));
        out << ';' << e.word_length << '\n';
    }
}

/// Parses a dump. Blank lines and lines starting with '#' are skipped.
inline std::vector<OrbitElement> read_orbit_dump(std::istream& in, const Ambient& amb) {
    std::vector<OrbitElement> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto fail = [&](const std::string& why) {
            return Error(ErrorKind::Parse, "orbit dump line " + std::to_string(line_no) + ": " + why);
        };
        const auto s1 = line.find(';');
        const auto s2 = s1 == std::string::npos ? std::string::npos : line.find(';', s1 + 1);
        if (s2 == std::string::npos) throw fail("expected three ';'-separated fields");
        try {
            PointMultiplicityForm form{parse_rational(line.substr(0, s1)), {}};
            std::stringstream ms(line.substr(s1 + 1, s2 - s1 - 1));
            std::string tok;
            while (std::getline(ms, tok, ',')) form.multiplicities.push_back(parse_rational(tok));
            if (form.multiplicities.size() != static_cast<std::size_t>(amb.r())) throw fail("expected r multiplicities");
            const int len = std::stoi(line.substr(s2 + 1));
            out.push_back({CycleClass::from_form(amb, amb.n() - 1, form), len});
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
    }
    return out;
}

/// Continues a BFS from dumped records: the elements of greatest word length
/// form the frontier and everything recorded counts as seen.
inline OrbitResult orbit_resume(const std::vector<OrbitElement>& records, const OrbitOptions& opt) {
    if (records.empty()) throw Error(ErrorKind::InvalidQuery, "nothing to resume");
    const Ambient amb = records.front().cls.ambient();
    for (const auto& e : records) detail::validate_orbit_input(e.cls, opt);

    std::vector<Rational> all;
    for (const auto& e : records) all.insert(all.end(), e.cls.coeffs().begin(), e.cls.coeffs().end());
    const Integer scale = lcm_of_denominators(all);

    std::set<detail::IntVec> seen;
    std::vector<std::pair<detail::IntVec, int>> known;
    std::vector<detail::IntVec> frontier;
    int depth = 0;
    for (const auto& e : records) depth = std::max(depth, e.word_length);
    for (const auto& e : records) {
        auto v = detail::scale_to_integers(Rational(scale) * e.cls).vec;
        if (!seen.insert(v).second) continue;
        known.emplace_back(v, e.word_length);
        if (e.word_length == depth) frontier.push_back(std::move(v));
    }
    return detail::run_orbit_bfs(amb, scale, std::move(seen), std::move(known), std::move(frontier), depth, opt);
}

}  // namespace blowup
