#pragma once

// Text form of classes:
//
//   class := term (('+' | '-') term)*
//   term  := [integer | rational ['*']] symbol  |  '...'
//
// For cycle classes the symbols are H and E<index>, e.g. "3H - 2E1 - E2".
// An ellipsis between two terms with the same signed coefficient fills the
// indices in between: "57H - 18E1 - ... - 18E10".

#include "blowup/classgroup.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blowup {

/// A symbol such as "E12" split into its letters and optional index.
struct Symbol {
    std::string name;
    std::optional<int> index;
};

/// Maps a symbol to a coefficient slot, returning the slot and an optional
/// "ellipsis family" key (symbols in the same family with consecutive indices
/// can be filled by "..."). Throws Error(Parse) for unknown symbols.
struct SlotLookup {
    std::size_t slot;
    std::string family;
};

using SymbolResolver = std::function<SlotLookup(const Symbol&, std::size_t position)>;

namespace detail {

struct ParsedTerm {
    Rational coeff;
    Symbol symbol;
    std::size_t position;
    bool ellipsis = false;
};

[[noreturn]] inline void parse_fail(std::size_t position, const std::string& what) {
    throw Error(ErrorKind::Parse, "at position " + std::to_string(position) + ": " + what);
}

inline std::vector<ParsedTerm> tokenize_terms(std::string_view text) {
    std::vector<ParsedTerm> terms;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_digits = [&] {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    };

    bool first = true;
    skip_ws();
    if (pos == text.size()) parse_fail(pos, "empty class");
    while (pos < text.size()) {
        int sign = 1;
        skip_ws();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            parse_fail(pos, "expected '+' or '-'");
        }
        first = false;
        const std::size_t term_start = pos;

        if (text.substr(pos, 3) == "...") {
            pos += 3;
            terms.push_back({Rational(sign), {}, term_start, true});
            skip_ws();
            continue;
        }

        Rational coeff = 1;
        bool has_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::string number(read_digits());
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                const auto den = read_digits();
                if (den.empty()) parse_fail(pos, "expected denominator");
                number += "/" + std::string(den);
            }
            coeff = parse_rational(number);
            has_coeff = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }

        Symbol symbol;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) symbol.name += text[pos++];
        if (symbol.name.empty()) {
            if (has_coeff && coeff == 0 && pos == text.size() && terms.empty()) return {};
            parse_fail(pos, "expected a basis symbol");
        }
        const auto idx = read_digits();
        if (!idx.empty()) {
            if (idx.size() > 6) parse_fail(pos, "index too large");
            symbol.index = std::stoi(std::string(idx));
        }
        terms.push_back({Rational(sign) * coeff, std::move(symbol), term_start, false});
        skip_ws();
    }
    return terms;
}

}  // namespace detail

/// Parses a linear combination of basis symbols into `slots` coefficients.
inline std::vector<Rational> parse_linear_form(std::string_view text, std::size_t slots,
                                               const SymbolResolver& resolve) {
    std::vector<Rational> coeffs(slots);
    const auto terms = detail::tokenize_terms(text);
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto& term = terms[t];
        if (!term.ellipsis) {
            const auto lookup = resolve(term.symbol, term.position);
            coeffs.at(lookup.slot) += term.coeff;
            continue;
        }
        if (t == 0 || t + 1 == terms.size() || terms[t - 1].ellipsis || terms[t + 1].ellipsis)
            detail::parse_fail(term.position, "'...' must sit between two terms");
        const auto& before = terms[t - 1];
        const auto& after = terms[t + 1];
        if (!before.symbol.index || !after.symbol.index || before.symbol.name != after.symbol.name)
            detail::parse_fail(term.position, "'...' needs indexed symbols of the same kind on both sides");
        if (before.coeff != after.coeff)
            detail::parse_fail(term.position, "'...' needs equal coefficients on both sides");
        if (*after.symbol.index <= *before.symbol.index)
            detail::parse_fail(term.position, "'...' needs increasing indices");
        for (int i = *before.symbol.index + 1; i < *after.symbol.index; ++i) {
            const auto lookup = resolve(Symbol{before.symbol.name, i}, term.position);
            coeffs.at(lookup.slot) += before.coeff;
        }
    }
    return coeffs;
}

/// Parses a cycle class. Exceptional indices run over first_index ..
/// first_index + r - 1; the usual labelling is 1-based, the cone vertex
/// labelling uses E0 for the first point.
inline CycleClass parse_class(std::string_view text, const Ambient& ambient, int dim, int first_index = 1) {
    const auto resolver = [&](const Symbol& s, std::size_t position) -> SlotLookup {
        if (s.name == "H") {
            if (s.index) detail::parse_fail(position, "H takes no index");
            return {0, "H"};
        }
        if (s.name == "E") {
            if (!s.index) detail::parse_fail(position, "E needs an index");
            const int i = *s.index;
            if (i < first_index || i >= first_index + ambient.r())
                detail::parse_fail(position, "index E" + std::to_string(i) + " outside " +
                                                 std::to_string(first_index) + ".." +
                                                 std::to_string(first_index + ambient.r() - 1));
            return {static_cast<std::size_t>(i - first_index + 1), "E"};
        }
        detail::parse_fail(position, "unknown symbol '" + s.name + "'");
    };
    auto coeffs = parse_linear_form(text, static_cast<std::size_t>(ambient.r()) + 1, resolver);
    return CycleClass(ambient, dim, std::move(coeffs));
}

/// Prints sum coeffs[i]*names[i], skipping zeros. Non-integral coefficients
/// are written with an explicit '*'.
inline std::string format_linear_form(const std::vector<Rational>& coeffs, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const auto& c = coeffs[i];
        if (c == 0) continue;
        const Rational magnitude = c < 0 ? Rational(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (magnitude != 1) out += to_string(magnitude) + (is_integral(magnitude) ? "" : "*");
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

inline std::string format_class(const CycleClass& c, int first_index = 1) {
    std::vector<std::string> names{"H"};
    for (int i = 0; i < c.r(); ++i) names.push_back("E" + std::to_string(i + first_index));
    return format_linear_form(c.coeffs(), names);
}

/// "(a; b_1, ..., b_r)"
inline std::string format_form(const PointMultiplicityForm& form) {
    std::string out = "(" + to_string(form.degree) + ";";
    for (std::size_t i = 0; i < form.multiplicities.size(); ++i)
        out += (i == 0 ? " " : ", ") + to_string(form.multiplicities[i]);
    return out + ")";
}

/// Parses "n=4,r=7,dim=2,config=very-general". Keys may appear in any order;
/// config defaults to very-general and dim to n-1.
struct AmbientSpec {
    Ambient ambient;
    int dim;
};

inline AmbientSpec parse_ambient(std::string_view text) {
    std::optional<int> n, r, dim;
    ConfigTag tag = config::VeryGeneral{};
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw Error(ErrorKind::Parse, "expected key=value in '" + std::string(item) + "'");
        const auto key = item.substr(0, eq);
        const std::string value(item.substr(eq + 1));
        auto as_int = [&]() {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(value, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != value.size()) throw Error(ErrorKind::Parse, "bad integer '" + value + "'");
            return v;
        };
        if (key == "n") n = as_int();
        else if (key == "r") r = as_int();
        else if (key == "dim" || key == "k") dim = as_int();
        else if (key == "config") tag = parse_config(value);
        else throw Error(ErrorKind::Parse, "unknown ambient key '" + std::string(key) + "'");
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (!n || !r) throw Error(ErrorKind::Parse, "ambient needs n and r");
    Ambient amb(*n, *r, tag);
    return {amb, dim.value_or(*n - 1)};
}

}  // namespace blowup
