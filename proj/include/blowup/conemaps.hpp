#pragma once

// The cone construction C : N_k(X^n_r) -> N_{k+1}(X^{n+1}_{r+1}) with the new
// vertex p_0 prepended at index 0,
//   C(H_k) = H_{k+1} - E_{0,k+1},   C(E_{i,k}) = E_{i,k+1},
// i.e. (a; b_1..b_r) |-> (a; a, b_1..b_r); its hyperplane-section inverse; and
// the reductions for points in special position.

#include "blowup/classgroup.hpp"

#include <numeric>
#include <optional>
#include <vector>

namespace blowup {

namespace detail {

inline ConfigTag cone_config(const ConfigTag& tag) {
    struct Visitor {
        ConfigTag operator()(const config::VeryGeneral& t) const { return t; }
        ConfigTag operator()(const config::LinearlyGeneral& t) const { return t; }
        ConfigTag operator()(const config::Collinear&) const { return config::SpanDim{2}; }
        ConfigTag operator()(const config::SpanDim& t) const { return config::SpanDim{t.m + 1}; }
        ConfigTag operator()(const config::PlanarNinePlus& t) const { return config::PlanarNinePlus{t.s + 1}; }
        ConfigTag operator()(const config::Custom& t) const { return config::Custom{"cone:" + t.label}; }
    };
    return std::visit(Visitor{}, tag);
}

inline ConfigTag section_config(const ConfigTag& tag) {
    struct Visitor {
        ConfigTag operator()(const config::VeryGeneral& t) const { return t; }
        ConfigTag operator()(const config::LinearlyGeneral& t) const { return t; }
        ConfigTag operator()(const config::Collinear&) const { return config::Custom{"section:collinear"}; }
        ConfigTag operator()(const config::SpanDim& t) const { return config::SpanDim{t.m - 1}; }
        ConfigTag operator()(const config::PlanarNinePlus& t) const {
            if (t.s >= 2) return config::PlanarNinePlus{t.s - 1};
            return config::Custom{"section:planar-nine-plus:1"};
        }
        ConfigTag operator()(const config::Custom& t) const {
            if (t.label.starts_with("cone:")) return config::Custom{t.label.substr(5)};
            return config::Custom{"section:" + t.label};
        }
    };
    return std::visit(Visitor{}, tag);
}

}  // namespace detail

/// Class of the cone over V with a new vertex, on (n+1, r+1).
inline CycleClass cone_class(const CycleClass& v) {
    const auto& c = v.coeffs();
    std::vector<Rational> out;
    out.reserve(c.size() + 1);
    out.push_back(c[0]);
    out.push_back(-c[0]);
    out.insert(out.end(), c.begin() + 1, c.end());
    Ambient target(v.n() + 1, v.r() + 1, detail::cone_config(v.ambient().config()));
    return CycleClass(std::move(target), v.dim() + 1, std::move(out));
}

/// Hyperplane section of a cone class: (a; a, b_1..b_r) |-> (a; b_1..b_r).
inline CycleClass section_class(const CycleClass& w) {
    if (w.r() < 1) throw Error(ErrorKind::NotAConeClass, "no vertex point to section away");
    if (w.dim() < 1) throw Error(ErrorKind::InvalidDims, "cannot section a 0-cycle");
    if (w.multiplicity(1) != w.degree())
        throw Error(ErrorKind::NotAConeClass, "vertex multiplicity " + to_string(w.multiplicity(1)) +
                                                  " differs from degree " + to_string(w.degree()));
    if (w.n() < 3) throw Error(ErrorKind::InvalidClass, "the section would live on P^1");
    const auto& c = w.coeffs();
    std::vector<Rational> out;
    out.reserve(c.size() - 1);
    out.push_back(c[0]);
    out.insert(out.end(), c.begin() + 2, c.end());
    Ambient target(w.n() - 1, w.r() - 1, detail::section_config(w.ambient().config()));
    return CycleClass(std::move(target), w.dim() - 1, std::move(out));
}

/// Iterated cone: `times` new vertices, each prepended in turn.
inline CycleClass iterated_cone(CycleClass v, int times) {
    for (int i = 0; i < times; ++i) v = cone_class(v);
    return v;
}

/// Reorders the points: new point i is old point perm[i-1] (1-based).
inline CycleClass permute_points(const CycleClass& y, const std::vector<int>& perm) {
    if (perm.size() != static_cast<std::size_t>(y.r())) throw Error(ErrorKind::InvalidClass, "permutation length differs from r");
    std::vector<bool> seen(perm.size() + 1, false);
    std::vector<Rational> out{y.coeffs()[0]};
    for (int p : perm) {
        if (p < 1 || p > y.r() || seen[static_cast<std::size_t>(p)])
            throw Error(ErrorKind::InvalidClass, "not a permutation of 1..r");
        seen[static_cast<std::size_t>(p)] = true;
        out.push_back(y.coeffs()[static_cast<std::size_t>(p)]);
    }
    return CycleClass(y.ambient(), y.dim(), std::move(out));
}

/// Moves point i to the front (the cone-vertex slot), keeping the others in order.
inline CycleClass move_point_to_front(const CycleClass& y, int i) {
    std::vector<int> perm{i};
    for (int j = 1; j <= y.r(); ++j)
        if (j != i) perm.push_back(j);
    return permute_points(y, perm);
}

/// Outcome of reducing a class for points spanning only a P^m.
struct SpanReduction {
    bool linearly_generated = false;
    /// The k-plane through all the points, H_k - sum E_{i,k}, when k >= m.
    std::optional<CycleClass> spanning_plane;
    /// The same coefficients on the blow-up of P^m, when k < m.
    std::optional<CycleClass> reduced;
};

inline SpanReduction span_reduction(const CycleClass& y) {
    int m = 0;
    if (std::holds_alternative<config::Collinear>(y.ambient().config())) m = 1;
    else if (const auto* span = std::get_if<config::SpanDim>(&y.ambient().config())) m = span->m;
    else throw Error(ErrorKind::InvalidQuery, "span reduction needs a span-dim or collinear configuration");

    SpanReduction out;
    if (y.dim() >= m) {
        out.linearly_generated = true;
        std::vector<Rational> plane(static_cast<std::size_t>(y.r()) + 1, Rational(-1));
        plane[0] = 1;
        out.spanning_plane = CycleClass(y.ambient(), y.dim(), std::move(plane));
        return out;
    }
    if (m < 2) throw Error(ErrorKind::InvalidQuery, "points on a line have no P^1 blow-up model here");
    out.reduced = y.with_ambient(Ambient(m, y.r(), config::SpanDim{m}), y.dim());
    return out;
}

enum class AddPointShape {
    InExceptional,     // a multiple of E_{0,k+1}
    InHyperplaneCone,  // b_0 = a: a cone with vertex p_0
    InHyperplane,      // b_0 = 0: the part lying over the hyperplane
    MixedWitness,      // 0 < b_0 < a
};

inline std::string to_string(AddPointShape s) {
    switch (s) {
        case AddPointShape::InExceptional: return "InExceptional";
        case AddPointShape::InHyperplaneCone: return "InHyperplaneCone";
        case AddPointShape::InHyperplane: return "InHyperplane";
        case AddPointShape::MixedWitness: return "MixedWitness";
    }
    return "?";
}

/// Generator certificate for Y on (n, r+1) where points 1..r lie in a
/// hyperplane and point 0 (storage slot 1) lies off it.
///
///   Y = cone_weight * C(section) + hyperplane_part,   cone_weight = b_0 / a,
///
/// with hyperplane_part = (a - b_0; 0, (1 - b_0/a) b_i). The alternative
/// split Y = C(section) + (a - b_0) E_0 is recorded in exceptional_weight.
struct AddPointSplit {
    AddPointShape shape;
    Rational cone_weight;
    PointMultiplicityForm section;  // (a; b_1..b_r)
    CycleClass cone_part;           // cone_weight * C(section), on Y's ambient
    CycleClass hyperplane_part;
    Rational exceptional_weight;
};

inline AddPointSplit addpoint_decomposition_shape(const CycleClass& y) {
    if (y.r() < 1) throw Error(ErrorKind::NotEffectiveShape, "no point off the hyperplane");
    const Rational a = y.degree();
    const Rational b0 = y.multiplicity(1);
    const auto zero = CycleClass::zero(y.ambient(), y.dim());

    PointMultiplicityForm section{a, {}};
    for (int i = 2; i <= y.r(); ++i) section.multiplicities.push_back(y.multiplicity(i));

    bool others_zero = a == 0;
    for (int i = 2; i <= y.r() && others_zero; ++i) others_zero = y.multiplicity(i) == 0;
    if (others_zero && b0 < 0) return {AddPointShape::InExceptional, 0, section, zero, zero, -b0};

    if (b0 < 0 || b0 > a)
        throw Error(ErrorKind::NotEffectiveShape, "need 0 <= b_0 <= a, got b_0 = " + to_string(b0) + ", a = " + to_string(a));

    if (b0 == a) return {AddPointShape::InHyperplaneCone, 1, section, y, zero, 0};
    if (b0 == 0) return {AddPointShape::InHyperplane, 0, section, zero, y, a};

    const Rational weight = b0 / a;
    std::vector<Rational> cone_coeffs{weight * a, -(weight * a)};
    std::vector<Rational> rest{a - b0, 0};
    for (const auto& b : section.multiplicities) {
        cone_coeffs.push_back(-(weight * b));
        rest.push_back(-((1 - weight) * b));
    }
    return {AddPointShape::MixedWitness, weight, section, CycleClass(y.ambient(), y.dim(), std::move(cone_coeffs)),
            CycleClass(y.ambient(), y.dim(), std::move(rest)), a - b0};
}

}  // namespace blowup
