#pragma once

// Numerical cycle classes on the blow-up of P^n at r points.
//
// A class of dimension k is stored as raw coefficients (c_0, c_1, ..., c_r)
// over the basis (H_k, E_{1,k}, ..., E_{r,k}). The point-multiplicity view
// (a; b_1, ..., b_r) of the class a*H_k - sum b_i*E_{i,k} has a = c_0 and
// b_i = -c_i. Intersection rules:
//
//   H^n = 1,  (-1)^{n-1} E_i^n = 1,  H.E_i = 0,  E_i.E_j = 0 (i != j),
//   H.H_k = H_{k-1},  E_i.E_{i,k} = -E_{i,k-1}.
//
// The actual point set is never represented; its position is tracked only
// through ConfigTag.

#include "blowup/errors.hpp"
#include "blowup/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace blowup {

namespace config {
struct VeryGeneral {
    bool operator==(const VeryGeneral&) const = default;
};
struct LinearlyGeneral {
    bool operator==(const LinearlyGeneral&) const = default;
};
struct Collinear {
    bool operator==(const Collinear&) const = default;
};
/// All points lie in a linear subspace P^m and span it.
struct SpanDim {
    int m = 1;
    bool operator==(const SpanDim&) const = default;
};
/// Nine general points in a plane together with s-1 linearly general points
/// whose span misses that plane (so r = s + 8).
struct PlanarNinePlus {
    int s = 1;
    bool operator==(const PlanarNinePlus&) const = default;
};
struct Custom {
    std::string label;
    bool operator==(const Custom&) const = default;
};
}  // namespace config

using ConfigTag = std::variant<config::VeryGeneral, config::LinearlyGeneral, config::Collinear,
                               config::SpanDim, config::PlanarNinePlus, config::Custom>;

inline std::string to_string(const ConfigTag& tag) {
    struct Visitor {
        std::string operator()(const config::VeryGeneral&) const { return "very-general"; }
        std::string operator()(const config::LinearlyGeneral&) const { return "linearly-general"; }
        std::string operator()(const config::Collinear&) const { return "collinear"; }
        std::string operator()(const config::SpanDim& t) const { return "span-dim:" + std::to_string(t.m); }
        std::string operator()(const config::PlanarNinePlus& t) const {
            return "planar-nine-plus:" + std::to_string(t.s);
        }
        std::string operator()(const config::Custom& t) const { return "custom:" + t.label; }
    };
    return std::visit(Visitor{}, tag);
}

inline ConfigTag parse_config(std::string_view text) {
    auto parameter = [&](std::string_view prefix) -> int {
        const std::string rest(text.substr(prefix.size()));
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(rest, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != rest.size())
            throw Error(ErrorKind::Parse, "bad configuration parameter in '" + std::string(text) + "'");
        return value;
    };
    if (text == "very-general") return config::VeryGeneral{};
    if (text == "linearly-general") return config::LinearlyGeneral{};
    if (text == "collinear") return config::Collinear{};
    if (text.starts_with("span-dim:")) return config::SpanDim{parameter("span-dim:")};
    if (text.starts_with("planar-nine-plus:")) return config::PlanarNinePlus{parameter("planar-nine-plus:")};
    if (text.starts_with("custom:")) return config::Custom{std::string(text.substr(7))};
    throw Error(ErrorKind::Parse, "unknown configuration '" + std::string(text) + "'");
}

/// Blow-up model descriptor: P^n blown up at r points in configuration `config`.
class Ambient {
public:
    Ambient(int n, int r, ConfigTag config = config::VeryGeneral{}) : n_(n), r_(r), config_(std::move(config)) {
        if (const auto* span = std::get_if<config::SpanDim>(&config_); span && span->m == 1) config_ = config::Collinear{};
        if (n_ < 2) throw Error(ErrorKind::InvalidClass, "ambient dimension must be at least 2");
        if (r_ < 0) throw Error(ErrorKind::InvalidClass, "number of points must be nonnegative");
        if (const auto* span = std::get_if<config::SpanDim>(&config_)) {
            if (span->m < 1 || span->m > n_)
                throw Error(ErrorKind::InvalidClass, "span dimension must lie in [1, n]");
        }
        if (const auto* planar = std::get_if<config::PlanarNinePlus>(&config_)) {
            if (planar->s < 1) throw Error(ErrorKind::InvalidClass, "planar-nine-plus needs s >= 1");
            if (r_ != planar->s + 8)
                throw Error(ErrorKind::InvalidClass, "planar-nine-plus:s requires r = s + 8");
            if (n_ < planar->s + 1)
                throw Error(ErrorKind::InvalidClass, "planar-nine-plus:s requires n >= s + 1");
        }
    }

    int n() const noexcept { return n_; }
    int r() const noexcept { return r_; }
    const ConfigTag& config() const noexcept { return config_; }

    bool operator==(const Ambient&) const = default;

private:
    int n_;
    int r_;
    ConfigTag config_;
};

inline std::string to_string(const Ambient& amb) {
    return "n=" + std::to_string(amb.n()) + ",r=" + std::to_string(amb.r()) + ",config=" + to_string(amb.config());
}

/// Degree a and multiplicities b_i of the class a*H_k - sum b_i*E_{i,k}.
struct PointMultiplicityForm {
    Rational degree;
    std::vector<Rational> multiplicities;

    bool operator==(const PointMultiplicityForm&) const = default;
};

class CycleClass {
public:
    /// Raw coefficients (c_0, ..., c_r) over (H_k, E_{1,k}, ..., E_{r,k}).
    CycleClass(Ambient ambient, int dim, std::vector<Rational> coeffs)
        : ambient_(std::move(ambient)), dim_(dim), coeffs_(std::move(coeffs)) {
        if (dim_ < 0 || dim_ > ambient_.n() - 1)
            throw Error(ErrorKind::InvalidClass, "cycle dimension " + std::to_string(dim_) + " outside [0, " +
                                                     std::to_string(ambient_.n() - 1) + "]");
        if (coeffs_.size() != static_cast<std::size_t>(ambient_.r()) + 1)
            throw Error(ErrorKind::InvalidClass, "expected " + std::to_string(ambient_.r() + 1) +
                                                     " coefficients, got " + std::to_string(coeffs_.size()));
    }

    static CycleClass from_form(Ambient ambient, int dim, const PointMultiplicityForm& form) {
        std::vector<Rational> coeffs;
        coeffs.reserve(form.multiplicities.size() + 1);
        coeffs.push_back(form.degree);
        for (const auto& b : form.multiplicities) coeffs.push_back(-b);
        return CycleClass(std::move(ambient), dim, std::move(coeffs));
    }

    static CycleClass zero(Ambient ambient, int dim) {
        const auto size = static_cast<std::size_t>(ambient.r()) + 1;
        return CycleClass(std::move(ambient), dim, std::vector<Rational>(size));
    }

    /// H_k
    static CycleClass hyperplane(Ambient ambient, int dim) {
        auto c = zero(std::move(ambient), dim);
        c.coeffs_[0] = 1;
        return c;
    }

    /// E_{i,k}, i is 1-based.
    static CycleClass exceptional(Ambient ambient, int dim, int i) {
        if (i < 1 || i > ambient.r())
            throw Error(ErrorKind::InvalidClass, "exceptional index " + std::to_string(i) + " out of range");
        auto c = zero(std::move(ambient), dim);
        c.coeffs_[static_cast<std::size_t>(i)] = 1;
        return c;
    }

    const Ambient& ambient() const noexcept { return ambient_; }
    int dim() const noexcept { return dim_; }
    int n() const noexcept { return ambient_.n(); }
    int r() const noexcept { return ambient_.r(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_divisor() const noexcept { return dim_ == ambient_.n() - 1; }

    const Rational& degree() const { return coeffs_[0]; }
    /// b_i = -c_i, 1-based.
    Rational multiplicity(int i) const { return -coeffs_.at(static_cast<std::size_t>(i)); }

    PointMultiplicityForm form() const {
        PointMultiplicityForm f{coeffs_[0], {}};
        f.multiplicities.reserve(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) f.multiplicities.push_back(-coeffs_[i]);
        return f;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
    }

    bool is_integral() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return blowup::is_integral(c); });
    }

    /// Same coefficients viewed in another ambient with the same number of points.
    CycleClass with_ambient(Ambient other, int dim) const { return CycleClass(std::move(other), dim, coeffs_); }

    bool operator==(const CycleClass&) const = default;

    friend CycleClass operator+(const CycleClass& x, const CycleClass& y) {
        x.require_compatible(y);
        auto out = x;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += y.coeffs_[i];
        return out;
    }

    friend CycleClass operator-(const CycleClass& x, const CycleClass& y) {
        x.require_compatible(y);
        auto out = x;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= y.coeffs_[i];
        return out;
    }

    friend CycleClass operator*(const Rational& s, const CycleClass& x) {
        auto out = x;
        for (auto& c : out.coeffs_) c *= s;
        return out;
    }

    friend CycleClass operator-(const CycleClass& x) { return Rational(-1) * x; }

private:
    void require_compatible(const CycleClass& other) const {
        if (!(ambient_ == other.ambient_)) throw Error(ErrorKind::AmbientMismatch, "classes live on different blow-ups");
        if (dim_ != other.dim_) throw Error(ErrorKind::InvalidDims, "classes have different dimensions");
    }

    Ambient ambient_;
    int dim_;
    std::vector<Rational> coeffs_;
};

inline CycleClass make_class(const Ambient& ambient, int dim, std::vector<Rational> coeffs) {
    return CycleClass(ambient, dim, std::move(coeffs));
}

inline CycleClass make_class(const Ambient& ambient, int dim, const PointMultiplicityForm& form) {
    return CycleClass::from_form(ambient, dim, form);
}

/// Shorthand for (a; b, b, ..., b) with `count` equal multiplicities.
inline PointMultiplicityForm uniform_form(const Rational& a, const Rational& b, int count) {
    return {a, std::vector<Rational>(static_cast<std::size_t>(count), b)};
}

namespace detail {
inline void require_same_ambient(const CycleClass& x, const CycleClass& y) {
    if (!(x.ambient() == y.ambient()))
        throw Error(ErrorKind::AmbientMismatch, to_string(x.ambient()) + " vs " + to_string(y.ambient()));
}

inline Rational power(const Rational& x, int e) {
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= x;
    return out;
}
}  // namespace detail

/// D . Y for a divisor D and a k-cycle Y (k >= 1). In point-multiplicity form
/// (c; d_i) . (a; b_i) = (c*a; d_i*b_i).
inline CycleClass intersect_divisor(const CycleClass& divisor, const CycleClass& cycle) {
    detail::require_same_ambient(divisor, cycle);
    if (!divisor.is_divisor()) throw Error(ErrorKind::InvalidDims, "first argument must be a divisor class");
    if (cycle.dim() < 1) throw Error(ErrorKind::InvalidDims, "cannot intersect a divisor with a 0-cycle");
    const auto& d = divisor.coeffs();
    const auto& y = cycle.coeffs();
    std::vector<Rational> out(d.size());
    out[0] = d[0] * y[0];
    for (std::size_t i = 1; i < d.size(); ++i) out[i] = -(d[i] * y[i]);
    return CycleClass(cycle.ambient(), cycle.dim() - 1, std::move(out));
}

/// Degree of a 0-cycle: H_0 and every E_{i,0} are single points.
inline Rational degree_of_points(const CycleClass& zero_cycle) {
    if (zero_cycle.dim() != 0) throw Error(ErrorKind::InvalidDims, "expected a 0-cycle");
    Rational total = 0;
    for (const auto& c : zero_cycle.coeffs()) total += c;
    return total;
}

/// D . B = c*a - sum d_i*b_i for a divisor D = (c; d) and a curve B = (a; b).
inline Rational degree_pairing(const CycleClass& divisor, const CycleClass& curve) {
    detail::require_same_ambient(divisor, curve);
    if (!divisor.is_divisor() || curve.dim() != 1)
        throw Error(ErrorKind::InvalidDims, "degree pairing needs a divisor and a curve");
    const auto& d = divisor.coeffs();
    const auto& b = curve.coeffs();
    Rational total = d[0] * b[0];
    for (std::size_t i = 1; i < d.size(); ++i) total -= d[i] * b[i];
    return total;
}

/// D^n = a^n - sum b_i^n.
inline Rational top_self_intersection(const CycleClass& divisor) {
    if (!divisor.is_divisor()) throw Error(ErrorKind::InvalidDims, "top self-intersection needs a divisor");
    const int n = divisor.n();
    const auto& c = divisor.coeffs();
    Rational exceptional = 0;
    for (std::size_t i = 1; i < c.size(); ++i) exceptional += detail::power(c[i], n);
    Rational total = detail::power(c[0], n);
    return n % 2 == 1 ? total + exceptional : total - exceptional;
}

/// The Cremona-invariant form on N^1: (H,H) = n-1, (E_i,E_i) = -1, all mixed terms 0.
inline Rational mukai_pairing(const CycleClass& x, const CycleClass& y) {
    detail::require_same_ambient(x, y);
    if (!x.is_divisor() || !y.is_divisor()) throw Error(ErrorKind::InvalidDims, "Mukai pairing is on divisor classes");
    const auto& p = x.coeffs();
    const auto& q = y.coeffs();
    Rational total = Rational(x.n() - 1) * p[0] * q[0];
    for (std::size_t i = 1; i < p.size(); ++i) total -= p[i] * q[i];
    return total;
}

/// Lower bound max(0, b_i + b_j - a) on the multiplicity of Y along the line
/// through p_i and p_j. Indices are 1-based.
inline Rational line_multiplicity_bound(const CycleClass& cycle, int i, int j) {
    if (i == j) throw Error(ErrorKind::InvalidIndexPair, "indices must differ");
    if (i < 1 || j < 1 || i > cycle.r() || j > cycle.r())
        throw Error(ErrorKind::InvalidIndexPair, "index out of range 1.." + std::to_string(cycle.r()));
    const Rational excess = cycle.multiplicity(i) + cycle.multiplicity(j) - cycle.degree();
    return excess > 0 ? excess : Rational(0);
}

}  // namespace blowup
