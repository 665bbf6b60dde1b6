#pragma once

// Short rational shifts of a triangulated cone with an exact certificate.
//
// A certificate is a list of exact pairings of the shift s (and the base
// point v) with primitive normals:
//   * boundary normals a of the parent cone: <a,s> is not an integer and no
//     integer lies strictly between <a,s> and <a,v>, with <a,s> on the
//     outer side of <a,v> (closed target) or the inner side (open target);
//   * wall normals a' of every cell facet: <a',s> is not an integer.
// Primitive a gives <a, Z^D> = Z, so the first condition says no lattice
// hyperplane parallel to a facet is crossed when moving from v to s, and the
// second says no shifted cell facet carries a lattice point.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "irrdec/error.hpp"
#include "irrdec/linalg.hpp"
#include "irrdec/triangulation.hpp"

namespace irrdec {

enum class ShiftDirection {
    outward,  // s + K captures the lattice points of v + K
    inward,   // s + K captures the lattice points of v + K (relative interior)
};

inline const char* to_string(ShiftDirection d) { return d == ShiftDirection::outward ? "outward" : "inward"; }

struct ShiftSpec {
    RatVector base;
    ShiftDirection direction = ShiftDirection::outward;
    RatVector s;
    IntVector interior_direction;  // w, with s = base -/+ epsilon * w
    Rational epsilon;
};

struct BoundaryCheck {
    IntVector normal;
    Rational at_base;
    Rational at_shift;
};

struct WallCheck {
    IntVector normal;
    Rational at_shift;
};

struct ShiftCertificate {
    std::vector<BoundaryCheck> boundary_checks;
    std::vector<WallCheck> wall_checks;
};

struct ShiftReport {
    bool pass = false;
    std::string violation;  // empty on pass
    ShiftCertificate certificate;
};

struct CertifiedShift {
    ShiftSpec spec;
    ShiftCertificate certificate;
};

struct ShiftOptions {
    unsigned shrink_base = 10;
    unsigned max_shrink_steps = 40;
    unsigned extra_shrink_steps = 0;
    unsigned max_perturbations = 16;
    std::uint64_t seed = 0x5eed;
};

namespace detail {

inline std::string pairing_text(const IntVector& a, const char* what, const Rational& v) {
    return "<(" + a.str(",") + ")," + what + "> = " + v.str();
}

inline bool integer_strictly_between(const Rational& lo, const Rational& hi) {
    // some integer n with lo < n < hi
    return Rational(lo.floor() + 1) < hi;
}

}  // namespace detail

inline ShiftReport verify_shift(const Triangulation& t, const ShiftSpec& spec) {
    ShiftReport report;
    const bool outward = spec.direction == ShiftDirection::outward;
    for (const auto& a : t.boundary_normals) {
        BoundaryCheck c{a, dot(a, spec.base), dot(a, spec.s)};
        if (report.violation.empty()) {
            if (c.at_shift.is_integer()) {
                report.violation = "boundary " + detail::pairing_text(a, "s", c.at_shift) + " is an integer";
            } else if (outward ? !(c.at_shift < c.at_base) : !(c.at_shift > c.at_base)) {
                report.violation = "boundary " + detail::pairing_text(a, "s", c.at_shift) + " is not " +
                                   (outward ? "below " : "above ") + detail::pairing_text(a, "v", c.at_base);
            } else if (outward ? detail::integer_strictly_between(c.at_shift, c.at_base)
                               : detail::integer_strictly_between(c.at_base, c.at_shift)) {
                report.violation = "boundary " + detail::pairing_text(a, "s", c.at_shift) +
                                   ": an integer lies strictly between it and " +
                                   detail::pairing_text(a, "v", c.at_base);
            }
        }
        report.certificate.boundary_checks.push_back(std::move(c));
    }
    for (const auto& a : t.wall_normals) {
        WallCheck c{a, dot(a, spec.s)};
        if (report.violation.empty() && c.at_shift.is_integer())
            report.violation = "wall " + detail::pairing_text(a, "s", c.at_shift) + " is an integer";
        report.certificate.wall_checks.push_back(std::move(c));
    }
    report.pass = report.violation.empty();
    return report;
}

// s = base -/+ epsilon * w with w a positive combination of all parent
// generators and epsilon = shrink_base^-j for the least j that certifies.
inline CertifiedShift choose_shift(const Triangulation& t, const RatVector& base, ShiftDirection direction,
                                   const ShiftOptions& options = {}) {
    const auto& gens = t.parent.generators;
    const std::size_t dim = t.parent.ambient_dim;
    if (base.dim() != dim) throw DimensionError("shift base dimension does not match the cone");
    std::mt19937_64 rng(options.seed);
    static constexpr unsigned small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

    std::vector<Integer> weights(gens.size(), 1);
    std::string last_violation = "no attempt made";
    for (unsigned attempt = 0; attempt <= options.max_perturbations; ++attempt) {
        if (attempt > 0)
            for (auto& c : weights) c = small_primes[rng() % std::size(small_primes)];
        IntVector w(dim);
        for (std::size_t i = 0; i < gens.size(); ++i) w += weights[i] * gens[i];

        bool degenerate = false;
        for (const auto& a : t.wall_normals) {
            if (dot(a, w) == 0 && dot(a, base).is_integer()) {
                degenerate = true;
                last_violation = "wall normal (" + a.str(",") + ") is orthogonal to the shift direction (" +
                                 w.str(",") + ")";
                break;
            }
        }
        if (degenerate) continue;

        const Rational sign = direction == ShiftDirection::outward ? Rational(-1) : Rational(1);
        std::optional<unsigned> certified_at;
        const unsigned limit = options.max_shrink_steps + options.extra_shrink_steps;
        for (unsigned step = 1; step <= limit; ++step) {
            if (!certified_at && step > options.max_shrink_steps) break;
            if (certified_at && step < *certified_at + options.extra_shrink_steps) continue;
            Rational eps(Integer(1), boost::multiprecision::pow(Integer(options.shrink_base), step));
            ShiftSpec spec{base, direction, base + (sign * eps) * to_rational(w), w, eps};
            ShiftReport report = verify_shift(t, spec);
            if (!report.pass) {
                last_violation = report.violation;
                continue;
            }
            if (!certified_at) {
                certified_at = step;
                if (options.extra_shrink_steps > 0) continue;
            }
            return {std::move(spec), std::move(report.certificate)};
        }
    }
    throw ShiftSearchError("no certified shift found: " + last_violation);
}

}  // namespace irrdec
