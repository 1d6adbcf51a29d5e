#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raag/roller.hpp"
#include "raag/word.hpp"

namespace raag {

// Exact value with denominator at most 2, stored doubled.
struct HalfInteger {
    std::int64_t twice = 0;

    std::string to_string() const;
    double value() const { return static_cast<double>(twice) / 2.0; }
    auto operator<=>(const HalfInteger&) const = default;
};

using GromovProduct = HalfInteger;

// (x, y)_base = (d(x, base) + d(y, base) - d(x, y)) / 2.
GromovProduct gromov_product(const GroupElement& x, const GroupElement& y, const GroupElement& base);

// Smallest delta for which every 4-tuple (x, y, z, w) of ball(center,
// radius) satisfies (x,z)_w >= min{(x,y)_w, (y,z)_w} - delta.  DomainError
// when radius exceeds cap.
HalfInteger delta_estimate(const GroupElement& center, std::size_t radius, std::size_t cap);
// Serial reference for the OpenMP kernel above.
HalfInteger delta_estimate_serial(const GroupElement& center, std::size_t radius, std::size_t cap);

struct BoundaryVerdict {
    enum class Kind { Equal, Distinct, Indeterminate };
    Kind kind = Kind::Indeterminate;
    bool exact = false;                   // tree case
    HyperplaneList separating;            // certificate for Equal outside the tree case
    std::optional<HalfInteger> bound;     // stabilised product for Distinct outside the tree case
};

BoundaryVerdict gromov_boundary_equal(const PeriodicRay& r1, const PeriodicRay& r2, std::size_t horizon);

struct FiberReport {
    std::vector<std::vector<std::size_t>> classes;  // ray indices
    std::vector<std::size_t> isolated;             // rays left alone by an indeterminate verdict
    std::size_t max_class = 0;
    std::size_t bound = 0;                         // D - 2 + 1 with D = 2|V|
    bool violation = false;
};

FiberReport fiber_sample(const std::vector<PeriodicRay>& rays, std::size_t horizon);

} // namespace raag
