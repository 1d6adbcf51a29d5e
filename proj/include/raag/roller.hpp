#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "raag/cube.hpp"
#include "raag/word.hpp"

namespace raag {

// Eventually periodic geodesic ray from the identity: the canonical
// geodesic to `base`, then `period` repeated.  Stands in for a point of the
// Roller boundary.
class PeriodicRay {
public:
    PeriodicRay(GroupElement base, GroupElement period);

    const GroupElement& base() const { return base_; }
    const GroupElement& period() const { return period_; }
    const GraphPtr& graph_ptr() const { return base_.graph_ptr(); }

    // Letter j (1-based) of the path from the identity.
    Letter step(std::size_t j) const;

    // Vertices 0..depth of the path from the identity; DomainError naming the
    // first index where the path stops being geodesic.
    std::vector<GroupElement> path(std::size_t depth) const;

    bool operator==(const PeriodicRay& o) const { return base_ == o.base_ && period_ == o.period_; }

private:
    GroupElement base_;
    GroupElement period_;
};

// k-th vertex after base: base, base w_1, ..., base w, base w w_1, ...
GroupElement ray_vertex(const PeriodicRay& ray, std::size_t k);

// Labels with infinitely many separating hyperplanes between 1 and the ray.
VertexSet infinite_label_classes(const PeriodicRay& ray);

// Hyperplanes crossed by the first `depth` edges of the ray, in order.
HyperplaneList ray_hyperplanes(const PeriodicRay& ray, std::size_t depth);

struct SpectrumEntry {
    Hyperplane hyperplane;
    std::size_t distance;
};

struct LabelSpectrum {
    VertexId label = 0;
    std::vector<SpectrumEntry> entries;  // strictly increasing distance from x
    bool complete = false;               // the whole (finite) class is listed
};

// First k elements of H_label(x, ray) ordered by distance from x.  Throws
// Indeterminate when `horizon` edges of the ray cannot certify them.
LabelSpectrum label_spectrum(const PeriodicRay& ray, const GroupElement& x, VertexId label,
                             std::size_t k, std::size_t horizon);

// Same relative order on common hyperplanes of the spectra seen from x and
// from y.
bool order_consistency_check(const PeriodicRay& ray, const GroupElement& x, const GroupElement& y,
                             VertexId label, std::size_t k, std::size_t horizon);

struct SeparatorVerdict {
    bool exact = false;
    HyperplaneList hyperplanes;  // the full set when exact, certified members otherwise
    std::size_t at_least() const { return hyperplanes.size(); }
};

// Hyperplanes separating the two boundary points.
SeparatorVerdict separating_hyperplanes(const PeriodicRay& r1, const PeriodicRay& r2, std::size_t horizon);

enum class Adjacency { Adjacent, NotAdjacent, Indeterminate };

Adjacency roller_adjacent(const PeriodicRay& r1, const PeriodicRay& r2, std::size_t horizon);

// True iff the convex coset Q contains an edge dual to h.
bool hyperplane_meets_coset(const Hyperplane& h, const StandardCoset& Q);

} // namespace raag
