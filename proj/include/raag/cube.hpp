#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "raag/gates.hpp"
#include "raag/word.hpp"

namespace raag {

// Hyperplane of X(Γ): its label and the nearest-to-identity element of the
// carrier-side coset base<link(label)> (initial vertices of the positively
// labelled dual edges).
class Hyperplane {
public:
    Hyperplane(VertexId label, const GroupElement& carrier_point);

    VertexId label() const { return label_; }
    const GroupElement& base() const { return base_; }
    const GraphPtr& graph_ptr() const { return base_.graph_ptr(); }

    bool operator==(const Hyperplane& o) const { return label_ == o.label_ && base_ == o.base_; }
    std::strong_ordering operator<=>(const Hyperplane& o) const {
        if (auto c = label_ <=> o.label_; c != 0) return c;
        return base_ <=> o.base_;
    }
    std::size_t hash() const { return base_.hash() * 31 + label_; }

private:
    VertexId label_;
    GroupElement base_;
};

struct HyperplaneHash {
    std::size_t operator()(const Hyperplane& h) const { return h.hash(); }
};

using HyperplaneList = std::vector<Hyperplane>;

enum class Side { Minus, Plus };

// Hyperplane dual to the edge from x labelled by `letter`.
Hyperplane hyperplane_of_edge(const GroupElement& x, Letter letter);

// Hyperplanes crossed by the canonical geodesic a -> b, in crossing order.
HyperplaneList dual_hyperplanes(const GroupElement& a, const GroupElement& b);

// The base vertex is on the minus side.
Side side(const Hyperplane& h, const GroupElement& x);
bool separates(const Hyperplane& h, const GroupElement& a, const GroupElement& b);

std::size_t distance(const GroupElement& a, const GroupElement& b);

// Number of hyperplanes separating x from h.
std::size_t distance_to_hyperplane(const GroupElement& x, const Hyperplane& h);

// base(h) <link(label h)>; the carrier side containing base(h).
StandardCoset carrier_coset(const Hyperplane& h);

GroupElement median(const GroupElement& a, const GroupElement& b, const GroupElement& c);

bool hyperplanes_cross(const Hyperplane& h, const Hyperplane& k);
bool hyperplanes_contact(const Hyperplane& h, const Hyperplane& k);

struct ContactGraph {
    HyperplaneList vertices;                              // sorted
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
};

// Hyperplanes dual to positively labelled edges (x, x v) with x within
// radius-1 of center; edges are contact pairs.  DomainError if radius >
// cap.
ContactGraph contact_graph_ball(const GroupElement& center, std::size_t radius, std::size_t cap);
// Serial reference for the OpenMP kernel above.
ContactGraph contact_graph_ball_serial(const GroupElement& center, std::size_t radius, std::size_t cap);

} // namespace raag
