#pragma once

#include <cstddef>
#include <string>

#include "raag/word.hpp"

namespace raag {

// Coset base<U> of a standard subgroup; a convex set of vertices of X(Γ).
// The base is always the unique element of the coset nearest the identity.
class StandardCoset {
public:
    StandardCoset(const GroupElement& any_member, VertexSet generators);

    const GroupElement& base() const { return base_; }
    VertexSet generators() const { return generators_; }
    const GraphPtr& graph_ptr() const { return base_.graph_ptr(); }

    bool contains(const GroupElement& x) const;

    // Left translate g * C.
    StandardCoset translated(const GroupElement& g) const;

    bool operator==(const StandardCoset& o) const {
        return generators_ == o.generators_ && base_ == o.base_;
    }

private:
    GroupElement base_;
    VertexSet generators_;
};

// Nearest point of A to x.
GroupElement gate_point(const GroupElement& x, const StandardCoset& A);

// Number of hyperplanes separating A and B; 0 iff they intersect.
std::size_t coset_distance(const StandardCoset& A, const StandardCoset& B);

// rho_A^B, rho_B^A and the translation g with psi(a) = a g on rho_A^B.
struct GatePair {
    GroupElement translation;
    VertexSet common;
    StandardCoset rhoA;
    StandardCoset rhoB;
};

GatePair gate_pair(const StandardCoset& A, const StandardCoset& B);

// x * translation; DomainError unless x lies in rhoA.
GroupElement psi_apply(const GatePair& pair, const GroupElement& x);

struct GridReport {
    GroupElement b0;
    GroupElement b1;
    std::size_t distance_a = 0;
    std::size_t distance_b = 0;
    Word labels_a;
    Word labels_b;
    bool ok = false;
};

// Checks the grid between a0, a1 in rho_A^B and their gates b0, b1 on B:
// equal distances and equal label words along canonical geodesics.
GridReport grid_check(const GroupElement& a0, const GroupElement& a1,
                      const StandardCoset& A, const StandardCoset& B);

} // namespace raag
