#include "raag/gates.hpp"

#include "raag/errors.hpp"

namespace raag {

namespace {

// Maximal left divisor of y supported in U: the gate of y onto <U>.
GroupElement project_to_subgroup(const GroupElement& y, VertexSet U) {
    auto [prefix, rest] = split_left_divisor(y.letters(), U, y.graph());
    return GroupElement(y.graph_ptr(), prefix);
}

} // namespace

StandardCoset::StandardCoset(const GroupElement& any_member, VertexSet generators)
    : base_(any_member), generators_(generators) {
    if (!generators.subset_of(any_member.graph().all())) {
        throw DomainError("coset generators are not vertices of the graph");
    }
    base_ = any_member * project_to_subgroup(any_member.inverse(), generators_);
}

bool StandardCoset::contains(const GroupElement& x) const {
    require_same_graph(base_, x);
    return (base_.inverse() * x).support().subset_of(generators_);
}

StandardCoset StandardCoset::translated(const GroupElement& g) const {
    return StandardCoset(g * base_, generators_);
}

GroupElement gate_point(const GroupElement& x, const StandardCoset& A) {
    require_same_graph(x, A.base());
    const GroupElement& a = A.base();
    return a * project_to_subgroup(a.inverse() * x, A.generators());
}

namespace {

// Alternating projections; stops at a pair (a, b) with a = gate(b, A) and
// b = gate(a, B), which realises d(A, B).
std::pair<GroupElement, GroupElement> closest_pair(const StandardCoset& A, const StandardCoset& B) {
    GroupElement a = gate_point(gate_point(A.base(), B), A);
    for (;;) {
        GroupElement b = gate_point(a, B);
        GroupElement next = gate_point(b, A);
        if (next == a) return {a, b};
        a = std::move(next);
    }
}

} // namespace

std::size_t coset_distance(const StandardCoset& A, const StandardCoset& B) {
    auto [a, b] = closest_pair(A, B);
    return (a.inverse() * b).length();
}

GatePair gate_pair(const StandardCoset& A, const StandardCoset& B) {
    require_same_graph(A.base(), B.base());
    auto [a, b] = closest_pair(A, B);
    GroupElement g = a.inverse() * b;
    const DefiningGraph& graph = g.graph();
    VertexSet common;
    for (VertexId v : (A.generators() & B.generators()).members()) {
        if (g.support().subset_of(graph.link(v))) common.insert(v);
    }
    return GatePair{g, common, StandardCoset(a, common), StandardCoset(b, common)};
}

GroupElement psi_apply(const GatePair& pair, const GroupElement& x) {
    if (!pair.rhoA.contains(x)) throw DomainError("point is outside the gate domain");
    return x * pair.translation;
}

GridReport grid_check(const GroupElement& a0, const GroupElement& a1,
                      const StandardCoset& A, const StandardCoset& B) {
    GatePair pair = gate_pair(A, B);
    if (!pair.rhoA.contains(a0) || !pair.rhoA.contains(a1)) {
        throw DomainError("grid_check needs both points in rho_A^B");
    }
    GridReport r{gate_point(a0, B), gate_point(a1, B), 0, 0, {}, {}, false};
    GroupElement pa = a0.inverse() * a1;
    GroupElement pb = r.b0.inverse() * r.b1;
    r.distance_a = pa.length();
    r.distance_b = pb.length();
    r.labels_a = pa.letters();
    r.labels_b = pb.letters();
    r.ok = r.distance_a == r.distance_b && r.labels_a == r.labels_b;
    return r;
}

} // namespace raag
