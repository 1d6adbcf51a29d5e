#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/cube_complex.hpp"
#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

// Class of edges under "opposite sides of some square".
struct ImmersedHyperplane {
    std::size_t id = 0;
    std::vector<std::size_t> edges;  // sorted edge indices
    // Per member edge: +1 if the edge's own direction agrees with the
    // transverse orientation, -1 if not.  Empty when one-sided.
    std::vector<int> orientation;
    bool one_sided = false;
};

// Classes ordered by their smallest edge index.
std::vector<ImmersedHyperplane> immersed_hyperplanes(const CubeComplex& X);

struct NpcReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::size_t checked_dimension = 0;
    bool unchecked_beyond_cap = false;  // a link clique larger than the cap exists
};

// Links must be simplicial; every link triangle must close up to a 3-cube
// when the cap allows it.
NpcReport check_npc(const CubeComplex& X, std::size_t dimension_cap);

struct SpecialReport {
    NpcReport npc;
    std::vector<std::size_t> self_cross;       // hyperplane ids
    std::vector<std::size_t> one_sided;
    std::vector<std::size_t> self_osculate;
    std::vector<std::pair<std::size_t, std::size_t>> interosculate;
    bool special = false;
};

SpecialReport check_special(const CubeComplex& X, std::size_t dimension_cap = 3);

// One vertex per hyperplane, named by the id of its first edge; edges join
// crossing hyperplanes.  DomainError unless X is special.
GraphPtr crossing_graph(const CubeComplex& X, std::size_t dimension_cap = 3);

struct CombinatorialMap {
    CubeComplex source;
    CubeComplex target;
    std::vector<std::size_t> vertex_map;
    std::vector<EdgeStep> edge_map;  // image of each source edge, traversed forward
    GraphPtr target_graph;           // set when the target is a Salvetti complex
};

CombinatorialMap salvetti_local_isometry(const CubeComplex& X, std::size_t dimension_cap = 3);

// Incidence, squares to squares, and at every vertex a link map that is
// injective and preserves and reflects adjacency.
bool verify_local_isometry(const CombinatorialMap& m);

struct Pi1Presentation {
    std::size_t basepoint = 0;
    std::vector<std::size_t> tree_edges;
    std::vector<std::size_t> generators;                   // non-tree edges
    std::vector<std::vector<std::pair<std::size_t, int>>> relators;  // (generator position, sign)
};

// Breadth-first spanning tree; DomainError when X is disconnected.
Pi1Presentation pi1_presentation(const CubeComplex& X, std::size_t basepoint = 0);

// Image of a directed-edge path that starts at the basepoint.  DomainError
// on a non-consecutive path or a map without a Salvetti target.
GroupElement develop_path(const CombinatorialMap& m, const std::vector<EdgeStep>& path,
                          std::size_t basepoint = 0);

struct Pi1Embedding {
    Pi1Presentation presentation;
    std::vector<GroupElement> images;  // one per generator
};

// Loop images of the generators; every relator is checked to map to 1.
Pi1Embedding pi1_embedding(const CombinatorialMap& m, std::size_t basepoint = 0);

// Brute-force check that the developed image of the universal cover is
// convex near the basepoint.  DomainError when radius exceeds cap.
bool convexity_probe(const CombinatorialMap& m, std::size_t radius, std::size_t cap,
                     std::size_t basepoint = 0);

} // namespace raag
