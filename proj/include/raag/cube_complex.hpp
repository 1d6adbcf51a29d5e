#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace raag {

// A directed use of an edge: dir = +1 follows src -> dst, -1 the reverse.
struct EdgeStep {
    std::size_t edge = 0;
    int dir = 1;
    bool operator==(const EdgeStep&) const = default;
};

struct ComplexEdge {
    std::string id;
    std::size_t src = 0;
    std::size_t dst = 0;
};

// One end of an edge at a vertex; the vertices of a vertex link.
struct HalfEdge {
    std::size_t edge = 0;
    int end = 0;  // 0 = src end, 1 = dst end
    auto operator<=>(const HalfEdge&) const = default;
};

// Corner `index` of a square sits between side index (arriving) and side
// index+1 (leaving).
struct Corner {
    std::size_t square = 0;
    int index = 0;
    std::size_t vertex = 0;
    HalfEdge arriving;
    HalfEdge leaving;
};

using Square = std::array<EdgeStep, 4>;

// Finite cube complex carried by its 2-skeleton.  Loops and multiple
// edges are allowed; higher cubes are implied by flag completion.
class CubeComplex {
public:
    CubeComplex() = default;
    // Throws InputError when an endpoint is out of range, an edge id is
    // duplicated, or a square boundary does not close up.
    CubeComplex(std::vector<std::string> vertices, std::vector<ComplexEdge> edges,
                std::vector<Square> squares);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<ComplexEdge>& edges() const { return edges_; }
    const std::vector<Square>& squares() const { return squares_; }

    std::size_t edge_index(const std::string& id) const;  // InputError if unknown

    std::size_t start_of(EdgeStep s) const { return s.dir > 0 ? edges_[s.edge].src : edges_[s.edge].dst; }
    std::size_t end_of(EdgeStep s) const { return s.dir > 0 ? edges_[s.edge].dst : edges_[s.edge].src; }
    std::size_t vertex_of(HalfEdge h) const { return h.end == 0 ? edges_[h.edge].src : edges_[h.edge].dst; }

    // Link vertices at v, sorted.
    std::vector<HalfEdge> half_edges_at(std::size_t v) const;
    // All square corners, four per square, in square order.
    std::vector<Corner> corners() const;

private:
    std::vector<std::string> vertices_;
    std::vector<ComplexEdge> edges_;
    std::vector<Square> squares_;
};

} // namespace raag
