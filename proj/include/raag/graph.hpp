#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

class CubeComplex;

using VertexId = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 64;

// Subset of the vertices of a defining graph, stored as a bitmask over
// vertex indices.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(VertexId v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

    constexpr auto operator<=>(const VertexSet&) const = default;

    // Members in increasing index order.
    std::vector<VertexId> members() const;

private:
    std::uint64_t bits_ = 0;
};

// Finite simple graph: the commutation data of a right-angled Artin group.
// Vertex order is declaration order and is used for every canonical form.
class DefiningGraph {
public:
    DefiningGraph(std::vector<std::string> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t size() const { return names_.size(); }
    const std::string& name(VertexId v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }

    // Throws DomainError for unknown names.
    VertexId index(std::string_view name) const;
    bool has_vertex(std::string_view name) const;

    bool adjacent(VertexId u, VertexId v) const { return link_[u].contains(v); }
    VertexSet link(VertexId v) const { return link_.at(v); }
    VertexSet all() const;

    // Edges (u < v) sorted lexicographically by vertex order.
    std::vector<std::pair<VertexId, VertexId>> edges() const;
    std::size_t edge_count() const;

    std::vector<VertexSet> maximal_cliques() const;

    // Flat 2-skeleton of the Salvetti complex: one vertex, one loop per
    // generator (edge id = vertex name), one commutator square per edge.
    CubeComplex salvetti_complex() const;

    // Vertex names of a set, in vertex order.
    std::vector<std::string> names_of(VertexSet s) const;
    VertexSet set_of(const std::vector<std::string>& names) const;

    // Stable text form: vertices in order, edges sorted.
    std::string canonical_text() const;

    bool operator==(const DefiningGraph& o) const { return names_ == o.names_ && link_ == o.link_; }

private:
    std::vector<std::string> names_;
    std::vector<VertexSet> link_;
};

using GraphPtr = std::shared_ptr<const DefiningGraph>;

GraphPtr make_graph(std::vector<std::string> vertices,
                    const std::vector<std::pair<std::string, std::string>>& edges);

// Neighbours of v.  Never contains v.
inline VertexSet link(const DefiningGraph& g, VertexId v) { return g.link(v); }

namespace fixtures {
GraphPtr free2();      // a, b; no edges
GraphPtr z2();         // a - b
GraphPtr path3();      // a - b - c
GraphPtr triangle();   // a, b, c pairwise adjacent
} // namespace fixtures

} // namespace raag
