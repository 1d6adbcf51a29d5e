#include "raag/graph.hpp"

#include <algorithm>
#include <sstream>

#include "raag/cube_complex.hpp"
#include "raag/errors.hpp"

namespace raag {

std::vector<VertexId> VertexSet::members() const {
    std::vector<VertexId> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
        out.push_back(static_cast<VertexId>(std::countr_zero(b)));
    }
    return out;
}

DefiningGraph::DefiningGraph(std::vector<std::string> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)), link_(names_.size()) {
    if (names_.size() > kMaxVertices) {
        throw InputError("defining graph has more than 64 vertices");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw InputError("empty vertex name");
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) throw InputError("duplicate vertex name: " + names_[i]);
        }
    }
    for (const auto& [from, to] : edges) {
        auto find = [&](const std::string& n) {
            auto it = std::find(names_.begin(), names_.end(), n);
            if (it == names_.end()) throw InputError("edge endpoint is not a vertex: " + n);
            return static_cast<VertexId>(it - names_.begin());
        };
        VertexId u = find(from);
        VertexId v = find(to);
        if (u == v) throw InputError("loop edge at vertex " + from);
        if (link_[u].contains(v)) throw InputError("duplicate edge " + from + "-" + to);
        link_[u].insert(v);
        link_[v].insert(u);
    }
}

VertexId DefiningGraph::index(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw DomainError("unknown vertex: " + std::string(name));
    return static_cast<VertexId>(it - names_.begin());
}

bool DefiningGraph::has_vertex(std::string_view name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

VertexSet DefiningGraph::all() const {
    if (names_.size() == 64) return VertexSet(~std::uint64_t{0});
    return VertexSet((std::uint64_t{1} << names_.size()) - 1);
}

std::vector<std::pair<VertexId, VertexId>> DefiningGraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < size(); ++u) {
        for (VertexId v : link_[u].members()) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::size_t DefiningGraph::edge_count() const {
    std::size_t twice = 0;
    for (auto l : link_) twice += l.size();
    return twice / 2;
}

namespace {

void bron_kerbosch(const DefiningGraph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot with the most neighbours in p.
    VertexId pivot = 0;
    std::size_t best = 0;
    bool have = false;
    for (VertexId u : (p | x).members()) {
        std::size_t n = (p & g.link(u)).size();
        if (!have || n > best) {
            pivot = u;
            best = n;
            have = true;
        }
    }
    for (VertexId v : p.minus(g.link(pivot)).members()) {
        VertexSet rv = r;
        rv.insert(v);
        bron_kerbosch(g, rv, p & g.link(v), x & g.link(v), out);
        p.erase(v);
        x.insert(v);
    }
}

} // namespace

std::vector<VertexSet> DefiningGraph::maximal_cliques() const {
    std::vector<VertexSet> out;
    if (names_.empty()) return out;
    bron_kerbosch(*this, VertexSet{}, all(), VertexSet{}, out);
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        return a.members() < b.members();
    });
    return out;
}

CubeComplex DefiningGraph::salvetti_complex() const {
    std::vector<ComplexEdge> loops;
    loops.reserve(size());
    for (const auto& n : names_) loops.push_back({n, 0, 0});
    std::vector<Square> squares;
    for (auto [u, v] : edges()) {
        squares.push_back(Square{EdgeStep{u, 1}, EdgeStep{v, 1}, EdgeStep{u, -1}, EdgeStep{v, -1}});
    }
    return CubeComplex({"o"}, std::move(loops), std::move(squares));
}

std::vector<std::string> DefiningGraph::names_of(VertexSet s) const {
    std::vector<std::string> out;
    for (VertexId v : s.members()) out.push_back(names_.at(v));
    return out;
}

VertexSet DefiningGraph::set_of(const std::vector<std::string>& names) const {
    VertexSet s;
    for (const auto& n : names) s.insert(index(n));
    return s;
}

std::string DefiningGraph::canonical_text() const {
    std::ostringstream os;
    os << "vertices:";
    for (const auto& n : names_) os << ' ' << n;
    os << "\nedges:";
    for (auto [u, v] : edges()) os << ' ' << names_[u] << '-' << names_[v];
    os << '\n';
    return os.str();
}

GraphPtr make_graph(std::vector<std::string> vertices,
                    const std::vector<std::pair<std::string, std::string>>& edges) {
    return std::make_shared<const DefiningGraph>(std::move(vertices), edges);
}

namespace fixtures {

GraphPtr free2() {
    static const GraphPtr g = make_graph({"a", "b"}, {});
    return g;
}
GraphPtr z2() {
    static const GraphPtr g = make_graph({"a", "b"}, {{"a", "b"}});
    return g;
}
GraphPtr path3() {
    static const GraphPtr g = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    return g;
}
GraphPtr triangle() {
    static const GraphPtr g = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    return g;
}

} // namespace fixtures

} // namespace raag
