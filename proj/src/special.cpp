#include "raag/special.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "raag/errors.hpp"

namespace raag {

namespace {

// Union-find carrying the parity of sigma(x) * sigma(root).
class ParityUnionFind {
public:
    explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), bad_(n, false) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::pair<std::size_t, int> find(std::size_t x) {
        int p = 0;
        std::size_t r = x;
        while (parent_[r] != r) {
            p ^= parity_[r];
            r = parent_[r];
        }
        // compress
        std::size_t y = x;
        int py = p;
        while (parent_[y] != y) {
            std::size_t next = parent_[y];
            int pn = py ^ parity_[y];
            parent_[y] = r;
            parity_[y] = py;
            y = next;
            py = pn;
        }
        return {r, p};
    }

    // Records sigma(a) * sigma(b) = (-1)^odd.
    void unite(std::size_t a, std::size_t b, int odd) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != odd) bad_[ra] = true;
            return;
        }
        parent_[rb] = ra;
        parity_[rb] = pa ^ pb ^ odd;
        bad_[ra] = bad_[ra] || bad_[rb];
    }

    bool bad(std::size_t root) const { return bad_[root]; }

private:
    std::vector<std::size_t> parent_;
    std::vector<int> parity_;
    std::vector<bool> bad_;
};

struct Classes {
    std::vector<ImmersedHyperplane> list;
    std::vector<std::size_t> of_edge;
    std::vector<int> sigma;  // +1 for one-sided classes
};

Classes classify(const CubeComplex& X) {
    const std::size_t n = X.edges().size();
    ParityUnionFind uf(n);
    for (const Square& sq : X.squares()) {
        for (int i = 0; i < 2; ++i) {
            const EdgeStep& s = sq[i];
            const EdgeStep& t = sq[i + 2];
            // Opposite sides run in opposite directions around the boundary.
            uf.unite(s.edge, t.edge, (-s.dir * t.dir) < 0 ? 1 : 0);
        }
    }
    Classes out;
    out.of_edge.assign(n, 0);
    out.sigma.assign(n, 1);
    std::map<std::size_t, std::size_t> by_root;
    std::vector<int> root_parity(n, 0);
    for (std::size_t e = 0; e < n; ++e) {
        auto [r, p] = uf.find(e);
        auto [it, fresh] = by_root.try_emplace(r, out.list.size());
        if (fresh) {
            ImmersedHyperplane h;
            h.id = out.list.size();
            h.one_sided = uf.bad(r);
            out.list.push_back(h);
            root_parity[r] = p;  // first edge gets +1
        }
        ImmersedHyperplane& h = out.list[it->second];
        h.edges.push_back(e);
        out.of_edge[e] = h.id;
        int s = (p ^ root_parity[r]) ? -1 : 1;
        if (!h.one_sided) {
            h.orientation.push_back(s);
            out.sigma[e] = s;
        }
    }
    return out;
}

using LinkPair = std::pair<HalfEdge, HalfEdge>;

LinkPair ordered(HalfEdge a, HalfEdge b) { return a < b ? LinkPair{a, b} : LinkPair{b, a}; }

// Joined half-edge pairs at each vertex.
std::vector<std::set<LinkPair>> link_edges(const CubeComplex& X) {
    std::vector<std::set<LinkPair>> out(X.vertices().size());
    for (const Corner& c : X.corners()) out[c.vertex].insert(ordered(c.arriving, c.leaving));
    return out;
}

HalfEdge other_end(HalfEdge h) { return HalfEdge{h.edge, 1 - h.end}; }

std::size_t max_clique(const std::vector<HalfEdge>& vs, const std::set<LinkPair>& adj) {
    std::size_t best = vs.empty() ? 0 : 1;
    // Links at desk scale are tiny; plain extension search.
    std::vector<std::size_t> clique;
    auto grow = [&](auto& self, std::size_t from) -> void {
        best = std::max(best, clique.size());
        for (std::size_t i = from; i < vs.size(); ++i) {
            bool ok = true;
            for (std::size_t j : clique) ok = ok && adj.contains(ordered(vs[i], vs[j]));
            if (!ok) continue;
            clique.push_back(i);
            self(self, i + 1);
            clique.pop_back();
        }
    };
    grow(grow, 0);
    return best;
}

std::string describe(const CubeComplex& X, HalfEdge h) {
    return X.edges()[h.edge].id + (h.end == 0 ? ".src" : ".dst");
}

} // namespace

std::vector<ImmersedHyperplane> immersed_hyperplanes(const CubeComplex& X) {
    return classify(X).list;
}

NpcReport check_npc(const CubeComplex& X, std::size_t dimension_cap) {
    NpcReport rep;
    rep.checked_dimension = std::min<std::size_t>(dimension_cap, 3);
    const auto corners = X.corners();
    std::map<std::pair<std::size_t, LinkPair>, std::size_t> corner_of;
    for (std::size_t k = 0; k < corners.size(); ++k) {
        const Corner& c = corners[k];
        if (c.arriving == c.leaving) {
            rep.failures.push_back("square " + std::to_string(c.square) + " joins " +
                                   describe(X, c.arriving) + " to itself");
            continue;
        }
        auto [it, fresh] = corner_of.try_emplace({c.vertex, ordered(c.arriving, c.leaving)}, k);
        if (!fresh) {
            rep.failures.push_back("squares " + std::to_string(corners[it->second].square) + " and " +
                                   std::to_string(c.square) + " span the same corner at " +
                                   X.vertices()[c.vertex]);
        }
    }
    auto links = link_edges(X);

    // Corner of the same square at the other end of `axis`, and the
    // translate of the corner's other half-edge there.
    auto across = [&](std::size_t k, HalfEdge axis) -> HalfEdge {
        const Corner& c = corners[k];
        const std::size_t base = k - static_cast<std::size_t>(c.index);
        if (c.leaving == axis) return corners[base + static_cast<std::size_t>((c.index + 1) % 4)].leaving;
        return corners[base + static_cast<std::size_t>((c.index + 3) % 4)].arriving;
    };

    for (std::size_t v = 0; v < X.vertices().size(); ++v) {
        auto hs = X.half_edges_at(v);
        if (max_clique(hs, links[v]) > rep.checked_dimension) rep.unchecked_beyond_cap = true;
        if (rep.checked_dimension < 3) continue;
        for (std::size_t i = 0; i < hs.size(); ++i) {
            for (std::size_t j = i + 1; j < hs.size(); ++j) {
                if (!links[v].contains(ordered(hs[i], hs[j]))) continue;
                for (std::size_t l = j + 1; l < hs.size(); ++l) {
                    if (!links[v].contains(ordered(hs[i], hs[l])) || !links[v].contains(ordered(hs[j], hs[l]))) {
                        continue;
                    }
                    const HalfEdge tri[3] = {hs[i], hs[j], hs[l]};
                    for (int a = 0; a < 3; ++a) {
                        HalfEdge axis = tri[a];
                        HalfEdge p = tri[(a + 1) % 3];
                        HalfEdge q = tri[(a + 2) % 3];
                        auto cp = corner_of.find({v, ordered(axis, p)});
                        auto cq = corner_of.find({v, ordered(axis, q)});
                        if (cp == corner_of.end() || cq == corner_of.end()) continue;
                        HalfEdge p2 = across(cp->second, axis);
                        HalfEdge q2 = across(cq->second, axis);
                        std::size_t u = X.vertex_of(other_end(axis));
                        if (p2 == q2 || !links[u].contains(ordered(p2, q2))) {
                            rep.failures.push_back("link triangle " + describe(X, tri[0]) + ", " +
                                                   describe(X, tri[1]) + ", " + describe(X, tri[2]) + " at " +
                                                   X.vertices()[v] + " does not close up to a 3-cube");
                            a = 3;
                        }
                    }
                }
            }
        }
    }
    rep.ok = rep.failures.empty();
    return rep;
}

SpecialReport check_special(const CubeComplex& X, std::size_t dimension_cap) {
    SpecialReport rep;
    rep.npc = check_npc(X, dimension_cap);
    Classes cls = classify(X);
    auto links = link_edges(X);

    std::set<std::size_t> self_cross;
    std::set<std::pair<std::size_t, std::size_t>> crossing;
    for (const Corner& c : X.corners()) {
        std::size_t a = cls.of_edge[c.arriving.edge];
        std::size_t b = cls.of_edge[c.leaving.edge];
        if (a == b) self_cross.insert(a);
        else crossing.insert(std::minmax(a, b));
    }

    std::set<std::size_t> self_osc;
    std::set<std::pair<std::size_t, std::size_t>> osculating;
    for (std::size_t v = 0; v < X.vertices().size(); ++v) {
        auto hs = X.half_edges_at(v);
        for (std::size_t i = 0; i < hs.size(); ++i) {
            for (std::size_t j = i + 1; j < hs.size(); ++j) {
                if (hs[i].edge == hs[j].edge || links[v].contains(ordered(hs[i], hs[j]))) continue;
                std::size_t a = cls.of_edge[hs[i].edge];
                std::size_t b = cls.of_edge[hs[j].edge];
                if (a == b) self_osc.insert(a);
                else osculating.insert(std::minmax(a, b));
            }
        }
    }

    rep.self_cross.assign(self_cross.begin(), self_cross.end());
    for (const auto& h : cls.list) {
        if (h.one_sided) rep.one_sided.push_back(h.id);
    }
    rep.self_osculate.assign(self_osc.begin(), self_osc.end());
    std::set_intersection(crossing.begin(), crossing.end(), osculating.begin(), osculating.end(),
                          std::back_inserter(rep.interosculate));
    rep.special = rep.npc.ok && rep.self_cross.empty() && rep.one_sided.empty() && rep.self_osculate.empty() &&
                  rep.interosculate.empty();
    return rep;
}

GraphPtr crossing_graph(const CubeComplex& X, std::size_t dimension_cap) {
    if (!check_special(X, dimension_cap).special) throw DomainError("complex is not special");
    Classes cls = classify(X);
    std::vector<std::string> names;
    for (const auto& h : cls.list) names.push_back(X.edges()[h.edges.front()].id);
    std::set<std::pair<std::size_t, std::size_t>> crossing;
    for (const Corner& c : X.corners()) {
        crossing.insert(std::minmax(cls.of_edge[c.arriving.edge], cls.of_edge[c.leaving.edge]));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [a, b] : crossing) edges.emplace_back(names[a], names[b]);
    return make_graph(std::move(names), edges);
}

CombinatorialMap salvetti_local_isometry(const CubeComplex& X, std::size_t dimension_cap) {
    GraphPtr gamma = crossing_graph(X, dimension_cap);
    Classes cls = classify(X);
    CombinatorialMap m{X, gamma->salvetti_complex(), std::vector<std::size_t>(X.vertices().size(), 0), {}, gamma};
    for (std::size_t e = 0; e < X.edges().size(); ++e) m.edge_map.push_back({cls.of_edge[e], cls.sigma[e]});
    if (!verify_local_isometry(m)) throw std::logic_error("constructed Salvetti map is not a local isometry");
    return m;
}

namespace {

std::array<EdgeStep, 4> rotate(const Square& s, int r) {
    return {s[r % 4], s[(r + 1) % 4], s[(r + 2) % 4], s[(r + 3) % 4]};
}

std::array<EdgeStep, 4> reversed(const Square& s) {
    return {EdgeStep{s[3].edge, -s[3].dir}, EdgeStep{s[2].edge, -s[2].dir}, EdgeStep{s[1].edge, -s[1].dir},
            EdgeStep{s[0].edge, -s[0].dir}};
}

HalfEdge image_half_edge(const CombinatorialMap& m, HalfEdge h) {
    const EdgeStep& f = m.edge_map[h.edge];
    int end = f.dir > 0 ? h.end : 1 - h.end;
    return HalfEdge{f.edge, end};
}

} // namespace

bool verify_local_isometry(const CombinatorialMap& m) {
    const CubeComplex& S = m.source;
    const CubeComplex& T = m.target;
    if (m.vertex_map.size() != S.vertices().size() || m.edge_map.size() != S.edges().size()) {
        throw InputError("map does not cover the source complex");
    }
    for (std::size_t v : m.vertex_map) {
        if (v >= T.vertices().size()) throw InputError("vertex image outside the target");
    }
    for (const EdgeStep& f : m.edge_map) {
        if (f.edge >= T.edges().size() || (f.dir != 1 && f.dir != -1)) throw InputError("edge image outside the target");
    }
    for (std::size_t e = 0; e < S.edges().size(); ++e) {
        if (T.start_of(m.edge_map[e]) != m.vertex_map[S.edges()[e].src]) return false;
        if (T.end_of(m.edge_map[e]) != m.vertex_map[S.edges()[e].dst]) return false;
    }

    auto key = [](const std::array<EdgeStep, 4>& s) {
        std::array<std::pair<std::size_t, int>, 4> k;
        for (int i = 0; i < 4; ++i) k[i] = {s[i].edge, s[i].dir};
        return k;
    };
    std::set<std::array<std::pair<std::size_t, int>, 4>> target_squares;
    for (const Square& s : T.squares()) {
        for (int r = 0; r < 4; ++r) {
            target_squares.insert(key(rotate(s, r)));
            target_squares.insert(key(rotate(reversed(s), r)));
        }
    }
    for (const Square& s : S.squares()) {
        Square img;
        for (int i = 0; i < 4; ++i) {
            const EdgeStep& f = m.edge_map[s[i].edge];
            img[i] = EdgeStep{f.edge, f.dir * s[i].dir};
        }
        if (!target_squares.contains(key(img))) return false;
    }

    auto src_links = link_edges(S);
    auto tgt_links = link_edges(T);
    for (std::size_t v = 0; v < S.vertices().size(); ++v) {
        auto hs = S.half_edges_at(v);
        std::vector<HalfEdge> img;
        for (const HalfEdge& h : hs) img.push_back(image_half_edge(m, h));
        std::vector<HalfEdge> sorted = img;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        const std::size_t w = m.vertex_map[v];
        for (std::size_t i = 0; i < hs.size(); ++i) {
            for (std::size_t j = i + 1; j < hs.size(); ++j) {
                bool here = src_links[v].contains(ordered(hs[i], hs[j]));
                bool there = tgt_links[w].contains(ordered(img[i], img[j]));
                if (here != there) return false;
            }
        }
    }
    return true;
}

namespace {

struct SpanningTree {
    std::vector<bool> in_tree;                 // per edge
    std::vector<std::optional<EdgeStep>> up;   // step from parent into each vertex
    std::vector<std::size_t> parent;
};

SpanningTree bfs_tree(const CubeComplex& X, std::size_t basepoint) {
    const std::size_t n = X.vertices().size();
    if (basepoint >= n) throw DomainError("basepoint outside the complex");
    SpanningTree t{std::vector<bool>(X.edges().size(), false), std::vector<std::optional<EdgeStep>>(n),
                   std::vector<std::size_t>(n, n)};
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> queue{basepoint};
    seen[basepoint] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t v = queue[head];
        for (std::size_t e = 0; e < X.edges().size(); ++e) {
            const ComplexEdge& edge = X.edges()[e];
            std::optional<EdgeStep> step;
            if (edge.src == v && !seen[edge.dst]) step = EdgeStep{e, 1};
            else if (edge.dst == v && !seen[edge.src]) step = EdgeStep{e, -1};
            if (!step) continue;
            std::size_t u = X.end_of(*step);
            seen[u] = true;
            t.in_tree[e] = true;
            t.up[u] = step;
            t.parent[u] = v;
            queue.push_back(u);
        }
    }
    if (queue.size() != n) throw DomainError("complex is disconnected");
    return t;
}

std::vector<EdgeStep> tree_path(const SpanningTree& t, std::size_t v) {
    std::vector<EdgeStep> out;
    while (t.up[v]) {
        out.push_back(*t.up[v]);
        v = t.parent[v];
    }
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace

Pi1Presentation pi1_presentation(const CubeComplex& X, std::size_t basepoint) {
    SpanningTree t = bfs_tree(X, basepoint);
    Pi1Presentation p;
    p.basepoint = basepoint;
    std::vector<std::size_t> position(X.edges().size(), 0);
    for (std::size_t e = 0; e < X.edges().size(); ++e) {
        if (t.in_tree[e]) {
            p.tree_edges.push_back(e);
        } else {
            position[e] = p.generators.size();
            p.generators.push_back(e);
        }
    }
    for (const Square& sq : X.squares()) {
        std::vector<std::pair<std::size_t, int>> word;
        for (const EdgeStep& s : sq) {
            if (!t.in_tree[s.edge]) word.emplace_back(position[s.edge], s.dir);
        }
        p.relators.push_back(std::move(word));
    }
    return p;
}

GroupElement develop_path(const CombinatorialMap& m, const std::vector<EdgeStep>& path, std::size_t basepoint) {
    if (!m.target_graph) throw DomainError("development needs a Salvetti target");
    const CubeComplex& S = m.source;
    if (basepoint >= S.vertices().size()) throw DomainError("basepoint outside the complex");
    Word letters;
    std::size_t at = basepoint;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const EdgeStep& s = path[i];
        if (s.edge >= S.edges().size() || (s.dir != 1 && s.dir != -1)) throw InputError("malformed path step");
        if (S.start_of(s) != at) throw DomainError("path is not consecutive at step " + std::to_string(i));
        at = S.end_of(s);
        const EdgeStep& f = m.edge_map[s.edge];
        if (f.edge >= m.target_graph->size()) throw DomainError("edge image is not a generator loop");
        letters.push_back(Letter{static_cast<VertexId>(f.edge), static_cast<std::int8_t>(f.dir * s.dir)});
    }
    return GroupElement(m.target_graph, letters);
}

Pi1Embedding pi1_embedding(const CombinatorialMap& m, std::size_t basepoint) {
    if (!verify_local_isometry(m)) throw DomainError("map is not a local isometry");
    const CubeComplex& S = m.source;
    SpanningTree t = bfs_tree(S, basepoint);
    Pi1Embedding out{pi1_presentation(S, basepoint), {}};
    for (std::size_t e : out.presentation.generators) {
        std::vector<EdgeStep> loop = tree_path(t, S.edges()[e].src);
        loop.push_back(EdgeStep{e, 1});
        auto back = tree_path(t, S.edges()[e].dst);
        for (auto it = back.rbegin(); it != back.rend(); ++it) loop.push_back(EdgeStep{it->edge, -it->dir});
        out.images.push_back(develop_path(m, loop, basepoint));
    }
    for (std::size_t r = 0; r < out.presentation.relators.size(); ++r) {
        GroupElement prod(m.target_graph);
        for (auto [g, sign] : out.presentation.relators[r]) {
            prod = prod * (sign > 0 ? out.images[g] : out.images[g].inverse());
        }
        if (!prod.is_identity()) throw DomainError("relator " + std::to_string(r) + " does not map to 1");
    }
    return out;
}

bool convexity_probe(const CombinatorialMap& m, std::size_t radius, std::size_t cap, std::size_t basepoint) {
    if (radius > cap) throw DomainError("convexity probe radius exceeds the configured cap");
    if (!m.target_graph) throw DomainError("development needs a Salvetti target");
    const CubeComplex& S = m.source;
    if (basepoint >= S.vertices().size()) throw DomainError("basepoint outside the complex");

    // Paths of length <= 2r reach every point of the developed image that
    // lies on a geodesic between two points reached within r.
    std::set<std::pair<std::size_t, GroupElement>> seen;
    std::vector<std::pair<std::size_t, GroupElement>> frontier{{basepoint, GroupElement(m.target_graph)}};
    seen.insert(frontier.front());
    std::set<GroupElement> near;
    std::set<GroupElement> far;
    near.insert(frontier.front().second);
    far.insert(frontier.front().second);
    for (std::size_t depth = 1; depth <= 2 * radius; ++depth) {
        std::vector<std::pair<std::size_t, GroupElement>> next;
        for (const auto& [v, g] : frontier) {
            for (std::size_t e = 0; e < S.edges().size(); ++e) {
                for (int dir : {1, -1}) {
                    EdgeStep s{e, dir};
                    if (S.start_of(s) != v) continue;
                    const EdgeStep& f = m.edge_map[e];
                    GroupElement h = g * Letter{static_cast<VertexId>(f.edge), static_cast<std::int8_t>(f.dir * dir)};
                    std::pair<std::size_t, GroupElement> state{S.end_of(s), h};
                    if (seen.insert(state).second) {
                        far.insert(h);
                        if (depth <= radius) near.insert(h);
                        next.push_back(std::move(state));
                    }
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<GroupElement> pts(near.begin(), near.end());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            std::size_t d = (pts[i].inverse() * pts[j]).length();
            if (d > radius) continue;
            for (const auto& z : ball(pts[i], d)) {
                std::size_t dz = (pts[i].inverse() * z).length() + (z.inverse() * pts[j]).length();
                if (dz == d && !far.contains(z)) return false;
            }
        }
    }
    return true;
}

} // namespace raag
