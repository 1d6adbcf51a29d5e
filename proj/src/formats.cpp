#include "raag/formats.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "raag/errors.hpp"

namespace raag {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field: ") + key);
    return j.at(key);
}

std::string str(const Json& j, const char* what) {
    if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

const Json& array(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    return j;
}

std::vector<std::string> strings(const Json& j, const char* what) {
    std::vector<std::string> out;
    for (const auto& x : array(j, what)) out.push_back(str(x, what));
    return out;
}

std::size_t positive(const Json& j, const char* key) {
    if (!j.is_number_integer() || j.get<long long>() <= 0) {
        throw InputError(std::string(key) + " must be a positive integer");
    }
    return j.get<std::size_t>();
}

int direction(const Json& j) {
    if (!j.is_number_integer() || (j.get<int>() != 1 && j.get<int>() != -1)) {
        throw InputError("direction must be +1 or -1");
    }
    return j.get<int>();
}

} // namespace

Config config_from_json(const Json& j) {
    Config c;
    if (j.is_null()) return c;
    if (!j.is_object()) throw InputError("config must be an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "horizon") c.horizon = positive(value, "horizon");
        else if (key == "searchRadius") c.search_radius = positive(value, "searchRadius");
        else if (key == "ballCap") c.ball_cap = positive(value, "ballCap");
        else if (key == "dimensionCap") c.dimension_cap = positive(value, "dimensionCap");
        else throw InputError("unknown config key: " + key);
    }
    return c;
}

Json to_json(const Config& c) {
    return Json{{"horizon", c.horizon},
                {"searchRadius", c.search_radius},
                {"ballCap", c.ball_cap},
                {"dimensionCap", c.dimension_cap}};
}

GraphPtr graph_from_json(const Json& j) {
    auto vertices = strings(field(j, "vertices"), "vertices");
    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges")) {
        for (const auto& e : array(j.at("edges"), "edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("an edge is a pair of vertex names");
            edges.emplace_back(str(e[0], "edge endpoint"), str(e[1], "edge endpoint"));
        }
    }
    return make_graph(std::move(vertices), edges);
}

Json to_json(const DefiningGraph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
    return Json{{"vertices", g.names()}, {"edges", edges}};
}

std::string digest(std::string_view text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string graph_digest(const DefiningGraph& g) { return digest(g.canonical_text()); }

GroupElement element_from_json(const GraphPtr& g, const Json& j) {
    return parse_element(g, str(j, "group element"));
}

Json to_json(const GroupElement& x) { return x.is_identity() ? std::string("1") : format(x); }

StandardCoset coset_from_json(const GraphPtr& g, const Json& j) {
    GroupElement base = element_from_json(g, field(j, "base"));
    return StandardCoset(base, g->set_of(strings(field(j, "generators"), "generators")));
}

Json to_json(const StandardCoset& c) {
    return Json{{"base", to_json(c.base())}, {"generators", c.base().graph().names_of(c.generators())}};
}

Hyperplane hyperplane_from_json(const GraphPtr& g, const Json& j) {
    VertexId label = g->index(str(field(j, "label"), "label"));
    return Hyperplane(label, element_from_json(g, field(j, "base")));
}

Json to_json(const Hyperplane& h) {
    return Json{{"label", h.base().graph().name(h.label())}, {"base", to_json(h.base())}};
}

Json to_json(const HyperplaneList& hs) {
    Json out = Json::array();
    for (const auto& h : hs) out.push_back(to_json(h));
    return out;
}

HyperplaneSeq hyperplane_seq_from_json(const GraphPtr& g, const Json& j) {
    HyperplaneSeq out;
    for (const auto& h : array(j, "hyperplane sequence")) out.push_back(hyperplane_from_json(g, h));
    return out;
}

HyperplanePeriodicSeq periodic_seq_from_json(const GraphPtr& g, const Json& j) {
    HyperplaneSeq pre = j.contains("preperiod") ? hyperplane_seq_from_json(g, j.at("preperiod")) : HyperplaneSeq{};
    HyperplaneSeq per = hyperplane_seq_from_json(g, field(j, "period"));
    return HyperplanePeriodicSeq(std::move(pre), std::move(per));
}

PeriodicRay ray_from_json(const GraphPtr& g, const Json& j) {
    GroupElement base = j.contains("base") ? element_from_json(g, j.at("base")) : GroupElement(g);
    return PeriodicRay(base, element_from_json(g, field(j, "period")));
}

Json to_json(const PeriodicRay& r) {
    return Json{{"base", to_json(r.base())}, {"period", to_json(r.period())}};
}

CubeComplex complex_from_json(const Json& j) {
    auto vertices = strings(field(j, "vertices"), "vertices");
    std::map<std::string, std::size_t> vindex;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!vindex.emplace(vertices[i], i).second) throw InputError("duplicate vertex: " + vertices[i]);
    }
    auto vertex = [&](const Json& v) {
        auto it = vindex.find(str(v, "edge endpoint"));
        if (it == vindex.end()) throw InputError("unknown vertex: " + v.get<std::string>());
        return it->second;
    };
    std::vector<ComplexEdge> edges;
    std::map<std::string, std::size_t> eindex;
    for (const auto& e : array(field(j, "edges"), "edges")) {
        ComplexEdge ce{str(field(e, "id"), "edge id"), vertex(field(e, "src")), vertex(field(e, "dst"))};
        eindex.emplace(ce.id, edges.size());
        edges.push_back(std::move(ce));
    }
    std::vector<Square> squares;
    if (j.contains("squares")) {
        for (const auto& s : array(j.at("squares"), "squares")) {
            if (!s.is_array() || s.size() != 4) throw InputError("a square has four sides");
            Square sq;
            for (int i = 0; i < 4; ++i) {
                const Json& side = s[static_cast<std::size_t>(i)];
                if (!side.is_array() || side.size() != 2) throw InputError("a square side is [edgeId, dir]");
                auto it = eindex.find(str(side[0], "edge id"));
                if (it == eindex.end()) throw InputError("unknown edge id: " + side[0].get<std::string>());
                sq[static_cast<std::size_t>(i)] = EdgeStep{it->second, direction(side[1])};
            }
            squares.push_back(sq);
        }
    }
    return CubeComplex(std::move(vertices), std::move(edges), std::move(squares));
}

Json to_json(const CubeComplex& X) {
    Json edges = Json::array();
    for (const auto& e : X.edges()) {
        edges.push_back(Json{{"id", e.id}, {"src", X.vertices()[e.src]}, {"dst", X.vertices()[e.dst]}});
    }
    Json squares = Json::array();
    for (const auto& s : X.squares()) {
        Json sq = Json::array();
        for (const auto& st : s) sq.push_back(Json::array({X.edges()[st.edge].id, st.dir}));
        squares.push_back(sq);
    }
    return Json{{"vertices", X.vertices()}, {"edges", edges}, {"squares", squares}};
}

CombinatorialMap map_from_json(const Json& j) {
    CombinatorialMap m;
    m.source = complex_from_json(field(j, "source"));
    m.target = complex_from_json(field(j, "target"));
    const auto& tv = m.target.vertices();
    for (const auto& v : strings(field(j, "vertexMap"), "vertexMap")) {
        auto it = std::find(tv.begin(), tv.end(), v);
        if (it == tv.end()) throw InputError("unknown target vertex: " + v);
        m.vertex_map.push_back(static_cast<std::size_t>(it - tv.begin()));
    }
    const Json& em = field(j, "edgeMap");
    if (!em.is_object()) throw InputError("edgeMap must map source edge ids to [targetEdgeId, dir]");
    m.edge_map.assign(m.source.edges().size(), EdgeStep{});
    std::vector<bool> set(m.edge_map.size(), false);
    for (const auto& [id, img] : em.items()) {
        std::size_t e = m.source.edge_index(id);
        if (!img.is_array() || img.size() != 2) throw InputError("an edge image is [targetEdgeId, dir]");
        m.edge_map[e] = EdgeStep{m.target.edge_index(str(img[0], "edge id")), direction(img[1])};
        set[e] = true;
    }
    if (std::find(set.begin(), set.end(), false) != set.end()) throw InputError("edgeMap misses a source edge");
    if (j.contains("graph")) m.target_graph = graph_from_json(j.at("graph"));
    return m;
}

Json to_json(const CombinatorialMap& m) {
    Json vm = Json::array();
    for (std::size_t v : m.vertex_map) vm.push_back(m.target.vertices()[v]);
    Json em = Json::object();
    for (std::size_t e = 0; e < m.edge_map.size(); ++e) {
        em[m.source.edges()[e].id] = Json::array({m.target.edges()[m.edge_map[e].edge].id, m.edge_map[e].dir});
    }
    Json out{{"source", to_json(m.source)}, {"target", to_json(m.target)}, {"vertexMap", vm}, {"edgeMap", em}};
    if (m.target_graph) out["graph"] = to_json(*m.target_graph);
    return out;
}

Json to_json(const GatePair& p) {
    return Json{{"translation", to_json(p.translation)},
                {"common", p.translation.graph().names_of(p.common)},
                {"rhoA", to_json(p.rhoA)},
                {"rhoB", to_json(p.rhoB)}};
}

Json to_json(const ClassifyingInvariant& f) {
    const DefiningGraph& g = f.terminal.base().graph();
    Json labels = Json::array();
    for (VertexId v : f.labels) labels.push_back(g.name(v));
    Json s = Json::array();
    for (const auto& x : f.s) s.push_back(to_json(x));
    Json t = Json::array();
    for (const auto& x : f.t) t.push_back(to_json(x));
    return Json{{"labels", labels}, {"s", s}, {"t", t}, {"terminal", to_json(f.terminal)}};
}

Json to_json(const SpecialReport& r, const CubeComplex& X) {
    auto classes = immersed_hyperplanes(X);
    auto name = [&](std::size_t c) { return X.edges()[classes[c].edges.front()].id; };
    Json hs = Json::array();
    for (const auto& h : classes) {
        Json members = Json::array();
        for (std::size_t e : h.edges) members.push_back(X.edges()[e].id);
        Json entry{{"name", name(h.id)}, {"edges", members}};
        if (h.one_sided) entry["orientation"] = "one-sided";
        else entry["orientation"] = h.orientation;
        hs.push_back(entry);
    }
    auto names = [&](const std::vector<std::size_t>& ids) {
        Json out = Json::array();
        for (std::size_t c : ids) out.push_back(name(c));
        return out;
    };
    Json inter = Json::array();
    for (auto [a, b] : r.interosculate) inter.push_back(Json::array({name(a), name(b)}));
    return Json{{"npc",
                 {{"ok", r.npc.ok},
                  {"failures", r.npc.failures},
                  {"checkedDimension", r.npc.checked_dimension},
                  {"uncheckedBeyondCap", r.npc.unchecked_beyond_cap}}},
                {"hyperplanes", hs},
                {"selfCross", names(r.self_cross)},
                {"oneSided", names(r.one_sided)},
                {"selfOsculate", names(r.self_osculate)},
                {"interosculate", inter},
                {"special", r.special}};
}

Json to_json(const HalfInteger& v) { return v.to_string(); }

} // namespace raag
