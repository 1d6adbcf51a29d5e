// raagkit: batch front end for the raag library.
//
// Structured arguments (graphs, cosets, hyperplanes, sequences, rays,
// complexes, maps) are JSON, given either as a file path or inline.  Words
// are plain strings such as "a b^-1".

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "raag/errors.hpp"
#include "raag/formats.hpp"

using namespace raag;

namespace {

enum Exit { kOk = 0, kDomain = 1, kIndeterminate = 2, kInput = 3 };

Json load(const std::string& arg) {
    std::string text = arg;
    if (std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
        throw InputError("not a JSON file or literal: " + arg);
    }
}

GraphPtr load_graph(const std::string& arg) {
    if (arg == "f2") return fixtures::free2();
    if (arg == "z2") return fixtures::z2();
    if (arg == "p3") return fixtures::path3();
    if (arg == "k3") return fixtures::triangle();
    return graph_from_json(load(arg));
}

std::size_t natural(const std::string& s, const char* what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size() || s.front() == '-') throw InputError(std::string(what) + " must be a natural number");
    return static_cast<std::size_t>(v);
}

struct Outcome {
    Json result;
    int code = kOk;
};

class Context {
public:
    std::map<std::string, std::string> args;
    std::map<std::string, CLI::Option*> given;  // options of the chosen command
    Config config;
    std::optional<GraphPtr> graph;
    std::optional<CubeComplex> complex;

    const std::string& arg(const std::string& name) const {
        if (!has(name)) throw InputError("missing --" + name);
        return args.at(name);
    }
    bool has(const std::string& name) const {
        auto it = given.find(name);
        return it != given.end() && it->second->count() > 0;
    }

    const GraphPtr& g() {
        if (!graph) graph = load_graph(arg("graph"));
        return *graph;
    }
    GroupElement word(const std::string& name) { return parse_element(g(), arg(name)); }
    std::size_t num(const std::string& name) const { return natural(arg(name), name.c_str()); }
    StandardCoset coset(const std::string& name) { return coset_from_json(g(), load(arg(name))); }
    Hyperplane hyperplane(const std::string& name) { return hyperplane_from_json(g(), load(arg(name))); }
    HyperplaneSeq seq(const std::string& name) { return hyperplane_seq_from_json(g(), load(arg(name))); }
    PeriodicRay ray(const std::string& name) { return ray_from_json(g(), load(arg(name))); }
    VertexId label(const std::string& name) { return g()->index(arg(name)); }

    const CubeComplex& cx() {
        if (!complex) complex = complex_from_json(load(arg("complex")));
        return *complex;
    }
    CombinatorialMap map() {
        if (has("map")) {
            CombinatorialMap m = map_from_json(load(arg("map")));
            complex = m.source;
            return m;
        }
        return salvetti_local_isometry(cx(), config.dimension_cap);
    }
};

Json spectrum_json(const LabelSpectrum& s, const DefiningGraph& g) {
    Json entries = Json::array();
    for (const auto& e : s.entries) {
        Json h = to_json(e.hyperplane);
        h["distance"] = e.distance;
        entries.push_back(h);
    }
    return Json{{"label", g.name(s.label)}, {"complete", s.complete}, {"entries", entries}};
}

Json separator_json(const SeparatorVerdict& v) {
    Json out{{"exact", v.exact}};
    if (v.exact) out["count"] = v.hyperplanes.size();
    else out["atLeast"] = v.at_least();
    out["hyperplanes"] = to_json(v.hyperplanes);
    return out;
}

const char* kind_name(BoundaryVerdict::Kind k) {
    switch (k) {
    case BoundaryVerdict::Kind::Equal: return "equal";
    case BoundaryVerdict::Kind::Distinct: return "distinct";
    default: return "indeterminate";
    }
}

Json boundary_json(const BoundaryVerdict& v) {
    Json out{{"verdict", kind_name(v.kind)}, {"exact", v.exact}};
    if (!v.separating.empty() || (v.kind == BoundaryVerdict::Kind::Equal && !v.exact)) {
        out["separating"] = to_json(v.separating);
    }
    if (v.bound) out["boundingProduct"] = to_json(*v.bound);
    return out;
}

// Symbols (strings) or hyperplanes (objects).
Json tail_equiv(Context& c) {
    Json u = load(c.arg("u"));
    Json w = load(c.arg("w"));
    auto is_symbols = [](const Json& s) {
        const Json& per = s.contains("period") ? s.at("period") : Json();
        return per.is_array() && !per.empty() && per.front().is_string();
    };
    std::optional<std::pair<std::size_t, std::size_t>> hit;
    if (is_symbols(u) && is_symbols(w)) {
        auto sym = [](const Json& s) {
            std::vector<std::string> pre;
            if (s.contains("preperiod")) pre = s.at("preperiod").get<std::vector<std::string>>();
            return PeriodicSeq<std::string>(pre, s.at("period").get<std::vector<std::string>>());
        };
        hit = tail_equivalent(sym(u), sym(w));
    } else {
        hit = tail_equivalent(periodic_seq_from_json(c.g(), u), periodic_seq_from_json(c.g(), w));
    }
    if (!hit) return Json{{"equivalent", false}};
    return Json{{"equivalent", true}, {"n", hit->first}, {"m", hit->second}};
}

using Handler = std::function<Outcome(Context&)>;

struct Command {
    std::string name;
    std::string help;
    std::vector<std::string> options;  // besides --graph/--complex/--config
    bool needs_graph;
    bool needs_complex;
    Handler run;
};

std::vector<Command> commands() {
    std::vector<Command> cs;
    auto add = [&](std::string name, std::string help, std::vector<std::string> opts, bool graph, bool cx,
                   Handler h) { cs.push_back({std::move(name), std::move(help), std::move(opts), graph, cx, std::move(h)}); };

    add("nf", "ShortLex normal form", {"word"}, true, false,
        [](Context& c) { return Outcome{to_json(c.word("word"))}; });
    add("mul", "product of two words", {"left", "right"}, true, false,
        [](Context& c) { return Outcome{to_json(c.word("left") * c.word("right"))}; });
    add("len", "geodesic length", {"word"}, true, false,
        [](Context& c) { return Outcome{c.word("word").length()}; });
    add("dist", "distance in the Cayley graph", {"from", "to"}, true, false,
        [](Context& c) { return Outcome{distance(c.word("from"), c.word("to"))}; });
    add("median", "median of three vertices", {"a", "b", "c"}, true, false,
        [](Context& c) { return Outcome{to_json(median(c.word("a"), c.word("b"), c.word("c")))}; });
    add("gate", "nearest point of a coset", {"point", "coset"}, true, false, [](Context& c) {
        GroupElement x = c.word("point");
        GroupElement p = gate_point(x, c.coset("coset"));
        return Outcome{Json{{"gate", to_json(p)}, {"distance", distance(x, p)}}};
    });
    add("gate-pair", "rho sets and translation between two cosets", {"coset-a", "coset-b"}, true, false,
        [](Context& c) {
            StandardCoset A = c.coset("coset-a");
            StandardCoset B = c.coset("coset-b");
            Json out = to_json(gate_pair(A, B));
            out["distance"] = coset_distance(A, B);
            return Outcome{out};
        });
    add("hp-of-edge", "hyperplane dual to an edge", {"at", "letter"}, true, false, [](Context& c) {
        Word w = parse_word(*c.g(), c.arg("letter"));
        if (w.size() != 1) throw InputError("--letter takes a single generator or inverse");
        return Outcome{to_json(hyperplane_of_edge(c.word("at"), w.front()))};
    });
    add("duals", "hyperplanes separating two vertices", {"from", "to"}, true, false,
        [](Context& c) { return Outcome{to_json(dual_hyperplanes(c.word("from"), c.word("to")))}; });
    add("cross", "crossing and contact of two hyperplanes", {"h1", "h2"}, true, false, [](Context& c) {
        Hyperplane h = c.hyperplane("h1");
        Hyperplane k = c.hyperplane("h2");
        return Outcome{Json{{"cross", hyperplanes_cross(h, k)}, {"contact", hyperplanes_contact(h, k)}}};
    });
    add("contact-ball", "contact graph near a vertex", {"center", "radius"}, true, false, [](Context& c) {
        ContactGraph cg = contact_graph_ball(c.word("center"), c.num("radius"), c.config.ball_cap);
        Json edges = Json::array();
        for (auto [i, j] : cg.edges) edges.push_back(Json::array({i, j}));
        return Outcome{Json{{"vertices", to_json(cg.vertices)}, {"edges", edges}}};
    });
    add("invariant", "classifying invariant of a hyperplane sequence", {"seq"}, true, false,
        [](Context& c) { return Outcome{to_json(classifying_invariant(c.seq("seq")))}; });
    add("orbit-equiv", "decide whether two hyperplane sequences share an orbit", {"seq1", "seq2"}, true, false,
        [](Context& c) {
            auto g = decide_orbit_equiv(c.seq("seq1"), c.seq("seq2"));
            return Outcome{Json{{"equivalent", g.has_value()}, {"witness", g ? to_json(*g) : Json()}}};
        });
    add("act", "translate a hyperplane sequence", {"element", "seq"}, true, false,
        [](Context& c) { return Outcome{to_json(act(c.word("element"), c.seq("seq")))}; });
    add("tail-equiv", "tail equivalence of eventually periodic sequences", {"u", "w"}, true, false,
        [](Context& c) { return Outcome{tail_equiv(c)}; });
    add("fn-equiv", "search for g mapping each alpha_i to beta_i up to tails", {"alpha", "beta"}, true, false,
        [](Context& c) {
            std::vector<HyperplanePeriodicSeq> alpha;
            std::vector<HyperplanePeriodicSeq> beta;
            for (const auto& s : load(c.arg("alpha"))) alpha.push_back(periodic_seq_from_json(c.g(), s));
            for (const auto& s : load(c.arg("beta"))) beta.push_back(periodic_seq_from_json(c.g(), s));
            FnVerdict v = decide_Fn(alpha, beta, c.config.search_radius);
            Json out;
            if (v.kind == FnVerdict::Kind::Witness) {
                out["verdict"] = "witness";
                out["witness"] = v.witness ? to_json(*v.witness) : Json("");
                return Outcome{out};
            }
            out["verdict"] = "none-within-radius";
            out["radius"] = v.radius;
            out["labelObstruction"] = v.label_obstruction;
            // labels are invariant under the action, so an obstruction settles it
            return Outcome{out, v.label_obstruction ? kOk : kIndeterminate};
        });
    add("ray-vertex", "k-th vertex after the base of a ray", {"ray", "k"}, true, false,
        [](Context& c) { return Outcome{to_json(ray_vertex(c.ray("ray"), c.num("k")))}; });
    add("ray-classes", "labels with infinitely many separating hyperplanes", {"ray"}, true, false,
        [](Context& c) { return Outcome{c.g()->names_of(infinite_label_classes(c.ray("ray")))}; });
    add("spectrum", "first k same-label hyperplanes toward a ray", {"ray", "at", "label", "k"}, true, false,
        [](Context& c) {
            auto s = label_spectrum(c.ray("ray"), c.word("at"), c.label("label"), c.num("k"), c.config.horizon);
            return Outcome{spectrum_json(s, *c.g())};
        });
    add("order-check", "order consistency of spectra from two points", {"ray", "x", "y", "label", "k"}, true,
        false, [](Context& c) {
            return Outcome{order_consistency_check(c.ray("ray"), c.word("x"), c.word("y"), c.label("label"),
                                                   c.num("k"), c.config.horizon)};
        });
    add("separators", "hyperplanes separating two boundary points", {"ray1", "ray2"}, true, false,
        [](Context& c) {
            auto v = separating_hyperplanes(c.ray("ray1"), c.ray("ray2"), c.config.horizon);
            return Outcome{separator_json(v), v.exact ? kOk : kIndeterminate};
        });
    add("roller-adjacent", "adjacency in the Roller graph", {"ray1", "ray2"}, true, false, [](Context& c) {
        Adjacency a = roller_adjacent(c.ray("ray1"), c.ray("ray2"), c.config.horizon);
        const char* names[] = {"adjacent", "not-adjacent", "indeterminate"};
        return Outcome{names[static_cast<int>(a)], a == Adjacency::Indeterminate ? kIndeterminate : kOk};
    });
    add("check-special", "NPC and specialness report", {}, false, true, [](Context& c) {
        return Outcome{to_json(check_special(c.cx(), c.config.dimension_cap), c.cx())};
    });
    add("crossing-graph", "crossing graph of a special complex", {}, false, true,
        [](Context& c) { return Outcome{to_json(*crossing_graph(c.cx(), c.config.dimension_cap))}; });
    add("salvetti-map", "local isometry into a Salvetti complex", {}, false, true, [](Context& c) {
        return Outcome{to_json(salvetti_local_isometry(c.cx(), c.config.dimension_cap))};
    });
    add("pi1-embed", "images of the fundamental group generators", {"map", "basepoint"}, false, true,
        [](Context& c) {
            CombinatorialMap m = c.map();
            std::size_t bp = c.has("basepoint") ? c.num("basepoint") : 0;
            Pi1Embedding e = pi1_embedding(m, bp);
            Json gens = Json::array();
            for (std::size_t i = 0; i < e.images.size(); ++i) {
                gens.push_back(Json{{"edge", m.source.edges()[e.presentation.generators[i]].id},
                                    {"image", to_json(e.images[i])}});
            }
            Json rels = Json::array();
            for (const auto& r : e.presentation.relators) {
                Json word = Json::array();
                for (auto [g, s] : r) word.push_back(Json::array({m.source.edges()[e.presentation.generators[g]].id, s}));
                rels.push_back(word);
            }
            return Outcome{Json{{"generators", gens}, {"relators", rels}, {"relatorsTrivial", true}}};
        });
    add("develop", "image of an edge path from the basepoint", {"map", "path", "basepoint"}, false, true,
        [](Context& c) {
            CombinatorialMap m = c.map();
            std::vector<EdgeStep> path;
            for (const auto& s : load(c.arg("path"))) {
                if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_number_integer()) {
                    throw InputError("a path step is [edgeId, dir]");
                }
                path.push_back(EdgeStep{m.source.edge_index(s[0].get<std::string>()), s[1].get<int>()});
            }
            std::size_t bp = c.has("basepoint") ? c.num("basepoint") : 0;
            return Outcome{to_json(develop_path(m, path, bp))};
        });
    add("convexity-probe", "convexity of the developed image near the basepoint", {"map", "radius", "basepoint"},
        false, true, [](Context& c) {
            CombinatorialMap m = c.map();
            std::size_t bp = c.has("basepoint") ? c.num("basepoint") : 0;
            return Outcome{convexity_probe(m, c.num("radius"), c.config.ball_cap, bp)};
        });
    add("gromov-product", "Gromov product (x, y)_base", {"x", "y", "base"}, true, false, [](Context& c) {
        GroupElement base = c.has("base") ? c.word("base") : GroupElement(c.g());
        return Outcome{to_json(gromov_product(c.word("x"), c.word("y"), base))};
    });
    add("delta", "four-point delta of a ball", {"center", "radius"}, true, false, [](Context& c) {
        GroupElement center = c.has("center") ? c.word("center") : GroupElement(c.g());
        return Outcome{Json{{"ballDelta", to_json(delta_estimate(center, c.num("radius"), c.config.ball_cap))}}};
    });
    add("boundary-equal", "Gromov boundary equality of two rays", {"ray1", "ray2"}, true, false,
        [](Context& c) {
            auto v = gromov_boundary_equal(c.ray("ray1"), c.ray("ray2"), c.config.horizon);
            return Outcome{boundary_json(v), v.kind == BoundaryVerdict::Kind::Indeterminate ? kIndeterminate : kOk};
        });
    add("fiber-sample", "partition rays by boundary equality", {"rays"}, true, false, [](Context& c) {
        std::vector<PeriodicRay> rays;
        for (const auto& r : load(c.arg("rays"))) rays.push_back(ray_from_json(c.g(), r));
        FiberReport f = fiber_sample(rays, c.config.horizon);
        return Outcome{Json{{"classes", f.classes},
                            {"isolated", f.isolated},
                            {"maxClass", f.max_class},
                            {"bound", f.bound},
                            {"violation", f.violation}}};
    });
    return cs;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Right-angled Artin group toolkit"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file overriding the defaults");

    auto table = commands();
    Context ctx;
    std::map<CLI::App*, std::pair<const Command*, std::map<std::string, CLI::Option*>>> by_app;
    for (const auto& cmd : table) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        sub->add_option("--config", config_path, "JSON config file overriding the defaults");
        std::map<std::string, CLI::Option*> opts;
        if (cmd.needs_graph) {
            opts["graph"] = sub->add_option("--graph", ctx.args["graph"], "graph file, JSON literal, or f2|z2|p3|k3");
        }
        if (cmd.needs_complex) opts["complex"] = sub->add_option("--complex", ctx.args["complex"], "complex file or JSON literal");
        for (const auto& o : cmd.options) opts[o] = sub->add_option("--" + o, ctx.args[o]);
        by_app[sub] = {&cmd, std::move(opts)};
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    auto& chosen = by_app.at(app.get_subcommands().front());
    const Command* cmd = chosen.first;
    ctx.given = chosen.second;
    Json report;
    report["command"] = cmd->name;
    try {
        ctx.config = config_path.empty() ? Config{} : config_from_json(load(config_path));
        report["config"] = to_json(ctx.config);
        Outcome out = cmd->run(ctx);
        if (ctx.graph) report["graph"] = graph_digest(**ctx.graph);
        if (ctx.complex) report["complex"] = digest(to_json(*ctx.complex).dump());
        report["result"] = std::move(out.result);
        std::cout << report.dump(2) << '\n';
        return out.code;
    } catch (const Indeterminate& e) {
        std::cerr << "indeterminate: " << e.what() << '\n';
        return kIndeterminate;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    }
}
