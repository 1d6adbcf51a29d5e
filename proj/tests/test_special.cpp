#include <doctest.h>

#include <algorithm>

#include "complexes.hpp"
#include "helpers.hpp"
#include "raag/errors.hpp"
#include "raag/special.hpp"

using namespace raag;
using testing::el;

namespace {

std::vector<std::vector<std::string>> class_names(const CubeComplex& X) {
    std::vector<std::vector<std::string>> out;
    for (const auto& h : immersed_hyperplanes(X)) {
        std::vector<std::string> names;
        for (std::size_t e : h.edges) names.push_back(X.edges()[e].id);
        std::sort(names.begin(), names.end());
        out.push_back(names);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Same complex with every square boundary rotated by r and, if asked,
// read backwards.
CubeComplex reencoded(const CubeComplex& X, int r, bool reflect) {
    std::vector<Square> squares;
    for (const auto& s : X.squares()) {
        Square t;
        for (int i = 0; i < 4; ++i) t[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>((i + r) % 4)];
        if (reflect) {
            Square u;
            for (int i = 0; i < 4; ++i) {
                EdgeStep st = t[static_cast<std::size_t>(3 - i)];
                u[static_cast<std::size_t>(i)] = EdgeStep{st.edge, -st.dir};
            }
            t = u;
        }
        squares.push_back(t);
    }
    return CubeComplex(X.vertices(), X.edges(), squares);
}

CubeComplex self_crossing() {
    return complex_from_json(Json::parse(R"({"vertices":["o"],
        "edges":[{"id":"a","src":"o","dst":"o"},{"id":"b","src":"o","dst":"o"},{"id":"c","src":"o","dst":"o"}],
        "squares":[[["a",1],["b",1],["a",-1],["b",-1]],[["a",1],["c",1],["b",-1],["c",-1]]]})"));
}

std::vector<EdgeStep> boundary(const Square& s) { return {s.begin(), s.end()}; }

} // namespace

TEST_CASE("immersed hyperplane examples") {
    CHECK(immersed_hyperplanes(complexes::rose()).size() == 2);
    CHECK(immersed_hyperplanes(fixtures::z2()->salvetti_complex()).size() == 2);
    auto sq = immersed_hyperplanes(complexes::square());
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].edges.size() == 2);
    CHECK(sq[1].edges.size() == 2);
}

TEST_CASE("hyperplane classes do not depend on square encoding") {
    for (const auto& X : {complexes::square(), complexes::mobius(), complexes::annulus(), complexes::osculating_strip(),
                          complexes::klein(), self_crossing(), fixtures::path3()->salvetti_complex()}) {
        auto base = check_special(X);
        for (int r = 0; r < 4; ++r) {
            for (bool reflect : {false, true}) {
                auto Y = reencoded(X, r, reflect);
                CHECK(class_names(Y) == class_names(X));
                auto rep = check_special(Y);
                CHECK(rep.special == base.special);
                CHECK(rep.one_sided == base.one_sided);
                CHECK(rep.self_cross == base.self_cross);
                CHECK(rep.self_osculate == base.self_osculate);
                CHECK(rep.interosculate == base.interosculate);
            }
        }
    }
}

TEST_CASE("Salvetti complexes are special") {
    for (const auto& g : {fixtures::free2(), fixtures::z2(), fixtures::path3(), fixtures::triangle()}) {
        auto rep = check_special(g->salvetti_complex());
        CHECK(rep.npc.ok);
        CHECK(rep.special);
        CHECK(rep.self_cross.empty());
        CHECK(rep.one_sided.empty());
        CHECK(rep.self_osculate.empty());
        CHECK(rep.interosculate.empty());
    }
}

TEST_CASE("seeded violations") {
    auto mob = check_special(complexes::mobius());
    CHECK(mob.npc.ok);
    CHECK_FALSE(mob.special);
    CHECK(mob.one_sided.size() == 1);
    CHECK(mob.self_cross.empty());
    CHECK(mob.self_osculate.empty());
    CHECK(mob.interosculate.empty());

    auto kl = check_special(complexes::klein());
    CHECK(kl.one_sided == std::vector<std::size_t>{1});
    CHECK(kl.self_cross.empty());

    auto osc = check_special(complexes::osculating_strip());
    CHECK(osc.npc.ok);
    CHECK(osc.self_osculate.size() == 1);
    CHECK(osc.one_sided.empty());
    CHECK(osc.self_cross.empty());
    CHECK_FALSE(osc.special);

    auto sc = check_special(self_crossing());
    CHECK(sc.npc.ok);
    CHECK(sc.self_cross.size() == 1);
    CHECK(sc.one_sided.empty());
    CHECK_FALSE(sc.special);

    CHECK(check_special(complexes::annulus()).special);
}

TEST_CASE("NPC failures are reported") {
    // a square whose four corners all join the same pair of half-edges
    auto X = complex_from_json(Json::parse(R"({"vertices":["o"],"edges":[{"id":"a","src":"o","dst":"o"}],
        "squares":[[["a",1],["a",1],["a",-1],["a",-1]]]})"));
    auto rep = check_npc(X, 3);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.failures.empty());
    CHECK_FALSE(check_special(X).special);
    // K3 links contain triangles; a cap of 2 leaves them unchecked
    auto k3 = fixtures::triangle()->salvetti_complex();
    auto capped = check_npc(k3, 2);
    CHECK(capped.ok);
    CHECK(capped.checked_dimension == 2);
    CHECK(capped.unchecked_beyond_cap);
    CHECK_FALSE(check_npc(k3, 3).unchecked_beyond_cap);
}

TEST_CASE("crossing graph examples") {
    auto rose = crossing_graph(complexes::rose());
    CHECK(rose->size() == 2);
    CHECK(rose->edge_count() == 0);
    auto torus = crossing_graph(fixtures::z2()->salvetti_complex());
    CHECK(torus->size() == 2);
    CHECK(torus->edge_count() == 1);
    CHECK(*crossing_graph(fixtures::path3()->salvetti_complex()) == *fixtures::path3());
    auto ann = crossing_graph(complexes::annulus());
    CHECK(ann->names() == std::vector<std::string>{"b1", "b2", "s0"});
    CHECK(ann->edge_count() == 2);
    CHECK(ann->adjacent(ann->index("s0"), ann->index("b1")));
    CHECK_THROWS_AS(crossing_graph(complexes::mobius()), DomainError);
}

TEST_CASE("Salvetti local isometry") {
    auto X = fixtures::z2()->salvetti_complex();
    auto m = salvetti_local_isometry(X);
    CHECK(verify_local_isometry(m));
    for (std::size_t e = 0; e < m.edge_map.size(); ++e) {
        CHECK(m.edge_map[e].edge == e);
        CHECK(m.edge_map[e].dir == 1);
    }
    for (const auto& Y : {complexes::rose(), complexes::annulus(), complexes::square(), complexes::circle()}) {
        CHECK(verify_local_isometry(salvetti_local_isometry(Y)));
    }
    CHECK_THROWS_AS(salvetti_local_isometry(complexes::osculating_strip()), DomainError);
}

TEST_CASE("local isometry verification rejects collapses") {
    auto target = make_graph({"a"}, {});
    CombinatorialMap m;
    m.source = complexes::rose();
    m.target = target->salvetti_complex();
    m.target_graph = target;
    m.vertex_map = {0};
    m.edge_map = {EdgeStep{0, 1}, EdgeStep{0, 1}};
    CHECK_FALSE(verify_local_isometry(m));

    CombinatorialMap c;
    c.source = complexes::circle();
    c.target = target->salvetti_complex();
    c.target_graph = target;
    c.vertex_map = {0, 0};
    c.edge_map = {EdgeStep{0, 1}, EdgeStep{0, 1}};
    CHECK(verify_local_isometry(c));
    auto emb = pi1_embedding(c);
    REQUIRE(emb.images.size() == 1);
    CHECK(emb.images[0] == el(target, "a a"));
    CHECK(convexity_probe(c, 2, 5));

    c.vertex_map = {0, 1};
    CHECK_THROWS_AS(verify_local_isometry(c), InputError);
}

TEST_CASE("fundamental group presentations") {
    auto rose = pi1_presentation(complexes::rose());
    CHECK(rose.generators.size() == 2);
    CHECK(rose.relators.empty());
    auto torus = pi1_presentation(fixtures::z2()->salvetti_complex());
    CHECK(torus.generators.size() == 2);
    REQUIRE(torus.relators.size() == 1);
    CHECK(torus.relators[0].size() == 4);
    auto circle = pi1_presentation(complexes::circle());
    CHECK(circle.generators.size() == 1);
    CHECK(circle.relators.empty());
    CHECK(circle.tree_edges.size() == 1);
    auto split = complex_from_json(Json::parse(R"({"vertices":["p","q"],"edges":[]})"));
    CHECK_THROWS_AS(pi1_presentation(split), DomainError);
}

TEST_CASE("embedding and development") {
    auto z2 = fixtures::z2();
    auto m = salvetti_local_isometry(z2->salvetti_complex());
    auto emb = pi1_embedding(m);
    REQUIRE(emb.images.size() == 2);
    CHECK(emb.images[0] == el(m.target_graph, "a"));
    CHECK(emb.images[1] == el(m.target_graph, "b"));

    CHECK(develop_path(m, {}).is_identity());
    for (const auto& s : m.source.squares()) CHECK(develop_path(m, boundary(s)).is_identity());

    auto r = salvetti_local_isometry(complexes::rose());
    CHECK(format(develop_path(r, {EdgeStep{0, 1}, EdgeStep{1, 1}})) == "a b");
    auto rimg = pi1_embedding(r).images;
    CHECK(rimg.size() == 2);
    CHECK(rimg[0].length() == 1);
    CHECK(rimg[1].length() == 1);

    auto ann = salvetti_local_isometry(complexes::annulus());
    CHECK_THROWS_AS(develop_path(ann, {EdgeStep{0, 1}, EdgeStep{0, 1}}), DomainError);
}

TEST_CASE("development is multiplicative") {
    for (const auto& X : {complexes::annulus(), complexes::square(), fixtures::path3()->salvetti_complex()}) {
        auto m = salvetti_local_isometry(X);
        // every closed walk of length <= 4 at the basepoint, split in two
        std::vector<std::vector<EdgeStep>> walks{{}};
        std::vector<std::size_t> ends{0};
        for (std::size_t len = 0; len < 4; ++len) {
            std::vector<std::vector<EdgeStep>> next;
            std::vector<std::size_t> nend;
            for (std::size_t i = 0; i < walks.size(); ++i) {
                for (std::size_t e = 0; e < X.edges().size(); ++e) {
                    for (int d : {1, -1}) {
                        EdgeStep st{e, d};
                        if (X.start_of(st) != ends[i]) continue;
                        auto w = walks[i];
                        w.push_back(st);
                        next.push_back(w);
                        nend.push_back(X.end_of(st));
                    }
                }
            }
            walks.insert(walks.end(), next.begin(), next.end());
            ends.insert(ends.end(), nend.begin(), nend.end());
            if (walks.size() > 4000) break;
        }
        for (std::size_t i = 0; i < walks.size(); ++i) {
            if (ends[i] != 0) continue;
            for (std::size_t j = 0; j < walks.size(); j += 7) {
                auto cat = walks[i];
                cat.insert(cat.end(), walks[j].begin(), walks[j].end());
                CHECK(develop_path(m, cat) == develop_path(m, walks[i]) * develop_path(m, walks[j]));
            }
        }
    }
}

TEST_CASE("convexity probe") {
    auto m = salvetti_local_isometry(fixtures::z2()->salvetti_complex());
    CHECK(convexity_probe(m, 2, 5));
    CHECK(convexity_probe(salvetti_local_isometry(complexes::rose()), 3, 5));
    CHECK(convexity_probe(salvetti_local_isometry(complexes::annulus()), 3, 5));
    CHECK_THROWS_AS(convexity_probe(m, 6, 5), DomainError);
}
