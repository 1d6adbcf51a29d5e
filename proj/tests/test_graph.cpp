#include <doctest.h>

#include "raag/cube_complex.hpp"
#include "raag/errors.hpp"
#include "raag/graph.hpp"

using namespace raag;

TEST_CASE("loading validates simplicity") {
    auto f2 = make_graph({"a", "b"}, {});
    CHECK(f2->size() == 2);
    CHECK(f2->edge_count() == 0);
    auto z2 = make_graph({"a", "b"}, {{"a", "b"}});
    CHECK(z2->adjacent(0, 1));
    CHECK_THROWS_AS(make_graph({"a"}, {{"a", "a"}}), InputError);
    CHECK_THROWS_AS(make_graph({"a", "a"}, {}), InputError);
    CHECK_THROWS_AS(make_graph({"a"}, {{"a", "z"}}), InputError);
    CHECK_THROWS_AS(make_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
}

TEST_CASE("vertex order is declaration order") {
    auto g = make_graph({"z", "y", "x"}, {{"x", "z"}});
    CHECK(g->index("z") == 0);
    CHECK(g->index("x") == 2);
    CHECK(g->edges() == std::vector<std::pair<VertexId, VertexId>>{{0, 2}});
    CHECK_THROWS_AS(g->index("w"), DomainError);
}

TEST_CASE("links") {
    auto z2 = fixtures::z2();
    CHECK(z2->link(0) == VertexSet::single(1));
    CHECK(fixtures::free2()->link(0).empty());
    auto p3 = fixtures::path3();
    CHECK(p3->link(1) == (VertexSet::single(0) | VertexSet::single(2)));
    for (auto g : {fixtures::free2(), fixtures::z2(), fixtures::path3(), fixtures::triangle()}) {
        for (VertexId v = 0; v < g->size(); ++v) {
            CHECK_FALSE(g->link(v).contains(v));
            for (VertexId w = 0; w < g->size(); ++w) CHECK(g->link(v).contains(w) == g->link(w).contains(v));
        }
    }
}

TEST_CASE("maximal cliques") {
    CHECK(fixtures::free2()->maximal_cliques() == std::vector<VertexSet>{VertexSet(1), VertexSet(2)});
    CHECK(fixtures::z2()->maximal_cliques() == std::vector<VertexSet>{VertexSet(3)});
    auto p3 = fixtures::path3()->maximal_cliques();
    CHECK(p3.size() == 2);
    CHECK(std::find(p3.begin(), p3.end(), VertexSet(3)) != p3.end());
    CHECK(std::find(p3.begin(), p3.end(), VertexSet(6)) != p3.end());
    CHECK(fixtures::triangle()->maximal_cliques() == std::vector<VertexSet>{VertexSet(7)});

    for (auto g : {fixtures::free2(), fixtures::z2(), fixtures::path3(), fixtures::triangle()}) {
        auto cs = g->maximal_cliques();
        for (auto a : cs) {
            for (auto b : cs) {
                if (a != b) CHECK_FALSE(a.subset_of(b));
            }
        }
        for (auto [u, v] : g->edges()) {
            bool covered = false;
            for (auto c : cs) covered = covered || (c.contains(u) && c.contains(v));
            CHECK(covered);
        }
    }
}

TEST_CASE("salvetti complexes") {
    auto f2 = fixtures::free2()->salvetti_complex();
    CHECK(f2.vertices().size() == 1);
    CHECK(f2.edges().size() == 2);
    CHECK(f2.squares().empty());
    CHECK(fixtures::z2()->salvetti_complex().squares().size() == 1);
    auto k3 = fixtures::triangle()->salvetti_complex();
    CHECK(k3.edges().size() == 3);
    CHECK(k3.squares().size() == 3);
    for (auto g : {fixtures::free2(), fixtures::z2(), fixtures::path3(), fixtures::triangle()}) {
        CHECK(g->salvetti_complex().squares().size() == g->edge_count());
    }
}

TEST_CASE("canonical text sorts edges") {
    auto g = make_graph({"a", "b", "c"}, {{"c", "b"}, {"b", "a"}});
    auto h = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(g->canonical_text() == h->canonical_text());
    CHECK(*g == *h);
}

TEST_CASE("complex validation") {
    CHECK_THROWS_AS(CubeComplex({"o"}, {{"a", 0, 1}}, {}), InputError);
    CHECK_THROWS_AS(CubeComplex({"o"}, {{"a", 0, 0}, {"a", 0, 0}}, {}), InputError);
    // p -> q edge cannot close a square on its own
    CHECK_THROWS_AS(CubeComplex({"p", "q"}, {{"e", 0, 1}},
                                {Square{EdgeStep{0, 1}, EdgeStep{0, 1}, EdgeStep{0, -1}, EdgeStep{0, -1}}}),
                    InputError);
}
