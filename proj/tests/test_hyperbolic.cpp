#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "raag/errors.hpp"
#include "raag/hyperbolic.hpp"

using namespace raag;
using testing::el;
using testing::one;

namespace {

PeriodicRay ray(const GraphPtr& g, const std::string& base, const std::string& period) {
    return PeriodicRay(el(g, base), el(g, period));
}

// Four-point condition by direct enumeration in the product model.
std::int64_t brute_delta_twice(const GraphPtr& g, std::size_t radius) {
    oracle::Model m(*g);
    auto pts = m.ball(m.one(), radius);
    auto d = [&](const auto& a, const auto& b) { return static_cast<std::int64_t>(m.dist(a, b)); };
    std::int64_t best = 0;
    for (const auto& w : pts) {
        for (const auto& x : pts) {
            for (const auto& y : pts) {
                for (const auto& z : pts) {
                    auto p = [&](const auto& s, const auto& t) { return d(s, w) + d(t, w) - d(s, t); };
                    best = std::max(best, std::min(p(x, y), p(y, z)) - p(x, z));
                }
            }
        }
    }
    return best;
}

} // namespace

TEST_CASE("Gromov product examples") {
    auto f2 = fixtures::free2();
    auto z2 = fixtures::z2();
    CHECK(gromov_product(el(f2, "a b"), el(f2, "a b"), one(f2)) == HalfInteger{4});
    CHECK(gromov_product(el(f2, "a a"), el(f2, "a b"), one(f2)) == HalfInteger{2});
    CHECK(gromov_product(el(z2, "a"), el(z2, "b"), one(z2)) == HalfInteger{0});
    CHECK(gromov_product(el(z2, "a"), el(z2, "b a"), one(z2)).to_string() == "1");
    CHECK(HalfInteger{3}.to_string() == "3/2");
    CHECK(HalfInteger{6}.to_string() == "3");
    CHECK(HalfInteger{3}.value() == 1.5);
}

TEST_CASE("Gromov products are symmetric and nonnegative") {
    auto g = fixtures::path3();
    auto pts = ball(one(g), 2);
    for (const auto& x : pts) {
        for (const auto& y : pts) {
            auto p = gromov_product(x, y, el(g, "b"));
            CHECK(p.twice >= 0);
            CHECK(p == gromov_product(y, x, el(g, "b")));
        }
    }
}

TEST_CASE("delta estimates") {
    auto f2 = fixtures::free2();
    auto z2 = fixtures::z2();
    CHECK(delta_estimate(one(z2), 0, 5) == HalfInteger{0});
    CHECK(delta_estimate(one(f2), 3, 5) == HalfInteger{0});
    auto dz = delta_estimate(one(z2), 3, 5);
    CHECK(dz.twice > 0);
    CHECK(dz.twice == brute_delta_twice(z2, 3));
    CHECK(delta_estimate(one(fixtures::path3()), 2, 5).twice == brute_delta_twice(fixtures::path3(), 2));
    CHECK_THROWS_AS(delta_estimate(one(z2), 6, 5), DomainError);
    CHECK_THROWS_AS(delta_estimate_serial(one(z2), 6, 5), DomainError);
}

TEST_CASE("parallel and serial delta agree") {
    for (const auto& g : {fixtures::free2(), fixtures::z2(), fixtures::path3(), fixtures::triangle()}) {
        for (std::size_t r = 0; r <= 2; ++r) CHECK(delta_estimate(el(g, "a"), r, 5) == delta_estimate_serial(el(g, "a"), r, 5));
    }
}

TEST_CASE("trees are 0-hyperbolic on every ball") {
    auto f2 = fixtures::free2();
    for (std::size_t r = 0; r <= 3; ++r) CHECK(delta_estimate(one(f2), r, 5) == HalfInteger{0});
}

TEST_CASE("boundary equality examples") {
    auto f2 = fixtures::free2();
    auto z2 = fixtures::z2();
    auto same = gromov_boundary_equal(ray(f2, "", "a"), ray(f2, "", "a"), 32);
    CHECK(same.kind == BoundaryVerdict::Kind::Equal);
    CHECK(same.exact);
    auto diff = gromov_boundary_equal(ray(f2, "", "a"), ray(f2, "b", "a"), 32);
    CHECK(diff.kind == BoundaryVerdict::Kind::Distinct);
    CHECK(diff.exact);
    // same end reached along different prefixes
    CHECK(gromov_boundary_equal(ray(f2, "", "a"), ray(f2, "a a", "a"), 32).kind == BoundaryVerdict::Kind::Equal);
    CHECK(gromov_boundary_equal(ray(f2, "", "a b"), ray(f2, "a", "b a"), 32).kind == BoundaryVerdict::Kind::Equal);

    auto flat = gromov_boundary_equal(ray(z2, "", "a"), ray(z2, "b", "a"), 32);
    CHECK(flat.kind == BoundaryVerdict::Kind::Equal);
    CHECK_FALSE(flat.exact);
    CHECK(flat.separating.size() == 1);
}

TEST_CASE("tree boundary equality is an equivalence") {
    auto f2 = fixtures::free2();
    std::vector<PeriodicRay> fam{ray(f2, "", "a"),     ray(f2, "b", "a"),   ray(f2, "", "b"),   ray(f2, "a", "a"),
                                 ray(f2, "", "a b"),   ray(f2, "a", "b a"), ray(f2, "", "b a"), ray(f2, "b", "b"),
                                 ray(f2, "a^-1", "b"), ray(f2, "", "a^-1")};
    auto eq = [&](std::size_t i, std::size_t j) {
        auto v = gromov_boundary_equal(fam[i], fam[j], 32);
        CHECK(v.exact);
        return v.kind == BoundaryVerdict::Kind::Equal;
    };
    for (std::size_t i = 0; i < fam.size(); ++i) {
        CHECK(eq(i, i));
        for (std::size_t j = 0; j < fam.size(); ++j) {
            CHECK(eq(i, j) == eq(j, i));
            for (std::size_t k = 0; k < fam.size(); ++k) {
                if (eq(i, j) && eq(j, k)) CHECK(eq(i, k));
            }
        }
    }
}

TEST_CASE("finite separation gives equal boundary points") {
    for (const auto& g : {fixtures::z2(), fixtures::path3()}) {
        std::vector<PeriodicRay> fam;
        for (const auto& b : ball(one(g), 1)) {
            for (const auto& v : g->names()) {
                try {
                    PeriodicRay r(b, el(g, v));
                    r.path(24);
                    fam.push_back(r);
                } catch (const DomainError&) {
                }
            }
        }
        for (const auto& r1 : fam) {
            for (const auto& r2 : fam) {
                auto sep = separating_hyperplanes(r1, r2, 24);
                if (sep.exact) CHECK(gromov_boundary_equal(r1, r2, 24).kind == BoundaryVerdict::Kind::Equal);
            }
        }
    }
}

TEST_CASE("fiber samples") {
    auto f2 = fixtures::free2();
    auto z2 = fixtures::z2();
    auto one_ray = fiber_sample({ray(f2, "", "a")}, 32);
    CHECK(one_ray.classes.size() == 1);
    CHECK(one_ray.max_class == 1);
    auto three = fiber_sample({ray(f2, "", "a"), ray(f2, "b", "a"), ray(f2, "", "b")}, 32);
    CHECK(three.classes.size() == 3);
    CHECK_FALSE(three.violation);
    auto east = fiber_sample({ray(z2, "", "a"), ray(z2, "b", "a"), ray(z2, "b b", "a")}, 32);
    CHECK(east.classes.size() == 1);
    CHECK(east.max_class == 3);
    CHECK(east.bound == 3);
    CHECK_FALSE(east.violation);
    CHECK(east.isolated.empty());
}
