#include "raag/hyperbolic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <omp.h>

#include "raag/errors.hpp"

namespace raag {

std::string HalfInteger::to_string() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

namespace {

std::int64_t dist(const GroupElement& a, const GroupElement& b) {
    return static_cast<std::int64_t>((a.inverse() * b).length());
}

// Per base point w: the doubled products P[x][y] over the ball.
struct Products {
    std::size_t n;
    std::vector<std::int64_t> d;  // n x n distances

    explicit Products(const std::vector<GroupElement>& pts) : n(pts.size()), d(n * n, 0) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) d[i * n + j] = d[j * n + i] = dist(pts[i], pts[j]);
        }
    }

    std::int64_t for_base(std::size_t w, std::vector<std::int64_t>& P) const {
        P.resize(n * n);
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) P[x * n + y] = d[x * n + w] + d[y * n + w] - d[x * n + y];
        }
        std::int64_t best = 0;
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                const std::int64_t pxy = P[x * n + y];
                const std::int64_t* py = &P[y * n];
                const std::int64_t* px = &P[x * n];
                for (std::size_t z = 0; z < n; ++z) best = std::max(best, std::min(pxy, py[z]) - px[z]);
            }
        }
        return best;
    }
};

std::vector<GroupElement> delta_ball(const GroupElement& center, std::size_t radius, std::size_t cap) {
    if (radius > cap) throw DomainError("delta radius exceeds the configured cap");
    return ball(center, radius);
}

} // namespace

GromovProduct gromov_product(const GroupElement& x, const GroupElement& y, const GroupElement& base) {
    require_same_graph(x, y);
    require_same_graph(x, base);
    return GromovProduct{dist(x, base) + dist(y, base) - dist(x, y)};
}

HalfInteger delta_estimate_serial(const GroupElement& center, std::size_t radius, std::size_t cap) {
    Products prod(delta_ball(center, radius, cap));
    std::vector<std::int64_t> P;
    std::int64_t best = 0;
    for (std::size_t w = 0; w < prod.n; ++w) best = std::max(best, prod.for_base(w, P));
    // Products are doubled, so the doubled delta is `best` itself.
    return HalfInteger{best};
}

HalfInteger delta_estimate(const GroupElement& center, std::size_t radius, std::size_t cap) {
    Products prod(delta_ball(center, radius, cap));
    const auto n = static_cast<std::ptrdiff_t>(prod.n);
    std::int64_t best = 0;
#pragma omp parallel reduction(max : best)
    {
        std::vector<std::int64_t> P;
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t w = 0; w < n; ++w) best = std::max(best, prod.for_base(static_cast<std::size_t>(w), P));
    }
    return HalfInteger{best};
}

BoundaryVerdict gromov_boundary_equal(const PeriodicRay& r1, const PeriodicRay& r2, std::size_t horizon) {
    require_same_graph(r1.base(), r2.base());
    BoundaryVerdict out;
    auto p1 = r1.path(horizon);
    auto p2 = r2.path(horizon);

    if (r1.base().graph().edge_count() == 0) {
        // In a tree geodesic rays from 1 to the same end coincide, so compare
        // the letter sequences over a full joint period.
        out.exact = true;
        const std::size_t pre = std::max(r1.base().length(), r2.base().length());
        const std::size_t span = pre + std::lcm(r1.period().length(), r2.period().length());
        bool same = true;
        for (std::size_t j = 1; j <= span && same; ++j) same = r1.step(j) == r2.step(j);
        out.kind = same ? BoundaryVerdict::Kind::Equal : BoundaryVerdict::Kind::Distinct;
        return out;
    }

    SeparatorVerdict sep = separating_hyperplanes(r1, r2, horizon);
    if (sep.exact) {
        out.kind = BoundaryVerdict::Kind::Equal;
        out.separating = std::move(sep.hyperplanes);
        return out;
    }
    // Products (p_n, q_n)_1 that stop growing over the second half of the
    // horizon bound the two rays apart.
    GroupElement one(r1.graph_ptr());
    std::vector<HalfInteger> prods;
    for (std::size_t n = 0; n <= horizon; ++n) prods.push_back(gromov_product(p1[n], p2[n], one));
    const std::size_t half = horizon / 2;
    if (horizon >= 2 && std::all_of(prods.begin() + static_cast<std::ptrdiff_t>(half), prods.end(),
                                    [&](const HalfInteger& v) { return v == prods[half]; })) {
        out.kind = BoundaryVerdict::Kind::Distinct;
        out.bound = prods[half];
    }
    return out;
}

FiberReport fiber_sample(const std::vector<PeriodicRay>& rays, std::size_t horizon) {
    const std::size_t n = rays.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<bool> isolated(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            auto v = gromov_boundary_equal(rays[i], rays[j], horizon);
            if (v.kind == BoundaryVerdict::Kind::Equal) parent[find(j)] = find(i);
            else if (v.kind == BoundaryVerdict::Kind::Indeterminate) isolated[i] = isolated[j] = true;
        }
    }
    FiberReport rep;
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        if (isolated[i]) {
            rep.isolated.push_back(i);
            rep.classes.push_back({i});
        } else {
            groups[find(i)].push_back(i);
        }
    }
    for (auto& [root, members] : groups) rep.classes.push_back(std::move(members));
    std::sort(rep.classes.begin(), rep.classes.end());
    for (const auto& c : rep.classes) rep.max_class = std::max(rep.max_class, c.size());
    if (n > 0) {
        const std::size_t D = 2 * rays.front().base().graph().size();
        rep.bound = D - 2 + 1;
        rep.violation = rep.max_class > rep.bound;
    }
    return rep;
}

} // namespace raag
