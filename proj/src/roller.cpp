#include "raag/roller.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "raag/errors.hpp"

namespace raag {

PeriodicRay::PeriodicRay(GroupElement base, GroupElement period)
    : base_(std::move(base)), period_(std::move(period)) {
    require_same_graph(base_, period_);
    if (period_.is_identity()) throw DomainError("ray period must be nontrivial");
}

Letter PeriodicRay::step(std::size_t j) const {
    const Word& g = base_.letters();
    const Word& w = period_.letters();
    if (j == 0) throw std::out_of_range("ray steps are 1-based");
    if (j <= g.size()) return g[j - 1];
    return w[(j - 1 - g.size()) % w.size()];
}

std::vector<GroupElement> PeriodicRay::path(std::size_t depth) const {
    std::vector<GroupElement> out;
    out.reserve(depth + 1);
    out.emplace_back(base_.graph_ptr());
    for (std::size_t j = 1; j <= depth; ++j) {
        GroupElement next = out.back() * step(j);
        if (next.length() != j) {
            throw DomainError("ray is not geodesic at path index " + std::to_string(j));
        }
        out.push_back(std::move(next));
    }
    return out;
}

GroupElement ray_vertex(const PeriodicRay& ray, std::size_t k) {
    return ray.path(ray.base().length() + k).back();
}

VertexSet infinite_label_classes(const PeriodicRay& ray) {
    ray.path(ray.base().length() + 2 * ray.period().length());
    return ray.period().support();
}

HyperplaneList ray_hyperplanes(const PeriodicRay& ray, std::size_t depth) {
    auto vertices = ray.path(depth);
    HyperplaneList out;
    out.reserve(depth);
    for (std::size_t j = 1; j <= depth; ++j) out.push_back(hyperplane_of_edge(vertices[j - 1], ray.step(j)));
    return out;
}

namespace {

// Label-i hyperplanes crossed by the first `horizon` edges, with distances
// from recently seen points.  Callers sweep many points against one ray, so
// the last ray per thread is kept.
struct SpectrumMemo {
    struct Point {
        std::vector<SpectrumEntry> near;      // in H(1, x) but not crossed
        std::vector<std::size_t> crossed;     // d(x, crossed[j]), filled lazily
        std::vector<bool> skip;               // crossed[j] also in H(1, x)
    };
    std::optional<PeriodicRay> ray;
    VertexId label = 0;
    std::size_t horizon = 0;
    HyperplaneList crossed;
    std::unordered_map<Hyperplane, std::size_t, HyperplaneHash> index;
    std::unordered_map<GroupElement, Point, GroupElementHash> points;
};

SpectrumMemo& spectrum_memo(const PeriodicRay& ray, VertexId label, std::size_t horizon) {
    thread_local SpectrumMemo memo;
    if (!memo.ray || memo.ray->graph_ptr() != ray.graph_ptr() || !(*memo.ray == ray) || memo.label != label ||
        memo.horizon != horizon) {
        memo = SpectrumMemo{};
        memo.ray = ray;
        memo.label = label;
        memo.horizon = horizon;
        for (auto& h : ray_hyperplanes(ray, horizon)) {
            if (h.label() != label) continue;
            memo.index.emplace(h, memo.crossed.size());
            memo.crossed.push_back(std::move(h));
        }
    }
    if (memo.points.size() > 4096) memo.points.clear();
    return memo;
}

constexpr std::size_t unknown = std::numeric_limits<std::size_t>::max();

} // namespace

LabelSpectrum label_spectrum(const PeriodicRay& ray, const GroupElement& x, VertexId label,
                             std::size_t k, std::size_t horizon) {
    require_same_graph(ray.base(), x);
    if (label >= x.graph().size()) throw DomainError("unknown label");
    if (horizon < ray.base().length() + ray.period().length()) {
        throw Indeterminate("horizon shorter than base plus one period");
    }
    SpectrumMemo& memo = spectrum_memo(ray, label, horizon);
    const HyperplaneList& crossed = memo.crossed;
    auto [it, fresh] = memo.points.try_emplace(x);
    SpectrumMemo::Point& pt = it->second;
    // Members of H(1, x) that are also crossed drop out of H(x, xi).
    if (fresh) {
        pt.crossed.assign(crossed.size(), unknown);
        pt.skip.assign(crossed.size(), false);
        for (auto& h : dual_hyperplanes(GroupElement(x.graph_ptr()), x)) {
            if (h.label() != label) continue;
            auto c = memo.index.find(h);
            if (c != memo.index.end()) pt.skip[c->second] = true;
            else pt.near.push_back({h, distance_to_hyperplane(x, h)});
        }
    }
    const bool finite = !ray.period().support().contains(label);

    // H(x, xi) = H(x, 1) symmetric-difference H(1, xi).  Its members are
    // nested, so their distances from x are distinct.
    LabelSpectrum out;
    out.label = label;
    auto& found = out.entries;
    found = pt.near;
    // The j-th crossed hyperplane has j others between it and 1, so it is at
    // least j - |x| from x; stop once that passes the k-th best distance.
    auto kth = [&] {
        if (finite || found.size() < k) return unknown;
        std::vector<std::size_t> d;
        for (const auto& e : found) d.push_back(e.distance);
        std::nth_element(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k - 1), d.end());
        return d[k - 1];
    };
    std::size_t limit = kth();
    for (std::size_t j = 0; j < crossed.size(); ++j) {
        if (j > x.length() && j - x.length() > limit) break;
        if (pt.skip[j]) continue;
        if (pt.crossed[j] == unknown) pt.crossed[j] = distance_to_hyperplane(x, crossed[j]);
        found.push_back({crossed[j], pt.crossed[j]});
        if (k > 0 && found.size() >= k) limit = kth();
    }
    std::sort(found.begin(), found.end(),
              [](const SpectrumEntry& p, const SpectrumEntry& q) { return p.distance < q.distance; });

    if (finite) {
        out.complete = true;
        if (found.size() > k) found.erase(found.begin() + static_cast<std::ptrdiff_t>(k), found.end());
        return out;
    }
    // A label-i hyperplane crossed after the horizon lies beyond all m
    // crossed ones, so it is at distance >= m from 1 and >= m - |x| from x.
    const std::size_t m = crossed.size();
    if (m < x.length()) throw Indeterminate("horizon too short for the spectrum at this point");
    const std::size_t bound = m - x.length();
    std::size_t certified = 0;
    while (certified < found.size() && found[certified].distance < bound) ++certified;
    if (certified < k) throw Indeterminate("horizon too short to certify the first k spectrum entries");
    found.erase(found.begin() + static_cast<std::ptrdiff_t>(k), found.end());
    return out;
}

bool order_consistency_check(const PeriodicRay& ray, const GroupElement& x, const GroupElement& y,
                             VertexId label, std::size_t k, std::size_t horizon) {
    LabelSpectrum sx = label_spectrum(ray, x, label, k, horizon);
    LabelSpectrum sy = label_spectrum(ray, y, label, k, horizon);
    std::unordered_set<Hyperplane, HyperplaneHash> in_x;
    std::unordered_set<Hyperplane, HyperplaneHash> in_y;
    for (const auto& e : sx.entries) in_x.insert(e.hyperplane);
    for (const auto& e : sy.entries) in_y.insert(e.hyperplane);
    HyperplaneList from_x;
    HyperplaneList from_y;
    for (const auto& e : sx.entries) if (in_y.contains(e.hyperplane)) from_x.push_back(e.hyperplane);
    for (const auto& e : sy.entries) if (in_x.contains(e.hyperplane)) from_y.push_back(e.hyperplane);
    return from_x == from_y;
}

bool hyperplane_meets_coset(const Hyperplane& h, const StandardCoset& Q) {
    return Q.generators().contains(h.label()) && coset_distance(carrier_coset(h), Q) == 0;
}

namespace {

GroupElement power(const GroupElement& w, std::size_t n) {
    GroupElement out(w.graph_ptr());
    for (std::size_t i = 0; i < n; ++i) out = out * w;
    return out;
}

// Both tails are p W^n and q W^n with p^-1 q commuting letterwise with W;
// then H(xi, eta) = H(p, q).
std::optional<HyperplaneList> parallel_certificate(const PeriodicRay& r1, const PeriodicRay& r2,
                                                   std::size_t horizon) {
    const DefiningGraph& g = r1.base().graph();
    const std::size_t l1 = r1.period().length();
    const std::size_t l2 = r2.period().length();
    const std::size_t g1 = r1.base().length();
    const std::size_t g2 = r2.base().length();
    if (horizon < g1 || horizon < g2) return std::nullopt;
    const std::size_t n1_max = (horizon - g1) / l1;
    const std::size_t n2_max = (horizon - g2) / l2;
    for (std::size_t a = 1; a <= 4; ++a) {
        for (std::size_t b = 1; b <= 4; ++b) {
            GroupElement W = power(r1.period(), a);
            if (W != power(r2.period(), b)) continue;
            VertexSet centraliser = g.all();
            for (VertexId s : W.support().members()) centraliser &= g.link(s);
            for (std::size_t total = 0; total <= n1_max + n2_max; ++total) {
                for (std::size_t n1 = 0; n1 <= std::min(total, n1_max); ++n1) {
                    std::size_t n2 = total - n1;
                    if (n2 > n2_max) continue;
                    GroupElement p = r1.base() * power(r1.period(), n1);
                    GroupElement q = r2.base() * power(r2.period(), n2);
                    GroupElement c = p.inverse() * q;
                    if (c.support().subset_of(centraliser)) {
                        HyperplaneList hs = dual_hyperplanes(p, q);
                        std::sort(hs.begin(), hs.end());
                        return hs;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

StandardCoset tail_coset(const PeriodicRay& r, std::size_t horizon) {
    std::size_t n = (horizon - r.base().length()) / r.period().length();
    return StandardCoset(r.base() * power(r.period(), n), r.period().support());
}

} // namespace

SeparatorVerdict separating_hyperplanes(const PeriodicRay& r1, const PeriodicRay& r2, std::size_t horizon) {
    require_same_graph(r1.base(), r2.base());
    HyperplaneList c1 = ray_hyperplanes(r1, horizon);
    HyperplaneList c2 = ray_hyperplanes(r2, horizon);
    if (auto exact = parallel_certificate(r1, r2, horizon)) return SeparatorVerdict{true, std::move(*exact)};

    SeparatorVerdict out;
    if (horizon < r1.base().length() || horizon < r2.base().length()) return out;
    std::set<Hyperplane> s1(c1.begin(), c1.end());
    std::set<Hyperplane> s2(c2.begin(), c2.end());
    StandardCoset q1 = tail_coset(r1, horizon);
    StandardCoset q2 = tail_coset(r2, horizon);
    // Crossed by one ray and never by the other: the other tail stays in a
    // convex coset that h does not meet.
    std::set<Hyperplane> certain;
    for (const auto& h : s1) {
        if (!s2.contains(h) && !hyperplane_meets_coset(h, q2)) certain.insert(h);
    }
    for (const auto& h : s2) {
        if (!s1.contains(h) && !hyperplane_meets_coset(h, q1)) certain.insert(h);
    }
    out.hyperplanes.assign(certain.begin(), certain.end());
    return out;
}

Adjacency roller_adjacent(const PeriodicRay& r1, const PeriodicRay& r2, std::size_t horizon) {
    SeparatorVerdict v = separating_hyperplanes(r1, r2, horizon);
    if (v.exact) return v.hyperplanes.size() == 1 ? Adjacency::Adjacent : Adjacency::NotAdjacent;
    if (v.at_least() >= 2) return Adjacency::NotAdjacent;
    return Adjacency::Indeterminate;
}

} // namespace raag
