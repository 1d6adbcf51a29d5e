#include "raag/cube.hpp"

#include <algorithm>
#include <set>

#include <omp.h>

#include "raag/errors.hpp"

namespace raag {

Hyperplane::Hyperplane(VertexId label, const GroupElement& carrier_point)
    : label_(label),
      base_(StandardCoset(carrier_point, carrier_point.graph().link(label)).base()) {}

Hyperplane hyperplane_of_edge(const GroupElement& x, Letter letter) {
    if (letter.vertex >= x.graph().size()) throw DomainError("letter is not over the ambient graph");
    if (letter.sign > 0) return Hyperplane(letter.vertex, x);
    return Hyperplane(letter.vertex, x * letter);
}

HyperplaneList dual_hyperplanes(const GroupElement& a, const GroupElement& b) {
    require_same_graph(a, b);
    GroupElement path = a.inverse() * b;
    HyperplaneList out;
    out.reserve(path.length());
    GroupElement at = a;
    for (const Letter& x : path.letters()) {
        out.push_back(hyperplane_of_edge(at, x));
        at = at * x;
    }
    return out;
}

Side side(const Hyperplane& h, const GroupElement& x) {
    require_same_graph(h.base(), x);
    GroupElement rel = h.base().inverse() * x;
    return has_left_divisor(rel.letters(), Letter{h.label(), 1}, x.graph()) ? Side::Plus : Side::Minus;
}

bool separates(const Hyperplane& h, const GroupElement& a, const GroupElement& b) {
    return side(h, a) != side(h, b);
}

std::size_t distance(const GroupElement& a, const GroupElement& b) {
    return (a.inverse() * b).length();
}

StandardCoset carrier_coset(const Hyperplane& h) {
    return StandardCoset(h.base(), h.base().graph().link(h.label()));
}

std::size_t distance_to_hyperplane(const GroupElement& x, const Hyperplane& h) {
    StandardCoset near = carrier_coset(h);
    if (side(h, x) == Side::Plus) near = StandardCoset(h.base() * Letter{h.label(), 1}, near.generators());
    return distance(x, gate_point(x, near));
}

namespace {

// Removes the left divisor x from a geodesic word that has it.
void strip_left_letter(Word& w, Letter x) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].vertex == x.vertex) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            return;
        }
    }
}

} // namespace

GroupElement median(const GroupElement& a, const GroupElement& b, const GroupElement& c) {
    require_same_graph(a, b);
    require_same_graph(a, c);
    const DefiningGraph& g = a.graph();
    Word u = (a.inverse() * b).letters();
    Word w = (a.inverse() * c).letters();
    Word common;
    for (bool progress = true; progress;) {
        progress = false;
        VertexSet before;
        for (const Letter x : u) {
            if (before.subset_of(g.link(x.vertex)) && has_left_divisor(w, x, g)) {
                common.push_back(x);
                strip_left_letter(u, x);
                strip_left_letter(w, x);
                progress = true;
                break;
            }
            before.insert(x.vertex);
        }
    }
    return a * GroupElement(a.graph_ptr(), common);
}

bool hyperplanes_cross(const Hyperplane& h, const Hyperplane& k) {
    require_same_graph(h.base(), k.base());
    if (!h.base().graph().adjacent(h.label(), k.label())) return false;
    return coset_distance(carrier_coset(h), carrier_coset(k)) == 0;
}

bool hyperplanes_contact(const Hyperplane& h, const Hyperplane& k) {
    if (h == k) return true;
    StandardCoset ch = carrier_coset(h);
    StandardCoset ck = carrier_coset(k);
    StandardCoset chv(h.base() * Letter{h.label(), 1}, ch.generators());
    StandardCoset ckv(k.base() * Letter{k.label(), 1}, ck.generators());
    for (const auto* x : {&ch, &chv}) {
        for (const auto* y : {&ck, &ckv}) {
            if (coset_distance(*x, *y) == 0) return true;
        }
    }
    return false;
}

namespace {

HyperplaneList ball_hyperplanes(const GroupElement& center, std::size_t radius, std::size_t cap) {
    if (radius > cap) throw DomainError("contact graph radius exceeds the configured cap");
    if (radius == 0) return {};
    std::set<Hyperplane> found;
    for (const auto& x : ball(center, radius - 1)) {
        for (VertexId v = 0; v < x.graph().size(); ++v) found.insert(hyperplane_of_edge(x, Letter{v, 1}));
    }
    return {found.begin(), found.end()};
}

} // namespace

ContactGraph contact_graph_ball_serial(const GroupElement& center, std::size_t radius, std::size_t cap) {
    ContactGraph out{ball_hyperplanes(center, radius, cap), {}};
    const auto& hs = out.vertices;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            if (hyperplanes_contact(hs[i], hs[j])) out.edges.emplace_back(i, j);
        }
    }
    return out;
}

ContactGraph contact_graph_ball(const GroupElement& center, std::size_t radius, std::size_t cap) {
    ContactGraph out{ball_hyperplanes(center, radius, cap), {}};
    const auto& hs = out.vertices;
    const auto n = static_cast<std::ptrdiff_t>(hs.size());
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rows(hs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        auto ui = static_cast<std::size_t>(i);
        for (std::size_t j = ui + 1; j < hs.size(); ++j) {
            if (hyperplanes_contact(hs[ui], hs[j])) rows[ui].emplace_back(ui, j);
        }
    }
    for (auto& r : rows) out.edges.insert(out.edges.end(), r.begin(), r.end());
    return out;
}

} // namespace raag
