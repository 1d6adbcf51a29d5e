#include "raag/cube_complex.hpp"

#include <algorithm>

#include "raag/errors.hpp"

namespace raag {

CubeComplex::CubeComplex(std::vector<std::string> vertices, std::vector<ComplexEdge> edges,
                         std::vector<Square> squares)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), squares_(std::move(squares)) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (e.src >= vertices_.size() || e.dst >= vertices_.size()) {
            throw InputError("edge " + e.id + " has an endpoint outside the vertex list");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (edges_[j].id == e.id) throw InputError("duplicate edge id: " + e.id);
        }
    }
    for (std::size_t q = 0; q < squares_.size(); ++q) {
        const Square& sq = squares_[q];
        for (int i = 0; i < 4; ++i) {
            const EdgeStep& s = sq[i];
            if (s.edge >= edges_.size() || (s.dir != 1 && s.dir != -1)) {
                throw InputError("malformed square " + std::to_string(q));
            }
        }
        for (int i = 0; i < 4; ++i) {
            if (end_of(sq[i]) != start_of(sq[(i + 1) % 4])) {
                throw InputError("square " + std::to_string(q) + " boundary does not close up");
            }
        }
    }
}

std::size_t CubeComplex::edge_index(const std::string& id) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].id == id) return i;
    }
    throw InputError("unknown edge id: " + id);
}

std::vector<HalfEdge> CubeComplex::half_edges_at(std::size_t v) const {
    std::vector<HalfEdge> out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].src == v) out.push_back({i, 0});
        if (edges_[i].dst == v) out.push_back({i, 1});
    }
    return out;
}

std::vector<Corner> CubeComplex::corners() const {
    std::vector<Corner> out;
    out.reserve(squares_.size() * 4);
    for (std::size_t q = 0; q < squares_.size(); ++q) {
        const Square& sq = squares_[q];
        for (int i = 0; i < 4; ++i) {
            const EdgeStep& in = sq[i];
            const EdgeStep& next = sq[(i + 1) % 4];
            Corner c;
            c.square = q;
            c.index = i;
            c.vertex = end_of(in);
            c.arriving = HalfEdge{in.edge, in.dir > 0 ? 1 : 0};
            c.leaving = HalfEdge{next.edge, next.dir > 0 ? 0 : 1};
            out.push_back(c);
        }
    }
    return out;
}

} // namespace raag
