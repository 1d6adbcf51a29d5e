#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "raag/cube.hpp"
#include "raag/cube_complex.hpp"
#include "raag/gates.hpp"
#include "raag/graph.hpp"
#include "raag/hyperbolic.hpp"
#include "raag/invariants.hpp"
#include "raag/roller.hpp"
#include "raag/special.hpp"

namespace raag {

using Json = nlohmann::ordered_json;

struct Config {
    std::size_t horizon = 64;
    std::size_t search_radius = 6;
    std::size_t ball_cap = 5;
    std::size_t dimension_cap = 3;
};

// Missing keys keep their defaults; InputError on unknown keys or values
// that are not positive integers.
Config config_from_json(const Json& j);
Json to_json(const Config& c);

// All readers throw InputError on malformed data.
GraphPtr graph_from_json(const Json& j);
Json to_json(const DefiningGraph& g);
// FNV-1a as 16 hex digits.
std::string digest(std::string_view text);
// Digest of the canonical text.
std::string graph_digest(const DefiningGraph& g);

// Word string; the identity is written "1".
GroupElement element_from_json(const GraphPtr& g, const Json& j);
Json to_json(const GroupElement& x);

StandardCoset coset_from_json(const GraphPtr& g, const Json& j);
Json to_json(const StandardCoset& c);

Hyperplane hyperplane_from_json(const GraphPtr& g, const Json& j);
Json to_json(const Hyperplane& h);
Json to_json(const HyperplaneList& hs);

HyperplaneSeq hyperplane_seq_from_json(const GraphPtr& g, const Json& j);
HyperplanePeriodicSeq periodic_seq_from_json(const GraphPtr& g, const Json& j);

PeriodicRay ray_from_json(const GraphPtr& g, const Json& j);
Json to_json(const PeriodicRay& r);

CubeComplex complex_from_json(const Json& j);
Json to_json(const CubeComplex& X);

// A map between complexes; "graph" names the Salvetti target's graph.
CombinatorialMap map_from_json(const Json& j);
Json to_json(const CombinatorialMap& m);

Json to_json(const GatePair& p);
Json to_json(const ClassifyingInvariant& f);
Json to_json(const SpecialReport& r, const CubeComplex& X);
Json to_json(const HalfInteger& v);

} // namespace raag
