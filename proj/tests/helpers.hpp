#pragma once

#include <string>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace testing {

inline raag::GroupElement el(const raag::GraphPtr& g, const std::string& w) { return raag::parse_element(g, w); }
inline raag::GroupElement one(const raag::GraphPtr& g) { return raag::GroupElement(g); }
inline raag::VertexSet set(const raag::GraphPtr& g, std::initializer_list<std::string> names) {
    return g->set_of(std::vector<std::string>(names));
}

} // namespace testing
