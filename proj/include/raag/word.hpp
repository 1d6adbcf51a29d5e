#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

struct Letter {
    VertexId vertex = 0;
    std::int8_t sign = 1;

    Letter inverse() const { return {vertex, static_cast<std::int8_t>(-sign)}; }
    // ShortLex key: vertex order first, then v before v^-1.
    unsigned key() const { return vertex * 2U + (sign < 0 ? 1U : 0U); }

    bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Appends x to a geodesic word, cancelling against the last occurrence of
// x^-1 that can be shuffled to the end.  Returns true if a cancellation
// happened.  The result is geodesic but not necessarily ShortLex-least.
bool push_reduced(Word& w, Letter x, const DefiningGraph& g);

// ShortLex-least word among the shuffles of a geodesic word.
Word shortlex(const Word& reduced, const DefiningGraph& g);

// Splits a geodesic word into (p, r) with w = p r, where p is the maximal
// left divisor supported in U.
std::pair<Word, Word> split_left_divisor(const Word& w, VertexSet U, const DefiningGraph& g);

// True if x is a left divisor of the geodesic word w (x can be shuffled to
// the front).
bool has_left_divisor(const Word& w, Letter x, const DefiningGraph& g);

// Element of A(Γ) held in ShortLex normal form.
class GroupElement {
public:
    explicit GroupElement(GraphPtr graph);  // identity
    GroupElement(GraphPtr graph, const Word& word);

    static GroupElement generator(GraphPtr graph, VertexId v, int sign = 1);

    const GraphPtr& graph_ptr() const { return graph_; }
    const DefiningGraph& graph() const { return *graph_; }
    const Word& letters() const { return word_; }

    std::size_t length() const { return word_.size(); }
    bool is_identity() const { return word_.empty(); }
    VertexSet support() const;

    GroupElement inverse() const;
    GroupElement operator*(const GroupElement& other) const;
    GroupElement operator*(Letter x) const;

    bool operator==(const GroupElement& o) const { return word_ == o.word_; }
    // ShortLex order: length, then letter keys.
    std::strong_ordering operator<=>(const GroupElement& o) const;

    std::size_t hash() const;

private:
    GroupElement(GraphPtr graph, Word normal, bool /*already_normal*/);

    GraphPtr graph_;
    Word word_;
};

GroupElement normal_form(const GraphPtr& graph, const Word& word);
GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement invert(const GroupElement& g);
std::size_t geodesic_length(const GroupElement& g);
VertexSet support(const GroupElement& g);
bool in_standard_subgroup(const GroupElement& g, VertexSet U);

// Throws DomainError unless both elements live over the same graph.
void require_same_graph(const GroupElement& a, const GroupElement& b);

// Word syntax: whitespace-separated tokens, `v` or `v^-1`.
Word parse_word(const DefiningGraph& g, std::string_view text);
GroupElement parse_element(const GraphPtr& g, std::string_view text);
std::string format_word(const DefiningGraph& g, const Word& w);
std::string format(const GroupElement& x);

// All elements at distance <= radius from center, sorted by distance from
// center and then ShortLex of center^-1 x.
std::vector<GroupElement> ball(const GroupElement& center, std::size_t radius);

struct GroupElementHash {
    std::size_t operator()(const GroupElement& x) const { return x.hash(); }
};

} // namespace raag
