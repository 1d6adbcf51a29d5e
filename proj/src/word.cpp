#include "raag/word.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "raag/errors.hpp"

namespace raag {

bool push_reduced(Word& w, Letter x, const DefiningGraph& g) {
    for (std::size_t i = w.size(); i-- > 0;) {
        const Letter& y = w[i];
        if (y.vertex == x.vertex) {
            if (y.sign != x.sign) {
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
                return true;
            }
            break;
        }
        if (!g.adjacent(y.vertex, x.vertex)) break;
    }
    w.push_back(x);
    return false;
}

Word shortlex(const Word& reduced, const DefiningGraph& g) {
    Word rest = reduced;
    Word out;
    out.reserve(rest.size());
    while (!rest.empty()) {
        // A letter can move to the front iff every letter before it commutes
        // with it.
        VertexSet before;
        std::size_t best = 0;
        unsigned best_key = ~0U;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            VertexId v = rest[i].vertex;
            if (before.subset_of(g.link(v)) && rest[i].key() < best_key) {
                best = i;
                best_key = rest[i].key();
            }
            before.insert(v);
        }
        out.push_back(rest[best]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

std::pair<Word, Word> split_left_divisor(const Word& w, VertexSet U, const DefiningGraph& g) {
    Word prefix;
    Word rest;
    VertexSet blocked;
    for (const Letter& x : w) {
        if (U.contains(x.vertex) && blocked.subset_of(g.link(x.vertex))) {
            prefix.push_back(x);
        } else {
            rest.push_back(x);
            blocked.insert(x.vertex);
        }
    }
    return {std::move(prefix), std::move(rest)};
}

bool has_left_divisor(const Word& w, Letter x, const DefiningGraph& g) {
    for (const Letter& y : w) {
        if (y.vertex == x.vertex) return y.sign == x.sign;
        if (!g.adjacent(y.vertex, x.vertex)) return false;
    }
    return false;
}

GroupElement::GroupElement(GraphPtr graph) : graph_(std::move(graph)) {}

GroupElement::GroupElement(GraphPtr graph, Word normal, bool) : graph_(std::move(graph)), word_(std::move(normal)) {}

GroupElement::GroupElement(GraphPtr graph, const Word& word) : graph_(std::move(graph)) {
    const DefiningGraph& g = *graph_;
    Word reduced;
    reduced.reserve(word.size());
    for (const Letter& x : word) {
        if (x.vertex >= g.size() || (x.sign != 1 && x.sign != -1)) {
            throw DomainError("letter is not over the ambient graph");
        }
        push_reduced(reduced, x, g);
    }
    word_ = shortlex(reduced, g);
}

GroupElement GroupElement::generator(GraphPtr graph, VertexId v, int sign) {
    return GroupElement(std::move(graph), Word{Letter{v, static_cast<std::int8_t>(sign)}});
}

VertexSet GroupElement::support() const {
    VertexSet s;
    for (const Letter& x : word_) s.insert(x.vertex);
    return s;
}

GroupElement GroupElement::inverse() const {
    Word w;
    w.reserve(word_.size());
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) w.push_back(it->inverse());
    return GroupElement(graph_, shortlex(w, *graph_), true);
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
    require_same_graph(*this, other);
    Word w = word_;
    for (const Letter& x : other.word_) push_reduced(w, x, *graph_);
    return GroupElement(graph_, shortlex(w, *graph_), true);
}

GroupElement GroupElement::operator*(Letter x) const {
    if (x.vertex >= graph_->size()) throw DomainError("letter is not over the ambient graph");
    Word w = word_;
    push_reduced(w, x, *graph_);
    return GroupElement(graph_, shortlex(w, *graph_), true);
}

std::strong_ordering GroupElement::operator<=>(const GroupElement& o) const {
    if (auto c = word_.size() <=> o.word_.size(); c != 0) return c;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (auto c = word_[i].key() <=> o.word_[i].key(); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::size_t GroupElement::hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (const Letter& x : word_) {
        h ^= x.key() + 1;
        h *= 1099511628211ULL;
    }
    return h;
}

GroupElement normal_form(const GraphPtr& graph, const Word& word) { return GroupElement(graph, word); }
GroupElement multiply(const GroupElement& g, const GroupElement& h) { return g * h; }
GroupElement invert(const GroupElement& g) { return g.inverse(); }
std::size_t geodesic_length(const GroupElement& g) { return g.length(); }
VertexSet support(const GroupElement& g) { return g.support(); }
bool in_standard_subgroup(const GroupElement& g, VertexSet U) { return g.support().subset_of(U); }

void require_same_graph(const GroupElement& a, const GroupElement& b) {
    if (a.graph_ptr() != b.graph_ptr() && !(a.graph() == b.graph())) {
        throw DomainError("group elements live over different defining graphs");
    }
}

Word parse_word(const DefiningGraph& g, std::string_view text) {
    Word w;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        if (tok == "1" && !g.has_vertex(tok)) continue;  // explicit identity
        std::int8_t sign = 1;
        std::string name = tok;
        if (auto pos = tok.find('^'); pos != std::string::npos) {
            std::string exp = tok.substr(pos + 1);
            name = tok.substr(0, pos);
            if (exp == "-1") {
                sign = -1;
            } else if (exp != "1") {
                throw InputError("malformed word token: " + tok);
            }
        }
        if (!g.has_vertex(name)) throw InputError("word token is not a generator: " + tok);
        w.push_back(Letter{g.index(name), sign});
    }
    return w;
}

GroupElement parse_element(const GraphPtr& g, std::string_view text) {
    return GroupElement(g, parse_word(*g, text));
}

std::string format_word(const DefiningGraph& g, const Word& w) {
    std::string out;
    for (const Letter& x : w) {
        if (!out.empty()) out += ' ';
        out += g.name(x.vertex);
        if (x.sign < 0) out += "^-1";
    }
    return out;
}

std::string format(const GroupElement& x) { return format_word(x.graph(), x.letters()); }

std::vector<GroupElement> ball(const GroupElement& center, std::size_t radius) {
    const GraphPtr& g = center.graph_ptr();
    GroupElement one(g);
    std::vector<GroupElement> layer{one};
    std::vector<GroupElement> all{one};
    std::unordered_set<GroupElement, GroupElementHash> seen{one};
    for (std::size_t r = 0; r < radius; ++r) {
        std::vector<GroupElement> next;
        for (const auto& x : layer) {
            for (VertexId v = 0; v < g->size(); ++v) {
                for (int s : {1, -1}) {
                    GroupElement y = x * Letter{v, static_cast<std::int8_t>(s)};
                    if (seen.insert(y).second) next.push_back(y);
                }
            }
        }
        std::sort(next.begin(), next.end());
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    if (!center.is_identity()) {
        for (auto& x : all) x = center * x;
    }
    return all;
}

} // namespace raag
