#include "splitcut/vertex_set.hpp"

#include "splitcut/errors.hpp"

#include <string>

namespace splitcut {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

} // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) { return VertexSet(universe).complement(); }

VertexSet VertexSet::from_vector(std::size_t universe, const std::vector<Vertex> &members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
}

std::size_t VertexSet::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const {
    for (std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_)
        throw PreconditionError("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe_));
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    if (v >= universe_) return;
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::size_t VertexSet::intersect_count(const VertexSet &other) const {
    check_universe(other);
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
        total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    return total;
}

bool VertexSet::intersects(const VertexSet &other) const {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet &other) const {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
}

VertexSet VertexSet::complement() const {
    VertexSet out(universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
    if (const std::size_t tail = universe_ & 63; tail != 0)
        out.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return out;
}

VertexSet &VertexSet::operator|=(const VertexSet &other) {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

VertexSet &VertexSet::operator&=(const VertexSet &other) {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

VertexSet &VertexSet::operator-=(const VertexSet &other) {
    check_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

void VertexSet::check_universe(const VertexSet &other) const {
    if (universe_ != other.universe_)
        throw PreconditionError("vertex sets over different universes (" + std::to_string(universe_) + " vs " +
                                std::to_string(other.universe_) + ")");
}

} // namespace splitcut
