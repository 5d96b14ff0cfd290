#ifndef SPLITCUT_VERTEX_SET_HPP
#define SPLITCUT_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace splitcut {

using Vertex = std::uint32_t;

/**
 * Dense bit-indexed subset of the vertex universe 0..universe()-1.
 *
 * Words beyond the universe are kept zero, so popcount-based queries never
 * need masking.
 */
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet full(std::size_t universe);
    static VertexSet from_vector(std::size_t universe, const std::vector<Vertex> &members);

    std::size_t universe() const { return universe_; }
    std::size_t count() const;
    bool empty() const;

    bool contains(Vertex v) const {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
    }

    void insert(Vertex v);
    void erase(Vertex v);

    /// Members in ascending order.
    std::vector<Vertex> members() const;

    template <typename F>
    void for_each(F &&f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    /// |*this ∩ other| without materializing the intersection.
    std::size_t intersect_count(const VertexSet &other) const;
    bool intersects(const VertexSet &other) const;
    bool is_subset_of(const VertexSet &other) const;

    /// Universe minus this set.
    VertexSet complement() const;

    VertexSet &operator|=(const VertexSet &other);
    VertexSet &operator&=(const VertexSet &other);
    VertexSet &operator-=(const VertexSet &other);

    friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

    const std::vector<std::uint64_t> &words() const { return words_; }

private:
    void check_universe(const VertexSet &other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace splitcut

#endif // SPLITCUT_VERTEX_SET_HPP
