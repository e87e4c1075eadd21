#ifndef MBD_BITSET_HPP
#define MBD_BITSET_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>

namespace mbd {

// Width of a VertexSet in bits. All graphs handled by this library must fit
// in this many vertices. Two 64-bit words cover every instance in scope with
// room to spare; bump MBD_VERTEX_CAPACITY at configure time if ever needed.
#ifndef MBD_VERTEX_CAPACITY
#define MBD_VERTEX_CAPACITY 128
#endif

inline constexpr int kVertexCapacity = MBD_VERTEX_CAPACITY;
inline constexpr int kWords = (kVertexCapacity + 63) / 64;

/// Fixed-width set of vertex indices, stored as a bit mask.
struct VertexSet {
    std::array<std::uint64_t, kWords> w{};

    static VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    /// Set containing vertices 0..n-1.
    static VertexSet first_n(int n) {
        VertexSet s;
        for (int i = 0; i < kWords; ++i) {
            int lo = i * 64;
            if (n >= lo + 64)
                s.w[i] = ~0ULL;
            else if (n > lo)
                s.w[i] = (~0ULL) >> (64 - (n - lo));
        }
        return s;
    }

    void set(int v) { w[v >> 6] |= 1ULL << (v & 63); }
    void reset(int v) { w[v >> 6] &= ~(1ULL << (v & 63)); }
    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }

    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }

    /// Index of the lowest set bit; undefined on the empty set.
    int lowest() const {
        for (int i = 0; i < kWords; ++i)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return -1;
    }

    bool contains_all(const VertexSet& o) const {  // o subseteq this
        for (int i = 0; i < kWords; ++i)
            if (o.w[i] & ~w[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }

    VertexSet operator|(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kWords; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kWords; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    VertexSet operator-(const VertexSet& o) const {  // set difference
        VertexSet r;
        for (int i = 0; i < kWords; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w[i] |= o.w[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w[i] &= o.w[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w[i] &= ~o.w[i];
        return *this;
    }

    bool operator==(const VertexSet& o) const = default;

    /// Three-way order on the raw words (for deterministic sorting).
    auto operator<=>(const VertexSet& o) const {
        for (int i = kWords - 1; i >= 0; --i) {
            if (w[i] != o.w[i]) return w[i] <=> o.w[i];
        }
        return std::strong_ordering::equal;
    }

    /// Call f(v) for each member, ascending.
    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                int v = i * 64 + std::countr_zero(x);
                f(v);
                x &= x - 1;
            }
        }
    }
};

inline std::uint64_t splitmix64(std::uint64_t h) {
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
    return h;
}

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : s.w) h = splitmix64(h ^ x);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace mbd

#endif
