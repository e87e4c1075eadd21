#ifndef MBD_VALUES_HPP
#define MBD_VALUES_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace mbd {

/// Game outcome per the three realizable cases: Dominator wins both games,
/// Staller wins both, or the first player wins both.
enum class Outcome { D, S, N };

inline std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::D: return "D";
        case Outcome::S: return "S";
        default: return "N";
    }
}

/// Extended natural: a move count that may be infinite (player cannot win).
/// Infinity is absorbing under addition and is the maximum of the order.
struct MoveCount {
    static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

    std::uint32_t v = kInf;

    constexpr MoveCount() = default;
    constexpr explicit MoveCount(std::uint32_t value) : v(value) {}

    static constexpr MoveCount infinity() { return MoveCount(); }
    static constexpr MoveCount finite(std::uint32_t k) { return MoveCount(k); }

    constexpr bool is_infinite() const { return v == kInf; }
    constexpr bool is_finite() const { return v != kInf; }

    friend constexpr MoveCount operator+(MoveCount a, MoveCount b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        std::uint64_t s = std::uint64_t(a.v) + b.v;
        return s >= kInf ? infinity() : finite(static_cast<std::uint32_t>(s));
    }

    friend constexpr auto operator<=>(MoveCount a, MoveCount b) { return a.v <=> b.v; }
    friend constexpr bool operator==(MoveCount a, MoveCount b) = default;
};

inline MoveCount min(MoveCount a, MoveCount b) { return a < b ? a : b; }
inline MoveCount max(MoveCount a, MoveCount b) { return a < b ? b : a; }

inline std::string to_string(MoveCount c) {
    return c.is_infinite() ? "inf" : std::to_string(c.v);
}

}  // namespace mbd

#endif
