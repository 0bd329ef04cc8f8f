#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fanlike {

/// Largest vertex label a Face can hold.
inline constexpr int kMaxVertices = 64;

/// A set of vertex labels in 1..64, stored as a bit set (bit v-1 <=> vertex v).
/// The empty face is a valid value and stands for the empty simplex.
///
/// Ordering is shortlex: smaller faces first, then lexicographic on the sorted
/// label sequence. This is the order in which minimal non-faces are listed in
/// the catalog (`25, 57, 126, 1346, ...`).
class Face {
public:
    constexpr Face() = default;
    Face(std::initializer_list<int> vertices);
    explicit Face(std::span<const int> vertices);

    static constexpr Face from_bits(std::uint64_t bits) {
        Face f;
        f.bits_ = bits;
        return f;
    }
    /// The full vertex set {1..m}.
    static Face range(int m);

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool contains(int v) const noexcept {
        return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1U) != 0;
    }
    constexpr bool subset_of(Face other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Face other) const noexcept { return (bits_ & other.bits_) != 0; }

    /// Largest label, 0 for the empty face.
    constexpr int max_vertex() const noexcept { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }
    constexpr int min_vertex() const noexcept { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

    Face with(int v) const;
    Face without(int v) const;

    /// Sorted labels.
    std::vector<int> vertices() const;
    /// Position of v among the sorted labels, or -1.
    int index_of(int v) const noexcept;

    friend constexpr Face operator|(Face a, Face b) noexcept { return from_bits(a.bits_ | b.bits_); }
    friend constexpr Face operator&(Face a, Face b) noexcept { return from_bits(a.bits_ & b.bits_); }
    friend constexpr Face operator-(Face a, Face b) noexcept { return from_bits(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(Face a, Face b) noexcept = default;
    friend std::strong_ordering operator<=>(Face a, Face b) noexcept;

private:
    std::uint64_t bits_ = 0;
};

/// Compact notation: digits 1-9 and A=10, B=11, C=12, e.g. "679AB". Faces with
/// labels above 12 use the braced form "{1,10,13}".
std::string to_compact(Face f);
/// `{1, 3, 4}`.
std::string to_braced(Face f);
/// Accepts both the compact and the braced form; compact strings must be
/// strictly increasing. Throws Error(ParseError).
Face parse_face(std::string_view text);

}  // namespace fanlike

template <>
struct std::hash<fanlike::Face> {
    std::size_t operator()(fanlike::Face f) const noexcept {
        std::uint64_t x = f.bits() * 0x9E3779B97F4A7C15ULL;
        return static_cast<std::size_t>(x ^ (x >> 29));
    }
};
