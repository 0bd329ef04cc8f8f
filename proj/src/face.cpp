#include "fanlike/face.hpp"

#include <cctype>
#include <charconv>

#include "fanlike/error.hpp"

namespace fanlike {

namespace {

std::uint64_t bit_of(int v) {
    if (v < 1 || v > kMaxVertices) {
        fail(ErrorCode::TooLarge, "vertex label " + std::to_string(v) + " outside 1..64");
    }
    return std::uint64_t{1} << (v - 1);
}

char compact_digit(int v) { return v <= 9 ? static_cast<char>('0' + v) : static_cast<char>('A' + v - 10); }

}  // namespace

Face::Face(std::initializer_list<int> vertices) {
    for (int v : vertices) bits_ |= bit_of(v);
}

Face::Face(std::span<const int> vertices) {
    for (int v : vertices) bits_ |= bit_of(v);
}

Face Face::range(int m) {
    if (m < 0 || m > kMaxVertices) fail(ErrorCode::TooLarge, "vertex count " + std::to_string(m));
    return from_bits(m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
}

Face Face::with(int v) const { return from_bits(bits_ | bit_of(v)); }
Face Face::without(int v) const { return from_bits(bits_ & ~bit_of(v)); }

std::vector<int> Face::vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

int Face::index_of(int v) const noexcept {
    if (!contains(v)) return -1;
    std::uint64_t below = bits_ & ((std::uint64_t{1} << (v - 1)) - 1);
    return std::popcount(below);
}

std::strong_ordering operator<=>(Face a, Face b) noexcept {
    if (a.size() != b.size()) return a.size() <=> b.size();
    std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    // Equal sizes: the face owning the smallest differing label comes first.
    std::uint64_t low = diff & (~diff + 1);
    return (a.bits_ & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_compact(Face f) {
    if (f.max_vertex() > 12) return to_braced(f);
    std::string out;
    for (int v : f.vertices()) out.push_back(compact_digit(v));
    return out;
}

std::string to_braced(Face f) {
    std::string out = "{";
    bool first = true;
    for (int v : f.vertices()) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

Face parse_face(std::string_view text) {
    if (text.empty()) fail(ErrorCode::ParseError, "empty face string");
    if (text.front() == '{') {
        if (text.back() != '}') fail(ErrorCode::ParseError, "unterminated face '" + std::string(text) + "'");
        std::string_view body = text.substr(1, text.size() - 2);
        Face out;
        int prev = 0;
        std::size_t pos = 0;
        while (pos < body.size()) {
            while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
            int v = 0;
            auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), v);
            if (ec != std::errc{}) {
                fail(ErrorCode::ParseError, "bad label at offset " + std::to_string(pos + 1) + " in '" +
                                                std::string(text) + "'");
            }
            if (v <= prev) fail(ErrorCode::ParseError, "labels not strictly increasing in '" + std::string(text) + "'");
            if (v > kMaxVertices) fail(ErrorCode::ParseError, "label above 64 in '" + std::string(text) + "'");
            out = out.with(v);
            prev = v;
            pos = static_cast<std::size_t>(ptr - body.data());
            while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
            if (pos < body.size()) {
                if (body[pos] != ',') fail(ErrorCode::ParseError, "expected ',' in '" + std::string(text) + "'");
                ++pos;
            }
        }
        return out;
    }
    Face out;
    int prev = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        int v = 0;
        if (c >= '1' && c <= '9') {
            v = c - '0';
        } else if (c >= 'A' && c <= 'C') {
            v = c - 'A' + 10;
        } else {
            fail(ErrorCode::ParseError, "invalid character '" + std::string(1, c) + "' at offset " +
                                            std::to_string(i) + " in '" + std::string(text) + "'");
        }
        if (v <= prev) fail(ErrorCode::ParseError, "labels not strictly increasing in '" + std::string(text) + "'");
        out = out.with(v);
        prev = v;
    }
    return out;
}

}  // namespace fanlike
