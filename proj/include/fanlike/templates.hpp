#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fanlike/charmap.hpp"

namespace fanlike {

inline constexpr int kMaxIndeterminates = 4;

/// constant + sum_i coeff[i] * x_i over the indeterminates x0..x3.
struct AffineForm {
    long long constant = 0;
    std::array<long long, kMaxIndeterminates> coeff{};

    static AffineForm value(long long c) { return AffineForm{c, {}}; }
    bool is_constant() const noexcept;
    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// Canonical text, e.g. `2*x0+1`, `-x0-x1`, `0`.
std::string to_string(const AffineForm& f);
/// Grammar: an optional sign, then terms joined by + or -, each term being an
/// integer, a variable (x, x0..x3), or INT*VAR. The bare `x` means x0.
/// Throws ParseError with the offset.
AffineForm parse_affine(std::string_view text);

struct TemplateMatrix {
    int n = 0;
    int m = 0;
    std::vector<AffineForm> entries;  // row-major n x m
    bool identity_prefix = false;     // columns 1..n are the identity

    const AffineForm& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * m + c]; }
    /// Indices of indeterminates that occur, ascending.
    std::vector<int> indeterminates() const;
    friend bool operator==(const TemplateMatrix&, const TemplateMatrix&) = default;
};

/// Prepends the n x n identity to an n x (m - n) block and sets the flag.
TemplateMatrix with_identity_prefix(const TemplateMatrix& block);
/// Builds from rows of whitespace-separated entries (the catalog form).
TemplateMatrix template_from_rows(const std::vector<std::string>& rows);

/// `values[i]` is x_i; every used indeterminate needs a value (MissingValue).
CharMatrix instantiate(const TemplateMatrix& t, const std::vector<long long>& values);

/// Visits all instantiations with each used indeterminate in [-bound, bound],
/// lexicographic in (x0, x1, x2, x3) restricted to the used ones. The
/// visitor receives the full value vector (unused slots zero) and the matrix;
/// returning false stops the sweep.
void sweep(const TemplateMatrix& t, int bound,
           const std::function<bool(const std::vector<long long>&, const CharMatrix&)>& visit);
std::vector<CharMatrix> sweep_all(const TemplateMatrix& t, int bound);

/// Text format: one matrix row per line, `#` starts a comment.
TemplateMatrix parse_template(std::string_view text);
std::string print_template(const TemplateMatrix& t);

}  // namespace fanlike
