#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanlike/search.hpp"
#include "fanlike/templates.hpp"

namespace fanlike {

enum class EntryKind { Fanlike, MinimallyNonFanlike };
std::string to_string(EntryKind kind);

struct CatalogEntry {
    std::string id;  // "K3_11", "L4_13", ...
    EntryKind kind = EntryKind::Fanlike;
    int n = 0;
    int m = 0;
    int picard = 0;
    std::vector<Face> min_nonfaces;
    /// Listed automorphisms; empty when the source lists none (all L-seeds
    /// and K3_5). "Trivial" groups are stored as the identity alone.
    std::vector<VertexPermutation> symmetries;
    /// Fan-giving families with the identity block restored.
    std::vector<TemplateMatrix> templates;
    std::string notes;

    PLSphere sphere() const;
};

/// The embedded catalog: 59 fanlike seeds, then 15 minimally non-fanlike
/// ones. Parsed once; throws CorruptData if the checksum or the JSON shape is
/// off.
const std::vector<CatalogEntry>& load_catalog();
/// Parses catalog JSON text (same schema as the embedded data).
std::vector<CatalogEntry> parse_catalog(std::string_view json_text);
std::string_view embedded_catalog_json();
/// FNV-1a 64 of the embedded JSON text.
std::uint64_t embedded_catalog_checksum();
std::uint64_t fnv1a64(std::string_view bytes);

const CatalogEntry* find_entry(std::string_view id);
/// The minimally non-fanlike seeds as named spheres.
const std::vector<NamedSphere>& l_seeds();

/// Compact face notation (digits, A=10, B=11, C=12) or braced.
inline Face parse_compact_face(std::string_view s) { return parse_face(s); }

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct EntryReport {
    std::string id;
    std::vector<CheckResult> checks;
    double time_ms = 0;

    bool passed() const;
};

struct VerifyOptions {
    int bound = 2;         // template sweep bound
    int search_bound = 1;  // L-seed search bound
    bool run_searches = true;
    unsigned threads = 1;
};

/// Runs the battery for one entry: sphere construction and round trip,
/// Picard number, seed test, listed symmetries versus the computed group,
/// template sweeps (fanlike), bad-link scan over nonempty faces, and bounded
/// searches (L-seeds).
EntryReport verify_entry(const CatalogEntry& e, const VerifyOptions& opts);

/// One row of the reference table of maximal minimal-non-face counts N(n, p)
/// for n = 2..8 and the overall maximum, stored as printed (">= 16" etc.).
/// The row p = 4 lists N(5, 4) = 12 although no fanlike seed with n = 5 in
/// the catalog has more than 11 minimal non-faces; the value is kept verbatim.
struct NonfaceBoundRow {
    int p = 0;
    std::vector<std::string> by_n;  // n = 2..8
    std::string overall;
};
const std::vector<NonfaceBoundRow>& nonface_bound_table();

/// Number of seeds admitting a characteristic map, by Picard number p <= 4 and
/// n = 1..11 (reference constants; not regenerated).
struct SeedCountRow {
    int p = 0;
    std::vector<int> by_n;  // n = 1..11
    int total = 0;
};
const std::vector<SeedCountRow>& seed_count_table();

/// CPLX v1 text for an entry's sphere.
std::string export_cplx(const CatalogEntry& e);

}  // namespace fanlike
