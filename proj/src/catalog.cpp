#include "fanlike/catalog.hpp"

#include <algorithm>
#include <chrono>

#include <json.hpp>

#include "catalog_data.hpp"
#include "fanlike/automorphism.hpp"
#include "fanlike/error.hpp"

namespace fanlike {

namespace {

using nlohmann::json;

[[noreturn]] void corrupt(const std::string& what) { fail(ErrorCode::CorruptData, what); }

CatalogEntry entry_from_json(const json& j) {
    CatalogEntry e;
    try {
        e.id = j.at("id").get<std::string>();
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "Fanlike") {
            e.kind = EntryKind::Fanlike;
        } else if (kind == "MinimallyNonFanlike") {
            e.kind = EntryKind::MinimallyNonFanlike;
        } else {
            corrupt(e.id + ": unknown kind '" + kind + "'");
        }
        e.n = j.at("n").get<int>();
        e.m = j.at("m").get<int>();
        e.picard = e.m - e.n;
        for (const auto& s : j.at("min_nonfaces")) e.min_nonfaces.push_back(parse_face(s.get<std::string>()));
        for (const auto& perm : j.at("symmetries")) {
            VertexPermutation g = perm.get<std::vector<int>>();
            if (static_cast<int>(g.size()) != e.m || !is_permutation(g)) corrupt(e.id + ": malformed symmetry");
            e.symmetries.push_back(std::move(g));
        }
        for (const auto& rows : j.at("templates")) {
            TemplateMatrix block = template_from_rows(rows.get<std::vector<std::string>>());
            if (block.n != e.n || block.m != e.m - e.n) corrupt(e.id + ": template has the wrong shape");
            e.templates.push_back(with_identity_prefix(block));
        }
        e.notes = j.value("notes", std::string());
    } catch (const json::exception& ex) {
        corrupt("catalog entry " + e.id + ": " + ex.what());
    }
    return e;
}

}  // namespace

std::string to_string(EntryKind kind) {
    return kind == EntryKind::Fanlike ? "Fanlike" : "MinimallyNonFanlike";
}

PLSphere CatalogEntry::sphere() const { return PLSphere::from_min_nonfaces(n, m, min_nonfaces); }

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string_view embedded_catalog_json() { return detail::kCatalogJson; }
std::uint64_t embedded_catalog_checksum() { return detail::kCatalogChecksum; }

std::vector<CatalogEntry> parse_catalog(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& ex) {
        corrupt(std::string("catalog JSON: ") + ex.what());
    }
    if (!doc.is_array()) corrupt("catalog JSON must be an array");
    std::vector<CatalogEntry> out;
    for (const auto& j : doc) {
        try {
            out.push_back(entry_from_json(j));
        } catch (const Error& ex) {
            if (ex.code() == ErrorCode::CorruptData) throw;
            corrupt(ex.what());
        }
    }
    return out;
}

const std::vector<CatalogEntry>& load_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        if (fnv1a64(embedded_catalog_json()) != embedded_catalog_checksum()) {
            corrupt("embedded catalog checksum mismatch");
        }
        return parse_catalog(embedded_catalog_json());
    }();
    return entries;
}

const CatalogEntry* find_entry(std::string_view id) {
    for (const auto& e : load_catalog()) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

const std::vector<NamedSphere>& l_seeds() {
    static const std::vector<NamedSphere> seeds = [] {
        std::vector<NamedSphere> out;
        for (const auto& e : load_catalog()) {
            if (e.kind == EntryKind::MinimallyNonFanlike) out.push_back({e.id, e.sphere()});
        }
        return out;
    }();
    return seeds;
}

bool EntryReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

EntryReport verify_entry(const CatalogEntry& e, const VerifyOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    EntryReport rep;
    rep.id = e.id;
    auto add = [&](std::string name, bool pass, std::string detail = {}) {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    std::optional<PLSphere> k;
    try {
        k = e.sphere();
        add("sphere", true, "n=" + std::to_string(k->n()) + " m=" + std::to_string(k->m()) + " facets=" +
                                std::to_string(k->facets().size()));
    } catch (const Error& ex) {
        add("sphere", false, ex.what());
    }
    if (!k) {
        rep.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    }
    {
        std::vector<Face> listed = e.min_nonfaces;
        std::sort(listed.begin(), listed.end());
        add("round-trip", k->min_nonfaces() == listed, std::to_string(listed.size()) + " minimal non-faces");
    }
    {
        int want = e.id == "L3_0" ? 3 : 4;
        add("picard", k->picard() == want && e.picard == want, "p=" + std::to_string(k->picard()));
    }
    add("seed", is_seed(*k));
    if (!e.symmetries.empty()) {
        AutGroup g = automorphisms(*k);
        std::vector<VertexPermutation> listed = e.symmetries;
        std::sort(listed.begin(), listed.end());
        listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
        add("symmetries", listed == g.elements,
            "listed " + std::to_string(listed.size()) + ", computed " + std::to_string(g.order()));
    }
    if (e.kind == EntryKind::Fanlike) {
        std::size_t instances = 0;
        std::size_t failures = 0;
        std::string first_failure;
        for (std::size_t t = 0; t < e.templates.size(); ++t) {
            sweep(e.templates[t], opts.bound, [&](const std::vector<long long>& values, const CharMatrix& lambda) {
                ++instances;
                bool ok = is_characteristic(*k, lambda) && is_positive(*k, lambda) && is_fan_giving(*k, lambda);
                if (!ok) {
                    if (failures++ == 0) {
                        first_failure = "template " + std::to_string(t + 1) + " at x=(";
                        for (std::size_t i = 0; i < values.size(); ++i) {
                            first_failure += (i ? "," : "") + std::to_string(values[i]);
                        }
                        first_failure += ")";
                    }
                }
                return true;
            });
        }
        std::string detail = std::to_string(e.templates.size()) + " templates, " + std::to_string(instances) +
                             " instances at bound " + std::to_string(opts.bound);
        if (failures) detail += ", " + std::to_string(failures) + " failed, first " + first_failure;
        add("templates", failures == 0, detail);
        auto bad = has_bad_link(*k, l_seeds(), true);
        add("no-bad-link", !bad, bad ? "link of " + to_braced(bad->face) + " is " + bad->seed_id : "");
    } else {
        auto bad = has_bad_link(*k, l_seeds(), false);
        add("no-bad-link", !bad, bad ? "link of " + to_braced(bad->face) + " is " + bad->seed_id : "");
        if (opts.run_searches) {
            SearchConfig cfg;
            cfg.bound = opts.search_bound;
            cfg.threads = opts.threads;
            cfg.mode = SearchMode::FanGiving;
            auto fan = search_char_maps(*k, cfg);
            add("no-fan-map-within-bound", fan.maps.empty(),
                std::to_string(fan.maps.size()) + " fan-giving maps at bound " + std::to_string(opts.search_bound) +
                    ", " + std::to_string(fan.stats.nodes) + " nodes");
            if (e.id == "L3_1" || e.id == "L3_2") {
                cfg.mode = SearchMode::Positive;
                auto pos = search_char_maps(*k, cfg);
                add("positive-map-exists", !pos.maps.empty(),
                    std::to_string(pos.maps.size()) + " positive maps at bound " + std::to_string(opts.search_bound));
            }
        }
    }
    rep.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

const std::vector<NonfaceBoundRow>& nonface_bound_table() {
    static const std::vector<NonfaceBoundRow> rows = {
        {2, {"2", "2", "2", "2", "2", "2", "2"}, "2"},
        {3, {"5", "5", "5", "5", "5", "5", "5"}, "5"},
        {4, {"9", "9", "11", "12", "12", "12", "12"}, "12"},
        {5, {"14", "14", ">= 16", ">= 17", ">= 17", ">= 17", ">= 17"}, ">= 17"},
    };
    return rows;
}

const std::vector<SeedCountRow>& seed_count_table() {
    static const std::vector<SeedCountRow> rows = {
        {1, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 1},
        {2, {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 1},
        {3, {0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0}, 3},
        {4, {0, 1, 4, 21, 142, 733, 1190, 776, 243, 39, 4}, 3153},
    };
    return rows;
}

std::string export_cplx(const CatalogEntry& e) {
    std::string out = std::to_string(e.n) + " " + std::to_string(e.m) + "\n";
    for (std::size_t i = 0; i < e.min_nonfaces.size(); ++i) {
        out += (i ? " " : "") + (e.m <= 12 ? to_compact(e.min_nonfaces[i]) : to_braced(e.min_nonfaces[i]));
    }
    return out + "\n";
}

}  // namespace fanlike
