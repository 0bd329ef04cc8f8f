#include <doctest.h>

#include <map>

#include "fanlike/io.hpp"
#include "support.hpp"

using namespace fanlike;

namespace {

const CheckResult* find_check(const EntryReport& r, const std::string& name) {
    for (const auto& c : r.checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("checksum") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
    CHECK(fnv1a64(embedded_catalog_json()) == embedded_catalog_checksum());
    CHECK(embedded_catalog_json().size() > 1000);
}

TEST_CASE("load and counts") {
    const auto& cat = load_catalog();
    REQUIRE(cat.size() == 74);
    std::map<std::pair<EntryKind, int>, int> by_kind_n;
    for (const auto& e : cat) ++by_kind_n[{e.kind, e.n}];
    std::map<int, int> fan{{2, 1}, {3, 4}, {4, 10}, {5, 16}, {6, 18}, {7, 9}, {8, 1}};
    std::map<int, int> mnf{{4, 12}, {5, 3}};
    for (const auto& [key, count] : by_kind_n) {
        const auto& expect = key.first == EntryKind::Fanlike ? fan : mnf;
        CHECK(expect.count(key.second));
        if (expect.count(key.second)) CHECK(count == expect.at(key.second));
    }
    CHECK(l_seeds().size() == 15);
    for (const auto& e : cat) {
        CHECK(e.picard == e.m - e.n);
        CHECK(e.picard == (e.id == "L3_0" ? 3 : 4));
        CHECK(e.id[0] == (e.kind == EntryKind::Fanlike ? 'K' : 'L'));
        CHECK(e.id.substr(1, e.id.find('_') - 1) == std::to_string(e.n - 1));
        for (std::size_t i = 0; i < e.min_nonfaces.size(); ++i) {
            for (std::size_t j = 0; j < e.min_nonfaces.size(); ++j) {
                if (i != j) CHECK_FALSE(e.min_nonfaces[i].subset_of(e.min_nonfaces[j]));
            }
        }
        PLSphere k = e.sphere();
        CHECK(k.n() == e.n);
        CHECK(is_seed(k));
    }
}

TEST_CASE("spot entries") {
    const CatalogEntry* bip = find_entry("K2_3");
    REQUIRE(bip);
    CHECK(bip->notes.find("pentagonal bipyramid") != std::string::npos);
    CHECK(bip->m == 7);
    CHECK(bip->n == 3);
    const CatalogEntry* l30 = find_entry("L3_0");
    REQUIRE(l30);
    CHECK(l30->min_nonfaces.size() == 7);
    for (Face f : l30->min_nonfaces) CHECK(f.size() == 3);
    CHECK(find_entry("K5_3") == nullptr);
    CHECK(find_entry("K3_5")->templates.empty());
    CHECK(find_entry("K1_0")->templates.size() == 3);
    CHECK(find_entry("L3_7")->notes.find("Br") != std::string::npos);
    CHECK(parse_compact_face("1346") == Face{1, 3, 4, 6});
    CHECK(parse_compact_face("679AB") == Face{6, 7, 9, 10, 11});
    CHECK(parse_compact_face("12C") == Face{1, 2, 12});
    CHECK_THROWS_AS(parse_compact_face("21"), Error);
}

TEST_CASE("corrupt input") {
    auto code_of = [](std::string_view text) {
        try {
            parse_catalog(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::TooLarge;
    };
    CHECK(code_of("not json") == ErrorCode::CorruptData);
    CHECK(code_of(R"([{"id": "K9_9"}])") == ErrorCode::CorruptData);
    CHECK(code_of(R"([{"id": "X", "kind": "Fanlike", "n": 2, "m": 4, "min_nonfaces": ["13", "24"],
                      "symmetries": [[1, 1, 3, 4]], "templates": [], "notes": ""}])") == ErrorCode::CorruptData);
    CHECK(code_of(R"([{"id": "X", "kind": "Fanlike", "n": 2, "m": 4, "min_nonfaces": ["13", "24"],
                      "symmetries": [], "templates": [["-1 0", "0 -1 5"]], "notes": ""}])") == ErrorCode::CorruptData);
    auto ok = parse_catalog(R"([{"id": "X", "kind": "Fanlike", "n": 2, "m": 4, "min_nonfaces": ["13", "24"],
                                "symmetries": [], "templates": [["-1 0", "0 -1"]], "notes": "square"}])");
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].templates[0].m == 4);
    CHECK(is_fan_giving(ok[0].sphere(), instantiate(ok[0].templates[0], {})));
}

TEST_CASE("export round trip") {
    for (const auto& e : load_catalog()) {
        std::string text = export_cplx(e);
        PLSphere k = parse_cplx(text);
        CHECK(k == e.sphere());
        CHECK_MESSAGE(k.min_nonfaces() == e.sphere().min_nonfaces(), e.id);
    }
}

TEST_CASE("verify_entry") {
    VerifyOptions opts;
    opts.bound = 1;
    opts.search_bound = 1;
    EntryReport r = verify_entry(*find_entry("K3_10"), opts);
    CHECK(r.passed());
    CHECK(find_entry("K3_10")->templates.size() == 1);
    CHECK(automorphisms(find_entry("K3_10")->sphere()).order() == 2);
    for (const char* name : {"sphere", "round-trip", "picard", "seed", "symmetries", "templates", "no-bad-link"}) {
        const CheckResult* c = find_check(r, name);
        REQUIRE_MESSAGE(c, name);
        CHECK(c->pass);
    }

    opts.bound = 2;
    EntryReport hex = verify_entry(*find_entry("K1_0"), opts);
    CHECK(hex.passed());

    // Positive maps over L3_2 first appear with entries of size 3.
    opts.search_bound = 3;
    EntryReport l32 = verify_entry(*find_entry("L3_2"), opts);
    REQUIRE(find_check(l32, "positive-map-exists"));
    CHECK(find_check(l32, "positive-map-exists")->pass);
    CHECK(find_check(l32, "no-fan-map-within-bound")->pass);

    opts.run_searches = false;
    EntryReport quick = verify_entry(*find_entry("L4_13"), opts);
    CHECK(quick.passed());
    CHECK(find_check(quick, "no-fan-map-within-bound") == nullptr);

    // A broken symmetry list is reported, not thrown.
    CatalogEntry tampered = *find_entry("K2_2");
    tampered.symmetries.pop_back();
    EntryReport bad = verify_entry(tampered, opts);
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(find_check(bad, "symmetries")->pass);
}

TEST_CASE("tables") {
    const auto& nb = nonface_bound_table();
    REQUIRE(nb.size() == 4);
    CHECK(nb[2].p == 4);
    CHECK(nb[2].by_n == std::vector<std::string>{"9", "9", "11", "12", "12", "12", "12"});
    CHECK(nb[3].by_n[2] == ">= 16");
    for (const auto& row : nb) {
        if (row.p > 4) continue;
        CHECK(row.by_n[0] == std::to_string((row.p - 1) * (row.p + 2) / 2));
    }
    // Largest |M| among fanlike seeds of each dimension.
    std::map<int, int> most;
    for (const auto& e : load_catalog()) {
        if (e.kind != EntryKind::Fanlike || e.picard != 4) continue;
        most[e.n] = std::max(most[e.n], static_cast<int>(e.min_nonfaces.size()));
    }
    CHECK(most[2] == 9);
    CHECK(most[3] == 9);
    CHECK(most[4] == 11);
    CHECK(most[5] == 11);
    const auto& sc = seed_count_table();
    REQUIRE(sc.size() == 4);
    int total = 0;
    for (int v : sc[3].by_n) total += v;
    CHECK(total == sc[3].total);
    CHECK(sc[3].total == 3153);
}
