#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace fanlike;
using oracle::brute_min_nonfaces;

namespace {

std::vector<Face> faces(std::initializer_list<const char*> compact) {
    std::vector<Face> out;
    for (const char* s : compact) out.push_back(parse_face(s));
    std::sort(out.begin(), out.end());
    return out;
}

PLSphere cat(const char* id) { return find_entry(id)->sphere(); }

}  // namespace

TEST_CASE("face notation") {
    CHECK(parse_face("1346") == Face{1, 3, 4, 6});
    CHECK(parse_face("679AB") == Face{6, 7, 9, 10, 11});
    CHECK(parse_face("12C") == Face{1, 2, 12});
    CHECK(parse_face("{1, 10,13}") == Face{1, 10, 13});
    CHECK(to_compact(Face{6, 7, 9, 10, 11}) == "679AB");
    CHECK(to_compact(Face{1, 13}) == "{1,13}");
    CHECK(to_braced(Face{1, 3, 4}) == "{1,3,4}");
    CHECK_THROWS_AS(parse_face("1D"), Error);
    CHECK_THROWS_AS(parse_face("31"), Error);
    CHECK_THROWS_AS(parse_face(""), Error);
    CHECK_THROWS_AS(parse_face("{1,2"), Error);
    CHECK(Face{2, 5} < Face{1, 2, 6});
    CHECK(Face{1, 3} < Face{2, 3});
    CHECK(Face{1, 2, 3}.index_of(3) == 2);
    CHECK(Face{}.empty());
}

TEST_CASE("from_min_nonfaces on small spheres") {
    PLSphere pent = PLSphere::from_min_nonfaces(2, 5, faces({"13", "14", "24", "25", "35"}));
    CHECK(pent.facets() == faces({"12", "23", "34", "45", "15"}));

    PLSphere hex = PLSphere::from_min_nonfaces(2, 6, faces({"13", "14", "15", "24", "25", "26", "35", "36", "46"}));
    CHECK(hex.facets() == faces({"12", "23", "34", "45", "56", "16"}));
    CHECK(hex.picard() == 4);

    PLSphere tet = PLSphere::from_min_nonfaces(3, 4, faces({"1234"}));
    CHECK(tet.facets() == faces({"123", "124", "134", "234"}));
    CHECK(tet == simplex_boundary(3));
}

TEST_CASE("validation errors") {
    auto code_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::TooLarge;
    };
    // Not an antichain.
    CHECK(code_of([] { PLSphere::from_min_nonfaces(2, 4, faces({"13", "134", "24"})); }) ==
          ErrorCode::InvalidNonFaces);
    // 134 and 234 survive as faces of size 3 > n.
    CHECK(code_of([] { PLSphere::from_min_nonfaces(2, 4, faces({"12"})); }) == ErrorCode::NotPure);
    // A path is not closed.
    CHECK(code_of([] { PLSphere::from_facets(2, 3, faces({"12", "23"})); }) == ErrorCode::NotPseudomanifold);
    // Two disjoint triangles.
    CHECK(code_of([] { PLSphere::from_facets(2, 6, faces({"12", "23", "13", "45", "56", "46"})); }) ==
          ErrorCode::NotPseudomanifold);
    // The 7-vertex torus is a closed pseudomanifold with Euler characteristic 0.
    std::vector<Face> torus;
    for (int i = 0; i < 7; ++i) {
        torus.push_back(Face{i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
        torus.push_back(Face{i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
    }
    CHECK(code_of([&] { PLSphere::from_facets(3, 7, torus); }) == ErrorCode::WrongEuler);
    CHECK(code_of([] { link(polygon_boundary(5), Face{1, 3}); }) == ErrorCode::NotAFace);
    CHECK(code_of([] { wedge(polygon_boundary(5), 6); }) == ErrorCode::NotAVertex);
}

TEST_CASE("min_nonfaces agrees with brute force") {
    CHECK(min_nonfaces(polygon_boundary(5)) == faces({"13", "14", "24", "25", "35"}));
    CHECK(min_nonfaces(simplex_boundary(3)) == faces({"1234"}));
    for (const auto& e : load_catalog()) {
        if (e.m > 10) continue;
        PLSphere k = e.sphere();
        CHECK_MESSAGE(brute_min_nonfaces(k.m(), k.facets()) == k.min_nonfaces(), e.id);
        std::vector<Face> listed = e.min_nonfaces;
        std::sort(listed.begin(), listed.end());
        CHECK_MESSAGE(min_nonfaces(PLSphere::from_facets(k.n(), k.m(), k.facets())) == listed, e.id);
    }
}

TEST_CASE("links") {
    PLSphere k = cat("K2_3");
    Link l = link(k, Face{1});
    CHECK(l.labels == std::vector<int>{2, 3, 4, 5, 6});
    CHECK(l.complex.n() == 2);
    CHECK(are_isomorphic(l.complex, polygon_boundary(5)));
    CHECK(l.local_of(4) == 3);
    CHECK(l.local_of(7) == 0);
    // Oracle: link faces are exactly the tau disjoint from sigma with tau | sigma a face.
    for (Face sigma : {Face{1}, Face{2, 3}, Face{}}) {
        Link ls = link(k, sigma);
        for (Face tau : ls.complex.all_faces()) {
            Face ambient;
            for (int v : tau.vertices()) ambient = ambient.with(ls.labels[static_cast<std::size_t>(v) - 1]);
            CHECK(oracle::in_some_facet(k, ambient | sigma));
            CHECK_FALSE(ambient.intersects(sigma));
        }
    }
    Link whole = link(k, Face{});
    CHECK(whole.complex == k);
}

TEST_CASE("wedge") {
    PLSphere pent = polygon_boundary(5);
    PLSphere w = wedge(pent, 1);
    CHECK(w.m() == 6);
    CHECK(w.n() == 3);
    CHECK(w.min_nonfaces() == faces({"136", "146", "24", "25", "35"}));
    CHECK(brute_min_nonfaces(w.m(), w.facets()) == w.min_nonfaces());
    for (const auto& e : load_catalog()) {
        if (e.m > 10) continue;
        PLSphere k = e.sphere();
        for (int v : {1, k.m()}) {
            PLSphere kw = wedge(k, v);
            CHECK(kw.picard() == k.picard());
            CHECK(kw.min_nonfaces().size() == k.min_nonfaces().size());
            CHECK_MESSAGE(are_isomorphic(link(kw, Face{kw.m()}).complex, k), e.id);
        }
    }
}

TEST_CASE("seed detection") {
    PLSphere pent = polygon_boundary(5);
    CHECK(is_seed(pent));
    CHECK_FALSE(is_seed(wedge(pent, 1)));
    CHECK_FALSE(is_seed(wedge(wedge(pent, 2), 6)));
    CHECK(is_seed(cat("K3_5")));
    auto pairs = wedge_pairs(wedge(pent, 3));
    REQUIRE_FALSE(pairs.empty());
    for (const auto& p : pairs) {
        // Reconstruction oracle.
        PLSphere k = wedge(pent, 3);
        Link l = link(k, Face{p.v_prime});
        CHECK(are_isomorphic(wedge(l.complex, l.local_of(p.v)), k));
    }
    // A suspension has two vertices with identical non-face membership that
    // are not joined by an edge; it is a seed all the same.
    CHECK(is_seed(PLSphere::from_min_nonfaces(3, 6, faces({"13", "24", "56"}))));
}

TEST_CASE("connected sums") {
    PLSphere tet = simplex_boundary(3);
    std::vector<int> glue{1, 2, 3};
    PLSphere s = connected_sum(tet, tet, Face{1, 2, 3}, Face{1, 2, 3}, glue);
    REQUIRE(s.min_nonfaces().size() == 2);
    CHECK(s.min_nonfaces()[0].size() == 2);
    CHECK(s.min_nonfaces()[1].size() == 3);

    PLSphere pent = polygon_boundary(5);
    PLSphere tri = simplex_boundary(2);
    std::vector<int> g2{1, 2};
    PLSphere ps = connected_sum(pent, tri, Face{1, 2}, Face{1, 2}, g2);
    CHECK(brute_min_nonfaces(ps.m(), ps.facets()).size() == 9);

    CHECK_THROWS_AS(connected_sum(pent, tri, Face{1, 3}, Face{1, 2}, g2), Error);
    std::vector<int> bad{1, 1};
    CHECK_THROWS_AS(connected_sum(pent, tri, Face{1, 2}, Face{1, 2}, bad), Error);
}

TEST_CASE("connected-sum non-faces follow the union formula") {
    // M(K1 # K2) = {sigma} + M(K1) + M(K2) relabeled + {u, w} for u, w off sigma
    // on either side, dropping a simplex boundary's vertex set.
    std::vector<PLSphere> pool{polygon_boundary(3), polygon_boundary(4), polygon_boundary(5),
                               simplex_boundary(3), wedge(polygon_boundary(4), 1), wedge(polygon_boundary(5), 2),
                               simplex_boundary(4)};
    std::mt19937 rng(7);
    int checked = 0;
    for (const auto& k1 : pool) {
        for (const auto& k2 : pool) {
            if (k1.n() != k2.n() || k1.m() + k2.m() - k1.n() > 8) continue;
            for (int trial = 0; trial < 3; ++trial) {
                Face s1 = k1.facets()[rng() % k1.facets().size()];
                Face s2 = k2.facets()[rng() % k2.facets().size()];
                std::vector<int> glue = s1.vertices();
                std::shuffle(glue.begin(), glue.end(), rng);
                PLSphere sum = connected_sum(k1, k2, s1, s2, glue);
                std::vector<Face> expect{s1};
                bool k1_simplex = k1.m() == k1.n() + 1;
                bool k2_simplex = k2.m() == k2.n() + 1;
                if (!k1_simplex) expect.insert(expect.end(), k1.min_nonfaces().begin(), k1.min_nonfaces().end());
                auto label = [&](int v2) { return connected_sum_label(k1, s2, glue, v2); };
                if (!k2_simplex) {
                    for (Face f : k2.min_nonfaces()) {
                        Face g;
                        for (int v : f.vertices()) g = g.with(label(v));
                        expect.push_back(g);
                    }
                }
                for (int u = 1; u <= k1.m(); ++u) {
                    if (s1.contains(u)) continue;
                    for (int w = 1; w <= k2.m(); ++w) {
                        if (!s2.contains(w)) expect.push_back(Face{u, label(w)});
                    }
                }
                std::sort(expect.begin(), expect.end());
                expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
                CHECK(brute_min_nonfaces(sum.m(), sum.facets()) == expect);
                CHECK(sum.min_nonfaces() == expect);
                ++checked;
            }
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("picard, neighborliness, flagness") {
    CHECK(picard(cat("K1_0")) == 4);
    for (const char* id : {"K4_24", "K4_27", "K4_28"}) {
        CHECK(is_k_neighborly(cat(id), 2));
        CHECK(is_neighborly(cat(id)));
        CHECK(neighborly_degree(cat(id)) == 2);
    }
    for (const char* id : {"K1_0", "K2_3", "K3_5"}) CHECK(is_flag(cat(id)));
    CHECK_FALSE(is_flag(cat("K2_1")));
    CHECK(cat("K2_1").is_face(Face{1, 2}));
    CHECK_FALSE(cat("K2_1").is_face(Face{1, 2, 5}));
    CHECK(count_min_nonfaces(cat("K4_24")) == 11);
}

TEST_CASE("polygons") {
    for (int m = 3; m <= 12; ++m) {
        PLSphere p = polygon_boundary(m);
        int expected = m == 3 ? 1 : m * (m - 3) / 2;
        CHECK(count_min_nonfaces(p) == expected);
        int q = m - 2;
        if (m > 3) CHECK(count_min_nonfaces(p) == (q - 1) * (q + 2) / 2);
        CHECK(brute_min_nonfaces(m, p.facets()) == p.min_nonfaces());
    }
    CHECK(polygon_boundary(3).min_nonfaces() == faces({"123"}));
}

TEST_CASE("euler characteristic and relabeling") {
    for (const auto& e : load_catalog()) {
        PLSphere k = e.sphere();
        CHECK(euler_characteristic(k) == 1 + ((k.n() - 1) % 2 == 0 ? 1 : -1));
    }
    PLSphere k = cat("K2_2");
    VertexPermutation g{7, 6, 5, 4, 3, 2, 1};
    PLSphere r = relabel(k, g);
    CHECK(are_isomorphic(k, r));
    for (Face f : k.facets()) CHECK(r.is_facet(fanlike::apply(g, f)));
}
