#include <doctest.h>

#include "fanlike/templates.hpp"
#include "support.hpp"

using namespace fanlike;
using oracle::mat;

TEST_CASE("affine forms") {
    AffineForm a = parse_affine("2*x0+1");
    CHECK(a.constant == 1);
    CHECK(a.coeff[0] == 2);
    AffineForm b = parse_affine("x-1");
    CHECK(b.constant == -1);
    CHECK(b.coeff[0] == 1);
    AffineForm c = parse_affine("-x0-x1");
    CHECK(c.constant == 0);
    CHECK(c.coeff[0] == -1);
    CHECK(c.coeff[1] == -1);
    CHECK(parse_affine("-7").is_constant());
    CHECK(parse_affine("1-x").coeff[0] == -1);
    CHECK(parse_affine("x3").coeff[3] == 1);
    CHECK(parse_affine("-2*x1-1") == parse_affine("-1-2*x1"));
    for (const char* bad : {"", "x4", "2*", "y", "1+", "x0x1", "--1"}) CHECK_THROWS_AS(parse_affine(bad), Error);
    for (const char* s : {"0", "-1", "x0", "-x0-1", "2*x0+1", "x0-x1+x2-3", "-2*x3"}) {
        CHECK(parse_affine(to_string(parse_affine(s))) == parse_affine(s));
    }
}

TEST_CASE("instantiation") {
    TemplateMatrix hirz = with_identity_prefix(template_from_rows({"-1 x", "0 -1"}));
    CHECK(hirz.identity_prefix);
    CHECK(instantiate(hirz, {0}) == mat({{1, 0, -1, 0}, {0, 1, 0, -1}}));
    CHECK(instantiate(hirz, {3}) == mat({{1, 0, -1, 3}, {0, 1, 0, -1}}));
    CHECK_THROWS_AS(instantiate(hirz, {}), Error);

    TemplateMatrix constant = template_from_rows({"1 0 -1", "0 1 1"});
    CHECK(constant.indeterminates().empty());
    CHECK(instantiate(constant, {}) == mat({{1, 0, -1}, {0, 1, 1}}));

    // First K3_7 family at x0 = x1 = 0.
    const TemplateMatrix& t = find_entry("K3_7")->templates.front();
    CHECK(instantiate(t, {0, 0}) == mat({{1, 0, 0, 0, -1, -1, -1, 0},
                                         {0, 1, 0, 0, -1, -2, -1, 0},
                                         {0, 0, 1, 0, 1, 1, 0, -1},
                                         {0, 0, 0, 1, 0, 1, 0, -1}}));
    CHECK(instantiate(t, {2, -3})(0, 7) == 2);
    CHECK(instantiate(t, {2, -3})(1, 7) == -3);
}

TEST_CASE("sweeps") {
    TemplateMatrix none = template_from_rows({"1 0", "0 1"});
    CHECK(sweep_all(none, 2).size() == 1);
    TemplateMatrix one = template_from_rows({"x 0", "0 1"});
    CHECK(sweep_all(one, 2).size() == 5);
    TemplateMatrix four = template_from_rows({"x0 x1", "x2 x3"});
    auto all = sweep_all(four, 1);
    CHECK(all.size() == 81);
    CHECK(all.front() == mat({{-1, -1}, {-1, -1}}));
    CHECK(all.back() == mat({{1, 1}, {1, 1}}));
    // Lexicographic in (x0, x1, x2, x3).
    CHECK(all[1] == mat({{-1, -1}, {-1, 0}}));
    TemplateMatrix gap = template_from_rows({"x1 0", "0 x3"});
    CHECK(gap.indeterminates() == std::vector<int>{1, 3});
    std::size_t seen = 0;
    sweep(gap, 2, [&](const std::vector<long long>& v, const CharMatrix& m) {
        CHECK(v[0] == 0);
        CHECK(m(0, 0) == v[1]);
        CHECK(m(1, 1) == v[3]);
        return ++seen < 7;
    });
    CHECK(seen == 7);
}

TEST_CASE("template text round trip") {
    TemplateMatrix t = parse_template("# hexagon family\n-1 -1 x\n1 0 -1\n");
    CHECK(t.n == 2);
    CHECK(t.m == 3);
    CHECK(parse_template(print_template(t)) == t);
    CHECK_THROWS_AS(parse_template("1 0\n0\n"), Error);
    CHECK_THROWS_AS(parse_template("1 z\n"), Error);
    for (const auto& e : load_catalog()) {
        for (const auto& tm : e.templates) {
            CHECK(tm.identity_prefix);
            CHECK(tm.n == e.n);
            CHECK(tm.m == e.m);
            CHECK_MESSAGE(parse_template(print_template(tm)) == tm, e.id);
            CHECK(tm.indeterminates().size() <= 4);
        }
    }
}

TEST_CASE("catalog templates instantiate to fan-giving maps at bound 1") {
    int checked = 0;
    int expected = 0;
    for (const auto& e : load_catalog()) {
        PLSphere k = e.sphere();
        for (const auto& t : e.templates) {
            int cells = 1;
            for (std::size_t i = 0; i < t.indeterminates().size(); ++i) cells *= 3;
            expected += cells;
            sweep(t, 1, [&](const std::vector<long long>&, const CharMatrix& lam) {
                CHECK_MESSAGE(is_characteristic(k, lam), e.id);
                CHECK_MESSAGE(is_positive(k, lam), e.id);
                CHECK_MESSAGE(is_fan_giving(k, lam), e.id);
                ++checked;
                return true;
            });
        }
    }
    CHECK(checked == expected);
    CHECK(checked == 985);
}
