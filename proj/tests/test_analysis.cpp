#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tfc/analysis.hpp"
#include "tfc/errors.hpp"

using tfc::ForbiddenPair;

namespace {
const ForbiddenPair ftc = ForbiddenPair::parse("10", "01");
const ForbiddenPair foc = ForbiddenPair::parse("101", "010");

double round4(double v) { return std::round(v * 1e4) / 1e4; }
}  // namespace

TEST_CASE("theorem1_bounds") {
    const auto b = tfc::theorem1_bounds(0.832509);
    CHECK(round4(b.lower) == doctest::Approx(0.8325));
    CHECK(b.upper == doctest::Approx(0.9162545));
    const auto one = tfc::theorem1_bounds(1.0);
    CHECK(one.lower == 1.0);
    CHECK(one.upper == 1.0);
    const auto foc_b = tfc::theorem1_bounds(0.9636);
    CHECK(round4(foc_b.upper) == doctest::Approx(0.9818));
    CHECK(b.comparison_stateless == doctest::Approx(0.694242).epsilon(1e-6));
    CHECK_THROWS_AS(tfc::theorem1_bounds(0.0), tfc::OutOfDomain);
    CHECK_THROWS_AS(tfc::theorem1_bounds(-0.5), tfc::OutOfDomain);
}

TEST_CASE("theorem1_bounds is monotone") {
    double prev_lo = 0, prev_hi = 0;
    for (int i = 1; i <= 150; ++i) {
        const double a = i / 100.0;
        const auto b = tfc::theorem1_bounds(a);
        CHECK(b.lower > prev_lo);
        CHECK(b.upper > prev_hi);
        CHECK((b.lower <= b.upper) == (i <= 100));
        prev_lo = b.lower;
        prev_hi = b.upper;
    }
}

TEST_CASE("rate_table rows for (10,01)") {
    const std::vector<int> ns{1, 2, 3, 4};
    const auto t = tfc::rate_table(ftc, ns);
    REQUIRE(t.rows.size() == 4);
    const auto& r1 = t.rows[0];
    CHECK(r1.pairs == 4);
    CHECK(r1.edges == 1);
    CHECK(r1.subdp == 2);
    CHECK(r1.subdp_exact);
    CHECK(*r1.rate == doctest::Approx(1.0));
    const auto& r2 = t.rows[1];
    CHECK(r2.pairs == 14);
    CHECK(r2.edges == 5);
    CHECK(r2.density == doctest::Approx(1.25));
    CHECK(*r2.min_degree == 2);
    CHECK(r2.subdp == 3);
    CHECK(*r2.rate == doctest::Approx(0.7925).epsilon(1e-4));
    CHECK(t.bounds.lower == doctest::Approx(t.alpha));
}

TEST_CASE("rate_table row for (101,010) with the constraint inactive") {
    const std::vector<int> ns{2};
    const auto t = tfc::rate_table(foc, ns);
    const auto& r = t.rows[0];
    CHECK(r.pairs == 16);
    CHECK(r.edges == 6);
    CHECK(r.subdp == 4);
    CHECK(*r.rate == doctest::Approx(1.0));
}

TEST_CASE("rate_table marks capped cells instead of failing") {
    const std::vector<int> ns{12, 30};
    tfc::TableOptions opts;
    opts.heuristic_cap = 8;
    const auto t = tfc::rate_table(ftc, ns, opts);
    CHECK_FALSE(t.rows[0].subdp.has_value());
    CHECK(t.rows[0].min_degree.has_value());
    CHECK_FALSE(t.rows[1].min_degree.has_value());
    CHECK(t.rows[1].limits.size() == 2);
    CHECK(t.rows[1].pairs == tfc::count_pairs(ftc, 30));
}

TEST_CASE("finite-n alpha estimates approach alpha within 2/n") {
    for (const auto& fp : {ftc, foc}) {
        std::vector<int> ns;
        for (int n = 1; n <= 40; ++n) ns.push_back(n);
        tfc::TableOptions opts;
        opts.heuristic_cap = 0;
        opts.min_degree_cap = 12;
        const auto t = tfc::rate_table(fp, ns, opts);
        for (const auto& r : t.rows) {
            REQUIRE(r.alpha_estimate.has_value());
            CHECK(std::abs(*r.alpha_estimate - t.alpha) <= 2.0 / r.n);
        }
    }
}
