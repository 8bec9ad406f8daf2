#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tfc/errors.hpp"
#include "tfc/pairgraph.hpp"

using tfc::BigCount;
using tfc::ForbiddenPair;

namespace {
const ForbiddenPair ftc = ForbiddenPair::parse("10", "01");
const ForbiddenPair foc = ForbiddenPair::parse("101", "010");

/// Brute force using the library predicate, per the pair-count definition.
std::uint64_t brute_pairs(const ForbiddenPair& fp, int n) {
    std::uint64_t total = 0;
    for (std::uint64_t a = 0; a < (1u << n); ++a)
        for (std::uint64_t b = 0; b < (1u << n); ++b)
            if (tfc::is_transition_free(tfc::BitWord(n, a), tfc::BitWord(n, b), fp)) ++total;
    return total;
}
}  // namespace

TEST_CASE("FTC pair graph is the 4x4 matrix A") {
    const auto m = tfc::build_pair_graph(ftc);
    CHECK(m.dim() == 4);
    const std::vector<std::vector<int>> expected{{1, 1, 1, 1}, {1, 1, 0, 1}, {1, 0, 1, 1}, {1, 1, 1, 1}};
    CHECK(m.dense() == expected);
    CHECK(m.state_label(1) == "01");
    CHECK(m.state_label(2) == "10");
}

TEST_CASE("FOC pair graph: out-degree 4 except on the two missing edges") {
    const auto m = tfc::build_pair_graph(foc);
    CHECK(m.dim() == 16);
    CHECK(m.edge_count() == 62);
    for (std::size_t u = 0; u < m.dim(); ++u) {
        const bool special = m.state_label(u) == "0110" || m.state_label(u) == "1001";
        CHECK(m.out_degree(u) == (special ? 3u : 4u));
    }
    CHECK_FALSE(m.entry(0b0110, 0b1001));
    CHECK_FALSE(m.entry(0b1001, 0b0110));
    // Overlap consistency.
    for (std::size_t u = 0; u < m.dim(); ++u)
        for (auto v : m.successors(u)) CHECK((u & 0b11) == (v >> 2));
}

TEST_CASE("all-zero vs all-one patterns forbid 00<->11 only") {
    const auto m = tfc::build_pair_graph(ForbiddenPair::parse("00", "11"));
    const auto d = m.dense();
    int zeros = 0;
    for (const auto& row : d)
        for (int e : row) zeros += e == 0;
    CHECK(zeros == 2);
    // Label (a,b) = (0,1) then (0,1): a-track 00, b-track 11.
    CHECK(d[0b01][0b01] == 0);
    CHECK(d[0b10][0b10] == 0);
}

TEST_CASE("dense constructor rejects malformed matrices") {
    CHECK_THROWS_AS(tfc::PairTransferMatrix(2, std::vector<std::vector<int>>{{1, 1}, {1, 1}}), tfc::InvalidArgument);
    std::vector<std::vector<int>> bad(16, std::vector<int>(16, 0));
    bad[0][5] = 1;  // 00->01 fine, 0000 -> 0101 breaks overlap
    CHECK_THROWS_AS(tfc::PairTransferMatrix(3, bad), tfc::InvalidArgument);
    CHECK_THROWS_AS(tfc::build_pair_graph(ForbiddenPair::parse("10101010101", "01010101010")),
                    tfc::ResourceLimit);
}

TEST_CASE("count_pairs examples") {
    CHECK(tfc::count_pairs(ftc, 1) == 4);
    CHECK(tfc::count_pairs(ftc, 2) == 14);
    CHECK(tfc::count_pairs(ftc, 3) == 50);
    CHECK(tfc::count_pairs(foc, 2) == 16);
    // 1^T A^2 1 computed independently.
    CHECK(tfc::count_walks(tfc::build_pair_graph(ftc), 2) == 50);
    CHECK_THROWS_AS(tfc::count_pairs(ftc, 0), tfc::InvalidArgument);
}

TEST_CASE("count_pairs matches brute force for n <= 10") {
    for (const auto& fp : {ftc, foc}) {
        for (int n = 1; n <= 10; ++n) {
            CAPTURE(n);
            CHECK(tfc::count_pairs(fp, n) == brute_pairs(fp, n));
        }
    }
    // The string-window oracle agrees as well on a few sizes.
    CHECK(tfc::count_pairs(ftc, 6) == oracle::count_pairs("10", "01", 6));
    CHECK(tfc::count_pairs(foc, 6) == oracle::count_pairs("101", "010", 6));
    const auto k4 = ForbiddenPair::parse("1100", "0110");
    for (int n = 1; n <= 7; ++n) CHECK(tfc::count_pairs(k4, n) == oracle::count_pairs("1100", "0110", n));
}

TEST_CASE("count invariants: symmetry, sandwich, parity") {
    for (const auto& fp : {ftc, foc, ForbiddenPair::parse("110", "011")}) {
        for (int n = 1; n <= 40; ++n) {
            const BigCount N = tfc::count_pairs(fp, n);
            CHECK(N == tfc::count_pairs(fp.swapped(), n));
            CHECK(N >= BigCount(1) << n);
            CHECK(N <= BigCount(1) << (2 * n));
            CHECK((N - (BigCount(1) << n)) % 2 == 0);
        }
    }
}

TEST_CASE("spectral radius") {
    const double expected = (3.0 + std::sqrt(17.0)) / 2.0;
    CHECK(tfc::spectral_radius(tfc::build_pair_graph(ftc)) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(tfc::spectral_radius(tfc::PairTransferMatrix::unconstrained(2)) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(tfc::spectral_radius(tfc::PairTransferMatrix::unconstrained(3)) == doctest::Approx(4.0).epsilon(1e-12));
    const double foc_lambda = tfc::spectral_radius(tfc::build_pair_graph(foc));
    CHECK(std::log2(foc_lambda / 2.0) == doctest::Approx(0.9636).epsilon(1e-3));
    CHECK_THROWS_AS(tfc::spectral_radius(tfc::build_pair_graph(ftc), {-1.0}), tfc::InvalidArgument);
    CHECK_THROWS_AS(tfc::spectral_radius(tfc::build_pair_graph(ftc), {1e-300, 3}), tfc::NumericalFailure);
}

TEST_CASE("alpha and growth rate") {
    CHECK(tfc::alpha(ftc) == doctest::Approx(-2.0 + std::log2(3.0 + std::sqrt(17.0))).epsilon(1e-12));
    CHECK(std::abs(tfc::alpha(ftc) - 0.832509) < 1e-5);
    CHECK(std::abs(tfc::alpha(foc) - 0.9636) < 1e-3);
    CHECK(tfc::growth_rate_of_N(foc) == doctest::Approx(tfc::alpha(foc) + 1.0).epsilon(1e-12));
    CHECK(std::log2(tfc::spectral_radius(tfc::PairTransferMatrix::unconstrained(2)) / 2) ==
          doctest::Approx(1.0));
}

TEST_CASE("finite-n growth estimate converges within 2/n") {
    for (const auto& fp : {ftc, foc}) {
        const double g = tfc::growth_rate_of_N(fp);
        for (int n = 1; n <= 64; ++n) {
            const double est = tfc::log2_big(tfc::count_pairs(fp, n)) / n;
            CHECK(std::abs(est - g) <= 2.0 / n);
        }
    }
    const double est64 = tfc::log2_big(tfc::count_pairs(ftc, 64)) / 64;
    CHECK(std::abs(est64 - std::log2((3.0 + std::sqrt(17.0)) / 2.0)) < 0.01);
}

TEST_CASE("log2_big") {
    CHECK(tfc::log2_big(BigCount(1)) == 0.0);
    CHECK(tfc::log2_big(BigCount(1) << 200) == doctest::Approx(200.0));
    CHECK(tfc::log2_big(BigCount(3) << 100) == doctest::Approx(100.0 + std::log2(3.0)));
    CHECK_THROWS_AS(tfc::log2_big(BigCount(0)), tfc::InvalidArgument);
}
