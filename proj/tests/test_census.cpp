#include <cmath>
#include <set>

#include "doctest.h"
#include "spinecensus/census.hpp"
#include "spinecensus/errors.hpp"
#include "spinecensus/io.hpp"

using namespace spinecensus;

TEST_CASE("Bollobas formula golden values") {
    CHECK(bollobas_ln_estimate(4, 2) == doctest::Approx(-6.14529449109831).epsilon(1e-12));
    CHECK(bollobas_ln_exact(4, 2) == doctest::Approx(-6.14529449109831).epsilon(1e-12));
    CHECK(bollobas_ln_estimate(1, 2) == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(bollobas_ln_estimate(3, 3), ParityError);
    CHECK_THROWS_AS(bollobas_ln_exact(3, 3), ParityError);
    CHECK_THROWS_AS(bollobas_ln_exact(4, 1000), LimitError);
}

TEST_CASE("log-gamma and exact paths agree") {
    for (int r = 1; r <= 6; ++r)
        for (int n = 1; r * n <= 200; ++n) {
            if ((r * n) % 2) continue;
            double a = bollobas_ln_estimate(r, n), b = bollobas_ln_exact(r, n);
            CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)));
        }
}

TEST_CASE("residual approaches the Stirling terms") {
    CHECK(std::abs(asymptotic_residual(10000) - stirling_residual(10000)) <= 0.01);
    for (int n = 10; n <= 10000; n += 333) CHECK(std::abs(asymptotic_residual(n)) <= 5 + std::log(n));
}

TEST_CASE("one-cell census for small n") {
    const std::size_t expected[] = {1, 1, 2};
    for (int n = 6; n <= 8; ++n) {
        auto result = census_one_cell(n);
        CHECK(result.anomalies.empty());
        CHECK(result.source_graphs == enumerate_A(n - 1).size());
        CHECK(result.records.size() >= result.source_graphs);
        CHECK(result.records.size() == expected[n - 6]);
        std::set<CanonicalCode> codes;
        for (auto& r : result.records) {
            CHECK(r.n == n);
            CHECK(r.cell_count == 1);
            CHECK(count_cells(r.spine) == 1);
            CHECK(canonical_spine(r.spine) == r.spine_code);
            codes.insert(r.spine_code);
            auto back = io::census_record_from_json(io::to_json(r));
            CHECK(back.spine == r.spine);
        }
        CHECK(codes.size() == result.records.size());
    }
    CHECK_THROWS_AS(census_one_cell(1), LimitError);
}

TEST_CASE("census is independent of parallelism") {
    CensusOptions one, many;
    many.jobs = 4;
    auto a = census_one_cell(8, one), b = census_one_cell(8, many);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i].spine == b.records[i].spine);
}

TEST_CASE("bounds table") {
    auto rows = bounds_table(1, 12);
    REQUIRE(rows.size() == 12);
    CHECK(kTheoremUpperConstant == doctest::Approx(1 + std::log(270.0)).epsilon(1e-15));
    CHECK(kIntroUpperConstant == doctest::Approx(std::log(180.0)).epsilon(1e-15));
    CHECK(kTheoremUpperConstant == doctest::Approx(6.5984).epsilon(1e-4));
    for (auto& r : rows) {
        CHECK(r.ordered());
        CHECK(r.ln_C_over_A_bound == doctest::Approx(r.n * (1 + std::log(15.0))));
        if (r.ln_C_over_A) CHECK(*r.ln_C_over_A_ok);
    }
    CHECK(rows[4].count_A == 1u);
    CHECK(rows[4].count_C == 28u);
    CHECK(rows[5].count_C == 97u);
    CHECK(rows[8].upper_estimated);
    CHECK(!rows[7].upper_estimated);
    CHECK(rows[9].lower_estimated);
    CHECK_THROWS_AS(bounds_table(5, 4), LimitError);
}
