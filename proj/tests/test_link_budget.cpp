#include "erep/link_budget.hpp"

#include <doctest.h>

#include <cmath>

using namespace erep;

namespace {
constexpr double kFreq = 5180e6;
constexpr double kNoise = -85.0;
} // namespace

TEST_CASE("free-space path loss at reference distances") {
    CHECK(path_loss_db(kFreq, 1.0) == doctest::Approx(46.72836738095334).epsilon(1e-12));
    CHECK(path_loss_db(kFreq, 100.0) == doctest::Approx(86.72836738095334).epsilon(1e-12));
}

TEST_CASE("path loss grows 20 dB per decade of distance") {
    const double d1 = path_loss_db(kFreq, 3.0);
    const double d2 = path_loss_db(kFreq, 30.0);
    CHECK(d2 - d1 == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("snr is transmit power minus loss minus noise floor") {
    const double snr = snr_db(20.0, kFreq, 100.0, kNoise);
    CHECK(snr == doctest::Approx(20.0 - 86.72836738095334 + 85.0).epsilon(1e-12));
}

TEST_CASE("max_range inverts the loss model at reference powers") {
    CHECK(max_range(20.0, kFreq, kNoise, 30.0) == doctest::Approx(25.916815137709758).epsilon(1e-12));
    CHECK(max_range(21.0, kFreq, kNoise, 30.0) == doctest::Approx(29.07914486124282).epsilon(1e-12));
    CHECK(max_range(22.0, kFreq, kNoise, 30.0) == doctest::Approx(32.62733716963455).epsilon(1e-12));
    CHECK(max_range(20.0, kFreq, kNoise, 38.0) == doctest::Approx(10.317669944231675).epsilon(1e-12));
    CHECK(max_range(20.0, kFreq, kNoise, 11.0) == doctest::Approx(230.98385804922665).epsilon(1e-12));
}

TEST_CASE("snr at max_range hits the target exactly") {
    for (double target : {11.0, 24.0, 30.0, 38.0}) {
        const double r = max_range(20.0, kFreq, kNoise, target);
        CHECK(snr_db(20.0, kFreq, r, kNoise) == doctest::Approx(target).epsilon(1e-9));
    }
}

TEST_CASE("ladder endpoints carry the fixed thresholds") {
    const McsTable t = default_mcs_table();
    REQUIRE(t.rows.size() == 10);
    CHECK(t.rows.front().index == 0);
    CHECK(t.rows.front().min_snr_db == 11.0);
    CHECK(t.rows.front().data_rate_bps == 58.5e6);
    CHECK(t.rows.back().index == 9);
    CHECK(t.rows.back().min_snr_db == 38.0);
    CHECK(t.rows.back().data_rate_bps == 780e6);
}

TEST_CASE("target_mcs picks the cheapest row whose fair share covers demand") {
    const McsTable t = default_mcs_table();
    const McsRow low = target_mcs(29e6, 2, t);
    CHECK(low.index == 0);
    CHECK(low.min_snr_db == 11.0);
    CHECK(low.data_rate_bps == 58.5e6);
    const McsRow top = target_mcs(390e6, 2, t);
    CHECK(top.index == 9);
    CHECK(top.min_snr_db == 38.0);
    CHECK(top.data_rate_bps == 780e6);
}

TEST_CASE("the equal-share demands all land on the same mid-ladder row") {
    const McsTable t = default_mcs_table();
    // 500 Mbit/s split over 2, 5, 10, 20 FAPs
    const double demands[] = {250e6, 100e6, 50e6, 25e6};
    const std::size_t counts[] = {2, 5, 10, 20};
    for (int i = 0; i < 4; ++i) {
        const McsRow row = target_mcs(demands[i], counts[i], t);
        CHECK(row.index == 6);
        CHECK(row.min_snr_db == 30.0);
    }
}

TEST_CASE("demand beyond the top fair share is infeasible") {
    const McsTable t = default_mcs_table();
    CHECK_THROWS_AS(target_mcs(391e6, 2, t), infeasible_demand_error);
    CHECK_THROWS_AS(target_mcs(800e6, 1, t), infeasible_demand_error);
}

TEST_CASE("degenerate distances and frequencies are rejected") {
    CHECK_THROWS_AS(path_loss_db(kFreq, 0.0), domain_error);
    CHECK_THROWS_AS(path_loss_db(kFreq, -1.0), domain_error);
    CHECK_THROWS_AS(path_loss_db(0.0, 10.0), domain_error);
}

TEST_CASE("mis-ordered MCS tables are rejected") {
    McsTable t = default_mcs_table();
    std::swap(t.rows[3], t.rows[4]);
    CHECK_THROWS_AS(validate(t), invalid_input_error);
    McsTable empty;
    CHECK_THROWS_AS(validate(empty), invalid_input_error);
}
