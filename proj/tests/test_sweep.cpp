#include "doctest.h"

#include "refcons/sweep.hpp"
#include "io_util.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

using namespace refcons;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "refcons_test_sweep";
    fs::create_directories(dir);
    return dir;
}

std::string csv_text(const std::vector<DegradationSeries>& series) {
    std::ostringstream os;
    write_csv(series, os);
    return os.str();
}

} // namespace

TEST_CASE("SweepConfig validation names the field") {
    SweepConfig c;
    c.sizes = {};
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("sizes"), ConfigError);
    c.sizes = {3, 0};
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("sizes"), ConfigError);
    c.sizes = {3};
    c.uses = 0;
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("uses"), ConfigError);
    c.uses = 2;
    c.theta = std::nan("");
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("theta"), ConfigError);
}

TEST_CASE("run_sweep shapes") {
    SweepConfig one;
    one.sizes = {5};
    one.uses = 1;
    const auto s = run_sweep(one);
    REQUIRE(s.size() == 1);
    CHECK(s[0].records.size() == 2);

    SweepConfig n1;
    n1.sizes = {1};
    n1.uses = 1;
    CHECK(*run_sweep(n1)[0].records[1].fidelity == doctest::Approx(0.853553).epsilon(1e-6));

    const auto def = run_sweep(SweepConfig{});
    REQUIRE(def.size() == 6);
    const std::vector<int> expected{5, 10, 15, 20, 25, 30};
    for (std::size_t k = 0; k < def.size(); ++k) {
        CHECK(def[k].config.cutoff_n == expected[k]);
        CHECK(def[k].records.size() == 31);
    }

    SweepConfig order;
    order.sizes = {9, 2, 4};
    order.uses = 2;
    const auto o = run_sweep(order);
    CHECK(o[0].config.cutoff_n == 9);
    CHECK(o[1].config.cutoff_n == 2);
    CHECK(o[2].config.cutoff_n == 4);
}

TEST_CASE("format_real") {
    CHECK(format_real(1.0) == "1.000000000000");
    CHECK(format_real(0.0) == "0.000000000000");
    CHECK(format_real(0.5) == "0.500000000000");
    CHECK(format_real(2.3219280948873622) == "2.321928094887");
    CHECK(format_real(1.234567890123456e-7) == "1.23456789012e-07");
    CHECK(format_real(-3e-5) == "-3.00000000000e-05");
    CHECK(format_real(1e-4) == "0.000100000000");
}

TEST_CASE("write_csv layout") {
    SweepConfig c;
    c.sizes = {10, 5};
    c.uses = 3;
    const auto series = run_sweep(c);
    const std::string text = csv_text(series);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.back() == '\n');

    const auto table = testing::parse_csv(text);
    CHECK(table.header == kCsvHeader);
    REQUIRE(table.rows.size() == 8);
    // sorted by N then mu, regardless of sweep order
    CHECK(table.rows[0].n == 5);
    CHECK(table.rows[4].n == 10);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(table.rows[i].mu == static_cast<int>(i));
    }

    std::istringstream lines(text);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(first.starts_with("5,0,,"));
    CHECK(testing::split_commas(first)[4] == "1.000000000000");
}

TEST_CASE("CSV round-trips the in-memory series") {
    const auto series = run_sweep(SweepConfig{});
    const auto table = testing::parse_csv(csv_text(series));
    REQUIRE(table.rows.size() == 186);
    std::size_t k = 0;
    for (const auto& s : series) {
        for (const auto& r : s.records) {
            const auto& row = table.rows[k++];
            CHECK(row.n == s.config.cutoff_n);
            CHECK(row.mu == r.mu);
            CHECK(row.fidelity.has_value() == r.fidelity.has_value());
            if (r.fidelity) {
                CHECK(std::abs(*row.fidelity - *r.fidelity) < 1e-9);
            }
            CHECK(std::abs(row.asymmetry_bits - r.asymmetry_bits) < 1e-9);
            CHECK(std::abs(row.normalized_asymmetry - r.normalized_asymmetry) < 1e-9);
            CHECK(std::abs(row.reference_entropy_bits - r.reference_entropy_bits) < 1e-9);
        }
    }
}

TEST_CASE("write_csv to an unwritable path raises OutputError") {
    const auto series = run_sweep(SweepConfig{{2}, 1});
    CHECK_THROWS_AS(write_csv(series, fs::path("/nonexistent-dir/x/out.csv")), OutputError);
}

TEST_CASE("render_svg") {
    const auto series = run_sweep(SweepConfig{});

    SUBCASE("asymmetry plot has one full polyline per size") {
        const std::string svg = render_svg(series, Metric::normalized_asymmetry);
        std::string err;
        CHECK_MESSAGE(testing::xml_well_formed(svg, &err), err);
        const auto counts = testing::polyline_point_counts(svg);
        REQUIRE(counts.size() == 6);
        for (auto c : counts) {
            CHECK(c == 31);
        }
        for (int n : {5, 10, 15, 20, 25, 30}) {
            CHECK(svg.find("N = " + std::to_string(n) + "<") != std::string::npos);
        }
        CHECK(svg.find("href") == std::string::npos);
    }
    SUBCASE("fidelity plot starts at the first use") {
        const std::string svg = render_svg(series, Metric::fidelity);
        CHECK(testing::xml_well_formed(svg));
        const auto counts = testing::polyline_point_counts(svg);
        REQUIRE(counts.size() == 6);
        for (auto c : counts) {
            CHECK(c == 30);
        }
    }
    SUBCASE("empty input is an error") {
        CHECK_THROWS_AS(render_svg({}, Metric::fidelity), std::invalid_argument);
    }
    SUBCASE("byte-identical on repeat") {
        const auto again = run_sweep(SweepConfig{});
        CHECK(render_svg(series, Metric::fidelity) == render_svg(again, Metric::fidelity));
        CHECK(csv_text(series) == csv_text(again));
    }
    SUBCASE("file output") {
        const fs::path p = scratch_dir() / "asym.svg";
        render_svg(series, Metric::normalized_asymmetry, p);
        CHECK(testing::read_file(p.string()) == render_svg(series, Metric::normalized_asymmetry));
        CHECK_THROWS_AS(render_svg(series, Metric::fidelity, fs::path("/nonexistent-dir/y.svg")), OutputError);
    }
}

TEST_CASE("xml checker rejects broken documents") {
    CHECK_FALSE(testing::xml_well_formed("<svg><g></svg>"));
    CHECK_FALSE(testing::xml_well_formed("<svg a=\"1></svg>"));
    CHECK_FALSE(testing::xml_well_formed(""));
    CHECK(testing::xml_well_formed("<?xml version=\"1.0\"?>\n<svg><g/></svg>\n"));
}
