#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "reference_values.hpp"
#include "zenoptics/chain_json.hpp"
#include "zenoptics/csv.hpp"
#include "zenoptics/manifest.hpp"
#include "zenoptics/svg.hpp"
#include "zenoptics/trig.hpp"
#include "zenoptics/units.hpp"
#include "zenoptics/zeno.hpp"

using namespace zenoptics;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("angle parsing requires an explicit unit") {
    CHECK(parse_angle("90deg") == kHalfPi);  // (90*pi)/180 is exactly pi/2
    CHECK(parse_angle("45deg") == doctest::Approx(kHalfPi / 2.0).epsilon(1e-15));
    CHECK(parse_angle("-90deg") == -kHalfPi);
    CHECK(parse_angle("1.5rad") == 1.5);
    CHECK(parse_angle("1e2deg") == doctest::Approx(100.0 * kPi / 180.0).epsilon(1e-15));

    CHECK_THROWS_WITH_AS(parse_angle("90"), doctest::Contains("deg"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_angle("deg"), std::invalid_argument);
    CHECK_THROWS_AS(parse_angle("90 deg"), std::invalid_argument);
    CHECK_THROWS_AS(parse_angle("90degrees"), std::invalid_argument);
    CHECK_THROWS_AS(parse_angle(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_angle("infrad"), std::invalid_argument);
}

TEST_CASE("doubles format at nine significant digits, locale-free") {
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(0.530790042944955) == "0.530790043");
    CHECK(format_double(-1.5e-7) == "-1.5e-07");
    // Round trip at printed precision.
    const double v = 0.73313344054732326;
    const double parsed = std::stod(format_double(v));
    CHECK(std::fabs(parsed - v) <= 5e-9 * v);
}

TEST_CASE("trace CSV round-trips within printed precision") {
    ZenoConfig cfg;
    cfg.n = 4;
    const IntensityTrace trace = sample_trace(cfg, TraceKind::measured, 10);
    const std::string csv = trace_csv(trace);
    CHECK(csv.rfind("z,intensity\n", 0) == 0);

    const NumericCsv parsed = parse_numeric_csv(csv);
    REQUIRE(parsed.header == std::vector<std::string>{"z", "intensity"});
    REQUIRE(parsed.rows.size() == trace.points.size());
    for (std::size_t i = 0; i < parsed.rows.size(); ++i) {
        CHECK(std::fabs(parsed.rows[i][0] - trace.points[i].z) <=
              5e-9 * std::max(1.0, std::fabs(trace.points[i].z)));
        CHECK(std::fabs(parsed.rows[i][1] - trace.points[i].intensity) <=
              5e-9 * std::max(1.0, trace.points[i].intensity));
    }
}

TEST_CASE("sweep CSV carries ratio and scaled deficit columns") {
    const std::vector<std::size_t> ns = {1, 2, 4};
    const ZenoSweepResult sweep = zeno_sweep(ns, ZenoConfig{});
    const std::string csv = sweep_csv(sweep);
    const NumericCsv parsed = parse_numeric_csv(csv);
    REQUIRE(parsed.header ==
            std::vector<std::string>{"N", "ratio", "deficit_times_N"});
    REQUIRE(parsed.rows.size() == 3);
    CHECK(parsed.rows[0][1] == 0.0);
    CHECK(parsed.rows[1][1] == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(parsed.rows[2][1] ==
          doctest::Approx(zenoptics::testref::kRatio4).epsilon(1e-8));
    CHECK(parsed.rows[2][2] ==
          doctest::Approx(4.0 * (1.0 - zenoptics::testref::kRatio4)).epsilon(1e-8));
}

TEST_CASE("numeric CSV parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_numeric_csv(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_numeric_csv("a,b\n1,x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_numeric_csv("a,b\n1\n"), std::invalid_argument);
}

TEST_CASE("SVG output is deterministic and structurally sound") {
    PlotSpec spec;
    spec.title = "demo & more";
    spec.x_label = "x";
    spec.y_label = "y";
    spec.series.push_back({"one", {{0.0, 1.0}, {1.0, 0.0}}});

    const std::string first = render_svg(spec);
    CHECK(first == render_svg(spec));
    CHECK(count_occurrences(first, "<polyline") == 1);
    CHECK(first.find("demo &amp; more") != std::string::npos);
    CHECK(first.find("</svg>") != std::string::npos);
    CHECK(first.find("http://www.w3.org/2000/svg") != std::string::npos);

    spec.series.push_back({"two", {{0.0, 0.0}, {1.0, 1.0}}});
    const std::string two = render_svg(spec);
    CHECK(count_occurrences(two, "<polyline") == 2);
    CHECK(two.find(">one</text>") != std::string::npos);  // legend entries
    CHECK(two.find(">two</text>") != std::string::npos);

    PlotSpec log_spec = spec;
    log_spec.log_x = true;
    CHECK_THROWS_AS(render_svg(log_spec), std::invalid_argument);  // x = 0 present

    PlotSpec empty;
    CHECK_THROWS_AS(render_svg(empty), std::invalid_argument);
    empty.series.push_back({"none", {}});
    CHECK_THROWS_AS(render_svg(empty), std::invalid_argument);

    PlotSpec bad;
    bad.series.push_back({"nan", {{0.0, std::nan("")}}});
    CHECK_THROWS_AS(render_svg(bad), std::invalid_argument);
}

TEST_CASE("chain documents parse, propagate and report") {
    const nlohmann::json doc = {
        {"label", "demo"},
        {"input", {{"intensity", 2.0}, {"axis_deg", 90.0}}},
        {"elements",
         {{{"kind", "polarizer"}, {"axis_deg", 90.0}}}}};
    const ElementChain chain = chain_from_json(doc);
    CHECK(chain.label == "demo");
    REQUIRE(chain.elements.size() == 1);

    const nlohmann::json report = chain_report(chain);
    CHECK(report.at("input_intensity").get<double>() == doctest::Approx(2.0));
    CHECK(report.at("output_intensity").get<double>() == doctest::Approx(2.0));
    CHECK(report.at("total_transmittance").get<double>() == doctest::Approx(1.0));
    CHECK(report.at("final_state").at("type") == "jones");
    CHECK(report.at("elements").size() == 1);
    CHECK(report.at("elements")[0].at("kind") == "polarizer");
}

TEST_CASE("chain: quarter-turn rotator into a crossed analyzer transmits fully") {
    const nlohmann::json doc = {
        {"input", {{"intensity", 1.0}, {"axis_deg", 90.0}}},
        {"elements",
         {{{"kind", "faraday"}, {"angle_deg", 90.0}, {"length_m", 1.0}},
          {{"kind", "polarizer"}, {"axis_deg", 0.0}}}}};
    const nlohmann::json report = chain_report(chain_from_json(doc));
    CHECK(report.at("output_intensity").get<double>() == 1.0);
}

TEST_CASE("chain: four rotate-and-measure stages match the closed form") {
    nlohmann::json elements = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
        elements.push_back(
            {{"kind", "faraday"}, {"angle_deg", 22.5}, {"length_m", 0.25}});
        elements.push_back({{"kind", "polarizer"}, {"axis_deg", 90.0}});
    }
    const nlohmann::json doc = {
        {"input", {{"intensity", 1.0}, {"axis_deg", 90.0}}}, {"elements", elements}};
    const nlohmann::json report = chain_report(chain_from_json(doc));
    CHECK(report.at("output_intensity").get<double>() ==
          doctest::Approx(zenoptics::testref::kRatio4).epsilon(1e-12));
}

TEST_CASE("chain with a depolarizer reports a Stokes final state") {
    const nlohmann::json doc = {
        {"input", {{"intensity", 2.0}, {"axis_deg", 90.0}}},
        {"elements", {{{"kind", "depolarizer"}, {"p", 0.5}}}}};
    const nlohmann::json report = chain_report(chain_from_json(doc));
    CHECK(report.at("final_state").at("type") == "stokes");
    CHECK(report.at("output_intensity").get<double>() == doctest::Approx(2.0));
}

TEST_CASE("chain parsing errors name the offending element") {
    const nlohmann::json doc = {
        {"input", {{"intensity", 1.0}, {"axis_deg", 90.0}}},
        {"elements",
         {{{"kind", "faraday"}, {"angle_deg", 90.0}, {"length_m", 1.0}},
          {{"kind", "prism"}}}}};
    CHECK_THROWS_WITH_AS(chain_from_json(doc), doctest::Contains("elements[1]"),
                         std::invalid_argument);

    CHECK_THROWS_AS(chain_from_json(nlohmann::json::array()), std::invalid_argument);
    CHECK_THROWS_AS(chain_from_json(nlohmann::json{{"input", 1}}), std::invalid_argument);

    nlohmann::json no_elements = {{"input", {{"intensity", 1.0}, {"axis_deg", 0.0}}},
                                  {"elements", nlohmann::json::array()}};
    CHECK_THROWS_AS(chain_from_json(no_elements), std::invalid_argument);

    nlohmann::json missing_field = {
        {"input", {{"intensity", 1.0}, {"axis_deg", 0.0}}},
        {"elements", {{{"kind", "faraday"}, {"angle_deg", 5.0}}}}};
    CHECK_THROWS_WITH_AS(chain_from_json(missing_field),
                         doctest::Contains("length_m"), std::invalid_argument);
}

TEST_CASE("manifest survives a write/read round trip") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "zenoptics-io-test";
    fs::create_directories(dir);
    const fs::path path = dir / "demo.manifest.json";

    RunManifest manifest;
    manifest.command = "sweep";
    manifest.config = {{"n_min", 1}, {"n_max", 4}};
    manifest.outputs = {"demo.csv", "demo.svg"};
    manifest.version = "0.1.0";
    manifest.timestamp_utc = utc_timestamp();
    write_manifest(path.string(), manifest);

    const RunManifest back = read_manifest(path.string());
    CHECK(back.command == manifest.command);
    CHECK(back.config == manifest.config);
    CHECK(back.outputs == manifest.outputs);
    CHECK(back.version == manifest.version);
    CHECK(back.timestamp_utc == manifest.timestamp_utc);

    CHECK_THROWS_AS(read_manifest((dir / "missing.json").string()), std::runtime_error);
    fs::remove_all(dir);
}

TEST_CASE("timestamps are ISO-8601 UTC") {
    const std::string ts = utc_timestamp();
    REQUIRE(ts.size() == 20);
    CHECK(ts[4] == '-');
    CHECK(ts[7] == '-');
    CHECK(ts[10] == 'T');
    CHECK(ts[13] == ':');
    CHECK(ts[16] == ':');
    CHECK(ts.back() == 'Z');
}
