#include "missmass/errors.hpp"
#include "missmass/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace missmass;

namespace {

PointTable parse(const std::string& text, HeaderMode mode = HeaderMode::automatic) {
    std::istringstream in(text);
    return parse_csv_points(in, mode);
}

} // namespace

TEST_CASE("numeric csv with and without header") {
    auto t = parse("x,y\n1,2\n3,4\n");
    CHECK(t.header == std::vector<std::string>{"x", "y"});
    REQUIRE(t.points.size() == 2);
    CHECK(t.points[1] == Point{3.0, 4.0});
    auto u = parse("1,2\n3,4\n");
    CHECK(u.header.empty());
    CHECK(u.points.size() == 2);
    auto v = parse("1,2\n3,4\n", HeaderMode::present);
    CHECK(v.points.size() == 1);
}

TEST_CASE("comments and blank lines are skipped") {
    auto t = parse("# produced elsewhere\n\n0.5\n\n1.5\n");
    CHECK(t.points.size() == 2);
}

TEST_CASE("symbol columns become a discrete sample") {
    auto t = parse("a\na\nb\nc\n");
    CHECK(t.symbolic);
    const auto s = sample_from_table(t, {});
    CHECK(s.space().kind() == MetricKind::discrete);
    CHECK(s.size() == 4);
    CHECK(s.distance(0, 1) == 0.0);
    CHECK(s.distance(0, 2) == 1.0);
    CHECK(s.labels()[3] == "c");
}

TEST_CASE("parse errors carry the line number") {
    try {
        parse("1,2\n3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    try {
        parse("1\n2\nabc,1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("symbolic data cannot use a vector metric") {
    auto t = parse("a\nb\n");
    SpaceRequest req;
    req.kind = MetricKind::euclidean;
    CHECK_THROWS_AS(sample_from_table(t, req), ArgumentError);
}

TEST_CASE("metric requests select the space") {
    auto t = parse("0,0\n1,1\n");
    SpaceRequest req;
    req.kind = MetricKind::lp;
    req.p = 1.0;
    const auto s = sample_from_table(t, req);
    CHECK(s.distance(0, 1) == doctest::Approx(2.0));
}

TEST_CASE("json samples") {
    const auto s = sample_from_json_text("[[0,0],[3,4]]", {});
    CHECK(s.distance(0, 1) == doctest::Approx(5.0));
    const auto m = sample_from_json_text(R"({"matrix": [[0, 2, 1], [2, 0, 1.5], [1, 1.5, 0]]})", {});
    CHECK(m.space().kind() == MetricKind::precomputed);
    CHECK(m.distance(1, 2) == 1.5);
    const auto sym = sample_from_json_text(R"(["a", "b", "a"])", {});
    CHECK(sym.space().kind() == MetricKind::discrete);
    CHECK_THROWS_AS(sample_from_json_text("[[0],[1,2]]", {}), ParseError);
    CHECK_THROWS_AS(sample_from_json_text("{not json", {}), ParseError);
}

TEST_CASE("missing files name the path") {
    try {
        load_sample("/nonexistent/dir/points.csv", {});
        FAIL("expected an io error");
    } catch (const IoError& e) {
        CHECK(std::string(e.what()).find("/nonexistent/dir/points.csv") != std::string::npos);
    }
}

TEST_CASE("written samples read back identically") {
    const Sample s(MetricSpace::euclidean(2), {{0.1, 1.0 / 3.0}, {-2.5e-8, 7.0}});
    std::ostringstream out;
    write_sample_csv(out, s);
    std::istringstream in(out.str());
    const auto back = sample_from_table(parse_csv_points(in), {});
    CHECK(back.points() == s.points());
}

TEST_CASE("doubles print with 17 significant digits") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
}
