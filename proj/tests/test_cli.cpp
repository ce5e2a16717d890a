#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "svg.hpp"
#include "trimap/error.hpp"
#include "trimap/text_io.hpp"

using namespace trimap;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const auto start = std::chrono::steady_clock::now();
    const int code = cli::run(args, out, err);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK_MESSAGE(secs < 5.0, "command took " << secs << " s");
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle)
{
    return hay.find(needle) != std::string::npos;
}

std::size_t count(const std::string& hay, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
        ++n;
    return n;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path temp_file(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "trimap_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

const std::vector<std::string> kN{"-3", "2", "2", "2", "-3", "2", "2", "2", "-3"};

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST_CASE("canon")
{
    auto r = run({"canon", "-1/5,3/5,3/5"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out == "2/5,2/5,1/5 pointgroup=2\n");

    r = run({"canon", "1/3,1/3,1/3"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out == "1/3,1/3,1/3 pointgroup=6\n");

    r = run({"canon", "1/2,1/2,1/2"});
    CHECK(r.code == cli::kInputError);
    CHECK(contains(r.err, "not on plane A"));

    r = run({"canon", "1/2;x"});
    CHECK(r.code == cli::kInputError);
}

TEST_CASE("classify")
{
    auto r = run({"classify", "-1", "1", "1", "1", "-1", "1", "1", "1", "-1"});
    CHECK(r.code == cli::kSuccess);
    CHECK(contains(r.out, "TypeI c0=-1 c1=1 |det|=4 expansion=-2"));

    r = run({"classify", "1 0 0 0 1 0 0 0 1"});
    CHECK(r.code == cli::kSuccess);
    CHECK(contains(r.out, "TypeI c0=1 c1=0 |det|=1"));

    r = run({"classify", "2", "0", "0", "-1", "1", "0", "0", "0", "1"});
    CHECK(r.code == cli::kDomainFailure);
    CHECK(contains(r.out, "NotEquilateral"));

    r = run({"classify", "1", "2", "3"});
    CHECK(r.code == cli::kInputError);
    r = run({"classify", "1", "0", "0", "0", "1", "0", "0", "0", "x"});
    CHECK(r.code == cli::kInputError);
}

TEST_CASE("classify reads a matrix file")
{
    const fs::path p = temp_file("m.json");
    std::ofstream(p) << R"({"matrix": [[0, 1, -1], [-1, 0, 1], [2, 0, 1]]})";
    const auto r = run({"classify", p.string()});
    CHECK(r.code == cli::kSuccess);
    CHECK(contains(r.out, "TypeIII k=1 |det|=3"));
    CHECK(run({"classify", (fs::temp_directory_path() / "trimap_cli_test" / "missing.txt").string()}).code
          != cli::kSuccess);
}

TEST_CASE("orbit")
{
    auto r = run({"orbit", "pedal", "3/7,2/7,2/7"});
    CHECK(r.code == cli::kSuccess);
    CHECK(contains(r.out, "preperiod=0 period=3"));

    r = run({"orbit", "pedal", "1/2,1/4,1/4"});
    CHECK(r.code == cli::kSuccess);
    CHECK(contains(r.out, "1,0,0"));
    CHECK(contains(r.out, "flat=true right=true"));

    r = run({"orbit", "identity", "5/11,4/11,2/11"});
    CHECK(r.code == cli::kSuccess);
    CHECK(contains(r.out, "preperiod=0 period=1"));

    r = run({"orbit", "pedal", "3/7,2/7,2/7", "--max-steps", "2"});
    CHECK(r.code == cli::kDomainFailure);
}

TEST_CASE("partition, itinerary and decompose")
{
    auto r = run({"partition", "pedal"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.rfind("cells=4\n", 0) == 0);
    CHECK(count(r.out, "\ncell ") == 4);

    r = run({"partition", "identity"});
    CHECK(r.out.rfind("cells=1\n", 0) == 0);

    r = run({"partition", "pedal", "--format", "json"});
    CHECK(r.code == cli::kSuccess);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["cells"].size() == 4);
    CHECK(doc["abs_det"] == "4");
    for (const auto& c : doc["cells"])
        CHECK(c["vertices"].size() == 3);

    r = run(cat({"decompose"}, kN));
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.rfind("r=4/5,3/4,2/3 antipedal=true\n", 0) == 0);

    r = run({"decompose", "0", "1", "-1", "-1", "0", "1", "2", "0", "1"});
    CHECK(r.code == cli::kDomainFailure);

    r = run({"itinerary", "pedal", "3/7,2/7,2/7", "--length", "6"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.size() >= 6);
}

TEST_CASE("stats output is seeded")
{
    const std::vector<std::string> args{"stats", "pedal", "--points", "40", "--length", "10", "--seed", "3"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == cli::kSuccess);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "symbols=4"));
    CHECK(count(a.out, "\nsymbol ") == 4);
    CHECK(count(a.out, "\npair ") == 16);
}

TEST_CASE("help and unknown commands")
{
    CHECK(run({"--help"}).code == cli::kSuccess);
    CHECK(run({"frobnicate"}).code == cli::kInputError);
    CHECK(run({}).code == cli::kInputError);
}

TEST_CASE("render partition")
{
    const fs::path p1 = temp_file("p1.svg"), p2 = temp_file("p2.svg");
    CHECK(run({"render", "pedal", "--mode", "partition", "--out", p1.string(), "--seed", "1"}).code == cli::kSuccess);
    CHECK(run({"render", "pedal", "--mode", "partition", "--out", p2.string(), "--seed", "1"}).code == cli::kSuccess);
    const std::string a = slurp(p1), b = slurp(p2);
    CHECK(a == b);
    CHECK(count(a, "<polygon") == 4);
    for (int i = 0; i < 4; ++i)
        CHECK(contains(a, "id=\"cell-" + std::to_string(i) + "\""));
    CHECK(a.rfind("<?xml", 0) == 0);
    CHECK(contains(a, "</svg>"));
}

TEST_CASE("render image")
{
    const fs::path p = temp_file("img.svg");
    REQUIRE(run({"render", "identity", "--mode", "image", "--out", p.string()}).code == cli::kSuccess);
    const std::string id = slurp(p);
    CHECK(count(id, "id=\"image\"") == 1);

    // N A_p is A_p scaled by 5 about b, so its projected side is 5 times that of A_p.
    const double side = std::hypot(svg::project(Vec3Q(1, 0, 0)).x - svg::project(Vec3Q(0, 1, 0)).x,
                                   svg::project(Vec3Q(1, 0, 0)).y - svg::project(Vec3Q(0, 1, 0)).y);
    const Mat3Q n = parse_matrix("-3 2 2 2 -3 2 2 2 -3");
    const svg::Point c0 = svg::project(n.column(0)), c1 = svg::project(n.column(1));
    CHECK(std::hypot(c0.x - c1.x, c0.y - c1.y) == doctest::Approx(5 * side));
    REQUIRE(run(cat({"render"}, cat(kN, {"--mode", "image", "--out", p.string()}))).code == cli::kSuccess);
    CHECK(count(slurp(p), "id=\"image\"") == 1);
}

TEST_CASE("render orbit and write errors")
{
    const fs::path p = temp_file("orbit.svg");
    CHECK(run({"render", "pedal", "--mode", "orbit", "--start", "3/7,2/7,2/7", "--length", "5", "--out",
               p.string()})
              .code
          == cli::kSuccess);
    CHECK(contains(slurp(p), "<polyline"));
    CHECK(run({"render", "pedal", "--mode", "partition", "--out", "/nonexistent/dir/x.svg"}).code == cli::kIoError);
    CHECK(run({"render", "pedal", "--mode", "bogus", "--out", p.string()}).code == cli::kInputError);
}

TEST_CASE("svg projection")
{
    const svg::Point b = svg::project(Vec3Q(Rational(1, 3), Rational(1, 3), Rational(1, 3)));
    CHECK(b.x == doctest::Approx(0));
    CHECK(b.y == doctest::Approx(0));
    // The vertices of A_p are equidistant from b.
    for (const Vec3Q& e : {Vec3Q(1, 0, 0), Vec3Q(0, 1, 0), Vec3Q(0, 0, 1)}) {
        const svg::Point q = svg::project(e);
        CHECK(std::hypot(q.x, q.y) == doctest::Approx(std::sqrt(2.0 / 3)));
    }
}

TEST_CASE("text parsing")
{
    CHECK(parse_shape("1/2, 1/4,1/4") == Vec3Q(Rational(1, 2), Rational(1, 4), Rational(1, 4)));
    for (const char* bad : {"1/2,1/4", "1/2,1/4,1/4,0", "a,b,c", ""})
        CHECK_THROWS_AS(parse_shape(bad), Error);
    CHECK(parse_matrix("1,0,0, 0,1,0, 0,0,1") == Mat3Q::identity());
    CHECK(parse_matrix(R"({"matrix": [["1/2", 0, 0], [0, 1, 0], [0, 0, 1]]})")(0, 0) == Rational(1, 2));
    CHECK_THROWS_AS(parse_matrix(R"({"matrix": [[1, 0], [0, 1]]})"), Error);
    CHECK_THROWS_AS(parse_matrix("{not json"), Error);
}

TEST_CASE("text formatting")
{
    Itinerary it{CanonicalShape(Vec3Q(1, 0, 0))};
    it.symbols = {0, 3, 1};
    CHECK(format_itinerary(it, 4) == "031");
    it.symbols = {12, 3};
    it.boundary_steps = {1};
    CHECK(format_itinerary(it, 25) == "12 3 boundary=1");
}
