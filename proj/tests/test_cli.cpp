#include "cli.hpp"
#include "io.hpp"

#include "fpsl/series.hpp"

#include <doctest.h>

#include <sstream>

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "fpsl");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int status = fpsl::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("coeffs examples")
{
    auto an = cli({"coeffs", "--target", "an", "--order", "3", "--format", "json"});
    CHECK(an.status == 0);
    CHECK(an.out == "[\"1\",\"-1\",\"5/4\"]\n");
    auto an_text = cli({"coeffs", "--target", "an", "--order", "3"});
    CHECK(an_text.out == "   1  1\n   2  -1\n   3  5/4\n");
    auto row = cli({"coeffs", "--target", "stirling", "--param", "n=2"});
    CHECK(row.out == "   0  0\n   1  -1\n   2  1\n");

    auto phi = cli({"coeffs", "--target", "phi", "--param", "p=2", "--order", "8", "--format", "json"});
    CHECK(phi.status == 0);
    auto want = fpsl::series_log(fpsl::polynomial_series({1, 1, fpsl::Rat(1, 8)}, 8));
    CHECK(phi.out == fpsl::io::dump(fpsl::io::to_json(want)) + "\n");

    auto st = cli({"coeffs", "--target", "stirling", "--param", "n=4", "--format", "json"});
    CHECK(st.out == "[\"0\",\"-6\",\"11\",\"-6\",\"1\"]\n");
}

TEST_CASE("every target produces canonical JSON")
{
    std::string f = R"({"variable":"x","valuation":1,"order":8,"coefficients":["1","1/2","-1"]})";
    std::vector<std::vector<std::string>> cases{
        {"tf", "--input", f}, {"tinv", "--input", f}, {"qinv", "--input", f}, {"qtq", "--input", f},
        {"fn", "--param", "n=2", "--param", "A=1/3"}, {"fn-recip", "--param", "n=3"}, {"phi", "--param", "p=1/2"},
        {"phi0"}, {"psi"}, {"lambertw"}, {"theta", "--param", "m=1/4"}, {"nu"}, {"an"}, {"pn", "--input", f},
        {"ps", "--input", f}, {"lng", "--input", f}, {"stirling"},
    };
    for (auto args : cases) {
        CAPTURE(args.front());
        args.insert(args.begin(), {"coeffs", "--target"});
        args.insert(args.end(), {"--order", "6", "--format", "json"});
        auto r = cli(args);
        REQUIRE(r.status == 0);
        CHECK(fpsl::io::canonical(r.out) + "\n" == r.out);
        args.resize(args.size() - 2);
        CHECK(cli(args).status == 0); // text form
    }
}

TEST_CASE("configuration errors exit with status 2")
{
    auto unknown = cli({"coeffs", "--target", "bogus", "--format", "json"});
    CHECK(unknown.status == 2);
    auto j = fpsl::io::Json::parse(unknown.err);
    CHECK(j["error"]["kind"] == "Config");
    CHECK(j["error"]["message"].get<std::string>().find("lambertw") != std::string::npos);

    CHECK(cli({"coeffs", "--target", "phi"}).status == 2);
    CHECK(cli({"coeffs", "--target", "phi", "--param", "q=1"}).status == 2);
    CHECK(cli({"coeffs", "--target", "phi", "--param", "p=one"}).status == 2);
    CHECK(cli({"coeffs", "--target", "tf"}).status == 2);
    CHECK(cli({"coeffs", "--target", "psi", "--format", "xml"}).status == 2);
    CHECK(cli({"verify", "--suite", "section7"}).status == 2);
    CHECK(cli({}).status == 2);
    auto degenerate = cli({"coeffs", "--target", "phi", "--param", "p=-2", "--format", "json"});
    CHECK(degenerate.status == 2);
    CHECK(fpsl::io::Json::parse(degenerate.err)["error"]["kind"] == "DegenerateParameter");
}

TEST_CASE("verify output is independent of parallelism")
{
    auto serial = cli({"verify", "--suite", "section3", "--order", "8", "--format", "json"});
    auto parallel = cli({"verify", "--suite", "section3", "--order", "8", "--format", "json", "--parallel"});
    CHECK(serial.status == 0);
    CHECK(serial.out == parallel.out);
    auto text = cli({"verify", "--suite", "appendix-b", "--order", "8"});
    CHECK(text.status == 0);
    CHECK(text.out.find("-- appendix-b:") != std::string::npos);
}

TEST_CASE("list names every target and suite")
{
    auto r = cli({"list"});
    CHECK(r.status == 0);
    for (const char* name : {"tf", "qtq", "fn-recip", "lng", "stirling", "section1", "appendix-b", "all"})
        CHECK(r.out.find(name) != std::string::npos);
}
