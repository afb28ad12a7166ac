#include "gammacheb/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "gammacheb");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = gammacheb::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / ("gammacheb_test_" + name);
    std::ofstream(p) << content;
    return p.string();
}

gammacheb::Json parse(const std::string& s) { return gammacheb::Json::parse(s); }

}  // namespace

TEST_CASE("gamma subcommand", "[cli]") {
    auto r = run({"gamma", "--in", temp_file("h111.json", "[1,1,1]")});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"gamma\":[\"1\",\"-1\"],\"routes_agree\":true}\n");
    auto bad = run({"gamma", "--in", temp_file("h1215.json", "[1,2,1,5]")});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    auto v = run({"gamma", "--json", "[\"1\",\"4\",\"1\"]", "--verify", "--order", "6"});
    CHECK(v.code == 0);
    CHECK(parse(v.out)["reconstructs"] == true);
    CHECK(run({"gamma", "--json", "[1,2,2,1]", "--reduce-odd"}).out.find("[\"1\",\"-1\"]") != std::string::npos);
    CHECK(run({"gamma", "--json", "[1,1,1]", "--order", "1"}).code == 2);
}

TEST_CASE("input errors", "[cli]") {
    auto m = run({"gamma", "--in", temp_file("broken.json", "[1,\n 2,\n ]")});
    CHECK(m.code == 2);
    CHECK(m.err.find("line 3") != std::string::npos);
    CHECK(run({"gamma", "--in", "/nonexistent/h.json"}).code == 2);
    CHECK(run({"gamma", "--json", "[1,1,1]", "--bogus"}).code == 2);
    CHECK(run({"nosuch"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"gamma", "--json", "[\"1/0\"]"}).code == 2);
    CHECK(run({"sweep", "nope", "3"}).code == 2);
    CHECK(run({"subdivide", "--json", "{\"facets\":[[0,1]]}", "--edge", "0,x"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("g-poly and root subcommands", "[cli]") {
    auto g = run({"g-poly", "--json", "[1,0,0,0,1]"});
    CHECK(g.code == 0);
    CHECK(parse(g.out)["g"] == gammacheb::Json::parse("[\"-2\",\"0\",\"1\"]"));
    auto rr = run({"realroot", "--json", "[2,-3,1]"});
    CHECK(rr.code == 0);
    CHECK(parse(rr.out)["lhs_real_rooted"] == true);
    CHECK(parse(rr.out)["agree"] == true);
    auto cl = run({"cheblin", "--json", "[0,1]"});
    CHECK(cl.code == 0);
    CHECK(parse(cl.out)["agree"] == false);
    CHECK(run({"cheblin", "--json", "[0,1]", "--verify"}).code == 1);
}

TEST_CASE("complex subcommands", "[cli]") {
    const std::string tri = "{\"facets\":[[0,1],[1,2],[0,2]]}";
    auto s = run({"subdivide", "--json", tri, "--verify"});
    CHECK(s.code == 0);
    CHECK(parse(s.out)["f_vector"] == gammacheb::Json::parse("[1,6,6]"));
    auto e = run({"subdivide", "--json", "{\"facets\":[[0,1]]}", "--edge", "0,1"});
    CHECK(parse(e.out)["facets"] == gammacheb::Json::parse("[[0,2],[1,2]]"));
    auto f = run({"fvector", "--json", "{\"facets\":[[0,1]]}"});
    CHECK(parse(f.out)["F_polynomial"] == gammacheb::Json::parse("[\"1/4\",\"1/2\",\"1/4\"]"));
    auto v = run({"verify-subdiv", "--json", tri});
    CHECK(v.code == 0);
    CHECK(parse(v.out)["order_independent"] == true);
    CHECK(run({"fvector", "--json", "{\"faces\":[]}"}).code == 2);
}

TEST_CASE("ce-index and sl2 subcommands", "[cli]") {
    auto c = run({"ce-index", "2"});
    CHECK(c.code == 0);
    CHECK(c.out.rfind("2·cc − ee\n", 0) == 0);
    CHECK(c.out.find("c=x, e=1: 2x^2 - 1") != std::string::npos);
    CHECK(run({"ce-index", "7", "--verify"}).code == 0);
    auto s = run({"sl2", "--json", "[1,2,3,2,1]"});
    CHECK(s.code == 0);
    CHECK(s.out == "{\"multiplicities\":{\"5\":\"1\",\"3\":\"1\",\"1\":\"1\"},\"F\":[\"3\",\"4\"],\"G\":[\"2\"]}\n");
}

TEST_CASE("sweeps", "[cli]") {
    auto g = run({"sweep", "gamma-routes", "200", "--seed", "7"});
    CHECK(g.code == 0);
    CHECK(g.out == "{\"pass\":200,\"fail\":0}\n");
    auto z = run({"sweep", "subdiv", "0"});
    CHECK(z.code == 0);
    CHECK(z.out == "{\"pass\":0,\"fail\":0}\n");
    auto ce = run({"sweep", "ce-offset", "20"});
    CHECK(ce.code == 0);
    CHECK(parse(ce.out)["table"].size() == 20);
    CHECK(run({"sweep", "petersen", "50", "--seed", "1"}).out == run({"sweep", "petersen", "50", "--seed", "1"}).out);
}

TEST_CASE("output file", "[cli]") {
    fs::path p = fs::temp_directory_path() / "gammacheb_test_out.json";
    auto r = run({"gamma", "--json", "[1,1,1]", "--out", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(p);
    std::string line;
    std::getline(f, line);
    CHECK(line == "{\"gamma\":[\"1\",\"-1\"],\"routes_agree\":true}");
}
