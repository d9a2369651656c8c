#include <doctest.h>

#include "cli.hpp"
#include "hyp321/database.hpp"
#include "hyp321/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hyp321;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hyp321");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("hyp321_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("eval") {
    auto r = run({"eval", "--upper", "1,1,1", "--lower", "2,2"});
    CHECK(r.code == cli::Ok);
    CHECK(contains(r.out, "1.6449340668"));
    r = run({"eval", "--upper", "0.5,0.25,1", "--lower", "2,2.5"});
    CHECK(r.code == cli::Ok);
    CHECK(contains(r.out, "[1/2, 1/4, 1]"));
}

TEST_CASE("identify") {
    auto r = run({"identify", "--upper", "a,b,2-b", "--lower", "c,2*a+2-c"});
    CHECK(r.code == cli::Ok);
    CHECK(contains(r.out, "B.17 via T10·(abc|fe)"));
    CHECK(contains(r.out, "check: ok"));
    CHECK_FALSE(contains(r.out, "CONJ."));
    r = run({"identify", "--upper", "0.3,0.4,0.5", "--lower", "0.7,0.8"});
    CHECK(r.code == cli::NoMatch);
    CHECK(contains(r.out, "no match"));
}

TEST_CASE("verify") {
    auto r = run({"verify", "--entry", "B.37", "--trials", "5", "--seed", "42"});
    CHECK(r.code == cli::Ok);
    CHECK(contains(r.out, "B.37"));
    CHECK(contains(r.out, "PASS"));

    std::string report = temp_path("report.json");
    r = run({"verify", "--entry", "B.54", "--trials", "3", "--report", report, "--format", "json"});
    CHECK(r.code == cli::Ok);
    auto doc = Json::parse(slurp(report));
    CHECK(doc.dump().find("B.54") != std::string::npos);
    std::remove(report.c_str());
}

TEST_CASE("verification failure through HYP321_DB") {
    auto bad = make_entry({"B.37", "a, 2, b", "c, 4", "1 + a*b"});
    std::string path = temp_path("bad.json");
    save({bad}, path);
    setenv("HYP321_DB", path.c_str(), 1);
    auto r = run({"verify", "--trials", "3"});
    unsetenv("HYP321_DB");
    CHECK(r.code == cli::VerificationFailure);
    CHECK(contains(r.out, "FAIL"));
    std::remove(path.c_str());
}

TEST_CASE("usage and numeric errors") {
    CHECK(run({"eval", "--upper", "1,1,1", "--lower", "2"}).code == cli::UsageError);
    CHECK(run({"eval", "--upper", "0.1234567,1,1", "--lower", "2,2"}).code == cli::UsageError);
    CHECK(run({"eval", "--upper", "1,1,1"}).code == cli::UsageError);
    CHECK(run({"frobnicate"}).code == cli::UsageError);
    CHECK(run({"verify", "--entry", "B.99"}).code == cli::UsageError);
    CHECK(run({"db", "show", "B.99"}).code == cli::UsageError);
    CHECK(run({"verify", "--format", "xml"}).code == cli::UsageError);
    auto r = run({"eval", "--upper", "1,1,1", "--lower", "1,1"});
    CHECK(r.code == cli::NumericError);
    CHECK(contains(r.err, "excess"));
    CHECK(run({"whipple", "--a", "-2", "--b", "0.3", "--c", "0.7", "--m", "0", "--n", "0"}).code == cli::NumericError);
}

TEST_CASE("contiguous elements") {
    auto r = run({"watson", "--a", "0.3", "--b", "0.5", "--c", "1.4", "--m", "2", "--n", "1"});
    CHECK(r.code == cli::Ok);
    CHECK(contains(r.out, "1.036493043281"));
    CHECK(contains(r.out, "series"));
    r = run({"dixon", "--a", "0.5", "--b", "0.3", "--c", "0.2", "--m", "0", "--n", "0"});
    CHECK(r.code == cli::Ok);
    CHECK(contains(r.out, "1.028526021674"));
}

TEST_CASE("determinism") {
    auto a = run({"verify", "--trials", "2", "--seed", "7"});
    auto b = run({"verify", "--trials", "2", "--seed", "7"});
    CHECK(a.code == cli::Ok);
    CHECK(a.out == b.out);
    auto c = run({"identify", "--upper", "a,b,2-b", "--lower", "c,2*a+2-c", "--seed", "3"});
    auto d = run({"identify", "--upper", "a,b,2-b", "--lower", "c,2*a+2-c", "--seed", "3"});
    CHECK(c.out == d.out);
}

TEST_CASE("db inspection and export") {
    auto r = run({"db", "show", "B.37"});
    CHECK(r.code == cli::Ok);
    CHECK(contains(r.out, "Prudnikov 7.4.4.17 : T2"));
    r = run({"db", "list"});
    CHECK(r.code == cli::Ok);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == long(seed_db().size()));

    std::string path = temp_path("export.json");
    CHECK(run({"db", "export", path}).code == cli::Ok);
    auto loaded = load(path);
    REQUIRE(loaded.size() == seed_db().size());
    for (std::size_t i = 0; i < loaded.size(); ++i) CHECK(same_entry(loaded[i], seed_db()[i]));
    std::remove(path.c_str());
}

TEST_CASE("cull round trip") {
    std::string in = temp_path("cull_in.json"), out = temp_path("cull_out.json"), again = temp_path("cull_again.json");
    auto extra = make_entry({"X.1", "a, b, c", "a+b, c-1", "1"});
    auto db = seed_db();
    db.push_back(extra);
    save(db, in);
    auto r = run({"cull", "--in", in, "--out", out});
    CHECK(r.code == cli::Ok);
    auto kept = load(out);
    CHECK(kept.size() < seed_db().size());
    for (auto& e : kept) CHECK(e.id != "X.1");
    CHECK(run({"cull", "--in", out, "--out", again}).code == cli::Ok);
    CHECK(slurp(out) == slurp(again));
    CHECK(run({"cull", "--in", temp_path("missing.json"), "--out", again}).code != cli::Ok);
    for (auto& p : {in, out, again}) std::remove(p.c_str());
}
