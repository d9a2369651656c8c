#include <doctest.h>

#include "hyp321/database.hpp"
#include "hyp321/errors.hpp"
#include "hyp321/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

using namespace hyp321;

namespace {

double rel(Complex x, Complex y) { return std::abs(x - y) / std::abs(y); }

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("hyp321_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("seed database contents") {
    const auto& db = seed_db();
    int b = 0;
    std::set<std::string> ids;
    for (auto& e : db) {
        if (e.id.rfind("B.", 0) == 0) ++b;
        CHECK(ids.insert(e.id).second);
    }
    CHECK(b == 66);
    for (int i = 1; i <= 66; ++i) CHECK(ids.count("B." + std::to_string(i)));
    for (auto id : {"EQ.1", "EQ.2", "EQ.3", "EQ.4", "EQ.5", "EQ.6", "EQ.7", "EQ.8", "EQ.9", "EQ.10", "EQ.11", "EQ.12",
                    "EQ.12b", "EQ.14", "EQ.15", "C.3", "C.4", "C.5", "C.6", "CONJ.23", "CONJ.24"})
        CHECK(ids.count(id));
    for (auto id : {"ANCHOR.W00", "ANCHOR.X00", "ANCHOR.X10", "ANCHOR.X0m1"})
        CHECK(find_entry(db, id).provenance == "external: classical theorem");
    CHECK(lookup_entry(db, "B.67") == nullptr);
}

TEST_CASE("entry metadata") {
    const auto& db = seed_db();
    auto& b1 = find_entry(db, "B.1");
    CHECK(b1.less_than == std::vector<std::pair<std::string, std::string>>{{"n", "m"}});
    CHECK(find_entry(db, "CONJ.23").status == EntryStatus::Conjecture);
    CHECK(find_entry(db, "CONJ.24").status == EntryStatus::Conjecture);
    for (auto& e : db) {
        CHECK(e.excess == excess(e.lhs));
        CHECK(e.lhs.upper.size() == 3);
        CHECK(e.lhs.lower.size() == 2);
        if (e.status == EntryStatus::Verified) CHECK(e.tolerance <= 1e-6);
    }
    CHECK(find_entry(db, "B.37").provenance == "Prudnikov 7.4.4.17 : T2");
}

TEST_CASE("B.54 at n = 1 terminates with value 1") {
    auto& e = find_entry(seed_db(), "B.54");
    Assignment a = e.complete({{"a", 1.3}, {"b", 2.6}, {"n", 1}});
    auto s = series_pfq(e.lhs, a);
    CHECK(s.terminated);
    CHECK(s.value == Complex(1));
    CHECK(rel(eval_expr(e.rhs, a), 1.0) < 1e-15);
    CHECK(verify_entry(e, 5, 42, 1e-7).pass);
}

TEST_CASE("B.37 golden value") {
    auto& e = find_entry(seed_db(), "B.37");
    Assignment a{{"a", 0.31}, {"b", 0.47}, {"c", 2.73}};
    const double golden = 1.03269472970191337;  // mpmath hyp3f2(0.31, 2, 0.47; 2.73, 4; 1), 30 digits
    CHECK(rel(series_pfq(e.lhs, a).value, golden) < 1e-12);
    CHECK(rel(eval_expr(e.rhs, a), golden) < 1e-7);
}

TEST_CASE("perturbed B.37 fails") {
    EntrySpec spec{"B.37x", "a, 2, b", "c, 4",
                   "-5.9*(2*c-5+b-a*b+a)*Gamma(c)*Gamma(-b+2+c-a)/((a-3)*(b-1)*(a-2)*(a-1)*(b-3)*(b-2)*Gamma(c-a)*Gamma(c-b))"
                   " + 6*(c-2)*(c-1)*(a*b-3*b-3*a+3+2*c)/((a-3)*(b-1)*(a-2)*(a-1)*(b-3)*(b-2))"};
    auto r = verify_entry(make_entry(spec), 5, 42, 1e-7);
    CHECK_FALSE(r.pass);
    CHECK(r.samples.size() == 5);
}

TEST_CASE("verification is deterministic and honors constraints") {
    auto& e = find_entry(seed_db(), "B.1");
    auto r1 = verify_entry(e, 5, 9, 1e-7), r2 = verify_entry(e, 5, 9, 1e-7);
    REQUIRE(r1.samples.size() == r2.samples.size());
    for (std::size_t i = 0; i < r1.samples.size(); ++i) {
        CHECK(r1.samples[i].lhs == r2.samples[i].lhs);
        CHECK(r1.samples[i].assignment == r2.samples[i].assignment);
        auto& at = r1.samples[i].assignment;
        CHECK(at.at("n").real() < at.at("m").real());
        CHECK(at.at("n").real() >= 1);
        CHECK(at.at("m").real() <= 4);
    }
    CHECK(r1.notes == r2.notes);
}

TEST_CASE("insufficient samples") {
    // excess -c is negative for every sampled c
    auto e = make_entry({"X.1", "a, b, c", "a, b", "1"});
    CHECK_THROWS_AS(verify_entry(e, 5, 1, 1e-7), InsufficientSamples);
    CHECK_THROWS_AS(verify_entry(e, 0, 1, 1e-7), Error);
    auto one = verify_entry(find_entry(seed_db(), "B.37"), 1, 1, 1e-7);
    CHECK(one.pass);
    CHECK(one.samples.size() == 1);
}

TEST_CASE("full database gate") {
    for (std::uint64_t seed : {1, 42}) {
        for (auto& e : seed_db()) {
            auto r = verify_entry(e, 5, seed, 1e-7);
            CHECK_MESSAGE(r.pass, e.id << " seed " << seed << ": " << r.notes);
            CHECK(r.samples.size() == 5);
        }
    }
}

TEST_CASE("terminating entries are exact on the series side") {
    for (auto id : {"B.2", "B.54"}) {
        auto r = verify_entry(find_entry(seed_db(), id), 5, 3, 1e-7);
        REQUIRE(r.pass);
        auto& e = find_entry(seed_db(), id);
        for (auto& s : r.samples) {
            auto sr = series_pfq(e.lhs, s.assignment);
            CHECK(sr.terminated);
            double mass = 0;
            Complex t = 1;
            for (int k = 0; k < sr.terms_used; ++k) {
                mass += std::abs(t);
                Complex num = 1, den = 1;
                for (auto& x : e.lhs.upper) num *= x.eval(s.assignment) + double(k);
                for (auto& x : e.lhs.lower) den *= x.eval(s.assignment) + double(k);
                t *= num / (den * double(k + 1));
            }
            CHECK(sr.abs_error_estimate <= 4 * 2.220446049250313e-16 * mass);
        }
    }
}

TEST_CASE("B.40 is not terminating") {
    auto& e = find_entry(seed_db(), "B.40");
    Assignment a = e.complete({{"a", 0.3}, {"b", 0.45}, {"n", 2}});
    CHECK_FALSE(is_terminating(e.lhs, a));
}

TEST_CASE("corrected errata") {
    auto& eq1 = find_entry(seed_db(), "EQ.1");
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.1, 0.9);
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i < 3; ++i) {
            Assignment a{{"a", u(rng)}, {"b", u(rng)}, {"n", n}};
            auto sr = series_pfq(eq1.lhs, a);
            CHECK(sr.terminated);
            CHECK(rel(sr.value, eval_expr(eq1.rhs, a)) < 1e-10);
        }
    for (auto id : {"EQ.2", "EQ.3", "EQ.4", "EQ.5"}) CHECK_MESSAGE(verify_entry(find_entry(seed_db(), id), 5, 2, 1e-7).pass, id);
    // b = 2.5: 3F2(1,1,1;3,b;1) against the stored value, from mpmath
    CHECK(rel(eval_expr(find_entry(seed_db(), "EQ.2").rhs, {{"b", 2.5}}), 1.2066099024510568924) < 1e-12);
    auto printed = make_entry({"EQ.2p", "1, 2, a", "3, b", "-2*(b-2) + 2*(b-1)^2*psi(1, b)"});
    CHECK_FALSE(verify_entry(printed, 5, 2, 1e-7).pass);
}

TEST_CASE("4F3 relation and its 3F2 form") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.1, 0.9);
    for (int i = 0; i < 5; ++i) {
        double a = u(rng), b = u(rng), s = 1.5 + u(rng);
        for (int n : {2, 3}) {
            double N = n;
            Complex lhs = series_pfq({1, 1 + a / (s - 1), b * s - a, -N}, {a / (s - 1), b + 1, 1 - a - N * s}).value;
            Complex f1 = series_pfq({1, b * s - a, -N}, {b + 1, 1 - a - N * s}).value;
            Complex f2 = series_pfq({2, 1 + b * s - a, 1 - N}, {b + 2, 2 - a - N * s}).value;
            Complex rhs = f1 - (s - 1) * (s * b - a) * N / (a * (b + 1) * (1 - a - N * s)) * f2;
            CHECK(rel(lhs, rhs) < 1e-8);
        }
    }
    CHECK(verify_entry(find_entry(seed_db(), "EQ.14"), 5, 14, 1e-7).pass);
}

TEST_CASE("conjecture 23 for n = 0..4") {
    auto& e = find_entry(seed_db(), "CONJ.23");
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.1, 0.9);
    for (int n = 0; n <= 4; ++n) {
        int done = 0;
        for (int tries = 0; tries < 200 && done < 5; ++tries) {
            Assignment a{{"a", u(rng) * 1.0007}, {"n", n}};
            if (!is_terminating(e.lhs, a) && excess(e.lhs).eval(a).real() < 0.2) continue;
            CHECK(rel(series_pfq(e.lhs, a).value, eval_expr(e.rhs, a)) < 1e-7);
            ++done;
        }
        CHECK(done == 5);
    }
}

TEST_CASE("conjecture 24 including b = c") {
    auto& e = find_entry(seed_db(), "CONJ.24");
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> u(0.1, 0.9);
    int done = 0;
    for (int tries = 0; tries < 500 && done < 10; ++tries) {
        Assignment a = e.complete({{"a", u(rng)}, {"b", u(rng)}, {"c", 2.2 + 2 * u(rng)}});
        if (excess(e.lhs).eval(a).real() < 0.2) continue;
        CHECK(rel(series_pfq(e.lhs, a).value, eval_expr(e.rhs, a)) < 1e-7);
        ++done;
    }
    CHECK(done == 10);
    int equal_bc = 0;
    // with b = c the series converges only for 1 + a < c < 2
    for (int tries = 0; tries < 500 && equal_bc < 5; ++tries) {
        double av = 0.5 * u(rng), c = 1.1 + av + (0.85 - av) * u(rng);
        Assignment a = e.complete({{"a", av}, {"b", c}, {"c", c}});
        if (excess(e.lhs).eval(a).real() < 0.2) continue;
        CHECK(rel(series_pfq(e.lhs, a).value, eval_expr(e.rhs, a)) < 1e-7);
        ++equal_bc;
    }
    CHECK(equal_bc == 5);
}

TEST_CASE("conjecture 23 at n = 1 is B.56") {
    auto& c23 = find_entry(seed_db(), "CONJ.23");
    auto& b56 = find_entry(seed_db(), "B.56");
    std::mt19937_64 rng(56);
    std::uniform_real_distribution<double> u(0.1, 0.9);
    for (int i = 0; i < 5; ++i) {
        double a = u(rng);
        Assignment at23{{"a", a}, {"n", 1}};
        Assignment at56 = b56.complete({{"a", 2 * a}, {"b", 1 - a}, {"n", 1}});
        CHECK(c23.lhs.substitute({}).upper.size() == 3);
        ParamSet l23 = c23.lhs, l56 = b56.lhs;
        std::vector<Complex> u23, u56;
        for (auto& x : l23.upper) u23.push_back(x.eval(at23));
        for (auto& x : l56.upper) u56.push_back(x.eval(at56));
        std::sort(u23.begin(), u23.end(), [](Complex x, Complex y) { return x.real() < y.real(); });
        std::sort(u56.begin(), u56.end(), [](Complex x, Complex y) { return x.real() < y.real(); });
        for (int k = 0; k < 3; ++k) CHECK(std::abs(u23[k] - u56[k]) < 1e-14);
        CHECK(rel(eval_expr(c23.rhs, at23), eval_expr(b56.rhs, at56)) < 1e-8);
    }
}

TEST_CASE("save and load round trip") {
    std::string p1 = temp_path("db1.json"), p2 = temp_path("db2.json");
    save(seed_db(), p1);
    auto loaded = load(p1);
    REQUIRE(loaded.size() == seed_db().size());
    for (std::size_t i = 0; i < loaded.size(); ++i) CHECK(same_entry(loaded[i], seed_db()[i]));
    save(loaded, p2);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(dump_db(loaded) == dump_db(seed_db()));
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("load rejects malformed documents") {
    std::string good = dump_db({find_entry(seed_db(), "B.37")});
    CHECK(parse_db(good).size() == 1);
    std::string zero_den = good;
    auto pos = zero_den.find("\"2\"");
    REQUIRE(pos != std::string::npos);
    zero_den.replace(pos, 3, "\"1/0\"");
    CHECK_THROWS_AS(parse_db(zero_den), ParseError);

    auto doc = Json::parse(good);
    doc["entries"][0]["excess"] = Json{{"coeffs", Json::object()}, {"const", "7"}};
    CHECK_THROWS_AS(parse_db(doc.dump()), ParseError);

    auto old = Json::parse(good);
    old["schema"] = "hyp321/0";
    CHECK_THROWS_AS(parse_db(old.dump()), SchemaVersionMismatch);

    try {
        parse_db("{\"schema\": \"hyp321/1\",\n \"entries\": [}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}
