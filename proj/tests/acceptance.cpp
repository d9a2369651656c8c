#include "hyp321/contiguous.hpp"
#include "hyp321/database.hpp"
#include "hyp321/errors.hpp"
#include "hyp321/matcher.hpp"
#include "hyp321/special.hpp"
#include "hyp321/thomae.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace hyp321;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

double rel(Complex x, Complex y) { return std::abs(x - y) / std::abs(y); }

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

void thomae_suite(Outcome& o) {
    Rng rng(2024);
    ParamSet p{{LinExpr::symbol("a"), LinExpr::symbol("b"), LinExpr::symbol("c")},
               {LinExpr::symbol("f"), LinExpr::symbol("e")}};
    int checks = 0;
    for (int base = 1; base <= 9; ++base) {
        auto tf = apply(ThomaeVariant{base, {0, 1, 2}, {0, 1}}, p);
        for (int done = 0; done < 20;) {
            Assignment a{{"a", uniform(rng, 0.1, 3)}, {"b", uniform(rng, 0.1, 3)}, {"c", uniform(rng, 0.1, 3)},
                         {"e", uniform(rng, 0.1, 3)}, {"f", uniform(rng, 0.1, 3)}};
            if (excess(p).eval(a).real() <= 0.6 || excess(tf.params).eval(a).real() <= 0.6) continue;
            bool near_pole = false;
            for (auto& l : tf.params.lower) near_pole = near_pole || l.eval(a).real() < 0.05;
            if (near_pole) continue;
            Complex lhs = series_pfq(p, a).value;
            Complex rhs = eval_expr(tf.prefactor, a) * series_pfq(tf.params, a).value;
            o.require(rel(lhs, rhs) < 1e-8, "T" + std::to_string(base));
            ++done, ++checks;
        }
    }
    o.detail << checks << " two-sided checks";
}

void database_gate(Outcome& o) {
    int b = 0, eq = 0, flagged = 0;
    double worst = 0;
    for (auto& e : seed_db()) {
        if (e.status == EntryStatus::Flagged) ++flagged;
        bool is_b = e.id.rfind("B.", 0) == 0, is_eq = e.id.rfind("EQ.", 0) == 0;
        if (!is_b && !is_eq) continue;
        auto r = verify_entry(e, 5, 42, 1e-7);
        o.require(r.pass, e.id + " " + r.notes);
        o.require(r.samples.size() == 5, e.id + " sample count");
        for (auto& s : r.samples) {
            worst = std::max(worst, s.rel_error);
            for (auto& i : e.int_symbols)
                o.require(s.assignment.at(i.name).real() <= 4, e.id + " integer range");
        }
        is_b ? ++b : ++eq;
    }
    o.require(b == 66, "66 B entries");
    o.require(flagged == 0, "no flagged entries");
    o.detail << b << " B entries and " << eq << " EQ entries pass, " << flagged << " flagged, worst relative error "
             << worst;
}

void errata(Outcome& o) {
    Rng rng(1);
    auto& eq1 = find_entry(seed_db(), "EQ.1");
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i < 3; ++i) {
            Assignment a{{"a", uniform(rng, 0.1, 0.9)}, {"b", uniform(rng, 0.1, 0.9)}, {"n", n}};
            o.require(rel(series_pfq(eq1.lhs, a).value, eval_expr(eq1.rhs, a)) < 1e-7, "EQ.1 n=" + std::to_string(n));
        }
    for (auto id : {"EQ.2", "EQ.3", "EQ.4", "EQ.5"})
        o.require(verify_entry(find_entry(seed_db(), id), 5, 42, 1e-7).pass, id);
    auto printed = make_entry({"EQ.2 as printed", "1, 2, a", "3, b", "-2*(b-2) + 2*(b-1)^2*psi(1, b)"});
    auto neg = verify_entry(printed, 5, 42, 1e-7);
    o.require(!neg.pass, "misprinted EQ.2 should fail");
    o.detail << "EQ.1 at n = 1..5, EQ.2-EQ.5 pass; misprinted EQ.2 fails (" << neg.notes << ")";
}

void contiguous_engine(Outcome& o) {
    Rng rng(17);
    Assignment none;
    double worst = 0;
    for (long m = -2; m <= 3; ++m)
        for (long n = -2; n <= 3; ++n)
            for (int done = 0; done < 3;) {
                double a = uniform(rng, 0.1, 0.9), b = uniform(rng, 0.1, 0.9), c = uniform(rng, 0.3, 5);
                if (c + n + (1 + m - a - b) / 2 <= 0.6) continue;
                Assignment at{{"a", a}, {"b", b}, {"c", c}};
                double e = rel(watson_element(a, b, c, m, n),
                               series_pfq(contig_params(Family::Watson, m, n), at, 1e-10).value);
                worst = std::max(worst, e);
                o.require(e < 1e-7, "W(" + std::to_string(m) + "," + std::to_string(n) + ")");
                ++done;
            }
    for (int i = 0; i < 5; ++i) {
        double a = uniform(rng, 0.6, 1.5), b = uniform(rng, 0.1, 0.4), c = uniform(rng, 0.1, 0.4);
        Assignment at{{"a", a}, {"b", b}, {"c", c}};
        o.require(rel(dixon_element(a, b, c, -1, 0), eval_expr(find_entry(seed_db(), "C.3").rhs, at)) < 1e-7, "C.3");
        o.require(rel(dixon_element(a, b, c, 2, 0), eval_expr(find_entry(seed_db(), "C.4").rhs, at)) < 1e-7, "C.4");
    }
    for (int i = 0; i < 5; ++i) {
        double a = uniform(rng, 0.3, 1.5), b = uniform(rng, 0.1, 0.9), c = uniform(rng, 0.2, 1.8);
        for (long m = 0; m <= 1; ++m)
            for (long n = -1; n <= 1; ++n)
                o.require(rel(whipple_element(a + 2, b, c, m, n), whipple_element_via_dixon(a + 2, b, c, m, n)) < 1e-8,
                          "Whipple routes");
    }
    o.detail << "108 grid points, worst relative error " << worst << "; C.3, C.4 and both Whipple routes agree";
}

void conjectures(Outcome& o) {
    Rng rng(23);
    auto& c23 = find_entry(seed_db(), "CONJ.23");
    auto& c24 = find_entry(seed_db(), "CONJ.24");
    auto& b56 = find_entry(seed_db(), "B.56");
    for (int n = 0; n <= 4; ++n)
        for (int done = 0; done < 5;) {
            Assignment a{{"a", uniform(rng, 0.1, 0.9)}, {"n", n}};
            if (!is_terminating(c23.lhs, a) && excess(c23.lhs).eval(a).real() < 0.2) continue;
            o.require(rel(series_pfq(c23.lhs, a).value, eval_expr(c23.rhs, a)) < 1e-7, "CONJ.23");
            ++done;
        }
    int equal_bc = 0;
    for (int done = 0; done < 10;) {
        double av = uniform(rng, 0.1, 0.5), bv, cv;
        if (done < 3) {
            cv = uniform(rng, 1.1 + av, 1.95), bv = cv;
        } else {
            bv = uniform(rng, 0.1, 0.9), cv = uniform(rng, 2.2, 4);
        }
        Assignment a = c24.complete({{"a", av}, {"b", bv}, {"c", cv}});
        if (excess(c24.lhs).eval(a).real() < 0.2) continue;
        o.require(rel(series_pfq(c24.lhs, a).value, eval_expr(c24.rhs, a)) < 1e-7, "CONJ.24");
        equal_bc += bv == cv;
        ++done;
    }
    for (int i = 0; i < 5; ++i) {
        double a = uniform(rng, 0.1, 0.9);
        Assignment at23{{"a", a}, {"n", 1}};
        Assignment at56 = b56.complete({{"a", 2 * a}, {"b", 1 - a}, {"n", 1}});
        o.require(rel(eval_expr(c23.rhs, at23), eval_expr(b56.rhs, at56)) < 1e-8, "CONJ.23 vs B.56");
    }
    o.detail << "CONJ.23 at n = 0..4, CONJ.24 at 10 draws (" << equal_bc << " with b = c), CONJ.23(n=1) = B.56";
}

void culling(Outcome& o) {
    Rng rng(50);
    const auto& db = seed_db();
    const auto& all = all_variants();
    std::vector<DbEntry> input = db;
    std::set<std::string> planted;
    for (int i = 0; i < 50; ++i) {
        const DbEntry& e = db[rng() % db.size()];
        std::string id = "IMG." + std::to_string(i);
        input.push_back(thomae_image(e, all[rng() % all.size()], id));
        planted.insert(id);
    }
    auto kept = cull(input);
    int pairs = 0;
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (i != j) {
                o.require(!equivalent(kept[i], kept[j]), kept[i].id + " ~ " + kept[j].id);
                ++pairs;
            }
    auto again = cull(kept);
    bool idempotent = again.size() == kept.size();
    for (std::size_t i = 0; idempotent && i < kept.size(); ++i) idempotent = again[i].id == kept[i].id;
    o.require(idempotent, "idempotence");
    int survivors = 0;
    for (auto& e : kept) survivors += planted.count(e.id);
    o.require(survivors == 0, "planted images removed");
    o.detail << input.size() << " entries in, " << kept.size() << " kept, " << pairs << " pairs checked, "
             << survivors << " planted images survive";
}

void oracle_quality(Outcome& o) {
    Rng rng(101);
    for (int i = 0; i < 25; ++i) {
        double a = uniform(rng, -0.9, 1.9), b = uniform(rng, -0.9, 1.9);
        double c = a + b + 0.6 + uniform(rng, 0, 3.8);
        Complex closed = cgamma(c) * cgamma(c - a - b) / (cgamma(c - a) * cgamma(c - b));
        o.require(rel(series_pfq({a, b}, {c}).value, closed) < 1e-9, "Gauss");
    }
    for (int n = 0; n <= 10; ++n) {
        double a = uniform(rng, 0.1, 2.9), b = uniform(rng, 0.1, 2.9), e = uniform(rng, 0.1, 2.9),
               f = uniform(rng, 0.1, 2.9);
        std::vector<Complex> up{a, b, -double(n)}, lo{e, f};
        Complex t = 1, sum = 0;
        double mass = 0;
        for (int k = 0; k <= n; ++k) {
            sum += t, mass += std::abs(t);
            t *= (a + k) * (b + k) * (k - double(n)) / ((e + k) * (f + k) * (k + 1.0));
        }
        auto r = series_pfq(up, lo);
        o.require(r.terminated && r.terms_used == n + 1, "termination");
        o.require(std::abs(r.value - sum) <= 1e-14 * mass, "terminating sum");
    }
    for (int i = 0; i < 50; ++i) {
        double a = uniform(rng, 0.1, 1.5), b = uniform(rng, 0.1, 1.5), c = uniform(rng, 0.1, 1.5),
               e = uniform(rng, 0.1, 1.5);
        double f = a + b + c + uniform(rng, 0.6, 3) - e;
        std::vector<Complex> up{a, b, c}, lo{e, f};
        auto r = series_pfq(up, lo);
        auto w = series_window(up, lo, 128);
        o.require(std::abs(r.value - w.value) <= 2 * (r.abs_error_estimate + w.abs_error_estimate) + 1e-14,
                  "doubling bound");
    }
    o.detail << "25 Gauss draws, n = 0..10 terminating sums, 50 doubling draws";
}

void four_f_three(Outcome& o) {
    Rng rng(13);
    double worst = 0;
    for (int i = 0; i < 5; ++i) {
        double a = uniform(rng, 0.1, 0.9), b = uniform(rng, 0.1, 0.9), s = uniform(rng, 1.6, 2.4);
        for (int n : {2, 3}) {
            double N = n;
            Complex lhs = series_pfq({1, 1 + a / (s - 1), b * s - a, -N}, {a / (s - 1), b + 1, 1 - a - N * s}).value;
            Complex f1 = series_pfq({1, b * s - a, -N}, {b + 1, 1 - a - N * s}).value;
            Complex f2 = series_pfq({2, 1 + b * s - a, 1 - N}, {b + 2, 2 - a - N * s}).value;
            Complex rhs = f1 - (s - 1) * (s * b - a) * N / (a * (b + 1) * (1 - a - N * s)) * f2;
            worst = std::max(worst, rel(lhs, rhs));
            o.require(rel(lhs, rhs) < 1e-8, "4F3 relation");
        }
    }
    auto r = verify_entry(find_entry(seed_db(), "EQ.14"), 5, 42, 1e-7);
    o.require(r.pass, "EQ.14");
    o.detail << "4F3 relation worst relative error " << worst << "; EQ.14 " << (r.pass ? "passes" : "fails");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Outcome&)> run;
    };
    const Criterion criteria[] = {
        {"Thomae suite", thomae_suite},
        {"Database gate", database_gate},
        {"Errata reproduction", errata},
        {"Contiguous engine", contiguous_engine},
        {"Conjecture checks", conjectures},
        {"Culling properties", culling},
        {"Oracle quality", oracle_quality},
        {"4F3 relation and EQ.14", four_f_three},
    };
    int failed = 0;
    for (auto& c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %-24s %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.str().c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
