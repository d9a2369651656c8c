#include "cli.hpp"

#include "hyp321/contiguous.hpp"
#include "hyp321/database.hpp"
#include "hyp321/errors.hpp"
#include "hyp321/matcher.hpp"
#include "hyp321/serialize.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hyp321::cli {

namespace {

constexpr long kMaxDecimalDen = 1000000;

std::string fmt(double x, int digits = 15) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string fmt(Complex z) {
    if (std::abs(z.imag()) <= 1e-14 * std::abs(z)) return fmt(z.real());
    return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

std::vector<LinExpr> parse_list(const std::string& text) {
    std::vector<LinExpr> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_linexpr(item, kMaxDecimalDen));
    return out;
}

ParamSet parse_params(const std::string& upper, const std::string& lower) {
    ParamSet p{parse_list(upper), parse_list(lower)};
    if (p.upper.size() != 3 || p.lower.size() != 2)
        throw ParseError("expected 3 upper and 2 lower parameters, got " + std::to_string(p.upper.size()) + " and " +
                         std::to_string(p.lower.size()));
    return p;
}

Rational parse_number(const std::string& text) {
    LinExpr l = parse_linexpr(text, kMaxDecimalDen);
    if (!l.is_constant()) throw ParseError("'" + text + "' is not a number");
    return l.constant();
}

const DbEntry& entry_named(const std::vector<DbEntry>& db, const std::string& id) {
    const DbEntry* e = lookup_entry(db, id);
    if (!e) throw ParseError("no entry '" + id + "' in the database");
    return *e;
}

std::vector<DbEntry> database() {
    if (const char* path = std::getenv("HYP321_DB")) return load(path);
    return seed_db();
}

struct Options {
    std::string upper, lower, entry, in, out, db_id, db_path, report, format = "text";
    std::string a, b, c;
    long m = 0, n = 0;
    double tol = 0;
    int trials = 5;
    std::uint64_t seed = 42;
    bool conjectures = false;
};

int cmd_eval(const Options& o, std::ostream& out) {
    ParamSet p = parse_params(o.upper, o.lower);
    if (!p.symbols().empty()) throw ParseError("eval needs numeric parameters");
    SeriesResult r = series_pfq(p, {}, o.tol > 0 ? o.tol : kDefaultOracleTol);
    out << "3F2(" << p.str() << "; 1) = " << fmt(r.value) << " +/- " << fmt(r.abs_error_estimate, 3) << "\n";
    out << "terms: " << r.terms_used << (r.terminated ? " (terminating)" : "") << "\n";
    return Ok;
}

int cmd_identify(const Options& o, std::ostream& out) {
    ParamSet q = parse_params(o.upper, o.lower);
    IdentifyOptions opts;
    opts.include_conjectures = o.conjectures;
    auto matches = identify(database(), q, opts);
    if (matches.empty()) {
        out << "no match for 3F2(" << q.str() << "; 1)\n";
        return NoMatch;
    }
    int status = Ok;
    for (std::size_t i = 0; i < matches.size(); ++i) {
        const MatchResult& m = matches[i];
        out << "match " << (i + 1) << ": " << m.entry_id << " via " << m.variant.name() << "\n";
        out << "  substitution: " << m.substitution.str() << "\n";
        out << "  value: " << to_string(m.instantiated_rhs) << "\n";
        MatchCheck c = check_match(q, m, o.seed);
        if (!c.checked) {
            out << "  check: skipped (" << c.reason << ")\n";
            continue;
        }
        bool ok = c.rel_error < 1e-7;
        out << "  check: " << (ok ? "ok" : "FAILED") << ", relative error " << fmt(c.rel_error, 3);
        for (auto& [s, v] : c.at) out << ", " << s << " = " << fmt(v.real(), 6);
        out << "\n";
        if (!ok) status = VerificationFailure;
    }
    return status;
}

void write_report(const std::vector<VerificationReport>& reports, const Options& o, std::ostream& out) {
    if (o.format == "json") {
        Json list = Json::array();
        for (auto& r : reports) {
            Json samples = Json::array();
            for (auto& s : r.samples) {
                Json at = Json::object();
                for (auto& [k, v] : s.assignment) at[k] = v.real();
                samples.push_back({{"assignment", at},
                                   {"lhs", {s.lhs.real(), s.lhs.imag()}},
                                   {"rhs", {s.rhs.real(), s.rhs.imag()}},
                                   {"rel_error", s.rel_error}});
            }
            list.push_back({{"entry", r.entry_id}, {"pass", r.pass}, {"notes", r.notes}, {"samples", samples}});
        }
        out << Json{{"seed", o.seed}, {"trials", o.trials}, {"reports", list}}.dump(2) << "\n";
        return;
    }
    for (auto& r : reports) {
        char line[256];
        std::snprintf(line, sizeof line, "%-12s %-4s  %s\n", r.entry_id.c_str(), r.pass ? "PASS" : "FAIL",
                      r.notes.c_str());
        out << line;
        for (auto& s : r.samples) {
            out << "    ";
            for (auto& [k, v] : s.assignment) out << k << "=" << fmt(v.real(), 6) << " ";
            out << "lhs=" << fmt(s.lhs) << " rhs=" << fmt(s.rhs) << " rel=" << fmt(s.rel_error, 3) << "\n";
        }
    }
}

int cmd_verify(const Options& o, std::ostream& out) {
    auto db = database();
    std::vector<const DbEntry*> selected;
    if (!o.entry.empty()) {
        selected.push_back(&entry_named(db, o.entry));
    } else {
        for (auto& e : db)
            if (e.status != EntryStatus::Flagged) selected.push_back(&e);
    }
    VerifyOptions vo;
    vo.trials = o.trials;
    vo.seed = o.seed;
    if (o.tol > 0) vo.rel_tol = o.tol;
    std::vector<VerificationReport> reports;
    int failures = 0;
    for (auto* e : selected) {
        VerificationReport r;
        try {
            r = verify_entry(*e, vo);
        } catch (const InsufficientSamples& ex) {
            r.entry_id = e->id;
            r.notes = ex.what();
        }
        if (!r.pass) ++failures;
        reports.push_back(std::move(r));
    }
    for (auto& r : reports) {
        char line[256];
        std::snprintf(line, sizeof line, "%-12s %-4s  %s\n", r.entry_id.c_str(), r.pass ? "PASS" : "FAIL",
                      r.notes.c_str());
        out << line;
    }
    out << reports.size() - failures << " of " << reports.size() << " entries pass\n";
    if (!o.report.empty()) {
        std::ofstream f(o.report);
        if (!f) throw Error("cannot write report to " + o.report);
        write_report(reports, o, f);
    }
    return failures ? VerificationFailure : Ok;
}

int cmd_contig(Family family, const Options& o, std::ostream& out) {
    ContigQuery q{family, parse_number(o.a).to_double(), parse_number(o.b).to_double(),
                  parse_number(o.c).to_double(), o.m, o.n};
    ParamSet p = contig_params(family, o.m, o.n).substitute(
        {{"a", parse_number(o.a)}, {"b", parse_number(o.b)}, {"c", parse_number(o.c)}});
    out << to_string(family) << "(" << o.a << ", " << o.b << ", " << o.c << "; m=" << o.m << ", n=" << o.n
        << ") = 3F2(" << p.str() << "; 1)\n";
    try {
        ContigResult r = checked_element(q, o.tol > 0 ? o.tol : kDefaultOracleTol);
        bool ok = r.rel_error < 1e-7;
        out << "value: " << fmt(r.value) << "\n";
        out << "series: " << fmt(r.series_value) << ", relative difference " << fmt(r.rel_error, 3)
            << (ok ? "" : " (MISMATCH)") << "\n";
        return ok ? Ok : VerificationFailure;
    } catch (const NoConvergentCheck&) {
        out << "value: " << fmt(contig_element(q)) << "\n";
        out << "series: not convergent (excess <= 0), no cross-check\n";
        return Ok;
    }
}

int cmd_cull(const Options& o, std::ostream& out) {
    auto entries = load(o.in);
    std::vector<CullDecision> log;
    auto kept = cull(entries, &log);
    for (auto& d : log) {
        out << "drop " << d.id << ": " << to_string(d.reason);
        if (!d.retained.empty()) out << " to " << d.retained;
        out << "\n";
    }
    out << "kept " << kept.size() << " of " << entries.size() << "\n";
    save(kept, o.out);
    return Ok;
}

int cmd_db(const std::string& action, const Options& o, std::ostream& out) {
    auto db = database();
    if (action == "list") {
        for (auto& e : db) {
            char line[512];
            std::snprintf(line, sizeof line, "%-12s %-10s 3F2(%s; 1)\n", e.id.c_str(), to_string(e.status).c_str(),
                          e.lhs.str().c_str());
            out << line;
        }
    } else if (action == "show") {
        const DbEntry& e = entry_named(db, o.db_id);
        out << "id: " << e.id << "\n";
        out << "lhs: 3F2(" << e.lhs.str() << "; 1)\n";
        out << "rhs: " << to_string(e.rhs) << "\n";
        out << "excess: " << e.excess.str() << "\n";
        for (auto& i : e.int_symbols) out << "integer: " << i.name << " >= " << i.min << "\n";
        for (auto& [x, y] : e.less_than) out << "constraint: " << x << " < " << y << "\n";
        for (auto& x : e.aux) out << "aux: " << x.name << " = " << to_string(x.definition) << "\n";
        out << "status: " << to_string(e.status) << "\n";
        out << "provenance: " << e.provenance << "\n";
        if (!e.note.empty()) out << "note: " << e.note << "\n";
    } else {
        save(db, o.db_path);
        out << "wrote " << db.size() << " entries to " << o.db_path << "\n";
    }
    return Ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-form 3F2(1) sums: evaluation, identification and verification", "hyp321"};
    app.require_subcommand(1);
    Options o;

    auto* eval = app.add_subcommand("eval", "evaluate 3F2(1) by its series");
    eval->add_option("--upper", o.upper, "three upper parameters, comma separated")->required();
    eval->add_option("--lower", o.lower, "two lower parameters, comma separated")->required();
    eval->add_option("--tol", o.tol, "relative tolerance");

    auto* ident = app.add_subcommand("identify", "find database entries that produce the given 3F2(1)");
    ident->add_option("--upper", o.upper)->required();
    ident->add_option("--lower", o.lower)->required();
    ident->add_flag("--conjectures", o.conjectures, "include conjectured entries");
    ident->add_option("--seed", o.seed, "seed for the numeric cross-check");

    auto* verify = app.add_subcommand("verify", "check database entries against the series");
    verify->add_option("--entry", o.entry, "single entry id");
    verify->add_option("--trials", o.trials, "samples per entry")->check(CLI::PositiveNumber);
    verify->add_option("--seed", o.seed);
    verify->add_option("--tol", o.tol);
    verify->add_option("--report", o.report, "write a detailed report to this path");
    verify->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::pair<CLI::App*, Family>> contig;
    for (Family f : {Family::Watson, Family::Dixon, Family::Whipple}) {
        auto* sub = app.add_subcommand(to_string(f), "contiguous " + to_string(f) + " element");
        sub->add_option("--a", o.a)->required();
        sub->add_option("--b", o.b)->required();
        sub->add_option("--c", o.c)->required();
        sub->add_option("--m", o.m)->required();
        sub->add_option("--n", o.n)->required();
        sub->add_option("--tol", o.tol);
        contig.push_back({sub, f});
    }

    auto* cullc = app.add_subcommand("cull", "reduce a database to Thomae-inequivalent entries");
    cullc->add_option("--in", o.in)->required();
    cullc->add_option("--out", o.out)->required();

    auto* db = app.add_subcommand("db", "inspect the database");
    db->require_subcommand(1);
    auto* db_list = db->add_subcommand("list", "list entries");
    auto* db_show = db->add_subcommand("show", "show one entry");
    db_show->add_option("id", o.db_id)->required();
    auto* db_export = db->add_subcommand("export", "write the database file");
    db_export->add_option("path", o.db_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? Ok : UsageError;
    }

    try {
        if (*eval) return cmd_eval(o, out);
        if (*ident) return cmd_identify(o, out);
        if (*verify) return cmd_verify(o, out);
        for (auto& [sub, f] : contig)
            if (*sub) return cmd_contig(f, o, out);
        if (*cullc) return cmd_cull(o, out);
        if (*db_list) return cmd_db("list", o, out);
        if (*db_show) return cmd_db("show", o, out);
        if (*db_export) return cmd_db("export", o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const SchemaVersionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return NumericError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    return UsageError;
}

}  // namespace hyp321::cli
