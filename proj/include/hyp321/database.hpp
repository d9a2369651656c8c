#pragma once

#include "hyp321/expr.hpp"
#include "hyp321/series.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyp321 {

enum class EntryStatus { Verified, Conjecture, Flagged };

std::string to_string(EntryStatus s);
EntryStatus status_from_string(const std::string& s);

struct IntSymbol {
    std::string name;
    long min = 1;
    friend bool operator==(const IntSymbol&, const IntSymbol&) = default;
};

// A symbol that appears linearly in the parameters but is tied to the free
// symbols by a non-linear definition, e.g. u = a*n/(b+n).
struct AuxSymbol {
    std::string name;
    Expr definition;
};

struct DbEntry {
    std::string id;
    ParamSet lhs;
    Expr rhs;
    std::vector<IntSymbol> int_symbols;
    std::vector<std::pair<std::string, std::string>> less_than;  // (n, m) means n < m
    std::vector<AuxSymbol> aux;
    LinExpr excess;
    std::string provenance;
    EntryStatus status = EntryStatus::Verified;
    double tolerance = 1e-7;
    std::string note;

    bool is_aux(const std::string& s) const;
    const IntSymbol* int_symbol(const std::string& s) const;
    // free symbols of the parameters that are neither integer nor auxiliary
    std::vector<std::string> continuous_symbols() const;
    // adds the values of the auxiliary symbols to an assignment of the free ones
    Assignment complete(Assignment a) const;
    bool constraints_hold(const Assignment& a) const;
};

bool same_entry(const DbEntry& x, const DbEntry& y);

// Builds an entry from infix text; used for the built-in seeds and by tests.
struct EntrySpec {
    std::string id;
    std::string upper;        // comma separated linear parameters
    std::string lower;
    std::string rhs;
    std::string constraints;  // "n<m; n>=0"; integer symbols default to >= 1
    std::string aux;          // "u = a*n/(b+n)"
    std::string let;          // "s = x/(1-a); a = y - n*s", inlined into the rhs
    std::string provenance;
    EntryStatus status = EntryStatus::Verified;
    double tolerance = 1e-7;
    std::string note;
};
DbEntry make_entry(const EntrySpec& spec);

const std::vector<DbEntry>& seed_db();
const DbEntry& find_entry(const std::vector<DbEntry>& db, const std::string& id);
const DbEntry* lookup_entry(const std::vector<DbEntry>& db, const std::string& id);

struct Sample {
    Assignment assignment;
    Complex lhs;
    Complex rhs;
    double rel_error;
};

struct VerificationReport {
    std::string entry_id;
    std::vector<Sample> samples;
    bool pass = false;
    std::string notes;
};

struct VerifyOptions {
    int trials = 5;
    std::uint64_t seed = 1;
    double rel_tol = 1e-7;
    double min_excess = 0.2;  // samples closer to the divergence boundary are skipped
};

VerificationReport verify_entry(const DbEntry& e, const VerifyOptions& opts);
VerificationReport verify_entry(const DbEntry& e, int trials, std::uint64_t seed, double rel_tol);

double relative_error(Complex x, Complex y);

std::vector<DbEntry> load(const std::string& path);
void save(const std::vector<DbEntry>& entries, const std::string& path);
std::string dump_db(const std::vector<DbEntry>& entries);
std::vector<DbEntry> parse_db(const std::string& text);

}  // namespace hyp321
