#pragma once

#include "hyp321/database.hpp"
#include "hyp321/thomae.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyp321 {

struct Substitution {
    std::map<std::string, LinExpr> mapping;  // template symbol -> query-side expression
    std::vector<LinExpr> conditions;         // each >= 0; integer conditions on the query symbols

    std::string str() const;
    friend bool operator==(const Substitution&, const Substitution&) = default;
};

// All exact solutions over the 6 x 2 alignments of the template parameters against the query.
// Integer symbols of the template must map to integers: nonnegative constants, or integer
// combinations of query integer symbols.
std::vector<Substitution> unify(const ParamSet& tmpl, const ParamSet& query);

struct MatchResult {
    std::string entry_id;
    ThomaeVariant variant;      // applied to the query to reach the entry's shape
    Substitution substitution;  // entry symbols -> query symbols
    Expr instantiated_rhs;      // equals the query's value
};

struct IdentifyOptions {
    bool include_conjectures = false;
};

// one variant per multiset class of images; the identity comes first
const std::vector<ThomaeVariant>& representative_variants();

std::vector<MatchResult> identify(const std::vector<DbEntry>& db, const ParamSet& query,
                                  const IdentifyOptions& opts = {});

struct Witness {
    ThomaeVariant variant;      // applied to e1's parameters
    Substitution substitution;  // e1 symbols -> e2 symbols
};

struct MatchCheck {
    bool checked = false;
    double rel_error = 0;
    Assignment at;
    std::string reason;  // why no check was possible
};

// Compares the query's series with the instantiated rhs at a random legal assignment.
MatchCheck check_match(const ParamSet& query, const MatchResult& m, std::uint64_t seed, double rel_tol = 1e-10);

// Witness that e2's parameters are a Thomae image of e1's under a linear substitution.
std::optional<Witness> equivalent(const DbEntry& e1, const DbEntry& e2);

// Entry whose parameters are the image of e's under v; same value, rhs divided by the prefactor.
DbEntry thomae_image(const DbEntry& e, const ThomaeVariant& v, const std::string& id);

// an upper parameter that is a non-positive integer for every legal assignment
bool terminates_symbolically(const DbEntry& e);
// an upper parameter exceeding a lower one by a positive integer <= max_gap
bool karlsson_minton_shape(const ParamSet& p, int max_gap = 3);

enum class CullReason { Equivalent, NonPositiveExcess, KarlssonMinton };
std::string to_string(CullReason r);

struct CullDecision {
    std::string id;
    CullReason reason;
    std::string retained;  // the surviving equivalent entry, if any
};

std::vector<DbEntry> cull(const std::vector<DbEntry>& entries, std::vector<CullDecision>* log = nullptr);

}  // namespace hyp321
