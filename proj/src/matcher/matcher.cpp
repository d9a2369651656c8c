#include "hyp321/matcher.hpp"

#include "hyp321/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <tuple>

namespace hyp321 {

std::string Substitution::str() const {
    std::string out;
    for (auto& [k, v] : mapping) {
        if (!out.empty()) out += ", ";
        out += k + " -> " + v.str();
    }
    for (auto& c : conditions) out += "; " + c.str() + " >= 0";
    return out;
}

std::string to_string(CullReason r) {
    switch (r) {
        case CullReason::Equivalent: return "equivalent";
        case CullReason::NonPositiveExcess: return "non-positive excess";
        case CullReason::KarlssonMinton: return "Karlsson-Minton";
    }
    return "?";
}

namespace {

std::vector<LinExpr> flat(const ParamSet& p) {
    std::vector<LinExpr> v = p.upper;
    v.insert(v.end(), p.lower.begin(), p.lower.end());
    return v;
}

bool integer_combination(const LinExpr& v) {
    if (!v.constant().is_integer()) return false;
    for (auto& [s, c] : v.terms())
        if (!is_integer_symbol(s) || !c.is_integer()) return false;
    return true;
}

// Solves sum_j A[i][j] x_j = R[i]; free unknowns become primed copies of their names.
std::optional<std::map<std::string, LinExpr>> solve(std::vector<std::vector<Rational>> A, std::vector<LinExpr> R,
                                                    const std::vector<std::string>& names) {
    const std::size_t rows = A.size(), cols = names.size();
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        std::swap(R[p], R[r]);
        Rational inv = Rational(1) / A[r][c];
        for (auto& x : A[r]) x *= inv;
        R[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            Rational f = A[i][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            R[i] -= R[r] * f;
        }
        pivot_col.push_back(int(c));
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!(R[i] == LinExpr())) return std::nullopt;
    std::map<std::string, LinExpr> out;
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) out[names[c]] = LinExpr::symbol(names[c] + "'");
    for (std::size_t i = 0; i < r; ++i) {
        LinExpr v = R[i];
        for (std::size_t c = 0; c < cols; ++c)
            if (!is_pivot[c] && !A[i][c].is_zero()) v -= out[names[c]] * A[i][c];
        out[names[pivot_col[i]]] = v;
    }
    return out;
}

struct IntContext {
    std::map<std::string, Rational> mins;                      // query integer symbols; others default to 0
    std::vector<std::pair<std::string, std::string>> less_than;  // (x, y): x < y
};

Rational min_of(const IntContext& ctx, const std::string& s) {
    auto it = ctx.mins.find(s);
    return it == ctx.mins.end() ? Rational(0) : it->second;
}

// v >= 0 for every legal integer assignment
bool implied_nonneg(const LinExpr& v, const IntContext& ctx) {
    auto check = [&](const LinExpr& r) {
        Rational lo = r.constant();
        for (auto& [s, c] : r.terms()) {
            if (c.sign() < 0 || !is_integer_symbol(s)) return false;
            lo += c * min_of(ctx, s);
        }
        return lo.sign() >= 0;
    };
    if (check(v)) return true;
    for (auto& [x, y] : ctx.less_than)
        if (check(v - (LinExpr::symbol(y) - LinExpr::symbol(x)) + LinExpr(1))) return true;
    return false;
}

// v >= 0 for some legal assignment
bool satisfiable_nonneg(const LinExpr& v, const IntContext& ctx) {
    for (auto& [s, c] : v.terms())
        if (c.sign() > 0) return true;
    return implied_nonneg(v, ctx);
}

std::mt19937_64& aux_rng() {
    thread_local std::mt19937_64 rng(20240917);
    return rng;
}

// Checks the template's auxiliary definitions at random values of the query symbols.
bool aux_consistent(const DbEntry& tmpl, const std::map<std::string, LinExpr>& sub, const DbEntry* query) {
    if (tmpl.aux.empty()) return true;
    std::set<std::string> qsyms;
    for (auto& [k, v] : sub)
        for (auto& s : v.symbols()) qsyms.insert(s);
    auto& rng = aux_rng();
    std::uniform_real_distribution<double> cont(0.13, 0.87);
    std::uniform_int_distribution<int> ints(2, 6);
    int good = 0;
    for (int attempt = 0; attempt < 12 && good < 2; ++attempt) {
        Assignment q;
        for (auto& s : qsyms) {
            if (query && query->is_aux(s)) continue;
            q[s] = is_integer_symbol(s) ? Complex(ints(rng)) : Complex(cont(rng), 0.1 * cont(rng));
        }
        try {
            if (query) q = query->complete(q);
            Assignment t;
            for (auto& [k, v] : sub)
                if (!tmpl.is_aux(k)) t[k] = v.eval(q);
            Assignment full = tmpl.complete(t);
            for (auto& x : tmpl.aux) {
                Complex want = full.at(x.name), got = sub.at(x.name).eval(q);
                if (!std::isfinite(std::abs(want))) throw PoleError("aux");
                if (relative_error(got, want) > 1e-8) return false;
            }
            ++good;
        } catch (const Error&) {
        }
    }
    return good > 0;
}

// Entry constraints under the substitution: exact for constants, implied or recorded otherwise.
std::optional<Substitution> admissible(const DbEntry& tmpl, Substitution s, const DbEntry* query) {
    IntContext ctx;
    if (query) {
        for (auto& i : query->int_symbols) ctx.mins[i.name] = Rational(i.min);
        ctx.less_than = query->less_than;
    }
    auto require = [&](const LinExpr& v) {
        if (implied_nonneg(v, ctx)) return true;
        if (v.is_constant() || query || !satisfiable_nonneg(v, ctx)) return false;
        s.conditions.push_back(v);
        return true;
    };
    for (auto& i : tmpl.int_symbols) {
        auto it = s.mapping.find(i.name);
        if (it == s.mapping.end()) continue;
        if (!integer_combination(it->second)) return std::nullopt;
        if (!require(it->second - LinExpr(Rational(i.min))))
            return std::nullopt;
    }
    for (auto& [x, y] : tmpl.less_than) {
        auto ix = s.mapping.find(x), iy = s.mapping.find(y);
        if (ix == s.mapping.end() || iy == s.mapping.end()) continue;
        if (!require(iy->second - ix->second - LinExpr(1)))
            return std::nullopt;
    }
    if (!aux_consistent(tmpl, s.mapping, query)) return std::nullopt;
    return s;
}

struct Image {
    ThomaeVariant variant;
    TransformedForm form;
};

std::vector<Image> images_of(const ParamSet& p) {
    std::vector<Image> out;
    std::vector<ParamSet> seen;
    for (auto& v : representative_variants()) {
        TransformedForm tf = apply(v, p);
        if (std::find(seen.begin(), seen.end(), tf.params) != seen.end()) continue;
        seen.push_back(tf.params);
        out.push_back({v, tf});
    }
    return out;
}

Rational determinant(std::vector<std::vector<Rational>> M) {
    Rational det(1);
    const std::size_t n = M.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) std::swap(M[p], M[c]), det = -det;
        det *= M[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (M[i][c].is_zero()) continue;
            Rational f = M[i][c] / M[c][c];
            for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[c][j];
        }
    }
    return det;
}

// The substitution is an invertible affine change of variables whose integer part is unimodular,
// so neither side is a special case of the other.
bool invertible_change(const std::map<std::string, LinExpr>& sub, const DbEntry& from, const DbEntry& to) {
    auto f = from.lhs.symbols(), t = to.lhs.symbols();
    if (f.size() != t.size() || from.aux.size() != to.aux.size()) return false;
    std::vector<std::string> rows(f.begin(), f.end()), cols(t.begin(), t.end());
    std::vector<std::vector<Rational>> C, I;
    for (auto& r : rows) {
        auto it = sub.find(r);
        if (it == sub.end()) return false;
        for (auto& s : it->second.symbols())
            if (!t.count(s)) return false;
        auto& block = is_integer_symbol(r) ? I : C;
        block.emplace_back();
        for (auto& c : cols)
            if (is_integer_symbol(c) == is_integer_symbol(r)) block.back().push_back(it->second.coeff(c));
    }
    for (auto* block : {&C, &I})
        if (!block->empty() && block->size() != block->front().size()) return false;
    if (!I.empty()) {
        Rational d = determinant(I);
        if (!(d == Rational(1) || d == Rational(-1))) return false;
    }
    return C.empty() || !determinant(C).is_zero();
}

std::optional<Witness> equivalent_images(const DbEntry& e1, const std::vector<Image>& images, const DbEntry& e2) {
    for (auto& im : images)
        for (auto& s : unify(im.form.params, e2.lhs))
            if (!invertible_change(s.mapping, e1, e2)) continue;
            else if (auto ok = admissible(e1, s, &e2)) return Witness{im.variant, *ok};
    return std::nullopt;
}

}  // namespace

std::vector<Substitution> unify(const ParamSet& tmpl, const ParamSet& query) {
    std::vector<Substitution> out;
    if (tmpl.upper.size() != 3 || tmpl.lower.size() != 2 || query.upper.size() != 3 || query.lower.size() != 2)
        return out;
    auto symset = tmpl.symbols();
    std::vector<std::string> names(symset.begin(), symset.end());
    std::vector<LinExpr> t = flat(tmpl), q = flat(query);
    std::array<int, 3> up{0, 1, 2};
    do {
        for (auto lo : {std::array<int, 2>{3, 4}, std::array<int, 2>{4, 3}}) {
            std::array<int, 5> perm{up[0], up[1], up[2], lo[0], lo[1]};
            std::vector<std::vector<Rational>> A(5, std::vector<Rational>(names.size()));
            std::vector<LinExpr> R(5);
            bool hopeless = false;
            for (int i = 0; i < 5; ++i) {
                const LinExpr& ti = t[perm[i]];
                for (std::size_t j = 0; j < names.size(); ++j) A[i][j] = ti.coeff(names[j]);
                R[i] = q[i] - LinExpr(ti.constant());
                if (ti.is_constant() && !(R[i] == LinExpr())) hopeless = true;
            }
            if (hopeless) continue;
            auto sol = solve(std::move(A), std::move(R), names);
            if (!sol) continue;
            bool ok = true;
            for (auto& [k, v] : *sol)
                if (is_integer_symbol(k) && (!integer_combination(v) || (v.is_constant() && v.constant().sign() < 0)))
                    ok = false;
            if (!ok) continue;
            Substitution s{*sol, {}};
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
        }
    } while (std::next_permutation(up.begin(), up.end()));
    return out;
}

const std::vector<ThomaeVariant>& representative_variants() {
    static const std::vector<ThomaeVariant> reps = [] {
        std::vector<ThomaeVariant> v{identity_variant()};
        for (int base = 1; base <= 9; ++base) v.push_back({base, {0, 1, 2}, {0, 1}});
        return v;
    }();
    return reps;
}

std::vector<MatchResult> identify(const std::vector<DbEntry>& db, const ParamSet& query, const IdentifyOptions& opts) {
    std::vector<MatchResult> out;
    for (auto& im : images_of(query)) {
        for (auto& e : db) {
            if (e.status == EntryStatus::Flagged) continue;
            if (e.status == EntryStatus::Conjecture && !opts.include_conjectures) continue;
            for (auto& s : unify(e.lhs, im.form.params)) {
                auto ok = admissible(e, s, nullptr);
                if (!ok) continue;
                std::set<std::string> targets;
                for (auto& [k, v] : ok->mapping) targets.merge(v.symbols());
                try {
                    Expr rhs = ex::mul({im.form.prefactor, substitute(rename_bound(e.rhs, targets), ok->mapping)});
                    out.push_back({e.id, im.variant, *ok, rhs});
                } catch (const PoleError&) {
                    // the closed form is singular on this instance
                }
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const MatchResult& x, const MatchResult& y) {
        return std::make_pair(x.entry_id, x.variant.name()) < std::make_pair(y.entry_id, y.variant.name());
    });
    return out;
}

MatchCheck check_match(const ParamSet& query, const MatchResult& m, std::uint64_t seed, double rel_tol) {
    MatchCheck out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> cont(0.1, 0.9);
    std::uniform_int_distribution<int> ints(0, 5);
    auto syms = query.symbols();
    const int attempts = syms.empty() ? 1 : 200;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Assignment a;
        for (auto& s : syms) a[s] = is_integer_symbol(s) ? Complex(ints(rng)) : Complex(cont(rng) + 0.0123);
        bool legal = true;
        for (auto& c : m.substitution.conditions)
            if (c.eval(a).real() < 0) legal = false;
        if (!legal) continue;
        if (!is_terminating(query, a) && excess(query).eval(a).real() < 0.2) {
            out.reason = "excess below 0.2 at the sampled points";
            continue;
        }
        try {
            Complex lhs = series_pfq(query, a, rel_tol).value;
            Complex rhs = eval_expr(m.instantiated_rhs, a);
            if (!std::isfinite(rhs.real()) || !std::isfinite(rhs.imag())) continue;
            out.checked = true;
            out.rel_error = relative_error(lhs, rhs);
            out.at = a;
            return out;
        } catch (const Error& e) {
            out.reason = e.what();
        }
    }
    if (out.reason.empty()) out.reason = "no legal assignment found";
    return out;
}

std::optional<Witness> equivalent(const DbEntry& e1, const DbEntry& e2) {
    return equivalent_images(e1, images_of(e1.lhs), e2);
}

DbEntry thomae_image(const DbEntry& e, const ThomaeVariant& v, const std::string& id) {
    DbEntry out = e;
    TransformedForm tf = apply(v, e.lhs);
    out.id = id;
    out.lhs = tf.params;
    out.rhs = ex::div(e.rhs, tf.prefactor);
    out.excess = excess(tf.params);
    out.provenance = "Thomae image " + v.name() + " of " + e.id;
    out.note.clear();
    return out;
}

bool terminates_symbolically(const DbEntry& e) {
    for (auto& u : e.lhs.upper) {
        if (!integer_combination(u)) continue;
        Rational hi = u.constant();
        bool bounded = true;
        for (auto& [s, c] : u.terms()) {
            if (c.sign() > 0) bounded = false;
            const IntSymbol* i = e.int_symbol(s);
            hi += c * Rational(i ? i->min : 0);
        }
        if (bounded && hi.sign() <= 0) return true;
    }
    return false;
}

bool karlsson_minton_shape(const ParamSet& p, int max_gap) {
    for (auto& u : p.upper)
        for (auto& l : p.lower) {
            LinExpr d = u - l;
            if (d.is_constant() && d.constant().is_integer() && d.constant().sign() > 0 &&
                d.constant() <= Rational(max_gap))
                return true;
        }
    return false;
}

std::vector<DbEntry> cull(const std::vector<DbEntry>& entries, std::vector<CullDecision>* log) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const DbEntry& e = entries[i];
        const LinExpr& s = e.excess;
        if (s.is_constant() && s.constant().is_integer() && s.constant().sign() <= 0 && !terminates_symbolically(e)) {
            if (log) log->push_back({e.id, CullReason::NonPositiveExcess, ""});
            continue;
        }
        if (karlsson_minton_shape(e.lhs)) {
            if (log) log->push_back({e.id, CullReason::KarlssonMinton, ""});
            continue;
        }
        order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const DbEntry &a = entries[x], &b = entries[y];
        auto ka = std::make_tuple(-long(a.continuous_symbols().size()), a.int_symbols.size(), a.id);
        auto kb = std::make_tuple(-long(b.continuous_symbols().size()), b.int_symbols.size(), b.id);
        return ka < kb;
    });
    std::vector<std::size_t> kept;
    std::map<std::size_t, std::vector<Image>> images;
    auto images_for = [&](std::size_t i) -> const std::vector<Image>& {
        auto it = images.find(i);
        if (it == images.end()) it = images.emplace(i, images_of(entries[i].lhs)).first;
        return it->second;
    };
    for (std::size_t i : order) {
        const DbEntry& e = entries[i];
        const DbEntry* match = nullptr;
        for (std::size_t k : kept) {
            const DbEntry& r = entries[k];
            if (equivalent_images(r, images_for(k), e) || equivalent_images(e, images_for(i), r)) {
                match = &r;
                break;
            }
        }
        if (match) {
            if (log) log->push_back({e.id, CullReason::Equivalent, match->id});
            continue;
        }
        kept.push_back(i);
    }
    std::sort(kept.begin(), kept.end());
    std::vector<DbEntry> out;
    for (std::size_t k : kept) out.push_back(entries[k]);
    return out;
}

}  // namespace hyp321
