#include "hyp321/thomae.hpp"

#include "hyp321/errors.hpp"

#include <algorithm>
#include <map>

namespace hyp321 {

namespace {

Expr gammas(const std::vector<LinExpr>& num, const std::vector<LinExpr>& den) {
    std::vector<Expr> f;
    for (auto& x : num) f.push_back(ex::gamma(ex::lin(x)));
    for (auto& x : den) f.push_back(ex::recip(ex::gamma(ex::lin(x))));
    return ex::mul(f);
}

TransformedForm recipe(int base, const LinExpr& a, const LinExpr& b, const LinExpr& c, const LinExpr& f,
                       const LinExpr& e) {
    const LinExpr s = e + f - a - b - c;
    switch (base) {
    case 1:
        return {{{s, f - c, e - c}, {e - b + f - c, e + f - a - c}},
                gammas({s, f, e}, {c, e - b + f - c, e + f - a - c})};
    case 2:
        return {{{s, f - b, e - b}, {e - b + f - c, e - b + f - a}},
                gammas({s, f, e}, {b, e - b + f - c, e - b + f - a})};
    case 3:
        return {{{f - c, f - b, a}, {e - b + f - c, f}}, gammas({s, e}, {e - a, e - b + f - c})};
    case 4:
        return {{{e - c, e - b, a}, {e - b + f - c, e}}, gammas({s, f}, {f - a, e - b + f - c})};
    case 5:
        return {{{s, f - a, e - a}, {e + f - a - c, e - b + f - a}},
                gammas({s, f, e}, {a, e + f - a - c, e - b + f - a})};
    case 6:
        return {{{f - c, f - a, b}, {e + f - a - c, f}}, gammas({s, e}, {e - b, e + f - a - c})};
    case 7:
        return {{{e - c, e - a, b}, {e + f - a - c, e}}, gammas({s, f}, {f - b, e + f - a - c})};
    case 8:
        return {{{f - b, f - a, c}, {e - b + f - a, f}}, gammas({s, e}, {e - c, e - b + f - a})};
    case 9:
        return {{{e - b, e - a, c}, {e - b + f - a, e}}, gammas({s, f}, {f - c, e - b + f - a})};
    case 10:
        return {{{a, b, c}, {f, e}}, ex::constant(Rational(1))};
    }
    throw Error("unknown Thomae base T" + std::to_string(base));
}

ParamSet generic() {
    auto s = [](const char* n) { return LinExpr::symbol(n); };
    return {{s("a"), s("b"), s("c")}, {s("f"), s("e")}};
}

}  // namespace

std::string ThomaeVariant::name() const {
    std::string up, lo;
    for (int i : upper_perm) up += char('a' + i);
    for (int i : lower_perm) lo += i == 0 ? 'f' : 'e';
    return "T" + std::to_string(base) + "·(" + up + "|" + lo + ")";
}

ThomaeVariant identity_variant() { return {}; }

const std::vector<ThomaeVariant>& all_variants() {
    static const std::vector<ThomaeVariant> variants = [] {
        std::vector<ThomaeVariant> v;
        for (int base = 1; base <= 10; ++base) {
            std::array<int, 3> up{0, 1, 2};
            do {
                for (auto lo : {std::array<int, 2>{0, 1}, std::array<int, 2>{1, 0}})
                    v.push_back({base, up, lo});
            } while (std::next_permutation(up.begin(), up.end()));
        }
        return v;
    }();
    return variants;
}

TransformedForm apply(const ThomaeVariant& v, const ParamSet& p) {
    if (p.upper.size() != 3 || p.lower.size() != 2) throw Error("Thomae relations need a 3F2 parameter set");
    const auto& u = p.upper;
    const auto& l = p.lower;
    return recipe(v.base, u[v.upper_perm[0]], u[v.upper_perm[1]], u[v.upper_perm[2]], l[v.lower_perm[0]],
                  l[v.lower_perm[1]]);
}

ThomaeVariant inverse_of(const ThomaeVariant& v) {
    static const std::map<ThomaeVariant, ThomaeVariant> table = [] {
        const ParamSet g = generic();
        const auto& all = all_variants();
        auto undoes = [&](const ThomaeVariant& w, const ThomaeVariant& x) {
            return apply(w, apply(x, g).params).params == g;
        };
        std::map<ThomaeVariant, ThomaeVariant> t;
        for (auto& x : all) {
            if (undoes(x, x)) {
                t.emplace(x, x);
                continue;
            }
            const ThomaeVariant* left = nullptr;
            for (auto& w : all) {
                if (!undoes(w, x)) continue;
                if (!left) left = &w;
                if (undoes(x, w)) {
                    left = &w;
                    break;
                }
            }
            if (left) t.emplace(x, *left);
        }
        return t;
    }();
    auto it = table.find(v);
    if (it == table.end()) throw Error("no inverse for " + v.name());
    return it->second;
}

ThomaeVariant variant_from_name(const std::string& name) {
    for (auto& v : all_variants())
        if (v.name() == name) return v;
    throw ParseError("unknown Thomae variant '" + name + "'");
}

}  // namespace hyp321
