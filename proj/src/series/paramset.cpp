#include "hyp321/series.hpp"

namespace hyp321 {

ParamSet ParamSet::substitute(const std::map<std::string, LinExpr>& mapping) const {
    ParamSet r;
    for (auto& u : upper) r.upper.push_back(u.substitute(mapping));
    for (auto& l : lower) r.lower.push_back(l.substitute(mapping));
    return r;
}

std::set<std::string> ParamSet::symbols() const {
    std::set<std::string> s;
    for (auto& u : upper) s.merge(u.symbols());
    for (auto& l : lower) s.merge(l.symbols());
    return s;
}

std::string ParamSet::str() const {
    auto list = [](const std::vector<LinExpr>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
        return s + "]";
    };
    return list(upper) + ", " + list(lower);
}

bool operator<(const ParamSet& x, const ParamSet& y) {
    auto cx = x.canonical(), cy = y.canonical();
    if (cx.upper != cy.upper) return cx.upper < cy.upper;
    return cx.lower < cy.lower;
}

bool same_order(const ParamSet& x, const ParamSet& y) { return x.upper == y.upper && x.lower == y.lower; }

LinExpr excess(const ParamSet& p) {
    LinExpr s;
    for (auto& l : p.lower) s += l;
    for (auto& u : p.upper) s -= u;
    return s;
}

}  // namespace hyp321
