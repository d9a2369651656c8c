#pragma once

#include "hyp321/linexpr.hpp"

#include <string>
#include <vector>

namespace hyp321 {

struct ParamSet {
    std::vector<LinExpr> upper;
    std::vector<LinExpr> lower;

    ParamSet canonical() const { return {sorted(upper), sorted(lower)}; }
    ParamSet substitute(const std::map<std::string, LinExpr>& mapping) const;
    std::set<std::string> symbols() const;
    std::string str() const;

    // multiset comparison
    friend bool operator==(const ParamSet& x, const ParamSet& y) {
        return sorted(x.upper) == sorted(y.upper) && sorted(x.lower) == sorted(y.lower);
    }
    friend bool operator<(const ParamSet& x, const ParamSet& y);
};

// ordered comparison, position by position
bool same_order(const ParamSet& x, const ParamSet& y);

struct SeriesResult {
    Complex value;
    double abs_error_estimate = 0;
    long terms_used = 0;
    bool terminated = false;
};

inline constexpr double kDefaultOracleTol = 1e-10;

LinExpr excess(const ParamSet& p);
bool is_terminating(const ParamSet& p, const Assignment& a);
bool is_karlsson_minton(const ParamSet& p, const Assignment& a, int max_gap = 3);

SeriesResult series_pfq(const ParamSet& p, const Assignment& a, double rel_tol = kDefaultOracleTol);
SeriesResult series_pfq(const std::vector<Complex>& upper, const std::vector<Complex>& lower,
                        double rel_tol = kDefaultOracleTol);

// One extrapolation window with partial sums at base * 2^i; exposed for consistency checks.
SeriesResult series_window(const std::vector<Complex>& upper, const std::vector<Complex>& lower, long base);

}  // namespace hyp321
