#pragma once

#include "hyp321/expr.hpp"
#include "hyp321/series.hpp"

#include <array>
#include <string>
#include <vector>

namespace hyp321 {

struct ThomaeVariant {
    int base = 10;                           // T1..T10
    std::array<int, 3> upper_perm{0, 1, 2};  // positions of the input [a, b, c]
    std::array<int, 2> lower_perm{0, 1};     // positions of the input [f, e]

    // e.g. "T3·(acb|fe)"
    std::string name() const;
    friend bool operator==(const ThomaeVariant&, const ThomaeVariant&) = default;
    friend auto operator<=>(const ThomaeVariant&, const ThomaeVariant&) = default;
};

struct TransformedForm {
    ParamSet params;
    Expr prefactor;  // F(original) = prefactor * F(params)
};

ThomaeVariant identity_variant();
const std::vector<ThomaeVariant>& all_variants();
TransformedForm apply(const ThomaeVariant& v, const ParamSet& p);
ThomaeVariant inverse_of(const ThomaeVariant& v);
// parses names produced by ThomaeVariant::name
ThomaeVariant variant_from_name(const std::string& name);

}  // namespace hyp321
