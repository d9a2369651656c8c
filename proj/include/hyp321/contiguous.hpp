#pragma once

#include "hyp321/expr.hpp"
#include "hyp321/series.hpp"

#include <string>

namespace hyp321 {

enum class Family { Watson, Dixon, Whipple };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct ContigQuery {
    Family family = Family::Watson;
    Complex a, b, c;
    long m = 0;
    long n = 0;
};

// Watson: [a, b, c], [(a+b+1+m)/2, 2c+n]
// Dixon: [a, b, c], [1+m+a-b, 1+m+n+a-c]
// Whipple: [a, b, 1-b+m+n], [c, 1+2a+m-c]
ParamSet contig_params(Family f, long m, long n);
Assignment contig_assignment(const ContigQuery& q);

enum class RecursionOrder { NFirst, MFirst };

Complex watson_element(Complex a, Complex b, Complex c, long m, long n,
                       RecursionOrder order = RecursionOrder::NFirst);
Complex dixon_element(Complex a, Complex b, Complex c, long m, long n);
Complex whipple_element(Complex a, Complex b, Complex c, long m, long n);
// Whipple element through the Dixon route
Complex whipple_element_via_dixon(Complex a, Complex b, Complex c, long m, long n);
Complex contig_element(const ContigQuery& q);

struct ContigResult {
    Complex value;
    bool checked = false;
    Complex series_value;
    double rel_error = 0;
};

// Evaluates by recursion and cross-checks against the direct series; NoConvergentCheck when excess <= 0.
ContigResult checked_element(const ContigQuery& q, double rel_tol = kDefaultOracleTol);

// element(source) = prefactor * element(target family at a, b, c, m, n)
struct ContigMap {
    Family target;
    LinExpr a, b, c;
    long m = 0;
    long n = 0;
    Expr prefactor;
};

ContigMap x_to_w(const LinExpr& a, const LinExpr& b, const LinExpr& c, long m, long n);
ContigMap w_to_x(const LinExpr& a, const LinExpr& b, const LinExpr& c, long m, long n);
ContigMap p_from_w(const LinExpr& a, const LinExpr& b, const LinExpr& c, long m, long n);
ContigMap p_from_x(const LinExpr& a, const LinExpr& b, const LinExpr& c, long m, long n);
// X(a, b, c, m, n) = X(a, c, b, m + n, -n), prefactor 1
ContigMap dixon_swap(const LinExpr& a, const LinExpr& b, const LinExpr& c, long m, long n);

// prefactor value and target arguments at numeric a, b, c
struct MappedValue {
    Complex prefactor, a, b, c;
};
MappedValue eval_map(const ContigMap& map, Complex a, Complex b, Complex c);

struct Anchor {
    long m;
    long n;
    std::string entry_id;
    std::string a, b, c;  // entry symbols bound to the Watson a, b, c
};
const std::vector<Anchor>& watson_anchors();
Complex anchor_value(const Anchor& an, Complex a, Complex b, Complex c);

// coefficients of W(m) = alpha W(m-2) + beta W(m-4) at fixed n
std::pair<Complex, Complex> c1_coefficients(Complex a, Complex b, Complex c, long m, long n);
// coefficients of W(n) = alpha W(n-1) + beta W(n-2) at fixed m
std::pair<Complex, Complex> c2_coefficients(Complex a, Complex b, Complex c, long m, long n);

}  // namespace hyp321
