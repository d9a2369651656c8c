#include "seeds.hpp"

namespace hyp321::seeds {

namespace {
constexpr const char* kClassical = "external: classical theorem";
}

void appendix_c(std::vector<EntrySpec>& out) {
    out.push_back({"C.3", "a, b, c", "a-b, a-c",
        "2^(-a)*sqrt(pi)*Gamma(a-c)*Gamma(a-b)*Gamma(a/2-c-b)/(Gamma(a/2+1/2)*Gamma(a/2-b)*Gamma(a/2-c)"
        "*Gamma(a-b-c))"
        " + 2^(-a)*sqrt(pi)*Gamma(a-c)*Gamma(a-b)*Gamma(a/2-c-b+1/2)/(Gamma(a/2)*Gamma(1/2+a/2-b)"
        "*Gamma(a-b-c)*Gamma(1/2+a/2-c))",
        "", "", "", "Dixon element X(-1,0) by recursion"});
    out.push_back({"C.4", "a, b, c", "3+a-b, 3+a-c",
        "-2*sqrt(pi)*Gamma(7/2+a/2-b-c)*Gamma(3+a-c)*Gamma(3+a-b)/((-2+b)*(-2+c)*2^a*(b-1)*(c-1)"
        "*Gamma(a+3-b-c)*Gamma(3/2+a/2-c)*Gamma(3/2+a/2-b)*Gamma(a/2))"
        " + (1/4*(2+a-2*c)*(-2*b+a+2)*(a+5-2*c-2*b)*sqrt(pi)/((-2+b)*(-2+c)*2^a*(b-1)*(c-1))"
        " - 1/8*(-2*b-2*c+a+6)*sqrt(pi)/((-2+b)*(-2+c)*2^(-2+a)))"
        "*Gamma(2+a/2-c-b)*Gamma(3+a-b)*Gamma(3+a-c)"
        "/(Gamma(a/2+1/2)*Gamma(a+3-b-c)*Gamma(a/2+2-c)*Gamma(a/2-b+2))",
        "", "", "", "Dixon element X(2,0) by recursion",
        EntryStatus::Verified, 1e-7, "bracketed pair multiplies the trailing gamma quotient"});
    out.push_back({"C.5", "a, b, c", "a/2+b/2, 2*c",
        "(1/(Gamma(1/2-a/2+c)*Gamma(c-b/2)*Gamma(b/2)*Gamma(a/2+1/2))"
        " + 1/(Gamma(1/2-b/2+c)*Gamma(b/2+1/2)*Gamma(a/2)*Gamma(c-a/2)))"
        "*Gamma(-a/2-b/2+c)*Gamma(a/2+b/2)*Gamma(c+1/2)*sqrt(pi)",
        "", "", "", "Watson element W(-1,0) from X(-1,0)"});
    out.push_back({"C.6", "a, b, c", "a/2+b/2+3/2, 2*c",
        "((-(a^2-2*c*a-2*c*b-1+2*c+b^2)/(Gamma(a/2+1/2)*Gamma(1/2-a/2+c)*Gamma(1/2-b/2+c)*Gamma(b/2+1/2))"
        " - 8/(Gamma(b/2)*Gamma(a/2)*Gamma(c-b/2)*Gamma(c-a/2)))"
        "*sqrt(pi)*Gamma(-1/2-a/2-b/2+c)*Gamma(a/2+b/2+3/2)*Gamma(c+1/2))/((-1-a+b)*(-a+b+1))",
        "", "", "", "Watson element W(2,0) from X(2,0)"});
}

void equations(std::vector<EntrySpec>& out) {
    out.push_back({"EQ.1", "a, b, -n", "b+1/2, a-n+1/2",
        "sqrt(pi)*Gamma(a-n+1/2)*Gamma(b+1/2)*Gamma(1/2+b-a+n)/(Gamma(a+1/2)*Gamma(-n+1/2)*Gamma(1/2+b-a)"
        "*Gamma(1/2+b+n))",
        "", "", "", "Prudnikov 7.4.4.19 corrected to b = -n"});
    out.push_back({"EQ.2", "1, 1, 1", "3, b",
        "-2*(b-2) + 2*(b-1)^2*psi(1, b)",
        "", "", "", "Prudnikov 7.4.4.43 corrected",
        EntryStatus::Verified, 1e-7, "printed upper parameters 1, 2, a do not match the printed value"});
    out.push_back({"EQ.3", "a, a-n, a-n", "a-n+1, a-n+1",
        "pi*Gamma(n)*(n-a)/(poch(1-a, n-1)*sin(a*pi))",
        "", "", "", "Prudnikov 7.4.4.55 corrected"});
    out.push_back({"EQ.4", "2, a, a", "a+2, a+2",
        "-a^2*(a+1)^2*((2*a-1)*psi(1, a) - 2)",
        "", "", "", "Prudnikov 7.4.4.67 corrected"});
    out.push_back({"EQ.5", "3, a, a+1", "a+2, a+3",
        "(1+a)^2*(2+a)*(-2*a^2*(a-1)*psi(1, a) + a*(2*a-1))/4",
        "", "", "", "Prudnikov 7.4.4.71 corrected"});
    out.push_back({"EQ.6", "a, a+1/2, b", "b+3/2-a, b-a+1",
        "2^(-b)*sqrt(pi)*Gamma(2+2*b-2*a)*Gamma(2+b-4*a)/(Gamma(2+2*b-4*a)*(2*a-1))"
        "*(1/(Gamma(b/2)*Gamma(3/2+b/2-2*a)) - 1/(Gamma(b/2+1/2)*Gamma(1+b/2-2*a)))",
        "", "", "", "Prudnikov 7.4.4.25 variation 1"});
    out.push_back({"EQ.7", "a, a+1/2, 1", "3/2-a-n/2, 2-a-n/2",
        "Gamma(3-n-2*a)*Gamma(2-n-4*a)/Gamma(3-n-4*a)"
        "*(2^(-4*a-n)*Gamma(1-2*a)/Gamma(2-n-4*a)"
        " + 1/(2*Gamma(2*a))*sum(k, 0, n-1, (-1)^k*Gamma(2*a+k)/Gamma(2+k-n-2*a)))",
        "", "", "", "Prudnikov 7.4.4.25 variation 2"});
    out.push_back({"EQ.8", "a, a+1/2, 1", "3/2-a+n/2, 1-a+n/2",
        "Gamma(1-2*a)*(1+n-2*a)/(1+n-4*a)"
        "*(2^(n-1-4*a)*Gamma(1+n-2*a)/Gamma(1+n-4*a)"
        " - 1/(2*Gamma(2*a-n))*sum(k, 1, n-1, (-1)^k*Gamma(2*a-n+k)/Gamma(1+k-2*a)))",
        "", "", "", "Prudnikov 7.4.4.25 variation 3"});
    out.push_back({"EQ.9", "1, n+1, a", "n+2, b",
        "(n+1)*Gamma(b)/Gamma(a)*(Gamma(a-n-1)*(psi(b-n-1) - psi(b-a))/Gamma(b-n-1)"
        " - sum(L, 0, n-1, Gamma(a+L-n)/(Gamma(b+L-n)*(L+1))))",
        "", "", "", "Ref. 11, Lemma 2.1"});
    out.push_back({"EQ.10", "a, b, c", "n+b, c+1",
        "poch(b, n)*Gamma(c+1)*Gamma(1-a)/(poch(b-c, n)*Gamma(c+1-a))"
        " + c*Gamma(b+n)*Gamma(c-b+1-n)*sum(L, 0, n-1, Gamma(n-L-a)*(-1)^L/(Gamma(b+n-a-L)*Gamma(n-L)"
        "*Gamma(c-b-n+2+L)))",
        "", "", "", "Ref. 11, Lemma 2.2"});
    out.push_back({"EQ.11", "2*a, 1-a, -n", "2*a+2, -a-1/2-3*n/2",
        "poch((n+3)/2, n)*(n+1)*(2*a+1)/(poch(1+(n+2*a+1)/2, n)*(2*a+n+1))",
        "", "", "", "Gessel & Stanton, SIAM J. Math. Anal. 13,2,295(1982) Eq(1.6)"});
    out.push_back({"EQ.12", "1+x, a-1, -n", "a+1, -y-n",
        "a*poch(1+s+s*n, n)*(n+1)/(poch(1+s*(a+n), n)*(a+n))",
        "", "y = x*(n+a)/(1-a)", "s = x/(1-a)",
        "Gessel & Stanton, SIAM J. Math. Anal. 13,2,295(1982) Eq(1.9)",
        EntryStatus::Verified, 1e-7, "free parameter x = s*(1-a)"});
    out.push_back({"EQ.12b", "1+x, a-1, n+1", "a+1, -y+n+1",
        "a*poch(1-s*n, -n-1)*(-n)/(poch(1+s*(a-n-1), -n-1)*(a-n-1))",
        "", "y = x*(a-n-1)/(1-a)", "s = x/(1-a)",
        "Gessel & Stanton, SIAM J. Math. Anal. 13,2,295(1982) Eq(1.9) with n -> -1-n",
        EntryStatus::Verified, 1e-7, "free parameter x = s*(1-a)"});
    out.push_back({"EQ.14", "2, 1+x, 1-n", "b+2, 2-y",
        "(b+1)*(a-1+n*s)*(a+n*s)*a*b*Gamma(n)*Gamma(1-n*s+n+b-s*b)/((s*b-a)*(s-1)*Gamma(b+n+1)"
        "*Gamma(1-a-n*s+n))"
        "*sum(L, 0, n, Gamma(-a-n*s+L)*Gamma(b+L)/(Gamma(L+1)*Gamma(1-n*s+b-s*b+L)))"
        " + b*(a+n*s)*(-1+a+n*s)*(b+1)/(n*(s-1)*(s*b-a)*(b+n))",
        "", "", "s = (x+y)/(b+n); a = y-n*s",
        "Gessel and Stanton, SIAM J. Math. Anal., 13,295(1982) Eq.(5.16) reduced",
        EntryStatus::Verified, 1e-7, "free parameters x = s*b-a, y = a+n*s"});
    out.push_back({"EQ.15", "a, b, c", "a/2+b/2+1/2, 2*c+1",
        "2^(a+b)*Gamma(a/2+b/2+1/2)*Gamma(c+1/2)*Gamma(c-a/2-b/2+1/2)/(sqrt(pi)*Gamma(a+1)*Gamma(b+1))"
        "*(Gamma(a/2+1)*Gamma(b/2+1)/(Gamma(c-a/2+1/2)*Gamma(c-b/2+1/2))"
        " - a*b*Gamma(a/2+1/2)*Gamma(b/2+1/2)/(4*Gamma(c-a/2+1)*Gamma(c-b/2+1)))",
        "", "", "", "Lavoie, Math. Comp., 49,179,269(1987), Eq(2)"});

    out.push_back({"CONJ.23", "2*a, 1-a, 2*n", "2*a+2, -a+3*n-1/2",
        "(2*a+1)*Gamma(a-n+1/2)*Gamma(-3*n+5/2)/(3*Gamma(3/2-3*n+a)*Gamma(3/2-n))",
        "n>=0", "", "", "Gessel & Stanton Eq(1.6) with n -> -2n", EntryStatus::Conjecture});
    out.push_back({"CONJ.24", "2, a, b", "c, u",
        "-(c-1)*(c+a*b-b-a-1)/((c-1-b)*(a+1-c))",
        "", "u = (2*c-3-a+a*b-b)/(c-2)", "", "Gessel & Stanton Eq(5.16) with continuous n",
        EntryStatus::Conjecture});

    out.push_back({"ANCHOR.W00", "a, b, c", "a/2+b/2+1/2, 2*c",
        "sqrt(pi)*Gamma(c+1/2)*Gamma(a/2+b/2+1/2)*Gamma(c-a/2-b/2+1/2)"
        "/(Gamma(a/2+1/2)*Gamma(b/2+1/2)*Gamma(c-a/2+1/2)*Gamma(c-b/2+1/2))",
        "", "", "", kClassical, EntryStatus::Verified, 1e-7, "Watson's theorem"});
    out.push_back({"ANCHOR.X00", "a, b, c", "1+a-b, 1+a-c",
        "Gamma(1+a/2)*Gamma(1+a-b)*Gamma(1+a-c)*Gamma(1+a/2-b-c)"
        "/(Gamma(1+a)*Gamma(1+a/2-b)*Gamma(1+a/2-c)*Gamma(1+a-b-c))",
        "", "", "", kClassical, EntryStatus::Verified, 1e-7, "Dixon's theorem"});
    out.push_back({"ANCHOR.X10", "a, b, c", "2+a-b, 2+a-c",
        "((1/2*Gamma(C-A/2)*Gamma(A/2)/(Gamma(C-B/2)*Gamma(B/2))"
        " - 1/2*Gamma(1/2-A/2+C)*Gamma(A/2+1/2)/(Gamma(1/2-B/2+C)*Gamma(B/2+1/2)))"
        "*Gamma(1+B/2+A/2)*Gamma(2*C)*Gamma(-A/2+1-B/2+C))"
        "/(Gamma(2*C-A)*Gamma(C)*Gamma(A)*(B/2-A/2)*(-A/2-B/2+C))"
        "*Gamma(a-2*b-2*c+4)*Gamma(2+a-c)/(Gamma(2-c)*Gamma(2*a-2*b-2*c+4))",
        "", "", "A = 2+a-2*b; B = a; C = 2+a-b-c", kClassical, EntryStatus::Verified, 1e-7,
        "Dixon contiguous element X(1,0)"});
    out.push_back({"ANCHOR.X0m1", "a, b, c", "1+a-b, a-c",
        "sqrt(pi)*Gamma(C-1/2)*Gamma(A/2+B/2+1/2)*Gamma(C-A/2-B/2-1/2)*(Gamma(A/2)*Gamma(B/2)*Gamma(C-A/2)"
        "*Gamma(C-B/2) + Gamma(B/2+1/2)*Gamma(C-1/2-A/2)*Gamma(C-1/2-B/2)*Gamma(A/2+1/2))"
        "/(Gamma(B/2+1/2)*Gamma(C-1/2-A/2)*Gamma(C-1/2-B/2)*Gamma(A/2+1/2)*Gamma(C-A/2)*Gamma(C-B/2)"
        "*Gamma(A/2)*Gamma(B/2))"
        "*Gamma(a-2*b-2*c+1)*Gamma(a-c)/(Gamma(-c)*Gamma(2*a-2*b-2*c+1))",
        "", "", "A = 1+a-2*b; B = a; C = 1+a-b-c", kClassical, EntryStatus::Verified, 1e-7,
        "Dixon contiguous element X(0,-1)"});
}

}  // namespace hyp321::seeds
