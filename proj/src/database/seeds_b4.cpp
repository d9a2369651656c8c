#include "seeds.hpp"

namespace hyp321::seeds {

namespace {
constexpr const char* kGs19 = "Gessel & Stanton, SIAM J. Math. Anal. 13,2,295(1982) Eq(1.9)";
constexpr const char* kGs19r = "Gessel & Stanton, SIAM J. Math. Anal. 13,2,295(1982) Eq(1.9) with n -> -1-n";
constexpr const char* kGs516 = "Gessel and Stanton, SIAM J. Math. Anal., 13,295(1982) Eq.(5.16)";
constexpr const char* kLavoie = "Lavoie, Math. Comp., 49,179,269(1987), Eq(2)";
constexpr const char* kLewanowicz = "Lewanowicz, J. Comp & Appl. Math. 86,375(1997) Generalized Watson; Eq.(2.15)";

std::string tag(const char* base, const char* t) { return std::string(base) + " : " + t; }
}  // namespace

void appendix_b_part4(std::vector<EntrySpec>& out) {
    out.push_back({"B.47", "a, b, c", "2*c, 1+b/2+a/2",
        "((1/2*Gamma(c-a/2)*Gamma(a/2)/(Gamma(c-b/2)*Gamma(b/2))"
        " - 1/2*Gamma(1/2-a/2+c)*Gamma(a/2+1/2)/(Gamma(1/2-b/2+c)*Gamma(b/2+1/2)))"
        "*Gamma(1+b/2+a/2)*Gamma(2*c)*Gamma(-a/2+1-b/2+c))"
        "/(Gamma(2*c-a)*Gamma(c)*Gamma(a)*(b/2-a/2)*(-a/2-b/2+c))",
        "", "", "", "Prudnikov 7.4.4.22 : T1"});
    out.push_back({"B.48", "a, b, c", "c/2+b/2+n/2+1/2+m/2, -n+2*a",
        "W(c, -b+2*a-n, a-n, m, n)*Gamma(-c/2-b/2+a-n/2+1/2+m/2)*Gamma(c/2+b/2+n/2+1/2+m/2)"
        "/(Gamma(-c/2+b/2+n/2+1/2+m/2)*Gamma(c/2-b/2+a-n/2+1/2+m/2))",
        "m>=-1; n>=-1", "", "", tag(kLewanowicz, "T3")});
    out.push_back({"B.49", "a, -a+m+1, b", "c, -c+n+2*b+1+m",
        "W(a-c+n+2*b, -c-a+n+1+m+2*b, b, m, n)*Gamma(b+n)*Gamma(c)/(Gamma(c-b)*Gamma(2*b+n))",
        "m>=-1; n>=-1", "", "", tag(kLewanowicz, "T9")});
    out.push_back({"B.50", "a, b, c", "b+2-a, 1+b-c",
        "-Gamma(b+2-a)*Gamma(1+b-c)*Gamma(b/2-c-a+2)*sqrt(pi)/(Gamma(-a+1+b/2)*Gamma(b/2-c+1)*Gamma(b/2+1/2)"
        "*(a-1)*Gamma(-c-a+b+2)*2^b)"
        " + Gamma(b+2-a)*Gamma(1+b-c)*Gamma(b/2-c-a+3/2)*sqrt(pi)/((a-1)*Gamma(-c-a+b+2)*Gamma(b/2)"
        "*Gamma(b/2+3/2-a)*2^b*Gamma(1/2+b/2-c))",
        "", "", "", tag(kLavoie, "T2"),
        EntryStatus::Verified, 1e-7, "sign of the first term reversed"});
    out.push_back({"B.51", "a, b, c", "1+c/2+b/2, 2*a-1",
        "((-1/4*c*(-b-1+2*a)*Gamma(a-b/2)*Gamma(c/2+1/2)/(Gamma(-c/2+a)*Gamma(b/2+1/2))"
        " + Gamma(1+c/2)*Gamma(-b/2+a+1/2)/(Gamma(-c/2+a-1/2)*Gamma(b/2)))"
        "*Gamma(1+c/2+b/2)*Gamma(a-b/2-c/2)*Gamma(a-1/2)*2^(c-b+2*a-1))"
        "/(sqrt(pi)*Gamma(c+1)*Gamma(2*a-b)*(-c/2+b/2))",
        "", "", "", tag(kLavoie, "T3")});
    out.push_back({"B.52", "a, -a+1, b", "c, -c+2+2*b",
        "(-1/((c-1-b)*Gamma(1/2+a/2-c/2+b)*Gamma(-c/2-a/2+1+b)*Gamma(c/2+a/2)*Gamma(-a/2+c/2+1/2))"
        " + 1/((c-1-b)*Gamma(a/2-c/2+1+b)*Gamma(-a/2+c/2)*Gamma(-1/2+c/2+a/2)*Gamma(3/2-c/2-a/2+b)))"
        "*pi*2^(-2*b)*Gamma(-c+2+2*b)*Gamma(c)",
        "", "", "", tag(kLavoie, "T9")});
    out.push_back({"B.53", "a, b, a-n-1", "a-u, a-n+1",
        "sin(pi*(b-a+u))*(n-a)*(b*n-a+1)*Gamma(a-u)*Gamma(2-a+(-a+1)*(b-1)/(n+1-a))*Gamma(2-b-u)"
        "/((b-a+n)*(a-1)*pi*Gamma(2-u))",
        "", "u = n*(b-1)/(a-n-1)", "", tag(kGs19, "T5")});
    out.push_back({"B.54", "2, a, 1-n", "b, 2+u",
        "(a*n-b-n+2)*(b-1)/((1+a-b)*(b+n-2))",
        "", "u = n*(-a+1)/(b-2)", "", tag(kGs19, "T8")});
    out.push_back({"B.55", "a, b, -u", "2-u, -1+a+b+n",
        "sin(pi*a)*(-1)^n*(n-a*b+a+b-1)*Gamma(n)*Gamma(-a-n+1)*Gamma(-1+a+b+n)/(pi*Gamma(b+n))",
        "", "u = (a-1)*(b-1)/n", "", tag(kGs19r, "T1")});
    out.push_back({"B.56", "a, 2, b", "1+u, 1+a+n",
        "(n+a*b-b)*(a+n)/((n-b+a)*n)",
        "", "u = (b*(a-1)+n)/(a+n-1)", "", tag(kGs19r, "T2")});
    out.push_back({"B.57", "a, b, 1+a+u", "2+a, 1+a+n",
        "-sin(pi*n*a/(1+a-b))*(1+a)*Gamma(2-b-n*(-b+1)/(b-a-1))*Gamma(n*(b-1)/(1+a-b))"
        "/(sin(pi*a)*Gamma(-b+a+2+n)*Gamma(-a-n))",
        "", "u = a*n/(1+a-b)", "", tag(kGs19r, "T4")});
    out.push_back({"B.58", "a, b, a+n-1", "a-1+u, 1+a+n",
        "-sin(pi*(a+(-b+1)*(a-1)/(a+n-1)))*(b*n+a-1)*(a+n)*Gamma(1+(b-1)*(-a+1)/(a+n-1))"
        "*Gamma(a+n*(b-1)/(a+n-1))*Gamma(2-a+(b-1)*(a-1)/(a+n-1))/((n-b+a)*pi*(a-1)*Gamma(u+1))",
        "", "u = (b*n+a-1)/(a+n-1)", "", tag(kGs19r, "T5")});
    out.push_back({"B.59", "2, a, n+1", "b, 2+u",
        "-(-1)^n*sin(pi*(b-a+u))*(a*n+b-2-n)*(b-1)/((1+a-b)*(n+2-b)*sin(pi*(n+2-b)*(1+a-b)/(b-2)))",
        "", "u = n*(a-1)/(b-2)", "", tag(kGs19r, "T8"),
        EntryStatus::Verified, 1e-7, "overall sign reversed"});
    out.push_back({"B.60", "a, b, c", "2+a, a-n+1",
        "((n*c*b-n*c-a*n*c-a*n*b+n+2*a*n-b*n-n^2*a+n*a^2)*Gamma(2+a)*Gamma(a+2-b-c-n)*Gamma(a-n+1)*Gamma(n)"
        "*sum(k, 0, n, Gamma(a+k+1-n-c)*Gamma(-b-n+1+a+k)/(Gamma(k+1)*Gamma(a+1+k-n))))"
        "/(n*Gamma(-b-n+1+a)*Gamma(2+a-b)*Gamma(2+a-c)*Gamma(1+a-c-n))"
        " + Gamma(a+2-b-c-n)*(-1-a)*Gamma(a-n+1)/(Gamma(-b-n+1+a)*n*Gamma(1+a-c-n))",
        "", "", "", tag(kGs516, "T2")});
    out.push_back({"B.61", "a, b, 2", "c, a-n+1",
        "-((a-n-1)*(a-n)*(a*b-b-1-2*n+a-a*c+n*c+c)*Gamma(c)*Gamma(n)"
        "*sum(k, 0, n, Gamma(a-1-n+k)*Gamma(c-1-n-b+k)/(Gamma(k+1)*Gamma(c-n-1+k))))"
        "/((a-n-b)*Gamma(a)*Gamma(c-b))"
        " - (a-n-1)*(a-n)*(c-1)/(n*(a-n-b))",
        "", "", "", tag(kGs516, "T3")});
    out.push_back({"B.62", "a, b, c", "a-n+1, c+b+n",
        "-sin(pi*c)*sum(L, 0, n-1, Gamma(1-c-n+L)*Gamma(b+L)/(Gamma(L+1)*Gamma(b-a+1+L)))"
        "*Gamma(c+b+n)*Gamma(b-a+n)*Gamma(a-n+1)*Gamma(n)/(pi*Gamma(b)*Gamma(a)*Gamma(b+n))",
        "", "", "", "Prudnikov 7.4.4.23 : T6",
        EntryStatus::Verified, 1e-7, "overall sign reversed"});
    out.push_back({"B.63", "a, b, c", "b+1, -n+b+1",
        "-(-1)^n*b*sum(L, 0, n-1, Gamma(-b+a+L)*Gamma(-c-n+b+1+L)/(Gamma(L+1)*Gamma(-c-n+2+L)))"
        "*Gamma(b-c-n+2-a)*Gamma(-n+b+1)*Gamma(n)*Gamma(-c+1)"
        "/(Gamma(a-b)*Gamma(b-a+1)*Gamma(b-c-n+1)*Gamma(1+b-c))",
        "", "", "", "Prudnikov 7.4.4.23 : T1"});
    out.push_back({"B.64", "a, b, 1", "c, -n+b+1",
        "(c-1)*sum(L, 0, n-1, Gamma(a+L+1-c)*Gamma(-n+b+L)/(Gamma(L+1)*Gamma(b-c-n+2+L)))"
        "*(-b+n)*Gamma(n)*Gamma(1+b-c)/(Gamma(n+1-c+a)*Gamma(b))",
        "", "", "", "Prudnikov 7.4.4.23 : T2"});
    out.push_back({"B.65", "a, 2, b", "2+u, a-n+1",
        "(n-a)*(n-a*b+b)/((b-a+n)*n)",
        "", "u = (b-1)*(a-1)/(a-n-1)", "", tag(kGs19, "T2")});
    out.push_back({"B.66", "a, b, 1+a-u", "2+a, a-n+1",
        "(1+a)*sin(pi*u)*Gamma(2-b+n*(b-1)/(1+a-b))*Gamma(-n*(b-1)/(1+a-b))"
        "/(sin(pi*a)*Gamma(-b+a+2-n)*Gamma(n-a))",
        "", "u = a*n/(1+a-b)", "", tag(kGs19, "T4")});
}

}  // namespace hyp321::seeds
