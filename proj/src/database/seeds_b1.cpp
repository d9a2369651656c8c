#include "seeds.hpp"

namespace hyp321::seeds {

void appendix_b_part1(std::vector<EntrySpec>& out) {
    out.push_back({"B.1", "a, m, b", "c, m-n",
        "Gamma(a+n-m+1)*sum(L, 0, m-1, (-1)^L*Gamma(-b+c-a-n+L)*Gamma(1-b+L)/(Gamma(m-L)*Gamma(-b-n+1+L)"
        "*Gamma(-b+c-m+1+L)*Gamma(L+1)))*Gamma(c)*Gamma(m-n)*(-1)^n/(Gamma(c-a)*Gamma(a))",
        "n<m", "", "", "Prudnikov 7.4.4.14 : T2"});
    out.push_back({"B.2", "a, b, -n", "c, m-n",
        "Gamma(a+n-m+1)*sum(L, 0, m-1, (-1)^L*Gamma(c-a+L)*Gamma(1+b-m+n+L)/(Gamma(m-L)*Gamma(b-m+1+L)"
        "*Gamma(c+n-m+1+L)*Gamma(L+1)))*Gamma(c)*Gamma(m-n)*(-1)^n/(Gamma(c-a)*Gamma(a))",
        "n<m", "", "", "Prudnikov 7.4.4.14 : T5"});
    out.push_back({"B.3", "a, -n, b", "c, a-c+b-n+m",
        "Gamma(c-b+n-m+1)*Gamma(-a+c-b-m+1)*sum(L, 0, m-1, (-1)^L*Gamma(b+L)*Gamma(1-a+c-m+n+L)/(Gamma(m-L)"
        "*Gamma(-a+c-m+1+L)*Gamma(c+n-m+1+L)*Gamma(L+1)))*Gamma(m)*Gamma(c)/(Gamma(n+1-a+c-b-m)*Gamma(b)*Gamma(c-b))",
        "", "", "", "Prudnikov 7.4.4.14 : T7",
        EntryStatus::Verified, 1e-7, "RHS fraction regrouped as a single quotient"});
    out.push_back({"B.4", "a, 1, b", "n+1, c",
        "Gamma(a-n)*Gamma(b-n)*Gamma(n+1)*Gamma(c)*Gamma(-b+c-a+n)/(Gamma(b)*Gamma(c-b)*Gamma(a)*Gamma(c-a))"
        " + Gamma(-b+1)*sum(L, 0, n-1, Gamma(-L+a-1)*(-1)^L/(Gamma(c-1-L)*Gamma(n-L)*Gamma(-b+2+L)))"
        "*Gamma(n+1)*Gamma(c)/Gamma(a)",
        "", "", "", "Ref. 11, Lemma 2.2 : T1"});
    out.push_back({"B.5", "a, b, n", "n+1, c",
        "Gamma(b-n)*sum(L, 0, n-1, Gamma(-L+a-1)*(-1)^L/(Gamma(-b+c-L)*Gamma(n-L)*Gamma(b+1+L-n)))"
        "*Gamma(n+1)*Gamma(c)*Gamma(-b+c-a+1)/(Gamma(a)*Gamma(c-a))"
        " + Gamma(a-n)*Gamma(-b+1)*Gamma(n+1)*Gamma(c)/(Gamma(n+1-b)*Gamma(c-n)*Gamma(a))",
        "", "", "", "Ref. 11, Lemma 2.2 : T2"});
    out.push_back({"B.6", "1, a, b", "c, -c+b+a+n+1",
        "(-c+b+a+n)*Gamma(-c+a+1)*sum(L, 0, n-1, Gamma(-L+c-b-1)*(-1)^L/(Gamma(c-1-L)*Gamma(n-L)*Gamma(-c+a+2+L)))"
        "*Gamma(n)*Gamma(c)/Gamma(c-b)"
        " + Gamma(-c+b+a+n+1)*Gamma(-b+c-n)*Gamma(c-a-n)*Gamma(n)*Gamma(c)/(Gamma(c-a)*Gamma(a)*Gamma(c-b)*Gamma(b))",
        "", "", "", "Ref. 11, Lemma 2.2 : T6"});
    out.push_back({"B.7", "n, a, b", "c, -c+b+a+n+1",
        "Gamma(-c+b+a+n+1)*Gamma(c-a-n)*sum(L, 0, n-1, Gamma(-L+c-b-1)*(-1)^L/(Gamma(a-L)*Gamma(n-L)"
        "*Gamma(c+1-a-n+L)))*Gamma(c)/(Gamma(c-b)*Gamma(b))"
        " + Gamma(-c+b+a+n+1)*Gamma(-b+c-n)*(-1)^n*Gamma(c-a-n)*Gamma(c)/(Gamma(c-a)*Gamma(c-n)*Gamma(c-b)"
        "*Gamma(-c+b+1+a))",
        "", "", "", "Ref. 11, Lemma 2.2 : T9"});
    out.push_back({"B.8", "a, b, a/2-b-3/2-n", "a/2+b+1/2, a-b-1-n",
        "1/2*Gamma(a/2+b+1/2)*Gamma(b+n+2)*Gamma(a-b-1-n)*pi/(cos(pi*(2*b-a)/2)*Gamma(-a/2+b+1/2)"
        "*Gamma(a/2+1/2)^2*Gamma(2+n+2*b)*Gamma(-2*b-n+a-1))"
        " + 1/2*sum(L, 0, n+1, Gamma(-a/2+b+1/2+L)*Gamma(-b-n-1+L)/(Gamma(a/2-b-1/2-n+L)*Gamma(b+1+L)))"
        "*Gamma(a/2+b+1/2)*Gamma(a-b-1-n)/(Gamma(-b-n-1)*Gamma(a)*Gamma(-a/2+b+1/2))",
        "", "", "", "Prudnikov 7.4.4.31 : T5"});
    out.push_back({"B.9", "a, b, n+a/2-b-3/2", "a/2+b+1/2, n+a-b-1",
        "-1/2*Gamma(a/2-b+1/2)*Gamma(b-n+2)*sum(L, 1, n-2, Gamma(3/2-a/2+b-n+L)*Gamma(-b+L)/(Gamma(1/2+a/2-b+L)"
        "*Gamma(2+b-n+L)))*Gamma(a/2+b+1/2)*Gamma(n+a-b-1)*sin(pi*b)*(-1)^n*cos(pi*(a/2-b))/(Gamma(a)*pi^2)"
        " + 1/2*Gamma(a/2-b+1/2)*Gamma(a/2+b+1/2)*Gamma(b-n+2)*Gamma(n+a-b-1)/(Gamma(a/2+1/2)^2*Gamma(n+a-2*b-1)"
        "*Gamma(-n+2*b+2))",
        "n>=2", "", "", "Prudnikov 7.4.4.32 : T5",
        EntryStatus::Verified, 1e-7, "reversed sum range at n = 1"});
    out.push_back({"B.10", "4*a+n, a, a+1/2", "1/2+3*a+n/2, 1+3*a+n/2",
        "2^(2*a)*Gamma(1+3*a+n/2)*Gamma(1/2+3*a+n/2)*sum(k, 0, n-1, (-1)^k*Gamma(1-2*a-n+k)/Gamma(1+2*a+k))"
        "/(Gamma(1-2*a-n)*sqrt(pi)*Gamma(1+4*a+n))"
        " + 2^(-1+6*a+n)*Gamma(2*a+n)*Gamma(1+3*a+n/2)*Gamma(1/2+3*a+n/2)/(Gamma(4*a+n)*sqrt(pi)*Gamma(1+4*a+n))",
        "", "", "", "Prudnikov 7.4.4.25 variation 2 : T1"});
    out.push_back({"B.11", "1-n+4*a, a+1/2, a", "1-n/2+3*a, -n/2+3*a+3/2",
        "(-n/2+1/2+2*a)*Gamma(1+2*a-n)*Gamma(2-n+6*a)/Gamma(2-n+4*a)^2"
        " - Gamma(1+2*a-n)*sum(k, 1, n-1, (-1)^k*Gamma(-2*a+k)/Gamma(1-n+2*a+k))*Gamma(1-n/2+3*a)"
        "*Gamma(-n/2+3*a+3/2)/(Gamma(-2*a)*Gamma(2-n+4*a)*Gamma(a+1/2)*Gamma(1+a))",
        "", "", "", "Prudnikov 7.4.4.25 variation 3 : T1"});
    out.push_back({"B.12", "a, b, a/2+1/2", "1+a, a/2-n/2-1/2+b/2",
        "1/2*Gamma(a/2-n/2-1/2+b/2)*a*sum(L, 0, n+1, Gamma(-a/2-n/2-1/2+b/2+L)*Gamma(-b/2-n/2+L)/(Gamma(a/2-n/2+1/2-b/2+L)"
        "*Gamma(b/2-n/2+L)))/Gamma(-a/2-n/2-1/2+b/2)"
        " - 1/2*Gamma(a/2-n/2-1/2+b/2)*Gamma(a/2+n/2+3/2-b/2)*sqrt(pi)*2^a*Gamma(1+a/2)/(Gamma(b)*Gamma(1+a-b)"
        "*Gamma(a/2+1/2)*sin(pi*(b+n)/2))",
        "", "", "", "Prudnikov 7.4.4.31 : T1",
        EntryStatus::Verified, 1e-7, "factor 1/2 moved from denominator to numerator"});
}

}  // namespace hyp321::seeds
