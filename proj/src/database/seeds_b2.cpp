#include "seeds.hpp"

namespace hyp321::seeds {

void appendix_b_part2(std::vector<EntrySpec>& out) {
    out.push_back({"B.13", "a, b, 1", "2*b, a/2-n/2",
        "Gamma(a/2-n/2)*(b-1/2)*Gamma(b-n/2-a/2-1)*sum(L, 0, n+1, Gamma(-b-n/2+a/2+L)*Gamma(-a/2-n/2+L)"
        "/(Gamma(b-n/2-a/2+L)*Gamma(a/2-n/2+L)))/(Gamma(a/2-b-n/2)*Gamma(-a/2-n/2))"
        " - sqrt(pi)*2^(2*b-2)*Gamma(a/2-n/2)*Gamma(b+n/2-a/2+1)*Gamma(b+1/2)*Gamma(b-n/2-a/2-1)"
        "/(Gamma(2*b-a)*Gamma(a)*sin(pi*(a+n)/2)*Gamma(-a/2-n/2)*Gamma(b))",
        "", "", "", "Prudnikov 7.4.4.31 : T3"});
    out.push_back({"B.14", "a, a/2-n/2-1, b", "a-b-1-n, a/2-n/2",
        "((-1/2*sum(L, 0, n+1, Gamma(b+L)*Gamma(-a/2-n/2+L)/(Gamma(-b-n+L)*Gamma(a/2-n/2+L)))"
        "*sin(pi*(a+n)/2)*Gamma(a/2-n/2)*Gamma(-n-2*b)/(pi*Gamma(-2*b-n+a-1))"
        " + pi^(3/2)*(-1)^n*Gamma(1-a)/(sin(pi*b)*2^(a-n)*Gamma(a/2-b-n/2)^2*Gamma(1/2+a/2-n/2)*Gamma(n+1-a)))"
        "*Gamma(a/2+n/2+1)*Gamma(a-b-1-n))/Gamma(b)",
        "", "", "", "Prudnikov 7.4.4.31 : T6"});
    out.push_back({"B.15", "a, b, -b-n-1", "-b-n-2+2*a, b+1",
        "1/2*sum(L, 0, n+1, Gamma(-b-n-1+L)*Gamma(b-a+1+L)/(Gamma(b+1+L)*Gamma(a-b-1-n+L)))"
        "*Gamma(a)*Gamma(b+1)*Gamma(-b-n-2+2*a)/(Gamma(2*a-1)*Gamma(-b-n-1)*Gamma(b-a+1))"
        " + 2^(2*n-1)*sqrt(pi)*Gamma(-1-n-2*b)*Gamma(3+n-2*a+2*b)*Gamma(b+n+2)*Gamma(a-b)*Gamma(a-1/2)"
        "*Gamma(-b-n-2+2*a)/(Gamma(3+2*n-2*a+2*b)*Gamma(3/2+b)*Gamma(-1/2+a-b-n)*Gamma(2*a-1)*Gamma(a-b-1-n)"
        "*Gamma(-1-2*b))",
        "", "", "", "Prudnikov 7.4.4.31 : T7"});
    out.push_back({"B.16", "a, b, n-b-1", "n-b-2+2*a, b+1",
        "Gamma(b-n+2)*Gamma(a-b)/(Gamma(2+b-a-n)*Gamma(n+a-b-1)*Gamma(-b)*Gamma(2*a-1))"
        "*(-1/2)*sum(L, 1, n-2, Gamma(-b+L)*Gamma(-a+b+2+L-n)/(Gamma(2+b-n+L)*Gamma(-b+a+L)))*Gamma(a)*Gamma(n-b-2+2*a)"
        " - 1/2*pi*Gamma(a-b)*Gamma(n-b-2+2*a)*Gamma(b-n+2)/(sin(pi*b)*Gamma(-b)*Gamma(n+2*a-2*b-2)*Gamma(a)"
        "*Gamma(-n+2*b+2))",
        "n>=2", "", "", "Prudnikov 7.4.4.32 : T7",
        EntryStatus::Verified, 1e-7, "finite sum carries factor -1/2; reversed sum range at n = 1"});
    out.push_back({"B.17", "a, b, 2-b", "c, 2*a+2-c",
        "((1/2*Gamma(a-c/2+1-b/2)*Gamma(b/2-1+c/2)/(Gamma(a+b/2-c/2)*Gamma(-b/2+c/2))"
        " - 1/2*Gamma(3/2+a-b/2-c/2)*Gamma(b/2+c/2-1/2)/(Gamma(a-c/2+1/2+b/2)*Gamma(-b/2+c/2+1/2)))"
        "*Gamma(2*a+2-c)*Gamma(c))/((1-b)*(1+a-c)*Gamma(c+b-2)*Gamma(2+2*a-b-c))",
        "", "", "", "Prudnikov 7.4.4.22 : T7"});
    out.push_back({"B.18", "a, b, a/2+1/2", "1+a, n/2+a/2-1/2+b/2",
        "(-1/2*cos(pi*(b-a-n)/2)*Gamma(3/2+a/2-n/2-b/2)*a*Gamma(n/2+a/2-1/2+b/2)*sin(pi*(b+n)/2)"
        "*sum(L, 1, n-2, Gamma(-a/2-n/2+1/2+b/2+L)*Gamma(-b/2-n/2+1+L)/(Gamma(3/2+a/2-n/2-b/2+L)"
        "*Gamma(1+b/2-n/2+L)))/pi"
        " + 2^(a-1)*sqrt(pi)*Gamma(1+a/2)*Gamma(n/2+a/2-1/2+b/2)*Gamma(3/2+a/2-n/2-b/2)"
        "/(Gamma(1+a-b)*Gamma(a/2+1/2)*Gamma(b)))/sin(pi*(n-b)/2)",
        "n>=2", "", "", "Prudnikov 7.4.4.32 : T1",
        EntryStatus::Verified, 1e-7, "reversed sum range at n = 1"});
    out.push_back({"B.19", "a, b, 1", "2*b, a/2+n/2",
        "Gamma(1+b-n/2-a/2)*Gamma(a/2-n/2+1)*sum(L, 1, n-2, Gamma(1-b-n/2+a/2+L)*Gamma(-a/2-n/2+1+L)"
        "/(Gamma(1+b-n/2-a/2+L)*Gamma(1+a/2-n/2+L)))*(b-1/2)/(Gamma(-b-n/2+a/2+2)*Gamma(-n/2-a/2+1))"
        " + sqrt(pi)*Gamma(n-a+2*b)*Gamma(a+n)*Gamma(b+1/2)*Gamma(1+b-n/2-a/2)*Gamma(a/2-n/2+1)"
        "/(Gamma(a)*Gamma(b)*2^(2*n)*Gamma(b+n/2+1/2-a/2)*Gamma(a/2+n/2+1/2)*(n/2+b-a/2-1)*Gamma(2*b-a))",
        "", "", "", "Prudnikov 7.4.4.32 : T3"});
    out.push_back({"B.20", "a, n/2+a/2-1, b", "n+a-b-1, a/2+n/2",
        "2^(-2-2*b)*Gamma(a+n)*Gamma(n/2+a/2-b-1/2)*Gamma(1-b)*Gamma(a/2-n/2+1)*Gamma(n+a-b-1)"
        "/(Gamma(a)*Gamma(n/2+a/2-b)*Gamma(a/2+n/2+1/2)*Gamma(n+a-2*b-1))"
        " - 1/2*Gamma(1-b)*Gamma(a/2-n/2+1)*sum(L, 1, n-2, Gamma(b+1+L-n)*Gamma(-a/2-n/2+1+L)"
        "/(Gamma(1-b+L)*Gamma(1+a/2-n/2+L)))*Gamma(n-2*b)*Gamma(n+a-b-1)"
        "/(Gamma(1-n+b)*Gamma(1-n/2-a/2)*Gamma(n+a-2*b-1)*Gamma(n-b))",
        "", "", "", "Prudnikov 7.4.4.32 : T6"});
    out.push_back({"B.21", "2*a, a, a+1/2", "1/2+3*a/2-n/4, 2*a+1",
        "sum(k, 0, n-1, (-1)^k*Gamma(-a-n/2+1+k)/Gamma(a-n/2+1+k))*Gamma(1/2+3*a/2-n/4)*2^(2*a)"
        "/Gamma(-a/2-n/4+1/2)"
        " + 2^(3*a-n/2-1)*Gamma(a+n/2)*Gamma(1/2+3*a/2-n/4)*Gamma(-n/4-a/2+1)/(Gamma(2*a)*sqrt(pi))",
        "", "", "", "Prudnikov 7.4.4.25 variation 2 : T2"});
    out.push_back({"B.22", "a, 2*a+n/2, 1/2-a-n/2", "1/2+3*a+n/2, 1+a",
        "1/2*sum(k, 0, n-1, (-1)^k*Gamma(1-2*a-n+k)/Gamma(1+2*a+k))*Gamma(1/2+3*a+n/2)*Gamma(2*a+2)"
        "*Gamma(1+n/2+2*a)/(Gamma(1-2*a-n)*Gamma(1+4*a+n)*Gamma(a+3/2))"
        " + 4^(n/2-1+3*a)*Gamma(2*a+n)*Gamma(1/2+3*a+n/2)*Gamma(1+n/2+2*a)*Gamma(1+a)"
        "/(sqrt(pi)*(2*a+n/2)*Gamma(4*a+n)^2)",
        "", "", "", "Prudnikov 7.4.4.25 variation 2 : T3"});
    out.push_back({"B.23", "a, -1/2+2*a+n/2, 1-a-n/2", "n/2-1+3*a, 1+a",
        "(sum(k, 0, n-1, (-1)^k*Gamma(2-2*a-n+k)/Gamma(2*a+k))*2^(2*a-2)/(Gamma(2-2*a-n)*Gamma(-1+4*a+n))"
        " + 4^(n/2+3*a-3)*Gamma(-1+2*a+n)/((-1+2*a+n/2)*Gamma(-2+4*a+n)^2))*2/sqrt(pi)"
        "*Gamma(-1/2+2*a+n/2)*Gamma(n/2-1+3*a)*Gamma(1+a)",
        "", "", "", "Prudnikov 7.4.4.25 variation 2 : T4"});
    out.push_back({"B.24", "a, a/2+1/2, 1+a/2", "1-n/4+3*a/4, 1+a",
        "1/2*sum(k, 0, n-1, (-1)^k*Gamma(-n/2-a/2+1+k)/Gamma(a/2-n/2+1+k))*Gamma(1-n/4+3*a/4)"
        "*Gamma(a/2-n/2+2)*Gamma(-n/4-a/4+1/2)/(Gamma(-n/2-a/2+1)*Gamma(a/4-n/4+1)*Gamma(3/2+a/4-n/4))"
        " + 2^(3*a/2-n/2-1)*Gamma(a/2+n/2)*Gamma(1-n/4+3*a/4)*Gamma(-n/4-a/4+1/2)/(Gamma(a)*sqrt(pi))",
        "", "", "", "Prudnikov 7.4.4.25 variation 2 : T5",
        EntryStatus::Verified, 1e-7, "upper parameter a restored from the T5 image of variation 2"});
    out.push_back({"B.25", "a, 1/2+2*a+n/2, 1-a-n/2", "1+3*a+n/2, 1+a",
        "1/2*sum(k, 0, n-1, (-1)^k*Gamma(1-2*a-n+k)/Gamma(1+2*a+k))*Gamma(1+3*a+n/2)*Gamma(1/2+2*a+n/2)"
        "*Gamma(2*a+2)/(Gamma(1-2*a-n)*Gamma(1+4*a+n)*Gamma(a+3/2))"
        " + 2^(-2+n+6*a)*Gamma(2*a+n)*Gamma(1+3*a+n/2)*Gamma(1/2+2*a+n/2)*Gamma(1+a)"
        "/(sqrt(pi)*(2*a+n/2)*Gamma(4*a+n)^2)",
        "", "", "", "Prudnikov 7.4.4.25 variation 2 : T6",
        EntryStatus::Verified, 1e-7, "upper parameter a restored from the T6 image of variation 2"});
    out.push_back({"B.26", "a, 2*a+n/2, -a+3/2-n/2", "-1/2+3*a+n/2, 1+a",
        "1/2*sum(k, 0, n-1, (-1)^k*Gamma(2-2*a-n+k)/Gamma(2*a+k))*Gamma(-1/2+3*a+n/2)*Gamma(-1+2*a+n/2)"
        "*Gamma(2*a+1)/(Gamma(2-2*a-n)*Gamma(-1+4*a+n)*Gamma(a+1/2))"
        " + 2^(-5+n+6*a)*Gamma(1+a)*Gamma(-1+2*a+n/2)*Gamma(-1+2*a+n)*Gamma(-1/2+3*a+n/2)"
        "/((-1+2*a+n/2)*sqrt(pi)*Gamma(-2+4*a+n)^2)",
        "", "", "", "Prudnikov 7.4.4.25 variation 2 : T7"});
    out.push_back({"B.27", "a, a+1/2, 1", "2*a+1, a/2-n/4+1",
        "2^(2*a-2)*Gamma(1/2+a/2-n/4)*Gamma(2+a-n/2)*Gamma(a+n/2)/(Gamma(2*a)*Gamma(a/2-n/4+3/2))"
        " + 1/2*sum(k, 0, n-1, (-1)^k*Gamma(-a-n/2+1+k)/Gamma(a-n/2+1+k))*Gamma(1/2+a/2-n/4)*Gamma(2+a-n/2)"
        "/(Gamma(1-a-n/2)*Gamma(a/2-n/4+3/2))",
        "", "", "", "Prudnikov 7.4.4.25 variation 2 : T8"});
    out.push_back({"B.28", "a-1/2, a, 1", "2*a-1, a/2-n/4+1",
        "(2^(-1+a-n/2)*sum(k, 0, n-1, (-1)^k*Gamma(-n/2-a+2+k)/Gamma(a-n/2+k))*Gamma(a/2-n/4+1)"
        "/(Gamma(2-a-n/2)*sqrt(pi))"
        " + 2^(3*a-4-n/2)*Gamma(-1+n/2+a)*Gamma(a/2-n/4+1)/(sqrt(pi)*Gamma(2*a-2)))*Gamma(a/2-n/4-1/2)",
        "", "", "", "Prudnikov 7.4.4.25 variation 2 : T9"});
}

}  // namespace hyp321::seeds
