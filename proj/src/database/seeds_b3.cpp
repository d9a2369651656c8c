#include "seeds.hpp"

namespace hyp321::seeds {

void appendix_b_part3(std::vector<EntrySpec>& out) {
    out.push_back({"B.29", "2*a-1, a, a-1/2", "-1/2+3*a/2+n/2, 2*a",
        "-1/2*Gamma(1+a+n)*Gamma(a-n)*sum(k, 1, 2*n-1, (-1)^k*Gamma(-a-n+1+k)/Gamma(a-n+k))"
        "*Gamma(-1/2+3*a/2+n/2)*Gamma(1-a/2+n/2)/(Gamma(1-a-n)*Gamma(a+n)*Gamma(a/2+n/2+1)*Gamma(a/2+n/2+1/2))"
        " + 2^(3*a+n-3)*Gamma(-1/2+3*a/2+n/2)*Gamma(a-n)*Gamma(1-a/2+n/2)/(sqrt(pi)*Gamma(2*a-1))",
        "", "", "", "Prudnikov 7.4.4.25 variation 3 : T2",
        EntryStatus::Verified, 1e-7, "sign of the finite-sum term reversed"});
    out.push_back({"B.30", "a, -n/2+2*a, 1/2+n/2-a", "-1/2-n/2+3*a, 1+a",
        "-1/2*Gamma(2*a+1)*Gamma(2*a-n)*sum(k, 1, n-1, (-1)^k*Gamma(1-2*a+k)/Gamma(2*a-n+k))"
        "*Gamma(-1/2-n/2+3*a)*Gamma(-n/2+2*a)/(Gamma(2*a)*Gamma(a+1/2)*Gamma(1-2*a)*Gamma(4*a-n))"
        " - 2^(6*a-3-n)*(n-4*a+1)*Gamma(1+a)*Gamma(2*a-n)*Gamma(-1/2-n/2+3*a)*Gamma(-n/2+2*a)"
        "/(sqrt(pi)*Gamma(4*a-n)^2)",
        "", "", "", "Prudnikov 7.4.4.25 variation 3 : T3",
        EntryStatus::Verified, 1e-7, "sign of the finite-sum term reversed"});
    out.push_back({"B.31", "a, -n/2+1/2+2*a, -a+n/2", "1-n/2+3*a, 1+a",
        "-1/2*Gamma(2*a+2)*Gamma(1+2*a-n)*sum(k, 1, n-1, (-1)^k*Gamma(-2*a+k)/Gamma(1-n+2*a+k))"
        "*Gamma(1-n/2+3*a)*Gamma(3/2-n/2+2*a)/(Gamma(-2*a)*Gamma(2-n+4*a)*Gamma(2*a+1)*Gamma(a+3/2))"
        " - 2^(-n+6*a)*(n-1-4*a)*Gamma(1+2*a-n)*Gamma(1-n/2+3*a)*Gamma(1+a)*Gamma(3/2-n/2+2*a)"
        "/(sqrt(pi)*Gamma(2-n+4*a)^2)",
        "", "", "", "Prudnikov 7.4.4.25 variation 3 : T4",
        EntryStatus::Verified, 1e-7, "finite-sum term reads -1/2 times the printed fraction"});
    out.push_back({"B.32", "2*a-1, a+1/2, a", "3*a/2+n/4, 2*a",
        "-1/2*Gamma(a-n/2)*sum(k, 1, n-1, (-1)^k*Gamma(-a-n/2+1+k)/Gamma(a-n/2+k))*Gamma(3*a/2+n/4)"
        "*Gamma(-a/2+n/4+1/2)*Gamma(1+a+n/2)/(Gamma(1-a-n/2)*Gamma(1+a/2+n/4)*Gamma(1/2+a/2+n/4)*Gamma(a+n/2))"
        " + 2^(n/2+3*a-3)*Gamma(3*a/2+n/4)*Gamma(a-n/2)*Gamma(-a/2+n/4+1/2)/(sqrt(pi)*Gamma(2*a-1))",
        "", "", "", "Prudnikov 7.4.4.25 variation 3 : T5"});
    out.push_back({"B.33", "a, -n/2+1/2+2*a, n/2+1-a", "-n/2+3*a, 1+a",
        "-1/2*Gamma(2*a+1)*Gamma(2*a-n)*sum(k, 1, n-1, (-1)^k*Gamma(1-2*a+k)/Gamma(2*a-n+k))"
        "*Gamma(-1/2-n/2+2*a)*Gamma(-n/2+3*a)/(Gamma(1-2*a)*Gamma(4*a-n)*Gamma(2*a)*Gamma(a+1/2))"
        " + 2^(-2-n+6*a)*Gamma(-n/2+1/2+2*a)*Gamma(1+a)*Gamma(2*a-n)*Gamma(-n/2+3*a)/(sqrt(pi)*Gamma(4*a-n)^2)",
        "", "", "", "Prudnikov 7.4.4.25 variation 3 : T6",
        EntryStatus::Verified, 1e-7, "finite-sum term reads -1/2 times the printed fraction"});
    out.push_back({"B.34", "a, -n/2+2*a+1, 1/2+n/2-a", "-n/2+3*a+3/2, 1+a",
        "-1/2*Gamma(2*a+2)*Gamma(1+2*a-n)*sum(k, 1, n-1, (-1)^k*Gamma(-2*a+k)/Gamma(1-n+2*a+k))"
        "*Gamma(-n/2+2*a+1)*Gamma(-n/2+3*a+3/2)/(Gamma(2*a+1)*Gamma(a+3/2)*Gamma(-2*a)*Gamma(2-n+4*a))"
        " - 2^(-n+6*a)*(n-1-4*a)*Gamma(1+a)*Gamma(1+2*a-n)*Gamma(-n/2+2*a+1)*Gamma(-n/2+3*a+3/2)"
        "/(sqrt(pi)*Gamma(2-n+4*a)^2)",
        "", "", "", "Prudnikov 7.4.4.25 variation 3 : T7",
        EntryStatus::Verified, 1e-7, "printed '=' between the terms read as '-'; sign of the finite-sum term reversed"});
    out.push_back({"B.35", "a, a+1/2, 1", "2*a, 1+a/2+n/4",
        "(-1/2*sum(k, 1, n-1, (-1)^k*Gamma(-a-n/2+1+k)/Gamma(a-n/2+k))*Gamma(a/2+n/4-1/2)"
        "/(Gamma(1-a-n/2)*Gamma(a+n/2)*Gamma(1/2+a/2+n/4)) + 4^(a-1)/((-1+n/2+a)*Gamma(2*a-1)))"
        "*Gamma(1+a+n/2)*Gamma(a-n/2)",
        "", "", "", "Prudnikov 7.4.4.25 variation 3 : T8",
        EntryStatus::Verified, 1e-7, "sign of the finite-sum term reversed"});
    out.push_back({"B.36", "a-1/2, a, 1", "2*a, 1/2+a/2+n/4",
        "(-sum(k, 1, n-1, (-1)^k*Gamma(-a-n/2+1+k)/Gamma(a-n/2+k))*sin(pi*(a+n/2))/pi"
        " + 4^(a-1)/Gamma(2*a-1))*Gamma(a+n/2)*Gamma(a-n/2)",
        "", "", "", "Prudnikov 7.4.4.25 variation 3 : T9",
        EntryStatus::Verified, 1e-7, "sign of the finite-sum term reversed"});
    out.push_back({"B.37", "a, 2, b", "c, 4",
        "-6*(2*c-5+b-a*b+a)*Gamma(c)*Gamma(-b+2+c-a)/((a-3)*(b-1)*(a-2)*(a-1)*(b-3)*(b-2)*Gamma(c-a)*Gamma(c-b))"
        " + 6*(c-2)*(c-1)*(a*b-3*b-3*a+3+2*c)/((a-3)*(b-1)*(a-2)*(a-1)*(b-3)*(b-2))",
        "", "", "", "Prudnikov 7.4.4.17 : T2"});
    out.push_back({"B.38", "a, a-n-1, b", "c, a-n+1",
        "-((a-n)*(a-n-1)*(-b*n-a*c+n*c+a^2-a*n+c-a+n)*Gamma(-b+2+c-a)*Gamma(c)*Gamma(n)"
        "*sum(k, 0, n, Gamma(a-1-n+k)*Gamma(c-a+k)/(Gamma(k+1)*Gamma(1-n+c-b+k))))"
        "/((b-1)*Gamma(n+c+1-a)*Gamma(c-a)*Gamma(a))"
        " - (a-n)*(a-n-1)*Gamma(-b+2+c-a)*Gamma(c)/(n*(b-1)*Gamma(c+1-b)*Gamma(c-a))",
        "", "", "", "Gessel and Stanton, SIAM J. Math. Anal., 13,295(1982) Eq.(5.16) : T6"});
    out.push_back({"B.39", "a, 2, b", "c, 4+a-c+b",
        "(c-a-b-2)*(c-a-b-3)*(c-2)*(c-1)*(3-4*c-c*a+c^2+3*a+a*b+3*b-b*c)"
        "/((c-a-2)*(c-3-b)*(c-2-b)*(c-1-b)*(c-a-3)*(c-a-1))"
        " + (a+5-c*a+c^2-4*c+a*b-b*c+b)*Gamma(4+a-c+b)*Gamma(c)"
        "/((c-a-2)*(c-3-b)*(c-2-b)*(c-1-b)*(c-a-3)*(c-a-1)*Gamma(b)*Gamma(a))",
        "", "", "", "Prudnikov 7.4.4.17 : T3"});
    out.push_back({"B.40", "a, b, u-n", "1+b+u, a-n+1",
        "(-1)^n*sin(pi*b)*Gamma(1+b+u)*Gamma(-b)/(sin(pi*a)*Gamma(1+a)*Gamma(1-n+u)*Gamma(n-a))",
        "", "u = a*n/(b+n)", "", "Gessel & Stanton, SIAM J. Math. Anal. 13,2,295(1982) Eq(1.9) : T7"});
    out.push_back({"B.41", "a, b, n-u", "1+b-u, 1+a+n",
        "(-1)^n*sin(pi*b)*Gamma(1+b-u)*Gamma(-b)/(sin(pi*a)*Gamma(1+a)*Gamma(-a-n)*Gamma(n+1-u))",
        "", "u = a*n/(b-n)", "",
        "Gessel & Stanton, SIAM J. Math. Anal. 13,2,295(1982) Eq(1.9) with n -> -1-n : T7"});
    out.push_back({"B.42", "a, b, c", "n+1+c+b, a-n+1",
        "Gamma(n+1+c+b)*Gamma(a-n+1)*(-n^2*c+n^2*a-n^3-n^2*b-n*c*b)*Gamma(n)"
        "*sum(k, 0, n, Gamma(b+k)*Gamma(c+k)/(Gamma(k+1)*Gamma(a+1+k-n)))"
        "/((a-c-b-n)*Gamma(c)*Gamma(b)*Gamma(c+n+1)*Gamma(b+n+1)*n)"
        " + Gamma(n+1+c+b)*Gamma(a-n+1)/(n*(a-c-b-n)*Gamma(1+a)*Gamma(c)*Gamma(b))",
        "", "", "", "Gessel and Stanton, SIAM J. Math. Anal., 13,295(1982) Eq. (5.16) : T5",
        EntryStatus::Verified, 1e-7, "finite sum read as a numerator factor; agrees with the T5 image of EQ.14"});
    out.push_back({"B.43", "a, b, c", "2*c-1, a/2+b/2+1/2",
        "sqrt(pi)*Gamma(c-1/2)*Gamma(a/2+b/2+1/2)*Gamma(c-a/2-b/2-1/2)*(Gamma(a/2)*Gamma(b/2)*Gamma(c-a/2)"
        "*Gamma(c-b/2) + Gamma(b/2+1/2)*Gamma(c-1/2-a/2)*Gamma(c-1/2-b/2)*Gamma(a/2+1/2))"
        "/(Gamma(b/2+1/2)*Gamma(c-1/2-a/2)*Gamma(c-1/2-b/2)*Gamma(a/2+1/2)*Gamma(c-a/2)*Gamma(c-b/2)"
        "*Gamma(a/2)*Gamma(b/2))",
        "", "", "", "Prudnikov 7.4.4.20 : T1"});
    out.push_back({"B.44", "a, b, c", "1+2*b, c/2+a/2",
        "((Gamma(a/2)/(Gamma(1+b-c/2)*Gamma(-a/2+b+1/2)*Gamma(c/2))"
        " + Gamma(a/2+1/2)/(Gamma(1/2+b-c/2)*Gamma(-a/2+1+b)*Gamma(c/2+1/2)))"
        "*sqrt(pi)*Gamma(c/2+a/2)*Gamma(1+2*b)*Gamma(-c/2-a/2+1+b))/(2^(-a+1+2*b)*Gamma(b+1)*Gamma(a))",
        "", "", "", "Prudnikov 7.4.4.20 : T2"});
    out.push_back({"B.45", "a, b, 1-b", "c, 2*a-c",
        "(sqrt(pi)*Gamma(a-1)*Gamma(c)*Gamma(b/2+c/2-1/2)/(2^(2*a-b-c)*Gamma(a)*Gamma(-b/2+c/2+1/2)"
        "*Gamma(a-b/2-c/2)*Gamma(a+b/2-c/2-1/2)*Gamma(c+b-1))"
        " + sqrt(pi)*Gamma(b/2+c/2)*Gamma(a-1)*Gamma(c)/(2^(2*a-b-c)*Gamma(a)*Gamma(-b/2+c/2)"
        "*Gamma(-b/2+a-c/2+1/2)*Gamma(a+b/2-c/2)*Gamma(c+b-1)))*Gamma(2*a-c)",
        "", "", "", "Prudnikov 7.4.4.20 : T7"});
    out.push_back({"B.46", "a, b, -b", "c, 2*a-c+1",
        "sqrt(pi)*Gamma(2*a-c+1)*Gamma(c)*Gamma(b/2+c/2)/(2^(2*a-c+1-b)*Gamma(a-c/2+1+b/2)"
        "*Gamma(-b/2+a-c/2+1/2)*Gamma(-b/2+c/2)*Gamma(c+b))"
        " + sqrt(pi)*Gamma(2*a-c+1)*Gamma(c/2+b/2+1/2)*Gamma(c)/(2^(2*a-c+1-b)*Gamma(a-c/2+1/2+b/2)"
        "*Gamma(a-c/2+1-b/2)*Gamma(-b/2+c/2+1/2)*Gamma(c+b))",
        "", "", "", "Prudnikov 7.4.4.20 : T8"});
}

}  // namespace hyp321::seeds
