#include "moykr/adm.hpp"

#include "moykr/closure.hpp"
#include "moykr/kr.hpp"

namespace moykr {

const VarList& bracket_vars()
{
    static const VarList v{"q", "t", "B[n]", "B[n-1]"};
    return v;
}

namespace {

BracketPoly mono(int qe, int te, int bn = 0, int bm = 0, const Rational& c = 1)
{
    return LaurentPoly::monomial(bracket_vars(), {qe, te, bn, bm}, c);
}

}  // namespace

AdmLadder adm_mul(const AdmLadder& x, const AdmLadder& y)
{
    BracketPoly ss = mono(1, 0) - mono(-1, -1);
    return {x.a * y.a, x.a * y.b + x.b * y.a + ss * x.b * y.b};
}

AdmLadder adm_braiding(int sign, int n)
{
    if (n < 2) throw UsageError("level n must be at least 2");
    if (sign > 0) return {mono(n - 1, 0), mono(n, 1)};
    return {mono(1 - n, 0), mono(-n, -1)};
}

AdmLadder adm_sigma_power(int k, int n)
{
    if (k < 1) throw UsageError("adm_sigma_power requires k >= 1");
    AdmLadder s = adm_braiding(+1, n);
    AdmLadder r = s;
    for (int i = 1; i < k; ++i) r = adm_mul(r, s);
    return r;
}

BracketPoly adm_close(const AdmLadder& x)
{
    return x.a * mono(0, 0, 2, 0) + x.b * mono(0, 0, 1, 1);
}

BracketPoly adm_torus2_representative(int k, int n)
{
    AdmLadder x = adm_sigma_power(k, n);
    BracketPoly rewritten_square = mono(0, 0, 1, 0) * (mono(1 - n, 0) - mono(1, 1, 0, 1));
    return x.a * rewritten_square + x.b * mono(0, 0, 1, 1);
}

LaurentPoly adm_to_q(const BracketPoly& p, int n)
{
    LaurentPoly bn = q_integer(n).lifted(qt_vars());
    LaurentPoly bm = q_integer(n - 1).lifted(qt_vars());
    LaurentPoly r(qt_vars());
    BracketPoly lp = p.lifted(bracket_vars());
    for (const auto& [e, c] : lp.terms()) {
        if (e[2] < 0 || e[3] < 0) throw UsageError("negative power of a bracket generator");
        r += LaurentPoly::monomial(qt_vars(), {e[0], e[1]}, c) * bn.pow(static_cast<unsigned>(e[2])) *
             bm.pow(static_cast<unsigned>(e[3]));
    }
    return r;
}

std::vector<AdmComparison> adm_check(int k_max, int n_max)
{
    std::vector<AdmComparison> out;
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 1; k <= k_max; ++k) {
            AdmComparison c;
            c.k = k;
            c.n = n;
            c.predicted = adm_to_q(adm_torus2_representative(k, n), n);
            c.kr = kr_poincare_engine(k, n);
            c.match = c.predicted == c.kr;
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace moykr
