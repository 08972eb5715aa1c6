#include "moykr/homfly.hpp"

#include <map>

namespace moykr {

namespace {

void require_level(int n)
{
    if (n < 2) throw UsageError("level n must be at least 2");
}

LaurentPoly az_poly(int alpha_exp, int zeta_exp, const Rational& c = 1)
{
    return LaurentPoly::monomial(az_vars(), {alpha_exp, zeta_exp}, c);
}

// (-zeta)^e
LaurentPoly minus_zeta_pow(int e)
{
    return az_poly(0, e, e % 2 == 0 ? 1 : -1);
}

}  // namespace

LocalizedScalar az_monomial(int alpha_exp, int zeta_exp, const Rational& c)
{
    return LocalizedScalar(az_poly(alpha_exp, zeta_exp, c));
}

LocalizedScalar homfly_z()
{
    return LocalizedScalar(az_poly(0, -1) - az_poly(0, 1));
}

LocalizedScalar homfly_bracket(int k, int n)
{
    if (k < 0) throw UsageError("bracket index must be nonnegative");
    require_level(n);
    return LocalizedScalar(az_poly(-1, 0) * minus_zeta_pow(k - n) - az_poly(1, 0) * minus_zeta_pow(n - k), 1);
}

HomflyLadder homfly_mul(const HomflyLadder& x, const HomflyLadder& y)
{
    LocalizedScalar ss = LocalizedScalar(-(az_poly(0, 1) + az_poly(0, -1)));
    return {x.a * y.a, x.a * y.b + x.b * y.a + ss * x.b * y.b, x.n};
}

HomflyLadder homfly_scale(const LocalizedScalar& c, const HomflyLadder& x)
{
    return {c * x.a, c * x.b, x.n};
}

HomflyLadder homfly_sub(const HomflyLadder& x, const HomflyLadder& y)
{
    return {x.a - y.a, x.b - y.b, x.n};
}

HomflyLadder homfly_identity(int n)
{
    return {LocalizedScalar::constant(1), LocalizedScalar(), n};
}

HomflyLadder homfly_braiding(int sign, int n)
{
    require_level(n);
    if (sign > 0) return {az_monomial(-1, -1), az_monomial(-1, 0), n};
    return {az_monomial(1, 1), az_monomial(1, 0), n};
}

HomflyLadder homfly_sigma_power(int k, int n)
{
    if (k < 1) throw UsageError("homfly_sigma_power requires k >= 1");
    HomflyLadder s = homfly_braiding(+1, n);
    HomflyLadder r = s;
    for (int i = 1; i < k; ++i) r = homfly_mul(r, s);
    return r;
}

LocalizedScalar homfly_close(const HomflyLadder& x)
{
    LocalizedScalar bn = homfly_bracket(x.n, x.n);
    return x.a * bn * bn + x.b * bn * homfly_bracket(x.n - 1, x.n);
}

LocalizedScalar homfly_torus2(int k, int n)
{
    return homfly_close(homfly_sigma_power(k, n));
}

LocalizedScalar homfly_torus2_closed_form(int k, int n)
{
    if (k < 1) throw UsageError("homfly_torus2 requires k >= 1");
    require_level(n);
    LaurentPoly one = az_poly(0, 0);
    LaurentPoly neg_zeta2_k = az_poly(0, 2 * k, k % 2 == 0 ? 1 : -1);
    LaurentPoly frac = exact_div(az_poly(0, 1) * (one - neg_zeta2_k), one + az_poly(0, 2));
    HomflyLadder x{az_monomial(-k, -k), LocalizedScalar(az_poly(-k, -k) * frac), n};
    return homfly_close(x);
}

LocalizedScalar homfly(const BraidWord& b, int n)
{
    b.validate();
    require_level(n);
    if (b.width > 2) throw UsageError("unsupported width " + std::to_string(b.width) + " (at most 2)");
    if (b.width == 1) return homfly_bracket(n, n);
    HomflyLadder r = homfly_identity(n);
    for (int l : b.letters) r = homfly_mul(r, homfly_braiding(l > 0 ? +1 : -1, n));
    return homfly_close(r);
}

LocalizedScalar zeta_flip(const LocalizedScalar& s)
{
    std::map<std::string, LaurentPoly> a{{"zeta", az_poly(0, -1, -1)}};
    return LocalizedScalar(substitute(s.numerator(), a, az_vars()), s.denom_power());
}

LaurentPoly specialize_numerator(const LocalizedScalar& s, int n)
{
    std::map<std::string, LaurentPoly> a{{"alpha", q_pow(-n) * Rational(-1)}, {"zeta", q_pow(1) * Rational(-1)}};
    return substitute(s.numerator(), a, q_vars());
}

namespace {

LaurentPoly specialized_denominator(int m)
{
    // zeta - zeta^-1 -> -q + q^-1
    return (q_pow(-1) - q_pow(1)).pow(static_cast<unsigned>(m));
}

}  // namespace

LaurentPoly specialize_to_jones(const LocalizedScalar& s, int n)
{
    return exact_div(specialize_numerator(s, n), specialized_denominator(s.denom_power()));
}

bool specializes_to(const LocalizedScalar& s, int n, const LaurentPoly& jones)
{
    return specialize_numerator(s, n) == jones * specialized_denominator(s.denom_power());
}

}  // namespace moykr
