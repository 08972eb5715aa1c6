// HOMFLY-PT of 2-strand braid closures in the variables alpha, zeta,
// with z = zeta^-1 - zeta.
#pragma once

#include "moykr/diagram.hpp"
#include "moykr/ring.hpp"

namespace moykr {

struct HomflyLadder {
    LocalizedScalar a;  // coefficient of id2
    LocalizedScalar b;  // coefficient of S
    int n = 2;
    friend bool operator==(const HomflyLadder& x, const HomflyLadder& y) { return x.a == y.a && x.b == y.b; }
};

// [k]_{alpha,zeta} = (alpha^-1 (-zeta)^(k-n) - alpha (-zeta)^(n-k)) / (zeta - zeta^-1)
LocalizedScalar homfly_bracket(int k, int n);
LocalizedScalar az_monomial(int alpha_exp, int zeta_exp, const Rational& c = 1);
// z = zeta^-1 - zeta
LocalizedScalar homfly_z();

// S∘S = -(zeta + zeta^-1) S.
HomflyLadder homfly_mul(const HomflyLadder& x, const HomflyLadder& y);
HomflyLadder homfly_scale(const LocalizedScalar& c, const HomflyLadder& x);
HomflyLadder homfly_sub(const HomflyLadder& x, const HomflyLadder& y);
HomflyLadder homfly_identity(int n);

HomflyLadder homfly_braiding(int sign, int n);
HomflyLadder homfly_sigma_power(int k, int n);
// a [n]^2 + b [n][n-1]
LocalizedScalar homfly_close(const HomflyLadder& x);

LocalizedScalar homfly_torus2(int k, int n);
LocalizedScalar homfly_torus2_closed_form(int k, int n);
LocalizedScalar homfly(const BraidWord& b, int n);

// zeta -> -zeta^-1
LocalizedScalar zeta_flip(const LocalizedScalar& s);

// Images under alpha -> -q^-n, zeta -> -q.
LaurentPoly specialize_numerator(const LocalizedScalar& s, int n);
LaurentPoly specialize_to_jones(const LocalizedScalar& s, int n);
// numerator image == jones * image((zeta - zeta^-1)^m), no division.
bool specializes_to(const LocalizedScalar& s, int n, const LaurentPoly& jones);

}  // namespace moykr
