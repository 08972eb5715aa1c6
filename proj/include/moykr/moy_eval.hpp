// Width-2 MOY evaluation: ladder elements a*id2 + b*S and level-n Jones
// polynomials of 2-strand braid closures.
#pragma once

#include "moykr/diagram.hpp"
#include "moykr/ring.hpp"

namespace moykr {

// A closed diagram fell outside the ladder-plus-circles fragment.
class StuckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LadderElement {
    LaurentPoly a;  // coefficient of id2
    LaurentPoly b;  // coefficient of S
    friend bool operator==(const LadderElement&, const LadderElement&) = default;
};

LadderElement ladder(const LaurentPoly& a, const LaurentPoly& b);
LadderElement ladder_identity();
LadderElement ladder_s();
// S∘S = (q + q^-1) S.
LadderElement ladder_mul(const LadderElement& x, const LadderElement& y);
LadderElement ladder_add(const LadderElement& x, const LadderElement& y);
LadderElement ladder_scale(const LaurentPoly& c, const LadderElement& x);

LadderElement braiding(int sign, int n);
LadderElement sigma_power(int k, int n);
LadderElement sigma_power_closed_form(int k, int n);

// a [n]^2 + b [n][n-1].
LaurentPoly eval_closed_ladder(const LadderElement& x, int n);
// Closing one of the two strands: a [n] + b [n-1], the coefficient of id1.
LaurentPoly partial_close_ladder(const LadderElement& x, int n);

LaurentPoly jones_torus2(int k, int n);
LaurentPoly jones(const BraidWord& b, int n);

// Closed words made of disjoint circles and 2-strand ladder closures;
// anything else raises StuckError.
LaurentPoly evaluate(const DiagramWord& w, int n);

}  // namespace moykr
