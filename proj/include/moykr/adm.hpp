// Bracket-ring evaluation of 2-strand closures with formal generators
// B[n], B[n-1], compared against KR Poincaré polynomials.
#pragma once

#include "moykr/ring.hpp"

#include <vector>

namespace moykr {

// Polynomials over {q, t, B[n], B[n-1]}; the B's are free commuting generators.
const VarList& bracket_vars();
using BracketPoly = LaurentPoly;

struct AdmLadder {
    BracketPoly a;  // coefficient of id2
    BracketPoly b;  // coefficient of S
    friend bool operator==(const AdmLadder&, const AdmLadder&) = default;
};

// S∘S = (q - t^-1 q^-1) S.
AdmLadder adm_mul(const AdmLadder& x, const AdmLadder& y);
AdmLadder adm_braiding(int sign, int n);
AdmLadder adm_sigma_power(int k, int n);

// a B[n]^2 + b B[n]B[n-1]
BracketPoly adm_close(const AdmLadder& x);
// adm_close with B[n]^2 rewritten once via B[n] = q^(1-n) - q t B[n-1].
BracketPoly adm_torus2_representative(int k, int n);
// B[n] -> [n]_q, B[n-1] -> [n-1]_q; result over {q, t}.
LaurentPoly adm_to_q(const BracketPoly& p, int n);

struct AdmComparison {
    int k = 0;
    int n = 0;
    LaurentPoly predicted;  // representative under B_k -> [k]_q
    LaurentPoly kr;         // engine Poincaré polynomial
    bool match = false;
};

std::vector<AdmComparison> adm_check(int k_max, int n_max);

}  // namespace moykr
