// Dense integer polynomials in q and t, kept deliberately separate from
// LaurentPoly so closed forms can be cross-checked against an independent
// implementation.
#pragma once

#include "moykr/ring.hpp"

#include <map>
#include <utility>

namespace oracle {

struct Dense {
    std::map<std::pair<int, int>, long long> c;  // (q exponent, t exponent) -> coefficient

    Dense& operator+=(const Dense& o)
    {
        for (const auto& [e, v] : o.c) c[e] += v;
        return *this;
    }
    friend Dense operator+(Dense a, const Dense& b) { return a += b; }
    friend Dense operator-(Dense a, const Dense& b)
    {
        for (const auto& [e, v] : b.c) a.c[e] -= v;
        return a;
    }
    friend Dense operator*(const Dense& a, const Dense& b)
    {
        Dense r;
        for (const auto& [ea, va] : a.c)
            for (const auto& [eb, vb] : b.c) r.c[{ea.first + eb.first, ea.second + eb.second}] += va * vb;
        return r;
    }
};

inline Dense mono(int qe, int te = 0, long long v = 1)
{
    Dense d;
    d.c[{qe, te}] = v;
    return d;
}

// q^(1-m) + q^(3-m) + ... + q^(m-1)
inline Dense qint(int m)
{
    Dense d;
    for (int i = 0; i < m; ++i) d.c[{1 - m + 2 * i, 0}] += 1;
    return d;
}

inline moykr::LaurentPoly to_poly(const Dense& d, const moykr::VarList& vars)
{
    moykr::LaurentPoly r(vars);
    for (const auto& [e, v] : d.c) {
        if (v == 0) continue;
        moykr::Exponents ex{e.first};
        if (vars.size() == 2) ex.push_back(e.second);
        r += moykr::LaurentPoly::monomial(vars, ex, v);
    }
    return r;
}

inline moykr::LaurentPoly qt(const Dense& d) { return to_poly(d, moykr::qt_vars()); }
inline moykr::LaurentPoly q(const Dense& d) { return to_poly(d, moykr::q_vars()); }

// Closed-form Poincaré polynomials of the 2-strand torus link with kt crossings.
inline Dense poincare_odd(int kt, int n)
{
    int k = (kt - 1) / 2;
    Dense sum;
    for (int j = 1; j <= k; ++j) sum += mono(4 * j, 2 * j);
    return mono((n - 1) * kt) * (mono(1 - n) * qint(n) + (mono(-n) + mono(n, 1)) * sum * qint(n - 1));
}

inline Dense poincare_even(int kt, int n)
{
    int k = kt / 2;
    Dense sum;
    for (int j = 1; j <= k - 1; ++j) sum += mono(4 * j, 2 * j);
    return mono((n - 1) * kt) * (mono(1 - n) * qint(n) + (mono(-n) + mono(n, 1)) * sum * qint(n - 1) +
                                 mono(4 * k - 1, 2 * k) * qint(n) * qint(n - 1));
}

inline Dense poincare(int kt, int n) { return kt % 2 ? poincare_odd(kt, n) : poincare_even(kt, n); }

// Euler characteristic of a dense (q, t) polynomial.
inline Dense at_t_minus_one(const Dense& d)
{
    Dense r;
    for (const auto& [e, v] : d.c) r.c[{e.first, 0}] += (e.second % 2 ? -v : v);
    return r;
}

}  // namespace oracle
