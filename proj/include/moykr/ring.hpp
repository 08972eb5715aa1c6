// Exact Laurent polynomial arithmetic over the rationals, q-combinatorics,
// and fractions with powers of (zeta - zeta^-1) in the denominator.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace moykr {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using Exponents = std::vector<int>;
using VarList = std::vector<std::string>;

// Caller supplied inconsistent operands (mismatched variables, bad input).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Arithmetic that should never fail on a correct computation did.
class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_string(const Rational& r);

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(VarList vars);

    static LaurentPoly constant(const VarList& vars, const Rational& c);
    static LaurentPoly monomial(const VarList& vars, Exponents exps, const Rational& c = 1);
    // name^power as a polynomial over vars.
    static LaurentPoly variable(const VarList& vars, const std::string& name, int power = 1);

    const VarList& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Exponents& e) const;

    std::size_t var_index(const std::string& name) const;
    int min_degree(std::size_t var) const;
    int max_degree(std::size_t var) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly pow(unsigned e) const;

    // Multiplies by the monomial with the given exponent vector.
    LaurentPoly shifted(const Exponents& e) const;

    // Replaces each exponent of var by its negative.
    LaurentPoly mirrored(std::size_t var) const;

    // Same polynomial viewed over a larger (or reordered) variable list.
    LaurentPoly lifted(const VarList& target) const;

    // Ascending terms, `c*q^e*t^f`, unit coefficients and zero exponents omitted.
    std::string to_string() const;

private:
    void check_compatible(const LaurentPoly& o) const;
    void add_term(const Exponents& e, const Rational& c);

    VarList vars_;
    std::map<Exponents, Rational> terms_;
};

// Each assigned value must be a single nonzero term (invertible in the
// Laurent ring). Unassigned variables must occur in target_vars.
LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& assignment,
                       const VarList& target_vars);

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& d);
// Throws ArithmeticError("not divisible") on a nonzero remainder.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

inline const VarList& q_vars()
{
    static const VarList v{"q"};
    return v;
}
inline const VarList& qt_vars()
{
    static const VarList v{"q", "t"};
    return v;
}
inline const VarList& az_vars()
{
    static const VarList v{"alpha", "zeta"};
    return v;
}

LaurentPoly q_pow(int e);
LaurentPoly q_integer(int m);
LaurentPoly q_factorial(int m);
LaurentPoly q_binomial(int j, int k);

// numerator / (zeta - zeta^-1)^denom_power, numerator over {alpha, zeta}.
class LocalizedScalar {
public:
    LocalizedScalar();
    LocalizedScalar(LaurentPoly numerator, int denom_power = 0);

    static LocalizedScalar constant(const Rational& c);
    static const LaurentPoly& denominator_base();

    const LaurentPoly& numerator() const { return num_; }
    int denom_power() const { return pow_; }
    bool is_zero() const { return num_.is_zero(); }

    LocalizedScalar& operator+=(const LocalizedScalar& o);
    LocalizedScalar& operator-=(const LocalizedScalar& o);
    LocalizedScalar& operator*=(const LocalizedScalar& o);
    friend LocalizedScalar operator+(LocalizedScalar a, const LocalizedScalar& b) { return a += b; }
    friend LocalizedScalar operator-(LocalizedScalar a, const LocalizedScalar& b) { return a -= b; }
    friend LocalizedScalar operator*(LocalizedScalar a, const LocalizedScalar& b) { return a *= b; }
    LocalizedScalar operator-() const;

    // Cross-multiplied comparison.
    friend bool operator==(const LocalizedScalar& a, const LocalizedScalar& b);
    friend bool operator!=(const LocalizedScalar& a, const LocalizedScalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    void canonicalize();

    LaurentPoly num_;
    int pow_ = 0;
};

}  // namespace moykr
