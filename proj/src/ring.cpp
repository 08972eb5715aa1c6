#include "moykr/ring.hpp"

#include <algorithm>
#include <sstream>

namespace moykr {

std::string to_string(const Rational& r)
{
    return r.str();
}

LaurentPoly::LaurentPoly(VarList vars) : vars_(std::move(vars)) {}

LaurentPoly LaurentPoly::constant(const VarList& vars, const Rational& c)
{
    return monomial(vars, Exponents(vars.size(), 0), c);
}

LaurentPoly LaurentPoly::monomial(const VarList& vars, Exponents exps, const Rational& c)
{
    if (exps.size() != vars.size()) throw UsageError("exponent vector length does not match variables");
    LaurentPoly p(vars);
    p.add_term(exps, c);
    return p;
}

LaurentPoly LaurentPoly::variable(const VarList& vars, const std::string& name, int power)
{
    LaurentPoly p(vars);
    Exponents e(vars.size(), 0);
    e[p.var_index(name)] = power;
    p.add_term(e, 1);
    return p;
}

Rational LaurentPoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t LaurentPoly::var_index(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw UsageError("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

int LaurentPoly::min_degree(std::size_t var) const
{
    if (terms_.empty()) throw UsageError("degree of the zero polynomial");
    int m = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
    return m;
}

int LaurentPoly::max_degree(std::size_t var) const
{
    if (terms_.empty()) throw UsageError("degree of the zero polynomial");
    int m = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
    return m;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

// A polynomial with no variables is a bare scalar and adapts to the other side.
void LaurentPoly::check_compatible(const LaurentPoly& o) const
{
    if (vars_ != o.vars_ && !vars_.empty() && !o.vars_.empty())
        throw UsageError("variable-set mismatch");
}

LaurentPoly LaurentPoly::lifted(const VarList& target) const
{
    if (target == vars_) return *this;
    std::vector<std::size_t> where;
    for (const auto& v : vars_) {
        auto it = std::find(target.begin(), target.end(), v);
        if (it == target.end()) throw UsageError("cannot lift: variable '" + v + "' missing from target");
        where.push_back(static_cast<std::size_t>(it - target.begin()));
    }
    LaurentPoly r(target);
    for (const auto& [e, c] : terms_) {
        Exponents ne(target.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    check_compatible(o);
    if (vars_.empty() && !o.vars_.empty()) *this = lifted(o.vars_);
    const LaurentPoly& rhs = (o.vars_ == vars_) ? o : o.lifted(vars_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    return *this += -o;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    a.check_compatible(b);
    const VarList& vars = a.vars_.empty() ? b.vars_ : a.vars_;
    const LaurentPoly& x = a.vars_ == vars ? a : a.lifted(vars);
    const LaurentPoly& y = b.vars_ == vars ? b : b.lifted(vars);
    LaurentPoly r(vars);
    Exponents e(vars.size());
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    if (a.terms_.empty() && b.terms_.empty()) return true;
    a.check_compatible(b);
    return a.vars_.empty() ? a.lifted(b.vars_).terms_ == b.terms_ : a.terms_ == b.lifted(a.vars_).terms_;
}

LaurentPoly LaurentPoly::pow(unsigned e) const
{
    LaurentPoly result = constant(vars_, 1);
    LaurentPoly base = *this;
    while (e) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(const Exponents& s) const
{
    if (s.size() != vars_.size()) throw UsageError("shift vector length does not match variables");
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += s[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

LaurentPoly LaurentPoly::mirrored(std::size_t var) const
{
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        ne[var] = -ne[var];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mono.empty()) {
            out << moykr::to_string(mag);
        } else if (mag == 1) {
            out << mono;
        } else {
            out << moykr::to_string(mag) << "*" << mono;
        }
    }
    return out.str();
}

LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& assignment,
                       const VarList& target_vars)
{
    struct Image {
        Rational coeff;
        Exponents exps;
    };
    std::vector<Image> images;
    for (const auto& v : p.vars()) {
        auto it = assignment.find(v);
        if (it == assignment.end()) {
            LaurentPoly self = LaurentPoly::variable(target_vars, v);
            images.push_back({1, self.terms().begin()->first});
            continue;
        }
        LaurentPoly val = it->second.lifted(target_vars);
        if (val.size() != 1)
            throw UsageError("substitution value for '" + v + "' is not an invertible monomial");
        images.push_back({val.terms().begin()->second, val.terms().begin()->first});
    }
    LaurentPoly r(target_vars);
    for (const auto& [e, c] : p.terms()) {
        Rational coeff = c;
        Exponents ne(target_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            const Image& img = images[i];
            int k = e[i];
            Rational f = 1;
            for (int j = 0; j < std::abs(k); ++j) f *= img.coeff;
            coeff *= k >= 0 ? f : Rational(1) / f;
            for (std::size_t j = 0; j < ne.size(); ++j) ne[j] += k * img.exps[j];
        }
        r += LaurentPoly::monomial(target_vars, ne, coeff);
    }
    return r;
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& d)
{
    if (d.is_zero()) throw ArithmeticError("division by zero polynomial");
    const VarList& vars = d.vars().empty() ? p.vars() : d.vars();
    LaurentPoly num = p.lifted(vars.empty() ? p.vars() : vars);
    LaurentPoly den = d.lifted(num.vars());
    LaurentPoly quot(num.vars());
    if (num.is_zero()) return quot;

    // Per-variable degree bounds of any exact quotient keep the loop finite.
    std::size_t nv = num.vars().size();
    Exponents lo(nv), hi(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        lo[i] = num.min_degree(i) - den.min_degree(i);
        hi[i] = num.max_degree(i) - den.max_degree(i);
        if (lo[i] > hi[i]) return std::nullopt;
    }
    const auto& [lead_e, lead_c] = *den.terms().rbegin();
    LaurentPoly rem = num;
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().rbegin();
        Exponents m(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            m[i] = re[i] - lead_e[i];
            if (m[i] < lo[i] || m[i] > hi[i]) return std::nullopt;
        }
        Rational c = rc / lead_c;
        LaurentPoly step = LaurentPoly::monomial(num.vars(), m, c);
        quot += step;
        rem -= step * den;
    }
    return quot;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d)
{
    auto r = try_exact_div(p, d);
    if (!r) throw ArithmeticError("not divisible: (" + p.to_string() + ") / (" + d.to_string() + ")");
    return *r;
}

LaurentPoly q_pow(int e)
{
    return LaurentPoly::monomial(q_vars(), {e});
}

LaurentPoly q_integer(int m)
{
    if (m < 0) throw UsageError("q_integer of a negative number");
    LaurentPoly r(q_vars());
    for (int j = 0; j < m; ++j) r += q_pow(1 - m + 2 * j);
    return r;
}

LaurentPoly q_factorial(int m)
{
    if (m < 0) throw UsageError("q_factorial of a negative number");
    LaurentPoly r = LaurentPoly::constant(q_vars(), 1);
    for (int i = 2; i <= m; ++i) r *= q_integer(i);
    return r;
}

LaurentPoly q_binomial(int j, int k)
{
    if (k < 0 || k > j) throw UsageError("q_binomial requires 0 <= k <= j");
    return exact_div(q_factorial(j), q_factorial(k) * q_factorial(j - k));
}

const LaurentPoly& LocalizedScalar::denominator_base()
{
    static const LaurentPoly base =
        LaurentPoly::variable(az_vars(), "zeta") - LaurentPoly::variable(az_vars(), "zeta", -1);
    return base;
}

LocalizedScalar::LocalizedScalar() : num_(az_vars()) {}

LocalizedScalar::LocalizedScalar(LaurentPoly numerator, int denom_power)
    : num_(numerator.lifted(az_vars())), pow_(denom_power)
{
    if (denom_power < 0) throw UsageError("negative denominator power");
    canonicalize();
}

LocalizedScalar LocalizedScalar::constant(const Rational& c)
{
    return LocalizedScalar(LaurentPoly::constant(az_vars(), c));
}

void LocalizedScalar::canonicalize()
{
    if (num_.is_zero()) {
        pow_ = 0;
        return;
    }
    while (pow_ > 0) {
        auto q = try_exact_div(num_, denominator_base());
        if (!q) break;
        num_ = std::move(*q);
        --pow_;
    }
}

LocalizedScalar& LocalizedScalar::operator+=(const LocalizedScalar& o)
{
    int m = std::max(pow_, o.pow_);
    const LaurentPoly& base = denominator_base();
    num_ = num_ * base.pow(static_cast<unsigned>(m - pow_)) + o.num_ * base.pow(static_cast<unsigned>(m - o.pow_));
    pow_ = m;
    canonicalize();
    return *this;
}

LocalizedScalar& LocalizedScalar::operator-=(const LocalizedScalar& o)
{
    return *this += -o;
}

LocalizedScalar& LocalizedScalar::operator*=(const LocalizedScalar& o)
{
    num_ = num_ * o.num_;
    pow_ += o.pow_;
    canonicalize();
    return *this;
}

LocalizedScalar LocalizedScalar::operator-() const
{
    LocalizedScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

bool operator==(const LocalizedScalar& a, const LocalizedScalar& b)
{
    const LaurentPoly& base = LocalizedScalar::denominator_base();
    return a.num_ * base.pow(static_cast<unsigned>(b.pow_)) == b.num_ * base.pow(static_cast<unsigned>(a.pow_));
}

std::string LocalizedScalar::to_string() const
{
    if (pow_ == 0) return num_.to_string();
    std::string s = "(" + num_.to_string() + ")/(" + denominator_base().to_string() + ")";
    if (pow_ > 1) s += "^" + std::to_string(pow_);
    return s;
}

}  // namespace moykr
