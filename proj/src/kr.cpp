#include "moykr/kr.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace moykr {

std::string to_string(const ShiftedAtom& a)
{
    return std::string(a.atom == Atom::Id2 ? "Id2" : "S") + "{" + std::to_string(a.shift) + "}";
}

int qdeg(BasisMor m)
{
    switch (m) {
    case BasisMor::One: return 0;
    case BasisMor::Chi0:
    case BasisMor::Chi1: return 1;
    case BasisMor::Alpha:
    case BasisMor::Gamma: return 2;
    }
    return 0;
}

std::string to_string(BasisMor m)
{
    switch (m) {
    case BasisMor::One: return "1";
    case BasisMor::Chi0: return "chi0";
    case BasisMor::Chi1: return "chi1";
    case BasisMor::Alpha: return "alpha";
    case BasisMor::Gamma: return "gamma";
    }
    return "?";
}

std::optional<Atom> source_atom(BasisMor m)
{
    switch (m) {
    case BasisMor::One: return std::nullopt;
    case BasisMor::Chi0: return Atom::Id2;
    default: return Atom::S;
    }
}

std::optional<Atom> target_atom(BasisMor m)
{
    switch (m) {
    case BasisMor::One: return std::nullopt;
    case BasisMor::Chi1: return Atom::Id2;
    default: return Atom::S;
    }
}

std::optional<BasisMor> compose_basis(BasisMor after, BasisMor before)
{
    using B = BasisMor;
    if (after == B::One) return before;
    if (before == B::One) return after;
    if (source_atom(after) != target_atom(before))
        throw UsageError("composing " + to_string(after) + " after " + to_string(before) + ": atoms do not match");
    if (after == B::Chi0 && before == B::Chi1) return B::Alpha;
    if ((after == B::Gamma && (before == B::Chi0 || before == B::Gamma)) || (after == B::Chi1 && before == B::Gamma))
        throw UndefinedComposite("undefined composite " + to_string(after) + " after " + to_string(before));
    // chi1 chi0, alpha chi0, chi1 alpha, gamma alpha, alpha gamma, alpha alpha
    return std::nullopt;
}

Mor::Mor(BasisMor m, const Rational& c)
{
    if (c != 0) terms_.emplace(m, c);
}

std::optional<Rational> Mor::unit_coefficient() const
{
    if (terms_.size() == 1 && terms_.begin()->first == BasisMor::One) return terms_.begin()->second;
    return std::nullopt;
}

Mor& Mor::operator+=(const Mor& o)
{
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Mor& Mor::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

std::string Mor::to_string() const
{
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        Rational mag = c < 0 ? Rational(-c) : c;
        if (mag != 1) s += moykr::to_string(mag) + "*";
        s += moykr::to_string(m);
    }
    return s;
}

Mor compose(const Mor& after, const Mor& before)
{
    Mor r;
    for (const auto& [a, ca] : after.terms())
        for (const auto& [b, cb] : before.terms())
            if (auto m = compose_basis(a, b)) r += Mor(*m, ca * cb);
    return r;
}

namespace {

const std::vector<ShiftedAtom>& empty_object()
{
    static const std::vector<ShiftedAtom> e;
    return e;
}

}  // namespace

const std::vector<ShiftedAtom>& KRComplex::at(int deg) const
{
    auto it = objects.find(deg);
    return it == objects.end() ? empty_object() : it->second;
}

Mor KRComplex::entry(int deg, std::size_t target, std::size_t source) const
{
    auto it = d.find(deg);
    if (it == d.end()) return {};
    return it->second.at(target).at(source);
}

std::size_t KRComplex::total_summands() const
{
    std::size_t s = 0;
    for (const auto& [deg, obj] : objects) s += obj.size();
    return s;
}

void KRComplex::validate() const
{
    for (const auto& [deg, m] : d) {
        const auto& src = at(deg);
        const auto& tgt = at(deg + 1);
        if (m.size() != tgt.size()) throw std::logic_error("differential row count mismatch in degree " + std::to_string(deg));
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (m[r].size() != src.size())
                throw std::logic_error("differential column count mismatch in degree " + std::to_string(deg));
            for (std::size_t c = 0; c < src.size(); ++c) {
                for (const auto& [b, coeff] : m[r][c].terms()) {
                    bool atoms_ok = b == BasisMor::One ? src[c].atom == tgt[r].atom
                                                       : source_atom(b) == src[c].atom && target_atom(b) == tgt[r].atom;
                    if (!atoms_ok)
                        throw std::logic_error(to_string(b) + " cannot map " + to_string(src[c]) + " to " + to_string(tgt[r]));
                    if (qdeg(b) != tgt[r].shift - src[c].shift)
                        throw std::logic_error("inhomogeneous entry " + to_string(b) + ": " + to_string(src[c]) + " -> " +
                                               to_string(tgt[r]));
                }
            }
        }
    }
}

bool KRComplex::d_squared_zero() const
{
    for (const auto& [deg, m1] : d) {
        auto it = d.find(deg + 1);
        if (it == d.end()) continue;
        const auto& m2 = it->second;
        std::size_t mid = at(deg + 1).size();
        std::size_t src = at(deg).size();
        for (std::size_t r = 0; r < m2.size(); ++r) {
            for (std::size_t c = 0; c < src; ++c) {
                Mor sum;
                for (std::size_t k = 0; k < mid; ++k) sum += compose(m2[r][k], m1[k][c]);
                if (!sum.is_zero()) return false;
            }
        }
    }
    return true;
}

void KRComplex::prune()
{
    for (auto it = d.begin(); it != d.end();) {
        bool zero = true;
        for (const auto& row : it->second)
            for (const auto& e : row) zero = zero && e.is_zero();
        it = zero ? d.erase(it) : std::next(it);
    }
    for (auto it = objects.begin(); it != objects.end();) it = it->second.empty() ? objects.erase(it) : std::next(it);
}

std::string KRComplex::render() const
{
    std::ostringstream out;
    if (objects.empty()) return "0\n";
    for (const auto& [deg, obj] : objects) {
        out << "deg " << deg << ": ";
        for (std::size_t i = 0; i < obj.size(); ++i) out << (i ? " ⊕ " : "") << to_string(obj[i]);
        out << "\n";
        auto it = d.find(deg);
        if (it != d.end()) {
            out << "  d" << deg << " = [";
            for (std::size_t r = 0; r < it->second.size(); ++r) {
                out << (r ? "; " : "");
                for (std::size_t c = 0; c < it->second[r].size(); ++c) out << (c ? ", " : "") << it->second[r][c].to_string();
            }
            out << "]\n";
        }
    }
    return out.str();
}

namespace {

std::optional<std::pair<BasisMor, BasisMor>> compose_pair(const PairTerm& after, const PairTerm& before)
{
    auto f = compose_basis(after.first, before.first);
    auto g = compose_basis(after.second, before.second);
    if (!f || !g) return std::nullopt;
    return std::make_pair(*f, *g);
}

void add_pair(PairMor& m, const PairTerm& t, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = m.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

std::string pair_atom_string(const PairAtom& p)
{
    if (p.top.atom == Atom::Id2 && p.bottom.atom == Atom::Id2) return "Id2{" + std::to_string(p.shift()) + "}";
    if (p.is_ss()) return "SS{" + std::to_string(p.shift()) + "}";
    return "S{" + std::to_string(p.shift()) + "}";
}

}  // namespace

bool ComposedComplex::d_squared_zero() const
{
    for (const auto& [deg, m1] : d) {
        auto it = d.find(deg + 1);
        if (it == d.end()) continue;
        const auto& m2 = it->second;
        std::size_t src = objects.at(deg).size();
        std::size_t mid = objects.at(deg + 1).size();
        for (std::size_t r = 0; r < m2.size(); ++r) {
            for (std::size_t c = 0; c < src; ++c) {
                PairMor sum;
                for (std::size_t k = 0; k < mid; ++k)
                    for (const auto& [ta, ca] : m2[r][k])
                        for (const auto& [tb, cb] : m1[k][c])
                            if (auto p = compose_pair(ta, tb)) add_pair(sum, *p, ca * cb);
                if (!sum.empty()) return false;
            }
        }
    }
    return true;
}

std::string ComposedComplex::render() const
{
    std::ostringstream out;
    for (const auto& [deg, obj] : objects) {
        out << "deg " << deg << ": ";
        for (std::size_t i = 0; i < obj.size(); ++i) out << (i ? " ⊕ " : "") << pair_atom_string(obj[i]);
        out << "\n";
        auto it = d.find(deg);
        if (it == d.end()) continue;
        out << "  d" << deg << " = [";
        for (std::size_t r = 0; r < it->second.size(); ++r) {
            out << (r ? "; " : "");
            for (std::size_t c = 0; c < it->second[r].size(); ++c) {
                out << (c ? ", " : "");
                const auto& e = it->second[r][c];
                if (e.empty()) out << "0";
                bool first = true;
                for (const auto& [t, coeff] : e) {
                    out << (first ? (coeff < 0 ? "-" : "") : (coeff < 0 ? " - " : " + "));
                    Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
                    if (mag != 1) out << to_string(mag) << "*";
                    out << to_string(t.first) << "∘" << to_string(t.second);
                    first = false;
                }
            }
        }
        out << "]\n";
    }
    return out.str();
}

KRComplex identity_complex()
{
    KRComplex c;
    c.objects[0] = {{Atom::Id2, 0}};
    return c;
}

KRComplex sigma_complex(int sign, int n)
{
    if (n < 2) throw UsageError("level n must be at least 2");
    KRComplex c;
    if (sign > 0) {
        c.objects[0] = {{Atom::Id2, n - 1}};
        c.objects[1] = {{Atom::S, n}};
        c.d[0] = {{Mor(BasisMor::Chi0)}};
    } else {
        c.objects[-1] = {{Atom::S, -n}};
        c.objects[0] = {{Atom::Id2, 1 - n}};
        c.d[-1] = {{Mor(BasisMor::Chi1)}};
    }
    return c;
}

KRComplex shifted(const KRComplex& c, int m)
{
    KRComplex r = c;
    for (auto& [deg, obj] : r.objects)
        for (auto& a : obj) a.shift += m;
    return r;
}

ComposedComplex compose_unsplit(const KRComplex& top, const KRComplex& bottom)
{
    using Key = std::tuple<int, std::size_t, int, std::size_t>;
    std::map<int, std::vector<Key>> recs;
    for (const auto& [i, mi] : top.objects)
        for (const auto& [j, nj] : bottom.objects)
            for (std::size_t a = 0; a < mi.size(); ++a)
                for (std::size_t b = 0; b < nj.size(); ++b) recs[i + j].push_back({i, a, j, b});
    // Within one total degree, order by top degree, then top summand, then bottom summand.
    for (auto& [t, v] : recs) std::stable_sort(v.begin(), v.end());

    ComposedComplex out;
    std::map<Key, std::size_t> index;
    for (const auto& [t, v] : recs) {
        for (std::size_t s = 0; s < v.size(); ++s) {
            const auto& [i, a, j, b] = v[s];
            out.objects[t].push_back({top.at(i)[a], bottom.at(j)[b]});
            index[v[s]] = s;
        }
    }
    for (const auto& [t, v] : recs) {
        auto nxt = out.objects.find(t + 1);
        if (nxt == out.objects.end()) continue;
        std::vector<std::vector<PairMor>> m(nxt->second.size(), std::vector<PairMor>(v.size()));
        bool any = false;
        for (std::size_t s = 0; s < v.size(); ++s) {
            const auto& [i, a, j, b] = v[s];
            for (std::size_t a2 = 0; a2 < top.at(i + 1).size(); ++a2) {
                Mor f = top.entry(i, a2, a);
                for (const auto& [bm, c] : f.terms()) {
                    add_pair(m[index.at({i + 1, a2, j, b})][s], {bm, BasisMor::One}, c);
                    any = true;
                }
            }
            Rational sign = (i % 2 == 0) ? 1 : -1;
            for (std::size_t b2 = 0; b2 < bottom.at(j + 1).size(); ++b2) {
                Mor g = bottom.entry(j, b2, b);
                for (const auto& [bm, c] : g.terms()) {
                    add_pair(m[index.at({i, a, j + 1, b2})][s], {BasisMor::One, bm}, sign * c);
                    any = true;
                }
            }
        }
        if (any) out.d[t] = std::move(m);
    }
    return out;
}

namespace {

enum class Splitting { Phi, Psi };

using Block = std::vector<std::vector<Mor>>;

Block split_entry(const PairTerm& term, const PairAtom& src, Splitting sc, const PairAtom& tgt, Splitting tc)
{
    using B = BasisMor;
    const auto [f, g] = term;
    auto fail = [&]() -> Block {
        throw UnsplittableEntry("unsplittable entry " + to_string(f) + "∘" + to_string(g) + " from " +
                                pair_atom_string(src) + " to " + pair_atom_string(tgt));
    };
    if (!src.is_ss() && !tgt.is_ss()) {
        if (src.bottom.atom == Atom::Id2 && tgt.bottom.atom == Atom::Id2 && g == B::One) return {{Mor(f)}};
        if (src.top.atom == Atom::Id2 && tgt.top.atom == Atom::Id2 && f == B::One) return {{Mor(g)}};
        return fail();
    }
    if (tgt.is_ss() && !src.is_ss()) {
        if (f == B::Chi0 && g == B::One && src.top.atom == Atom::Id2)
            return {{Mor(B::One)}, {Mor(tc == Splitting::Phi ? B::Alpha : B::Gamma)}};
        if (f == B::One && g == B::Chi0 && src.bottom.atom == Atom::Id2 && tc == Splitting::Phi)
            return {{Mor(B::One)}, {Mor()}};
        return fail();
    }
    if (src.is_ss() && !tgt.is_ss()) {
        if (f == B::One && g == B::Chi1 && tgt.bottom.atom == Atom::Id2 && sc == Splitting::Phi)
            return {{Mor(), Mor(B::One)}};
        return fail();
    }
    bool shift1 = f == B::One && g == B::Alpha && sc == Splitting::Phi && tc == Splitting::Psi;
    bool shift2 = f == B::One && g == B::Gamma && sc == Splitting::Psi && tc == Splitting::Phi;
    if (shift1 || shift2) return {{Mor(), Mor(B::One)}, {Mor(), Mor()}};
    return fail();
}

}  // namespace

KRComplex split_ss(const ComposedComplex& c)
{
    std::map<int, std::vector<Splitting>> choice;
    std::map<int, std::vector<std::size_t>> offset;
    KRComplex out;
    int ss_seen = 0;
    for (const auto& [t, obj] : c.objects) {
        auto& o = out.objects[t];
        for (const auto& p : obj) {
            offset[t].push_back(o.size());
            if (p.is_ss()) {
                choice[t].push_back(ss_seen++ % 2 == 0 ? Splitting::Phi : Splitting::Psi);
                o.push_back({Atom::S, p.shift() - 1});
                o.push_back({Atom::S, p.shift() + 1});
            } else {
                choice[t].push_back(Splitting::Phi);
                Atom a = p.top.atom == Atom::Id2 ? p.bottom.atom : p.top.atom;
                o.push_back({a, p.shift()});
            }
        }
    }
    for (const auto& [t, m] : c.d) {
        const auto& src = c.objects.at(t);
        const auto& tgt = c.objects.at(t + 1);
        MorMatrix dm(out.objects[t + 1].size(), std::vector<Mor>(out.objects[t].size()));
        for (std::size_t r = 0; r < tgt.size(); ++r) {
            for (std::size_t s = 0; s < src.size(); ++s) {
                for (const auto& [term, coeff] : m[r][s]) {
                    Block blk = split_entry(term, src[s], choice[t][s], tgt[r], choice[t + 1][r]);
                    for (std::size_t i = 0; i < blk.size(); ++i)
                        for (std::size_t j = 0; j < blk[i].size(); ++j)
                            dm[offset[t + 1][r] + i][offset[t][s] + j] += blk[i][j] * coeff;
                }
            }
        }
        out.d[t] = std::move(dm);
    }
    out.prune();
    return out;
}

KRComplex compose(const KRComplex& top, const KRComplex& bottom)
{
    return split_ss(compose_unsplit(top, bottom));
}

namespace {

struct Pivot {
    int deg;
    std::size_t row;
    std::size_t col;
};

std::optional<Pivot> find_pivot(const KRComplex& c, PivotOrder order)
{
    auto usable = [&](int deg, std::size_t r, std::size_t s) {
        const Mor& e = c.d.at(deg)[r][s];
        return e.unit_coefficient().has_value() && c.at(deg)[s] == c.at(deg + 1)[r];
    };
    if (order == PivotOrder::LeftmostFirst) {
        for (const auto& [deg, m] : c.d)
            for (std::size_t r = 0; r < m.size(); ++r)
                for (std::size_t s = 0; s < m[r].size(); ++s)
                    if (usable(deg, r, s)) return Pivot{deg, r, s};
    } else {
        for (auto it = c.d.rbegin(); it != c.d.rend(); ++it) {
            const auto& m = it->second;
            for (std::size_t r = m.size(); r-- > 0;)
                for (std::size_t s = m[r].size(); s-- > 0;)
                    if (usable(it->first, r, s)) return Pivot{it->first, r, s};
        }
    }
    return std::nullopt;
}

void eliminate(KRComplex& c, const Pivot& p)
{
    auto& m = c.d.at(p.deg);
    Rational inv = Rational(1) / *m[p.row][p.col].unit_coefficient();
    // d'(z -> w) = d(z -> w) - d(x -> w) p^-1 d(z -> y)
    for (std::size_t w = 0; w < m.size(); ++w) {
        if (w == p.row || m[w][p.col].is_zero()) continue;
        for (std::size_t z = 0; z < m[w].size(); ++z) {
            if (z == p.col || m[p.row][z].is_zero()) continue;
            m[w][z] = m[w][z] - compose(m[w][p.col], m[p.row][z]) * inv;
        }
    }
    m.erase(m.begin() + static_cast<std::ptrdiff_t>(p.row));
    for (auto& row : m) row.erase(row.begin() + static_cast<std::ptrdiff_t>(p.col));
    if (auto prev = c.d.find(p.deg - 1); prev != c.d.end())
        prev->second.erase(prev->second.begin() + static_cast<std::ptrdiff_t>(p.col));
    if (auto nxt = c.d.find(p.deg + 1); nxt != c.d.end())
        for (auto& row : nxt->second) row.erase(row.begin() + static_cast<std::ptrdiff_t>(p.row));
    auto& src = c.objects.at(p.deg);
    auto& tgt = c.objects.at(p.deg + 1);
    src.erase(src.begin() + static_cast<std::ptrdiff_t>(p.col));
    tgt.erase(tgt.begin() + static_cast<std::ptrdiff_t>(p.row));
}

}  // namespace

KRComplex gaussian_eliminate(const KRComplex& c, PivotOrder order)
{
    KRComplex r = c;
    r.prune();
    while (auto p = find_pivot(r, order)) {
        eliminate(r, *p);
        r.prune();
    }
    return r;
}

bool is_chain_shaped(const KRComplex& c)
{
    for (const auto& [deg, obj] : c.objects)
        if (obj.size() > 1) return false;
    for (const auto& [deg, m] : c.d)
        for (const auto& row : m)
            for (const auto& e : row)
                if (e.terms().size() > 1) return false;
    return true;
}

KRComplex normalize_signs(const KRComplex& c)
{
    if (!is_chain_shaped(c)) throw UsageError("normalize_signs needs a chain-shaped complex");
    KRComplex r = c;
    r.prune();
    std::map<int, Rational> scale;
    for (const auto& [deg, obj] : r.objects) {
        if (obj.empty()) continue;
        if (!scale.count(deg)) scale[deg] = 1;
        if (r.at(deg + 1).empty()) continue;
        Mor e = r.entry(deg, 0, 0);
        scale[deg + 1] = e.is_zero() ? Rational(1) : scale[deg] * e.terms().begin()->second;
    }
    for (auto& [deg, m] : r.d) {
        Mor& e = m[0][0];
        if (e.is_zero()) continue;
        e = Mor(e.terms().begin()->first, e.terms().begin()->second * scale[deg] / scale[deg + 1]);
    }
    return r;
}

KRComplex zigzag_complex(int k, int n)
{
    if (k < 1) throw UsageError("zigzag_complex requires k >= 1");
    if (n < 2) throw UsageError("level n must be at least 2");
    int s = (n - 1) * k;
    KRComplex c;
    c.objects[0] = {{Atom::Id2, s}};
    for (int j = 1; j <= k; ++j) c.objects[j] = {{Atom::S, 2 * j - 1 + s}};
    c.d[0] = {{Mor(BasisMor::Chi0)}};
    for (int j = 1; j < k; ++j) c.d[j] = {{Mor(j % 2 == 1 ? BasisMor::Alpha : BasisMor::Gamma)}};
    return c;
}

KRComplex torus2_complex(int k, int n, const PipelineOptions& opts)
{
    if (k < 0) throw UsageError("torus2_complex requires k >= 0");
    if (k == 0) return identity_complex();
    auto check = [&](const auto& cx, const char* stage) {
        if (!opts.check_d2) return;
        if (!cx.d_squared_zero()) throw std::logic_error(std::string("d^2 != 0 after ") + stage);
        if (opts.stages_checked) ++*opts.stages_checked;
    };
    KRComplex sigma = sigma_complex(+1, n);
    KRComplex c = sigma;
    for (int i = 1; i < k; ++i) {
        ComposedComplex u = compose_unsplit(sigma, c);
        check(u, "compose");
        KRComplex s = split_ss(u);
        s.validate();
        check(s, "split_ss");
        c = gaussian_eliminate(s, opts.order);
        c.validate();
        check(c, "gaussian_eliminate");
    }
    return is_chain_shaped(c) ? normalize_signs(c) : c;
}

bool same_objects(const KRComplex& a, const KRComplex& b)
{
    KRComplex x = a, y = b;
    x.prune();
    y.prune();
    if (x.objects.size() != y.objects.size()) return false;
    for (auto ix = x.objects.begin(), iy = y.objects.begin(); ix != x.objects.end(); ++ix, ++iy) {
        if (ix->first != iy->first) return false;
        auto u = ix->second, v = iy->second;
        std::sort(u.begin(), u.end());
        std::sort(v.begin(), v.end());
        if (u != v) return false;
    }
    return true;
}

}  // namespace moykr
