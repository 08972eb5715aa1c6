#include "moykr/closure.hpp"

#include <array>
#include <numeric>
#include <optional>

namespace moykr {

LaurentPoly GradedVS::as_poly() const
{
    LaurentPoly p(q_vars());
    for (const auto& [q, d] : dims) p += q_pow(q) * Rational(d);
    return p;
}

int GradedVS::total() const
{
    int s = 0;
    for (const auto& [q, d] : dims) s += d;
    return s;
}

int GVSComplex::dim(int hdeg, int qdeg) const
{
    auto it = objects.find(hdeg);
    if (it == objects.end()) return 0;
    auto jt = it->second.dims.find(qdeg);
    return jt == it->second.dims.end() ? 0 : jt->second;
}

bool GVSComplex::d_squared_zero() const
{
    for (const auto& [j, blocks] : d) {
        auto nxt = d.find(j + 1);
        if (nxt == d.end()) continue;
        for (const auto& [q, m1] : blocks) {
            auto m2it = nxt->second.find(q);
            if (m2it == nxt->second.end()) continue;
            const QMatrix& m2 = m2it->second;
            for (std::size_t r = 0; r < m2.size(); ++r)
                for (std::size_t c = 0; c < (m1.empty() ? 0 : m1[0].size()); ++c) {
                    Rational s = 0;
                    for (std::size_t k = 0; k < m1.size(); ++k) s += m2[r][k] * m1[k][c];
                    if (s != 0) return false;
                }
        }
    }
    return true;
}

namespace {

using Label = std::array<int, 2>;

std::vector<int> weights(int m)
{
    std::vector<int> w;
    for (int j = 0; j < m; ++j) w.push_back(1 - m + 2 * j);
    return w;
}

// The closed strand contributes `a`; the spectator circle (or open strand) `b`.
struct ClosureModel {
    int n;
    bool partial;

    std::vector<std::pair<Label, int>> basis(const ShiftedAtom& x) const
    {
        std::vector<std::pair<Label, int>> out;
        std::vector<int> bs = partial ? std::vector<int>{0} : weights(n);
        for (int a : weights(x.atom == Atom::Id2 ? n : n - 1))
            for (int b : bs) out.push_back({{a, b}, a + b + x.shift});
        return out;
    }

    std::optional<Label> image(BasisMor m, const Label& l) const
    {
        switch (m) {
        case BasisMor::One: return l;
        case BasisMor::Chi0:
            if (l[0] == 1 - n) return std::nullopt;
            return Label{l[0] - 1, l[1]};
        case BasisMor::Chi1: return Label{l[0] - 1, l[1]};
        case BasisMor::Alpha: return std::nullopt;
        case BasisMor::Gamma:
            if (partial) throw UsageError("gamma acts on the open strand; no scalar partial closure");
            if (l[1] == 1 - n) return std::nullopt;
            return Label{l[0], l[1] - 2};
        }
        return std::nullopt;
    }
};

struct DegreeIndex {
    // q-degree -> list of (summand, label)
    std::map<int, std::vector<std::pair<std::size_t, Label>>> by_q;
    std::map<std::pair<std::size_t, Label>, std::pair<int, std::size_t>> where;
};

DegreeIndex index_object(const std::vector<ShiftedAtom>& obj, const ClosureModel& model)
{
    DegreeIndex idx;
    for (std::size_t u = 0; u < obj.size(); ++u) {
        for (const auto& [label, q] : model.basis(obj[u])) {
            auto& v = idx.by_q[q];
            idx.where[{u, label}] = {q, v.size()};
            v.push_back({u, label});
        }
    }
    return idx;
}

GVSComplex close_with(const KRComplex& c, const ClosureModel& model)
{
    GVSComplex g;
    std::map<int, DegreeIndex> idx;
    for (const auto& [j, obj] : c.objects) {
        idx[j] = index_object(obj, model);
        GradedVS vs;
        for (const auto& [q, v] : idx[j].by_q) vs.dims[q] = static_cast<int>(v.size());
        g.objects[j] = vs;
    }
    for (const auto& [j, m] : c.d) {
        const DegreeIndex& src = idx.at(j);
        const DegreeIndex& tgt = idx.at(j + 1);
        auto& blocks = g.d[j];
        for (const auto& [q, v] : src.by_q) {
            auto t = tgt.by_q.find(q);
            if (t == tgt.by_q.end()) continue;
            blocks[q] = QMatrix(t->second.size(), std::vector<Rational>(v.size()));
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            for (std::size_t s = 0; s < m[r].size(); ++s) {
                const Mor& e = m[r][s];
                if (e.is_zero()) continue;
                for (const auto& [label, q] : model.basis(c.objects.at(j)[s])) {
                    std::size_t col = src.where.at({s, label}).second;
                    for (const auto& [bm, coeff] : e.terms()) {
                        auto img = model.image(bm, label);
                        if (!img) continue;
                        auto [tq, row] = tgt.where.at({r, *img});
                        if (tq != q) throw std::logic_error("closed morphism does not preserve q-degree");
                        blocks.at(q)[row][col] += coeff;
                    }
                }
            }
        }
    }
    return g;
}

}  // namespace

GradedVS close_atom(const ShiftedAtom& a, int n)
{
    if (n < 2) throw UsageError("level n must be at least 2");
    GradedVS vs;
    for (const auto& [label, q] : ClosureModel{n, false}.basis(a)) ++vs.dims[q];
    return vs;
}

std::map<int, QMatrix> close_morphism(const Mor& e, const ShiftedAtom& source, const ShiftedAtom& target, int n)
{
    KRComplex c;
    c.objects[0] = {source};
    c.objects[1] = {target};
    c.d[0] = {{e}};
    c.validate();
    GVSComplex g = close_with(c, ClosureModel{n, false});
    return g.d[0];
}

GVSComplex close_complex(const KRComplex& c, int n)
{
    if (n < 2) throw UsageError("level n must be at least 2");
    return close_with(c, ClosureModel{n, false});
}

GVSComplex partial_close_one_strand(const KRComplex& c, int n)
{
    if (n < 2) throw UsageError("level n must be at least 2");
    return close_with(c, ClosureModel{n, true});
}

std::size_t matrix_rank(const QMatrix& m)
{
    if (m.empty() || m[0].empty()) return 0;
    // Clear denominators row by row, then fraction-free (Bareiss) elimination.
    std::vector<std::vector<Integer>> a;
    for (const auto& row : m) {
        Integer l = 1;
        for (const auto& x : row) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
        std::vector<Integer> ir;
        for (const auto& x : row) ir.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
        a.push_back(std::move(ir));
    }
    std::size_t rows = a.size(), cols = a[0].size(), rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

Bigraded homology(const GVSComplex& g)
{
    auto rank_of = [&](int j, int q) -> int {
        auto it = g.d.find(j);
        if (it == g.d.end()) return 0;
        auto jt = it->second.find(q);
        return jt == it->second.end() ? 0 : static_cast<int>(matrix_rank(jt->second));
    };
    Bigraded h;
    for (const auto& [j, vs] : g.objects) {
        for (const auto& [q, dim] : vs.dims) {
            int hd = dim - rank_of(j, q) - rank_of(j - 1, q);
            if (hd < 0) throw std::logic_error("negative homology dimension");
            if (hd > 0) h[{j, q}] = hd;
        }
    }
    return h;
}

LaurentPoly poincare(const Bigraded& h)
{
    LaurentPoly p(qt_vars());
    for (const auto& [jq, dim] : h) p += LaurentPoly::monomial(qt_vars(), {jq.second, jq.first}, dim);
    return p;
}

LaurentPoly euler(const LaurentPoly& p)
{
    return substitute(p.lifted(qt_vars()), {{"t", LaurentPoly::constant(q_vars(), -1)}}, q_vars());
}

LaurentPoly kr_poincare_torus2(int k, int n)
{
    if (k < 1) throw UsageError("kr_poincare_torus2 requires k >= 1");
    if (n < 2) throw UsageError("level n must be at least 2");
    auto qt = [](int qe, int te) { return LaurentPoly::monomial(qt_vars(), {qe, te}); };
    LaurentPoly bn = q_integer(n).lifted(qt_vars());
    LaurentPoly bm = q_integer(n - 1).lifted(qt_vars());
    int half = k / 2;
    int terms = k % 2 == 1 ? half : half - 1;
    LaurentPoly geom(qt_vars());
    for (int j = 1; j <= terms; ++j) geom += qt(4 * j, 2 * j);
    LaurentPoly inner = qt(1 - n, 0) * bn + (qt(-n, 0) + qt(n, 1)) * geom * bm;
    if (k % 2 == 0) inner += qt(4 * half - 1, 2 * half) * bn * bm;
    return qt((n - 1) * k, 0) * inner;
}

LaurentPoly kr_poincare_engine(int k, int n, const PipelineOptions& opts)
{
    return poincare(homology(close_complex(torus2_complex(k, n, opts), n)));
}

}  // namespace moykr
