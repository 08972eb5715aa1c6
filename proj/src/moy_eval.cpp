#include "moykr/moy_eval.hpp"

#include <map>
#include <numeric>
#include <set>

namespace moykr {

namespace {

void require_level(int n)
{
    if (n < 2) throw UsageError("level n must be at least 2");
}

LaurentPoly q_one()
{
    return LaurentPoly::constant(q_vars(), 1);
}

// (-q^2)^k
LaurentPoly minus_q2_pow(int k)
{
    return q_pow(2 * k) * Rational(k % 2 == 0 ? 1 : -1);
}

LaurentPoly one_plus_q2()
{
    return q_one() + q_pow(2);
}

}  // namespace

LadderElement ladder(const LaurentPoly& a, const LaurentPoly& b)
{
    return {a.lifted(q_vars()), b.lifted(q_vars())};
}

LadderElement ladder_identity()
{
    return {q_one(), LaurentPoly(q_vars())};
}

LadderElement ladder_s()
{
    return {LaurentPoly(q_vars()), q_one()};
}

LadderElement ladder_mul(const LadderElement& x, const LadderElement& y)
{
    return {x.a * y.a, x.a * y.b + x.b * y.a + (q_pow(1) + q_pow(-1)) * x.b * y.b};
}

LadderElement ladder_add(const LadderElement& x, const LadderElement& y)
{
    return {x.a + y.a, x.b + y.b};
}

LadderElement ladder_scale(const LaurentPoly& c, const LadderElement& x)
{
    return {c * x.a, c * x.b};
}

LadderElement braiding(int sign, int n)
{
    require_level(n);
    if (sign > 0) return {q_pow(n - 1), -q_pow(n)};
    return {q_pow(1 - n), -q_pow(-n)};
}

LadderElement sigma_power(int k, int n)
{
    if (k < 1) throw UsageError("sigma_power requires k >= 1");
    LadderElement s = braiding(+1, n);
    LadderElement r = s;
    for (int i = 1; i < k; ++i) r = ladder_mul(r, s);
    return r;
}

LadderElement sigma_power_closed_form(int k, int n)
{
    if (k < 1) throw UsageError("sigma_power requires k >= 1");
    require_level(n);
    LaurentPoly g = q_pow(k * (n - 1));
    LaurentPoly frac = exact_div(q_one() - minus_q2_pow(k), one_plus_q2());
    return {g, -(g * q_pow(1) * frac)};
}

LaurentPoly eval_closed_ladder(const LadderElement& x, int n)
{
    require_level(n);
    LaurentPoly qn = q_integer(n);
    return x.a * qn * qn + x.b * qn * q_integer(n - 1);
}

LaurentPoly partial_close_ladder(const LadderElement& x, int n)
{
    require_level(n);
    return x.a * q_integer(n) + x.b * q_integer(n - 1);
}

LaurentPoly jones_torus2(int k, int n)
{
    if (k < 1) throw UsageError("jones_torus2 requires k >= 1");
    require_level(n);
    LaurentPoly qn = q_integer(n);
    LaurentPoly p = minus_q2_pow(k);
    LaurentPoly inner = exact_div((q_pow(2) + p) * qn + q_pow(1 - n) * (q_one() - p), one_plus_q2());
    return q_pow(k * (n - 1)) * qn * inner;
}

LaurentPoly jones(const BraidWord& b, int n)
{
    b.validate();
    require_level(n);
    if (b.width > 2) throw UsageError("unsupported width " + std::to_string(b.width) + " (at most 2)");
    if (b.width == 1) return q_integer(n);
    LadderElement r = ladder_identity();
    for (int l : b.letters) r = ladder_mul(r, braiding(l > 0 ? +1 : -1, n));
    return eval_closed_ladder(r, n);
}

namespace {

class UnionFind {
public:
    int add()
    {
        parent_.push_back(static_cast<int>(parent_.size()));
        return parent_.back();
    }
    int find(int x)
    {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

struct Port {
    int node;
    int side;  // 0 left, 1 right
    bool out;
    friend auto operator<=>(const Port&, const Port&) = default;
};

}  // namespace

LaurentPoly evaluate(const DiagramWord& w, int n)
{
    require_level(n);
    if (!w.is_closed()) throw UsageError("evaluate requires a closed diagram");

    UnionFind uf;
    std::vector<std::vector<int>> level(w.slices().size() + 1);
    for (std::size_t s = 0; s < w.slices().size(); ++s)
        for (std::size_t p = 0; p < w.slices()[s].target().size(); ++p) level[s + 1].push_back(uf.add());

    std::vector<LadderElement> nodes;
    std::vector<std::pair<int, Port>> attachments;  // edge id, port
    for (std::size_t s = 0; s < w.slices().size(); ++s) {
        std::size_t ip = 0, op = 0;
        for (const auto& g : w.slices()[s].pieces) {
            switch (g.kind) {
            case GenKind::Id:
                uf.unite(level[s][ip++], level[s + 1][op++]);
                break;
            case GenKind::Cup:
                uf.unite(level[s + 1][op], level[s + 1][op + 1]);
                op += 2;
                break;
            case GenKind::Cap:
                uf.unite(level[s][ip], level[s][ip + 1]);
                ip += 2;
                break;
            case GenKind::Wide:
            case GenKind::CrossPos:
            case GenKind::CrossNeg: {
                int id = static_cast<int>(nodes.size());
                nodes.push_back(g.kind == GenKind::Wide ? ladder_s()
                                                        : braiding(g.kind == GenKind::CrossPos ? 1 : -1, n));
                attachments.push_back({level[s][ip], {id, 0, false}});
                attachments.push_back({level[s][ip + 1], {id, 1, false}});
                attachments.push_back({level[s + 1][op], {id, 0, true}});
                attachments.push_back({level[s + 1][op + 1], {id, 1, true}});
                ip += 2;
                op += 2;
                break;
            }
            case GenKind::T:
                throw StuckError("stuck: the T graph has no evaluation rule");
            }
        }
    }

    std::map<int, std::vector<Port>> by_class;
    std::set<int> classes;
    for (std::size_t l = 1; l < level.size(); ++l)
        for (int e : level[l]) classes.insert(uf.find(e));
    for (const auto& [edge, port] : attachments) by_class[uf.find(edge)].push_back(port);

    int circles = 0;
    std::map<Port, Port> next;
    for (int c : classes) {
        auto it = by_class.find(c);
        if (it == by_class.end()) {
            ++circles;
            continue;
        }
        const auto& ports = it->second;
        if (ports.size() != 2 || ports[0].out == ports[1].out)
            throw StuckError("stuck: strand does not join an output to an input");
        const Port& o = ports[0].out ? ports[0] : ports[1];
        const Port& i = ports[0].out ? ports[1] : ports[0];
        next[o] = i;
    }

    LaurentPoly result = q_integer(n).pow(static_cast<unsigned>(circles));
    std::vector<bool> seen(nodes.size(), false);
    for (std::size_t start = 0; start < nodes.size(); ++start) {
        if (seen[start]) continue;
        LadderElement prod = ladder_identity();
        int cur = static_cast<int>(start);
        do {
            if (seen[cur]) throw StuckError("stuck: ladder nodes do not form a single closed chain");
            seen[cur] = true;
            prod = ladder_mul(nodes[cur], prod);
            const Port& l = next.at({cur, 0, true});
            const Port& r = next.at({cur, 1, true});
            if (l.node != r.node || l.side != 0 || r.side != 1)
                throw StuckError("stuck: not a 2-strand ladder closure");
            cur = l.node;
        } while (cur != static_cast<int>(start));
        result *= eval_closed_ladder(prod, n);
    }
    return result;
}

}  // namespace moykr
