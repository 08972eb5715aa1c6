// Width-2 Khovanov-Rozansky formal complexes: shifted atoms id2 and S,
// the finite morphism algebra {1, chi0, chi1, alpha, gamma}, composition
// with crossing complexes, SS splitting and Gaussian elimination.
#pragma once

#include "moykr/ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace moykr {

enum class Atom { Id2, S };

struct ShiftedAtom {
    Atom atom = Atom::Id2;
    int shift = 0;
    friend auto operator<=>(const ShiftedAtom&, const ShiftedAtom&) = default;
};

std::string to_string(const ShiftedAtom& a);

enum class BasisMor { One, Chi0, Chi1, Alpha, Gamma };

// A composite the relations leave undetermined (gamma∘chi0, chi1∘gamma, gamma∘gamma).
class UndefinedComposite : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An entry next to an SS atom with no splitting rule.
class UnsplittableEntry : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

int qdeg(BasisMor m);
std::string to_string(BasisMor m);
// Fixed endpoints; One returns nullopt (it lives on any atom).
std::optional<Atom> source_atom(BasisMor m);
std::optional<Atom> target_atom(BasisMor m);
// after ∘ before; nullopt means zero.
std::optional<BasisMor> compose_basis(BasisMor after, BasisMor before);

// Rational linear combination of basis morphisms.
class Mor {
public:
    Mor() = default;
    Mor(BasisMor m, const Rational& c = 1);

    const std::map<BasisMor, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Set when the entry is c * One with c != 0.
    std::optional<Rational> unit_coefficient() const;

    Mor& operator+=(const Mor& o);
    Mor& operator*=(const Rational& c);
    friend Mor operator+(Mor a, const Mor& b) { return a += b; }
    friend Mor operator*(Mor a, const Rational& c) { return a *= c; }
    friend Mor operator-(Mor a, const Mor& b) { return a += b * Rational(-1); }
    friend bool operator==(const Mor&, const Mor&) = default;

    std::string to_string() const;

private:
    std::map<BasisMor, Rational> terms_;
};

Mor compose(const Mor& after, const Mor& before);

// Rows are target summands, columns source summands.
using MorMatrix = std::vector<std::vector<Mor>>;

struct KRComplex {
    std::map<int, std::vector<ShiftedAtom>> objects;
    // d[i] maps objects[i] to objects[i+1].
    std::map<int, MorMatrix> d;

    const std::vector<ShiftedAtom>& at(int deg) const;
    Mor entry(int deg, std::size_t target, std::size_t source) const;
    std::size_t total_summands() const;

    // Shapes, atom compatibility and degree homogeneity; throws std::logic_error.
    void validate() const;
    bool d_squared_zero() const;
    // Drops empty degrees and all-zero matrices.
    void prune();
    std::string render() const;

    friend bool operator==(const KRComplex&, const KRComplex&) = default;
};

// Composite objects M_i ∘ N_j before SS atoms are split; entries are
// combinations of horizontal composites top ∘ bottom.
struct PairAtom {
    ShiftedAtom top;
    ShiftedAtom bottom;
    int shift() const { return top.shift + bottom.shift; }
    bool is_ss() const { return top.atom == Atom::S && bottom.atom == Atom::S; }
    friend bool operator==(const PairAtom&, const PairAtom&) = default;
};

using PairTerm = std::pair<BasisMor, BasisMor>;  // (top, bottom)
using PairMor = std::map<PairTerm, Rational>;

struct ComposedComplex {
    std::map<int, std::vector<PairAtom>> objects;
    std::map<int, std::vector<std::vector<PairMor>>> d;

    // Interchange law: (f1 ∘ g1)(f2 ∘ g2) = (f1 f2) ∘ (g1 g2), cancelled formally.
    bool d_squared_zero() const;
    std::string render() const;
};

KRComplex identity_complex();
KRComplex sigma_complex(int sign, int n);
KRComplex shifted(const KRComplex& c, int m);

// Totalization with sign (-1)^(degree of top) on the bottom differentials.
ComposedComplex compose_unsplit(const KRComplex& top, const KRComplex& bottom);
// SS{m} -> S{m-1} ⊕ S{m+1}, phi/psi alternating by homological degree.
KRComplex split_ss(const ComposedComplex& c);
KRComplex compose(const KRComplex& top, const KRComplex& bottom);

enum class PivotOrder { LeftmostFirst, RightmostFirst };
KRComplex gaussian_eliminate(const KRComplex& c, PivotOrder order = PivotOrder::LeftmostFirst);

// At most one summand per degree and single-term entries.
bool is_chain_shaped(const KRComplex& c);
// Rescales summands so every nonzero entry has coefficient 1 (chain-shaped input only).
KRComplex normalize_signs(const KRComplex& c);

// The reduced torus complex predicted in closed form: id2 -chi0-> S{1} -alpha-> S{3} -gamma-> ...
KRComplex zigzag_complex(int k, int n);

struct PipelineOptions {
    PivotOrder order = PivotOrder::LeftmostFirst;
    bool check_d2 = true;
    int* stages_checked = nullptr;
};

// Folds compose, split_ss and gaussian_eliminate over k copies of sigma+.
KRComplex torus2_complex(int k, int n, const PipelineOptions& opts = {});

// Same graded summand multisets in every degree.
bool same_objects(const KRComplex& a, const KRComplex& b);

}  // namespace moykr
