// Closing width-2 KR complexes to complexes of graded vector spaces,
// exact bigraded homology and Poincaré polynomials.
#pragma once

#include "moykr/kr.hpp"
#include "moykr/ring.hpp"

#include <map>
#include <utility>
#include <vector>

namespace moykr {

struct GradedVS {
    std::map<int, int> dims;  // q-degree -> dimension
    LaurentPoly as_poly() const;
    int total() const;
    friend bool operator==(const GradedVS&, const GradedVS&) = default;
};

using QMatrix = std::vector<std::vector<Rational>>;

struct GVSComplex {
    std::map<int, GradedVS> objects;
    // d[j][i]: q-degree i block from homological degree j to j+1.
    std::map<int, std::map<int, QMatrix>> d;

    int dim(int hdeg, int qdeg) const;
    bool d_squared_zero() const;
};

GradedVS close_atom(const ShiftedAtom& a, int n);
// q-degree -> matrix (rows: target basis in that degree, columns: source basis).
std::map<int, QMatrix> close_morphism(const Mor& e, const ShiftedAtom& source, const ShiftedAtom& target, int n);
GVSComplex close_complex(const KRComplex& c, int n);
// Closes only the left strand: id2 -> [n] id1, S -> [n-1] id1. Gamma entries are rejected.
GVSComplex partial_close_one_strand(const KRComplex& c, int n);

std::size_t matrix_rank(const QMatrix& m);

// (homological degree, q-degree) -> dimension, zeros omitted.
using Bigraded = std::map<std::pair<int, int>, int>;
Bigraded homology(const GVSComplex& g);

LaurentPoly poincare(const Bigraded& h);
LaurentPoly euler(const LaurentPoly& poincare);

// Closed forms for k total crossings.
LaurentPoly kr_poincare_torus2(int k, int n);
// poincare(homology(close_complex(torus2_complex(k, n)))).
LaurentPoly kr_poincare_engine(int k, int n, const PipelineOptions& opts = {});

}  // namespace moykr
