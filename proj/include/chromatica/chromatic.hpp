#ifndef CHROMATICA_CHROMATIC_HPP
#define CHROMATICA_CHROMATIC_HPP

#include "chromatica/graph.hpp"
#include "chromatica/symfunc.hpp"

#include <optional>

namespace chromatica {

// Enumeration limits for the two engines. Exceeding a cap raises
// unsupported_size_error; nothing is ever truncated silently.
struct ChromaticCaps {
    int max_vertices = 10;
    int max_edges = 24;
};

// X_G in the monomial basis by proper-coloring enumeration: the coefficient
// of m_lambda counts colorings whose color-class size sequence equals lambda
// exactly, component-wise.
SymFunc csf_colorings(const Graph& g, const ChromaticCaps& caps = {});

// X_G in the power-sum basis by the signed edge-subset expansion.
SymFunc csf_subsets(const Graph& g, const ChromaticCaps& caps = {});

// The t-refinement with weight t^asc, asc counting edges {i, j}, i < j,
// colored kappa(i) < kappa(j). Symmetry in x is only guaranteed for natural
// unit interval labelings, so each class-size pattern is re-counted under а
// permuted budget and compared; a mismatch raises not_symmetric_error unless
// skip_symmetry_check is set.
SymFunc qcsf_colorings(const Graph& g, const ChromaticCaps& caps = {},
                       bool skip_symmetry_check = false);

// X_{G disjoint-union H} == X_G * X_H, in the P basis; when sequences are
// supplied, the t-refined identity is checked as well (the union labeling
// concatenates the two interval sequences).
bool product_check(const Graph& g, const Graph& h, const ChromaticCaps& caps = {});
bool product_check(const IntervalSeq& a, const IntervalSeq& b,
                   const ChromaticCaps& caps = {});

IntervalSeq concat_interval_seqs(const IntervalSeq& a, const IntervalSeq& b);

} // namespace chromatica

#endif
