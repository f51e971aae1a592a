#ifndef CHROMATICA_TABLEAUX_HPP
#define CHROMATICA_TABLEAUX_HPP

#include "chromatica/graph.hpp"
#include "chromatica/partition.hpp"
#include "chromatica/symfunc.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace chromatica {

// A filling of a Young diagram by the elements of [n]: rows are strict
// chains of the interval order, and no cell is strictly above a cell it
// dominates in the order (adjacent column condition).
struct PTableau {
    IntervalSeq seq;
    Partition shape;
    std::vector<std::vector<int>> rows;

    int at(int row, int col) const { // 0-based
        return rows[static_cast<size_t>(row)][static_cast<size_t>(col)];
    }
    int row_of(int value) const; // 0-based row index of a value
    std::string to_string() const; // "[1,3,7 | 2,5 | 6 | 4 | 8]"
    bool operator==(const PTableau& o) const { return rows == o.rows; }
    bool operator<(const PTableau& o) const; // row-major lexicographic
};

// Validates the three tableau conditions; used by tests and by the
// injection verifier on map images.
bool is_valid_ptableau(const PTableau& t);

struct TableauxCaps {
    int max_n = 10;
};

// Number of inversions: incomparable pairs {a, b}, a < b, with b placed in a
// strictly earlier row than a.
int inv_weight(const PTableau& t);

// All tableaux of the given shape, in row-major lexicographic order of
// their entry words.
std::vector<PTableau> enumerate_tableaux(const IntervalSeq& seq, const Partition& shape,
                                         const TableauxCaps& caps = {});

// Shapes admitting at least one tableau, in canonical partition order.
std::vector<Partition> allowed_shapes(const IntervalSeq& seq, const TableauxCaps& caps = {});

// The Schur expansion of the t-refined chromatic function: coefficient of
// s_lambda is the inv-weight generating polynomial over tableaux of shape
// lambda. Nonnegative by construction.
SymFunc qcsf_tableaux(const IntervalSeq& seq, const TableauxCaps& caps = {});

// Elementary-basis coefficient polynomials E_lambda(t), computed generically
// from the Schur expansion (never from transcribed sign patterns).
std::map<Partition, TPoly, DescLex> e_coefficients(const IntervalSeq& seq,
                                                   const TableauxCaps& caps = {});

// Coefficient sequences of every S_lambda(t) are palindromic about the edge
// count / weakly increasing up to the middle.
bool palindromic(const IntervalSeq& seq, const TableauxCaps& caps = {});
bool unimodal(const IntervalSeq& seq, const TableauxCaps& caps = {});

// The three explicit tableau maps for horseshoe crab sequences.
// eta:  (3,2,1^{n-5}) -> (3,1^{n-3}),   weight shift 0
// psi:  (3,2,1^{n-5}) -> (2^3,1^{n-6}), weight shift +1
// xi:   (2^3,1^{n-6}) u (3,1^{n-3}) -> (2^2,1^{n-4}), claimed shift 0
PTableau injection_eta(const PTableau& t);
PTableau injection_psi(const PTableau& t);
PTableau injection_xi(const PTableau& t);

// Which xi branch a source tableau falls into (for disjointness reporting).
// "A" = six-cell branch, "B1".."B4" = the single-column case split.
std::string xi_branch(const PTableau& t);

struct WeightViolation {
    std::string source;
    std::string image;
    int source_weight = 0;
    int image_weight = 0;
};

struct InjectionReport {
    std::string map_name;
    IntervalSeq seq;
    int expected_shift = 0;
    int source_count = 0;
    bool total = true;               // every source mapped without error
    bool targets_valid = true;       // every image satisfies the tableau conditions
    bool injective = true;           // no two sources share an image
    bool branch_disjoint = true;     // xi only: branch image sets do not meet
    bool weight_ok = true;           // inv(image) - inv(source) == expected shift
    bool counting_ok = true;         // #source(w) <= #target(w + shift) for all w
    std::vector<WeightViolation> weight_violations;
    std::vector<std::string> validity_violations;
    std::vector<std::string> collision_pairs;
    std::string detail;

    bool all_ok() const {
        return total && targets_valid && injective && branch_disjoint && weight_ok &&
               counting_ok;
    }

    InjectionReport(std::string name, IntervalSeq s)
        : map_name(std::move(name)), seq(std::move(s)) {}
};

// Exhaustively applies a named map ("eta", "psi", "xi") over its source
// shapes and checks validity, injectivity, weight shift and the counting
// consequence. Failures are report content, not errors.
InjectionReport verify_injection(const IntervalSeq& seq, const std::string& map_name,
                                 const TableauxCaps& caps = {});

// The dominance consequences of equations relating E-coefficients to
// tableau counts: weight-by-weight comparisons of S-polynomials
//   S_{(2^2,1^{n-4})} >= S_{(2^3,1^{n-6})} + S_{(3,1^{n-3})}
//   S_{(3,1^{n-3})}   >= S_{(3,2,1^{n-5})}
//   S_{(2^3,1^{n-6})} >= S_{(3,2,1^{n-5})}
InjectionReport verify_counting_dominance(const IntervalSeq& seq,
                                          const TableauxCaps& caps = {});

// Source shapes used by the maps, for a ground set of size n.
Partition eta_source_shape(int n);
Partition eta_target_shape(int n);
Partition psi_target_shape(int n);
Partition xi_target_shape(int n);
Partition xi_source_a_shape(int n);
Partition xi_source_b_shape(int n);

} // namespace chromatica

#endif
