#pragma once

#include "torus/enumeration.hpp"
#include "torus/lattice.hpp"

namespace torus {

/// Member of the laminated near-optimal family: the d x d lower-right
/// submatrix of the 8 x 8 integer form with parameter kappa = 2 ceil(k/2).
struct CandidateGram {
    int k;
    int d;
    int kappa;
    IntGramMatrix gram;
};

enum class KRegime { kLe2, kGe3 };

struct CatalogRow {
    int index;          // 1-based position within the regime for this dimension
    int global_index;   // regime index over the full 8-dimensional table
    LatticeVec vec;     // last d coordinates of the tabulated 8-vector
    bool red;           // member of the coefficient index set I
    bool spanning;      // member of the spanning index set J
};

struct VectorCatalog {
    KRegime k_regime;
    int k, d, kappa;
    std::vector<CatalogRow> rows;
    std::vector<int> dim_breaks;  // rows[i] with i >= dim_breaks[j] first appear in dim j+1
};

/// The 8 x 8 family form with kappa substituted.
IntGramMatrix script_g(int k);

CandidateGram candidate_gram(int k, int d);

/// Exact determinant of candidate_gram(k,d) from the closed-form polynomial.
Int candidate_det_polynomial(int k, int d);

/// Closed-form k-th normalized eigenvalue of the family.
double closed_form_lambda(int k, int d);

VectorCatalog catalog_vectors(int k, int d);

long long predicted_multiplicity(int k, int d);

/// 2^{2-2/d} pi^2 kappa^{2/d}, the diagonal test-lattice lower bound.
double lower_bound_lambda(int k, int d);

struct HermiteCheck {
    double hermite;  // Lambda_{1,d} / 4 pi^2
    double density;  // lattice packing density
};

HermiteCheck hermite_check(int d);

}  // namespace torus
