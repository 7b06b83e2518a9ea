#pragma once

#include "voa/products.hpp"
#include "voa/span.hpp"

namespace voa {

// Small dense exact matrix, mat[row][col].
using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix identity_matrix(size_t n);
RatMatrix zero_matrix(size_t rows, size_t cols);
bool matrix_is_zero(const RatMatrix& m);
RatMatrix matrix_product(const RatMatrix& a, const RatMatrix& b);
Rat matrix_trace(const RatMatrix& m);

// Matrix of o(v) = v_{wt v - 1} on the degree-s piece of M:
// o(v) key_col = sum_row mat[row][col] key_row.
RatMatrix o_matrix(const GradedVector& v, const Space& M, int s);

// All basis keys of V with degree <= W, as single-key vectors.
std::vector<GradedVector> vacuum_basis_upto(const Space& V, int W);

struct PieceRef {
    size_t module;  // index into Model
    int s;          // graded piece M^i(s)
};

// Rank of the joint map V_{<=W} -> sum_{i, s<=n} End M^i(s),
// v -> (o(v) restricted to each nonzero piece).
struct JointRankResult {
    long rank;
    long expected;  // sum of squared piece dimensions
    std::vector<PieceRef> pieces;
};
JointRankResult semisimplicity_rank(const Model& model, int n, int W);

// Rank of span{ o(v)|_piece : v in V_{<=W} } inside End of one piece.
long piece_image_rank(const Model& model, const PieceRef& piece, int W);

// Filtration check: u_m w = 0 for every basis w of M(s), every u of
// degree <= budget, and every m > wt u - 1 + n reachable at this grading.
// The reachable range is empty when s <= n (the grading law); feeding a
// piece with s > n exercises the detector (harness failure injection).
std::optional<std::string> omega_filter_violation(const Space& V, const Space& M,
                                                  int s, int n, int budget);

// o(u *_n v) = o(u) o(v) on M^i(s) for u, v over V_{<=budget}.
std::optional<std::string> representation_incompatibility(const Model& model, size_t i,
                                                          int s, int n, int budget);

}  // namespace voa
