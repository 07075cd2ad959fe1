// matrix_reps.hpp — verification of explicit operator tuples: k Hermitian
// matrices with prescribed spectra summing to lambda*I, commutant and
// centralizer dimensions, and the rigidity index
//   r = n^2 (2 - k) + sum_j c(A_j)
// with n the representation dimension (the paper reuses the letter n).
// This module alone works in floating point; default tolerance 1e-9.
#pragma once

#include <Eigen/Dense>
#include <vector>

namespace starcalc {

inline constexpr double kMatrixTol = 1e-9;

struct OperatorTuple {
    int dim = 0;
    double lambda = 0.0;
    std::vector<Eigen::MatrixXcd> matrices;
    // Allowed spectrum per matrix: {0 = alpha_0 < alpha_1 < ...}.
    std::vector<std::vector<double>> spectra;
};

// Throws std::invalid_argument on shape problems (non-square, mismatched
// dimensions, spectra count != matrix count, unsorted spectrum or one not
// starting at 0).
void validate_tuple_shape(const OperatorTuple& t);

struct CheckResult {
    bool pass = false;
    double residual = 0.0;
};

struct TupleReport {
    CheckResult hermitian;  // max |A - A*| entry over all matrices
    CheckResult sum;        // max |sum A_l - lambda I| entry
    CheckResult spectrum;   // max distance from an eigenvalue to its allowed set
    bool pass = false;
    double residual = 0.0;  // max of the three residuals
};

TupleReport verify_tuple(const OperatorTuple& t, double tol = kMatrixTol);

// Sum of squared eigenvalue multiplicities (complex dimension of the
// centralizer of a Hermitian matrix). Eigenvalues are clustered by
// single linkage with gap threshold tol * max(1, ||A||).
int centralizer_dim(const Eigen::MatrixXcd& a, double tol = kMatrixTol);

// Dimension of {X : X A_l = A_l X for all l}, the nullity of the stacked
// commutation system; 1 means irreducible.
int joint_commutant_dim(const OperatorTuple& t, double tol = kMatrixTol);

inline bool is_irreducible(const OperatorTuple& t, double tol = kMatrixTol) {
    return joint_commutant_dim(t, tol) == 1;
}

long long rigidity_index(const OperatorTuple& t, double tol = kMatrixTol);

}  // namespace starcalc
