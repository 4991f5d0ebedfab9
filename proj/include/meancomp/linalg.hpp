#pragma once

#include <vector>

namespace meancomp {

// Row-major dense square matrix, small (comparison matrices are
// (d-1)x(d-1) with d <= ~8).
using Matrix = std::vector<std::vector<double>>;

double determinant(Matrix a);  // by value: eliminated in place

// Determinants of the k x k top-left blocks, k = 1..n.
std::vector<double> leading_principal_minors(const Matrix& a);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(Matrix a);

double max_asymmetry(const Matrix& a);

}  // namespace meancomp
