#include "meancomp/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "meancomp/errors.hpp"

namespace meancomp {

double determinant(Matrix a) {
  const int n = static_cast<int>(a.size());
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      const double m = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= m * a[col][c];
    }
  }
  return det;
}

std::vector<double> leading_principal_minors(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<double> minors(n);
  for (int k = 1; k <= n; ++k) {
    Matrix block(k, std::vector<double>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) block[i][j] = a[i][j];
    minors[k - 1] = determinant(std::move(block));
  }
  return minors;
}

std::vector<double> symmetric_eigenvalues(Matrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return {};
  if (n == 1) return {a[0][0]};
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

double max_asymmetry(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw InputError("max_asymmetry: matrix is not square");
    for (int j = i + 1; j < n; ++j)
      worst = std::max(worst, std::fabs(a[i][j] - a[j][i]));
  }
  return worst;
}

}  // namespace meancomp
