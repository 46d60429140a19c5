#include "bosesemi/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "bosesemi/params.hpp"

namespace bosesemi {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

namespace {

constexpr int kMaxSweeps = 60;

void fix_signs(Matrix& z) {
  const std::size_t n = z.size();
  for (std::size_t j = 0; j < n; ++j) {
    auto col = z.column(j);
    auto first = std::find_if(col.begin(), col.end(), [](double x) { return std::abs(x) > 1e-14; });
    if (first != col.end() && *first < 0.0) {
      for (double& x : col) x = -x;
    }
  }
}

}  // namespace

EigenDecomposition symmetric_tridiagonal_eigen(std::span<const double> diag,
                                               std::span<const double> offdiag,
                                               bool want_vectors) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (offdiag.size() + 1 != n) {
    throw DomainError("off-diagonal length must be diagonal length - 1");
  }

  std::vector<double> d(diag.begin(), diag.end());
  // e[i] couples rows i and i+1; e[n-1] is scratch.
  std::vector<double> e(n, 0.0);
  std::copy(offdiag.begin(), offdiag.end(), e.begin());

  std::optional<Matrix> z;
  if (want_vectors) z = Matrix::identity(n);

  int total_sweeps = 0;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m = l;
    for (;;) {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m == l) break;
      if (++iter > kMaxSweeps) {
        throw ConvergenceError("tridiagonal QL did not converge for eigenvalue " +
                               std::to_string(l) + " after " + std::to_string(kMaxSweeps) +
                               " sweeps");
      }
      ++total_sweeps;

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      std::size_t i = m;
      bool underflow = false;
      while (i-- > l) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (z) {
          for (std::size_t k = 0; k < n; ++k) {
            f = (*z)(k, i + 1);
            (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
            (*z)(k, i) = c * (*z)(k, i) - s * f;
          }
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  EigenDecomposition out;
  out.iterations = total_sweeps;
  out.values.reserve(n);
  for (std::size_t idx : order) out.values.push_back(d[idx]);
  if (z) {
    Matrix sorted(n);
    for (std::size_t j = 0; j < n; ++j) {
      auto src = z->column(order[j]);
      std::copy(src.begin(), src.end(), sorted.column(j).begin());
    }
    fix_signs(sorted);
    out.vectors = std::move(sorted);
  }
  return out;
}

}  // namespace bosesemi
