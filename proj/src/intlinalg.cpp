#include "bdk2/intlinalg.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace bdk2 {

int SmithForm::rank() const {
  int r = 0;
  const int n = static_cast<int>(std::min(d.rows(), d.cols()));
  for (int i = 0; i < n; ++i)
    if (d(i, i) != 0) ++r;
  return r;
}

namespace {

void swap_rows(IntMat& m, IntMat& u, int i, int j) {
  m.row(i).swap(m.row(j));
  u.row(i).swap(u.row(j));
}

void swap_cols(IntMat& m, IntMat& v, int i, int j) {
  m.col(i).swap(m.col(j));
  v.col(i).swap(v.col(j));
}

// Find a nonzero pivot with minimal absolute value in m(t.., t..).
bool find_pivot(const IntMat& m, int t, int& pi, int& pj) {
  Int best = 0;
  for (int i = t; i < m.rows(); ++i) {
    for (int j = t; j < m.cols(); ++j) {
      const Int a = std::abs(m(i, j));
      if (a != 0 && (best == 0 || a < best)) {
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return best != 0;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  SmithForm f;
  f.u = IntMat::Identity(rows, rows);
  f.v = IntMat::Identity(cols, cols);
  f.d = m;
  IntMat& d = f.d;

  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    int pi = t, pj = t;
    if (!find_pivot(d, t, pi, pj)) break;
    swap_rows(d, f.u, t, pi);
    swap_cols(d, f.v, t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Int q = d(i, t) / d(t, t);
        d.row(i) -= q * d.row(t);
        f.u.row(i) -= q * f.u.row(t);
        if (d(i, t) != 0) {
          swap_rows(d, f.u, t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Int q = d(t, j) / d(t, t);
        d.col(j) -= q * d.col(t);
        f.v.col(j) -= q * f.v.col(t);
        if (d(t, j) != 0) {
          swap_cols(d, f.v, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce divisibility: d(t,t) must divide every remaining entry.
      for (int i = t + 1; i < rows && clean; ++i) {
        for (int j = t + 1; j < cols && clean; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            d.row(t) += d.row(i);
            f.u.row(t) += f.u.row(i);
            clean = false;
          }
        }
      }
    }
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      f.u.row(t) = -f.u.row(t);
    }
  }
  return f;
}

std::optional<AffineLatticeSolution> solve_integer(const IntMat& a, const IntVec& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_integer: shape mismatch");
  const SmithForm f = smith_normal_form(a);
  const IntVec c = f.u * b;  // (U a V) y = U b with x = V y
  const int n = static_cast<int>(a.cols());
  const int steps = static_cast<int>(std::min(a.rows(), a.cols()));

  IntVec y = IntVec::Zero(n);
  for (int i = 0; i < static_cast<int>(a.rows()); ++i) {
    const Int di = (i < steps) ? f.d(i, i) : 0;
    if (di == 0) {
      if (c(i) != 0) return std::nullopt;
    } else {
      if (c(i) % di != 0) return std::nullopt;
      y(i) = c(i) / di;
    }
  }

  std::vector<int> free_idx;
  for (int j = 0; j < n; ++j) {
    const Int dj = (j < steps) ? f.d(j, j) : 0;
    if (dj == 0) free_idx.push_back(j);
  }
  IntMat kernel(n, static_cast<int>(free_idx.size()));
  for (int k = 0; k < static_cast<int>(free_idx.size()); ++k)
    kernel.col(k) = f.v.col(free_idx[k]);

  AffineLatticeSolution sol;
  sol.particular = f.v * y;
  sol.kernel = kernel;
  return sol;
}

IntMat integer_kernel(const IntMat& a) {
  auto sol = solve_integer(a, IntVec::Zero(a.rows()));
  return sol->kernel;
}

bool is_unimodular(const IntMat& m) {
  if (m.rows() != m.cols()) return false;
  const SmithForm f = smith_normal_form(m);
  for (int i = 0; i < m.rows(); ++i)
    if (f.d(i, i) != 1) return false;
  return true;
}

}  // namespace bdk2
