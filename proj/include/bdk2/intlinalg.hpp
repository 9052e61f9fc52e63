#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

namespace bdk2 {

using Int = std::int64_t;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

// U * m * V = D, with U (rows x rows) and V (cols x cols) unimodular and
// D diagonal with d_1 | d_2 | ... | d_r, d_i >= 0.
struct SmithForm {
  IntMat u;
  IntMat d;
  IntMat v;
  int rank() const;
};

SmithForm smith_normal_form(const IntMat& m);

// All integer solutions x of a * x = b, described as x0 + span(kernel columns).
struct AffineLatticeSolution {
  IntVec particular;
  IntMat kernel;  // columns form a basis of { x : a x = 0 }
};

std::optional<AffineLatticeSolution> solve_integer(const IntMat& a, const IntVec& b);

// Basis (columns) of the integer kernel { x : a x = 0 }.
IntMat integer_kernel(const IntMat& a);

bool is_unimodular(const IntMat& m);

}  // namespace bdk2
