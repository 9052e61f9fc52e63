#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdk2/intlinalg.hpp"

namespace bdk2 {

// Free abelian group of finite rank; elements are integer coordinate vectors.
struct Lattice {
  int rank = 0;
  std::string label;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.rank == b.rank; }
};

struct LatticeMap {
  Lattice source;
  Lattice target;
  IntMat matrix;  // target.rank x source.rank

  IntVec apply(const IntVec& y) const { return matrix * y; }
  static LatticeMap identity(const Lattice& l);
  LatticeMap compose(const LatticeMap& inner) const;
};

// Split root datum: X and Y are coordinate lattices of the same rank, paired
// by the dot product. Roots live in X, coroots in Y, in bijection.
class RootDatum {
 public:
  RootDatum(int rank, std::vector<IntVec> roots, std::vector<IntVec> coroots,
            std::string label = "");

  int rank() const { return rank_; }
  const std::string& label() const { return label_; }
  const Lattice& y_lattice() const { return y_; }
  const Lattice& x_lattice() const { return x_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  const IntVec& root(int i) const { return roots_.at(i); }
  const IntVec& coroot(int i) const { return coroots_.at(i); }

  // Inclusion of the coroot lattice Y_SC into Y. Columns are a lattice basis
  // of the span of the coroots, taken greedily in file order so that simple
  // coroots listed first become the basis.
  const LatticeMap& coroot_inclusion() const { return p_; }
  int semisimple_rank() const { return static_cast<int>(p_.matrix.cols()); }
  bool is_semisimple() const;

 private:
  int rank_;
  std::string label_;
  Lattice x_, y_;
  std::vector<IntVec> roots_;
  std::vector<IntVec> coroots_;
  LatticeMap p_;
};

// Q(y) = sum_{i<=j} q_ij y_i y_j with integer coefficients.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  QuadraticForm(Lattice lattice, IntMat upper);

  static QuadraticForm zero(const Lattice& l);
  const Lattice& lattice() const { return lattice_; }
  const IntMat& upper() const { return upper_; }

  Int operator()(const IntVec& y) const;
  // B_Q(y1, y2) = Q(y1+y2) - Q(y1) - Q(y2); Gram matrix has diagonal 2 q_ii.
  IntMat bilinear() const;
  Int bilinear(const IntVec& y1, const IntVec& y2) const;

  QuadraticForm operator+(const QuadraticForm& o) const;
  // Restriction along a lattice map: y -> Q(m y).
  QuadraticForm pullback(const LatticeMap& m) const;
  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b);

 private:
  Lattice lattice_;
  IntMat upper_;
};

// An element C of X (x) X, i.e. an arbitrary integer matrix on Y.
struct BilinearIncarnation {
  Lattice lattice;
  IntMat matrix;
};

// y -> y - <alpha_i, y> alpha_i^vee on Y.
LatticeMap weyl_reflection(const RootDatum& rd, int i);

bool is_weyl_invariant(const QuadraticForm& q, const RootDatum& rd);

// Solutions h of h o p = psi, for injective p. The solution set is the
// particular solution translated by { h : h o p = 0 }.
struct HomExtension {
  IntMat particular;      // target.rank x Y.rank
  std::vector<IntMat> kernel_basis;
  int torsor_rank() const { return static_cast<int>(kernel_basis.size()); }
};

std::optional<HomExtension> extend_hom(const LatticeMap& p, const LatticeMap& psi);

// Same solve with every equation taken mod m (m > 0); kernel basis omitted.
std::optional<IntMat> extend_hom_mod(const LatticeMap& p, const LatticeMap& psi, Int m);

}  // namespace bdk2
