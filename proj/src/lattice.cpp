#include "bdk2/lattice.hpp"

#include <stdexcept>

namespace bdk2 {

LatticeMap LatticeMap::identity(const Lattice& l) {
  return {l, l, IntMat::Identity(l.rank, l.rank)};
}

LatticeMap LatticeMap::compose(const LatticeMap& inner) const {
  if (inner.target.rank != source.rank)
    throw std::invalid_argument("LatticeMap::compose: rank mismatch");
  return {inner.source, target, matrix * inner.matrix};
}

namespace {

int matrix_rank(const IntMat& m) { return smith_normal_form(m).rank(); }

// Lattice basis of the column span, via the Smith decomposition.
IntMat column_lattice_basis(const IntMat& m) {
  const SmithForm f = smith_normal_form(m);
  const int r = f.rank();
  // U m V = D  =>  column lattice of m = column lattice of U^{-1} D.
  IntMat uinv(f.u.rows(), f.u.cols());
  for (int j = 0; j < f.u.cols(); ++j)
    uinv.col(j) = solve_integer(f.u, IntVec::Unit(f.u.rows(), j))->particular;
  IntMat basis(m.rows(), r);
  for (int i = 0; i < r; ++i) basis.col(i) = uinv.col(i) * f.d(i, i);
  return basis;
}

bool in_column_span(const IntMat& basis, const IntVec& v) {
  return solve_integer(basis, v).has_value();
}

}  // namespace

RootDatum::RootDatum(int rank, std::vector<IntVec> roots, std::vector<IntVec> coroots,
                     std::string label)
    : rank_(rank),
      label_(std::move(label)),
      x_{rank, "X"},
      y_{rank, "Y"},
      roots_(std::move(roots)),
      coroots_(std::move(coroots)) {
  if (rank < 0) throw std::invalid_argument("RootDatum: negative rank");
  if (roots_.size() != coroots_.size())
    throw std::invalid_argument("RootDatum: roots and coroots not in bijection");
  for (size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].size() != rank || coroots_[i].size() != rank)
      throw std::invalid_argument("RootDatum: root of wrong rank");
    if (roots_[i].dot(coroots_[i]) != 2)
      throw std::invalid_argument("RootDatum: <alpha, alpha^vee> != 2");
  }

  // Greedy basis of Y_SC in file order; for the shipped presets this picks
  // the simple coroots, which generate the full coroot lattice.
  IntMat picked(rank, 0);
  for (const IntVec& cv : coroots_) {
    IntMat cand(rank, picked.cols() + 1);
    cand << picked, cv;
    if (matrix_rank(cand) > picked.cols()) picked = cand;
  }
  bool spans = true;
  for (const IntVec& cv : coroots_)
    if (picked.cols() > 0 && !in_column_span(picked, cv)) spans = false;
  if (picked.cols() > 0 && !spans) picked = column_lattice_basis([&] {
        IntMat all(rank, static_cast<int>(coroots_.size()));
        for (int j = 0; j < all.cols(); ++j) all.col(j) = coroots_[j];
        return all;
      }());
  p_ = {Lattice{static_cast<int>(picked.cols()), "Y_SC"}, y_, picked};

  for (int i = 0; i < num_roots(); ++i) {
    const LatticeMap s = weyl_reflection(*this, i);
    for (const IntVec& cv : coroots_) {
      const IntVec image = s.apply(cv);
      bool found = false;
      for (const IntVec& other : coroots_)
        if (other == image) { found = true; break; }
      if (!found)
        throw std::invalid_argument("RootDatum: reflection does not permute coroots");
    }
  }
}

bool RootDatum::is_semisimple() const { return semisimple_rank() == rank_; }

QuadraticForm::QuadraticForm(Lattice lattice, IntMat upper)
    : lattice_(lattice), upper_(std::move(upper)) {
  if (upper_.rows() != lattice_.rank || upper_.cols() != lattice_.rank)
    throw std::invalid_argument("QuadraticForm: coefficient shape mismatch");
  for (int i = 0; i < upper_.rows(); ++i)
    for (int j = 0; j < i; ++j)
      if (upper_(i, j) != 0)
        throw std::invalid_argument("QuadraticForm: coefficients must be upper triangular");
}

QuadraticForm QuadraticForm::zero(const Lattice& l) {
  return QuadraticForm(l, IntMat::Zero(l.rank, l.rank));
}

Int QuadraticForm::operator()(const IntVec& y) const {
  if (y.size() != lattice_.rank) throw std::invalid_argument("QuadraticForm: rank mismatch");
  return y.dot(upper_ * y);
}

IntMat QuadraticForm::bilinear() const { return upper_ + upper_.transpose(); }

Int QuadraticForm::bilinear(const IntVec& y1, const IntVec& y2) const {
  return y1.dot(bilinear() * y2);
}

QuadraticForm QuadraticForm::operator+(const QuadraticForm& o) const {
  if (!(lattice_ == o.lattice_)) throw std::invalid_argument("QuadraticForm: lattice mismatch");
  return QuadraticForm(lattice_, upper_ + o.upper_);
}

QuadraticForm QuadraticForm::pullback(const LatticeMap& m) const {
  if (m.target.rank != lattice_.rank)
    throw std::invalid_argument("QuadraticForm::pullback: rank mismatch");
  const IntMat gram = m.matrix.transpose() * bilinear() * m.matrix;
  const int n = m.source.rank;
  IntMat up = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    up(i, i) = (*this)(m.matrix.col(i));
    for (int j = i + 1; j < n; ++j) up(i, j) = gram(i, j);
  }
  return QuadraticForm(m.source, up);
}

bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
  return a.lattice_ == b.lattice_ && a.upper_ == b.upper_;
}

LatticeMap weyl_reflection(const RootDatum& rd, int i) {
  if (i < 0 || i >= rd.num_roots())
    throw std::out_of_range("weyl_reflection: root index out of range");
  const IntMat s =
      IntMat::Identity(rd.rank(), rd.rank()) - rd.coroot(i) * rd.root(i).transpose();
  return {rd.y_lattice(), rd.y_lattice(), s};
}

bool is_weyl_invariant(const QuadraticForm& q, const RootDatum& rd) {
  if (!(q.lattice() == rd.y_lattice()))
    throw std::invalid_argument("is_weyl_invariant: lattice mismatch");
  for (int i = 0; i < rd.num_roots(); ++i)
    if (!(q.pullback(weyl_reflection(rd, i)) == q)) return false;
  return true;
}

std::optional<HomExtension> extend_hom(const LatticeMap& p, const LatticeMap& psi) {
  if (psi.source.rank != p.source.rank)
    throw std::invalid_argument("extend_hom: source mismatch");
  if (smith_normal_form(p.matrix).rank() != p.source.rank)
    throw std::invalid_argument("extend_hom: p not injective");

  const IntMat pt = p.matrix.transpose();  // r x n
  const int n = p.target.rank;
  const int m = psi.target.rank;

  IntMat h(m, n);
  IntMat kernel(0, 0);
  for (int row = 0; row < m; ++row) {
    const IntVec b = psi.matrix.row(row).transpose();
    auto sol = solve_integer(pt, b);
    if (!sol) return std::nullopt;
    h.row(row) = sol->particular.transpose();
    if (row == 0) kernel = sol->kernel;
  }
  if (m == 0) kernel = integer_kernel(pt);

  HomExtension ext;
  ext.particular = h;
  for (int k = 0; k < kernel.cols(); ++k) {
    for (int row = 0; row < std::max(m, 1); ++row) {
      IntMat basis = IntMat::Zero(std::max(m, 1), n);
      basis.row(row) = kernel.col(k).transpose();
      if (m > 0) ext.kernel_basis.push_back(basis);
    }
  }
  return ext;
}

std::optional<IntMat> extend_hom_mod(const LatticeMap& p, const LatticeMap& psi, Int m) {
  if (m <= 0) throw std::invalid_argument("extend_hom_mod: modulus must be positive");
  if (psi.source.rank != p.source.rank)
    throw std::invalid_argument("extend_hom_mod: source mismatch");
  const int n = p.target.rank;
  const int r = p.source.rank;
  // h P = psi (mod m)  <=>  [P^T | m I] (h, z)^T = psi^T row by row.
  IntMat aug(r, n + r);
  aug << p.matrix.transpose(), m * IntMat::Identity(r, r);

  IntMat h(psi.target.rank, n);
  for (int row = 0; row < psi.target.rank; ++row) {
    auto sol = solve_integer(aug, psi.matrix.row(row).transpose());
    if (!sol) return std::nullopt;
    h.row(row) = sol->particular.head(n).transpose();
  }
  return h;
}

}  // namespace bdk2
