#include "coninv/affine.hpp"

#include <algorithm>
#include <cmath>

namespace coninv {

namespace {

void require_same_dim(const AffineMap& f, const AffineMap& g, const char* who) {
  if (f.dim() != g.dim())
    throw DimensionMismatch(std::string(who) + ": dimensions " +
                            std::to_string(f.dim()) + " and " +
                            std::to_string(g.dim()) + " differ");
}

bool all_finite(const Matrix& m) {
  return m.array().real().isFinite().all() && m.array().imag().isFinite().all();
}

}  // namespace

AffineMap::AffineMap(Matrix a, Vector v)
    : linear(std::move(a)), translation(std::move(v)) {
  if (linear.rows() != linear.cols())
    throw DimensionMismatch("coninv::AffineMap: linear part must be square");
  if (linear.rows() < 1)
    throw DimensionMismatch("coninv::AffineMap: dimension must be positive");
  if (translation.size() != linear.rows())
    throw DimensionMismatch("coninv::AffineMap: translation length " +
                            std::to_string(translation.size()) +
                            " does not match dimension " +
                            std::to_string(linear.rows()));
  if (!all_finite(linear) || !all_finite(translation))
    throw Error("coninv::AffineMap: entries must be finite");
}

AffineMap AffineMap::identity(Index n) {
  return AffineMap(Matrix::Identity(n, n), Vector::Zero(n));
}

double frobenius(const Matrix& m) { return m.norm(); }

double affine_norm(const AffineMap& g) {
  return g.linear.norm() + g.translation.norm();
}

double affine_residual(const AffineMap& f, const AffineMap& ref) {
  const double diff =
      (f.linear - ref.linear).norm() + (f.translation - ref.translation).norm();
  return diff / std::max(1.0, affine_norm(ref));
}

double matrix_residual(const Matrix& m, const Matrix& ref) {
  return (m - ref).norm() / std::max(1.0, ref.norm());
}

Matrix invert_checked(const Matrix& a, const Tolerance& tol) {
  tol.validate();
  if (a.rows() != a.cols())
    throw DimensionMismatch("coninv::invert_checked: matrix must be square");
  if (a.rows() == 0) return a;
  Eigen::FullPivLU<Matrix> lu(a);
  const double rc = lu.rcond();
  if (!lu.isInvertible() || !(rc > tol.rank_cut))
    throw SingularMatrixError(
        "coninv::invert_checked: reciprocal condition estimate " +
        std::to_string(rc) + " below cutoff");
  return lu.inverse();
}

double det_modulus(const Matrix& a) {
  if (a.rows() == 0) return 1.0;
  return std::abs(Eigen::FullPivLU<Matrix>(a).determinant());
}

AffineMap affine_compose(const AffineMap& f, const AffineMap& g) {
  require_same_dim(f, g, "coninv::affine_compose");
  return AffineMap(f.linear * g.linear, f.linear * g.translation + f.translation);
}

AffineMap affine_inverse(const AffineMap& g, const Tolerance& tol) {
  const Matrix inv = invert_checked(g.linear, tol);
  return AffineMap(inv, -(inv * g.translation));
}

AffineMap affine_conj(const AffineMap& g) {
  return AffineMap(g.linear.conjugate(), g.translation.conjugate());
}

Matrix homogeneous_embed(const AffineMap& g) {
  const Index n = g.dim();
  Matrix m = Matrix::Zero(n + 1, n + 1);
  m.topLeftCorner(n, n) = g.linear;
  m.topRightCorner(n, 1) = g.translation;
  m(n, n) = Complex(1, 0);
  return m;
}

AffineMap group_conjugate(const AffineMap& k, const AffineMap& g,
                          const Tolerance& tol) {
  require_same_dim(k, g, "coninv::group_conjugate");
  return affine_compose(affine_compose(k, g), affine_inverse(k, tol));
}

AffineMap consimilarity_transform(const AffineMap& k, const AffineMap& g,
                                  const Tolerance& tol) {
  require_same_dim(k, g, "coninv::consimilarity_transform");
  return affine_compose(affine_compose(k, g), affine_inverse(affine_conj(k), tol));
}

ConinvolutionCheck is_coninvolution(const AffineMap& g, const Tolerance& tol) {
  tol.validate();
  const Matrix& a = g.linear;
  const Vector& v = g.translation;
  const double na = a.norm();
  const double nv = v.norm();
  ConinvolutionCheck out;
  out.residual_linear = (a * a.conjugate() - Matrix::Identity(g.dim(), g.dim())).norm() /
                        std::max(1.0, na * na);
  out.residual_translation =
      (a * v.conjugate() + v).norm() / std::max(1.0, na * nv);
  out.value = out.residual_linear <= tol.residual_rel &&
              out.residual_translation <= tol.residual_rel;
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  if (a.rows() > 0) m.topLeftCorner(a.rows(), a.cols()) = a;
  if (b.rows() > 0) m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

AffineMap direct_sum(const AffineMap& f, const AffineMap& g) {
  Vector v(f.dim() + g.dim());
  v << f.translation, g.translation;
  return AffineMap(direct_sum(f.linear, g.linear), v);
}

}  // namespace coninv
