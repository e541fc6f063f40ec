#pragma once

#include <utility>

#include "coninv/types.hpp"

namespace coninv {

/// Invertible affine transformation x -> Ax + v of C^n.
struct AffineMap {
  Matrix linear;
  Vector translation;

  AffineMap() = default;
  AffineMap(Matrix a, Vector v);

  static AffineMap identity(Index n);

  Index dim() const { return linear.rows(); }

  Vector operator()(const Vector& x) const { return linear * x + translation; }
};

double frobenius(const Matrix& m);

/// ||A||_F + ||v||_2, the size used by every scaled residual.
double affine_norm(const AffineMap& g);

/// Distance between two maps relative to max(1, size of the reference).
double affine_residual(const AffineMap& f, const AffineMap& ref);
double matrix_residual(const Matrix& m, const Matrix& ref);

/// Inverse through a pivoted LU with a reciprocal-condition gate; throws
/// SingularMatrixError below tol.rank_cut.
Matrix invert_checked(const Matrix& a, const Tolerance& tol = {});

double det_modulus(const Matrix& a);

/// Composition f o g, i.e. apply g first: (A_f A_g, A_f v_g + v_f).
AffineMap affine_compose(const AffineMap& f, const AffineMap& g);

AffineMap affine_inverse(const AffineMap& g, const Tolerance& tol = {});

/// Entrywise complex conjugation; a group automorphism of order two.
AffineMap affine_conj(const AffineMap& g);

/// (n+1)x(n+1) block matrix [[A, v], [0, 1]]; a group homomorphism.
Matrix homogeneous_embed(const AffineMap& g);

/// k g k^-1.
AffineMap group_conjugate(const AffineMap& k, const AffineMap& g,
                          const Tolerance& tol = {});

/// k g conj(k)^-1; preserves coninvolutions, unlike plain conjugation.
AffineMap consimilarity_transform(const AffineMap& k, const AffineMap& g,
                                  const Tolerance& tol = {});

struct ConinvolutionCheck {
  bool value = false;
  double residual_linear = 0.0;
  double residual_translation = 0.0;
};

/// Tests g conj(g) = identity, i.e. A conj(A) = I and A conj(v) + v = 0,
/// with residuals scaled by max(1, operand sizes).
ConinvolutionCheck is_coninvolution(const AffineMap& g, const Tolerance& tol = {});

Matrix direct_sum(const Matrix& a, const Matrix& b);
AffineMap direct_sum(const AffineMap& f, const AffineMap& g);

}  // namespace coninv
