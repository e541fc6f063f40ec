#pragma once

#include <utility>
#include <vector>

#include "coninv/affine.hpp"
#include "coninv/spectral.hpp"
#include "coninv/types.hpp"

namespace coninv {

/// Witness B for B A B^-1 = conj(A)^-1 at the matrix level.
struct LinearReverser {
  Matrix reverser;
  bool coninvolutory = false;
  double residual_reverse = 0.0;
  double residual_coninv = 0.0;
};

/// Witness h for h g h^-1 = conj(g)^-1 in the affine group.
struct ReverserWitness {
  AffineMap reverser;
  bool coninvolutory = false;
  double residual_reverse = 0.0;
  double residual_coninv = 0.0;
};

/// ||h g h^-1 - conj(g)^-1|| scaled by max(1, size).
double reverse_residual(const AffineMap& h, const AffineMap& g,
                        const Tolerance& tol = {});
double reverse_residual(const Matrix& b, const Matrix& a,
                        const Tolerance& tol = {});

/// A is conjugate to conj(A)^-1 iff its Jordan structure is closed under the
/// block-preserving pairing l -> 1/conj(l).
bool is_c_reversible_matrix(const Matrix& a, const Tolerance& tol = {});

/// Holds iff the linear part is c-reversible; for affine maps this single
/// condition is equivalent to both plain and strong c-reversibility.
bool is_c_reversible_affine(const AffineMap& g, const Tolerance& tol = {});

/// Orthonormal basis of { B : B A = conj(A)^-1 B }, via the Kronecker
/// vectorization of the equation and an SVD nullspace at tol.rank_cut.
/// Empty exactly when A is not c-reversible.
std::vector<Matrix> reverser_space(const Matrix& a, const Tolerance& tol = {});

/// Coninvolutory reverser of a c-reversible matrix.  Draws a random real
/// combination B0 of the reverser space, forms S = conj(B0) B0 (which
/// commutes with A), and corrects B = B0 * S^(-1/2).  Since conj(S) = B0 S
/// B0^-1, the spectrum of S is conjugation-symmetric and the principal
/// inverse square root is a real-coefficient polynomial in S, which makes
/// B conj(B) = conj(S) conj(S^-1) = I.  Redraws on a spectrum touching the
/// negative real axis, at most tol.max_retries times.
LinearReverser coninvolutory_reverser(const Matrix& a, Rng& rng,
                                      const Tolerance& tol = {});

/// Extends a coninvolutory linear reverser B of A to an affine reverser
/// (B, w) of g = (A, v): solves (conj(A)^-1 - I) w = B v + conj(A)^-1 conj(v)
/// (least squares plus a consistency check when singular) and symmetrizes
/// w <- (w - B conj(w))/2 so that B conj(w) + w = 0.
ReverserWitness affine_reverser(const AffineMap& g, const Matrix& b,
                                const Tolerance& tol = {});

/// conj(k) h k^-1 reverses k g k^-1 and stays coninvolutory if h was.
ReverserWitness transport_reverser(const AffineMap& k, const ReverserWitness& h,
                                   const Tolerance& tol = {});

/// Same, re-measuring the reversal residual against k g k^-1 for the
/// element g that h reverses.
ReverserWitness transport_reverser(const AffineMap& k, const ReverserWitness& h,
                                   const AffineMap& g, const Tolerance& tol = {});

/// Splits g = (h^-1) (conj(g)^-1 h); both factors are coninvolutions when h
/// is a coninvolutory reverser of g.
std::pair<AffineMap, AffineMap> pair_from_reverser(const AffineMap& g,
                                                   const ReverserWitness& h,
                                                   const Tolerance& tol = {});

}  // namespace coninv
