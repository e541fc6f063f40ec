#pragma once

#include <vector>

#include "coninv/affine.hpp"
#include "coninv/types.hpp"

namespace coninv {

Matrix jordan_block(Complex lambda, Index m);

/// Eigenvalues with multiplicity (backward-stable dense solver).
std::vector<Complex> eigenvalues(const Matrix& a, const Tolerance& tol = {});

struct EigenCluster {
  Complex representative;  // mean of the members
  int multiplicity = 0;
  std::vector<int> members;  // indices into the input list
};

/// Single-linkage clustering at the given radius.  Deterministic: input is
/// sorted by (re, im) before linking and clusters are sorted the same way.
std::vector<EigenCluster> cluster_with_radius(const std::vector<Complex>& eigs,
                                              double radius);

/// Fixed-radius clustering at tol.eig_cluster.
std::vector<EigenCluster> cluster(const std::vector<Complex>& eigs,
                                  const Tolerance& tol = {});

struct RankResult {
  int rank = 0;
  bool ambiguous = false;  // a singular value within 10x of the cut
};

/// Count of singular values above tol.rank_cut * sigma_max.
RankResult numerical_rank(const Matrix& m, const Tolerance& tol = {});

struct JordanCluster {
  Complex eigenvalue;
  std::vector<int> blocks;  // non-increasing block sizes
  int multiplicity() const;
};

struct JordanStructure {
  std::vector<JordanCluster> clusters;
  Index dimension() const;
};

/// Segre characteristics from rank sequences: for each eigenvalue cluster
/// representative l, the kernels of (A - l I)^k determine the block sizes.
///
/// The linkage radius is chosen adaptively: defective eigenvalues scatter by
/// roughly eps^(1/m) under round-off, far beyond any fixed radius, while the
/// cluster mean stays accurate to machine order.  Candidate radii are tried
/// from coarse to fine and the first whose clusters all produce a consistent
/// rank sequence wins.  Ambiguous ranks (singular values straddling the cut)
/// are reported as IllConditionedInput, never guessed.
JordanStructure jordan_structure(const Matrix& a, const Tolerance& tol = {});

/// Equality of Jordan structures under cluster pairing within tol.eig_cluster.
bool are_similar(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

struct SplitAtOne {
  Matrix p;        // invertible, p a p^-1 = t_block (+) u_block
  Matrix t_block;  // spectrum away from 1
  Matrix u_block;  // all eigenvalues 1
  Index dim_t = 0;
  Index dim_u = 0;
};

/// Decouples the eigenvalue-1 part: Schur form, unitary reordering of the
/// eigenvalue-1 cluster to the bottom, then one Sylvester solve to zero the
/// coupling block.  Eigenvalues within tol.eig_cluster of 1 that do not
/// belong to the unipotent cluster are a borderline-spectrum error.
SplitAtOne split_at_one(const Matrix& a, const Tolerance& tol = {});

/// Solves A X - X B = C by Kronecker vectorization (unique when the spectra
/// of A and B are disjoint).
Matrix solve_sylvester(const Matrix& a, const Matrix& b, const Matrix& c,
                       const Tolerance& tol = {});

Matrix kron(const Matrix& a, const Matrix& b);

/// Nilpotent logarithm of a unipotent matrix: the finite alternating series
/// in (U - I).  exp(result) reproduces U.
Matrix unipotent_log(const Matrix& u, const Tolerance& tol = {});

/// exp of a nilpotent matrix (finite series).
Matrix nilpotent_exp(const Matrix& n, const Tolerance& tol = {});

/// C = I + N/2! + N^2/3! + ... + N^(n-1)/n!, the invertible translation
/// factor of the affine exponential.
Matrix exp_translation_factor(const Matrix& n);

/// exp(N, x) = (exp N, C x) for nilpotent N.
AffineMap affine_exp(const Matrix& n, const Vector& x, const Tolerance& tol = {});

struct InvSqrtResult {
  Matrix value;
  /// True when the spectrum is closed under conjugation with matching block
  /// structure, so the interpolating polynomial of the primary function has
  /// real coefficients and conj(f(S)) = f(conj(S)).
  bool real_coefficients = false;
};

/// Principal S^(-1/2) as a primary matrix function (Schur-based, triangular
/// square-root recurrence).  Throws NegativeRealSpectrum when an eigenvalue
/// sits within tol.eig_cluster of the closed negative real axis.
InvSqrtResult principal_inv_sqrt(const Matrix& s, const Tolerance& tol = {});

}  // namespace coninv
