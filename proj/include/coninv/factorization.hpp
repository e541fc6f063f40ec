#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coninv/reversibility.hpp"

namespace coninv {

/// Explicit coninvolutory reverser of the nilpotent shear generator:
/// B = diag(e_1 a, ..., e_n a) with alternating signs e_k = (-1)^(k+1) and a
/// unimodular, w shifted one slot.  Satisfies, exactly,
///   B N B^-1 = -conj(N),  B conj(B) = I,
///   B x + conj(x) = -conj(N) w,  B conj(w) + w = 0
/// for N the n x n nilpotent Jordan block.
struct AdjointWitness {
  Matrix b;
  Vector w;
  Complex a;
  std::vector<int> signs;
};

AdjointWitness adjoint_witness(Index n, const Vector& x);

enum class FactorKind { two, three, four };

/// Ordered coninvolution factors together with recomputed residuals of every
/// defining identity; verifiable independently of the producing pipeline.
struct FactorizationCertificate {
  AffineMap input;
  std::vector<AffineMap> factors;
  FactorKind kind = FactorKind::two;
  double residual_product = 0.0;
  std::vector<double> residual_factors;
  std::vector<std::string> provenance;
};

struct NormalForm {
  AffineMap k;     // k g k^-1 = (t_block (+) u_block, 0 (+) v_u)
  Matrix t_block;  // no eigenvalue 1
  Matrix u_block;  // unipotent
  Vector v_u;
};

/// Conjugates g so the linear part splits at eigenvalue 1 and the
/// translation vanishes on the non-unipotent block.
NormalForm normal_form(const AffineMap& g, const Tolerance& tol = {});

/// Strong reverser of (U, v) for unipotent U: Jordan-chain basis, per block
/// the affine exponential exp(N, x) of the nilpotent generator with
/// x = C^-1 B_m^-1 v_block, reversed by the adjoint witness, transported
/// back through all conjugations.
ReverserWitness strong_reverser_unipotent(const Matrix& u, const Vector& v,
                                          const Tolerance& tol = {});

/// Two coninvolution factors for (U, v), U unipotent.
FactorizationCertificate two_factor_unipotent(const Matrix& u, const Vector& v,
                                              const Tolerance& tol = {});

/// Coninvolutory reverser of a general c-reversible affine map: normal form,
/// block-diagonal reverser (random correction on the non-unipotent block,
/// adjoint witness on the unipotent one), transported back.
ReverserWitness strong_reverser(const AffineMap& g, Rng& rng,
                                const Tolerance& tol = {});

/// g = g1 g2 with both factors coninvolutions; exists iff the linear part is
/// c-reversible (throws CReversibilityRequired otherwise).
FactorizationCertificate two_factor(const AffineMap& g, Rng& rng,
                                    const Tolerance& tol = {});

/// Con-square-root of a coninvolution: h with h conj(h)^-1 = g, built as
/// h = (mu A + conj(mu) I, v/2) for a random unimodular mu keeping the
/// linear part invertible (at most n bad directions exist).
AffineMap con_sqrt(const AffineMap& g, Rng& rng, const Tolerance& tol = {});

/// Three coninvolution factors from a consimilarity witness k such that
/// k g conj(k)^-1 is c-reversible:
///   g = (k^-1 g1 conj(k)) (conj(k)^-1 g2 k) (k^-1 conj(k)),
/// where g1 g2 = k g conj(k)^-1.  The first two factors are consimilarity
/// transports of coninvolutions and the last is a coninvolution by k^-1
/// conj(k) conj(k)^-1 k = e.
FactorizationCertificate three_factor_with_witness(const AffineMap& g,
                                                   const AffineMap& k, Rng& rng,
                                                   const Tolerance& tol = {});

/// Nonsingular consimilarity test: A ~ B under k . conj(k)^-1 iff
/// A conj(A) is similar to B conj(B).
bool are_consimilar(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

struct PrescribedProduct {
  Matrix x;
  Matrix y;
  // Effective prescriptions; equal to the inputs unless a scalar sub-block
  // forced a resample.
  std::vector<Complex> x_spectrum;
  std::vector<Complex> y_spectrum;
};

/// T = X Y with spectrum(X) and spectrum(Y) prescribed, for invertible
/// nonscalar T with prod(betas_i gammas_i) = det T.  Recursive: move the
/// leading entry of a similar matrix to beta_1 gamma_1, peel triangular
/// factors, recurse on the Schur complement.  Scalar sub-blocks are split
/// diagonally with freshly drawn distinct prescriptions.
PrescribedProduct prescribed_spectrum_product(const Matrix& t,
                                              std::vector<Complex> betas,
                                              std::vector<Complex> gammas,
                                              Rng& rng, const Tolerance& tol = {});

/// T = X Y with both factors c-reversible, for |det T| = 1.  Already
/// c-reversible (or scalar unimodular) inputs return (T, I); otherwise the
/// factors carry distinct unimodular spectra, which makes them
/// diagonalizable with self-paired eigenvalues.
std::pair<Matrix, Matrix> c_reversible_split(const Matrix& t, Rng& rng,
                                             const Tolerance& tol = {});

/// At most four coninvolution factors for any g with |det L(g)| = 1
/// (throws DeterminantModulusNotOne otherwise).  Emits a two-factor
/// certificate whenever g is already c-reversible.
FactorizationCertificate four_factor(const AffineMap& g, Rng& rng,
                                     const Tolerance& tol = {});

const char* factor_kind_name(FactorKind kind);

}  // namespace coninv
