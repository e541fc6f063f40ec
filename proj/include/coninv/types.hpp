#pragma once

#include <complex>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace coninv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;
using Rng = std::mt19937_64;

/// Numerical policy shared by every operation.
///
/// residual_rel  relative threshold for identity residuals (certificates,
///               predicates, inverse checks)
/// eig_cluster   radius for grouping eigenvalues and matching spectra
/// rank_cut      relative singular value cutoff for numerical rank and
///               invertibility gates
/// max_retries   budget for the randomized constructions
struct Tolerance {
  double residual_rel = 1e-9;
  double eig_cluster = 1e-7;
  double rank_cut = 1e-10;
  int max_retries = 32;

  void validate() const {
    if (!(residual_rel > 0) || !(eig_cluster > 0) || !(rank_cut > 0))
      throw std::invalid_argument("coninv::Tolerance: thresholds must be positive");
    if (max_retries < 1)
      throw std::invalid_argument("coninv::Tolerance: max_retries must be >= 1");
  }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// Linear part (or conjugating element) fails the invertibility gate.
struct SingularMatrixError : Error {
  using Error::Error;
};

// Ambiguous numerical rank, borderline spectra, chain breakdown: the input
// sits too close to a structure boundary to classify at the requested cuts.
struct IllConditionedInput : Error {
  using Error::Error;
};

struct NotUnipotent : Error {
  using Error::Error;
};

struct NotConinvolution : Error {
  using Error::Error;
};

// Requested a two-coninvolution decomposition of a map whose linear part is
// not conjugate to its conjugate inverse; no such decomposition exists.
struct CReversibilityRequired : Error {
  using Error::Error;
};

// Products of coninvolutions have unimodular determinant; inputs without it
// admit no decomposition of any length.
struct DeterminantModulusNotOne : Error {
  using Error::Error;
};

// The supplied linear reverser admits no coninvolutory affine extension.
struct InconsistentReverser : Error {
  using Error::Error;
};

// The supplied consimilarity witness does not expose a two-factor form.
struct WitnessRejected : Error {
  using Error::Error;
};

struct RetriesExhausted : Error {
  using Error::Error;
};

// Spectrum touches the closed negative real axis; the principal branch is
// undefined there.
struct NegativeRealSpectrum : Error {
  using Error::Error;
};

struct EigensolverFailure : Error {
  using Error::Error;
};

}  // namespace coninv
