#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coninv/factorization.hpp"

namespace coninv {

struct InstanceSpec {
  enum class Kind {
    coninvolution,
    c_reversible,
    unipotent_affine,
    unimodular_det,
    general,
  };
  Kind kind = Kind::general;
  int dim = 1;
  std::uint64_t seed = 0;
  double cond_cap = 1e3;
};

struct VerificationCheck {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool pass() const;
  std::string summary() const;
};

/// Recomputes every residual of a certificate from scratch using only the
/// group primitives: each factor must be a coninvolution and the ordered
/// product must reproduce the input.
VerificationReport verify_certificate(const FactorizationCertificate& c,
                                      const Tolerance& tol = {});

// --- seeded instance generators -------------------------------------------

double random_unit_interval(Rng& rng);
Complex random_unimodular(Rng& rng);
Complex random_gaussian_complex(Rng& rng);
Vector random_vector(Rng& rng, Index n);

/// Random invertible matrix with condition number at most cond_cap,
/// built as U diag(s) V* with log-uniform singular values.
Matrix random_well_conditioned(Rng& rng, Index n, double cond_cap = 1e3);

AffineMap random_affine(Rng& rng, Index n, double cond_cap = 1e3);

/// h conj(h)^-1 for a random well-conditioned h; always a coninvolution.
AffineMap random_coninvolution(Rng& rng, Index n, double cond_cap = 1e3);

/// Paired Jordan data: blocks (l, m) together with (1/conj(l), m), plus
/// self-paired unimodular blocks, conjugated by a random well-conditioned
/// similarity.  Always c-reversible.
Matrix random_c_reversible(Rng& rng, Index n, double cond_cap = 1e3);

/// Random unipotent matrix with Jordan blocks of size at most max_block.
Matrix random_unipotent(Rng& rng, Index n, int max_block, double cond_cap = 1e3);
AffineMap random_unipotent_affine(Rng& rng, Index n, int max_block,
                                  double cond_cap = 1e3);

/// Random matrix rescaled to |det| = 1 (to round-off).
Matrix random_unimodular_det(Rng& rng, Index n);

/// Unimodular-determinant matrix that is not c-reversible (redraws until the
/// spectrum fails the pairing test); requires n >= 2.
Matrix random_non_c_reversible_unimodular(Rng& rng, Index n,
                                          const Tolerance& tol = {});

/// Dispatch on InstanceSpec (matrix kinds get a zero translation).
AffineMap generate_instance(const InstanceSpec& spec);

// --- closed-form and search oracles ---------------------------------------

struct Dim1Facts {
  bool coninvolution = false;
  bool c_reversible = false;
};

/// Exact closed forms at n = 1: (a, v) is a coninvolution iff |a| = 1 and
/// a conj(v) + v = 0; it is c-reversible iff |a| = 1.
Dim1Facts oracle_dim1(const AffineMap& g, const Tolerance& tol = {});

/// One-sided randomized search for k with k A = B conj(k), k invertible:
/// least squares on the real form of the equation plus random combinations
/// of the near-null directions.  True means a witness was found; false only
/// means none was found within the budget.
bool oracle_consimilar_2x2(const Matrix& a, const Matrix& b, int budget,
                           Rng& rng, const Tolerance& tol = {});

}  // namespace coninv
