#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "coninv/certify.hpp"
#include "coninv/factorization.hpp"

namespace coninv {

struct ParseError : Error {
  using Error::Error;
};

/// Instance document: {"version": "1", "n": 2, "A": [[[re,im],...],...],
/// "v": [[re,im],...]}.  "v" is optional and defaults to zeros; every number
/// must be finite.
nlohmann::json instance_to_json(const AffineMap& g);
AffineMap instance_from_json(const nlohmann::json& j);

AffineMap load_instance(const std::string& path);
void save_instance(const AffineMap& g, const std::string& path);

/// Certificate document: input, kind, factors, residual_product,
/// residual_factors, provenance, seed, tolerance.
nlohmann::json certificate_to_json(const FactorizationCertificate& c,
                                   std::uint64_t seed, const Tolerance& tol);
FactorizationCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json tolerance_to_json(const Tolerance& tol);
Tolerance tolerance_from_json(const nlohmann::json& j);

FactorKind factor_kind_from_string(const std::string& s);

}  // namespace coninv
