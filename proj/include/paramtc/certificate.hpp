#pragma once

#include <cstdint>
#include <string>

#include "paramtc/bounds.hpp"

namespace paramtc {

/* Stable machine-readable certificate format (schema 1):
 *
 * {
 *   "schema": 1,
 *   "n": ..., "m": ..., "k": ...,
 *   "lower_bound": ..., "upper_bound": ..., "tc_exact": ...,
 *   "factors": ["w(2,3) - w'(2,3)", ...],
 *   "witness": {"monomial": "w(1,2)*...", "coefficient": ...},
 *   "basis_dims": [1, 5, 8, 4],
 *   "elapsed_ms": ...
 * }
 *
 * Factors and the witness use the expression grammar, so the file can be
 * re-evaluated; basis_dims lists the fibre-product ranks per grade. */

std::string certificate_to_json(const TcCertificate& cert, std::int64_t elapsed_ms);

/* Re-parses a schema-1 certificate; elapsed_ms and basis_dims are
 * informational and ignored on input. */
TcCertificate certificate_from_json(const std::string& text);

}  // namespace paramtc
