#pragma once

#include "hurwitz/factorization.hpp"
#include "hurwitz/graph.hpp"

namespace hurwitz {

/// A factorization plus a certificate carrying the input onto it:
/// apply_certificate(input, certificate) == canonical.
struct CanonicalResult {
  Factorization canonical;
  MoveCertificate certificate;
};

/// Decides Hurwitz equivalence of two identity factorizations by comparing
/// signatures. Throws PreconditionError on unequal degree or length, or
/// when either product is not the identity.
bool hurwitz_equivalent(const Factorization &f1, const Factorization &f2);

/// Brings (v1 v2) to slot 0. Requires every factor to be a transposition and
/// the factor graph to be a single connected component containing v1 and v2.
CanonicalResult pull_edge_to_front(const Factorization &f, Point v1, Point v2);

/// Identity factors first, then one contiguous block per component ordered
/// by minimal vertex. Relative order inside a block is kept. Requires an
/// identity product.
CanonicalResult group_components(const Factorization &f);

/// The canonical representative of f's Hurwitz class:
///
///   e^c  B_1 B_2 ... B_d
///
/// where, for a component with ascending vertices v1 < ... < vl and weight w,
///
///   B = (v1 v2)^2 (v2 v3)^2 ... (v_{l-1} v_l)^2 (v1 v2)^{w - 2(l-1)}.
///
/// Throws PreconditionError when the product is not the identity.
CanonicalResult canonical_form(const Factorization &f);

/// The canonical factorization of a signature, built directly. Throws
/// PreconditionError when a component's weight is odd or below 2(l-1).
Factorization canonical_from_signature(const ComponentSignature &sig);

} // namespace hurwitz
