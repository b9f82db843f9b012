#pragma once

// Eigenvalue discovery over Q(L) by specialization. L is set to a few small
// rationals, the rational roots of each specialized characteristic polynomial
// are found exactly, and every root r at L = p is lifted to guesses
// r * (L/p)^k. A guess survives only if it is a root at every other
// specialization point and A - theta*I has a nonzero kernel over Q(L).
// Eigenvalues outside this family are simply not produced; callers detect the
// gap by a dimension count.

#include <vector>

#include "homlie/linalg.hpp"

namespace homlie {

/// Characteristic polynomial det(tI - A) of a rational matrix, as a Poly in t.
Poly characteristic_polynomial(const Matrix& a);

/// Distinct rational roots of a nonzero polynomial, ascending.
std::vector<Rational> rational_roots(const Poly& p);

/// Simplest rational (smallest denominator, then numerator) in [lo, hi].
Rational simplest_rational_between(Rational lo, Rational hi);

/// Exact eigenvalues of A found by the specialization heuristic.
std::vector<Scalar> eigenvalue_candidates(const Matrix& a);

/// Common eigenvalues of several matrices are not tracked; this is kernel(A - theta I).
Subspace eigenspace(const Matrix& a, const Scalar& theta);

}  // namespace homlie
