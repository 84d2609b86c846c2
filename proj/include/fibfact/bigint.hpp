#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fibfact {

/// Arbitrary-precision integer used for all counts and indices.
/// Signed on purpose: the linear-representation matrices have negative
/// entries, so intermediates may dip below zero even though every final
/// count is nonnegative.
using BigInt = boost::multiprecision::cpp_int;

/// Floor of the square root. Newton iteration from above.
/// Postcondition: r*r <= x < (r+1)*(r+1). Throws PreconditionViolated on x < 0.
BigInt isqrt(const BigInt& x);

/// floor(n * sqrt(5)) for n >= 0, exactly: isqrt(5*n*n).
BigInt floor_sqrt5(const BigInt& n);

/// floor(n * phi) for n >= 0, exactly: (n + isqrt(5*n*n)) / 2.
BigInt floor_phi(const BigInt& n);

}  // namespace fibfact
