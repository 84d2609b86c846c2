#include "fibfact/bigint.hpp"

#include "fibfact/errors.hpp"

namespace fibfact {

BigInt isqrt(const BigInt& x) {
  if (x < 0) throw PreconditionViolated("isqrt: negative input");
  if (x < 2) return x;
  // Start strictly above the root, then Newton steps decrease monotonically
  // until they settle on the floor.
  const unsigned bits = boost::multiprecision::msb(x);
  BigInt guess = BigInt(1) << (bits / 2 + 1);
  for (;;) {
    BigInt next = (guess + x / guess) >> 1;
    if (next >= guess) break;
    guess = next;
  }
  return guess;
}

BigInt floor_sqrt5(const BigInt& n) {
  if (n < 0) throw PreconditionViolated("floor_sqrt5: negative input");
  return isqrt(5 * n * n);
}

BigInt floor_phi(const BigInt& n) {
  if (n < 0) throw PreconditionViolated("floor_phi: negative input");
  return (n + floor_sqrt5(n)) / 2;
}

}  // namespace fibfact
