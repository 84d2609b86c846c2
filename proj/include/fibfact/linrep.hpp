#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fibfact/bigint.hpp"
#include "fibfact/numeration.hpp"

namespace fibfact {

enum class Orientation { forward, reversed };

/// Linear representation of a sequence over canonical digit strings:
/// entry row vector, one square matrix per digit, exit column vector.
/// forward multiplies matrices in reading order (most significant digit
/// first); reversed multiplies them in reverse reading order.
struct LinearRep {
  int dim = 0;
  std::vector<BigInt> entry;
  std::vector<BigInt> exit;
  std::array<std::vector<BigInt>, 2> matrix;  // row-major dim x dim
  Orientation orientation = Orientation::forward;

  bool operator==(const LinearRep&) const = default;
};

BigInt eval(const LinearRep& rep, const CanonicalRep& z);
/// Throws NonCanonicalInput unless z normalizes to a canonical string.
BigInt eval(const LinearRep& rep, const DigitString& z);

/// 4-dimensional forward representation of the 0/1-representation count L.
const LinearRep& berstel_l();

/// 8-dimensional reversed representation of the factorization count V.
const LinearRep& linrep_v();

/// Swaps entry and exit, transposes both matrices, flips the orientation.
/// Evaluates identically on every input; an involution.
LinearRep reverse_convert(const LinearRep& rep);

/// Extension counter behind the V representation, total on digit strings:
/// 0 when the string has a digit above 1 or two adjacent ones, otherwise
/// the factorization count of its value (leading zeros are harmless).
BigInt g_eval(const DigitString& x);

struct IdentityReport {
  static constexpr std::array<const char*, 6> kNames = {
      "e1", "e2", "e3", "e4", "e5", "e6"};
  std::array<bool, 6> pass{};
  bool all() const;
};

/// The six extension identities at a 0/1 string x:
///   e1: g(x01)     = -g(x) + g(x0) + g(x00)
///   e2: g(x0100)   = -g(x) + 2 g(x00) + g(x000)
///   e3: g(x00000)  =  g(x) - g(x0) - 3 g(x00) + 3 g(x000) + g(x0000)
///   e4: g(x010000) = -g(x) - g(x0) + 2 g(x00) + 3 g(x000) + g(x0000)
///   e5: g(x10)     =  g(x1)
///   e6: g(x1000)   =  g(x100)
IdentityReport verify_identities(const DigitString& x);

/// Checks the matrix form of the identities at one digit: the g-vector of
/// x extended by digit i equals matrix(i) times the g-vector of x, where the
/// g-vector lists g at the eight suffix extensions
/// ("", 0, 1, 00, 000, 100, 0000, 10000).
bool verify_vector_recurrence(const DigitString& x, Digit i);

/// Plain-text fixture: "dim orientation", entry row, exit column, then each
/// digit's matrix row-major, one row per line, integers space-separated.
std::string to_fixture(const LinearRep& rep);
LinearRep from_fixture(std::string_view text);

/// Verbatim matrix fixtures the built-in representations must reproduce.
extern const char* const kBerstelLFixture;
extern const char* const kLinrepVFixture;

/// True when both built-in representations serialize exactly to their
/// fixtures and parse back unchanged.
bool transcription_ok();

}  // namespace fibfact
