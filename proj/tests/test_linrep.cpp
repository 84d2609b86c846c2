#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fibfact/counting.hpp"
#include "fibfact/enumeration.hpp"
#include "fibfact/errors.hpp"
#include "fibfact/linrep.hpp"
#include "test_support.hpp"

using namespace fibfact;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("built-in representations match their fixtures") {
  CHECK(transcription_ok());
  CHECK(to_fixture(berstel_l()) == kBerstelLFixture);
  CHECK(to_fixture(linrep_v()) == kLinrepVFixture);
  CHECK(from_fixture(kBerstelLFixture) == berstel_l());
  CHECK(from_fixture(kLinrepVFixture) == linrep_v());
}

TEST_CASE("data files carry the same fixtures") {
  const std::string dir = FIBFACT_DATA_DIR;
  CHECK(slurp(dir + "/berstel_l.txt") == kBerstelLFixture);
  CHECK(slurp(dir + "/linrep_v.txt") == kLinrepVFixture);
}

TEST_CASE("representation-count evaluation worked examples") {
  const LinearRep& l = berstel_l();
  CHECK(eval(l, to_canonical(0)) == 1);
  CHECK(eval(l, DigitString::parse("100100")) == 4);
  CHECK(eval(l, DigitString::parse("100001")) == 3);
}

TEST_CASE("factorization-count evaluation worked examples") {
  const LinearRep& v = linrep_v();
  CHECK(eval(v, to_canonical(0)) == 1);
  CHECK(eval(v, DigitString::parse("1")) == 1);
  CHECK(eval(v, DigitString::parse("10")) == 1);
  CHECK(eval(v, DigitString::parse("100")) == 2);
  CHECK(eval(v, DigitString::parse("100100")) == 7);
}

TEST_CASE("evaluation rejects non-canonical strings") {
  CHECK_THROWS_AS(eval(berstel_l(), DigitString::parse("11")),
                  NonCanonicalInput);
  CHECK_THROWS_AS(eval(linrep_v(), DigitString::parse("201")),
                  NonCanonicalInput);
  // leading zeros normalize away, so they are accepted
  CHECK(eval(linrep_v(), DigitString::parse("00100")) == 2);
}

TEST_CASE("representation count agrees with legal enumeration") {
  for (std::uint64_t n = 0; n <= 400; ++n)
    CHECK(eval(berstel_l(), to_canonical(n)) ==
          BigInt(enumerate_legal(n).size()));
}

TEST_CASE("factorization count agrees with the closed form") {
  for (std::uint64_t n = 0; n <= 2000; ++n)
    CHECK(eval(linrep_v(), to_canonical(n)) == v_closed_form(n));
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const BigInt n = BigInt(rng()) % BigInt("1000000000000000");
    CHECK(eval(linrep_v(), to_canonical(n)) == v_closed_form(n));
  }
}

TEST_CASE("orientation conversion is an involution preserving values") {
  for (const LinearRep* rep : {&berstel_l(), &linrep_v()}) {
    const LinearRep flipped = reverse_convert(*rep);
    CHECK(flipped.orientation != rep->orientation);
    CHECK(reverse_convert(flipped) == *rep);
    for (std::uint64_t n = 0; n <= 200; ++n)
      CHECK(eval(flipped, to_canonical(n)) == eval(*rep, to_canonical(n)));
  }
}

TEST_CASE("extension counter values") {
  CHECK(g_eval(DigitString::parse("100100")) == 7);
  CHECK(g_eval(DigitString::parse("11")) == 0);
  CHECK(g_eval(DigitString::parse("2")) == 0);
  CHECK(g_eval(DigitString{}) == 1);
  // leading zeros do not zero the count
  CHECK(g_eval(DigitString::parse("010")) == 1);
  CHECK(g_eval(DigitString::parse("0100")) == 2);
}

TEST_CASE("extension identities hold on all short 0/1 strings") {
  CHECK(verify_identities(DigitString{}).all());
  for (int len = 1; len <= 8; ++len) {
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::vector<Digit> digits(len);
      for (int i = 0; i < len; ++i)
        digits[i] = static_cast<Digit>((bits >> (len - 1 - i)) & 1);
      const DigitString x{std::move(digits)};
      const IdentityReport report = verify_identities(x);
      INFO("x=", x.str());
      CHECK(report.all());
      CHECK(verify_vector_recurrence(x, 0));
      CHECK(verify_vector_recurrence(x, 1));
    }
  }
}

TEST_CASE("fixture parser round-trips and rejects trash") {
  const LinearRep& rep = linrep_v();
  CHECK(from_fixture(to_fixture(rep)) == rep);
  CHECK_THROWS_AS(from_fixture("3 sideways\n1 0 0\n"), PreconditionViolated);
  CHECK_THROWS_AS(from_fixture(""), PreconditionViolated);
}
