#include "fibfact/linrep.hpp"

#include <sstream>

#include "fibfact/counting.hpp"
#include "fibfact/errors.hpp"

namespace fibfact {

namespace {

std::vector<BigInt> row_times_matrix(const std::vector<BigInt>& row,
                                     const std::vector<BigInt>& m, int dim) {
  std::vector<BigInt> out(dim, 0);
  for (int i = 0; i < dim; ++i) {
    if (row[i] == 0) continue;
    for (int j = 0; j < dim; ++j) out[j] += row[i] * m[i * dim + j];
  }
  return out;
}

LinearRep make_rep(int dim, Orientation orientation,
                   std::vector<int> entry, std::vector<int> exit,
                   std::vector<int> m0, std::vector<int> m1) {
  LinearRep rep;
  rep.dim = dim;
  rep.orientation = orientation;
  rep.entry.assign(entry.begin(), entry.end());
  rep.exit.assign(exit.begin(), exit.end());
  rep.matrix[0].assign(m0.begin(), m0.end());
  rep.matrix[1].assign(m1.begin(), m1.end());
  return rep;
}

}  // namespace

BigInt eval(const LinearRep& rep, const CanonicalRep& z) {
  std::vector<BigInt> acc = rep.entry;
  const auto& digits = z.digits().digits();
  if (rep.orientation == Orientation::forward) {
    for (auto it = digits.begin(); it != digits.end(); ++it)
      acc = row_times_matrix(acc, rep.matrix[*it], rep.dim);
  } else {
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
      acc = row_times_matrix(acc, rep.matrix[*it], rep.dim);
  }
  BigInt out = 0;
  for (int i = 0; i < rep.dim; ++i) out += acc[i] * rep.exit[i];
  return out;
}

BigInt eval(const LinearRep& rep, const DigitString& z) {
  const DigitString norm = z.normalized();
  if (!is_canonical(norm)) throw NonCanonicalInput(z.str());
  return eval(rep, CanonicalRep(norm));
}

const LinearRep& berstel_l() {
  static const LinearRep rep = make_rep(
      4, Orientation::forward,
      {1, 0, 0, 0},
      {1, 0, 0, 1},
      {1, 0, 0, 0,
       0, 0, 1, 0,
       1, 1, 0, 0,
       1, 0, 0, 0},
      {0, 1, 0, 1,
       0, 0, 0, 0,
       0, 1, 0, 0,
       0, 0, 0, 0});
  return rep;
}

const LinearRep& linrep_v() {
  static const LinearRep rep = make_rep(
      8, Orientation::reversed,
      {1, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 1, 1, 1, 2, 1, 4},
      { 0,  1,  0,  0,  0,  0,  0,  0,
        0,  0,  0,  1,  0,  0,  0,  0,
       -1,  1,  0,  1,  0,  0,  0,  0,
        0,  0,  0,  0,  1,  0,  0,  0,
        0,  0,  0,  0,  0,  0,  1,  0,
       -1,  0,  0,  2,  1,  0,  0,  0,
        1, -1,  0, -3,  3,  0,  1,  0,
       -1, -1,  0,  2,  3,  0,  1,  0},
      { 0,  0,  1,  0,  0,  0,  0,  0,
        0,  0,  1,  0,  0,  0,  0,  0,
        0,  0,  0,  0,  0,  0,  0,  0,
        0,  0,  0,  0,  0,  1,  0,  0,
        0,  0,  0,  0,  0,  1,  0,  0,
        0,  0,  0,  0,  0,  0,  0,  0,
        0,  0,  0,  0,  0,  0,  0,  1,
        0,  0,  0,  0,  0,  0,  0,  0});
  return rep;
}

LinearRep reverse_convert(const LinearRep& rep) {
  LinearRep out;
  out.dim = rep.dim;
  out.orientation = rep.orientation == Orientation::forward
                        ? Orientation::reversed
                        : Orientation::forward;
  out.entry = rep.exit;
  out.exit = rep.entry;
  for (int d = 0; d < 2; ++d) {
    out.matrix[d].assign(rep.dim * rep.dim, 0);
    for (int i = 0; i < rep.dim; ++i)
      for (int j = 0; j < rep.dim; ++j)
        out.matrix[d][j * rep.dim + i] = rep.matrix[d][i * rep.dim + j];
  }
  return out;
}

BigInt g_eval(const DigitString& x) {
  const auto& digits = x.digits();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] > 1) return 0;
    if (i + 1 < digits.size() && digits[i] == 1 && digits[i + 1] == 1)
      return 0;
  }
  return v_closed_form(value(x));
}

namespace {

BigInt g_ext(const DigitString& x, std::string_view suffix) {
  std::vector<Digit> digits = x.digits();
  for (char c : suffix) digits.push_back(static_cast<Digit>(c - '0'));
  return g_eval(DigitString(std::move(digits)));
}

constexpr std::array<std::string_view, 8> kSuffixes = {
    "", "0", "1", "00", "000", "100", "0000", "10000"};

std::array<BigInt, 8> g_vector(const DigitString& x) {
  std::array<BigInt, 8> vec;
  for (std::size_t i = 0; i < kSuffixes.size(); ++i)
    vec[i] = g_ext(x, kSuffixes[i]);
  return vec;
}

}  // namespace

bool IdentityReport::all() const {
  for (bool p : pass)
    if (!p) return false;
  return true;
}

IdentityReport verify_identities(const DigitString& x) {
  const BigInt g = g_ext(x, "");
  const BigInt g0 = g_ext(x, "0");
  const BigInt g1 = g_ext(x, "1");
  const BigInt g00 = g_ext(x, "00");
  const BigInt g000 = g_ext(x, "000");
  const BigInt g0000 = g_ext(x, "0000");
  const BigInt g100 = g_ext(x, "100");
  IdentityReport report;
  report.pass[0] = g_ext(x, "01") == -g + g0 + g00;
  report.pass[1] = g_ext(x, "0100") == -g + 2 * g00 + g000;
  report.pass[2] = g_ext(x, "00000") == g - g0 - 3 * g00 + 3 * g000 + g0000;
  report.pass[3] =
      g_ext(x, "010000") == -g - g0 + 2 * g00 + 3 * g000 + g0000;
  report.pass[4] = g_ext(x, "10") == g1;
  report.pass[5] = g_ext(x, "1000") == g100;
  return report;
}

bool verify_vector_recurrence(const DigitString& x, Digit i) {
  if (i > 1) throw PreconditionViolated("verify_vector_recurrence: digit 0/1");
  std::vector<Digit> extended = x.digits();
  extended.push_back(i);
  const std::array<BigInt, 8> lhs = g_vector(DigitString(std::move(extended)));
  const std::array<BigInt, 8> vec = g_vector(x);
  const auto& m = linrep_v().matrix[i];
  for (int row = 0; row < 8; ++row) {
    BigInt acc = 0;
    for (int col = 0; col < 8; ++col) acc += m[row * 8 + col] * vec[col];
    if (acc != lhs[row]) return false;
  }
  return true;
}

std::string to_fixture(const LinearRep& rep) {
  std::ostringstream out;
  out << rep.dim << ' '
      << (rep.orientation == Orientation::forward ? "forward" : "reversed")
      << '\n';
  auto put_row = [&out](const std::vector<BigInt>& row, std::size_t begin,
                        std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0) out << ' ';
      out << row[begin + i];
    }
    out << '\n';
  };
  put_row(rep.entry, 0, rep.entry.size());
  put_row(rep.exit, 0, rep.exit.size());
  for (int d = 0; d < 2; ++d)
    for (int r = 0; r < rep.dim; ++r)
      put_row(rep.matrix[d], static_cast<std::size_t>(r) * rep.dim, rep.dim);
  return out.str();
}

LinearRep from_fixture(std::string_view text) {
  std::istringstream in{std::string(text)};
  LinearRep rep;
  std::string orientation;
  if (!(in >> rep.dim >> orientation) || rep.dim <= 0)
    throw PreconditionViolated("fixture: bad header");
  if (orientation == "forward") {
    rep.orientation = Orientation::forward;
  } else if (orientation == "reversed") {
    rep.orientation = Orientation::reversed;
  } else {
    throw PreconditionViolated("fixture: bad orientation");
  }
  auto read_ints = [&in](std::size_t count) {
    std::vector<BigInt> out(count);
    for (std::size_t i = 0; i < count; ++i) {
      std::string token;
      if (!(in >> token)) throw PreconditionViolated("fixture: truncated");
      out[i] = BigInt(token);
    }
    return out;
  };
  const std::size_t dim = static_cast<std::size_t>(rep.dim);
  rep.entry = read_ints(dim);
  rep.exit = read_ints(dim);
  rep.matrix[0] = read_ints(dim * dim);
  rep.matrix[1] = read_ints(dim * dim);
  std::string leftover;
  if (in >> leftover) throw PreconditionViolated("fixture: trailing data");
  return rep;
}

const char* const kBerstelLFixture =
    "4 forward\n"
    "1 0 0 0\n"
    "1 0 0 1\n"
    "1 0 0 0\n"
    "0 0 1 0\n"
    "1 1 0 0\n"
    "1 0 0 0\n"
    "0 1 0 1\n"
    "0 0 0 0\n"
    "0 1 0 0\n"
    "0 0 0 0\n";

const char* const kLinrepVFixture =
    "8 reversed\n"
    "1 0 0 0 0 0 0 0\n"
    "1 1 1 1 1 2 1 4\n"
    "0 1 0 0 0 0 0 0\n"
    "0 0 0 1 0 0 0 0\n"
    "-1 1 0 1 0 0 0 0\n"
    "0 0 0 0 1 0 0 0\n"
    "0 0 0 0 0 0 1 0\n"
    "-1 0 0 2 1 0 0 0\n"
    "1 -1 0 -3 3 0 1 0\n"
    "-1 -1 0 2 3 0 1 0\n"
    "0 0 1 0 0 0 0 0\n"
    "0 0 1 0 0 0 0 0\n"
    "0 0 0 0 0 0 0 0\n"
    "0 0 0 0 0 1 0 0\n"
    "0 0 0 0 0 1 0 0\n"
    "0 0 0 0 0 0 0 0\n"
    "0 0 0 0 0 0 0 1\n"
    "0 0 0 0 0 0 0 0\n";

bool transcription_ok() {
  const LinearRep& l = berstel_l();
  const LinearRep& v = linrep_v();
  return to_fixture(l) == kBerstelLFixture &&
         to_fixture(v) == kLinrepVFixture &&
         from_fixture(kBerstelLFixture) == l &&
         from_fixture(kLinrepVFixture) == v;
}

}  // namespace fibfact
