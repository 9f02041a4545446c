#include "qdim/two_bridge.hpp"

#include <array>
#include <charconv>
#include <numeric>
#include <string>

namespace qdim {

namespace {

const std::vector<std::string> kGenerators{"x", "y"};
constexpr std::uint32_t kX = 0;
constexpr std::uint32_t kY = 1;

// x^e1 y^e2 x^e3 ... when `first` is x, the starred word when it is y.
Word alternating_word(const std::vector<int>& e, std::uint32_t first) {
  Word w(2);
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint32_t g = (i % 2 == 0) ? first : 1 - first;
    w.push({g, e[i]});
  }
  return w;
}

}  // namespace

void check_two_bridge_parameters(long p, long q) {
  if (p < 3 || p % 2 == 0)
    throw InputError("K(" + std::to_string(p) + "," + std::to_string(q) + "): p must be odd and >= 3");
  if (q <= 0 || q >= p)
    throw InputError("K(" + std::to_string(p) + "," + std::to_string(q) + "): need 0 < q < p");
  if (std::gcd(p, q) != 1)
    throw InputError("K(" + std::to_string(p) + "," + std::to_string(q) + "): gcd(p, q) must be 1");
}

std::vector<int> epsilon_vector(long p, long q) {
  check_two_bridge_parameters(p, q);
  std::vector<int> e(static_cast<std::size_t>(p - 1));
  for (long i = 1; i < p; ++i) e[i - 1] = ((i * q) / p) % 2 == 0 ? 1 : -1;
  return e;
}

long sigma(long p, long q) {
  auto e = epsilon_vector(p, q);
  return std::accumulate(e.begin(), e.end(), 0L);
}

long odd_representative(long p, long q) {
  check_two_bridge_parameters(p, q);
  return q % 2 == 1 ? q : p - q;
}

KnotGroup knot_presentation(long p, long q) {
  TwoBridgeData d;
  d.p = p;
  d.q = q;
  d.word_q = odd_representative(p, q);
  d.e = epsilon_vector(p, d.word_q);
  d.sigma = std::accumulate(d.e.begin(), d.e.end(), 0L);
  d.w = alternating_word(d.e, kX);
  d.w_star = alternating_word(d.e, kY);
  d.meridian = Word::letter(2, kX);
  d.longitude = Word::letter(2, kX, -2 * d.sigma) * d.w_star * d.w;

  Word relator = d.w * Word::letter(2, kX) * d.w.inverse() * Word::letter(2, kY, -1);
  return {Presentation{kGenerators, {relator}}, std::move(d)};
}

Presentation filled_presentation(const KnotGroup& knot, long n) {
  if (n == 0) throw InputError("surgery coefficient 1/n requires n != 0");
  Presentation p = knot.presentation;
  p.relators.push_back(knot.data.meridian * knot.data.longitude.pow(n));
  return p;
}

Presentation filled_presentation(long p, long q, long n) {
  if (n == 0) throw InputError("surgery coefficient 1/n requires n != 0");
  return filled_presentation(knot_presentation(p, q), n);
}

FamilyMember family_presentation(long N, long k) {
  if (N < 0) throw InputError("family index N must be >= 0");
  if (k < 1) throw InputError("family parameter k must be >= 1");
  if ((10 * k - 1) % 7 != 0)
    throw InputError("n = (10k - 1)/7 is not an integer for k = " + std::to_string(k) +
                     " (need k = 5 mod 7)");
  FamilyMember m;
  m.N = N;
  m.k = k;
  m.p = 40 * N + 27;
  m.q = 20 * N + 13;
  m.n = (10 * k - 1) / 7;
  m.presentation = filled_presentation(m.p, m.q, m.n);
  return m;
}

std::span<const KnotTableRow> knot_table() {
  static constexpr std::array<KnotTableRow, 32> kTable{{
      {"6_1", 9, 4},     {"6_2", 11, 3},    {"7_2", 11, 5},    {"7_3", 13, 3},
      {"7_5", 17, 5},    {"7_6", 19, 7},    {"7_7", 21, 8},    {"8_1", 13, 6},
      {"8_2", 17, 3},    {"8_3", 17, 4},    {"8_4", 19, 14},   {"8_9", 13, 6},
      {"8_11", 17, 3},   {"8_12", 17, 4},   {"8_13", 19, 14},  {"8_14", 31, 12},
      {"9_2", 15, 7},    {"9_3", 19, 3},    {"9_4", 21, 5},    {"9_7", 29, 9},
      {"9_9", 31, 7},    {"9_10", 33, 23},  {"9_11", 33, 14},  {"9_12", 35, 13},
      {"9_14", 37, 8},   {"9_15", 39, 16},  {"9_17", 39, 14},  {"9_18", 41, 17},
      {"9_19", 41, 16},  {"9_21", 43, 12},  {"9_26", 47, 18},  {"9_27", 49, 19},
  }};
  return kTable;
}

KnotSpec parse_knot_spec(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) throw InputError("knot spec must look like p/q, got '" + std::string(text) + "'");
  auto parse_long = [&](std::string_view s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw InputError("knot spec must look like p/q, got '" + std::string(text) + "'");
    return v;
  };
  KnotSpec spec{parse_long(text.substr(0, slash)), parse_long(text.substr(slash + 1))};
  check_two_bridge_parameters(spec.p, spec.q);
  return spec;
}

}  // namespace qdim
