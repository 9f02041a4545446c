#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qdim/word.hpp"

namespace qdim {

/// Combinatorial data of the 2-bridge knot K(p, q) over generators x, y.
struct TwoBridgeData {
  long p = 0;
  long q = 0;
  long word_q = 0;     // odd representative used for the words, see odd_representative
  std::vector<int> e;  // e_i = (-1)^floor(i word_q / p), i = 1..p-1
  long sigma = 0;      // sum of e
  Word w;              // x^e1 y^e2 ... y^e_{p-1}
  Word w_star;         // y^e1 x^e2 ... x^e_{p-1}
  Word meridian;       // x
  Word longitude;      // x^(-2 sigma) w_star w
};

struct KnotGroup {
  Presentation presentation;  // < x, y | w x w^-1 y^-1 >
  TwoBridgeData data;
};

/// Throws InputError unless p is odd, 0 < q < p and gcd(p, q) = 1.
void check_two_bridge_parameters(long p, long q);

std::vector<int> epsilon_vector(long p, long q);
long sigma(long p, long q);

/// q if q is odd, else p - q. K(p, p - q) is the mirror image of K(p, q),
/// so both have the same group, and the word construction below only yields
/// the knot group for odd q.
long odd_representative(long p, long q);

/// Presentation built from epsilon_vector(p, odd_representative(p, q)).
KnotGroup knot_presentation(long p, long q);

/// Group of the 1/n Dehn filling: adds the relator x (longitude)^n.
/// Throws InputError for n = 0.
Presentation filled_presentation(long p, long q, long n);
Presentation filled_presentation(const KnotGroup& knot, long n);

struct FamilyMember {
  long N = 0;
  long k = 0;
  long p = 0;  // 40N + 27
  long q = 0;  // 20N + 13
  long n = 0;  // (10k - 1) / 7
  Presentation presentation;
};

/// 1/n filling of K(40N+27, 20N+13) with n = (10k-1)/7. Requires N >= 0,
/// k >= 1 and k = 5 (mod 7); throws InputError otherwise.
FamilyMember family_presentation(long N, long k);

struct KnotTableRow {
  std::string_view name;
  long p;
  long q;
};

/// The 32 two-bridge knots of crossing number 6 to 9 whose groups are
/// tested for A5 surjections. Names are labels only; (p, q) is the input.
std::span<const KnotTableRow> knot_table();

struct KnotSpec {
  long p;
  long q;
};

/// Parses "p/q". Throws InputError on malformed text or invalid parameters.
KnotSpec parse_knot_spec(std::string_view text);

}  // namespace qdim
