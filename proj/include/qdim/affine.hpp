#pragma once

#include <span>
#include <vector>

#include "qdim/icosian.hpp"
#include "qdim/quaternion.hpp"
#include "qdim/quotients.hpp"
#include "qdim/word.hpp"

namespace qdim {

// The affine group C^2 x| 2I with C^2 modelled as the quaternions H, the
// group part acting by left multiplication:
//   (a, b) * (a', b') = (a + b a', b b').

struct AffineElement {
  Quaternion vec;
  Quaternion grp = Quaternion::one();

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

AffineElement affine_mul(const AffineElement& a, const AffineElement& b);
AffineElement affine_inv(const AffineElement& a);

struct AffineGroupOps {
  using value_type = AffineElement;
  AffineElement identity() const { return {}; }
  AffineElement mul(const AffineElement& a, const AffineElement& b) const { return affine_mul(a, b); }
  AffineElement inv(const AffineElement& a) const { return affine_inv(a); }
};

/// Affine image of a word with generator i sent to (u_i, g_i) for formal
/// translations u_i: the translation part is sum_i coeffs[i] * u_i.
struct SymbolicAffine {
  std::vector<Quaternion> coeffs;
  Quaternion grp = Quaternion::one();

  bool is_translation() const { return grp == Quaternion::one(); }
  bool coefficients_vanish() const;

  friend bool operator==(const SymbolicAffine&, const SymbolicAffine&) = default;
};

struct SymbolicAffineOps {
  using value_type = SymbolicAffine;
  std::size_t rank;

  SymbolicAffine identity() const;
  SymbolicAffine mul(const SymbolicAffine& a, const SymbolicAffine& b) const;
  SymbolicAffine inv(const SymbolicAffine& a) const;
};

/// Generator i -> (u_i, images[i]) with u_i formal. Evaluates by affine
/// multiplication over the quaternions.
SymbolicAffine symbolic_eval(const Word& w, std::span<const Quaternion> images);

/// Same result for a hom into 2I, computed in the integral group ring: each
/// letter adds +-1 to the count of a prefix image, and the counts are
/// projected to quaternions once at the end. O(1) table lookups per letter.
SymbolicAffine symbolic_eval(const Word& w, const GroupHom& h, const IcosianGroup& icosians);

/// Substitutes concrete translations for the formal ones.
AffineElement specialize(const SymbolicAffine& s, std::span<const Quaternion> translations);

struct RelatorLift {
  Word relator;
  SymbolicAffine image;
};

struct LiftReport {
  bool lifts = false;  // every relator coefficient is zero
  std::vector<RelatorLift> relators;
};

/// Checks the sufficient lift condition: every relator maps to (0, 1) for
/// all choices of translations. Throws PreconditionError if some relator's
/// group part is not 1.
LiftReport relators_lift(const Presentation& p, std::span<const Quaternion> images);
LiftReport relators_lift(const Presentation& p, const GroupHom& h, const IcosianGroup& icosians);

/// Translation coefficients of the image of [a, b]. Throws
/// NotATranslationError if the image is not a pure translation.
std::vector<Quaternion> commutator_translation(std::span<const Quaternion> images, const Word& a,
                                               const Word& b);
std::vector<Quaternion> commutator_translation(const GroupHom& h, const IcosianGroup& icosians,
                                               const Word& a, const Word& b);

/// Quaternion images of a hom into 2I.
std::vector<Quaternion> quaternion_images(const GroupHom& h, const IcosianGroup& icosians);

}  // namespace qdim
