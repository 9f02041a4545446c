#include "qdim/affine.hpp"

#include <algorithm>

namespace qdim {

AffineElement affine_mul(const AffineElement& a, const AffineElement& b) {
  return {a.vec + a.grp * b.vec, a.grp * b.grp};
}

AffineElement affine_inv(const AffineElement& a) {
  Quaternion g_inv = a.grp.inverse();
  return {-(g_inv * a.vec), g_inv};
}

bool SymbolicAffine::coefficients_vanish() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Quaternion& c) { return c.is_zero(); });
}

SymbolicAffine SymbolicAffineOps::identity() const {
  return {std::vector<Quaternion>(rank), Quaternion::one()};
}

SymbolicAffine SymbolicAffineOps::mul(const SymbolicAffine& a, const SymbolicAffine& b) const {
  SymbolicAffine c{a.coeffs, a.grp * b.grp};
  for (std::size_t i = 0; i < rank; ++i)
    if (!b.coeffs[i].is_zero()) c.coeffs[i] += a.grp * b.coeffs[i];
  return c;
}

SymbolicAffine SymbolicAffineOps::inv(const SymbolicAffine& a) const {
  SymbolicAffine c{std::vector<Quaternion>(rank), a.grp.inverse()};
  for (std::size_t i = 0; i < rank; ++i)
    if (!a.coeffs[i].is_zero()) c.coeffs[i] = -(c.grp * a.coeffs[i]);
  return c;
}

SymbolicAffine symbolic_eval(const Word& w, std::span<const Quaternion> images) {
  const SymbolicAffineOps ops{w.rank()};
  std::vector<SymbolicAffine> generators;
  generators.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    SymbolicAffine g{std::vector<Quaternion>(w.rank()), images[i]};
    if (i < w.rank()) g.coeffs[i] = Quaternion::one();
    generators.push_back(std::move(g));
  }
  return eval_word(w, std::span<const SymbolicAffine>(generators), ops);
}

std::vector<Quaternion> quaternion_images(const GroupHom& h, const IcosianGroup& icosians) {
  std::vector<Quaternion> out;
  for (Element e : h.images()) out.push_back(icosians.quaternion(e));
  return out;
}

SymbolicAffine symbolic_eval(const Word& w, const GroupHom& h, const IcosianGroup& icosians) {
  const FiniteGroup& g = icosians.group();
  if (h.images().size() != w.rank())
    throw InputError("symbolic_eval: " + std::to_string(h.images().size()) + " images for " +
                     std::to_string(w.rank()) + " generators");
  for (Element e : h.images())
    if (!g.contains(e)) throw MembershipError("image is not an element of 2I");

  // counts[i][e]: multiplicity of icosian e in the coefficient of u_i.
  std::vector<std::vector<std::int64_t>> counts(w.rank(), std::vector<std::int64_t>(g.size(), 0));
  Element prefix = g.identity();
  for (const Syllable& syl : w.syllables()) {
    auto& row = counts[syl.generator];
    const Element a = h.images()[syl.generator];
    if (syl.exponent > 0) {
      // x^e contributes prefix * (1 + a + ... + a^(e-1)); the powers cycle
      // with period ord(a), so whole periods are counted at once.
      const auto e = static_cast<std::uint64_t>(syl.exponent);
      const std::uint64_t period = element_order(g, a);
      Element cur = prefix;
      for (std::uint64_t i = 0; i < std::min(e, period); ++i) {
        row[cur] += static_cast<std::int64_t>(e / period + (i < e % period ? 1 : 0));
        cur = g.mul(cur, a);
      }
    } else {
      // x^-1 contributes -(prefix * a^-1).
      const auto e = static_cast<std::uint64_t>(-syl.exponent);
      const Element a_inv = g.inv(a);
      const std::uint64_t period = element_order(g, a);
      Element cur = g.mul(prefix, a_inv);
      for (std::uint64_t i = 0; i < std::min(e, period); ++i) {
        row[cur] -= static_cast<std::int64_t>(e / period + (i < e % period ? 1 : 0));
        cur = g.mul(cur, a_inv);
      }
    }
    prefix = g.mul(prefix, g.pow(a, syl.exponent));
  }

  SymbolicAffine out{std::vector<Quaternion>(w.rank()), icosians.quaternion(prefix)};
  for (std::size_t i = 0; i < w.rank(); ++i)
    for (Element e = 0; e < g.size(); ++e)
      if (counts[i][e] != 0) out.coeffs[i] += GoldenNum(counts[i][e]) * icosians.quaternion(e);
  return out;
}

AffineElement specialize(const SymbolicAffine& s, std::span<const Quaternion> translations) {
  if (translations.size() != s.coeffs.size())
    throw InputError("specialize: " + std::to_string(translations.size()) + " translations for " +
                     std::to_string(s.coeffs.size()) + " generators");
  AffineElement a{Quaternion(), s.grp};
  for (std::size_t i = 0; i < translations.size(); ++i) a.vec += s.coeffs[i] * translations[i];
  return a;
}

namespace {

template <class Eval>
LiftReport lift_report(const Presentation& p, Eval eval) {
  LiftReport report{true, {}};
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    SymbolicAffine image = eval(p.relators[r]);
    if (!image.is_translation())
      throw PreconditionError("relator " + std::to_string(r + 1) + " (" +
                              render_word(p.relators[r], p.generators) +
                              ") is not killed by the group part");
    report.lifts = report.lifts && image.coefficients_vanish();
    report.relators.push_back({p.relators[r], std::move(image)});
  }
  return report;
}

std::vector<Quaternion> translation_part(SymbolicAffine image) {
  if (!image.is_translation())
    throw NotATranslationError("image of the commutator has group part " + image.grp.to_string() +
                            ", not a translation");
  return std::move(image.coeffs);
}

}  // namespace

LiftReport relators_lift(const Presentation& p, std::span<const Quaternion> images) {
  return lift_report(p, [&](const Word& w) { return symbolic_eval(w, images); });
}

LiftReport relators_lift(const Presentation& p, const GroupHom& h, const IcosianGroup& icosians) {
  return lift_report(p, [&](const Word& w) { return symbolic_eval(w, h, icosians); });
}

std::vector<Quaternion> commutator_translation(std::span<const Quaternion> images, const Word& a,
                                               const Word& b) {
  return translation_part(symbolic_eval(commutator(a, b), images));
}

std::vector<Quaternion> commutator_translation(const GroupHom& h, const IcosianGroup& icosians,
                                               const Word& a, const Word& b) {
  return translation_part(symbolic_eval(commutator(a, b), h, icosians));
}

}  // namespace qdim
