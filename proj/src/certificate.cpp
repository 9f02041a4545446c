#include "qdim/certificate.hpp"

#include <chrono>

#include "qdim/smith.hpp"
#include "qdim/two_bridge.hpp"
#include "qdim/version.hpp"

namespace qdim {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<ImageRecord> image_records(const GroupHom& h, const Presentation& p,
                                       const FiniteGroup& g) {
  std::vector<ImageRecord> out;
  for (std::size_t i = 0; i < h.images().size(); ++i) {
    Element e = h.images()[i];
    out.push_back({p.generators[i], e, g.label(e), element_order(g, e)});
  }
  return out;
}

nlohmann::json images_json(const std::vector<ImageRecord>& images) {
  auto arr = nlohmann::json::array();
  for (const auto& im : images)
    arr.push_back({{"generator", im.generator}, {"index", im.index}, {"value", im.label}, {"order", im.order}});
  return arr;
}

nlohmann::json quaternions_json(const std::vector<Quaternion>& qs) {
  auto arr = nlohmann::json::array();
  for (const auto& q : qs) arr.push_back(q.to_string());
  return arr;
}

bool all_zero(const std::vector<Quaternion>& qs) {
  for (const auto& q : qs)
    if (!q.is_zero()) return false;
  return true;
}

// Fills the commutator section; returns false if the image is not an
// infinite-order translation.
bool certify_commutator(QDim2Certificate& cert, const Presentation& p, const GroupHom& h,
                        const IcosianGroup& icosians) {
  const auto images = quaternion_images(h, icosians);
  const Word a = parse_word(cert.commutator_a, p.generators);
  const Word b = parse_word(cert.commutator_b, p.generators);
  const Word comm = commutator(a, b);
  cert.commutator_word = render_word(comm, p.generators);

  cert.x5_coefficient = symbolic_eval(a, h, icosians).coeffs[0];
  const Quaternion one_minus_y = Quaternion::one() - images[1];
  cert.product_right_order = cert.x5_coefficient * one_minus_y;
  cert.product_left_order = one_minus_y * cert.x5_coefficient;

  try {
    cert.commutator_coefficients = commutator_translation(h, icosians, a, b);
  } catch (const NotATranslationError& e) {
    cert.detail = e.what();
    return false;
  }
  if (all_zero(cert.commutator_coefficients)) {
    cert.detail = "commutator maps to the identity";
    return false;
  }
  for (long n : {2L, 3L}) {
    SymbolicAffine power = symbolic_eval(comm.pow(n), h, icosians);
    bool holds = power.is_translation();
    for (std::size_t i = 0; holds && i < power.coeffs.size(); ++i)
      holds = power.coeffs[i] == GoldenNum(n) * cert.commutator_coefficients[i];
    if (!holds) {
      cert.detail = "translation power law fails for n = " + std::to_string(n);
      return false;
    }
    cert.power_law_checked.push_back(n);
  }
  cert.commutator_infinite_order = true;
  return true;
}

}  // namespace

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::QDim2:
      return "qdim=2";
    case Conclusion::QDim3Criterion:
      return "qdim=3-criterion";
    case Conclusion::CriterionFails:
      return "criterion-fails";
    case Conclusion::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

QDim2Certificate certify_qdim2(long N, long k, const CertifyOptions& options) {
  const auto start = Clock::now();
  const FamilyMember member = family_presentation(N, k);
  const Presentation& p = member.presentation;
  const IcosianGroup& icosians = binary_icosahedral();

  QDim2Certificate cert;
  cert.N = N;
  cert.k = k;
  cert.p = member.p;
  cert.q = member.q;
  cert.n = member.n;
  cert.generators = p.generators;
  cert.presentation = render_presentation(p);

  auto fail = [&](std::string stage, std::string detail) {
    cert.conclusion = Conclusion::Inconclusive;
    cert.failing_stage = std::move(stage);
    if (!detail.empty()) cert.detail = std::move(detail);
    cert.elapsed_ms = ms_since(start);
    return cert;
  };

  cert.homology = first_homology(p);
  if (!cert.homology.empty()) return fail("homology", "H_1 = " + render_homology(cert.homology));

  std::optional<GroupHom> hom;
  try {
    hom = family_hom(N, k);
  } catch (const IntegrityError& e) {
    cert.detail = e.what();
    hom = search_order10_surjection(p, icosians, options.jobs);
    if (!hom) return fail("surjection", "");
    cert.fallback_used = true;
  }
  cert.hom_verified = hom->verified();
  cert.surjective = is_surjective(*hom, icosians.group());
  cert.hom_images = image_records(*hom, p, icosians.group());
  if (!cert.surjective) return fail("surjection", "map is not onto 2I");

  LiftReport lift = relators_lift(p, *hom, icosians);
  for (const auto& r : lift.relators)
    cert.relators.push_back({render_word(r.relator, p.generators), r.image.grp, r.image.coeffs,
                             r.image.coefficients_vanish()});
  cert.relators_lift = lift.lifts;
  if (!lift.lifts) return fail("lift", "some relator has a nonzero translation coefficient");

  if (!certify_commutator(cert, p, *hom, icosians)) return fail("commutator", "");

  cert.conclusion = Conclusion::QDim2;
  cert.elapsed_ms = ms_since(start);
  return cert;
}

QDim3Certificate certify_qdim3_criterion(const Presentation& presentation, std::string label,
                                         const CertifyOptions& options) {
  const auto start = Clock::now();
  QDim3Certificate cert;
  cert.label = std::move(label);
  cert.presentation = render_presentation(presentation);
  cert.homology = first_homology(presentation);

  const FiniteGroup a5 = alternating_group_5();
  HomSearchOptions search;
  search.surjective_only = true;
  search.jobs = options.jobs;
  HomSearchResult result = enumerate_homs(presentation, a5, search);
  cert.surjection_count = result.count;
  cert.reduced_count = result.reduced_count;
  cert.reduced_candidates = result.reduced_candidates;
  if (result.homs.empty()) {
    cert.conclusion = Conclusion::QDim3Criterion;
  } else {
    cert.conclusion = Conclusion::CriterionFails;
    cert.example_surjection = image_records(result.homs.front(), presentation, a5);
  }
  cert.elapsed_ms = ms_since(start);
  return cert;
}

QDim3Certificate certify_qdim3_criterion(long p, long q, const CertifyOptions& options) {
  KnotGroup knot = knot_presentation(p, q);
  QDim3Certificate cert = certify_qdim3_criterion(
      knot.presentation, "K(" + std::to_string(p) + "," + std::to_string(q) + ")", options);
  cert.p = p;
  cert.q = q;
  cert.word_q = knot.data.word_q;
  return cert;
}

nlohmann::json to_json(const QDim2Certificate& c) {
  nlohmann::json relators = nlohmann::json::array();
  for (const auto& r : c.relators)
    relators.push_back({{"word", r.word},
                        {"group_part", r.grp.to_string()},
                        {"coefficients", quaternions_json(r.coefficients)},
                        {"vanishes", r.vanishes}});
  nlohmann::json j = {
      {"artifact_version", kVersion},
      {"kind", "qdim2"},
      {"family", {{"N", c.N}, {"k", c.k}}},
      {"p", c.p},
      {"q", c.q},
      {"n", c.n},
      {"generators", c.generators},
      {"presentation", c.presentation},
      {"homology", {{"invariant_factors", c.homology}, {"rendered", render_homology(c.homology)}}},
      {"hom",
       {{"target", c.target},
        {"images", images_json(c.hom_images)},
        {"verified", c.hom_verified},
        {"surjective", c.surjective},
        {"fallback_used", c.fallback_used}}},
      {"relators", relators},
      {"relators_lift", c.relators_lift},
      {"commutator",
       {{"a", c.commutator_a},
        {"b", c.commutator_b},
        {"word", c.commutator_word},
        {"translation_coefficients", quaternions_json(c.commutator_coefficients)},
        {"x5_coefficient", c.x5_coefficient.to_string()},
        {"product_right_order", c.product_right_order.to_string()},
        {"product_left_order", c.product_left_order.to_string()},
        {"power_law_checked", c.power_law_checked},
        {"infinite_order", c.commutator_infinite_order}}},
      {"unchecked_hypotheses", c.unchecked_hypotheses},
      {"conclusion", to_string(c.conclusion)},
      {"failing_stage", c.failing_stage ? nlohmann::json(*c.failing_stage) : nlohmann::json()},
      {"detail", c.detail},
      {"timing", {{"elapsed_ms", c.elapsed_ms}}},
  };
  return j;
}

nlohmann::json to_json(const QDim3Certificate& c) {
  return {
      {"artifact_version", kVersion},
      {"kind", "qdim3-criterion"},
      {"label", c.label},
      {"p", c.p ? nlohmann::json(*c.p) : nlohmann::json()},
      {"q", c.q ? nlohmann::json(*c.q) : nlohmann::json()},
      {"word_q", c.word_q ? nlohmann::json(*c.word_q) : nlohmann::json()},
      {"presentation", c.presentation},
      {"homology", {{"invariant_factors", c.homology}, {"rendered", render_homology(c.homology)}}},
      {"target", "A5"},
      {"surjection_count", c.surjection_count},
      {"reduced_count", c.reduced_count},
      {"reduced_candidates", c.reduced_candidates},
      {"example_surjection",
       c.example_surjection ? images_json(*c.example_surjection) : nlohmann::json()},
      {"unchecked_hypotheses", c.unchecked_hypotheses},
      {"conclusion", to_string(c.conclusion)},
      {"timing", {{"elapsed_ms", c.elapsed_ms}}},
  };
}

nlohmann::json without_timing(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("timing");
    for (auto& [key, value] : j.items()) value = without_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = without_timing(value);
  }
  return j;
}

std::vector<std::string> recheck_qdim2(const nlohmann::json& cert) {
  std::vector<std::string> problems;
  try {
    const Presentation p = parse_presentation(cert.at("presentation").get<std::string>());
    if (p.rank() != 2) problems.push_back("presentation does not have 2 generators");

    if (!first_homology(p).empty()) problems.push_back("H_1 of the presentation is not trivial");

    std::vector<Quaternion> images;
    for (const auto& im : cert.at("hom").at("images"))
      images.push_back(Quaternion::parse(im.at("value").get<std::string>()));
    if (images.size() != p.rank()) {
      problems.push_back("wrong number of generator images");
      return problems;
    }
    for (const auto& q : images)
      if (q.norm() != GoldenNum(1)) problems.push_back("image " + q.to_string() + " is not a unit");

    // Surjectivity: the images must generate a group of order 120.
    auto closure = bfs_closure(
        images, Quaternion::one(), [](const Quaternion& a, const Quaternion& b) { return a * b; },
        [](const Quaternion& q) { return q; }, IcosianGroup::kOrder + 1);
    if (!closure || closure->elements.size() != IcosianGroup::kOrder)
      problems.push_back("images do not generate a group of order 120");

    const auto& recorded = cert.at("relators");
    if (recorded.size() != p.relators.size()) problems.push_back("relator count mismatch");
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      SymbolicAffine s = symbolic_eval(p.relators[r], images);
      if (!s.is_translation()) problems.push_back("relator " + std::to_string(r + 1) + " not killed");
      if (!s.coefficients_vanish())
        problems.push_back("relator " + std::to_string(r + 1) + " has nonzero coefficients");
      if (r < recorded.size()) {
        const auto& coeffs = recorded[r].at("coefficients");
        for (std::size_t i = 0; i < coeffs.size() && i < s.coeffs.size(); ++i)
          if (Quaternion::parse(coeffs[i].get<std::string>()) != s.coeffs[i])
            problems.push_back("recorded coefficient mismatch on relator " + std::to_string(r + 1));
      }
    }

    const auto& comm = cert.at("commutator");
    const Word a = parse_word(comm.at("a").get<std::string>(), p.generators);
    const Word b = parse_word(comm.at("b").get<std::string>(), p.generators);
    SymbolicAffine c = symbolic_eval(commutator(a, b), images);
    if (!c.is_translation()) problems.push_back("commutator is not a translation");
    if (c.coefficients_vanish()) problems.push_back("commutator translation is zero");
    const auto& recorded_c = comm.at("translation_coefficients");
    for (std::size_t i = 0; i < recorded_c.size() && i < c.coeffs.size(); ++i)
      if (Quaternion::parse(recorded_c[i].get<std::string>()) != c.coeffs[i])
        problems.push_back("recorded commutator coefficient mismatch");

    if (cert.at("conclusion").get<std::string>() != to_string(Conclusion::QDim2))
      problems.push_back("certificate does not conclude qdim=2");
  } catch (const std::exception& e) {
    problems.push_back(std::string("malformed certificate: ") + e.what());
  }
  return problems;
}

}  // namespace qdim
