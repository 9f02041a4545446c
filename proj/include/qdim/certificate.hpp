#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdim/affine.hpp"
#include "qdim/finite_group.hpp"
#include "qdim/quaternion.hpp"

namespace qdim {

enum class Conclusion {
  QDim2,           // "qdim=2"
  QDim3Criterion,  // "qdim=3-criterion"
  CriterionFails,  // "criterion-fails"
  Inconclusive,    // "inconclusive"
};

std::string to_string(Conclusion c);

inline const std::vector<std::string> kUncheckedHyperbolicity{
    "hyperbolicity of the knot complement and of the 1/n filling is assumed, not verified"};

struct ImageRecord {
  std::string generator;
  Element index;
  std::string label;  // quaternion string or permutation cycles
  std::size_t order;
};

struct RelatorRecord {
  std::string word;
  Quaternion grp;
  std::vector<Quaternion> coefficients;
  bool vanishes;
};

/// Replayable evidence that a member of the K(40N+27, 20N+13) surgery
/// family has quotient dimension 2. Every exact value is embedded.
struct QDim2Certificate {
  long N = 0, k = 0, p = 0, q = 0, n = 0;
  std::vector<std::string> generators;
  std::string presentation;
  std::vector<std::int64_t> homology;  // invariant factors; empty = trivial

  std::string target = "2I";
  std::vector<ImageRecord> hom_images;
  bool hom_verified = false;
  bool surjective = false;
  bool fallback_used = false;

  std::vector<RelatorRecord> relators;
  bool relators_lift = false;

  std::string commutator_a = "x^5";
  std::string commutator_b = "y";
  std::string commutator_word;
  std::vector<Quaternion> commutator_coefficients;
  Quaternion x5_coefficient;           // u-coefficient of F(x^5)
  Quaternion product_right_order;    // x5_coefficient * (1 - f(y))
  Quaternion product_left_order;       // (1 - f(y)) * x5_coefficient
  std::vector<long> power_law_checked;  // n with translation(F^n) = n translation(F)
  bool commutator_infinite_order = false;

  std::vector<std::string> unchecked_hypotheses = kUncheckedHyperbolicity;
  Conclusion conclusion = Conclusion::Inconclusive;
  std::optional<std::string> failing_stage;
  std::string detail;
  double elapsed_ms = 0.0;
};

struct CertifyOptions {
  unsigned jobs = 1;
};

/// Runs the full pipeline: trivial H_1, surjection onto 2I, vanishing
/// relator coefficients, nonzero commutator translation. A failing stage
/// yields an inconclusive certificate naming it. Throws InputError for an
/// invalid (N, k).
QDim2Certificate certify_qdim2(long N, long k, const CertifyOptions& options = {});

/// A5-nonsurjection evidence for a knot group (and hence every 1/n filling).
struct QDim3Certificate {
  std::string label;
  std::optional<long> p, q;
  std::optional<long> word_q;  // odd representative the words were built from
  std::string presentation;
  std::vector<std::int64_t> homology;
  std::uint64_t surjection_count = 0;
  std::uint64_t reduced_count = 0;
  std::uint64_t reduced_candidates = 0;
  std::optional<std::vector<ImageRecord>> example_surjection;
  std::vector<std::string> unchecked_hypotheses = kUncheckedHyperbolicity;
  Conclusion conclusion = Conclusion::Inconclusive;
  double elapsed_ms = 0.0;
};

QDim3Certificate certify_qdim3_criterion(long p, long q, const CertifyOptions& options = {});
QDim3Certificate certify_qdim3_criterion(const Presentation& presentation, std::string label,
                                         const CertifyOptions& options = {});

nlohmann::json to_json(const QDim2Certificate& c);
nlohmann::json to_json(const QDim3Certificate& c);

/// Copy with every timing field removed, for content comparison.
nlohmann::json without_timing(nlohmann::json j);

/// Re-verifies a qdim=2 certificate from its embedded data alone: parses the
/// presentation and quaternion images, re-evaluates relators and the
/// commutator, recomputes H_1. Returns the list of problems (empty = valid).
std::vector<std::string> recheck_qdim2(const nlohmann::json& certificate);

}  // namespace qdim
