#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdim/finite_group.hpp"
#include "qdim/icosian.hpp"
#include "qdim/word.hpp"

namespace qdim {

/// A5 as the even permutations of {1..5}, generated by (1 2 3) and (1 2 3 4 5).
/// Products compose left to right: (a * b)(i) = b(a(i)). Labels are cycle
/// notation, "()" for the identity.
FiniteGroup alternating_group_5();

/// Z/d with labels "0".."d-1". Throws ResourceError above 4096.
FiniteGroup cyclic_group(std::size_t d);

/// Assignment of generator images in a finite target. `verified()` is true
/// only when the object was produced by a relator check.
class GroupHom {
 public:
  GroupHom(std::string target, std::vector<Element> images)
      : target_(std::move(target)), images_(std::move(images)) {}

  const std::string& target() const noexcept { return target_; }
  const std::vector<Element>& images() const noexcept { return images_; }
  bool verified() const noexcept { return verified_; }

  friend bool operator==(const GroupHom&, const GroupHom&) = default;

 private:
  friend GroupHom verify_hom(const Presentation&, const FiniteGroup&, std::vector<Element>);
  std::string target_;
  std::vector<Element> images_;
  bool verified_ = false;
};

/// Index of the first relator not mapped to the identity, if any.
std::optional<std::size_t> first_unkilled_relator(const Presentation& p, const FiniteGroup& g,
                                                  std::span<const Element> images);

/// Returns a verified hom, or throws PreconditionError naming the relator
/// that is not killed.
GroupHom verify_hom(const Presentation& p, const FiniteGroup& g, std::vector<Element> images);

/// Whether the images generate all of G. Throws PreconditionError if h is
/// not verified.
bool is_surjective(const GroupHom& h, const FiniteGroup& g);

struct HomSearchOptions {
  bool surjective_only = false;
  bool exact_count = false;  // also run the full |G|^2 enumeration
  unsigned jobs = 1;
  std::size_t bound = 360;
};

struct HomSearchResult {
  /// Every homomorphism (or surjection), sorted lexicographically by images.
  std::vector<GroupHom> homs;
  /// Solutions found with x fixed to a conjugacy class representative.
  std::uint64_t reduced_count = 0;
  /// Candidate pairs examined by the reduced search.
  std::uint64_t reduced_candidates = 0;
  /// Total count recovered from the reduced search by class sizes.
  std::uint64_t count = 0;
  /// Count from brute-force enumeration, when requested.
  std::optional<std::uint64_t> exact_count;
};

/// Enumerates homomorphisms from a 2-generator presentation into G.
///
/// The x-image ranges over one representative per conjugacy class and the
/// y-image over all of G. Conjugation by g is a bijection between solutions
/// with x -> a and solutions with x -> g a g^-1, preserving surjectivity, so
/// the count is the class-size weighted sum and the full list is the orbit of
/// the reduced solutions under conjugation.
///
/// Throws InputError for presentations of rank != 2 and ResourceError when
/// |G| exceeds options.bound. Output is independent of options.jobs.
HomSearchResult enumerate_homs(const Presentation& p, const FiniteGroup& g,
                               const HomSearchOptions& options = {});

/// x -> -t^2, y -> s^2 t^2 s in 2I.
std::array<Element, 2> family_images(const IcosianGroup& icosians);

/// The surjection of the filled family group onto 2I. Throws InputError for
/// invalid (N, k) and IntegrityError if a relator is not killed or the map
/// is not onto.
GroupHom family_hom(long N, long k);

/// Searches 2I surjections of `p` for one whose x-image has order 10.
std::optional<GroupHom> search_order10_surjection(const Presentation& p,
                                                  const IcosianGroup& icosians, unsigned jobs = 1);

/// Image of a 2I-valued hom in the central quotient.
GroupHom project_to_quotient(const GroupHom& h, const Presentation& p,
                             const CentralQuotient& quotient);

}  // namespace qdim
