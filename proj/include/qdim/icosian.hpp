#pragma once

#include <vector>

#include "qdim/finite_group.hpp"
#include "qdim/quaternion.hpp"

namespace qdim {

/// The binary icosahedral group 2I as 120 unit quaternions over the golden
/// field, generated by s = (1+i+j+k)/2 and t = (phi + (phi-1)i + j)/2.
///
/// Element indices follow the BFS insertion order from 1 with right
/// multiplication by s, t, s^-1, t^-1 (in that order), so they are stable
/// across runs and can be quoted in certificates.
class IcosianGroup {
 public:
  static constexpr std::size_t kOrder = 120;

  static Quaternion generator_s();
  static Quaternion generator_t();

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<Quaternion>& elements() const noexcept { return elements_; }
  const Quaternion& quaternion(Element e) const { return elements_.at(e); }

  Element gen_s() const noexcept { return gen_s_; }
  Element gen_t() const noexcept { return gen_t_; }
  Element minus_one() const noexcept { return minus_one_; }

  /// Throws MembershipError if q is not one of the 120 icosians.
  Element index_of(const Quaternion& q) const;

 private:
  friend IcosianGroup generate_2I();
  IcosianGroup(std::vector<Quaternion> elements, FiniteGroup group);

  std::vector<Quaternion> elements_;
  FiniteGroup group_;
  Element gen_s_ = 0;
  Element gen_t_ = 0;
  Element minus_one_ = 0;
};

/// Throws IntegrityError if the closure exceeds 120 elements.
IcosianGroup generate_2I();

/// Process-wide instance, built on first use.
const IcosianGroup& binary_icosahedral();

struct CentralQuotient {
  FiniteGroup group;
  std::vector<Element> projection;  // 2I index -> quotient index
};

/// 2I / {1, -1}. Cosets are numbered by first appearance in 2I's order.
CentralQuotient central_quotient(const IcosianGroup& icosians);

}  // namespace qdim
