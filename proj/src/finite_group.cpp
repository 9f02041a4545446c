#include "qdim/finite_group.hpp"

#include <algorithm>

namespace qdim {

FiniteGroup::FiniteGroup(std::string name, std::size_t size, std::vector<Element> table,
                         std::vector<std::string> labels)
    : name_(std::move(name)),
      size_(size),
      table_(std::move(table)),
      inverse_(size),
      labels_(std::move(labels)) {
  if (size_ == 0 || table_.size() != size_ * size_ || labels_.size() != size_)
    throw IntegrityError("malformed group table for " + name_);
  auto is_identity = [&](Element e) {
    for (Element a = 0; a < size_; ++a)
      if (mul(e, a) != a || mul(a, e) != a) return false;
    return true;
  };
  Element e = 0;
  while (e < size_ && !is_identity(e)) ++e;
  if (e == size_) throw IntegrityError("group table for " + name_ + " has no identity");
  identity_ = e;
  for (Element a = 0; a < size_; ++a) {
    Element b = 0;
    while (b < size_ && mul(a, b) != identity_) ++b;
    if (b == size_) throw IntegrityError("element without inverse in " + name_);
    inverse_[a] = b;
  }
}

Element FiniteGroup::pow(Element a, std::int64_t e) const {
  Element base = e < 0 ? inv(a) : a;
  std::uint64_t m = e < 0 ? -static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
  Element acc = identity_;
  while (m != 0) {
    if (m & 1U) acc = mul(acc, base);
    m >>= 1;
    base = mul(base, base);
  }
  return acc;
}

bool FiniteGroup::satisfies_group_axioms() const {
  for (Element a = 0; a < size_; ++a) {
    if (mul(a, identity_) != a || mul(identity_, a) != a) return false;
    if (mul(a, inv(a)) != identity_ || mul(inv(a), a) != identity_) return false;
    for (Element b = 0; b < size_; ++b) {
      Element ab = mul(a, b);
      for (Element c = 0; c < size_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
    }
  }
  return true;
}

std::size_t element_order(const FiniteGroup& group, Element g) {
  if (!group.contains(g))
    throw MembershipError("element " + std::to_string(g) + " is not in " + group.name());
  std::size_t n = 1;
  for (Element x = g; x != group.identity(); x = group.mul(x, g)) ++n;
  return n;
}

std::vector<Element> subgroup_closure(const FiniteGroup& group, std::span<const Element> gens) {
  std::vector<Element> elements{group.identity()};
  std::vector<bool> seen(group.size(), false);
  seen[group.identity()] = true;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (Element g : gens) {
      Element next = group.mul(elements[head], g);
      if (!seen[next]) {
        seen[next] = true;
        elements.push_back(next);
      }
    }
  }
  return elements;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& group) {
  std::vector<ConjugacyClass> classes;
  std::vector<bool> assigned(group.size(), false);
  for (Element a = 0; a < group.size(); ++a) {
    if (assigned[a]) continue;
    ConjugacyClass cls{a, {}};
    for (Element g = 0; g < group.size(); ++g) {
      Element c = group.conjugate(a, g);
      if (!assigned[c]) {
        assigned[c] = true;
        cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Element> center(const FiniteGroup& group) {
  std::vector<Element> z;
  for (Element a = 0; a < group.size(); ++a) {
    bool central = true;
    for (Element b = 0; b < group.size() && central; ++b)
      central = group.mul(a, b) == group.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

bool is_abelian(const FiniteGroup& group) { return center(group).size() == group.size(); }

bool is_simple(const FiniteGroup& group) {
  if (group.size() == 1) return false;
  for (const auto& cls : conjugacy_classes(group)) {
    if (cls.representative == group.identity()) continue;
    if (subgroup_closure(group, cls.members).size() != group.size()) return false;
  }
  return true;
}

}  // namespace qdim
