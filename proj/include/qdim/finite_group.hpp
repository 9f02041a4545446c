#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "qdim/errors.hpp"

namespace qdim {

using Element = std::uint32_t;

/// A finite group given by its full multiplication table. Elements are the
/// indices 0..size()-1; labels are used only for rendering.
class FiniteGroup {
 public:
  using value_type = Element;

  FiniteGroup(std::string name, std::size_t size, std::vector<Element> table,
              std::vector<std::string> labels);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return size_; }
  bool contains(Element a) const noexcept { return a < size_; }

  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const { return table_[a * size_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element pow(Element a, std::int64_t e) const;
  Element conjugate(Element a, Element by) const { return mul(mul(by, a), inv(by)); }

  const std::string& label(Element a) const { return labels_.at(a); }

  /// Exhaustive associativity/identity/inverse check over all triples.
  bool satisfies_group_axioms() const;

 private:
  std::string name_;
  std::size_t size_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  Element identity_ = 0;
};

/// Result of a breadth-first closure: element b (b > 0) was first reached
/// as elements[parent[b]] * gens[via[b]].
template <class T>
struct Closure {
  std::vector<T> elements;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via;
};

/// Breadth-first closure of `gens` under right multiplication, starting from
/// `identity`. Elements appear in insertion order. Returns nullopt once more
/// than `max_size` distinct elements have been found.
template <class T, class Mul, class KeyFn>
std::optional<Closure<T>> bfs_closure(const std::vector<T>& gens, const T& identity, Mul mul,
                                      KeyFn key, std::size_t max_size) {
  Closure<T> c{{identity}, {0}, {0}};
  std::unordered_map<std::decay_t<decltype(key(identity))>, std::size_t> seen{{key(identity), 0}};
  for (std::size_t head = 0; head < c.elements.size(); ++head) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      T next = mul(c.elements[head], gens[g]);
      auto k = key(next);
      if (seen.contains(k)) continue;
      if (c.elements.size() == max_size) return std::nullopt;
      seen.emplace(std::move(k), c.elements.size());
      c.elements.push_back(std::move(next));
      c.parent.push_back(head);
      c.via.push_back(g);
    }
  }
  return c;
}

/// Builds the multiplication table of a closure. Only the products
/// element * generator are computed in T; the rest follow from
/// a * b = (a * parent(b)) * gen(b).
template <class T, class Mul, class KeyFn, class LabelFn>
FiniteGroup tabulate(std::string name, const Closure<T>& closure, const std::vector<T>& gens,
                     Mul mul, KeyFn key, LabelFn label) {
  const auto& elements = closure.elements;
  const std::size_t n = elements.size();
  std::unordered_map<std::decay_t<decltype(key(elements.front()))>, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(key(elements[i]), static_cast<Element>(i));

  std::vector<Element> right(n * gens.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto it = index.find(key(mul(elements[a], gens[g])));
      if (it == index.end()) throw IntegrityError("element list is not closed under multiplication");
      right[a * gens.size() + g] = it->second;
    }

  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    table[a * n] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b)
      table[a * n + b] = right[table[a * n + closure.parent[b]] * gens.size() + closure.via[b]];
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const T& e : elements) labels.push_back(label(e));
  return FiniteGroup(std::move(name), n, std::move(table), std::move(labels));
}

/// Least n >= 1 with g^n = 1. Throws MembershipError if g is not in G.
std::size_t element_order(const FiniteGroup& group, Element g);

/// The subgroup generated by `gens`, in BFS order from the identity.
std::vector<Element> subgroup_closure(const FiniteGroup& group, std::span<const Element> gens);

struct ConjugacyClass {
  Element representative;  // smallest index in the class
  std::vector<Element> members;
};

/// Conjugacy classes ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& group);

std::vector<Element> center(const FiniteGroup& group);
bool is_abelian(const FiniteGroup& group);

/// True iff the group is nontrivial and the normal closure of every
/// nonidentity element is the whole group.
bool is_simple(const FiniteGroup& group);

}  // namespace qdim
