#include "qdim/icosian.hpp"

#include <algorithm>

namespace qdim {

namespace {

const Quaternion& quaternion_key(const Quaternion& q) { return q; }

}  // namespace

Quaternion IcosianGroup::generator_s() {
  GoldenNum half = GoldenNum::rational(1, 2);
  return Quaternion(half, half, half, half);
}

Quaternion IcosianGroup::generator_t() {
  // (phi + phi^-1 i + j) / 2 with phi^-1 = phi - 1
  GoldenNum half = GoldenNum::rational(1, 2);
  return Quaternion(half * GoldenNum::phi(), half * (GoldenNum::phi() - 1), half, 0);
}

IcosianGroup::IcosianGroup(std::vector<Quaternion> elements, FiniteGroup group)
    : elements_(std::move(elements)), group_(std::move(group)) {
  gen_s_ = index_of(generator_s());
  gen_t_ = index_of(generator_t());
  minus_one_ = index_of(-Quaternion::one());
}

Element IcosianGroup::index_of(const Quaternion& q) const {
  auto it = std::find(elements_.begin(), elements_.end(), q);
  if (it == elements_.end()) throw MembershipError(q.to_string() + " is not an icosian unit");
  return static_cast<Element>(it - elements_.begin());
}

IcosianGroup generate_2I() {
  Quaternion s = IcosianGroup::generator_s();
  Quaternion t = IcosianGroup::generator_t();
  std::vector<Quaternion> gens{s, t, s.inverse(), t.inverse()};
  auto mul = [](const Quaternion& a, const Quaternion& b) { return a * b; };
  auto closure = bfs_closure(gens, Quaternion::one(), mul, quaternion_key, IcosianGroup::kOrder);
  if (!closure)
    throw IntegrityError("closure of the 2I generators exceeds 120 elements");
  if (closure->elements.size() != IcosianGroup::kOrder)
    throw IntegrityError("closure of the 2I generators has " +
                         std::to_string(closure->elements.size()) + " elements, expected 120");
  FiniteGroup group = tabulate("2I", *closure, gens, mul, quaternion_key,
                               [](const Quaternion& q) { return q.to_string(); });
  return IcosianGroup(std::move(closure->elements), std::move(group));
}

const IcosianGroup& binary_icosahedral() {
  static const IcosianGroup instance = generate_2I();
  return instance;
}

CentralQuotient central_quotient(const IcosianGroup& icosians) {
  const FiniteGroup& g = icosians.group();
  const Element minus_one = icosians.minus_one();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> projection(g.size(), kUnset);
  std::vector<Element> representatives;
  for (Element a = 0; a < g.size(); ++a) {
    if (projection[a] != kUnset) continue;
    auto coset = static_cast<Element>(representatives.size());
    projection[a] = coset;
    projection[g.mul(a, minus_one)] = coset;
    representatives.push_back(a);
  }
  const std::size_t n = representatives.size();
  std::vector<Element> table(n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back("+-" + icosians.quaternion(representatives[a]).to_string());
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = projection[g.mul(representatives[a], representatives[b])];
  }
  return {FiniteGroup("2I/{+-1}", n, std::move(table), std::move(labels)), std::move(projection)};
}

}  // namespace qdim
