#include "qdim/quotients.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "qdim/two_bridge.hpp"

namespace qdim {

namespace {

using Perm = std::array<std::uint8_t, 5>;

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::array<bool, 5> seen{};
  for (std::uint8_t start = 0; start < 5; ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    for (std::uint8_t i = start; !seen[i]; i = p[i]) {
      seen[i] = true;
      if (out.back() != '(') out += ' ';
      out += std::to_string(i + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// Runs `accept` over candidate indices [0, total) split into contiguous
// slices, one per worker, and returns accepted indices in increasing order.
template <class Accept>
std::vector<std::uint64_t> parallel_filter(std::uint64_t total, unsigned jobs, Accept accept) {
  jobs = std::max(1U, jobs);
  if (jobs == 1 || total < 2) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 0; c < total; ++c)
      if (accept(c)) out.push_back(c);
    return out;
  }
  std::vector<std::vector<std::uint64_t>> partial(jobs);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (total + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      const std::uint64_t begin = std::min<std::uint64_t>(total, w * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
      for (std::uint64_t c = begin; c < end; ++c)
        if (accept(c)) partial[w].push_back(c);
    });
  }
  for (auto& t : workers) t.join();
  std::vector<std::uint64_t> out;
  for (auto& part : partial) out.insert(out.end(), part.begin(), part.end());
  return out;
}

bool generates(const FiniteGroup& g, std::span<const Element> images) {
  return subgroup_closure(g, images).size() == g.size();
}

}  // namespace

FiniteGroup alternating_group_5() {
  const Perm identity{0, 1, 2, 3, 4};
  const Perm three_cycle{1, 2, 0, 3, 4};
  const Perm five_cycle{1, 2, 3, 4, 0};
  auto mul = [](const Perm& a, const Perm& b) {
    Perm c{};
    for (std::size_t i = 0; i < 5; ++i) c[i] = b[a[i]];
    return c;
  };
  auto key = [](const Perm& p) {
    std::uint32_t k = 0;
    for (auto v : p) k = k * 5 + v;
    return k;
  };
  const std::vector<Perm> gens{three_cycle, five_cycle};
  auto closure = bfs_closure(gens, identity, mul, key, 60);
  if (!closure || closure->elements.size() != 60)
    throw IntegrityError("A5 generators do not close to 60 elements");
  return tabulate("A5", *closure, gens, mul, key, cycle_notation);
}

FiniteGroup cyclic_group(std::size_t d) {
  if (d == 0) throw InputError("cyclic group order must be positive");
  if (d > 4096) throw ResourceError("cyclic group of order " + std::to_string(d) + " is too large");
  std::vector<Element> table(d * d);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < d; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < d; ++b) table[a * d + b] = static_cast<Element>((a + b) % d);
  }
  return FiniteGroup("C" + std::to_string(d), d, std::move(table), std::move(labels));
}

std::optional<std::size_t> first_unkilled_relator(const Presentation& p, const FiniteGroup& g,
                                                  std::span<const Element> images) {
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    if (eval_word(p.relators[r], images, g) != g.identity()) return r;
  return std::nullopt;
}

GroupHom verify_hom(const Presentation& p, const FiniteGroup& g, std::vector<Element> images) {
  if (images.size() != p.rank())
    throw InputError("expected " + std::to_string(p.rank()) + " generator images, got " +
                     std::to_string(images.size()));
  for (Element e : images)
    if (!g.contains(e)) throw MembershipError("image " + std::to_string(e) + " is not in " + g.name());
  if (auto bad = first_unkilled_relator(p, g, images))
    throw PreconditionError("relator " + render_word(p.relators[*bad], p.generators) +
                            " is not killed in " + g.name());
  GroupHom h(g.name(), std::move(images));
  h.verified_ = true;
  return h;
}

bool is_surjective(const GroupHom& h, const FiniteGroup& g) {
  if (!h.verified()) throw PreconditionError("is_surjective needs a verified homomorphism");
  return generates(g, h.images());
}

HomSearchResult enumerate_homs(const Presentation& p, const FiniteGroup& g,
                               const HomSearchOptions& options) {
  if (p.rank() != 2)
    throw InputError("homomorphism search supports exactly 2 generators, got " + std::to_string(p.rank()));
  if (g.size() > options.bound)
    throw ResourceError("target " + g.name() + " has order " + std::to_string(g.size()) +
                        ", above the search bound " + std::to_string(options.bound));

  const std::uint64_t n = g.size();
  auto accept = [&](Element a, Element b) {
    const std::array<Element, 2> images{a, b};
    if (first_unkilled_relator(p, g, images)) return false;
    return !options.surjective_only || generates(g, images);
  };

  HomSearchResult result;
  const auto classes = conjugacy_classes(g);
  result.reduced_candidates = classes.size() * n;
  auto found = parallel_filter(result.reduced_candidates, options.jobs, [&](std::uint64_t c) {
    return accept(classes[c / n].representative, static_cast<Element>(c % n));
  });
  result.reduced_count = found.size();

  std::set<std::array<Element, 2>> orbit;
  for (std::uint64_t c : found) {
    const auto& cls = classes[c / n];
    result.count += cls.members.size();
    const Element a = cls.representative;
    const auto b = static_cast<Element>(c % n);
    for (Element by = 0; by < n; ++by) orbit.insert({g.conjugate(a, by), g.conjugate(b, by)});
  }
  if (orbit.size() != result.count)
    throw IntegrityError("conjugation orbit of the reduced solutions has " + std::to_string(orbit.size()) +
                         " elements, class-size count is " + std::to_string(result.count));

  result.homs.reserve(orbit.size());
  for (const auto& images : orbit) result.homs.push_back(verify_hom(p, g, {images[0], images[1]}));

  if (options.exact_count) {
    auto all = parallel_filter(n * n, options.jobs, [&](std::uint64_t c) {
      return accept(static_cast<Element>(c / n), static_cast<Element>(c % n));
    });
    result.exact_count = all.size();
    if (all.size() != result.count)
      throw IntegrityError("full enumeration found " + std::to_string(all.size()) +
                           " homomorphisms, reduced search predicted " + std::to_string(result.count));
  }
  return result;
}

std::array<Element, 2> family_images(const IcosianGroup& icosians) {
  const Quaternion s = IcosianGroup::generator_s();
  const Quaternion t = IcosianGroup::generator_t();
  const Quaternion t2 = t * t;
  return {icosians.index_of(-t2), icosians.index_of(s * s * t2 * s)};
}

GroupHom family_hom(long N, long k) {
  const FamilyMember member = family_presentation(N, k);
  const IcosianGroup& icosians = binary_icosahedral();
  const auto images = family_images(icosians);
  if (auto bad = first_unkilled_relator(member.presentation, icosians.group(), images))
    throw IntegrityError("family map x -> -t^2, y -> s^2 t^2 s does not kill relator " +
                         std::to_string(*bad + 1) + " for N = " + std::to_string(N) +
                         ", k = " + std::to_string(k));
  GroupHom h = verify_hom(member.presentation, icosians.group(), {images[0], images[1]});
  if (!is_surjective(h, icosians.group())) throw IntegrityError("family map is not onto 2I");
  return h;
}

std::optional<GroupHom> search_order10_surjection(const Presentation& p,
                                                  const IcosianGroup& icosians, unsigned jobs) {
  HomSearchOptions options;
  options.surjective_only = true;
  options.jobs = jobs;
  for (const GroupHom& h : enumerate_homs(p, icosians.group(), options).homs)
    if (element_order(icosians.group(), h.images()[0]) == 10) return h;
  return std::nullopt;
}

GroupHom project_to_quotient(const GroupHom& h, const Presentation& p,
                             const CentralQuotient& quotient) {
  std::vector<Element> images;
  for (Element e : h.images()) images.push_back(quotient.projection.at(e));
  return verify_hom(p, quotient.group, std::move(images));
}

}  // namespace qdim
