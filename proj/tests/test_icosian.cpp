#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <numeric>

#include "qdim/icosian.hpp"
#include "qdim/quotients.hpp"
#include "support/oracles.hpp"

using namespace qdim;

TEST_CASE("generate_2I") {
  const IcosianGroup ico = generate_2I();
  const FiniteGroup& g = ico.group();
  CHECK(g.size() == 120);
  CHECK(ico.elements().size() == 120);
  CHECK(ico.elements().front() == Quaternion::one());
  CHECK(g.identity() == 0);
  CHECK(ico.quaternion(ico.minus_one()) == -Quaternion::one());
  CHECK(center(g) == std::vector<Element>{g.identity(), ico.minus_one()});

  const Element s = ico.gen_s();
  CHECK(ico.quaternion(s) == IcosianGroup::generator_s());
  CHECK(g.pow(s, 3) == ico.minus_one());
  CHECK(g.pow(s, 6) == g.identity());
  // BFS order: 1, then s, t, s^-1, t^-1.
  CHECK(s == 1);
  CHECK(ico.gen_t() == 2);
}

TEST_CASE("2I ordering is reproducible") {
  const IcosianGroup a = generate_2I();
  const IcosianGroup b = generate_2I();
  CHECK(a.elements() == b.elements());
  CHECK(binary_icosahedral().elements() == a.elements());
}

TEST_CASE("every icosian is a unit and the table is a group") {
  const IcosianGroup& ico = binary_icosahedral();
  for (const Quaternion& q : ico.elements()) CHECK(q.norm() == GoldenNum(1));
  CHECK(ico.group().satisfies_group_axioms());
  for (Element a = 0; a < 120; a += 7)
    for (Element b = 0; b < 120; b += 5)
      CHECK(ico.quaternion(ico.group().mul(a, b)) == ico.quaternion(a) * ico.quaternion(b));
}

TEST_CASE("element_order") {
  const IcosianGroup& ico = binary_icosahedral();
  const FiniteGroup& g = ico.group();
  const Quaternion t = IcosianGroup::generator_t();
  CHECK(element_order(g, g.identity()) == 1);
  CHECK(element_order(g, ico.minus_one()) == 2);
  CHECK(element_order(g, ico.index_of(-(t * t))) == 10);
  CHECK(element_order(g, ico.gen_t()) == 10);
  CHECK(element_order(g, ico.gen_s()) == 6);
  CHECK_THROWS_AS(element_order(g, 120), MembershipError);
  CHECK_THROWS_AS(ico.index_of(Quaternion(2)), MembershipError);
}

TEST_CASE("order statistics of 2I") {
  // 2I has 1, 1, 30, 20, 24, 20, 24 elements of orders 1, 2, 4, 6, 10, 3, 5.
  const FiniteGroup& g = binary_icosahedral().group();
  std::map<std::size_t, int> counts;
  for (Element a = 0; a < g.size(); ++a) ++counts[element_order(g, a)];
  CHECK(counts == std::map<std::size_t, int>{{1, 1}, {2, 1}, {3, 20}, {4, 30}, {5, 24}, {6, 20}, {10, 24}});
}

TEST_CASE("conjugacy classes of 2I") {
  const FiniteGroup& g = binary_icosahedral().group();
  auto classes = conjugacy_classes(g);
  CHECK(classes.size() == 9);
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.members.size());
  CHECK(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) == 120);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == testing::orbit_class_sizes(g));
}

TEST_CASE("central_quotient") {
  const IcosianGroup& ico = binary_icosahedral();
  const FiniteGroup& g = ico.group();
  const CentralQuotient cq = central_quotient(ico);
  CHECK(cq.group.size() == 60);
  CHECK_FALSE(is_abelian(cq.group));
  CHECK(is_simple(cq.group));
  CHECK(cq.group.satisfies_group_axioms());

  // Independent simplicity check: every nonidentity normal closure is everything.
  for (Element a = 1; a < cq.group.size(); ++a)
    REQUIRE(testing::naive_normal_closure(cq.group, a).size() == 60);

  std::vector<int> fibre(60, 0);
  for (Element a = 0; a < g.size(); ++a) {
    ++fibre[cq.projection[a]];
    for (Element b = 0; b < g.size(); ++b)
      REQUIRE(cq.projection[g.mul(a, b)] == cq.group.mul(cq.projection[a], cq.projection[b]));
  }
  CHECK(std::all_of(fibre.begin(), fibre.end(), [](int n) { return n == 2; }));
  std::vector<Element> kernel;
  for (Element a = 0; a < g.size(); ++a)
    if (cq.projection[a] == cq.group.identity()) kernel.push_back(a);
  CHECK(kernel == center(g));
}

TEST_CASE("central quotient matches the permutation A5") {
  const CentralQuotient cq = central_quotient(binary_icosahedral());
  const FiniteGroup a5 = alternating_group_5();
  CHECK(a5.size() == 60);
  CHECK(is_simple(a5));
  CHECK_FALSE(is_abelian(a5));
  CHECK(testing::orbit_class_sizes(a5) == testing::orbit_class_sizes(cq.group));
}

TEST_CASE("is_simple rejects nonsimple groups") {
  CHECK_FALSE(is_simple(binary_icosahedral().group()));  // center is normal
  CHECK_FALSE(is_simple(cyclic_group(1)));
  CHECK_FALSE(is_simple(cyclic_group(6)));
  CHECK(is_simple(cyclic_group(5)));
}
