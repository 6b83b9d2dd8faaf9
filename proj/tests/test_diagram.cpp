#include <doctest.h>

#include "wbr/diagram.hpp"

#include <numeric>

using namespace wbr;

namespace {

GeneralizedDiagram e_diagram(int r, int s) {
  // wall contraction of B_{r,s}: arcs (r, r+1) on top and bottom
  std::vector<std::pair<int, int>> edges;
  const int t = r + s;
  for (int i = 0; i < r - 1; ++i) edges.emplace_back(i, t + i);
  for (int i = r + 1; i < t; ++i) edges.emplace_back(i, t + i);
  edges.emplace_back(r - 1, r);
  edges.emplace_back(t + r - 1, t + r);
  return GeneralizedDiagram(Arrows{r, s}, Arrows{r, s}, std::move(edges));
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("identity law and e*e") {
  auto id = GeneralizedDiagram::identity(Arrows{1, 1});
  auto e = e_diagram(1, 1);
  auto [de, c1] = compose(id, e);
  CHECK(de == e);
  CHECK(c1 == 0);
  auto [ee, c2] = compose(e, e);
  CHECK(ee == e);
  CHECK(c2 == 1);
}

TEST_CASE("permutation diagrams compose like permutations") {
  // all pairs in S_3 embedded on one side of the wall
  std::vector<int> base{0, 1, 2};
  std::vector<Perm> perms;
  std::vector<int> v = base;
  std::sort(v.begin(), v.end());
  do perms.emplace_back(v); while (std::next_permutation(v.begin(), v.end()));
  for (const auto& a : perms)
    for (const auto& b : perms) {
      auto da = GeneralizedDiagram::from_permutation(a, 3, 0);
      auto db = GeneralizedDiagram::from_permutation(b, 3, 0);
      auto [dc, cycles] = compose(da, db);
      CHECK(cycles == 0);
      CHECK(dc == GeneralizedDiagram::from_permutation(a * b, 3, 0));
    }
}

TEST_CASE("from_permutation rejects block mixing") {
  CHECK_THROWS(GeneralizedDiagram::from_permutation(Perm({1, 0}), 1, 1));
  auto d = GeneralizedDiagram::from_permutation(Perm({1, 0, 3, 2}), 2, 2);
  CHECK(d.edges().size() == 4);
}

TEST_CASE("star is an involution and an anti-homomorphism") {
  auto e = e_diagram(2, 1);
  CHECK(e.star() == e);
  auto id = GeneralizedDiagram::identity(Arrows{2, 1});
  CHECK(id.star() == id);
  auto pi = GeneralizedDiagram::from_permutation(Perm({1, 0, 2}), 2, 1);
  CHECK(pi.star() == GeneralizedDiagram::from_permutation(Perm({1, 0, 2}).inverse(), 2, 1));
  for (const auto& a : enumerate_walled(2, 1))
    for (const auto& b : enumerate_walled(2, 1)) {
      CHECK(a.star().star() == a);
      auto [ab, c] = compose(a, b);
      auto [ba_star, c2] = compose(b.star(), a.star());
      CHECK(ab.star() == ba_star);
      CHECK(c == c2);
    }
}

TEST_CASE("composition is associative with matching cycle counts") {
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; r + s <= 3; ++s) {
    auto all = enumerate_walled(r, s);
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) {
          auto [ab, n1] = compose(a, b);
          auto [ab_c, n2] = compose(ab, c);
          auto [bc, m1] = compose(b, c);
          auto [a_bc, m2] = compose(a, bc);
          CHECK(ab_c == a_bc);
          CHECK(n1 + n2 == m1 + m2);
        }
  }
}

TEST_CASE("walled enumeration counts (r+s)!") {
  CHECK(enumerate_walled(1, 0).size() == 1);
  CHECK(enumerate_walled(1, 1).size() == 2);
  CHECK(enumerate_walled(2, 2).size() == 24);
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; r + s <= 6 && s <= 3; ++s)
      CHECK(enumerate_walled(r, s).size() == static_cast<size_t>(factorial(r + s)));
  // canonical order has no duplicates
  auto all = enumerate_walled(2, 2);
  for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
}

TEST_CASE("diagram json round trip and rendering") {
  auto e = e_diagram(2, 2);
  auto j = e.to_json();
  CHECK(j["top"] == "dd uu");
  CHECK(GeneralizedDiagram::from_json(j) == e);
  CHECK(e.render_ascii().find("B2~B3") != std::string::npos);
}
