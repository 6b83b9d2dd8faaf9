#include <doctest.h>

#include "wbr/triples.hpp"

#include <map>
#include <set>

using namespace wbr;

namespace {

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("Lambda(r,s) enumeration and order") {
  auto l22 = enumerate_shapes(2, 2);
  REQUIRE(l22.size() == 6);
  CHECK(l22[0] == ShapePair{Partition({2}), Partition({2}), 0});
  CHECK(l22[1] == ShapePair{Partition({1, 1}), Partition({2}), 0});
  CHECK(l22[2] == ShapePair{Partition({2}), Partition({1, 1}), 0});
  CHECK(l22[3] == ShapePair{Partition({1, 1}), Partition({1, 1}), 0});
  CHECK(l22[4] == ShapePair{Partition({1}), Partition({1}), 1});
  CHECK(l22[5] == ShapePair{Partition(), Partition(), 2});

  CHECK(enumerate_shapes(1, 0) == std::vector<ShapePair>{ShapePair{Partition({1}), Partition(), 0}});
  auto l11 = enumerate_shapes(1, 1);
  REQUIRE(l11.size() == 2);
  CHECK(l11[0] == ShapePair{Partition({1}), Partition({1}), 0});
  CHECK(l11[1] == ShapePair{Partition(), Partition(), 1});

  // the empty pair dominates everything in Lambda(2,2)
  for (const auto& sp : l22) CHECK(shape_dominates(l22[5], sp));
  CHECK(shape_strictly_dominates(l22[0], l22[1]));
  CHECK_FALSE(shape_dominates(l22[1], l22[2]));
}

TEST_CASE("triple counts") {
  CHECK(count_triples(ShapePair{Partition({1}), Partition({1}), 1}, 2, 2) == 4);
  CHECK(count_triples(ShapePair{Partition(), Partition(), 2}, 2, 2) == 2);
  CHECK(count_triples(ShapePair{Partition({2}), Partition({2}), 0}, 2, 2) == 1);

  // profile for dims (2,2)
  std::vector<int> profile;
  for (const auto& sp : enumerate_shapes(2, 2)) profile.push_back(count_triples(sp, 2, 2));
  CHECK(profile == std::vector<int>{1, 1, 1, 1, 4, 2});
}

TEST_CASE("sum of |M|^2 is (r+s)!") {
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; r + s <= 6 && s <= 3; ++s) {
      Int total(0);
      for (const auto& sp : enumerate_shapes(r, s)) {
        Int m = count_triples(sp, r, s);
        total += m * m;
      }
      CHECK(total == Int(factorial(r + s)));
    }
}

TEST_CASE("triples are standard and canonical triple is valid") {
  for (const auto& sp : enumerate_shapes(2, 2)) {
    auto tr0 = canonical_triple(sp, 2, 2);
    CHECK(tr0.is_standard());
    CHECK(tr0.shape() == sp);
    CHECK(tr0.t.d_perm().is_identity());
    CHECK(tr0.o_tableau().d_perm().is_identity());
    bool found = false;
    for (const auto& tr : enumerate_triples(sp, 2, 2)) {
      CHECK(tr.is_standard());
      CHECK(tr.shape() == sp);
      if (tr == tr0) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("path bijection round trip preserves max") {
  for (int r = 0; r <= 2; ++r)
    for (int s = 0; r + s <= 4 && s <= 2; ++s)
      for (const auto& sp : enumerate_shapes(r, s)) {
        std::set<Path> seen;
        for (const auto& tr : enumerate_triples(sp, r, s)) {
          Path p = triple_to_path(tr);
          CHECK(static_cast<int>(p.size()) == r + s + 1);
          CHECK(p.back().first == sp.lam);
          CHECK(p.back().second == sp.mu);
          CHECK(path_to_triple(p, r, s) == tr);
          CHECK(path_max(p) == tr.max_statistic());
          seen.insert(p);
        }
        CHECK(seen.size() == enumerate_triples(sp, r, s).size());
      }
}

TEST_CASE("max statistic examples") {
  CHECK(canonical_triple(ShapePair{Partition({2}), Partition({2}), 0}, 2, 2).max_statistic() == 4);

  // shape (0,0) with nu = (1,1): u is the column (2 over 1); max is 1
  for (const auto& tr : enumerate_triples(ShapePair{Partition(), Partition(), 2}, 2, 2)) {
    if (tr.nu == Partition({1, 1})) CHECK(tr.max_statistic() == 1);
    if (tr.nu == Partition({2})) CHECK(tr.max_statistic() == 2);
  }

  // shape ((1),(1)) with nu = (2), u-entry 2, v-entry 1 has max 3
  for (const auto& tr : enumerate_triples(ShapePair{Partition({1}), Partition({1}), 1}, 2, 2)) {
    if (tr.nu == Partition({2}) && tr.u.rows()[0] == std::vector<int>{2})
      CHECK(tr.max_statistic() == 3);
  }
}

TEST_CASE("M_0 empty iff lam_1 + mu_1 > n") {
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; r + s <= 5 && s <= 3; ++s)
      for (int n = 1; n <= 5; ++n)
        for (const auto& sp : enumerate_shapes(r, s)) {
          bool empty = count_triples_bounded(sp, r, s, n) == 0;
          CHECK(empty == (sp.lam.first() + sp.mu.first() > n));
        }
}

TEST_CASE("restriction of triples") {
  ShapePair sp{Partition({1}), Partition({1}), 1};
  auto shapes = res_shapes(sp, 2, 2);
  REQUIRE(shapes.size() == 3);
  CHECK(shapes[0] == ShapePair{Partition({1}), Partition(), 1});
  CHECK(shapes[1] == ShapePair{Partition({2}), Partition({1}), 0});
  CHECK(shapes[2] == ShapePair{Partition({1, 1}), Partition({1}), 0});
  // fibers 2,1,1
  std::map<ShapePair, int> fiber;
  for (const auto& tr : enumerate_triples(sp, 2, 2)) {
    auto rt = res_triple(tr);
    CHECK(rt.is_standard());
    fiber[rt.shape()]++;
  }
  CHECK(fiber[shapes[0]] == 2);
  CHECK(fiber[shapes[1]] == 1);
  CHECK(fiber[shapes[2]] == 1);

  // s = 0: restriction removes the cell containing r
  StandardTriple t3 = canonical_triple(ShapePair{Partition({2, 1}), Partition(), 0}, 3, 0);
  auto rt = res_triple(t3);
  CHECK(rt.shape() == ShapePair{Partition({2}), Partition(), 0});
}

TEST_CASE("restriction shape sets are linearly ordered and fibers sum up") {
  for (int r = 1; r <= 3; ++r)
    for (int s = 0; r + s <= 5 && s <= 2; ++s)
      for (const auto& sp : enumerate_shapes(r, s)) {
        if (r + s == 0) continue;
        auto shapes = res_shapes(sp, r, s);
        for (size_t i = 1; i < shapes.size(); ++i)
          CHECK(shape_strictly_dominates(shapes[i - 1], shapes[i]));
        int total = 0;
        std::map<ShapePair, int> fiber;
        for (const auto& tr : enumerate_triples(sp, r, s)) fiber[res_triple(tr).shape()]++;
        int rr = s == 0 ? r - 1 : r, ss = s == 0 ? 0 : s - 1;
        for (const auto& [shp, cnt] : fiber) {
          CHECK(cnt == count_triples(shp, rr, ss));
          total += cnt;
        }
        CHECK(total == count_triples(sp, r, s));
      }
}

TEST_CASE("rank counting formulas") {
  auto rc = count_ranks(2, 2, 4);
  CHECK(rc.walled == 24);
  CHECK(rc.endo == 24);
  CHECK(rc.ann == 0);
  rc = count_ranks(2, 2, 2);
  CHECK(rc.endo == 14);
  CHECK(rc.ann == 10);
  rc = count_ranks(2, 2, 3);
  CHECK(rc.endo == 23);
  CHECK(rc.ann == 1);
  // M_0 sizes at n=2 across the shape order
  std::vector<int> m0;
  for (const auto& sp : enumerate_shapes(2, 2)) m0.push_back(count_triples_bounded(sp, 2, 2, 2));
  CHECK(m0 == std::vector<int>{0, 0, 0, 1, 3, 2});
}

TEST_CASE("shape pair json") {
  ShapePair sp{Partition({2, 1}), Partition({1}), 1};
  auto j = sp.to_json();
  CHECK(j["k"] == 1);
  CHECK(j["lam"] == nlohmann::json({2, 1}));
}
