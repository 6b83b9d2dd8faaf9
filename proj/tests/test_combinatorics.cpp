#include <doctest.h>

#include "wbr/combinatorics.hpp"

#include <algorithm>
#include <numeric>

using namespace wbr;

namespace {

// Independent enumeration oracle: number of partitions by the classic
// recursive count, no sharing with the library's generator.
int partition_count_oracle(int m, int maxpart) {
  if (m == 0) return 1;
  if (maxpart == 0) return 0;
  int c = 0;
  for (int p = std::min(m, maxpart); p >= 1; --p) c += partition_count_oracle(m - p, p);
  return c;
}

// Hook length formula for |Std(lambda)|.
long hook_count_oracle(const Partition& lam) {
  const int m = lam.size();
  long num = 1;
  for (int i = 2; i <= m; ++i) num *= i;
  Partition t = lam.transpose();
  long denom = 1;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam.parts()[i]; ++j)
      denom *= (lam.parts()[i] - j) + (t.parts()[j] - i) - 1;
  return num / denom;
}

std::vector<int> iota1(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

}  // namespace

TEST_CASE("partition enumeration") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(0)[0].empty());
  CHECK(enumerate_partitions(4).size() == partition_count_oracle(4, 4));
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(5).size() == partition_count_oracle(5, 5));
  CHECK(enumerate_partitions(5).size() == 7);
  // descending lexicographic order
  auto p4 = enumerate_partitions(4);
  CHECK(p4.front() == Partition({4}));
  CHECK(p4.back() == Partition({1, 1, 1, 1}));
  for (size_t i = 1; i < p4.size(); ++i) CHECK(p4[i] < p4[i - 1]);
}

TEST_CASE("dominance order") {
  CHECK(dominates(Composition({2, 2}), Composition({2, 1, 1})));
  CHECK(dominates(Composition({3, 1}), Composition({2, 2})));
  CHECK_FALSE(dominates(Composition({2, 2}), Composition({3, 1})));
  CHECK_THROWS(dominates(Composition({2}), Composition({1})));

  for (int m = 1; m <= 6; ++m) {
    auto ps = enumerate_partitions(m);
    for (const auto& a : ps) {
      CHECK(dominates(Composition(a), Composition(a)));
      for (const auto& b : ps) {
        if (dominates(Composition(a), Composition(b)) &&
            dominates(Composition(b), Composition(a)))
          CHECK(a == b);
        for (const auto& c : ps)
          if (dominates(Composition(a), Composition(b)) &&
              dominates(Composition(b), Composition(c)))
            CHECK(dominates(Composition(a), Composition(c)));
      }
    }
  }
}

TEST_CASE("standard tableau counts match hook lengths") {
  for (int m = 1; m <= 6; ++m)
    for (const auto& lam : enumerate_partitions(m)) {
      auto tabs = standard_tableaux(SkewShape(lam), iota1(m));
      CHECK(static_cast<long>(tabs.size()) == hook_count_oracle(lam));
      for (const auto& t : tabs) CHECK(t.is_standard());
    }
}

TEST_CASE("standard tableaux on alphabets") {
  CHECK(standard_tableaux(SkewShape(Partition({2, 1})), {1, 2, 3}).size() == 2);
  CHECK(standard_tableaux(SkewShape(Partition({1, 1, 1})), {4, 7, 9}).size() == 1);
  auto desc = standard_tableaux(SkewShape(Partition({2})), {2, 1}, false);
  REQUIRE(desc.size() == 1);
  CHECK(desc[0].rows()[0] == std::vector<int>{2, 1});
}

TEST_CASE("d_perm follows the place-permutation convention") {
  Tableau tlam = Tableau::canonical(SkewShape(Partition({3, 2})), iota1(5), true);
  CHECK(tlam.d_perm().is_identity());

  Tableau t(SkewShape(Partition({2, 1})), {{1, 3}, {2}}, true);
  Perm d = t.d_perm();
  CHECK(d == Perm::transposition(3, 1, 2));
  // t.d(t) = canonical: applying d as a place permutation recovers 1..m
  std::vector<int> reading = t.row_reading();
  for (int p = 0; p < 3; ++p) CHECK(reading[d(p)] == p + 1);

  Tableau anti(SkewShape(Partition({2, 1})), {{9, 5}, {2}}, false);
  CHECK(anti.d_perm().is_identity());
}

TEST_CASE("restriction") {
  Tableau tlam = Tableau::canonical(SkewShape(Partition({2, 1})), iota1(3), true);
  CHECK(tlam.restrict_down(3) == tlam);
  CHECK(tlam.restrict_down(2).shape().row_lengths() == std::vector<int>{2});

  Tableau anti(SkewShape(Partition({1, 1})), {{2}, {1}}, false);
  Tableau up = anti.restrict_up(2);
  CHECK(up.n_cells() == 1);
  CHECK(up.rows()[0] == std::vector<int>{2});
}

TEST_CASE("tableau dominance is a partial order on standard tableaux") {
  for (int m = 1; m <= 5; ++m) {
    std::vector<Tableau> all;
    for (const auto& lam : enumerate_partitions(m)) {
      auto tabs = standard_tableaux(SkewShape(lam), iota1(m));
      all.insert(all.end(), tabs.begin(), tabs.end());
    }
    for (const auto& a : all) {
      CHECK(tableau_dominates(a, a));
      for (const auto& b : all) {
        if (tableau_dominates(a, b) && tableau_dominates(b, a)) CHECK(a == b);
        for (const auto& c : all)
          if (tableau_dominates(a, b) && tableau_dominates(b, c))
            CHECK(tableau_dominates(a, c));
      }
    }
  }
  // anti-dominance on anti-standard tableaux
  for (int m = 1; m <= 4; ++m) {
    std::vector<Tableau> all;
    for (const auto& lam : enumerate_partitions(m)) {
      auto tabs = standard_tableaux(SkewShape(lam), iota1(m), false);
      all.insert(all.end(), tabs.begin(), tabs.end());
    }
    for (const auto& a : all)
      for (const auto& b : all) {
        if (tableau_dominates(a, b) && tableau_dominates(b, a)) CHECK(a == b);
      }
  }
}

TEST_CASE("semistandard tableaux, paper convention") {
  auto one = semistandard_tableaux(Partition({2}), 2);
  REQUIRE(one.size() == 1);
  CHECK(one[0].rows()[0] == std::vector<int>{1, 2});
  CHECK(semistandard_tableaux(Partition({1, 1}), 2).size() == 3);
  CHECK(semistandard_tableaux(Partition({2}), 1).empty());
  for (const auto& t : semistandard_tableaux(Partition({3, 2}), 3)) CHECK(t.semistandard());
}

TEST_CASE("dimension count: sum over shapes of |SSYT| * |SYT| = n^m") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 3; ++n) {
      long total = 0;
      for (const auto& lam : enumerate_partitions(m))
        total += static_cast<long>(semistandard_tableaux(lam, n).size()) *
                 static_cast<long>(standard_tableaux(SkewShape(lam), iota1(m)).size());
      long expect = 1;
      for (int i = 0; i < m; ++i) expect *= n;
      CHECK(total == expect);
    }
}

TEST_CASE("tableau json round trip") {
  Tableau t(SkewShape(Composition({3, 2}), Composition({1})), {{5, 2}, {4, 1}}, false);
  auto j = t.to_json();
  CHECK(j["order"] == "desc");
  CHECK(Tableau::from_json(j) == t);
}
