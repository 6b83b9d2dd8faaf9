#pragma once

#include "wbr/arith.hpp"
#include "wbr/combinatorics.hpp"

#include <json.hpp>

#include <vector>

namespace wbr {

/// Element of Lambda(r,s): partitions of r-k and s-k.
struct ShapePair {
  Partition lam, mu;
  int k = 0;

  bool operator==(const ShapePair& o) const { return lam == o.lam && mu == o.mu && k == o.k; }
  bool operator!=(const ShapePair& o) const { return !(*this == o); }
  bool operator<(const ShapePair& o) const {
    if (k != o.k) return k < o.k;
    if (!(mu == o.mu)) return mu < o.mu;
    return lam < o.lam;
  }
  std::string str() const { return "(" + lam.str() + "," + mu.str() + ")"; }
  nlohmann::json to_json() const { return {{"lam", lam.parts()}, {"mu", mu.parts()}, {"k", k}}; }
};

/// Order on Lambda(r,s): more contractions dominate, ties compare both
/// partitions by dominance.
bool shape_dominates(const ShapePair& a, const ShapePair& b);
bool shape_strictly_dominates(const ShapePair& a, const ShapePair& b);

/// All of Lambda(r,s) in the canonical emission order: k ascending, then
/// mu descending lexicographic, then lam descending lexicographic.
std::vector<ShapePair> enumerate_shapes(int r, int s);

/// Triple (t, u, v): t a nu-tableau on 1..r, u an anti-standard skew
/// tableau on [nu] \ [lam], v a standard mu-tableau; u and v split 1..s.
struct StandardTriple {
  int r = 0, s = 0;
  Partition nu;
  Tableau t;  // ascending, entries 1..r, shape nu
  Tableau u;  // descending, skew [nu]\[lam]
  Tableau v;  // ascending, shape mu

  ShapePair shape() const;
  int k() const { return u.n_cells(); }
  bool is_row_standard() const;
  bool is_standard() const;

  /// nu-tableau with u's entries in place and fillers s+1..s+(r-k) placed
  /// decreasing along the row reading of the lam cells.
  Tableau o_tableau() const;
  /// Row-standard tableau of shape (k, s-k): sorted u entries over sorted
  /// v entries.
  std::vector<std::vector<int>> s_table() const;

  int max_statistic() const;

  bool operator==(const StandardTriple& o) const { return t == o.t && u == o.u && v == o.v; }
  bool operator<(const StandardTriple& o) const;
  std::string str() const;
  nlohmann::json to_json() const;
};

/// The canonical triple of a shape: nu0 = (lam..., 1^k) with all
/// d-permutations trivial.
StandardTriple canonical_triple(const ShapePair& sp, int r, int s);

/// All standard triples of the shape, deterministically ordered.
std::vector<StandardTriple> enumerate_triples(const ShapePair& sp, int r, int s);

/// Sequence of partition pairs from (0,0): lam grows for the first r
/// steps, afterwards either mu grows or lam shrinks by one box.
using Path = std::vector<std::pair<Partition, Partition>>;

Path triple_to_path(const StandardTriple& tr);
StandardTriple path_to_triple(const Path& p, int r, int s);
int path_max(const Path& p);

/// Restriction of a triple: drop the entry s from (u, v), or for s = 0
/// drop r from t.  The result lives in (r, s-1) resp. (r-1, 0).
StandardTriple res_triple(const StandardTriple& tr);

/// Shapes occurring among restrictions of triples of the given shape,
/// sorted with the dominant shape first (the order is linear).
std::vector<ShapePair> res_shapes(const ShapePair& sp, int r, int s);

struct RankCounts {
  Int walled;  // sum of |M|^2 = (r+s)!
  Int endo;    // sum over |M_0|^2, triples with max <= n
  Int ann;     // walled - endo
};

int count_triples(const ShapePair& sp, int r, int s);
int count_triples_bounded(const ShapePair& sp, int r, int s, int n);
RankCounts count_ranks(int r, int s, int n);

}  // namespace wbr
