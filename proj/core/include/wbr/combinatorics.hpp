#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace wbr {

/// Permutation of {0,...,n-1}; composition is left-to-right,
/// (a*b)(i) = b(a(i)), matching concatenation of permutation diagrams.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> v) : img(std::move(v)) {}
  static Perm identity(int n);
  static Perm transposition(int n, int i, int j);

  int size() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }
  bool is_identity() const;
  Perm inverse() const;
  int sign() const;
  friend Perm operator*(const Perm& a, const Perm& b);
  bool operator==(const Perm& o) const { return img == o.img; }
};

/// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;                 // number of boxes
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  int first() const { return part(0); }
  bool empty() const { return parts_.empty(); }

  bool contains(const Partition& inner) const;
  /// Transposed (conjugate) partition.
  Partition transpose() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }
  std::string str() const;

private:
  std::vector<int> parts_;
};

class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(const Partition& p) : parts_(p.parts()) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int part(int i) const { return i < static_cast<int>(parts_.size()) ? parts_[i] : 0; }

  bool operator==(const Composition& o) const { return parts_ == o.parts_; }

private:
  std::vector<int> parts_;
};

/// All partitions of m in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int m);

/// Prefix-sum dominance; throws if the sizes differ.
bool dominates(const Composition& a, const Composition& b);
bool strictly_dominates(const Composition& a, const Composition& b);

/// Row-length dominance for (possibly skew) shapes given as row-length lists.
/// This compares prefix sums and requires equal totals.
bool dominates_row_lengths(const std::vector<int>& a, const std::vector<int>& b);

/// Skew diagram [outer] \ [inner], rows flush left; inner may be empty.
class SkewShape {
public:
  SkewShape() = default;
  SkewShape(Composition outer, Composition inner);
  SkewShape(const Partition& straight) : SkewShape(Composition(straight), Composition()) {}

  const Composition& outer() const { return outer_; }
  const Composition& inner() const { return inner_; }
  int n_rows() const { return static_cast<int>(outer_.parts().size()); }
  int row_begin(int i) const { return inner_.part(i); }
  int row_end(int i) const { return outer_.part(i); }
  int n_cells() const;
  bool is_straight() const { return inner_.size() == 0; }
  std::vector<int> row_lengths() const;
  bool contains_cell(int i, int j) const;

  bool operator==(const SkewShape& o) const { return outer_ == o.outer_ && inner_ == o.inner_; }

private:
  Composition outer_, inner_;
};

/// Injective filling of a skew diagram with integer entries, read with a
/// declared linear order on the alphabet (ascending or descending).
class Tableau {
public:
  Tableau() : ascending_(true) {}
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows, bool ascending = true);

  static Tableau canonical(const SkewShape& shape, std::vector<int> alphabet, bool ascending);

  const SkewShape& shape() const { return shape_; }
  bool ascending() const { return ascending_; }
  int n_cells() const { return shape_.n_cells(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  /// Entry at ambient cell (i, j); the cell must lie in the shape.
  int at(int i, int j) const;
  /// Entries ordered by the row reading of the diagram.
  std::vector<int> row_reading() const;
  /// The set of entries, sorted ascending.
  std::vector<int> fill() const;

  bool row_standard() const;
  bool is_standard() const;  // row and column standard w.r.t. the declared order

  /// Entries <= bound (paper's "down" restriction) or >= bound ("up").
  Tableau restrict_down(int bound) const;
  Tableau restrict_up(int bound) const;

  /// Place permutation w with t.w equal to the canonical tableau of the
  /// declared order, acting on row-reading positions.
  Perm d_perm() const;

  bool operator==(const Tableau& o) const;
  bool operator<(const Tableau& o) const;
  std::string str() const;
  nlohmann::json to_json() const;
  static Tableau from_json(const nlohmann::json& j);

private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
  bool ascending_;
};

/// shape(t restricted at every value) dominance; both tableaux must carry
/// the same fill.  For ascending tableaux restrictions go down, for
/// descending ones they go up.
bool tableau_dominates(const Tableau& a, const Tableau& b);
bool tableau_strictly_dominates(const Tableau& a, const Tableau& b);

/// All standard tableaux of the shape on the given alphabet, ordered
/// deterministically.  With ascending=false this enumerates the
/// anti-standard tableaux.
std::vector<Tableau> standard_tableaux(const SkewShape& shape, std::vector<int> alphabet,
                                       bool ascending = true);

/// Filling of a straight shape with repeated entries allowed; the paper's
/// convention: semistandard means rows strictly increase and columns
/// weakly increase downwards.
class TypedTableau {
public:
  TypedTableau() = default;
  TypedTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Composition type(int n_values) const;
  bool row_standard() const;  // rows strictly increase
  bool semistandard() const;
  std::vector<int> row_reading() const;
  /// Row lengths after deleting entries > bound.
  std::vector<int> restricted_row_lengths(int bound) const;

  bool operator==(const TypedTableau& o) const {
    return shape_ == o.shape_ && rows_ == o.rows_;
  }
  bool operator<(const TypedTableau& o) const { return rows_ < o.rows_; }
  std::string str() const;
  nlohmann::json to_json() const;

private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

std::vector<TypedTableau> semistandard_tableaux(const Partition& shape, int n);

/// Dominance on typed tableaux via restricted shapes; false when some
/// restriction sizes differ (incomparable contents).
bool typed_dominates(const TypedTableau& a, const TypedTableau& b, int n_values);

}  // namespace wbr
