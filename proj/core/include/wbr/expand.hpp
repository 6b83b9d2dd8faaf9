#pragma once

#include "wbr/element.hpp"
#include "wbr/linalg.hpp"

#include <optional>

namespace wbr {

/// Index of the generalized diagrams of one fixed type that occur in a
/// family of elements; coordinates of elements live in this space.
class DiagramSpace {
public:
  DiagramSpace(Arrows top, Arrows bottom) : top_(top), bottom_(bottom) {}

  int add(const GeneralizedDiagram& d);
  std::optional<int> find(const GeneralizedDiagram& d) const;
  int size() const { return static_cast<int>(list_.size()); }
  const GeneralizedDiagram& at(int i) const { return list_[i]; }
  const Arrows& top() const { return top_; }
  const Arrows& bottom() const { return bottom_; }

private:
  Arrows top_, bottom_;
  std::map<GeneralizedDiagram, int> index_;
  std::vector<GeneralizedDiagram> list_;
};

/// Exact expansion of elements in a fixed linearly independent family,
/// with the elimination work shared across right-hand sides.  Safe to use
/// from several threads once constructed.
class BasisExpander {
public:
  explicit BasisExpander(const std::vector<AlgebraElement>& basis);

  int basis_size() const { return n_cols_; }
  const DiagramSpace& space() const { return space_; }

  /// Coordinate vector over Q(x); throws std::domain_error if the element
  /// lies outside the span.
  std::vector<RatFunc> expand(const AlgebraElement& a) const;
  std::optional<std::vector<RatFunc>> try_expand(const AlgebraElement& a) const;

private:
  DiagramSpace space_;
  std::optional<PolyEliminator> elim_;
  std::vector<Poly> col_scale_;
  int n_cols_ = 0;
};

/// Convenience wrapper for the one-shot operation.
std::vector<RatFunc> expand_in_basis(const AlgebraElement& a,
                                     const std::vector<AlgebraElement>& basis);

/// Rank of the family over Q(x), certified from below by an integer
/// evaluation point; exact when it returns the family size.
int rank_at_evaluation(const std::vector<AlgebraElement>& family, const Int& point);

}  // namespace wbr
