#pragma once

#include "wbr/arith.hpp"
#include "wbr/combinatorics.hpp"
#include "wbr/diagram.hpp"

#include <json.hpp>

#include <map>

namespace wbr {

/// Finite formal linear combination of generalized diagrams of one fixed
/// type, with exact coefficients.  Zero coefficients are never stored.
class AlgebraElement {
public:
  AlgebraElement() = default;
  AlgebraElement(Arrows top, Arrows bottom) : top_(top), bottom_(bottom) {}

  static AlgebraElement term(const GeneralizedDiagram& d, RatFunc c = RatFunc(1));
  static AlgebraElement identity(Arrows type) { return term(GeneralizedDiagram::identity(type)); }

  const Arrows& top() const { return top_; }
  const Arrows& bottom() const { return bottom_; }
  const std::map<GeneralizedDiagram, RatFunc>& terms() const { return terms_; }
  int n_terms() const { return static_cast<int>(terms_.size()); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const GeneralizedDiagram& d, const RatFunc& c);
  RatFunc coeff(const GeneralizedDiagram& d) const;

  AlgebraElement operator-() const;
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement& operator+=(const AlgebraElement& o) { *this = *this + o; return *this; }
  AlgebraElement& operator-=(const AlgebraElement& o) { *this = *this - o; return *this; }
  AlgebraElement scaled(const RatFunc& c) const;

  bool operator==(const AlgebraElement& o) const {
    return top_ == o.top_ && bottom_ == o.bottom_ && terms_ == o.terms_;
  }

  AlgebraElement star() const;
  /// Evaluate all coefficients at x = n; they must be polynomials.
  AlgebraElement specialize(const Int& n) const;
  bool all_coeffs_polynomial() const;
  bool all_coeffs_integer() const;

  nlohmann::json to_json() const;
  static AlgebraElement from_json(const nlohmann::json& j);

private:
  Arrows top_, bottom_;
  std::map<GeneralizedDiagram, RatFunc> terms_;
};

/// Bilinear extension of diagram concatenation; a deleted cycle
/// contributes a factor x.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// Alternating sum over the row stabilizer of the canonical tableau of the
/// composition, as vertical permutation diagrams on m down strands.
AlgebraElement y_element(const Composition& lam, int m);

/// Murphy element d(s)* y d(t) of the group algebra on m = #cells down
/// strands; s and t share a shape and carry entries from {1..m}, each with
/// its own declared order.
AlgebraElement murphy_element(const Tableau& s, const Tableau& t);

/// Runs f(cell_perm, sign) over the row stabilizer of the shape, where
/// cell_perm permutes row-reading positions within rows.
void for_each_row_perm(const std::vector<int>& row_lengths,
                       const std::function<void(const std::vector<int>&, int)>& f);

}  // namespace wbr
