#pragma once

#include "wbr/action.hpp"
#include "wbr/element.hpp"
#include "wbr/expand.hpp"
#include "wbr/triples.hpp"

#include <memory>
#include <optional>
#include <string>

namespace wbr {

struct Generator {
  std::string name;
  AlgebraElement elem;
};

/// Adjacent transpositions on both sides of the wall plus the contraction e.
std::vector<Generator> algebra_generators(int r, int s);

/// Generators of the tower subalgebra (B_{r,s-1}, or B_{r-1,0} for s = 0):
/// first the copy embedded in B_{r,s}, second the same generator of the
/// smaller algebra, in matching order.
std::vector<std::pair<Generator, Generator>> subalgebra_generator_pairs(int r, int s);

/// The rectangular element with the y_lam and y_mu blocks and k bottom
/// arcs; equals m_triple of the canonical triple.
AlgebraElement m_lambda_mu(const ShapePair& sp, int r, int s);

/// The rectangular element of a row-standard triple: an alternating sum
/// over the row stabilizers of nu and mu wired through t, u, v.
AlgebraElement m_triple(const StandardTriple& tr);

/// Single diagram closing the k contractions on top, so that
/// arc_closure * m_lambda_mu is the square element generating the cell ideal.
AlgebraElement arc_closure(const ShapePair& sp, int r, int s);

/// A +-1 combination b of walled diagrams with m_lambda_mu * b = m_triple,
/// built from the coset factorization of y_nu; the identity is verified on
/// construction and a failure throws.
AlgebraElement b_element(const StandardTriple& tr);

/// star(b_L) * closure * m_triple(R); R may be merely row-standard.
AlgebraElement m_pair_element(const StandardTriple& left, const StandardTriple& right);

/// The rewired m element whose antisymmetrized block spans
/// max(t,u,v) strands; it acts as zero on mixed tensor space for n < max.
AlgebraElement y_max_element(const StandardTriple& tr);

/// The full Murphy-type cellular basis of B_{r,s}(x) with its expander.
class CellBasis {
public:
  CellBasis(int r, int s);

  struct Entry {
    int shape, left, right;
  };

  int r() const { return r_; }
  int s() const { return s_; }
  const std::vector<ShapePair>& shapes() const { return shapes_; }
  const std::vector<StandardTriple>& triples(int shape_idx) const { return triples_[shape_idx]; }
  const AlgebraElement& closure(int shape_idx) const { return closures_[shape_idx]; }
  const AlgebraElement& m_of(int shape_idx, int triple_idx) const {
    return mels_[shape_idx][triple_idx];
  }
  const AlgebraElement& b_of(int shape_idx, int triple_idx) const {
    return bels_[shape_idx][triple_idx];
  }

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Entry>& entries() const { return entries_; }
  const AlgebraElement& element(int idx) const { return elements_[idx]; }
  int index_of(int shape_idx, int left, int right) const;
  const std::vector<AlgebraElement>& elements() const { return elements_; }
  const BasisExpander& expander() const { return *expander_; }

private:
  int r_, s_;
  std::vector<ShapePair> shapes_;
  std::vector<std::vector<StandardTriple>> triples_;
  std::vector<AlgebraElement> closures_;
  std::vector<std::vector<AlgebraElement>> mels_;
  std::vector<std::vector<AlgebraElement>> bels_;
  std::vector<AlgebraElement> elements_;
  std::vector<Entry> entries_;
  std::vector<std::vector<int>> first_index_;  // [shape][left] -> flat index of (shape,left,0)
  std::unique_ptr<BasisExpander> expander_;
};

struct CellularityReport {
  int r = 0, s = 0;
  bool pass = false;
  std::vector<std::string> violations;
  nlohmann::json to_json() const;
};

/// Checks C2 for every basis element and generator: products expand with
/// support only on strictly dominating shapes or on the same shape with
/// the left index fixed, and the structure constants are independent of
/// the left index (and lie in Z[x]).
CellularityReport verify_cellularity(const CellBasis& cb, int jobs = 1);

struct CellModule {
  ShapePair shape;
  std::vector<StandardTriple> triples;
  std::vector<std::string> gen_names;
  std::vector<Mat<Poly>> actions;  // one square matrix per generator
};

/// Generator action matrices on the cell module of the shape, over Z[x].
CellModule cell_module(const CellBasis& cb, int shape_idx, const std::vector<Generator>& gens);

struct FiltrationLayer {
  ShapePair res_shape;
  std::vector<int> members;  // triple indices of the shape restricting to res_shape
  bool stable = false;
  bool iso_matches = false;
};

struct RestrictionReport {
  ShapePair shape;
  bool pass = false;
  std::vector<FiltrationLayer> layers;
  nlohmann::json to_json() const;
};

/// Restriction filtration of the cell module of shapes_[shape_idx] to the
/// tower subalgebra; cb_res must be the basis of (r, s-1), or of
/// (r-1, 0) when s = 0.
RestrictionReport restriction_filtration(const CellBasis& cb, int shape_idx,
                                         const CellBasis& cb_res);

/// The annihilator-adapted weakly cellular basis: c elements, their
/// expansion over the m basis, and the quotient checks.
class AnnihilatorBasis {
public:
  explicit AnnihilatorBasis(const CellBasis& cb);

  const CellBasis& cell_basis() const { return cb_; }
  const AlgebraElement& c_element(int flat_idx) const { return cels_[flat_idx]; }
  const std::vector<AlgebraElement>& c_elements() const { return cels_; }
  int max_of(int shape_idx, int triple_idx) const { return maxes_[shape_idx][triple_idx]; }
  /// coordinates of every c element over the m basis (rows follow entries())
  const std::vector<std::vector<RatFunc>>& change_of_basis() const { return coords_; }

  /// True iff the change of basis has unit diagonal and its off-diagonal
  /// support admits a triangular order (certified by acyclicity).
  bool unitriangular() const;

private:
  const CellBasis& cb_;
  std::vector<std::vector<int>> maxes_;
  std::vector<AlgebraElement> cels_;
  std::vector<std::vector<RatFunc>> coords_;
};

struct QuotientReport {
  int r = 0, s = 0, n = 0;
  Int ann_rank_formula;    // from path counting
  Int ann_members;         // c elements with max > n
  bool ann_all_act_zero = false;
  bool ann_independent = false;
  Int quotient_dim;        // number of m-cosets with both maxes <= n
  bool quotient_basis_ok = false;  // their action vectors have full rank
  bool c2_ok = false;
  bool c1_weak_ok = false;
  bool pass = false;
  std::vector<std::string> violations;
  nlohmann::json to_json() const;
};

QuotientReport verify_weak_cellularity_of_quotient(const AnnihilatorBasis& ab, int n);

/// Cell module of the quotient algebra at x = n: generator matrices over Z
/// on the basis of triples with max <= n.
struct QuotientCellModule {
  ShapePair shape;
  std::vector<int> m0_triples;  // indices into cb.triples(shape_idx)
  std::vector<std::string> gen_names;
  std::vector<IntMat> actions;
};
QuotientCellModule quotient_cell_module(const AnnihilatorBasis& ab, int shape_idx, int n,
                                        const std::vector<Generator>& gens);

/// Dominance on triples: strictly dominating shape, or same shape with
/// t, o, v dominating componentwise (o compared with the up-restrictions).
bool triple_dominates(const StandardTriple& a, const StandardTriple& b);

/// Anti-dominance on the two-row tables of sorted u/v fills.
bool s_table_anti_dominates(const StandardTriple& a, const StandardTriple& b);

}  // namespace wbr
