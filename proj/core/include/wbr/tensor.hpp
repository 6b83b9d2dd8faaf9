#pragma once

#include "wbr/action.hpp"
#include "wbr/cellbasis.hpp"

namespace wbr {

/// The v_{Tt} basis of ordinary tensor space V^{tensor m} together with
/// the dual family w_{Tt} built from the column rule.
struct OrdinaryBasis {
  int m = 0, n = 0;
  struct Label {
    Partition lam;
    TypedTableau T;
    Tableau t;
  };
  std::vector<Label> labels;
  IntMat vectors;  // rows are the v_{Tt} in standard coordinates
  IntMat duals;    // rows are the w_{Tt}
};

OrdinaryBasis ordinary_basis_vectors(int m, int n);

/// <w_i, v_j> under the pairing with orthonormal standard basis.
IntMat pairing_matrix(const OrdinaryBasis& ob);

struct SymAnnReport {
  int m = 0, n = 0;
  Int kernel_rank;
  Int formula_rank;  // number of Murphy pairs with lam_1 > n
  bool zero_iff_tall = false;
  bool agree = false;
  nlohmann::json to_json() const;
};

/// The annihilator of the symmetric group algebra on V^{tensor m} is
/// spanned by the Murphy elements with lam_1 > n.
SymAnnReport sym_annihilator_check(int m, int n);

struct RationalTableau {
  TypedTableau a, b;
};

/// All standard rational tableaux of the shape; requires
/// lam_1 + mu_1 <= n.
std::vector<RationalTableau> enumerate_rational(const ShapePair& sp, int n);

/// The single partition whose semistandard count equals |Rat(lam,mu)|.
Partition rational_tau_shape(const ShapePair& sp, int n);

/// Dimension of { M : M commutes with every gl_n generator matrix }.
/// Certified exactly by an upper bound from modular elimination of the
/// commutator constraints and a matching lower bound from the rank of the
/// walled-diagram image (whose matrices are verified to commute).
Int commutant_dim(int r, int s, int n);

struct MixedBasis {
  int r = 0, s = 0, n = 0;
  struct Block {
    int shape_idx;  // into cb.shapes()
    std::vector<RationalTableau> rats;
    std::vector<int> m0;  // triple indices with max <= n
  };
  std::vector<Block> blocks;  // dominant shapes first
  IntMat vectors;             // n^{r+s} square; rows follow the blocks
};

MixedBasis mixed_basis(const CellBasis& cb, const AnnihilatorBasis& ab, int n);

struct FiltrationReport {
  int r = 0, s = 0, n = 0;
  bool square = false;
  bool unimodular = false;
  std::vector<long> layer_dims;
  bool stable = false;           // both actions respect the dominance filtration
  bool b_blocks_factorize = false;   // Id tensor A_g on every quotient
  bool gl_blocks_factorize = false;  // G tensor Id on every quotient
  bool pass = false;
  std::vector<std::string> violations;
  nlohmann::json to_json() const;
};

FiltrationReport filtration_check(const CellBasis& cb, const AnnihilatorBasis& ab, int n);

}  // namespace wbr
