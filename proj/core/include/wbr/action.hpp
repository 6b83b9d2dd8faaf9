#pragma once

#include "wbr/element.hpp"
#include "wbr/linalg.hpp"

namespace wbr {

/// Matrix of a generalized diagram acting (from the right) on tensor
/// space: rows are indexed by I(n, #top), columns by I(n, #bottom), both
/// row-major with the leftmost factor most significant.  An entry is 1
/// exactly when all edges connect equal labels.
IntMat diagram_action(const GeneralizedDiagram& d, int n);

/// Action matrix of an element at x = n; coefficients must specialize to
/// integers.
IntMat action_matrix(const AlgebraElement& a, int n);

/// <action(d1), action(d2)> = n^{#components of the overlayed edge graphs}.
/// This is the Gram pairing of the 0/1 action vectors, computed without
/// materializing them.
Int action_pairing(const GeneralizedDiagram& d1, const GeneralizedDiagram& d2, const Int& n);

/// Gram matrix of the action vectors of a family of same-type elements at
/// x = n.  rank(gram) equals the rank of the family's image in End.
IntMat action_gram(const std::vector<AlgebraElement>& family, const Int& n);

/// True iff the element acts as zero on tensor space at x = n (decided by
/// its Gram norm, exactly).
bool acts_as_zero(const AlgebraElement& a, const Int& n);

/// Matrices of e_{ab} (a, b = 1..n) acting on V^r tensor V*^s by the
/// Leibniz rule, e_{ab} v_j = delta_{bj} v_a on V and
/// e_{ab} v*_j = -delta_{aj} v*_b on V*; returned row-major in (a,b).
std::vector<IntMat> gl_generator_matrices(int r, int s, int n);

/// Left gl action commutes with the right diagram action:
/// G * D^T == D^T * G for the matrices involved.
bool commutes_left_right(const IntMat& gl_left, const IntMat& diag_right);

struct AnnihilatorResult {
  Int rank;                              // rank of the annihilator
  std::vector<std::vector<Rat>> kernel;  // left kernel in walled-diagram coordinates
};

/// Kernel of B_{r,s}(n) -> End(mixed tensor space) in walled-diagram
/// coordinates, via the exact Gram matrix of the diagram actions.
AnnihilatorResult annihilator(int r, int s, int n);

}  // namespace wbr
