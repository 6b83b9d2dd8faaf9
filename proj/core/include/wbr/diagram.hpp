#pragma once

#include "wbr/combinatorics.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace wbr {

/// Row type of a generalized diagram: a block of down arrows followed by a
/// block of up arrows.  Every diagram this library constructs is of this
/// block form (downs are tensor factors of V, ups of V*).
struct Arrows {
  int down = 0;
  int up = 0;

  int total() const { return down + up; }
  bool operator==(const Arrows& o) const { return down == o.down && up == o.up; }
  bool operator!=(const Arrows& o) const { return !(*this == o); }
  bool operator<(const Arrows& o) const {
    return down != o.down ? down < o.down : up < o.up;
  }
  std::string str() const { return std::string(down, 'd') + " " + std::string(up, 'u'); }
  static Arrows parse(const std::string& s);
};

/// Oriented perfect matching between a top and a bottom row of vertices.
/// Vertices are numbered 0..top.total()-1 (top row, left to right) and
/// top.total()..top.total()+bottom.total()-1 (bottom row).  Edges are kept
/// sorted with each pair ordered, so equal diagrams compare equal.
class GeneralizedDiagram {
public:
  GeneralizedDiagram() = default;
  GeneralizedDiagram(Arrows top, Arrows bottom, std::vector<std::pair<int, int>> edges);

  static GeneralizedDiagram identity(Arrows type);
  /// Vertical diagram of a permutation on a square type; the permutation
  /// must map down positions to down positions.
  static GeneralizedDiagram permutation(Arrows type, const Perm& pi);
  /// Walled diagram of a permutation preserving the blocks {0..r-1} and
  /// {r..r+s-1}; throws if the permutation mixes the blocks.
  static GeneralizedDiagram from_permutation(const Perm& pi, int r, int s);

  const Arrows& top() const { return top_; }
  const Arrows& bottom() const { return bottom_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int top_id(int i) const { return i; }
  int bottom_id(int j) const { return top_.total() + j; }
  bool is_top_vertex(int id) const { return id < top_.total(); }
  /// true if the vertex carries a down arrow
  bool points_down(int id) const;
  int partner(int id) const;

  bool is_square() const { return top_ == bottom_; }

  GeneralizedDiagram star() const;

  bool operator==(const GeneralizedDiagram& o) const {
    return top_ == o.top_ && bottom_ == o.bottom_ && edges_ == o.edges_;
  }
  bool operator<(const GeneralizedDiagram& o) const;

  std::string render_ascii() const;
  nlohmann::json to_json() const;
  static GeneralizedDiagram from_json(const nlohmann::json& j);

private:
  void validate() const;
  Arrows top_, bottom_;
  std::vector<std::pair<int, int>> edges_;
};

/// Concatenation with d1 on top; closed cycles in the glued middle row are
/// removed and counted (algebra multiplication contributes x^cycles).
std::pair<GeneralizedDiagram, int> compose(const GeneralizedDiagram& d1,
                                           const GeneralizedDiagram& d2);

/// All walled diagrams of B_{r,s}, canonically ordered; there are (r+s)!.
std::vector<GeneralizedDiagram> enumerate_walled(int r, int s);

}  // namespace wbr
