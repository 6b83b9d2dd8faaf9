#include "wbr/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wbr {

Arrows Arrows::parse(const std::string& s) {
  Arrows a;
  for (char c : s) {
    if (c == 'd') ++a.down;
    else if (c == 'u') ++a.up;
    else if (c != ' ') throw std::invalid_argument("bad arrow string: " + s);
  }
  return a;
}

GeneralizedDiagram::GeneralizedDiagram(Arrows top, Arrows bottom,
                                       std::vector<std::pair<int, int>> edges)
    : top_(top), bottom_(bottom), edges_(std::move(edges)) {
  for (auto& e : edges_)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges_.begin(), edges_.end());
  validate();
}

void GeneralizedDiagram::validate() const {
  const int n = top_.total() + bottom_.total();
  if (static_cast<int>(edges_.size()) * 2 != n)
    throw std::invalid_argument("diagram is not a perfect matching");
  std::vector<int> deg(n, 0);
  for (const auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw std::invalid_argument("diagram edge out of range");
    ++deg[a];
    ++deg[b];
  }
  for (int d : deg)
    if (d != 1) throw std::invalid_argument("diagram vertex degree != 1");
#ifndef NDEBUG
  for (const auto& [a, b] : edges_) {
    bool ta = is_top_vertex(a), tb = is_top_vertex(b);
    bool da = points_down(a), db = points_down(b);
    // vertical edges keep the arrow direction, horizontal edges reverse it
    bool ok = (ta != tb) ? (da == db) : (da != db);
    assert(ok && "edge is not orientation-consistent");
  }
#endif
}

bool GeneralizedDiagram::points_down(int id) const {
  if (is_top_vertex(id)) return id < top_.down;
  return id - top_.total() < bottom_.down;
}

int GeneralizedDiagram::partner(int id) const {
  for (const auto& [a, b] : edges_) {
    if (a == id) return b;
    if (b == id) return a;
  }
  throw std::out_of_range("vertex not in diagram");
}

GeneralizedDiagram GeneralizedDiagram::identity(Arrows type) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < type.total(); ++i) e.emplace_back(i, type.total() + i);
  return GeneralizedDiagram(type, type, std::move(e));
}

GeneralizedDiagram GeneralizedDiagram::permutation(Arrows type, const Perm& pi) {
  if (pi.size() != type.total()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < type.total(); ++i) {
    if ((i < type.down) != (pi(i) < type.down))
      throw std::invalid_argument("permutation does not preserve arrow directions");
    e.emplace_back(i, type.total() + pi(i));
  }
  return GeneralizedDiagram(type, type, std::move(e));
}

GeneralizedDiagram GeneralizedDiagram::from_permutation(const Perm& pi, int r, int s) {
  if (pi.size() != r + s) throw std::invalid_argument("permutation size mismatch");
  for (int i = 0; i < r + s; ++i)
    if ((i < r) != (pi(i) < r))
      throw std::invalid_argument("permutation mixes the blocks across the wall");
  return permutation(Arrows{r, s}, pi);
}

GeneralizedDiagram GeneralizedDiagram::star() const {
  const int t = top_.total(), b = bottom_.total();
  std::vector<std::pair<int, int>> e;
  auto remap = [&](int id) { return id < t ? b + id : id - t; };
  for (const auto& [x, y] : edges_) e.emplace_back(remap(x), remap(y));
  return GeneralizedDiagram(bottom_, top_, std::move(e));
}

bool GeneralizedDiagram::operator<(const GeneralizedDiagram& o) const {
  if (top_ != o.top_) return top_ < o.top_;
  if (bottom_ != o.bottom_) return bottom_ < o.bottom_;
  return edges_ < o.edges_;
}

std::string GeneralizedDiagram::render_ascii() const {
  std::ostringstream os;
  auto arrow_line = [](const Arrows& a) {
    std::string s;
    for (int i = 0; i < a.down; ++i) s += "v ";
    if (a.down && a.up) s += "| ";
    for (int i = 0; i < a.up; ++i) s += "^ ";
    return s;
  };
  os << "T: " << arrow_line(top_) << "\n";
  auto name = [&](int id) {
    return is_top_vertex(id) ? "T" + std::to_string(id + 1)
                             : "B" + std::to_string(id - top_.total() + 1);
  };
  for (const auto& [a, b] : edges_) {
    bool ta = is_top_vertex(a), tb = is_top_vertex(b);
    if (ta && tb) os << "   (" << name(a) << "~" << name(b) << ")";
    else if (!ta && !tb) os << "   [" << name(a) << "~" << name(b) << "]";
    else os << "   " << name(a) << "-" << name(b);
    os << "\n";
  }
  os << "B: " << arrow_line(bottom_) << "\n";
  return os.str();
}

nlohmann::json GeneralizedDiagram::to_json() const {
  auto name = [&](int id) {
    return is_top_vertex(id) ? "T" + std::to_string(id + 1)
                             : "B" + std::to_string(id - top_.total() + 1);
  };
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : edges_) edges.push_back({name(a), name(b)});
  return {{"top", top_.str()}, {"bottom", bottom_.str()}, {"edges", edges}};
}

GeneralizedDiagram GeneralizedDiagram::from_json(const nlohmann::json& j) {
  Arrows top = Arrows::parse(j.at("top").get<std::string>());
  Arrows bottom = Arrows::parse(j.at("bottom").get<std::string>());
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    auto decode = [&](const std::string& s) {
      int idx = std::stoi(s.substr(1)) - 1;
      return s[0] == 'T' ? idx : top.total() + idx;
    };
    edges.emplace_back(decode(e.at(0).get<std::string>()), decode(e.at(1).get<std::string>()));
  }
  return GeneralizedDiagram(top, bottom, std::move(edges));
}

std::pair<GeneralizedDiagram, int> compose(const GeneralizedDiagram& d1,
                                           const GeneralizedDiagram& d2) {
  if (d1.bottom() != d2.top())
    throw std::invalid_argument("compose: glued row types do not match");
  const int t1 = d1.top().total();
  const int mid = d1.bottom().total();
  const int t2 = d2.top().total();  // == mid
  const int b2 = d2.bottom().total();

  // match maps within each diagram
  std::vector<int> m1(t1 + mid), m2(t2 + b2);
  for (const auto& [a, b] : d1.edges()) { m1[a] = b; m1[b] = a; }
  for (const auto& [a, b] : d2.edges()) { m2[a] = b; m2[b] = a; }

  // Boundary vertices of the result: d1 top (result ids 0..t1-1) and d2
  // bottom (result ids t1..t1+b2-1).  Paths alternate between the two
  // diagrams through the glued middle row; middle vertices on boundary
  // paths are marked so the leftover closed cycles can be counted.
  std::vector<bool> mid_seen(mid, false);
  auto walk = [&](bool in_d1, int v) {
    while (true) {
      int u = in_d1 ? m1[v] : m2[v];
      if (in_d1 && u < t1) return u;                // ended at d1 top
      if (!in_d1 && u >= t2) return t1 + (u - t2);  // ended at d2 bottom
      int j = in_d1 ? u - t1 : u;                   // middle index reached
      mid_seen[j] = true;
      if (in_d1) { v = j; in_d1 = false; }          // continue inside d2 from its top j
      else { v = t1 + j; in_d1 = true; }            // continue inside d1 from its bottom j
    }
  };

  std::vector<std::pair<int, int>> edges;
  std::vector<bool> seen(t1 + b2, false);
  for (int v = 0; v < t1 + b2; ++v) {
    if (seen[v]) continue;
    int u = v < t1 ? walk(true, v) : walk(false, t2 + (v - t1));
    seen[v] = true;
    seen[u] = true;
    edges.emplace_back(v, u);
  }

  int cycles = 0;
  for (int j0 = 0; j0 < mid; ++j0) {
    if (mid_seen[j0]) continue;
    ++cycles;
    int cur = j0;
    bool use_d1 = true;
    do {
      mid_seen[cur] = true;
      cur = use_d1 ? m1[t1 + cur] - t1 : m2[cur];
      use_d1 = !use_d1;
    } while (cur != j0);
  }

  return {GeneralizedDiagram(d1.top(), d2.bottom(), std::move(edges)), cycles};
}

std::vector<GeneralizedDiagram> enumerate_walled(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("enumerate_walled: negative parameters");
  const Arrows type{r, s};
  const int t = type.total();
  const int n = 2 * t;
  auto points_down = [&](int id) { return id < t ? id < r : id - t < r; };
  auto is_top = [&](int id) { return id < t; };
  auto compatible = [&](int a, int b) {
    if (is_top(a) != is_top(b)) return points_down(a) == points_down(b);
    return points_down(a) != points_down(b);
  };

  std::vector<GeneralizedDiagram> out;
  std::vector<int> match(n, -1);
  std::vector<std::pair<int, int>> edges;
  std::function<void()> rec = [&]() {
    int v = 0;
    while (v < n && match[v] >= 0) ++v;
    if (v == n) {
      out.emplace_back(type, type, edges);
      return;
    }
    for (int u = v + 1; u < n; ++u) {
      if (match[u] >= 0 || !compatible(v, u)) continue;
      match[v] = u;
      match[u] = v;
      edges.emplace_back(v, u);
      rec();
      edges.pop_back();
      match[v] = -1;
      match[u] = -1;
    }
  };
  rec();
  return out;
}

}  // namespace wbr
