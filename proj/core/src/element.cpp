#include "wbr/element.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace wbr {

AlgebraElement AlgebraElement::term(const GeneralizedDiagram& d, RatFunc c) {
  AlgebraElement e(d.top(), d.bottom());
  e.add_term(d, c);
  return e;
}

void AlgebraElement::add_term(const GeneralizedDiagram& d, const RatFunc& c) {
  if (d.top() != top_ || d.bottom() != bottom_)
    throw std::invalid_argument("add_term: diagram type mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatFunc AlgebraElement::coeff(const GeneralizedDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? RatFunc() : it->second;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r(top_, bottom_);
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.top_ != b.top_ || a.bottom_ != b.bottom_)
    throw std::invalid_argument("element sum: type mismatch");
  AlgebraElement r = a;
  for (const auto& [d, c] : b.terms_) r.add_term(d, c);
  return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  return a + (-b);
}

AlgebraElement AlgebraElement::scaled(const RatFunc& c) const {
  AlgebraElement r(top_, bottom_);
  if (c.is_zero()) return r;
  for (const auto& [d, v] : terms_) r.terms_.emplace(d, v * c);
  return r;
}

AlgebraElement AlgebraElement::star() const {
  AlgebraElement r(bottom_, top_);
  for (const auto& [d, c] : terms_) r.add_term(d.star(), c);
  return r;
}

AlgebraElement AlgebraElement::specialize(const Int& n) const {
  AlgebraElement r(top_, bottom_);
  for (const auto& [d, c] : terms_) {
    if (!c.is_polynomial())
      throw std::domain_error("specialize: coefficient is not a polynomial: " + c.str());
    r.add_term(d, RatFunc(Poly(c.as_poly().evaluate(n))));
  }
  return r;
}

bool AlgebraElement::all_coeffs_polynomial() const {
  for (const auto& [d, c] : terms_)
    if (!c.is_polynomial()) return false;
  return true;
}

bool AlgebraElement::all_coeffs_integer() const {
  for (const auto& [d, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

nlohmann::json AlgebraElement::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [d, c] : terms_) {
    const Poly& p = c.as_poly();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& v : p.coeffs()) {
      if (v >= std::numeric_limits<std::int64_t>::min() &&
          v <= std::numeric_limits<std::int64_t>::max())
        coeffs.push_back(static_cast<std::int64_t>(v));
      else
        coeffs.push_back(v.str());
    }
    terms.push_back({{"coeff", coeffs}, {"diagram", d.to_json()}});
  }
  return {{"type", {{"top", top_.str()}, {"bottom", bottom_.str()}}}, {"terms", terms}};
}

AlgebraElement AlgebraElement::from_json(const nlohmann::json& j) {
  AlgebraElement e(Arrows::parse(j.at("type").at("top").get<std::string>()),
                   Arrows::parse(j.at("type").at("bottom").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    std::vector<Int> coeffs;
    for (const auto& c : t.at("coeff")) {
      if (c.is_string()) coeffs.emplace_back(c.get<std::string>());
      else coeffs.emplace_back(c.get<std::int64_t>());
    }
    e.add_term(GeneralizedDiagram::from_json(t.at("diagram")), RatFunc(Poly(std::move(coeffs))));
  }
  return e;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.bottom() != b.top())
    throw std::invalid_argument("multiply: bottom type of left factor must match top of right");
  AlgebraElement r(a.top(), b.bottom());
  const RatFunc xvar = RatFunc::x();
  for (const auto& [d1, c1] : a.terms())
    for (const auto& [d2, c2] : b.terms()) {
      auto [d, cycles] = compose(d1, d2);
      RatFunc c = c1 * c2;
      for (int i = 0; i < cycles; ++i) c *= xvar;
      r.add_term(d, c);
    }
  return r;
}

void for_each_row_perm(const std::vector<int>& row_lengths,
                       const std::function<void(const std::vector<int>&, int)>& f) {
  const int n = std::accumulate(row_lengths.begin(), row_lengths.end(), 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> blocks;  // (offset, length)
  int off = 0;
  for (int len : row_lengths) {
    if (len > 1) blocks.emplace_back(off, len);
    off += len;
  }
  std::function<void(size_t, int)> rec = [&](size_t bi, int sign) {
    if (bi == blocks.size()) {
      f(perm, sign);
      return;
    }
    auto [o, len] = blocks[bi];
    std::vector<int> idx(len);
    std::iota(idx.begin(), idx.end(), 0);
    // run over all permutations of this block
    std::function<void(int, int)> place = [&](int k, int sg) {
      if (k == len) {
        rec(bi + 1, sign * sg);
        return;
      }
      for (int j = k; j < len; ++j) {
        std::swap(idx[k], idx[j]);
        for (int q = 0; q < len; ++q) perm[o + q] = o + idx[q];
        place(k + 1, j == k ? sg : -sg);
        std::swap(idx[k], idx[j]);
      }
      for (int q = 0; q < len; ++q) perm[o + q] = o + idx[q];
    };
    place(0, 1);
  };
  rec(0, 1);
}

AlgebraElement y_element(const Composition& lam, int m) {
  if (lam.size() != m) throw std::invalid_argument("y_element: composition size mismatch");
  const Arrows type{m, 0};
  AlgebraElement r(type, type);
  for_each_row_perm(lam.parts(), [&](const std::vector<int>& p, int sign) {
    r.add_term(GeneralizedDiagram::permutation(type, Perm(p)), RatFunc(sign));
  });
  return r;
}

AlgebraElement murphy_element(const Tableau& s, const Tableau& t) {
  if (!(s.shape() == t.shape()))
    throw std::invalid_argument("murphy_element: tableaux must share a shape");
  const int m = s.n_cells();
  const Arrows type{m, 0};
  const std::vector<int> top_vals = s.row_reading();
  const std::vector<int> bot_vals = t.row_reading();
  for (int v : top_vals)
    if (v < 1 || v > m) throw std::invalid_argument("murphy_element: entries must lie in 1..m");
  for (int v : bot_vals)
    if (v < 1 || v > m) throw std::invalid_argument("murphy_element: entries must lie in 1..m");

  AlgebraElement r(type, type);
  for_each_row_perm(s.shape().row_lengths(), [&](const std::vector<int>& p, int sign) {
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < m; ++c)
      edges.emplace_back(top_vals[c] - 1, m + bot_vals[p[c]] - 1);
    r.add_term(GeneralizedDiagram(type, type, std::move(edges)), RatFunc(sign));
  });
  return r;
}

}  // namespace wbr
