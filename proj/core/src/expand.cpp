#include "wbr/expand.hpp"

namespace wbr {

int DiagramSpace::add(const GeneralizedDiagram& d) {
  if (d.top() != top_ || d.bottom() != bottom_)
    throw std::invalid_argument("DiagramSpace: diagram type mismatch");
  auto it = index_.find(d);
  if (it != index_.end()) return it->second;
  int id = size();
  index_.emplace(d, id);
  list_.push_back(d);
  return id;
}

std::optional<int> DiagramSpace::find(const GeneralizedDiagram& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BasisExpander::BasisExpander(const std::vector<AlgebraElement>& basis)
    : space_(basis.empty() ? Arrows{} : basis.front().top(),
             basis.empty() ? Arrows{} : basis.front().bottom()),
      n_cols_(static_cast<int>(basis.size())) {
  if (basis.empty()) return;
  for (const auto& b : basis) {
    if (b.top() != space_.top() || b.bottom() != space_.bottom())
      throw std::invalid_argument("BasisExpander: mixed element types");
    for (const auto& [d, c] : b.terms()) space_.add(d);
  }
  std::vector<std::vector<Poly>> cols(n_cols_);
  col_scale_.assign(n_cols_, Poly(1));
  for (int j = 0; j < n_cols_; ++j) {
    Poly scale(1);
    for (const auto& [d, c] : basis[j].terms())
      if (!c.den().is_one()) scale = scale.divexact(gcd(scale, c.den())) * c.den();
    col_scale_[j] = scale;
    cols[j].assign(space_.size(), Poly());
    for (const auto& [d, c] : basis[j].terms())
      cols[j][*space_.find(d)] = c.num() * scale.divexact(c.den());
  }
  elim_.emplace(space_.size(), std::move(cols));
  if (elim_->rank() < n_cols_) throw std::domain_error("BasisExpander: basis is singular");
}

std::vector<RatFunc> BasisExpander::expand(const AlgebraElement& a) const {
  auto c = try_expand(a);
  if (!c) throw std::domain_error("expand: element lies outside the span of the basis");
  return *c;
}

std::optional<std::vector<RatFunc>> BasisExpander::try_expand(const AlgebraElement& a) const {
  if (a.top() != space_.top() || a.bottom() != space_.bottom())
    throw std::invalid_argument("expand: element type mismatch");
  std::vector<RatFunc> rhs(space_.size());
  for (const auto& [d, c] : a.terms()) {
    auto id = space_.find(d);
    if (!id) return std::nullopt;  // diagram never occurs in the basis
    rhs[*id] = c;
  }
  auto sol = elim_->solve(rhs);
  if (!sol) return std::nullopt;
  for (int j = 0; j < n_cols_; ++j) (*sol)[j] *= RatFunc(col_scale_[j]);
  return sol;
}

std::vector<RatFunc> expand_in_basis(const AlgebraElement& a,
                                     const std::vector<AlgebraElement>& basis) {
  if (a.is_zero()) return std::vector<RatFunc>(basis.size());
  return BasisExpander(basis).expand(a);
}

int rank_at_evaluation(const std::vector<AlgebraElement>& family, const Int& point) {
  if (family.empty()) return 0;
  DiagramSpace space(family.front().top(), family.front().bottom());
  for (const auto& e : family)
    for (const auto& [d, c] : e.terms()) space.add(d);
  IntMat m(static_cast<int>(family.size()), space.size(), Int(0));
  for (size_t i = 0; i < family.size(); ++i)
    for (const auto& [d, c] : family[i].terms()) {
      Rat v = c.evaluate(point);
      if (denominator(v) != 1)
        throw std::domain_error("rank_at_evaluation: coefficient has a pole at the point");
      m(static_cast<int>(i), *space.find(d)) = numerator(v);
    }
  return rank_bareiss(m);
}

}  // namespace wbr
