#include "wbr/action.hpp"

#include <numeric>

namespace wbr {

namespace {

long int_pow(int n, int e) {
  long p = 1;
  for (int i = 0; i < e; ++i) p *= n;
  return p;
}

}  // namespace

IntMat diagram_action(const GeneralizedDiagram& d, int n) {
  const int nt = d.top().total(), nb = d.bottom().total();
  IntMat m(static_cast<int>(int_pow(n, nt)), static_cast<int>(int_pow(n, nb)), Int(0));
  const auto& edges = d.edges();
  const int ne = static_cast<int>(edges.size());
  std::vector<int> val(ne, 1);
  // one free label per edge; each assignment contributes a single 1 entry
  while (true) {
    long row = 0, col = 0;
    std::vector<int> top_label(nt), bot_label(nb);
    for (int e = 0; e < ne; ++e) {
      auto assign = [&](int id) {
        if (id < nt) top_label[id] = val[e];
        else bot_label[id - nt] = val[e];
      };
      assign(edges[e].first);
      assign(edges[e].second);
    }
    for (int i = 0; i < nt; ++i) row = row * n + (top_label[i] - 1);
    for (int j = 0; j < nb; ++j) col = col * n + (bot_label[j] - 1);
    m(static_cast<int>(row), static_cast<int>(col)) += 1;

    int e = ne - 1;
    while (e >= 0 && val[e] == n) val[e--] = 1;
    if (e < 0) break;
    ++val[e];
  }
  return m;
}

IntMat action_matrix(const AlgebraElement& a, int n) {
  const int nt = a.top().total(), nb = a.bottom().total();
  IntMat m(static_cast<int>(int_pow(n, nt)), static_cast<int>(int_pow(n, nb)), Int(0));
  for (const auto& [d, c] : a.terms()) {
    Rat v = c.evaluate(n);
    if (denominator(v) != 1)
      throw std::domain_error("action_matrix: coefficient does not specialize to an integer");
    Int ci = numerator(v);
    IntMat dm = diagram_action(d, n);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (dm(i, j) != 0) m(i, j) += ci * dm(i, j);
  }
  return m;
}

Int action_pairing(const GeneralizedDiagram& d1, const GeneralizedDiagram& d2, const Int& n) {
  if (d1.top() != d2.top() || d1.bottom() != d2.bottom())
    throw std::invalid_argument("action_pairing: type mismatch");
  const int nv = d1.top().total() + d1.bottom().total();
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = nv;
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  };
  for (const auto& [a, b] : d1.edges()) unite(a, b);
  for (const auto& [a, b] : d2.edges()) unite(a, b);
  Int p(1);
  for (int i = 0; i < components; ++i) p *= n;
  return p;
}

namespace {

Int element_pairing(const AlgebraElement& a, const AlgebraElement& b, const Int& n) {
  Int acc(0);
  for (const auto& [d1, c1] : a.terms())
    for (const auto& [d2, c2] : b.terms()) {
      Rat v = c1.evaluate(n) * c2.evaluate(n);
      if (denominator(v) != 1)
        throw std::domain_error("action pairing needs integer coefficients at x = n");
      acc += numerator(v) * action_pairing(d1, d2, n);
    }
  return acc;
}

}  // namespace

IntMat action_gram(const std::vector<AlgebraElement>& family, const Int& n) {
  const int k = static_cast<int>(family.size());
  IntMat g(k, k, Int(0));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      g(i, j) = element_pairing(family[i], family[j], n);
      g(j, i) = g(i, j);
    }
  return g;
}

bool acts_as_zero(const AlgebraElement& a, const Int& n) {
  // clear denominators first; scaling does not change vanishing
  Poly scale(1);
  for (const auto& [d, c] : a.terms())
    if (!c.den().is_one()) scale = scale.divexact(gcd(scale, c.den())) * c.den();
  AlgebraElement b(a.top(), a.bottom());
  for (const auto& [d, c] : a.terms()) b.add_term(d, c * RatFunc(scale));
  Int sc = scale.evaluate(n);
  if (sc == 0) throw std::domain_error("acts_as_zero: denominator vanishes at x = n");
  return element_pairing(b, b, n) == 0;
}

std::vector<IntMat> gl_generator_matrices(int r, int s, int n) {
  const int m = r + s;
  const long dim = int_pow(n, m);
  std::vector<IntMat> out;
  out.reserve(static_cast<size_t>(n) * n);
  std::vector<int> digits(m);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      IntMat g(static_cast<int>(dim), static_cast<int>(dim), Int(0));
      for (long J = 0; J < dim; ++J) {
        long rest = J;
        for (int f = m - 1; f >= 0; --f) {
          digits[f] = static_cast<int>(rest % n) + 1;
          rest /= n;
        }
        for (int f = 0; f < m; ++f) {
          const bool vstar = f >= r;
          if (!vstar && digits[f] == b) {
            long I = J + static_cast<long>(a - digits[f]) * int_pow(n, m - 1 - f);
            g(static_cast<int>(I), static_cast<int>(J)) += 1;
          } else if (vstar && digits[f] == a) {
            long I = J + static_cast<long>(b - digits[f]) * int_pow(n, m - 1 - f);
            g(static_cast<int>(I), static_cast<int>(J)) -= 1;
          }
        }
      }
      out.push_back(std::move(g));
    }
  return out;
}

bool commutes_left_right(const IntMat& gl_left, const IntMat& diag_right) {
  IntMat dt(diag_right.cols(), diag_right.rows());
  for (int i = 0; i < diag_right.rows(); ++i)
    for (int j = 0; j < diag_right.cols(); ++j) dt(j, i) = diag_right(i, j);
  return gl_left * dt == dt * gl_left;
}

AnnihilatorResult annihilator(int r, int s, int n) {
  auto walled = enumerate_walled(r, s);
  std::vector<AlgebraElement> fam;
  fam.reserve(walled.size());
  for (const auto& d : walled) fam.push_back(AlgebraElement::term(d));
  IntMat g = action_gram(fam, Int(n));
  auto kernel = left_kernel(g);
  AnnihilatorResult res;
  res.kernel = std::move(kernel);
  res.rank = Int(static_cast<long>(res.kernel.size()));
  return res;
}

}  // namespace wbr
