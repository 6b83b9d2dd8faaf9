#include "wbr/triples.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wbr {

bool shape_dominates(const ShapePair& a, const ShapePair& b) {
  if (a.k != b.k) return a.k > b.k;
  return dominates(Composition(a.lam), Composition(b.lam)) &&
         dominates(Composition(a.mu), Composition(b.mu));
}

bool shape_strictly_dominates(const ShapePair& a, const ShapePair& b) {
  return !(a == b) && shape_dominates(a, b);
}

std::vector<ShapePair> enumerate_shapes(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("enumerate_shapes: negative parameters");
  std::vector<ShapePair> out;
  for (int k = 0; k <= std::min(r, s); ++k)
    for (const auto& mu : enumerate_partitions(s - k))
      for (const auto& lam : enumerate_partitions(r - k)) out.push_back(ShapePair{lam, mu, k});
  return out;
}

ShapePair StandardTriple::shape() const {
  std::vector<int> lam_parts;
  for (int i = 0; i < u.shape().n_rows(); ++i) {
    int inner = u.shape().row_begin(i);
    if (inner > 0) lam_parts.push_back(inner);
  }
  // rows past u's recorded rows are full lam rows only if nu extends there;
  // u is always stored with outer = nu, so the loop above covers everything.
  return ShapePair{Partition(lam_parts), Partition(v.shape().outer().parts()), k()};
}

bool StandardTriple::is_row_standard() const {
  return t.row_standard() && u.row_standard() && v.row_standard();
}

bool StandardTriple::is_standard() const {
  if (!(t.is_standard() && u.is_standard() && v.is_standard())) return false;
  // lam must come out as a partition
  std::vector<int> lam_parts;
  for (int i = 0; i < u.shape().n_rows(); ++i) lam_parts.push_back(u.shape().row_begin(i));
  for (size_t i = 1; i < lam_parts.size(); ++i)
    if (lam_parts[i] > lam_parts[i - 1]) return false;
  return true;
}

Tableau StandardTriple::o_tableau() const {
  const int rk = r - k();
  std::vector<std::vector<int>> rows(nu.length());
  int next_filler = s + rk;  // fillers decrease along the row reading of [lam]
  for (int i = 0; i < nu.length(); ++i) {
    const int lam_i = u.shape().row_begin(i);
    for (int j = 0; j < lam_i; ++j) rows[i].push_back(next_filler--);
    for (int j = lam_i; j < nu.parts()[i]; ++j) rows[i].push_back(u.at(i, j));
  }
  return Tableau(SkewShape(nu), std::move(rows), /*ascending=*/false);
}

std::vector<std::vector<int>> StandardTriple::s_table() const {
  std::vector<int> row1 = u.fill(), row2 = v.fill();
  return {row1, row2};
}

int StandardTriple::max_statistic() const {
  const auto sp = shape();
  std::vector<int> u_first, v_first;
  if (u.shape().n_rows() > 0)
    u_first = u.rows()[0];
  if (v.shape().n_rows() > 0) v_first = v.rows()[0];
  int best = 0;
  for (int i = 0; i <= s; ++i) {
    int ui = static_cast<int>(std::count_if(u_first.begin(), u_first.end(),
                                            [i](int e) { return e > i; }));
    int vi = static_cast<int>(std::count_if(v_first.begin(), v_first.end(),
                                            [i](int e) { return e <= i; }));
    best = std::max(best, sp.lam.first() + ui + vi);
  }
  return best;
}

bool StandardTriple::operator<(const StandardTriple& o) const {
  if (!(nu == o.nu)) return nu < o.nu;
  if (!(t == o.t)) return t < o.t;
  if (!(u == o.u)) return u < o.u;
  return v < o.v;
}

std::string StandardTriple::str() const {
  std::ostringstream os;
  os << "t=[" << t.str() << "] u=[" << u.str() << "] v=[" << v.str() << "]";
  return os.str();
}

nlohmann::json StandardTriple::to_json() const {
  return {{"t", t.to_json()}, {"u", u.to_json()}, {"v", v.to_json()}};
}

namespace {

std::vector<int> range(int lo, int hi) {  // [lo, hi)
  std::vector<int> v(hi - lo);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

SkewShape skew_of(const Partition& nu, const Partition& lam) {
  std::vector<int> inner(nu.length(), 0);
  for (int i = 0; i < lam.length(); ++i) inner[i] = lam.parts()[i];
  return SkewShape(Composition(nu.parts()), Composition(std::move(inner)));
}

}  // namespace

StandardTriple canonical_triple(const ShapePair& sp, int r, int s) {
  std::vector<int> nu_parts = sp.lam.parts();
  for (int i = 0; i < sp.k; ++i) nu_parts.push_back(1);
  Partition nu(nu_parts);
  SkewShape rho = skew_of(nu, sp.lam);
  StandardTriple tr;
  tr.r = r;
  tr.s = s;
  tr.nu = nu;
  tr.t = Tableau::canonical(SkewShape(nu), range(1, r + 1), true);
  tr.u = Tableau::canonical(rho, range(1, sp.k + 1), false);
  tr.v = Tableau::canonical(SkewShape(sp.mu), range(sp.k + 1, s + 1), true);
  return tr;
}

std::vector<StandardTriple> enumerate_triples(const ShapePair& sp, int r, int s) {
  if (sp.lam.size() != r - sp.k || sp.mu.size() != s - sp.k || sp.k < 0 ||
      sp.k > std::min(r, s))
    throw std::invalid_argument("enumerate_triples: shape not in Lambda(r,s)");
  std::vector<StandardTriple> out;
  for (const auto& nu : enumerate_partitions(r)) {
    if (!nu.contains(sp.lam)) continue;
    SkewShape rho = skew_of(nu, sp.lam);
    auto ts = standard_tableaux(SkewShape(nu), range(1, r + 1), true);
    // k-subsets of {1..s} as u fills, complement goes to v
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int next) {
      if (static_cast<int>(subset.size()) == sp.k) {
        std::vector<int> rest;
        for (int e = 1; e <= s; ++e)
          if (!std::binary_search(subset.begin(), subset.end(), e)) rest.push_back(e);
        auto us = standard_tableaux(rho, subset, false);
        auto vs = standard_tableaux(SkewShape(sp.mu), rest, true);
        for (const auto& t : ts)
          for (const auto& u : us)
            for (const auto& v : vs) {
              StandardTriple tr;
              tr.r = r;
              tr.s = s;
              tr.nu = nu;
              tr.t = t;
              tr.u = u;
              tr.v = v;
              out.push_back(std::move(tr));
            }
        return;
      }
      for (int e = next; e <= s; ++e) {
        subset.push_back(e);
        rec(e + 1);
        subset.pop_back();
      }
    };
    rec(1);
  }
  return out;
}

Path triple_to_path(const StandardTriple& tr) {
  Path p;
  p.emplace_back(Partition(), Partition());
  for (int i = 1; i <= tr.r; ++i) {
    Tableau ti = tr.t.restrict_down(i);
    p.emplace_back(Partition(ti.shape().outer().parts()), Partition());
  }
  Partition lam = tr.nu, mu;
  const std::vector<int> v_fill = tr.v.fill();
  for (int i = 1; i <= tr.s; ++i) {
    if (std::binary_search(v_fill.begin(), v_fill.end(), i)) {
      Tableau vi = tr.v.restrict_down(i);
      mu = Partition(vi.shape().outer().parts());
    } else {
      // cells of nu still present after step i: lam cells plus u cells
      // holding entries > i
      std::vector<int> lens(tr.nu.length(), 0);
      for (int row = 0; row < tr.nu.length(); ++row) {
        lens[row] = tr.u.shape().row_begin(row);
        for (int col = tr.u.shape().row_begin(row); col < tr.u.shape().row_end(row); ++col)
          if (tr.u.at(row, col) > i) ++lens[row];
      }
      while (!lens.empty() && lens.back() == 0) lens.pop_back();
      lam = Partition(lens);
    }
    p.emplace_back(lam, mu);
  }
  return p;
}

StandardTriple path_to_triple(const Path& p, int r, int s) {
  if (static_cast<int>(p.size()) != r + s + 1)
    throw std::invalid_argument("path length must be r+s+1");
  if (!(p.front().first.empty() && p.front().second.empty()))
    throw std::invalid_argument("path must start at the empty pair");

  auto added_cell = [](const Partition& small, const Partition& big) {
    for (int i = 0; i < big.length(); ++i)
      if (big.parts()[i] == small.part(i) + 1) return std::make_pair(i, small.part(i));
    throw std::invalid_argument("path step does not add exactly one box");
  };

  Partition nu = p[r].first;
  std::vector<std::vector<int>> t_rows(nu.length()), u_rows(nu.length()), v_rows;
  for (int i = 0; i < nu.length(); ++i) t_rows[i].assign(nu.parts()[i], 0);

  for (int i = 1; i <= r; ++i) {
    if (!(p[i].second == p[i - 1].second) || !p[i].second.empty())
      throw std::invalid_argument("mu must stay empty during the first r steps");
    auto [row, col] = added_cell(p[i - 1].first, p[i].first);
    t_rows[row][col] = i;
  }

  const Partition mu = p[r + s].second;
  std::vector<std::vector<int>> u_entries(nu.length());
  for (int i = 0; i < nu.length(); ++i) u_entries[i].assign(nu.parts()[i], 0);
  std::vector<std::vector<int>> v_entries(mu.length());
  for (int i = 0; i < mu.length(); ++i) v_entries[i].assign(mu.parts()[i], 0);

  for (int i = 1; i <= s; ++i) {
    const auto& [lam_prev, mu_prev] = p[r + i - 1];
    const auto& [lam_cur, mu_cur] = p[r + i];
    if (lam_cur == lam_prev) {
      auto [row, col] = added_cell(mu_prev, mu_cur);
      v_entries[row][col] = i;
    } else if (mu_cur == mu_prev) {
      auto [row, col] = added_cell(lam_cur, lam_prev);  // removed box
      u_entries[row][col] = i;
    } else {
      throw std::invalid_argument("path step must change exactly one partition");
    }
  }

  const Partition lam = p[r + s].first;
  StandardTriple tr;
  tr.r = r;
  tr.s = s;
  tr.nu = nu;
  tr.t = Tableau(SkewShape(nu), std::move(t_rows), true);
  SkewShape rho = skew_of(nu, lam);
  std::vector<std::vector<int>> u_rows2(nu.length());
  for (int i = 0; i < nu.length(); ++i)
    for (int j = rho.row_begin(i); j < rho.row_end(i); ++j) {
      if (u_entries[i][j] == 0)
        throw std::invalid_argument("path does not remove the cells of [nu]\\[lam]");
      u_rows2[i].push_back(u_entries[i][j]);
    }
  tr.u = Tableau(rho, std::move(u_rows2), false);
  std::vector<std::vector<int>> v_rows2(mu.length());
  for (int i = 0; i < mu.length(); ++i)
    for (int j = 0; j < mu.parts()[i]; ++j) {
      if (v_entries[i][j] == 0) throw std::invalid_argument("path does not fill [mu]");
      v_rows2[i].push_back(v_entries[i][j]);
    }
  tr.v = Tableau(SkewShape(mu), std::move(v_rows2), true);
  return tr;
}

int path_max(const Path& p) {
  int best = 0;
  for (const auto& [lam, mu] : p) best = std::max(best, lam.first() + mu.first());
  return best;
}

StandardTriple res_triple(const StandardTriple& tr) {
  if (tr.r + tr.s == 0) throw std::invalid_argument("res_triple: nothing to restrict");
  StandardTriple out;
  if (tr.s == 0) {
    out.r = tr.r - 1;
    out.s = 0;
    out.t = tr.t.restrict_down(tr.r - 1);
    out.nu = Partition(out.t.shape().outer().parts());
    out.u = Tableau(SkewShape(Composition(out.nu.parts()), Composition(out.nu.parts())),
                    std::vector<std::vector<int>>(out.nu.length()), false);
    out.v = Tableau(SkewShape(Partition()), {}, true);
    return out;
  }
  out.r = tr.r;
  out.s = tr.s - 1;
  out.nu = tr.nu;
  out.t = tr.t;
  out.v = tr.v.restrict_down(tr.s - 1);
  Tableau ures = tr.u.restrict_down(tr.s - 1);
  // normalize u to carry outer = nu, keeping emptied rows as inner = outer
  std::vector<int> inner(tr.nu.length()), outer = tr.nu.parts();
  std::vector<std::vector<int>> rows(tr.nu.length());
  for (int i = 0; i < tr.nu.length(); ++i) {
    if (i < ures.shape().n_rows()) {
      if (ures.shape().row_end(i) != outer[i] && !ures.rows()[i].empty())
        throw std::logic_error("res_triple: unexpected u row boundary");
      inner[i] = ures.rows()[i].empty() ? outer[i] : ures.shape().row_begin(i);
      rows[i] = ures.rows()[i];
    } else {
      inner[i] = outer[i];
    }
  }
  out.u = Tableau(SkewShape(Composition(outer), Composition(inner)), std::move(rows), false);
  return out;
}

std::vector<ShapePair> res_shapes(const ShapePair& sp, int r, int s) {
  std::vector<ShapePair> out;
  auto add_unique = [&](const ShapePair& x) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  };
  for (const auto& tr : enumerate_triples(sp, r, s)) add_unique(res_triple(tr).shape());
  std::sort(out.begin(), out.end(),
            [](const ShapePair& a, const ShapePair& b) { return shape_strictly_dominates(a, b); });
  return out;
}

int count_triples(const ShapePair& sp, int r, int s) {
  return static_cast<int>(enumerate_triples(sp, r, s).size());
}

int count_triples_bounded(const ShapePair& sp, int r, int s, int n) {
  int c = 0;
  for (const auto& tr : enumerate_triples(sp, r, s))
    if (tr.max_statistic() <= n) ++c;
  return c;
}

RankCounts count_ranks(int r, int s, int n) {
  RankCounts rc{0, 0, 0};
  for (const auto& sp : enumerate_shapes(r, s)) {
    Int m = count_triples(sp, r, s);
    Int m0 = count_triples_bounded(sp, r, s, n);
    rc.walled += m * m;
    rc.endo += m0 * m0;
  }
  rc.ann = rc.walled - rc.endo;
  return rc;
}

}  // namespace wbr
