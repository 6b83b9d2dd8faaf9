#include "wbr/cellbasis.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

namespace wbr {

namespace {

AlgebraElement transposition_element(int r, int s, int i) {
  return AlgebraElement::term(
      GeneralizedDiagram::from_permutation(Perm::transposition(r + s, i, i + 1), r, s));
}

AlgebraElement e_generator(int r, int s) {
  const int t = r + s;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < r - 1; ++i) edges.emplace_back(i, t + i);
  for (int i = r + 1; i < t; ++i) edges.emplace_back(i, t + i);
  edges.emplace_back(r - 1, r);
  edges.emplace_back(t + r - 1, t + r);
  return AlgebraElement::term(GeneralizedDiagram(Arrows{r, s}, Arrows{r, s}, std::move(edges)));
}

}  // namespace

std::vector<Generator> algebra_generators(int r, int s) {
  std::vector<Generator> gens;
  for (int i = 0; i + 1 < r; ++i)
    gens.push_back({"s" + std::to_string(i + 1), transposition_element(r, s, i)});
  for (int j = 0; j + 1 < s; ++j)
    gens.push_back({"t" + std::to_string(j + 1), transposition_element(r, s, r + j)});
  if (r >= 1 && s >= 1) gens.push_back({"e", e_generator(r, s)});
  return gens;
}

std::vector<std::pair<Generator, Generator>> subalgebra_generator_pairs(int r, int s) {
  std::vector<std::pair<Generator, Generator>> out;
  if (s == 0) {
    for (int i = 0; i + 1 < r - 1; ++i)
      out.push_back({{"s" + std::to_string(i + 1), transposition_element(r, 0, i)},
                     {"s" + std::to_string(i + 1), transposition_element(r - 1, 0, i)}});
    return out;
  }
  for (int i = 0; i + 1 < r; ++i)
    out.push_back({{"s" + std::to_string(i + 1), transposition_element(r, s, i)},
                   {"s" + std::to_string(i + 1), transposition_element(r, s - 1, i)}});
  for (int j = 0; j + 1 < s - 1; ++j)
    out.push_back({{"t" + std::to_string(j + 1), transposition_element(r, s, r + j)},
                   {"t" + std::to_string(j + 1), transposition_element(r, s - 1, r + j)}});
  if (r >= 1 && s >= 2) out.push_back({{"e", e_generator(r, s)}, {"e", e_generator(r, s - 1)}});
  return out;
}

AlgebraElement m_triple(const StandardTriple& tr) {
  const int r = tr.r, s = tr.s, k = tr.k();
  const Arrows top{r - k, s - k}, bottom{r, s};
  const int T = top.total();

  struct NuCell {
    bool is_lam;
    int lam_idx;
    int u_val;
  };
  std::vector<NuCell> cells;
  int lam_count = 0;
  for (int i = 0; i < tr.nu.length(); ++i)
    for (int j = 0; j < tr.nu.parts()[i]; ++j) {
      if (j < tr.u.shape().row_begin(i)) cells.push_back({true, lam_count++, 0});
      else cells.push_back({false, 0, tr.u.at(i, j)});
    }
  const std::vector<int> t_read = tr.t.row_reading();
  const std::vector<int> v_read = tr.v.row_reading();
  const std::vector<int> mu_rows = tr.v.shape().row_lengths();

  AlgebraElement out(top, bottom);
  for_each_row_perm(tr.nu.parts(), [&](const std::vector<int>& w, int sgn_w) {
    for_each_row_perm(mu_rows, [&](const std::vector<int>& wp, int sgn_wp) {
      std::vector<std::pair<int, int>> edges;
      edges.reserve(r + (s - k));
      for (int c = 0; c < r; ++c) {
        int entry = cells[c].is_lam ? cells[c].lam_idx : T + r + cells[c].u_val - 1;
        edges.emplace_back(entry, T + t_read[w[c]] - 1);
      }
      for (int q = 0; q < s - k; ++q)
        edges.emplace_back((r - k) + q, T + r + v_read[wp[q]] - 1);
      out.add_term(GeneralizedDiagram(top, bottom, std::move(edges)), RatFunc(sgn_w * sgn_wp));
    });
  });
  return out;
}

AlgebraElement m_lambda_mu(const ShapePair& sp, int r, int s) {
  return m_triple(canonical_triple(sp, r, s));
}

AlgebraElement arc_closure(const ShapePair& sp, int r, int s) {
  const int k = sp.k;
  const Arrows top{r, s}, bottom{r - k, s - k};
  const int T = r + s;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < r - k; ++i) edges.emplace_back(i, T + i);
  for (int q = k; q < s; ++q) edges.emplace_back(r + q, T + (r - k) + (q - k));
  for (int j = 1; j <= k; ++j) edges.emplace_back(r - k + j - 1, r + (k - j));
  return AlgebraElement::term(GeneralizedDiagram(top, bottom, std::move(edges)));
}

namespace {

// Transversal of the row-prefix stabilizer (prefix cells permuted, tail
// cells fixed pointwise) inside the full row permutations of nu: per row,
// the prefix images come in ascending order and the tail images run over
// all arrangements of the remaining positions.
void for_each_shuffle_transversal(const Partition& nu, const std::vector<int>& prefix_lens,
                                  const std::function<void(const Perm&, int)>& f) {
  const int n = nu.size();
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<std::tuple<int, int, int>> rows;  // (offset, prefix, total)
  int off = 0;
  for (int i = 0; i < nu.length(); ++i) {
    rows.emplace_back(off, prefix_lens[i], nu.parts()[i]);
    off += nu.parts()[i];
  }
  std::function<void(size_t)> rec = [&](size_t ri) {
    if (ri == rows.size()) {
      Perm p(img);
      f(p, p.sign());
      return;
    }
    auto [o, a, len] = rows[ri];
    std::vector<int> subset;
    std::function<void(int)> pick = [&](int next) {
      if (static_cast<int>(subset.size()) == a) {
        std::vector<int> rest;
        for (int x = 0; x < len; ++x)
          if (!std::binary_search(subset.begin(), subset.end(), x)) rest.push_back(x);
        std::sort(rest.begin(), rest.end());
        do {
          for (int x = 0; x < a; ++x) img[o + x] = o + subset[x];
          for (int x = 0; x < len - a; ++x) img[o + a + x] = o + rest[x];
          rec(ri + 1);
        } while (std::next_permutation(rest.begin(), rest.end()));
        return;
      }
      for (int x = next; x < len; ++x) {
        subset.push_back(x);
        pick(x + 1);
        subset.pop_back();
      }
    };
    pick(0);
    for (int x = 0; x < len; ++x) img[o + x] = o + x;
  };
  rec(0);
}

}  // namespace

AlgebraElement b_element(const StandardTriple& tr) {
  const int r = tr.r, s = tr.s, k = tr.k();
  const ShapePair sp = tr.shape();

  std::vector<int> lam_pos, u_pos, u_val, prefix_lens(tr.nu.length());
  {
    int pos = 0;
    for (int i = 0; i < tr.nu.length(); ++i) {
      prefix_lens[i] = tr.u.shape().row_begin(i);
      for (int j = 0; j < tr.nu.parts()[i]; ++j, ++pos) {
        if (j < prefix_lens[i]) lam_pos.push_back(pos);
        else {
          u_pos.push_back(pos);
          u_val.push_back(tr.u.at(i, j));
        }
      }
    }
  }
  const std::vector<int> t_read = tr.t.row_reading();
  const std::vector<int> v_read = tr.v.row_reading();

  // relabel the canonical wiring into this triple's wiring
  Perm pi = Perm::identity(r + s);
  for (int i = 0; i < r - k; ++i) pi.img[i] = lam_pos[i];
  for (int j = 0; j < k; ++j) pi.img[r - k + j] = u_pos[j];
  for (int j = 0; j < k; ++j) pi.img[r + (k - 1 - j)] = r + (u_val[j] - 1);
  for (int q = 0; q < s - k; ++q) pi.img[r + k + q] = r + (v_read[q] - 1);

  // bottom relabeling by t
  Perm q = Perm::identity(r + s);
  for (int x = 0; x < r; ++x) q.img[x] = t_read[x] - 1;

  AlgebraElement b(Arrows{r, s}, Arrows{r, s});
  for_each_shuffle_transversal(tr.nu, prefix_lens, [&](const Perm& z, int sgn_z) {
    Perm rz = Perm::identity(r + s);
    for (int x = 0; x < r; ++x) rz.img[x] = z(x);
    Perm total = pi * rz * q;
    b.add_term(GeneralizedDiagram::from_permutation(total, r, s), RatFunc(sgn_z));
  });

  if (!(multiply(m_lambda_mu(sp, r, s), b) == m_triple(tr)))
    throw std::logic_error("b_element: wiring mismatch, m_lambda_mu * b != m_triple");
  return b;
}

AlgebraElement m_pair_element(const StandardTriple& left, const StandardTriple& right) {
  if (!(left.shape() == right.shape()))
    throw std::invalid_argument("m_pair_element: triples of different shapes");
  const ShapePair sp = left.shape();
  return multiply(multiply(b_element(left).star(), arc_closure(sp, left.r, left.s)),
                  m_triple(right));
}

AlgebraElement y_max_element(const StandardTriple& tr) {
  const int r = tr.r, s = tr.s, k = tr.k();
  const Arrows top{r - k, s - k}, bottom{r, s};
  const int T = top.total();
  const int n_mu = s - k;
  const int n_slots = r + n_mu;

  const int lam1 = tr.shape().lam.first();
  std::vector<int> u_first, v_first;
  if (tr.u.shape().n_rows() > 0) u_first = tr.u.rows()[0];
  if (tr.v.shape().n_rows() > 0) v_first = tr.v.rows()[0];
  const int maxval = tr.max_statistic();
  int i0 = -1, u_cnt = 0, v_cnt = 0;
  for (int i = 0; i <= s && i0 < 0; ++i) {
    int ui = static_cast<int>(
        std::count_if(u_first.begin(), u_first.end(), [i](int e) { return e > i; }));
    int vi = static_cast<int>(
        std::count_if(v_first.begin(), v_first.end(), [i](int e) { return e <= i; }));
    if (lam1 + ui + vi == maxval) {
      i0 = i;
      u_cnt = ui;
      v_cnt = vi;
    }
  }

  struct Slot {
    bool is_mu = false;
    int row = 0, col = 0;
    bool is_lam = false;
    int lam_idx = 0;
    int val = 0;
  };
  std::vector<Slot> slots(n_slots);
  {
    int pos = 0, lam_count = 0;
    for (int i = 0; i < tr.nu.length(); ++i)
      for (int j = 0; j < tr.nu.parts()[i]; ++j, ++pos) {
        bool is_lam = j < tr.u.shape().row_begin(i);
        slots[pos] = {false, i, j, is_lam, is_lam ? lam_count++ : 0,
                      is_lam ? 0 : tr.u.at(i, j)};
      }
    int qq = 0;
    const auto& mu_sh = tr.v.shape();
    for (int i = 0; i < mu_sh.n_rows(); ++i)
      for (int j = 0; j < mu_sh.row_end(i); ++j, ++qq)
        slots[r + qq] = {true, i, j, false, 0, tr.v.at(i, j)};
  }

  const int nu_prefix = (tr.nu.length() > 0 ? tr.u.shape().row_begin(0) : 0) + u_cnt;
  std::vector<int> bundle;
  for (int c = 0; c < r; ++c)
    if (slots[c].row == 0 && slots[c].col < nu_prefix) bundle.push_back(c);
  for (int qq = 0; qq < n_mu; ++qq)
    if (slots[r + qq].row == 0 && slots[r + qq].col < v_cnt) bundle.push_back(r + qq);
  if (static_cast<int>(bundle.size()) != maxval)
    throw std::logic_error("y_max_element: bundle size does not match the max statistic");

  std::vector<std::pair<int, int>> resid;
  {
    int pos = 0;
    for (int i = 0; i < tr.nu.length(); ++i) {
      int len = tr.nu.parts()[i];
      if (i == 0) {
        if (len - nu_prefix > 1) resid.emplace_back(pos + nu_prefix, len - nu_prefix);
      } else if (len > 1) {
        resid.emplace_back(pos, len);
      }
      pos += len;
    }
    const auto mu_rows = tr.v.shape().row_lengths();
    pos = r;
    for (size_t i = 0; i < mu_rows.size(); ++i) {
      int len = mu_rows[i];
      if (i == 0) {
        if (len - v_cnt > 1) resid.emplace_back(pos + v_cnt, len - v_cnt);
      } else if (len > 1) {
        resid.emplace_back(pos, len);
      }
      pos += len;
    }
  }

  const std::vector<int> t_read = tr.t.row_reading();

  auto entry_vertex = [&](int c) {
    const Slot& sl = slots[c];
    if (!sl.is_mu && sl.is_lam) return sl.lam_idx;
    return T + r + (sl.val - 1);
  };
  auto exit_vertex = [&](int y) {
    if (y < r) return T + t_read[y] - 1;
    return (r - k) + (y - r);
  };

  const int nu_row0 = tr.nu.length() > 0 ? tr.nu.parts()[0] : 0;
  const int mu_row0 = tr.v.shape().n_rows() > 0 ? tr.v.shape().row_end(0) : 0;
  auto shuffles = [](int offset, int a, int len) {
    std::vector<std::pair<std::vector<int>, int>> out;
    if (len == 0) {
      out.emplace_back(std::vector<int>{}, 1);
      return out;
    }
    std::vector<int> subset;
    std::function<void(int)> pick = [&](int next) {
      if (static_cast<int>(subset.size()) == a) {
        std::vector<bool> used(len, false);
        for (int x : subset) used[x] = true;
        std::vector<int> img(len);
        int qa = 0, qb = a;
        for (int x = 0; x < len; ++x) {
          if (used[x]) img[qa++] = x;
          else img[qb++] = x;
        }
        int sgn = Perm(img).sign();
        std::vector<int> global(len);
        for (int i = 0; i < len; ++i) global[i] = offset + img[i];
        out.emplace_back(std::move(global), sgn);
        return;
      }
      for (int x = next; x < len; ++x) {
        subset.push_back(x);
        pick(x + 1);
        subset.pop_back();
      }
    };
    pick(0);
    return out;
  };
  auto z_nu = shuffles(0, nu_prefix, nu_row0);
  auto z_mu = shuffles(r, v_cnt, mu_row0);

  AlgebraElement out(top, bottom);
  std::vector<int> beta(n_slots);
  std::vector<int> sigma(bundle.size());
  std::vector<bool> sigma_used(bundle.size(), false);

  auto emit = [&](int sgn_sigma) {
    for (int c = 0; c < n_slots; ++c) beta[c] = c;
    for (size_t i = 0; i < bundle.size(); ++i) beta[bundle[i]] = bundle[sigma[i]];
    std::function<void(size_t, int)> g_rec = [&](size_t bi, int sgn_g) {
      if (bi == resid.size()) {
        for (const auto& [znu_map, sgn_zn] : z_nu)
          for (const auto& [zmu_map, sgn_zm] : z_mu) {
            std::vector<std::pair<int, int>> edges;
            edges.reserve(n_slots);
            for (int c = 0; c < n_slots; ++c) {
              int x = beta[c];
              int y = x;
              if (x < nu_row0) y = znu_map[x];
              else if (x >= r && x - r < mu_row0) y = zmu_map[x - r];
              edges.emplace_back(entry_vertex(c), exit_vertex(y));
            }
            out.add_term(GeneralizedDiagram(top, bottom, std::move(edges)),
                         RatFunc(sgn_sigma * sgn_g * sgn_zn * sgn_zm));
          }
        return;
      }
      auto [o, len] = resid[bi];
      std::vector<int> idx(len);
      std::iota(idx.begin(), idx.end(), 0);
      std::function<void(int, int)> place = [&](int kk, int sg) {
        if (kk == len) {
          g_rec(bi + 1, sgn_g * sg);
          return;
        }
        for (int j = kk; j < len; ++j) {
          std::swap(idx[kk], idx[j]);
          for (int t2 = 0; t2 < len; ++t2) beta[o + t2] = o + idx[t2];
          place(kk + 1, j == kk ? sg : -sg);
          std::swap(idx[kk], idx[j]);
        }
        for (int t2 = 0; t2 < len; ++t2) beta[o + t2] = o + idx[t2];
      };
      place(0, 1);
    };
    g_rec(0, 1);
  };

  std::function<void(size_t, int)> srec = [&](size_t pos, int sgn) {
    if (pos == bundle.size()) {
      emit(sgn);
      return;
    }
    for (size_t j = 0; j < bundle.size(); ++j) {
      if (sigma_used[j]) continue;
      int inv = 0;
      for (size_t t2 = 0; t2 < pos; ++t2)
        if (sigma[t2] > static_cast<int>(j)) ++inv;
      sigma[pos] = static_cast<int>(j);
      sigma_used[j] = true;
      srec(pos + 1, (inv % 2 == 0) ? sgn : -sgn);
      sigma_used[j] = false;
    }
  };
  if (bundle.empty()) emit(1);
  else srec(0, 1);
  return out;
}

CellBasis::CellBasis(int r, int s) : r_(r), s_(s) {
  shapes_ = enumerate_shapes(r, s);
  const int ns = static_cast<int>(shapes_.size());
  triples_.resize(ns);
  closures_.reserve(ns);
  mels_.resize(ns);
  bels_.resize(ns);
  first_index_.resize(ns);
  for (int si = 0; si < ns; ++si) {
    triples_[si] = enumerate_triples(shapes_[si], r, s);
    closures_.push_back(arc_closure(shapes_[si], r, s));
    const int nt = static_cast<int>(triples_[si].size());
    mels_[si].reserve(nt);
    bels_[si].reserve(nt);
    for (const auto& tr : triples_[si]) {
      mels_[si].push_back(m_triple(tr));
      bels_[si].push_back(b_element(tr));
    }
    first_index_[si].resize(nt);
    for (int L = 0; L < nt; ++L) {
      first_index_[si][L] = static_cast<int>(elements_.size());
      AlgebraElement left_part = multiply(bels_[si][L].star(), closures_[si]);
      for (int R = 0; R < nt; ++R) {
        elements_.push_back(multiply(left_part, mels_[si][R]));
        entries_.push_back({si, L, R});
      }
    }
  }
  expander_ = std::make_unique<BasisExpander>(elements_);
}

int CellBasis::index_of(int shape_idx, int left, int right) const {
  return first_index_[shape_idx][left] + right;
}

nlohmann::json CellularityReport::to_json() const {
  return {{"check", "cellular"},
          {"r", r},
          {"s", s},
          {"status", pass ? "pass" : "fail"},
          {"violations", violations}};
}

CellularityReport verify_cellularity(const CellBasis& cb, int jobs) {
  CellularityReport rep;
  rep.r = cb.r();
  rep.s = cb.s();
  auto gens = algebra_generators(cb.r(), cb.s());
  const int ns = static_cast<int>(cb.shapes().size());
  std::vector<std::vector<std::string>> shape_violations(ns);

  auto work = [&](int si) {
    auto& viol = shape_violations[si];
    const int nt = static_cast<int>(cb.triples(si).size());
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      std::vector<std::vector<RatFunc>> table(nt);
      for (int L = 0; L < nt; ++L)
        for (int R = 0; R < nt; ++R) {
          auto prod = multiply(cb.element(cb.index_of(si, L, R)), gens[gi].elem);
          auto coords = cb.expander().expand(prod);
          std::vector<RatFunc> row(nt);
          for (int j = 0; j < cb.size(); ++j) {
            if (coords[j].is_zero()) continue;
            const auto& en = cb.entries()[j];
            if (en.shape == si) {
              if (en.left != L) {
                std::ostringstream os;
                os << "C2 violated at shape " << cb.shapes()[si].str() << " L=" << L
                   << " R=" << R << " gen=" << gens[gi].name << ": support at left "
                   << en.left;
                viol.push_back(os.str());
              } else {
                row[en.right] = coords[j];
                if (!coords[j].is_polynomial())
                  viol.push_back("structure constant not in Z[x] at shape " +
                                 cb.shapes()[si].str());
              }
            } else if (!shape_strictly_dominates(cb.shapes()[en.shape], cb.shapes()[si])) {
              std::ostringstream os;
              os << "support outside the dominating ideal at shape " << cb.shapes()[si].str()
                 << " gen=" << gens[gi].name << ", found " << cb.shapes()[en.shape].str();
              viol.push_back(os.str());
            }
          }
          if (L == 0) {
            table[R] = row;
          } else if (!(row == table[R])) {
            std::ostringstream os;
            os << "structure constants depend on the left index at shape "
               << cb.shapes()[si].str() << " gen=" << gens[gi].name << " R=" << R;
            viol.push_back(os.str());
          }
        }
    }
  };

  if (jobs <= 1) {
    for (int si = 0; si < ns; ++si) work(si);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&]() {
        int si;
        while ((si = next.fetch_add(1)) < ns) work(si);
      });
    for (auto& th : pool) th.join();
  }
  for (auto& v : shape_violations)
    rep.violations.insert(rep.violations.end(), v.begin(), v.end());
  rep.pass = rep.violations.empty();
  return rep;
}

CellModule cell_module(const CellBasis& cb, int shape_idx, const std::vector<Generator>& gens) {
  CellModule cm;
  cm.shape = cb.shapes()[shape_idx];
  cm.triples = cb.triples(shape_idx);
  const int nt = static_cast<int>(cm.triples.size());
  for (const auto& g : gens) {
    Mat<Poly> a(nt, nt, Poly());
    for (int i = 0; i < nt; ++i) {
      auto prod = multiply(cb.element(cb.index_of(shape_idx, 0, i)), g.elem);
      auto coords = cb.expander().expand(prod);
      for (int j = 0; j < cb.size(); ++j) {
        if (coords[j].is_zero()) continue;
        const auto& en = cb.entries()[j];
        if (en.shape != shape_idx) continue;
        if (en.left != 0)
          throw std::logic_error("cell_module: expansion leaks to another left index");
        a(i, en.right) = coords[j].as_poly();
      }
    }
    cm.gen_names.push_back(g.name);
    cm.actions.push_back(std::move(a));
  }
  return cm;
}

nlohmann::json RestrictionReport::to_json() const {
  nlohmann::json ls = nlohmann::json::array();
  for (const auto& l : layers)
    ls.push_back({{"res_shape", l.res_shape.to_json()},
                  {"dim", l.members.size()},
                  {"stable", l.stable},
                  {"iso", l.iso_matches}});
  return {{"check", "restriction"},
          {"shape", shape.to_json()},
          {"status", pass ? "pass" : "fail"},
          {"layers", ls}};
}

RestrictionReport restriction_filtration(const CellBasis& cb, int shape_idx,
                                         const CellBasis& cb_res) {
  const int r = cb.r(), s = cb.s();
  if (r + s == 0) throw std::invalid_argument("restriction_filtration: nothing to restrict");
  const int rr = s == 0 ? r - 1 : r, ss = s == 0 ? 0 : s - 1;
  if (cb_res.r() != rr || cb_res.s() != ss)
    throw std::invalid_argument("restriction_filtration: wrong subalgebra basis");

  RestrictionReport rep;
  rep.shape = cb.shapes()[shape_idx];
  auto pairs = subalgebra_generator_pairs(r, s);
  std::vector<Generator> emb, small;
  for (auto& [a, b] : pairs) {
    emb.push_back(a);
    small.push_back(b);
  }
  CellModule cm = cell_module(cb, shape_idx, emb);
  const auto& tris = cb.triples(shape_idx);
  const int nt = static_cast<int>(tris.size());

  auto rshapes = res_shapes(rep.shape, r, s);
  std::vector<int> layer_of(nt);
  std::vector<StandardTriple> res_of(nt);
  for (int i = 0; i < nt; ++i) {
    res_of[i] = res_triple(tris[i]);
    auto it = std::find(rshapes.begin(), rshapes.end(), res_of[i].shape());
    if (it == rshapes.end()) throw std::logic_error("restriction: shape missing from Res set");
    layer_of[i] = static_cast<int>(it - rshapes.begin());
  }

  bool all_ok = true;
  for (size_t p = 0; p < rshapes.size(); ++p) {
    FiltrationLayer layer;
    layer.res_shape = rshapes[p];
    for (int i = 0; i < nt; ++i)
      if (layer_of[i] == static_cast<int>(p)) layer.members.push_back(i);

    layer.stable = true;
    for (int i : layer.members)
      for (size_t g = 0; g < cm.actions.size(); ++g)
        for (int j = 0; j < nt; ++j)
          if (!cm.actions[g](i, j).is_zero() && layer_of[j] > static_cast<int>(p))
            layer.stable = false;

    int target_idx = -1;
    for (size_t qq = 0; qq < cb_res.shapes().size(); ++qq)
      if (cb_res.shapes()[qq] == rshapes[p]) target_idx = static_cast<int>(qq);
    if (target_idx < 0) throw std::logic_error("restriction: Res shape not in Lambda");
    CellModule target = cell_module(cb_res, target_idx, small);
    std::vector<int> label(nt, -1);
    for (int i : layer.members) {
      for (size_t qq = 0; qq < target.triples.size(); ++qq)
        if (target.triples[qq] == res_of[i]) label[i] = static_cast<int>(qq);
      if (label[i] < 0) throw std::logic_error("restriction: label map misses a triple");
    }
    layer.iso_matches = true;
    for (size_t g = 0; g < cm.actions.size(); ++g)
      for (int i : layer.members)
        for (int j : layer.members)
          if (!(cm.actions[g](i, j) == target.actions[g](label[i], label[j])))
            layer.iso_matches = false;

    all_ok = all_ok && layer.stable && layer.iso_matches;
    rep.layers.push_back(std::move(layer));
  }
  size_t total = 0;
  for (const auto& l : rep.layers) total += l.members.size();
  rep.pass = all_ok && total == static_cast<size_t>(nt);
  return rep;
}

AnnihilatorBasis::AnnihilatorBasis(const CellBasis& cb) : cb_(cb) {
  const int ns = static_cast<int>(cb.shapes().size());
  maxes_.resize(ns);
  std::vector<std::vector<std::vector<RatFunc>>> rvec(ns);
  std::vector<std::vector<AlgebraElement>> yels(ns);
  for (int si = 0; si < ns; ++si) {
    const auto& tris = cb.triples(si);
    const int nt = static_cast<int>(tris.size());
    maxes_[si].resize(nt);
    rvec[si].resize(nt);
    yels[si].reserve(nt);
    for (int X = 0; X < nt; ++X) {
      maxes_[si][X] = tris[X].max_statistic();
      yels[si].push_back(y_max_element(tris[X]));
      auto w = multiply(multiply(cb.b_of(si, 0).star(), cb.closure(si)), yels[si][X]);
      auto coords = cb.expander().expand(w);
      std::vector<RatFunc> rv(nt);
      for (int j = 0; j < cb.size(); ++j) {
        if (coords[j].is_zero()) continue;
        const auto& en = cb.entries()[j];
        if (en.shape != si) {
          if (!shape_strictly_dominates(cb.shapes()[en.shape], cb.shapes()[si]))
            throw std::logic_error("y_max_element: support outside the dominating ideal");
          continue;
        }
        if (en.left != 0)
          throw std::logic_error("y_max_element: expansion leaks to another left index");
        rv[en.right] = coords[j];
        if (!coords[j].is_polynomial())
          throw std::logic_error("y_max_element: correction coefficient not in Z[x]");
      }
      if (!rv[X].is_one())
        throw std::logic_error("y_max_element: diagonal coefficient is not 1");
      rvec[si][X] = std::move(rv);
    }
  }

  for (int idx = 0; idx < cb.size(); ++idx) {
    const auto& en = cb.entries()[idx];
    const int si = en.shape, L = en.left, R = en.right;
    const int nt = static_cast<int>(cb.triples(si).size());
    AlgebraElement c(Arrows{cb.r(), cb.s()}, Arrows{cb.r(), cb.s()});
    if (maxes_[si][L] >= maxes_[si][R]) {
      AlgebraElement head = multiply(yels[si][L].star(), cb.closure(si).star());
      for (int Rt = 0; Rt < nt; ++Rt) {
        if (rvec[si][R][Rt].is_zero()) continue;
        c += multiply(head, cb.b_of(si, Rt)).scaled(rvec[si][R][Rt]);
      }
    } else {
      AlgebraElement tail = multiply(cb.closure(si), yels[si][R]);
      for (int Lt = 0; Lt < nt; ++Lt) {
        if (rvec[si][L][Lt].is_zero()) continue;
        c += multiply(cb.b_of(si, Lt).star(), tail).scaled(rvec[si][L][Lt]);
      }
    }
    cels_.push_back(std::move(c));
  }
  coords_.reserve(cels_.size());
  for (const auto& c : cels_) coords_.push_back(cb.expander().expand(c));
}

bool AnnihilatorBasis::unitriangular() const {
  const int n = cb_.size();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    if (!coords_[i][i].is_one()) return false;
    for (int j = 0; j < n; ++j) {
      if (i == j || coords_[i][j].is_zero()) continue;
      const auto& ei = cb_.entries()[i];
      const auto& ej = cb_.entries()[j];
      if (ei.shape == ej.shape) adj[i].push_back(j);
      else if (!shape_strictly_dominates(cb_.shapes()[ej.shape], cb_.shapes()[ei.shape]))
        return false;
    }
  }
  std::vector<int> state(n, 0);
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : adj[v]) {
      if (state[w] == 1) return false;
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0 && !dfs(v)) return false;
  return true;
}

nlohmann::json QuotientReport::to_json() const {
  return {{"check", "quotient_cellularity"},
          {"r", r},
          {"s", s},
          {"n", n},
          {"ann_rank_formula", ann_rank_formula.str()},
          {"ann_members", ann_members.str()},
          {"ann_all_act_zero", ann_all_act_zero},
          {"ann_independent", ann_independent},
          {"quotient_dim", quotient_dim.str()},
          {"quotient_basis_ok", quotient_basis_ok},
          {"c2_ok", c2_ok},
          {"c1_weak_ok", c1_weak_ok},
          {"status", pass ? "pass" : "fail"},
          {"violations", violations}};
}

QuotientReport verify_weak_cellularity_of_quotient(const AnnihilatorBasis& ab, int n) {
  const CellBasis& cb = ab.cell_basis();
  QuotientReport rep;
  rep.r = cb.r();
  rep.s = cb.s();
  rep.n = n;
  rep.ann_rank_formula = count_ranks(cb.r(), cb.s(), n).ann;

  std::vector<int> ann_idx, quo_idx;
  for (int i = 0; i < cb.size(); ++i) {
    const auto& en = cb.entries()[i];
    bool in_ann = ab.max_of(en.shape, en.left) > n || ab.max_of(en.shape, en.right) > n;
    (in_ann ? ann_idx : quo_idx).push_back(i);
  }
  rep.ann_members = Int(static_cast<long>(ann_idx.size()));
  rep.quotient_dim = Int(static_cast<long>(quo_idx.size()));

  rep.ann_all_act_zero = true;
  for (int i : ann_idx)
    if (!acts_as_zero(ab.c_element(i), n)) {
      rep.ann_all_act_zero = false;
      rep.violations.push_back("c element does not act as zero: index " + std::to_string(i));
    }

  {
    std::vector<AlgebraElement> fam;
    for (int i : ann_idx) fam.push_back(ab.c_element(i).specialize(n));
    rep.ann_independent =
        fam.empty() || rank_at_evaluation(fam, Int(n)) == static_cast<int>(fam.size());
  }

  {
    std::vector<AlgebraElement> fam;
    for (int i : quo_idx) fam.push_back(cb.element(i));
    IntMat g = action_gram(fam, Int(n));
    rep.quotient_basis_ok = rank_bareiss(g) == static_cast<int>(fam.size());
  }

  rep.c2_ok = true;
  {
    std::vector<AlgebraElement> mixed;
    mixed.reserve(cb.size());
    std::vector<bool> is_ann(cb.size());
    for (int i = 0; i < cb.size(); ++i) {
      const auto& en = cb.entries()[i];
      is_ann[i] = ab.max_of(en.shape, en.left) > n || ab.max_of(en.shape, en.right) > n;
      mixed.push_back((is_ann[i] ? ab.c_element(i) : cb.element(i)).specialize(n));
    }
    BasisExpander exp(mixed);
    auto gens = algebra_generators(cb.r(), cb.s());
    std::map<std::pair<int, size_t>, std::map<int, std::vector<RatFunc>>> tables;
    for (int i : quo_idx) {
      const auto& en = cb.entries()[i];
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        auto prod = multiply(cb.element(i), gens[gi].elem).specialize(n);
        auto coords = exp.expand(prod);
        std::vector<RatFunc> consts(cb.triples(en.shape).size());
        for (int j = 0; j < cb.size(); ++j) {
          if (coords[j].is_zero() || is_ann[j]) continue;
          const auto& ej = cb.entries()[j];
          if (ej.shape == en.shape) {
            if (ej.left != en.left) {
              rep.c2_ok = false;
              rep.violations.push_back("quotient C2: leak to another left index");
            } else {
              consts[ej.right] = coords[j];
            }
          } else if (!shape_strictly_dominates(cb.shapes()[ej.shape], cb.shapes()[en.shape])) {
            rep.c2_ok = false;
            rep.violations.push_back("quotient C2: support outside the dominating ideal");
          }
        }
        auto key = std::make_pair(en.shape, gi);
        auto [it, inserted] = tables[key].emplace(en.right, consts);
        if (!inserted && !(it->second == consts)) {
          rep.c2_ok = false;
          rep.violations.push_back("quotient C2: constants depend on the left index");
        }
      }
    }
  }

  rep.c1_weak_ok = true;
  for (int i = 0; i < cb.size(); ++i) {
    const auto& en = cb.entries()[i];
    int j = cb.index_of(en.shape, en.right, en.left);
    auto diff = ab.c_element(i).star() - ab.c_element(j);
    if (diff.is_zero()) continue;
    auto coords = cb.expander().expand(diff);
    for (int t = 0; t < cb.size(); ++t) {
      if (coords[t].is_zero()) continue;
      if (!shape_strictly_dominates(cb.shapes()[cb.entries()[t].shape], cb.shapes()[en.shape]))
        rep.c1_weak_ok = false;
    }
  }

  rep.pass = rep.ann_all_act_zero && rep.ann_independent &&
             rep.ann_members == rep.ann_rank_formula && rep.quotient_basis_ok && rep.c2_ok &&
             rep.c1_weak_ok;
  return rep;
}

QuotientCellModule quotient_cell_module(const AnnihilatorBasis& ab, int shape_idx, int n,
                                        const std::vector<Generator>& gens) {
  const CellBasis& cb = ab.cell_basis();
  QuotientCellModule qm;
  qm.shape = cb.shapes()[shape_idx];
  const int nt = static_cast<int>(cb.triples(shape_idx).size());
  for (int i = 0; i < nt; ++i)
    if (ab.max_of(shape_idx, i) <= n) qm.m0_triples.push_back(i);
  if (qm.m0_triples.empty()) return qm;
  const int L0 = qm.m0_triples.front();

  std::vector<AlgebraElement> mixed;
  std::vector<bool> is_ann(cb.size());
  for (int i = 0; i < cb.size(); ++i) {
    const auto& en = cb.entries()[i];
    is_ann[i] = ab.max_of(en.shape, en.left) > n || ab.max_of(en.shape, en.right) > n;
    mixed.push_back((is_ann[i] ? ab.c_element(i) : cb.element(i)).specialize(n));
  }
  BasisExpander exp(mixed);

  const int d = static_cast<int>(qm.m0_triples.size());
  for (const auto& g : gens) {
    IntMat a(d, d, Int(0));
    for (int ii = 0; ii < d; ++ii) {
      auto prod =
          multiply(cb.element(cb.index_of(shape_idx, L0, qm.m0_triples[ii])), g.elem)
              .specialize(n);
      auto coords = exp.expand(prod);
      for (int j = 0; j < cb.size(); ++j) {
        if (coords[j].is_zero() || is_ann[j]) continue;
        const auto& ej = cb.entries()[j];
        if (ej.shape != shape_idx || ej.left != L0) continue;
        auto it = std::find(qm.m0_triples.begin(), qm.m0_triples.end(), ej.right);
        if (it == qm.m0_triples.end())
          throw std::logic_error("quotient cell module: support outside M_0");
        a(ii, static_cast<int>(it - qm.m0_triples.begin())) = coords[j].as_int();
      }
    }
    qm.gen_names.push_back(g.name);
    qm.actions.push_back(std::move(a));
  }
  return qm;
}

bool triple_dominates(const StandardTriple& a, const StandardTriple& b) {
  if (a.r != b.r || a.s != b.s) return false;
  if (shape_strictly_dominates(a.shape(), b.shape())) return true;
  if (!(a.shape() == b.shape())) return false;
  return tableau_dominates(a.t, b.t) && tableau_dominates(a.o_tableau(), b.o_tableau()) &&
         tableau_dominates(a.v, b.v);
}

bool s_table_anti_dominates(const StandardTriple& a, const StandardTriple& b) {
  auto sa = a.s_table(), sb = b.s_table();
  for (int i = 1; i <= a.s; ++i) {
    auto count_ge = [i](const std::vector<int>& row) {
      return static_cast<int>(
          std::count_if(row.begin(), row.end(), [i](int e) { return e >= i; }));
    };
    std::vector<int> la{count_ge(sa[0]), count_ge(sa[1])};
    std::vector<int> lb{count_ge(sb[0]), count_ge(sb[1])};
    if (!dominates_row_lengths(la, lb)) return false;
  }
  return true;
}

}  // namespace wbr
