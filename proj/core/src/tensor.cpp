#include "wbr/tensor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace wbr {

namespace {

long int_pow(int n, int e) {
  long p = 1;
  for (int i = 0; i < e; ++i) p *= n;
  return p;
}

std::vector<int> iota1(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

long index_of_digits(const std::vector<int>& digits, int n) {
  long idx = 0;
  for (int d : digits) idx = idx * n + (d - 1);
  return idx;
}

}  // namespace

OrdinaryBasis ordinary_basis_vectors(int m, int n) {
  OrdinaryBasis ob;
  ob.m = m;
  ob.n = n;
  const long dim = int_pow(n, m);

  std::vector<IntMat> rows_v, rows_w;
  for (const auto& lam : enumerate_partitions(m)) {
    auto typed = semistandard_tableaux(lam, n);
    if (typed.empty()) continue;
    auto stds = standard_tableaux(SkewShape(lam), iota1(m));
    // y_lam d(t) acting on the right, one action matrix per t
    AlgebraElement y = y_element(Composition(lam), m);
    for (const auto& T : typed)
      for (const auto& t : stds) {
        AlgebraElement yd = multiply(
            y, AlgebraElement::term(GeneralizedDiagram::permutation(Arrows{m, 0}, t.d_perm())));
        IntMat act = action_matrix(yd, n);
        long row_idx = index_of_digits(T.row_reading(), n);
        IntMat v(1, static_cast<int>(dim));
        for (int j = 0; j < v.cols(); ++j) v(0, j) = act(static_cast<int>(row_idx), j);
        rows_v.push_back(std::move(v));

        // w_{Tt}: sum over multi-indices whose entries at the positions of
        // each column of t form the multiset of that column of T
        IntMat w(1, static_cast<int>(dim));
        std::vector<std::vector<int>> col_positions, col_values;
        for (int c = 0; c < lam.first(); ++c) {
          std::vector<int> pos, val;
          for (int i = 0; i < lam.length(); ++i)
            if (c < lam.parts()[i]) {
              pos.push_back(t.at(i, c));
              val.push_back(T.rows()[i][c]);
            }
          col_positions.push_back(pos);
          col_values.push_back(val);
        }
        std::vector<int> digits(m, 0);
        std::function<void(size_t)> emit = [&](size_t c) {
          if (c == col_positions.size()) {
            w(0, static_cast<int>(index_of_digits(digits, n))) += 1;
            return;
          }
          std::vector<int> val = col_values[c];
          std::sort(val.begin(), val.end());
          do {
            for (size_t q = 0; q < val.size(); ++q) digits[col_positions[c][q] - 1] = val[q];
            emit(c + 1);
          } while (std::next_permutation(val.begin(), val.end()));
        };
        emit(0);
        rows_w.push_back(std::move(w));
        ob.labels.push_back({lam, T, t});
      }
  }
  ob.vectors = IntMat(static_cast<int>(rows_v.size()), static_cast<int>(dim));
  ob.duals = IntMat(static_cast<int>(rows_w.size()), static_cast<int>(dim));
  for (size_t i = 0; i < rows_v.size(); ++i)
    for (int j = 0; j < ob.vectors.cols(); ++j) {
      ob.vectors(static_cast<int>(i), j) = rows_v[i](0, j);
      ob.duals(static_cast<int>(i), j) = rows_w[i](0, j);
    }
  return ob;
}

IntMat pairing_matrix(const OrdinaryBasis& ob) {
  const int k = ob.vectors.rows();
  IntMat p(k, k, Int(0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Int acc(0);
      for (int c = 0; c < ob.vectors.cols(); ++c) acc += ob.duals(i, c) * ob.vectors(j, c);
      p(i, j) = acc;
    }
  return p;
}

nlohmann::json SymAnnReport::to_json() const {
  return {{"check", "ordinary_annihilator"},
          {"m", m},
          {"n", n},
          {"rank", kernel_rank.str()},
          {"formula_rank", formula_rank.str()},
          {"zero_iff_tall", zero_iff_tall},
          {"agree", agree}};
}

SymAnnReport sym_annihilator_check(int m, int n) {
  SymAnnReport rep;
  rep.m = m;
  rep.n = n;
  std::vector<AlgebraElement> fam;
  std::vector<bool> tall;
  for (const auto& lam : enumerate_partitions(m)) {
    auto stds = standard_tableaux(SkewShape(lam), iota1(m));
    for (const auto& s : stds)
      for (const auto& t : stds) {
        fam.push_back(murphy_element(s, t));
        tall.push_back(lam.first() > n);
      }
  }
  Int formula(0);
  rep.zero_iff_tall = true;
  for (size_t i = 0; i < fam.size(); ++i) {
    bool zero = acts_as_zero(fam[i], n);
    if (zero != tall[i]) rep.zero_iff_tall = false;
    if (tall[i]) formula += 1;
  }
  rep.formula_rank = formula;
  IntMat g = action_gram(fam, Int(n));
  rep.kernel_rank = Int(static_cast<long>(fam.size()) - rank_bareiss(g));
  rep.agree = rep.zero_iff_tall && rep.kernel_rank == rep.formula_rank;
  return rep;
}

std::vector<RationalTableau> enumerate_rational(const ShapePair& sp, int n) {
  if (sp.lam.first() + sp.mu.first() > n)
    throw std::invalid_argument("enumerate_rational: lam_1 + mu_1 exceeds n");
  std::vector<RationalTableau> out;
  auto as = semistandard_tableaux(sp.lam, n);
  auto bs = semistandard_tableaux(sp.mu, n);
  for (const auto& a : as)
    for (const auto& b : bs) {
      bool ok = true;
      const std::vector<int> ra = a.shape().length() > 0 ? a.rows()[0] : std::vector<int>{};
      const std::vector<int> rb = b.shape().length() > 0 ? b.rows()[0] : std::vector<int>{};
      for (int i = 1; i <= n && ok; ++i) {
        int first_i =
            static_cast<int>(std::count_if(ra.begin(), ra.end(), [i](int e) { return e <= i; })) +
            static_cast<int>(std::count_if(rb.begin(), rb.end(), [i](int e) { return e <= i; }));
        if (first_i > i) ok = false;
      }
      if (ok) out.push_back({a, b});
    }
  return out;
}

Partition rational_tau_shape(const ShapePair& sp, int n) {
  std::vector<int> parts;
  const auto& mu = sp.mu.parts();
  for (int i = static_cast<int>(mu.size()) - 1; i >= 0; --i) parts.push_back(n - mu[i]);
  for (int p : sp.lam.parts()) parts.push_back(p);
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(parts);
}

namespace {

// nullity of an integer matrix modulo a large prime
long nullity_mod_p(const std::vector<std::vector<std::int64_t>>& rows, int cols,
                   std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<std::uint64_t> rr(cols);
    for (int j = 0; j < cols; ++j) {
      std::int64_t v = r[j] % static_cast<std::int64_t>(p);
      rr[j] = v < 0 ? v + p : v;
    }
    m.push_back(std::move(rr));
  }
  auto mulp = [p](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  };
  auto powp = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulp(r, a);
      a = mulp(a, a);
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
    int piv = -1;
    for (size_t i = rank; i < m.size(); ++i)
      if (m[i][col]) { piv = static_cast<int>(i); break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    std::uint64_t inv = powp(m[rank][col], p - 2);
    for (int j = col; j < cols; ++j) m[rank][j] = mulp(m[rank][j], inv);
    for (size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) == rank || !m[i][col]) continue;
      std::uint64_t f = m[i][col];
      for (int j = col; j < cols; ++j) {
        std::uint64_t sub = mulp(f, m[rank][j]);
        m[i][j] = (m[i][j] + p - sub) % p;
      }
    }
    ++rank;
  }
  return cols - rank;
}

}  // namespace

Int commutant_dim(int r, int s, int n) {
  const int m = r + s;
  const long dim = int_pow(n, m);

  // weight blocks
  std::vector<std::vector<int>> weight(dim, std::vector<int>(n, 0));
  std::map<std::vector<int>, std::vector<int>> blocks;
  for (long J = 0; J < dim; ++J) {
    long rest = J;
    std::vector<int> w(n, 0);
    for (int f = m - 1; f >= 0; --f) {
      int d = static_cast<int>(rest % n);
      rest /= n;
      w[d] += f < r ? 1 : -1;
    }
    weight[J] = w;
    blocks[w].push_back(static_cast<int>(J));
  }

  // unknowns: one per same-weight index pair
  std::map<std::pair<int, int>, int> unknown;
  int n_unknowns = 0;
  for (const auto& [w, idxs] : blocks)
    for (int i : idxs)
      for (int j : idxs) unknown[{i, j}] = n_unknowns++;

  // constraints [X, E] = 0 for the adjacent raising and lowering
  // generators; commuting with these and with the torus (which the block
  // structure enforces) implies commuting with every e_{ab}
  auto gl = gl_generator_matrices(r, s, n);
  std::vector<const IntMat*> gens;
  for (int i = 0; i + 1 < n; ++i) {
    gens.push_back(&gl[static_cast<size_t>(i) * n + (i + 1)]);  // e_{i,i+1}
    gens.push_back(&gl[static_cast<size_t>(i + 1) * n + i]);    // e_{i+1,i}
  }

  std::vector<std::vector<std::int64_t>> rows;
  for (const IntMat* e : gens) {
    for (long I = 0; I < dim; ++I)
      for (long J = 0; J < dim; ++J) {
        std::vector<std::int64_t> row(n_unknowns, 0);
        bool nonzero = false;
        // (X E)(I,J): K runs over the block of I
        for (int K : blocks[weight[I]]) {
          const Int& eKJ = (*e)(K, static_cast<int>(J));
          if (eKJ == 0) continue;
          row[unknown[{static_cast<int>(I), K}]] += static_cast<std::int64_t>(eKJ);
          nonzero = true;
        }
        // -(E X)(I,J): K runs over the block of J
        for (int K : blocks[weight[J]]) {
          const Int& eIK = (*e)(static_cast<int>(I), K);
          if (eIK == 0) continue;
          row[unknown[{K, static_cast<int>(J)}]] -= static_cast<std::int64_t>(eIK);
          nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
  }

  long upper = nullity_mod_p(rows, n_unknowns, (1ULL << 61) - 1);

  // lower bound: the image of the walled Brauer algebra commutes with the
  // gl action; check commuting on the algebra generators and compute the
  // image rank exactly
  for (const auto& g : algebra_generators(r, s)) {
    IntMat act = action_matrix(g.elem, n);
    for (const IntMat* e : gens)
      if (!commutes_left_right(*e, act))
        throw std::logic_error("commutant_dim: diagram action does not commute with gl");
  }
  auto walled = enumerate_walled(r, s);
  std::vector<AlgebraElement> fam;
  for (const auto& d : walled) fam.push_back(AlgebraElement::term(d));
  int lower = rank_bareiss(action_gram(fam, Int(n)));

  if (upper == lower) return Int(lower);

  // exact fallback: eliminate the constraint matrix over the integers
  IntMat big(static_cast<int>(rows.size()), n_unknowns, Int(0));
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n_unknowns; ++j) big(static_cast<int>(i), j) = Int(rows[i][j]);
  return Int(n_unknowns - rank_bareiss(big));
}

MixedBasis mixed_basis(const CellBasis& cb, const AnnihilatorBasis& ab, int n) {
  MixedBasis mb;
  mb.r = cb.r();
  mb.s = cb.s();
  mb.n = n;
  const long dim = int_pow(n, mb.r + mb.s);

  std::vector<int> order;
  for (int si = 0; si < static_cast<int>(cb.shapes().size()); ++si)
    if (cb.shapes()[si].lam.first() + cb.shapes()[si].mu.first() <= n) order.push_back(si);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& A = cb.shapes()[a];
    const auto& B = cb.shapes()[b];
    if (A.k != B.k) return A.k > B.k;
    if (!(A.lam == B.lam)) return B.lam < A.lam;  // descending lexicographic
    return B.mu < A.mu;
  });

  std::vector<std::vector<Int>> rows;
  for (int si : order) {
    MixedBasis::Block blk;
    blk.shape_idx = si;
    blk.rats = enumerate_rational(cb.shapes()[si], n);
    for (int ti = 0; ti < static_cast<int>(cb.triples(si).size()); ++ti)
      if (ab.max_of(si, ti) <= n) blk.m0.push_back(ti);
    for (const auto& rt : blk.rats) {
      // multi-index of v_{a,b}: a read row by row, reversed, then b
      std::vector<int> digits = rt.a.row_reading();
      std::reverse(digits.begin(), digits.end());
      std::vector<int> bd = rt.b.row_reading();
      digits.insert(digits.end(), bd.begin(), bd.end());
      const long row_idx = digits.empty() ? 0 : index_of_digits(digits, n);
      for (int ti : blk.m0) {
        IntMat act = action_matrix(cb.m_of(si, ti), n);
        std::vector<Int> row(dim);
        for (int j = 0; j < act.cols(); ++j) row[j] = act(static_cast<int>(row_idx), j);
        rows.push_back(std::move(row));
      }
    }
    mb.blocks.push_back(std::move(blk));
  }

  mb.vectors = IntMat(static_cast<int>(rows.size()), static_cast<int>(dim));
  for (size_t i = 0; i < rows.size(); ++i)
    for (long j = 0; j < dim; ++j)
      mb.vectors(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return mb;
}

nlohmann::json FiltrationReport::to_json() const {
  return {{"check", "filtration"},
          {"r", r},
          {"s", s},
          {"n", n},
          {"square", square},
          {"unimodular", unimodular},
          {"layer_dims", layer_dims},
          {"stable", stable},
          {"b_blocks_factorize", b_blocks_factorize},
          {"gl_blocks_factorize", gl_blocks_factorize},
          {"status", pass ? "pass" : "fail"},
          {"violations", violations}};
}

FiltrationReport filtration_check(const CellBasis& cb, const AnnihilatorBasis& ab, int n) {
  FiltrationReport rep;
  rep.r = cb.r();
  rep.s = cb.s();
  rep.n = n;
  MixedBasis mb = mixed_basis(cb, ab, n);
  const long dim = int_pow(n, rep.r + rep.s);
  rep.square = mb.vectors.rows() == static_cast<int>(dim);
  if (!rep.square) {
    rep.violations.push_back("mixed basis is not square");
    return rep;
  }
  {
    Int d = det_bareiss(mb.vectors);
    rep.unimodular = (d == 1 || d == -1);
    if (!rep.unimodular) rep.violations.push_back("mixed basis determinant is not a unit");
  }

  // block boundaries
  std::vector<int> block_of(dim), offset;
  {
    int pos = 0;
    for (size_t bi = 0; bi < mb.blocks.size(); ++bi) {
      offset.push_back(pos);
      long sz = static_cast<long>(mb.blocks[bi].rats.size()) * mb.blocks[bi].m0.size();
      rep.layer_dims.push_back(sz);
      for (long q = 0; q < sz; ++q) block_of[pos++] = static_cast<int>(bi);
    }
  }

  IntMat vinv = inverse_unimodular(mb.vectors);
  rep.stable = true;
  rep.b_blocks_factorize = true;
  rep.gl_blocks_factorize = true;

  auto check_stability = [&](const IntMat& c, const std::string& name) {
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) {
        if (c(i, j) == 0) continue;
        const auto& sp_row = cb.shapes()[mb.blocks[block_of[i]].shape_idx];
        const auto& sp_col = cb.shapes()[mb.blocks[block_of[j]].shape_idx];
        if (!shape_dominates(sp_col, sp_row)) {
          rep.stable = false;
          rep.violations.push_back("filtration instability under " + name);
          return;
        }
      }
  };

  // walled Brauer generators act as Id tensor A_g on each quotient
  for (const auto& g : algebra_generators(rep.r, rep.s)) {
    IntMat c = mb.vectors * action_matrix(g.elem, n) * vinv;
    check_stability(c, g.name);
    for (size_t bi = 0; bi < mb.blocks.size(); ++bi) {
      const auto& blk = mb.blocks[bi];
      QuotientCellModule qm =
          quotient_cell_module(ab, blk.shape_idx, n, std::vector<Generator>{g});
      const int nr = static_cast<int>(blk.rats.size());
      const int nm = static_cast<int>(blk.m0.size());
      for (int ai = 0; ai < nr; ++ai)
        for (int ti = 0; ti < nm; ++ti)
          for (int aj = 0; aj < nr; ++aj)
            for (int tj = 0; tj < nm; ++tj) {
              Int expect = ai == aj ? qm.actions[0](ti, tj) : Int(0);
              if (c(offset[bi] + ai * nm + ti, offset[bi] + aj * nm + tj) != expect) {
                rep.b_blocks_factorize = false;
              }
            }
    }
  }

  // gl generators act as G tensor Id on each quotient
  auto gl = gl_generator_matrices(rep.r, rep.s, n);
  for (const auto& gmat : gl) {
    IntMat gt(gmat.cols(), gmat.rows());
    for (int i = 0; i < gmat.rows(); ++i)
      for (int j = 0; j < gmat.cols(); ++j) gt(j, i) = gmat(i, j);
    IntMat c = mb.vectors * gt * vinv;
    check_stability(c, "gl");
    for (size_t bi = 0; bi < mb.blocks.size(); ++bi) {
      const auto& blk = mb.blocks[bi];
      const int nr = static_cast<int>(blk.rats.size());
      const int nm = static_cast<int>(blk.m0.size());
      for (int ai = 0; ai < nr; ++ai)
        for (int aj = 0; aj < nr; ++aj) {
          const Int& ref = c(offset[bi] + ai * nm, offset[bi] + aj * nm);
          for (int ti = 0; ti < nm; ++ti)
            for (int tj = 0; tj < nm; ++tj) {
              Int expect = ti == tj ? ref : Int(0);
              if (c(offset[bi] + ai * nm + ti, offset[bi] + aj * nm + tj) != expect)
                rep.gl_blocks_factorize = false;
            }
        }
    }
  }

  long total = 0;
  for (long d : rep.layer_dims) total += d;
  rep.pass = rep.square && rep.unimodular && rep.stable && rep.b_blocks_factorize &&
             rep.gl_blocks_factorize && total == dim;
  if (!rep.b_blocks_factorize)
    rep.violations.push_back("quotient action is not Id tensor A_g for some generator");
  if (!rep.gl_blocks_factorize)
    rep.violations.push_back("gl quotient action is not G tensor Id");
  return rep;
}

}  // namespace wbr
