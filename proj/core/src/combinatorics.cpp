#include "wbr/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wbr {

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::transposition(int n, int i, int j) {
  Perm p = identity(n);
  std::swap(p.img[i], p.img[j]);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> v(img.size());
  for (int i = 0; i < size(); ++i) v[img[i]] = i;
  return Perm(std::move(v));
}

int Perm::sign() const {
  std::vector<bool> seen(img.size(), false);
  int s = 1;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> v(a.size());
  for (int i = 0; i < a.size(); ++i) v[i] = b(a(i));
  return Perm(std::move(v));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& inner) const {
  for (int i = 0; i < inner.length(); ++i)
    if (inner.parts()[i] > part(i)) return false;
  return true;
}

Partition Partition::transpose() const {
  if (parts_.empty()) return Partition();
  std::vector<int> t(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++t[j];
  return Partition(std::move(t));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<Partition> enumerate_partitions(int m) {
  if (m < 0) throw std::invalid_argument("enumerate_partitions: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

bool dominates(const Composition& a, const Composition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance requires compositions of equal size");
  int pa = 0, pb = 0;
  size_t n = std::max(a.parts().size(), b.parts().size());
  for (size_t i = 0; i < n; ++i) {
    pa += a.part(static_cast<int>(i));
    pb += b.part(static_cast<int>(i));
    if (pa < pb) return false;
  }
  return true;
}

bool strictly_dominates(const Composition& a, const Composition& b) {
  return !(a == b) && dominates(a, b);
}

bool dominates_row_lengths(const std::vector<int>& a, const std::vector<int>& b) {
  return dominates(Composition(a), Composition(b));
}

SkewShape::SkewShape(Composition outer, Composition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  for (size_t i = 0; i < inner_.parts().size(); ++i)
    if (inner_.part(static_cast<int>(i)) > outer_.part(static_cast<int>(i)))
      throw std::invalid_argument("skew shape: inner diagram not contained in outer");
  std::vector<int> in = inner_.parts();
  while (!in.empty() && in.back() == 0) in.pop_back();
  if (in.size() != inner_.parts().size()) inner_ = Composition(std::move(in));
}

int SkewShape::n_cells() const { return outer_.size() - inner_.size(); }

std::vector<int> SkewShape::row_lengths() const {
  std::vector<int> r(n_rows());
  for (int i = 0; i < n_rows(); ++i) r[i] = row_end(i) - row_begin(i);
  return r;
}

bool SkewShape::contains_cell(int i, int j) const {
  return i >= 0 && i < n_rows() && j >= row_begin(i) && j < row_end(i);
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows, bool ascending)
    : shape_(std::move(shape)), rows_(std::move(rows)), ascending_(ascending) {
  if (static_cast<int>(rows_.size()) != shape_.n_rows())
    throw std::invalid_argument("tableau: row count mismatch");
  std::vector<int> all;
  for (int i = 0; i < shape_.n_rows(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_.row_end(i) - shape_.row_begin(i))
      throw std::invalid_argument("tableau: row length mismatch");
    all.insert(all.end(), rows_[i].begin(), rows_[i].end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("tableau entries must be distinct");
}

Tableau Tableau::canonical(const SkewShape& shape, std::vector<int> alphabet, bool ascending) {
  if (static_cast<int>(alphabet.size()) != shape.n_cells())
    throw std::invalid_argument("canonical tableau: alphabet size mismatch");
  std::sort(alphabet.begin(), alphabet.end());
  if (!ascending) std::reverse(alphabet.begin(), alphabet.end());
  std::vector<std::vector<int>> rows(shape.n_rows());
  size_t k = 0;
  for (int i = 0; i < shape.n_rows(); ++i)
    for (int j = shape.row_begin(i); j < shape.row_end(i); ++j) rows[i].push_back(alphabet[k++]);
  return Tableau(shape, std::move(rows), ascending);
}

int Tableau::at(int i, int j) const {
  if (!shape_.contains_cell(i, j)) throw std::out_of_range("tableau cell outside shape");
  return rows_[i][j - shape_.row_begin(i)];
}

std::vector<int> Tableau::row_reading() const {
  std::vector<int> out;
  for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<int> Tableau::fill() const {
  std::vector<int> f = row_reading();
  std::sort(f.begin(), f.end());
  return f;
}

bool Tableau::row_standard() const {
  for (const auto& r : rows_)
    for (size_t j = 1; j < r.size(); ++j) {
      if (ascending_ ? r[j - 1] >= r[j] : r[j - 1] <= r[j]) return false;
    }
  return true;
}

bool Tableau::is_standard() const {
  if (!row_standard()) return false;
  for (int i = 0; i + 1 < shape_.n_rows(); ++i)
    for (int j = 0; j < shape_.row_end(i); ++j)
      if (shape_.contains_cell(i, j) && shape_.contains_cell(i + 1, j)) {
        int a = at(i, j), b = at(i + 1, j);
        if (ascending_ ? a >= b : a <= b) return false;
      }
  return true;
}

namespace {

Tableau restrict_by(const Tableau& t, const std::function<bool(int)>& keep) {
  std::vector<int> outer, inner;
  std::vector<std::vector<int>> rows;
  const SkewShape& sh = t.shape();
  for (int i = 0; i < sh.n_rows(); ++i) {
    const auto& row = t.rows()[i];
    int lo = 0, hi = static_cast<int>(row.size());
    while (hi > lo && !keep(row[hi - 1])) --hi;
    while (lo < hi && !keep(row[lo])) ++lo;
    for (int j = lo; j < hi; ++j)
      if (!keep(row[j]))
        throw std::invalid_argument("restriction does not leave contiguous rows");
    inner.push_back(sh.row_begin(i) + lo);
    outer.push_back(sh.row_begin(i) + hi);
    rows.emplace_back(row.begin() + lo, row.begin() + hi);
  }
  while (!outer.empty() && outer.back() == inner.back() && inner.back() == 0) {
    outer.pop_back();
    inner.pop_back();
    rows.pop_back();
  }
  return Tableau(SkewShape(Composition(outer), Composition(inner)), std::move(rows),
                 t.ascending());
}

}  // namespace

Tableau Tableau::restrict_down(int bound) const {
  return restrict_by(*this, [bound](int v) { return v <= bound; });
}

Tableau Tableau::restrict_up(int bound) const {
  return restrict_by(*this, [bound](int v) { return v >= bound; });
}

Perm Tableau::d_perm() const {
  if (!row_standard()) throw std::invalid_argument("d_perm requires a row-standard tableau");
  std::vector<int> alphabet = fill();
  if (!ascending_) std::reverse(alphabet.begin(), alphabet.end());
  std::vector<int> reading = row_reading();
  const int m = n_cells();
  std::vector<int> img(m);
  for (int p = 0; p < m; ++p) {
    auto it = std::find(reading.begin(), reading.end(), alphabet[p]);
    img[p] = static_cast<int>(it - reading.begin());
  }
  return Perm(std::move(img));
}

bool Tableau::operator==(const Tableau& o) const {
  return shape_ == o.shape_ && rows_ == o.rows_ && ascending_ == o.ascending_;
}

bool Tableau::operator<(const Tableau& o) const {
  auto key = [](const Tableau& t) {
    return std::make_tuple(t.shape_.outer().parts(), t.shape_.inner().parts(), t.rows_,
                           t.ascending_);
  };
  return key(*this) < key(o);
}

std::string Tableau::str() const {
  std::ostringstream os;
  for (int i = 0; i < shape_.n_rows(); ++i) {
    if (i) os << " | ";
    for (int j = 0; j < shape_.row_begin(i); ++j) os << ". ";
    for (size_t j = 0; j < rows_[i].size(); ++j) os << rows_[i][j] << " ";
  }
  return os.str();
}

nlohmann::json Tableau::to_json() const {
  return {{"shape", {{"outer", shape_.outer().parts()}, {"inner", shape_.inner().parts()}}},
          {"rows", rows_},
          {"order", ascending_ ? "asc" : "desc"}};
}

Tableau Tableau::from_json(const nlohmann::json& j) {
  SkewShape sh(Composition(j.at("shape").at("outer").get<std::vector<int>>()),
               Composition(j.at("shape").at("inner").get<std::vector<int>>()));
  return Tableau(sh, j.at("rows").get<std::vector<std::vector<int>>>(),
                 j.at("order").get<std::string>() == "asc");
}

bool tableau_dominates(const Tableau& a, const Tableau& b) {
  if (a.fill() != b.fill()) return false;
  std::vector<int> values = a.fill();
  for (int v : values) {
    Tableau ra = a.ascending() ? a.restrict_down(v) : a.restrict_up(v);
    Tableau rb = b.ascending() ? b.restrict_down(v) : b.restrict_up(v);
    if (!dominates_row_lengths(ra.shape().row_lengths(), rb.shape().row_lengths())) return false;
  }
  return true;
}

bool tableau_strictly_dominates(const Tableau& a, const Tableau& b) {
  return !(a == b) && tableau_dominates(a, b);
}

std::vector<Tableau> standard_tableaux(const SkewShape& shape, std::vector<int> alphabet,
                                       bool ascending) {
  if (static_cast<int>(alphabet.size()) != shape.n_cells())
    throw std::invalid_argument("standard_tableaux: alphabet size mismatch");
  std::sort(alphabet.begin(), alphabet.end());
  if (!ascending) std::reverse(alphabet.begin(), alphabet.end());

  // Standard tableaux are the linear extensions of the cell poset; build
  // them by placing alphabet values in order of significance.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < shape.n_rows(); ++i)
    for (int j = shape.row_begin(i); j < shape.row_end(i); ++j) cells.emplace_back(i, j);

  std::vector<std::vector<int>> grid(shape.n_rows());
  for (int i = 0; i < shape.n_rows(); ++i)
    grid[i].assign(shape.row_end(i), -1);  // -1 marks cells not yet filled / outside inner

  std::vector<Tableau> out;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == alphabet.size()) {
      std::vector<std::vector<int>> rows(shape.n_rows());
      for (int i = 0; i < shape.n_rows(); ++i)
        for (int j = shape.row_begin(i); j < shape.row_end(i); ++j) rows[i].push_back(grid[i][j]);
      out.emplace_back(shape, std::move(rows), ascending);
      return;
    }
    for (auto [i, j] : cells) {
      if (grid[i][j] != -1) continue;
      bool left_ok = j == shape.row_begin(i) || grid[i][j - 1] != -1;
      bool up_ok = i == 0 || !shape.contains_cell(i - 1, j) || grid[i - 1][j] != -1;
      if (left_ok && up_ok) {
        grid[i][j] = alphabet[k];
        rec(k + 1);
        grid[i][j] = -1;
      }
    }
  };
  rec(0);
  return out;
}

TypedTableau::TypedTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::invalid_argument("typed tableau: row count mismatch");
  for (int i = 0; i < shape_.length(); ++i)
    if (static_cast<int>(rows_[i].size()) != shape_.parts()[i])
      throw std::invalid_argument("typed tableau: row length mismatch");
}

Composition TypedTableau::type(int n_values) const {
  std::vector<int> mult(n_values, 0);
  for (const auto& r : rows_)
    for (int v : r) {
      if (v < 1 || v > n_values) throw std::out_of_range("typed tableau entry out of range");
      ++mult[v - 1];
    }
  return Composition(std::move(mult));
}

bool TypedTableau::row_standard() const {
  for (const auto& r : rows_)
    for (size_t j = 1; j < r.size(); ++j)
      if (r[j - 1] >= r[j]) return false;
  return true;
}

bool TypedTableau::semistandard() const {
  if (!row_standard()) return false;
  for (size_t i = 0; i + 1 < rows_.size(); ++i)
    for (size_t j = 0; j < rows_[i + 1].size(); ++j)
      if (rows_[i][j] > rows_[i + 1][j]) return false;
  return true;
}

std::vector<int> TypedTableau::row_reading() const {
  std::vector<int> out;
  for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<int> TypedTableau::restricted_row_lengths(int bound) const {
  std::vector<int> lens;
  for (const auto& r : rows_)
    lens.push_back(static_cast<int>(std::count_if(r.begin(), r.end(),
                                                  [bound](int v) { return v <= bound; })));
  return lens;
}

std::string TypedTableau::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << " | ";
    for (size_t j = 0; j < rows_[i].size(); ++j) os << rows_[i][j] << " ";
  }
  return os.str();
}

nlohmann::json TypedTableau::to_json() const {
  return {{"shape", shape_.parts()}, {"rows", rows_}};
}

std::vector<TypedTableau> semistandard_tableaux(const Partition& shape, int n) {
  std::vector<std::vector<int>> rows(shape.length());
  for (int i = 0; i < shape.length(); ++i) rows[i].assign(shape.parts()[i], 0);
  std::vector<TypedTableau> out;
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == shape.length()) {
      out.emplace_back(shape, rows);
      return;
    }
    int ni = i, nj = j + 1;
    if (nj == shape.parts()[i]) { ni = i + 1; nj = 0; }
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[i][j - 1] + 1);      // rows strict
    if (i > 0 && j < shape.parts()[i - 1]) lo = std::max(lo, rows[i - 1][j]);  // columns weak
    for (int v = lo; v <= n; ++v) {
      rows[i][j] = v;
      rec(ni, nj);
    }
    rows[i][j] = 0;
  };
  if (shape.length() == 0) out.emplace_back(shape, rows);
  else rec(0, 0);
  return out;
}

bool typed_dominates(const TypedTableau& a, const TypedTableau& b, int n_values) {
  for (int v = 1; v <= n_values; ++v) {
    std::vector<int> ra = a.restricted_row_lengths(v), rb = b.restricted_row_lengths(v);
    int sa = std::accumulate(ra.begin(), ra.end(), 0);
    int sb = std::accumulate(rb.begin(), rb.end(), 0);
    if (sa != sb) return false;
    if (!dominates_row_lengths(ra, rb)) return false;
  }
  return true;
}

}  // namespace wbr
