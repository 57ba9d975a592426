#include "cubic27/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace cubic27 {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// dst += q * src
void add_multiple(IntVector &dst, int64_t q, const IntVector &src) {
  if (q == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (src[i] != 0) dst[i] = checked_axpy(dst[i], q, src[i]);
  }
}

void negate(IntVector &v) {
  for (auto &x : v) x = checked_neg(x);
}

// Brings the first `pivot_cols` columns of `rows` into echelon form using
// unimodular row operations. Rows [0, pivots.size()) carry the pivots; the
// remaining rows are zero in the first `pivot_cols` columns. With `reduce`,
// pivots are made positive and entries above them reduced into [0, pivot).
std::vector<std::size_t> echelonize(std::vector<IntVector> &rows, std::size_t pivot_cols, bool reduce) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = npos;
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (best == npos || abs_value(rows[i][c]) < abs_value(rows[best][c]))) best = i;
      }
      if (best == npos) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        add_multiple(rows[i], -(rows[i][c] / rows[r][c]), rows[r]);
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][c] == 0) continue;
    if (reduce) {
      if (rows[r][c] < 0) negate(rows[r]);
      for (std::size_t i = 0; i < r; ++i) add_multiple(rows[i], -floor_div(rows[i][c], rows[r][c]), rows[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

DivisorClass DivisorClass::exceptional(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("exceptional class index must be in 1..6");
  Coeffs c{};
  c[static_cast<std::size_t>(i)] = 1;
  return DivisorClass(c);
}

DivisorClass DivisorClass::from_vector(std::span<const int64_t> v) {
  if (v.size() != kPicardRank) throw std::invalid_argument("divisor class needs exactly 7 coefficients");
  Coeffs c{};
  std::copy(v.begin(), v.end(), c.begin());
  return DivisorClass(c);
}

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int64_t x) { return x == 0; });
}

DivisorClass DivisorClass::operator+(const DivisorClass &o) const {
  DivisorClass r = *this;
  r += o;
  return r;
}

DivisorClass &DivisorClass::operator+=(const DivisorClass &o) {
  for (std::size_t i = 0; i < kPicardRank; ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  return *this;
}

DivisorClass DivisorClass::operator-(const DivisorClass &o) const {
  DivisorClass r;
  for (std::size_t i = 0; i < kPicardRank; ++i) r.coeffs_[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
  return r;
}

DivisorClass DivisorClass::operator-() const { return DivisorClass() - *this; }

DivisorClass operator*(int64_t k, const DivisorClass &c) {
  DivisorClass r;
  for (std::size_t i = 0; i < kPicardRank; ++i) r.coeffs_[i] = checked_mul(k, c.coeffs_[i]);
  return r;
}

int64_t intersection_pairing(const DivisorClass &a, const DivisorClass &b) {
  int64_t s = checked_mul(a[0], b[0]);
  for (std::size_t i = 1; i < kPicardRank; ++i) s = checked_sub(s, checked_mul(a[i], b[i]));
  return s;
}

bool is_divisible_by(const DivisorClass &c, int64_t n) {
  if (n < 2) throw std::invalid_argument("divisibility test needs n >= 2");
  return std::all_of(c.coeffs().begin(), c.coeffs().end(), [n](int64_t x) { return x % n == 0; });
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector> &rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix &o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) = checked_axpy(p(i, j), a, o(k, j));
    }
  return p;
}

IntVector IntMatrix::operator*(std::span<const int64_t> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  IntVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] = checked_axpy(out[i], (*this)(i, k), v[k]);
  return out;
}

int64_t InvariantFactors::torsion_order() const {
  int64_t n = 1;
  for (int64_t d : torsion) n = checked_mul(n, d);
  return n;
}

std::string to_string(const InvariantFactors &f) {
  std::ostringstream os;
  bool first = true;
  for (int64_t d : f.torsion) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (f.free_rank > 0) {
    os << (first ? "" : " + ") << "Z^" << f.free_rank;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

InvariantFactors smith_invariants(const IntMatrix &input) {
  IntMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<int64_t> diag;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = npos, pj = npos;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a(i, j) != 0 && (pi == npos || abs_value(a(i, j)) < abs_value(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == npos) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        const int64_t q = a(i, t) / a(t, t);
        for (std::size_t c = t; c < n; ++c) a(i, c) = checked_axpy(a(i, c), -q, a(t, c));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        const int64_t q = a(t, j) / a(t, t);
        for (std::size_t r = t; r < m; ++r) a(r, j) = checked_axpy(a(r, j), -q, a(r, t));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder is smaller than the pivot: move it in and repeat.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && abs_value(a(i, t)) < abs_value(a(bi, bj))) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && abs_value(a(t, j)) < abs_value(a(bi, bj))) { bi = t; bj = j; }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Pivot must divide the rest of the block.
      std::size_t bad = npos;
      for (std::size_t i = t + 1; i < m && bad == npos; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == npos) break;
      for (std::size_t c = t; c < n; ++c) a(t, c) = checked_add(a(t, c), a(bad, c));
    }
    diag.push_back(abs_value(a(t, t)));
  }

  InvariantFactors out;
  out.free_rank = m - diag.size();
  for (int64_t d : diag)
    if (d > 1) out.torsion.push_back(d);
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

Sublattice Sublattice::span(std::size_t dim, const std::vector<IntVector> &generators) {
  std::vector<IntVector> rows;
  rows.reserve(generators.size());
  for (const auto &g : generators) {
    if (g.size() != dim) throw std::invalid_argument("generator has wrong dimension");
    if (std::any_of(g.begin(), g.end(), [](int64_t x) { return x != 0; })) rows.push_back(g);
  }
  Sublattice s(dim);
  s.pivots_ = echelonize(rows, dim, true);
  rows.resize(s.pivots_.size());
  s.basis_ = std::move(rows);
  return s;
}

Sublattice Sublattice::span(const std::vector<DivisorClass> &generators) {
  std::vector<IntVector> rows;
  rows.reserve(generators.size());
  for (const auto &g : generators) rows.push_back(g.to_vector());
  return span(kPicardRank, rows);
}

Sublattice Sublattice::full(std::size_t dim) {
  std::vector<IntVector> rows(dim, IntVector(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) rows[i][i] = 1;
  return span(dim, rows);
}

Sublattice Sublattice::kernel(const IntMatrix &a) {
  const std::size_t k = a.rows(), n = a.cols();
  std::vector<IntVector> rows(n, IntVector(k + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = a(j, i);
    rows[i][k + i] = 1;
  }
  const auto pivots = echelonize(rows, k, false);
  std::vector<IntVector> kernel_rows;
  for (std::size_t i = pivots.size(); i < n; ++i) kernel_rows.emplace_back(rows[i].begin() + static_cast<std::ptrdiff_t>(k), rows[i].end());
  return span(n, kernel_rows);
}

std::vector<DivisorClass> Sublattice::classes() const {
  if (dim_ != kPicardRank) throw std::logic_error("classes() requires a sublattice of Z^7");
  std::vector<DivisorClass> out;
  out.reserve(basis_.size());
  for (const auto &b : basis_) out.push_back(DivisorClass::from_vector(b));
  return out;
}

std::optional<IntVector> Sublattice::coordinates(std::span<const int64_t> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector has wrong dimension");
  IntVector residual(v.begin(), v.end());
  IntVector coords(basis_.size(), 0);
  std::size_t next_col = 0;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    for (; next_col < p; ++next_col)
      if (residual[next_col] != 0) return std::nullopt;
    const int64_t piv = basis_[k][p];
    if (residual[p] % piv != 0) return std::nullopt;
    coords[k] = residual[p] / piv;
    add_multiple(residual, -coords[k], basis_[k]);
    next_col = p + 1;
  }
  for (; next_col < dim_; ++next_col)
    if (residual[next_col] != 0) return std::nullopt;
  return coords;
}

bool Sublattice::contains(const Sublattice &other) const {
  if (other.dim_ != dim_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const IntVector &b) { return contains(b); });
}

Sublattice Sublattice::operator+(const Sublattice &other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("sublattice dimension mismatch");
  std::vector<IntVector> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(dim_, rows);
}

Sublattice Sublattice::scaled(int64_t n) const {
  std::vector<IntVector> rows = basis_;
  for (auto &r : rows)
    for (auto &x : r) x = checked_mul(x, n);
  return span(dim_, rows);
}

InvariantFactors quotient_invariants(const Sublattice &ambient, const Sublattice &sub) {
  if (ambient.dim() != sub.dim()) throw ContainmentError("sublattices live in different ambient spaces");
  IntMatrix c(ambient.rank(), sub.rank());
  for (std::size_t j = 0; j < sub.rank(); ++j) {
    const auto coords = ambient.coordinates(sub.basis()[j]);
    if (!coords) throw ContainmentError("sublattice basis vector " + std::to_string(j) + " is not in the ambient lattice");
    for (std::size_t i = 0; i < ambient.rank(); ++i) c(i, j) = (*coords)[i];
  }
  return smith_invariants(c);
}

bool solve_intersection_one(const Sublattice &lat, const DivisorClass &f) {
  int64_t g = 0;
  for (const auto &b : lat.classes()) g = gcd64(g, intersection_pairing(b, f));
  return g == 1;
}

} // namespace cubic27
