#include "lef/mat_fp.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "lef/kernels.hpp"

namespace lef {

MatFp::MatFp(std::size_t dim, std::uint32_t p) : dim_(dim), p_(p), data_(dim * dim, 0) {
  require_prime_modulus(p);
}

MatFp MatFp::identity(std::size_t dim, std::uint32_t p) {
  MatFp m(dim, p);
  for (std::size_t i = 0; i < dim; ++i) m.data_[i * dim + i] = 1;
  return m;
}

MatFp MatFp::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p) {
  MatFp m(rows.size(), p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionMismatch("MatFp::from_rows: not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

bool MatFp::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (data_[i * dim_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool MatFp::is_zero() const {
  for (auto v : data_)
    if (v) return false;
  return true;
}

std::size_t MatFp::nonzeros() const {
  std::size_t n = 0;
  for (auto v : data_) n += v != 0;
  return n;
}

std::string MatFp::encode() const {
  std::string s;
  s.reserve(data_.size() + 5);
  s.push_back(static_cast<char>(p_));
  for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((dim_ >> (8 * b)) & 0xff));
  s.append(reinterpret_cast<const char*>(data_.data()), data_.size());
  return s;
}

void require_compatible(const MatFp& a, const MatFp& b) {
  if (a.dim() != b.dim() || a.modulus() != b.modulus())
    throw DimensionMismatch("matrix operands differ in dimension or modulus");
}

MatFp MatFp::operator*(const MatFp& rhs) const {
  require_compatible(*this, rhs);
  MatFp c(dim_, p_);
  kernels::matmul_parallel(data_, rhs.data_, c.data_, dim_, p_);
  return c;
}

MatFp MatFp::operator+(const MatFp& rhs) const {
  require_compatible(*this, rhs);
  MatFp c(dim_, p_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    c.data_[i] = static_cast<std::uint8_t>((data_[i] + rhs.data_[i]) % p_);
  return c;
}

MatFp MatFp::operator-(const MatFp& rhs) const {
  require_compatible(*this, rhs);
  MatFp c(dim_, p_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    c.data_[i] = static_cast<std::uint8_t>((data_[i] + p_ - rhs.data_[i]) % p_);
  return c;
}

MatFp MatFp::operator-() const { return scaled(-1); }

MatFp MatFp::scaled(std::int64_t c) const {
  const auto cc = reduce(c, p_);
  MatFp r(dim_, p_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = static_cast<std::uint8_t>(data_[i] * cc % p_);
  return r;
}

MatFp MatFp::transposed() const {
  MatFp r(dim_, p_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r.data_[j * dim_ + i] = data_[i * dim_ + j];
  return r;
}

namespace {

// Row-reduces `work` in place; applies the same operations to `aug` when given.
// Returns the determinant (0 when singular) and the rank through `rank_out`.
std::uint32_t eliminate(MatFp& work, MatFp* aug, std::size_t* rank_out) {
  const std::size_t d = work.dim();
  const std::uint32_t p = work.modulus();
  auto w = work.data();
  std::uint64_t det = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < d; ++col) {
    std::size_t piv = row;
    while (piv < d && w[piv * d + col] == 0) ++piv;
    if (piv == d) {
      det = 0;
      continue;
    }
    if (piv != row) {
      for (std::size_t j = 0; j < d; ++j) std::swap(w[piv * d + j], w[row * d + j]);
      if (aug) {
        auto x = aug->data();
        for (std::size_t j = 0; j < d; ++j) std::swap(x[piv * d + j], x[row * d + j]);
      }
      det = (p - det % p) % p;
    }
    const std::uint32_t pv = w[row * d + col];
    det = det * pv % p;
    const std::uint32_t inv = inv_mod_prime(pv, p);
    for (std::size_t j = 0; j < d; ++j) w[row * d + j] = static_cast<std::uint8_t>(w[row * d + j] * inv % p);
    if (aug) {
      auto x = aug->data();
      for (std::size_t j = 0; j < d; ++j) x[row * d + j] = static_cast<std::uint8_t>(x[row * d + j] * inv % p);
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row) continue;
      const std::uint32_t f = w[r * d + col];
      if (f == 0) continue;
      const std::uint32_t nf = p - f;
      for (std::size_t j = 0; j < d; ++j)
        w[r * d + j] = static_cast<std::uint8_t>((w[r * d + j] + nf * w[row * d + j]) % p);
      if (aug) {
        auto x = aug->data();
        for (std::size_t j = 0; j < d; ++j)
          x[r * d + j] = static_cast<std::uint8_t>((x[r * d + j] + nf * x[row * d + j]) % p);
      }
    }
    ++row;
  }
  if (rank_out) *rank_out = row;
  if (row < d) det = 0;
  return static_cast<std::uint32_t>(det);
}

}  // namespace

std::uint32_t determinant(const MatFp& a) {
  MatFp w = a;
  return eliminate(w, nullptr, nullptr);
}

std::size_t rank(const MatFp& a) {
  MatFp w = a;
  std::size_t r = 0;
  eliminate(w, nullptr, &r);
  return r;
}

bool is_invertible(const MatFp& a) { return determinant(a) != 0; }

MatFp inverse(const MatFp& a) {
  MatFp w = a;
  MatFp inv = MatFp::identity(a.dim(), a.modulus());
  if (eliminate(w, &inv, nullptr) == 0) throw SingularMatrix("inverse of a singular matrix");
  return inv;
}

MatFp power(const MatFp& a, std::int64_t e) {
  MatFp base = e < 0 ? inverse(a) : a;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  MatFp r = MatFp::identity(a.dim(), a.modulus());
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

namespace {

/// Order of a monomial matrix from its cycles: a cycle of length L whose
/// entries multiply to c contributes L * ord(c). Zero when not monomial.
std::uint64_t monomial_order(const MatFp& a) {
  const auto n = a.dim();
  const auto p = a.modulus();
  std::vector<std::size_t> col_of(n, n);
  std::vector<std::uint32_t> val(n, 0);
  std::vector<char> used(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) == 0) continue;
      if (col_of[i] != n || used[j]) return 0;
      col_of[i] = j;
      val[i] = a(i, j);
      used[j] = 1;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (col_of[i] == n) return 0;
  std::uint64_t order = 1;
  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::uint64_t len = 0, c = 1;
    for (std::size_t i = s; !seen[i]; i = col_of[i]) {
      seen[i] = 1;
      ++len;
      c = c * val[i] % p;
    }
    std::uint64_t oc = 1;
    for (std::uint64_t x = c; x != 1; x = x * c % p) ++oc;
    order = std::lcm(order, len * oc);
  }
  return order;
}

}  // namespace

std::uint64_t element_order(const MatFp& a, std::uint64_t cap) {
  if (const auto m = monomial_order(a)) return m <= cap ? m : 0;
  MatFp x = a;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (x.is_identity()) return k;
    x = x * a;
  }
  return 0;
}

MatFp block(const MatFp& a, std::size_t bi, std::size_t bj, std::size_t b) {
  MatFp r(b, a.modulus());
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) r.set(i, j, a(bi * b + i, bj * b + j));
  return r;
}

std::string to_string(const MatFp& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) os << (j ? " " : "") << a(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace lef
