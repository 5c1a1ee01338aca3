#include "cxd/field.hpp"

#include <sstream>
#include <stdexcept>

namespace cxd {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(int p) : p_(p) {
  if (!is_prime(p) || p == 2 || p >= (1 << 15))
    throw std::invalid_argument("field characteristic must be an odd prime below 2^15");
}

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  // Fermat: a^(p-2)
  std::uint64_t r = 1, b = a % p_;
  for (int e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
  }
  return Elem(r);
}

Elem PrimeField::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return Elem(r);
}

long long PrimeField::centered(Elem a) const {
  long long v = a;
  return 2 * v > p_ ? v - p_ : v;
}

Matrix::Matrix(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols), e_(std::size_t(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(int p, int n) {
  Matrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(int p, const std::vector<std::vector<long long>>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  Matrix m(p, r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.set_int(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(int p, const std::vector<Elem>& v) {
  Matrix m(p, int(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.set(int(i), 0, v[i] % p);
  return m;
}

void Matrix::set_int(int r, int c, long long v) {
  long long x = v % p_;
  if (x < 0) x += p_;
  set(r, c, Elem(x));
}

void Matrix::add_to(int r, int c, Elem v) {
  Elem& x = e_[std::size_t(r) * cols_ + c];
  x = Elem((std::uint64_t(x) + v) % p_);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  if (p_ != o.p_) throw std::invalid_argument("matrix product over different fields");
  Matrix r(p_, rows_, o.cols_);
  if (rows_ == 0 || o.cols_ == 0 || cols_ == 0) return r;
  std::vector<std::uint64_t> acc(o.cols_);
  // Entries are below 2^15, so 2^16 accumulated products cannot overflow.
  for (int i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const Elem* arow = &e_[std::size_t(i) * cols_];
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t a = arow[k];
      if (a == 0) continue;
      const Elem* brow = &o.e_[std::size_t(k) * o.cols_];
      for (int j = 0; j < o.cols_; ++j) acc[j] += a * brow[j];
      if ((k & 0xFFFF) == 0xFFFF)
        for (auto& x : acc) x %= p_;
    }
    Elem* out = &r.e_[std::size_t(i) * o.cols_];
    for (int j = 0; j < o.cols_; ++j) out[j] = Elem(acc[j] % p_);
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    Elem s = e_[i] + o.e_[i];
    r.e_[i] = s >= Elem(p_) ? s - p_ : s;
  }
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.e_) x = x == 0 ? 0 : p_ - x;
  return r;
}

Matrix Matrix::scaled(long long s) const {
  long long k = s % p_;
  if (k < 0) k += p_;
  if (k == 1) return *this;
  Matrix r = *this;
  for (auto& x : r.e_) x = Elem((std::uint64_t(x) * k) % p_);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

bool Matrix::is_zero() const {
  for (auto x : e_)
    if (x) return false;
  return true;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  Matrix b(p_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b.set(i, j, at(r0 + i, c0 + j));
  return b;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
  if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("matrix block out of range");
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) set(r0 + i, c0 + j, b.at(i, j));
}

void Matrix::add_block(int r0, int c0, const Matrix& b) {
  if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("matrix block out of range");
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) add_to(r0 + i, c0 + j, b.at(i, j));
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "] (" << rows_ << "x" << cols_ << " mod " << p_ << ")";
  return os.str();
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (a.p() != b.p()) throw std::invalid_argument("kronecker over different fields");
  Matrix r(a.p(), a.rows() * b.rows(), a.cols() * b.cols());
  PrimeField f(a.p());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      Elem s = a.at(i, j);
      if (!s) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) r.set(i * b.rows() + k, j * b.cols() + l, f.mul(s, b.at(k, l)));
    }
  return r;
}

Matrix block_direct_sum(const std::vector<Matrix>& parts, int p) {
  int rows = 0, cols = 0;
  if (!parts.empty()) p = parts[0].p();
  for (const auto& m : parts) {
    if (m.p() != p) throw std::invalid_argument("direct sum over different fields");
    rows += m.rows();
    cols += m.cols();
  }
  Matrix r(p, rows, cols);
  int r0 = 0, c0 = 0;
  for (const auto& m : parts) {
    r.set_block(r0, c0, m);
    r0 += m.rows();
    c0 += m.cols();
  }
  return r;
}

std::vector<int> rref(Matrix& a) {
  PrimeField f(a.p());
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < a.rows(); ++i)
      if (a.at(i, col)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols(); ++j) {
        Elem t = a.at(row, j);
        a.set(row, j, a.at(piv, j));
        a.set(piv, j, t);
      }
    Elem s = f.inv(a.at(row, col));
    for (int j = col; j < a.cols(); ++j) a.set(row, j, f.mul(a.at(row, j), s));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      Elem m = a.at(i, col);
      if (!m) continue;
      for (int j = col; j < a.cols(); ++j) a.set(i, j, f.sub(a.at(i, j), f.mul(m, a.at(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const Matrix& a) {
  Matrix c = a;
  return int(rref(c).size());
}

bool is_invertible(const Matrix& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::domain_error("inverse of a non-square matrix");
  int n = a.rows();
  Matrix aug(a.p(), n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix::identity(a.p(), n));
  auto piv = rref(aug);
  if (int(piv.size()) < n || (n > 0 && piv[n - 1] >= n)) throw std::domain_error("matrix is singular");
  return aug.block(0, n, n, n);
}

Matrix kernel_basis(const Matrix& a) {
  Matrix r = a;
  auto piv = rref(r);
  std::vector<bool> is_piv(a.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  PrimeField f(a.p());
  Matrix k(a.p(), a.cols(), int(free_cols.size()));
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    int fc = free_cols[t];
    k.set(fc, int(t), 1);
    for (std::size_t i = 0; i < piv.size(); ++i) k.set(piv[i], int(t), f.neg(r.at(int(i), fc)));
  }
  return k;
}

Elem determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::domain_error("determinant of a non-square matrix");
  PrimeField f(a.p());
  Matrix m = a;
  int n = m.rows();
  Elem det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col)) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        Elem t = m.at(col, j);
        m.set(col, j, m.at(piv, j));
        m.set(piv, j, t);
      }
      det = f.neg(det);
    }
    Elem d = m.at(col, col);
    det = f.mul(det, d);
    Elem di = f.inv(d);
    for (int i = col + 1; i < n; ++i) {
      Elem s = f.mul(m.at(i, col), di);
      if (!s) continue;
      for (int j = col; j < n; ++j) m.set(i, j, f.sub(m.at(i, j), f.mul(s, m.at(col, j))));
    }
  }
  return det;
}

nlohmann::json to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const nlohmann::json& j, int p) {
  int r = j.at("rows").get<int>(), c = j.at("cols").get<int>();
  Matrix m(p, r, c);
  const auto& e = j.at("entries");
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k) m.set_int(i, k, e.at(i).at(k).get<long long>());
  return m;
}

}  // namespace cxd
