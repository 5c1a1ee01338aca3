#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cxd {

using Elem = std::uint32_t;

bool is_prime(int n);

// Arithmetic in Z/p, p an odd prime below 2^15. Two must be invertible.
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }
  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= Elem(p_) ? s - p_ : s; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return Elem((std::uint64_t(a) * b) % p_); }
  Elem inv(Elem a) const;
  Elem from_int(long long v) const;
  // Representative in (-p/2, p/2], used for printing and for signs.
  long long centered(Elem a) const;

 private:
  int p_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(int p, int rows, int cols);

  static Matrix zero(int p, int rows, int cols) { return Matrix(p, rows, cols); }
  static Matrix identity(int p, int n);
  static Matrix from_rows(int p, const std::vector<std::vector<long long>>& rows);
  // Single column holding v.
  static Matrix column(int p, const std::vector<Elem>& v);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem at(int r, int c) const { return e_[std::size_t(r) * cols_ + c]; }
  void set(int r, int c, Elem v) { e_[std::size_t(r) * cols_ + c] = v; }
  void set_int(int r, int c, long long v);
  void add_to(int r, int c, Elem v);
  const std::vector<Elem>& entries() const { return e_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  // Multiply by an integer scalar, typically a sign.
  Matrix scaled(long long s) const;
  Matrix transpose() const;
  bool is_zero() const;

  // Copy of rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Matrix& b);
  void add_block(int r0, int c0, const Matrix& b);

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && (a.e_ == b.e_);
  }

 private:
  int p_ = 3;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> e_;
};

// Block (r, s) of the result is a(r, s) * b.
Matrix kronecker(const Matrix& a, const Matrix& b);
// Block diagonal matrix; empty input gives a 0x0 matrix over p.
Matrix block_direct_sum(const std::vector<Matrix>& parts, int p = 3);

int rank(const Matrix& a);
bool is_invertible(const Matrix& a);
// Throws std::domain_error when a is singular or not square.
Matrix inverse(const Matrix& a);
// Columns form a basis of {x : a x = 0}.
Matrix kernel_basis(const Matrix& a);
// Reduced row echelon form, returns pivot columns.
std::vector<int> rref(Matrix& a);
// Determinant, only meaningful for square matrices.
Elem determinant(const Matrix& a);

nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, int p);

}  // namespace cxd
