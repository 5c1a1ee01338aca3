#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "cxd/field.hpp"

namespace cxd {

using Rng = std::mt19937_64;

// Bounded homological complex: dims[t] is the dimension in degree min_degree + t and
// diffs[t] : degree (min_degree + t + 1) -> degree (min_degree + t).
struct Complex {
  int p = 3;
  int min_degree = 0;
  std::vector<int> dims;
  std::vector<Matrix> diffs;

  static Complex zero(int p) { Complex c; c.p = p; return c; }
  static Complex concentrated(int p, int degree, int dim);
  static Complex unit(int p) { return concentrated(p, 0, 1); }
  // Checks shapes, not d o d = 0.
  static Complex make(int p, int min_degree, std::vector<int> dims, std::vector<Matrix> diffs);

  int len() const { return int(dims.size()); }
  int max_degree() const { return min_degree + len() - 1; }
  bool in_range(int n) const { return n >= min_degree && n <= max_degree(); }
  int dim(int n) const { return in_range(n) ? dims[n - min_degree] : 0; }
  // d_n : degree n -> degree n-1, zero outside the stored range.
  Matrix d(int n) const;
  int total_dim() const;
  bool is_zero_object() const { return total_dim() == 0; }

  nlohmann::json to_json() const;
  static Complex from_json(const nlohmann::json& j);
};

using ComplexPtr = std::shared_ptr<const Complex>;
inline ComplexPtr share(Complex c) { return std::make_shared<const Complex>(std::move(c)); }

bool validate(const Complex& a);
// Structural equality; degrees outside either range count as zero.
bool same(const Complex& a, const Complex& b);

// Sign of the suspended differential as a function of the unshifted degree: d^{TA}_{i+1} = eps(i) d^A_i.
using ShiftSign = std::function<int(int)>;
inline int default_shift_sign(int) { return -1; }

Complex suspend(const Complex& a, const ShiftSign& eps = default_shift_sign);
Complex desuspend(const Complex& a, const ShiftSign& eps = default_shift_sign);

// Degree-n map: components f_i : A_i -> B_{i+n}, stored for i in the source's range.
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(ComplexPtr source, ComplexPtr target, int degree = 0);

  static ChainMap identity(ComplexPtr a);

  const Complex& source() const { return *src_; }
  const Complex& target() const { return *tgt_; }
  const ComplexPtr& source_ptr() const { return src_; }
  const ComplexPtr& target_ptr() const { return tgt_; }
  int degree() const { return degree_; }
  int p() const { return src_->p; }

  Matrix comp(int n) const;
  void set_comp(int n, const Matrix& m);
  // Adds m into component n. Shape must match.
  void add_comp(int n, const Matrix& m);

  ChainMap operator+(const ChainMap& o) const;
  ChainMap operator-(const ChainMap& o) const;
  ChainMap operator-() const { return scaled(-1); }
  ChainMap scaled(long long s) const;
  bool is_zero() const;

  nlohmann::json to_json() const;
  static ChainMap from_json(const nlohmann::json& j);

  friend bool operator==(const ChainMap& f, const ChainMap& g);

 private:
  ComplexPtr src_, tgt_;
  int degree_ = 0;
  std::vector<Matrix> comps_;
};

// Throws std::invalid_argument("incomposable") on endpoint mismatch.
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap compose(std::initializer_list<const ChainMap*> right_to_left);

// d^B f = (-1)^n f d^A for a map of degree n.
bool is_chain_map(const ChainMap& f);
bool is_iso(const ChainMap& f);
// Throws std::domain_error when some component is singular.
ChainMap inverse(const ChainMap& f);

// Suspension of a map: (Tf)_{n+1} = f_n between the suspended endpoints.
ChainMap suspend(const ChainMap& f, const ShiftSign& eps = default_shift_sign);
ChainMap desuspend(const ChainMap& f, const ShiftSign& eps = default_shift_sign);

// Basis of degree-0 chain maps a -> b.
std::vector<ChainMap> chain_map_space(const ComplexPtr& a, const ComplexPtr& b);

struct ComplexBounds {
  int max_len = 3;
  int max_dim = 3;
  int min_degree_lo = -2;
  int min_degree_hi = 1;
};

// Direct sum of zero-differential pieces and discs [F_p -1-> F_p], then a random basis change per degree.
Complex random_complex(Rng& rng, const ComplexBounds& bounds, int p = 3);
Complex random_complex(std::uint64_t seed, int max_len, int max_dim, int p = 3);
// Random element of chain_map_space(a, b).
ChainMap random_chain_map(Rng& rng, const ComplexPtr& a, const ComplexPtr& b);
Matrix random_matrix(Rng& rng, int p, int rows, int cols);
Matrix random_invertible(Rng& rng, int p, int n);

}  // namespace cxd
