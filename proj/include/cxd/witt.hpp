#pragma once

#include <string>
#include <vector>

#include "cxd/duality.hpp"

namespace cxd {

// Class in W(F_p) held through an anisotropic representative (possibly 0x0).
struct WittClass {
  int p = 3;
  Matrix rep;

  int dim() const { return rep.rows(); }
  // Square class of det(rep): +1 square, -1 non-square, 0 for the zero class.
  int disc() const;
  // diag(1) / diag(r) / diag(1, -r) with r the least non-square, chosen from (dim, disc).
  Matrix canonical() const;
  std::string label() const;
  nlohmann::json to_json() const;
};

// Equal anisotropic dimension and discriminant class; complete for anisotropic forms over F_p.
bool operator==(const WittClass& a, const WittClass& b);
inline bool operator!=(const WittClass& a, const WittClass& b) { return !(a == b); }

bool is_square(long long a, int p);
int least_nonsquare(int p);

// Splits off hyperbolic planes found by exhaustive isotropic search.
// Throws std::invalid_argument when g is not symmetric or is degenerate.
WittClass witt_reduce(const Matrix& g);
WittClass witt_zero(int p);
WittClass witt_add(const WittClass& a, const WittClass& b);
WittClass witt_neg(const WittClass& a);
// Kronecker product of representatives, reduced.
WittClass witt_mul(const WittClass& a, const WittClass& b);

// First nonzero v with v^T g v = 0 in lexicographic order, or empty.
std::vector<Elem> find_isotropic(const Matrix& g);
// Some invertible P with P^T a P = b, searched over all of GL_n(F_p). Only for n <= 2.
bool congruent_exhaustive(const Matrix& a, const Matrix& b);

struct WittTable {
  int p = 3;
  std::vector<WittClass> classes;  // classes[0] is zero
  std::vector<std::vector<int>> add;
  std::vector<int> order;
  bool cyclic() const;
  int exponent() const;
  std::string to_string() const;
  nlohmann::json to_json() const;
};

// All classes reachable from diagonal forms of dimension <= maxdim, with the addition table.
WittTable witt_classify(int p, int maxdim);

// Transfer to a point through <f_*, rr> on the unit duality, then reduced.
// Throws std::invalid_argument on a degenerate or non-symmetric stalk form.
WittClass transfer_witt(const Sheaves& s, const FiniteMap& f, const std::vector<Matrix>& grams);
// Same value from the orthogonal sum of the stalk forms.
WittClass orthogonal_sum_witt(int p, const std::vector<Matrix>& grams);
// Product through I_lunit <(x), dd> on the unit duality.
WittClass product_witt(const Sheaves& s, const Matrix& a, const Matrix& b);
// Both sides of transfer(x . f*(y)) = transfer(x) . y for f : X -> pt, each computed categorically.
std::pair<WittClass, WittClass> projection_formula_sides(const Sheaves& s, const FiniteMap& f,
                                                         const std::vector<Matrix>& x, const Matrix& y);

// Random symmetric invertible Gram matrix.
Matrix random_nondegenerate_form(Rng& rng, int p, int n);

}  // namespace cxd
