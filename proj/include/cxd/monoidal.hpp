#pragma once

#include <string>
#include <vector>

#include "cxd/adjunction.hpp"
#include "cxd/complex.hpp"
#include "cxd/signs.hpp"

namespace cxd {

inline ChainMap identity_of(const Complex& a) { return ChainMap::identity(share(a)); }

// Offsets of the blocks A_i (x) B_{n-i} inside (A (x) B)_n, ascending i.
struct TensorBlock {
  int i, j, offset, da, db;
};
std::vector<TensorBlock> tensor_blocks(const Complex& a, const Complex& b, int n);
// Offsets of hom(A_i, B_{i+n}) inside [A,B]_n, ascending i; each block is dim(B_j) x dim(A_i) column-major.
struct HomBlock {
  int i, j, offset, da, db;
};
std::vector<HomBlock> hom_blocks(const Complex& a, const Complex& b, int n);

// Closed symmetric monoidal structure on bounded complexes with an injected sign assignment.
// Every structural map is certified as a chain map on construction; failures throw
// std::logic_error naming the map.
class Monoidal {
 public:
  // Runs the compatibility table first and throws std::invalid_argument if a row fails.
  explicit Monoidal(const SignAssignment& s = default_assignment(), int p = 3);
  // For mutation studies: skips the table check.
  static Monoidal unchecked(const SignAssignment& s, int p = 3);

  const SignAssignment& signs() const { return s_; }
  int p() const { return p_; }
  int eps(Sym x, long long i, long long j = 0, long long k = 0) const { return s_.eps(x, i, j, k); }
  ShiftSign shift_sign() const;

  Complex unit() const { return Complex::unit(p_); }
  Complex T(const Complex& a) const { return suspend(a, shift_sign()); }
  Complex Tinv(const Complex& a) const { return desuspend(a, shift_sign()); }
  ChainMap T(const ChainMap& f) const { return suspend(f, shift_sign()); }
  ChainMap Tinv(const ChainMap& f) const { return desuspend(f, shift_sign()); }

  Complex tensor(const Complex& a, const Complex& b) const;
  Complex hom(const Complex& a, const Complex& b) const;
  ChainMap tensor(const ChainMap& f, const ChainMap& g) const;
  // [f, g] : [A, B] -> [A', B'] for f : A' -> A and g : B -> B', phi |-> g o phi o f.
  ChainMap hom(const ChainMap& f, const ChainMap& g) const;
  ChainMap hom(const Complex& a, const ChainMap& g) const { return hom(identity_of(a), g); }
  ChainMap hom(const ChainMap& f, const Complex& b) const { return hom(f, identity_of(b)); }

  ChainMap assoc(const Complex& a, const Complex& b, const Complex& c) const;  // (AB)C -> A(BC)
  ChainMap assoc_inv(const Complex& a, const Complex& b, const Complex& c) const;
  ChainMap lunit(const Complex& a) const;  // 1 (x) A -> A
  ChainMap runit(const Complex& a) const;  // A (x) 1 -> A
  ChainMap lunit_inv(const Complex& a) const;
  ChainMap runit_inv(const Complex& a) const;
  ChainMap sym(const Complex& a, const Complex& b) const;  // A (x) B -> B (x) A

  ChainMap tp1(const Complex& a, const Complex& b) const;  // TA (x) B -> T(A (x) B)
  ChainMap tp2(const Complex& a, const Complex& b) const;  // A (x) TB -> T(A (x) B)
  ChainMap tp1_inv(const Complex& a, const Complex& b) const;
  ChainMap tp2_inv(const Complex& a, const Complex& b) const;
  ChainMap th1(const Complex& a, const Complex& b) const;  // [T^-1 A, B] -> T[A, B]
  ChainMap th2(const Complex& a, const Complex& b) const;  // [A, TB] -> T[A, B]
  ChainMap th1_inv(const Complex& a, const Complex& b) const;
  ChainMap th2_inv(const Complex& a, const Complex& b) const;

  // Adjunction (- (x) A) -| [A, -] in both presentations.
  ChainMap ev_l(const Complex& a, const Complex& k) const;    // [A,K] (x) A -> K
  ChainMap coev_l(const Complex& a, const Complex& k) const;  // K -> [A, K (x) A]
  ChainMap ev_r(const Complex& a, const Complex& k) const;    // A (x) [A,K] -> K
  ChainMap coev_r(const Complex& a, const Complex& k) const;  // K -> [A, A (x) K]
  // u : P (x) A -> C  gives  P -> [A, C].
  ChainMap curry(const ChainMap& u, const Complex& p, const Complex& a) const;
  // v : P -> [A, C]  gives  P (x) A -> C.
  ChainMap uncurry(const ChainMap& v, const Complex& a, const Complex& c) const;

  ChainMap bid(const Complex& a, const Complex& k) const;  // A -> [[A,K],K]
  // (P (x) Q) (x) (A (x) B) -> (P (x) A) (x) (Q (x) B)
  ChainMap exch(const Complex& p, const Complex& q, const Complex& a, const Complex& b) const;
  // [A,K] (x) [B,M] -> [A (x) B, K (x) M]
  ChainMap dd(const Complex& a, const Complex& b, const Complex& k, const Complex& m) const;
  // Same map through coev^l, exch and ev^l (x) ev^l literally; much larger intermediates.
  ChainMap dd_literal(const Complex& a, const Complex& b, const Complex& k, const Complex& m) const;

  // Name-based access: assoc, assoc_inv, lunit, runit, lunit_inv, runit_inv, sym, tp1, tp2, tp1_inv,
  // tp2_inv, th1, th2, th1_inv, th2_inv, ev_l, coev_l, ev_r, coev_r, bid, exch, dd.
  // Throws std::invalid_argument("no such transform") otherwise.
  ChainMap structural(const std::string& name, const std::vector<Complex>& objs) const;
  static const std::vector<std::string>& structural_names();

  AdjunctionT<Complex, ChainMap> tensor_hom_adjunction(const Complex& a) const;

 private:
  struct NoCheck {};
  Monoidal(const SignAssignment& s, int p, NoCheck);
  ChainMap certify(ChainMap f, const char* name) const;
  Complex checked(Complex c, const char* name) const;

  SignAssignment s_;
  int p_;
};

}  // namespace cxd
