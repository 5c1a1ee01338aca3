#pragma once

#include <string>
#include <vector>

#include "cxd/sites.hpp"

namespace cxd {

// D_K = [-, K] with bidual family, acting componentwise on lists so that products of
// categories (pairs for the tensor product) are covered by the same type.
// A complex is a sheaf on a one-point set.
class Duality {
 public:
  Duality(const Sheaves& s, Objs k);

  const Sheaves& sheaves() const { return *s_; }
  const Objs& K() const { return k_; }
  std::size_t arity() const { return k_.size(); }

  Objs D(const Objs& a) const;
  // f : A -> B gives D(f) : D(B) -> D(A).
  Maps D(const Maps& f) const;
  Maps bid(const Objs& a) const;  // A -> D D A

  nlohmann::json to_json() const;

 private:
  void check_arity(std::size_t n) const;
  const Sheaves* s_;
  Objs k_;
};

bool same(const Duality& a, const Duality& b);

// Builds D_K and certifies D(bid_A) o bid_{DA} = id on A = K and A = unit; throws std::logic_error otherwise.
Duality make_duality(const Sheaves& s, Objs k);

struct MapsSides {
  Maps lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

// D(bid_A) o bid_{DA} against id_{DA}.
MapsSides eq1_sides(const Duality& d, const Objs& a);
// Viewing D as left adjoint to D^o with unit bid and counit bid^o, the two triangle identities.
// Both unwind to the same composite on D(A); they are kept apart so each is checked as stated.
MapsSides duality_triangle_left(const Duality& d, const Objs& a);
MapsSides duality_triangle_right(const Duality& d, const Objs& a);
bool is_strong_at(const Duality& d, const Objs& a);

struct DPFunctor {
  std::string name;
  Duality src, tgt;
  SFunctor F;
  SNat phi;  // F(D1 A) -> D2(F A)
};

// Diagram P: phi_{D1 A} o F(bid_A) against D2(phi_A) o bid_{FA}.
MapsSides dp_sides(const DPFunctor& f, const Objs& a);
bool check_dp(const DPFunctor& f, const Objs& a);
// Diagram M for rho : F -> G: D2(rho_A) o psi_A o rho_{D1 A} against phi_A.
MapsSides dp_morphism_sides(const SNat& rho, const DPFunctor& f, const DPFunctor& g, const Objs& a);
bool check_dp_morphism(const SNat& rho, const DPFunctor& f, const DPFunctor& g, const Objs& a);

DPFunctor identity_dp(const Duality& d);
// <F2 F1, phi2_{F1} o F2(phi1)>. Throws std::invalid_argument when the middle dualities differ.
DPFunctor compose_dp(const DPFunctor& f2, const DPFunctor& f1);
// Componentwise product of functors on one-element lists.
DPFunctor product_dp(const std::vector<DPFunctor>& factors);

// Identity functor C_K -> C_M with structure [-, iota], iota_i : K_i -> M_i of degree 0.
DPFunctor I_iota(const Duality& src, const Maps& iota);

// <f*, fh_K> : C_{Y,K} -> C_{X,f*K}
DPFunctor pullback_dp(const Sheaves& s, const FiniteMap& f, const SheafComplex& k);
// <f_*, rr_K> : C_{X,f^!K} -> C_{Y,K}
DPFunctor pushforward_dp(const Sheaves& s, const FiniteMap& f, const SheafComplex& k);
// <(x), dd_{K,M}> : C_K x C_M -> C_{K (x) M}
DPFunctor product_dp(const Sheaves& s, const SheafComplex& k, const SheafComplex& m);

// A morphism of duality preserving functors together with its endpoints.
struct DPMorphismCase {
  std::string name;
  DPFunctor F, G;
  SNat rho;
  std::vector<int> object_bases;  // set sizes of the source objects, in list order
};
// ea : I_{ea_K} <f*,fh> <g*,fh>  ->  <(gf)*, fh>                 (f : X -> Y, g : Y -> Z; K on Z)
DPMorphismCase ea_case(const Sheaves& s, const FiniteMap& g, const FiniteMap& f, const SheafComplex& k);
// eb : <(gf)_*, rr> I_{ec_K}  ->  <g_*, rr> <f_*, rr>             (K on Z)
DPMorphismCase eb_case(const Sheaves& s, const FiniteMap& g, const FiniteMap& f, const SheafComplex& k);
// eps : <f*, fh> <g_*, rr>  ->  <gbar_*, rr> I_{gam_K} <fbar*, fh>   (K on Z)
DPMorphismCase eps_case(const Sheaves& s, const CommSquare& sq, const SheafComplex& k);
// fp : I_{fp} <(x), dd> (<f*,fh> x <f*,fh>)  ->  <f*, fh> <(x), dd>   (K, M on Y)
DPMorphismCase fp_case(const Sheaves& s, const FiniteMap& f, const SheafComplex& k, const SheafComplex& m);
// q : <(x), dd> (<f_*,rr> x Id)  ->  <f_*, rr> I_{sp} <(x), dd> (Id x <f*,fh>)   (K, M on Y)
DPMorphismCase q_case(const Sheaves& s, const FiniteMap& f, const SheafComplex& k, const SheafComplex& m);

// Symmetric form psi : A -> D(A) in degree 0.
struct SymmetricForm {
  Objs A;
  Maps psi;
};

// D(psi) o bid_A = psi.
bool is_symmetric(const Duality& d, const SymmetricForm& f);
// phi_A o F(psi). Throws std::invalid_argument on a non-symmetric input.
SymmetricForm transfer_form(const DPFunctor& f, const SymmetricForm& form);

// Degree-0 forms on the unit duality over n points: stalk x is F_p^{dim} in degree 0 with Gram matrix grams[x].
SymmetricForm form_from_grams(const Sheaves& s, const std::vector<Matrix>& grams);
// Gram matrices of a single-component form whose stalks sit in degree 0.
std::vector<Matrix> grams_of(const SymmetricForm& f);

// Dualizing objects: each stalk is F_p placed in a random degree in [lo, hi].
SheafComplex random_dualizing(Rng& rng, int n, int p = 3, int lo = -2, int hi = 2);

}  // namespace cxd
