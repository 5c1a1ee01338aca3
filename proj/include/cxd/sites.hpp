#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cxd/adjunction.hpp"
#include "cxd/monoidal.hpp"

namespace cxd {

// Map of finite sets. Elements are indices; labels are only for display and JSON.
struct FiniteMap {
  std::vector<std::string> source, target;
  std::vector<int> map;  // map[x] is an index into target

  static FiniteMap make(int nsrc, int ntgt, std::vector<int> assignment);
  static FiniteMap identity(int n);
  static FiniteMap to_point(int nsrc);

  int nsrc() const { return int(source.size()); }
  int ntgt() const { return int(target.size()); }
  int operator()(int x) const { return map[x]; }
  // Source elements over y, ascending.
  std::vector<int> fiber(int y) const;

  nlohmann::json to_json() const;
  static FiniteMap from_json(const nlohmann::json& j);
  friend bool operator==(const FiniteMap& a, const FiniteMap& b) { return a.map == b.map && a.nsrc() == b.nsrc() && a.ntgt() == b.ntgt(); }
};

// g o f. Throws std::invalid_argument when the middle sets differ in size.
FiniteMap compose(const FiniteMap& g, const FiniteMap& f);

// Complex of sheaves on a finite discrete set: one stalk per element.
struct SheafComplex {
  int p = 3;
  std::vector<Complex> stalks;

  int size() const { return int(stalks.size()); }
  const Complex& operator[](int x) const { return stalks[x]; }
  int total_dim() const;

  nlohmann::json to_json() const;
  static SheafComplex from_json(const nlohmann::json& j);
};

bool same(const SheafComplex& a, const SheafComplex& b);

// Stalkwise chain maps of a common degree.
class SheafMap {
 public:
  SheafMap() = default;
  SheafMap(int p, std::vector<ChainMap> parts);
  static SheafMap identity(const SheafComplex& a);

  int p() const { return p_; }
  int size() const { return int(parts_.size()); }
  const ChainMap& operator[](int x) const { return parts_[x]; }
  const std::vector<ChainMap>& parts() const { return parts_; }
  SheafComplex source() const;
  SheafComplex target() const;

  SheafMap scaled(long long s) const;
  bool is_iso() const;

  nlohmann::json to_json() const;
  static SheafMap from_json(const nlohmann::json& j);

  friend bool operator==(const SheafMap& f, const SheafMap& g);

 private:
  int p_ = 3;
  std::vector<ChainMap> parts_;
};

inline SheafMap identity_of(const SheafComplex& a) { return SheafMap::identity(a); }
SheafMap compose(const SheafMap& g, const SheafMap& f);
// Throws AssumptionViolated naming `what` when some stalk is not invertible.
SheafMap inverse(const SheafMap& f, const std::string& what = "inverse");

// Lists of objects and maps, so that functors of several variables (tensor, pairs) fit the
// single-sorted adjunction templates.
using Objs = std::vector<SheafComplex>;
using Maps = std::vector<SheafMap>;
Maps compose(const Maps& g, const Maps& f);
Maps identity_of(const Objs& a);
using SFunctor = FunctorT<Objs, Maps>;
using SAdjunction = AdjunctionT<Objs, Maps>;
using SNat = NatTransT<Objs, Maps>;

// A construction whose prerequisite isomorphism fails on the instance at hand.
struct AssumptionViolated : std::runtime_error {
  explicit AssumptionViolated(const std::string& what) : std::runtime_error("assumption violated: " + what) {}
};

// V --gbar--> Y
// |fbar       |f
// X  --g-->   Z       with f o gbar = g o fbar.
struct CommSquare {
  FiniteMap f, g, fbar, gbar;
  bool cartesian = false;

  // Throws std::invalid_argument if the maps do not form a commuting square.
  static CommSquare make(FiniteMap f, FiniteMap g, FiniteMap fbar, FiniteMap gbar);
  // V = X x_Z Y with pairs in lexicographic order (x first).
  static CommSquare fiber_product(const FiniteMap& f, const FiniteMap& g);

  nlohmann::json to_json() const;
  static CommSquare from_json(const nlohmann::json& j);
};

// True iff the canonical map V -> X x_Z Y is a bijection.
bool is_cartesian(const FiniteMap& f, const FiniteMap& g, const FiniteMap& fbar, const FiniteMap& gbar);

// The pointwise closed monoidal structure on sheaves over finite sets together with
// f*, f_* and f^! for maps of finite sets, and every derived transformation.
//
// Index conventions: a map f : X -> Y gives f* : C_Y -> C_X, f_* : C_X -> C_Y, f^! : C_Y -> C_X.
// (f_*A)_y is the direct sum of A_x over the fiber of y in ascending x.
class Sheaves {
 public:
  explicit Sheaves(Monoidal m = Monoidal{});

  const Monoidal& mon() const { return m_; }
  int p() const { return m_.p(); }

  // Pointwise structure.
  SheafComplex unit(int n) const;
  SheafComplex zero(int n) const;
  SheafComplex tensor(const SheafComplex& a, const SheafComplex& b) const;
  SheafComplex hom(const SheafComplex& a, const SheafComplex& b) const;
  SheafComplex T(const SheafComplex& a) const;
  SheafMap tensor(const SheafMap& f, const SheafMap& g) const;
  SheafMap hom(const SheafMap& f, const SheafMap& g) const;
  SheafMap hom(const SheafComplex& a, const SheafMap& g) const { return hom(identity_of(a), g); }
  SheafMap hom(const SheafMap& f, const SheafComplex& b) const { return hom(f, identity_of(b)); }
  // Monoidal::structural evaluated stalk by stalk.
  SheafMap structural(const std::string& name, const std::vector<SheafComplex>& objs) const;
  SheafMap assoc(const SheafComplex& a, const SheafComplex& b, const SheafComplex& c) const;
  SheafMap assoc_inv(const SheafComplex& a, const SheafComplex& b, const SheafComplex& c) const;
  SheafMap lunit(const SheafComplex& a) const;
  SheafMap sym(const SheafComplex& a, const SheafComplex& b) const;
  SheafMap ev_l(const SheafComplex& a, const SheafComplex& k) const;
  SheafMap coev_l(const SheafComplex& a, const SheafComplex& k) const;
  SheafMap bid(const SheafComplex& a, const SheafComplex& k) const;
  SheafMap exch(const SheafComplex& p, const SheafComplex& q, const SheafComplex& a, const SheafComplex& b) const;
  SheafMap dd(const SheafComplex& a, const SheafComplex& b, const SheafComplex& k, const SheafComplex& m) const;

  // Functors along a map of finite sets. Throw std::invalid_argument("base mismatch") on wrong bases.
  SheafComplex pullback(const FiniteMap& f, const SheafComplex& b) const;
  SheafMap pullback(const FiniteMap& f, const SheafMap& phi) const;
  SheafComplex pushforward(const FiniteMap& f, const SheafComplex& a) const;
  SheafMap pushforward(const FiniteMap& f, const SheafMap& phi) const;
  SheafComplex shriek(const FiniteMap& f, const SheafComplex& b) const { return pullback(f, b); }
  SheafMap shriek(const FiniteMap& f, const SheafMap& phi) const { return pullback(f, phi); }

  // (f*, f_*): diagonal unit and fiber projection counit.
  SheafMap eta(const FiniteMap& f, const SheafComplex& b) const;      // B -> f_* f* B
  SheafMap epsilon(const FiniteMap& f, const SheafComplex& a) const;  // f* f_* A -> A
  // (f_*, f^!): fiber inclusion unit and fiber summation counit.
  SheafMap eta_shriek(const FiniteMap& f, const SheafComplex& a) const;      // A -> f^! f_* A
  SheafMap epsilon_shriek(const FiniteMap& f, const SheafComplex& b) const;  // f_* f^! B -> B

  SFunctor pullback_functor(const FiniteMap& f) const;
  SFunctor pushforward_functor(const FiniteMap& f) const;
  SFunctor shriek_functor(const FiniteMap& f) const;
  SAdjunction pull_push(const FiniteMap& f) const;
  SAdjunction push_shriek(const FiniteMap& f) const;
  // (- (x) A, [A, -]) on sheaves over A's base.
  SAdjunction tensor_hom(const SheafComplex& a) const;

  // Transformations; argument bases follow the source functors.
  SheafMap fp(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const;      // f*A (x) f*B -> f*(A (x) B)
  SheafMap fp_inv(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const;
  SheafMap fh(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const;      // f*[A,B] -> [f*A, f*B]
  SheafMap fg(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const;      // f_*A (x) f_*B -> f_*(A (x) B)
  SheafMap ff(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const;      // f_*[A,B] -> [f_*A, f_*B]
  SheafMap q(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const;       // f_*A (x) B -> f_*(A (x) f*B)
  SheafMap q_inv(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const;
  SheafMap qh(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const;      // [A, f_*B] -> f_*[f*A, B]
  SheafMap qh_inv(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const;  // f_*[f*A, B] -> [A, f_*B]
  SheafMap rr(const FiniteMap& f, const SheafComplex& a, const SheafComplex& k) const;      // f_*[A, f^!K] -> [f_*A, K]
  SheafMap sh_prime(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const;  // [f*A, f^!B] -> f^![A,B]
  SheafMap sh(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const;        // f^![A,B] -> [f*A, f^!B]
  SheafMap sp(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const;      // f^!A (x) f*B -> f^!(A (x) B)
  // The same map through coev, sh and ev.
  SheafMap sp_alt(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const;

  // Pseudofunctor structure for f : X -> Y, g : Y -> Z.
  SheafMap ea(const FiniteMap& g, const FiniteMap& f, const SheafComplex& a) const;      // f*g*A -> (gf)*A
  SheafMap ea_inv(const FiniteMap& g, const FiniteMap& f, const SheafComplex& a) const;
  SheafMap eb(const FiniteMap& g, const FiniteMap& f, const SheafComplex& a) const;      // (gf)_*A -> g_*f_*A
  SheafMap ec(const FiniteMap& g, const FiniteMap& f, const SheafComplex& b) const;      // f^!g^!B -> (gf)^!B

  // Base change along a square.
  SheafMap xi(const CommSquare& s, const SheafComplex& b) const;      // gbar* f* B -> fbar* g* B
  SheafMap xi_inv(const CommSquare& s, const SheafComplex& b) const;
  SheafMap eps(const CommSquare& s, const SheafComplex& a) const;     // f* g_* A -> gbar_* fbar* A
  // fbar* g^! B -> gbar^! f* B; throws AssumptionViolated("gam") unless eps at g^!B is invertible.
  SheafMap gam(const CommSquare& s, const SheafComplex& b) const;

  // omega'_f = f^!(1_Y) and the cocycle map omega'_f (x) f*omega'_g -> omega'_{gf}.
  SheafComplex omega(const FiniteMap& f) const { return shriek(f, unit(f.ntgt())); }
  SheafMap iprime(const FiniteMap& g, const FiniteMap& f) const;

 private:
  SheafMap lift(int n, const std::function<ChainMap(int)>& at) const;
  SheafComplex lift_obj(int n, const std::function<Complex(int)>& at) const;
  Monoidal m_;
};

struct BaseChange {
  SheafMap eps;
  std::optional<SheafMap> gam;  // absent when eps is not invertible on the instance
};
BaseChange base_change(const Sheaves& s, const CommSquare& sq, const SheafComplex& b);

// Name-based access to every transformation. Context layout per name:
//   maps[0] = f (maps[1] = g for ea/eb/ec/iprime, composable as g o f); square for xi/eps/gam;
//   objs in the order of the corresponding Sheaves member.
struct SiteContext {
  std::vector<FiniteMap> maps;
  std::optional<CommSquare> square;
  std::vector<SheafComplex> objs;
};
SheafMap transform(const Sheaves& s, const std::string& name, const SiteContext& ctx);
const std::vector<std::string>& transform_names();

// Generators.
FiniteMap random_finite_map(Rng& rng, int max_set, int nsrc = -1, int ntgt = -1);
SheafComplex random_sheaf(Rng& rng, int n, const ComplexBounds& bounds, int p = 3);
// Cartesian square over random f, g into a common Z.
CommSquare random_cartesian_square(Rng& rng, int max_set);
// X = Y = Z = pt, V empty: eps is the zero map out of a nonzero object.
CommSquare empty_corner_square();

}  // namespace cxd
