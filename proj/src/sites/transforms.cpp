#include <map>

#include "cxd/sites.hpp"

namespace cxd {

namespace {

SheafMap chain(std::initializer_list<SheafMap> right_to_left) {
  auto it = right_to_left.begin();
  SheafMap r = *it;
  for (++it; it != right_to_left.end(); ++it) r = compose(*it, r);
  return r;
}

}  // namespace

SheafMap Sheaves::fp(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const {
  // Stalks of f*A (x) f*B and f*(A (x) B) agree on the nose.
  return identity_of(tensor(pullback(f, a), pullback(f, b)));
}

SheafMap Sheaves::fp_inv(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const {
  return identity_of(pullback(f, tensor(a, b)));
}

SheafMap Sheaves::fh(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const {
  SheafComplex ab = hom(a, b), fa = pullback(f, a);
  SheafComplex P = pullback(f, ab);
  return chain({coev_l(fa, P), hom(fa, fp(f, ab, a)), hom(fa, pullback(f, ev_l(a, b)))});
}

SheafMap Sheaves::fg(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const {
  SheafComplex fa = pushforward(f, a), fb = pushforward(f, b);
  return chain({eta(f, tensor(fa, fb)), pushforward(f, fp_inv(f, fa, fb)),
                pushforward(f, tensor(epsilon(f, a), epsilon(f, b)))});
}

SheafMap Sheaves::ff(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const {
  SheafComplex ab = hom(a, b), fa = pushforward(f, a);
  return chain({coev_l(fa, pushforward(f, ab)), hom(fa, fg(f, ab, a)), hom(fa, pushforward(f, ev_l(a, b)))});
}

SheafMap Sheaves::q(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const {
  SheafComplex fa = pushforward(f, a);
  return chain({eta(f, tensor(fa, b)), pushforward(f, fp_inv(f, fa, b)),
                pushforward(f, tensor(epsilon(f, a), identity_of(pullback(f, b))))});
}

SheafMap Sheaves::q_inv(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const {
  return inverse(q(f, a, b), "q");
}

SheafMap Sheaves::qh(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const {
  SheafComplex fb = pushforward(f, b);
  return chain({eta(f, hom(a, fb)), pushforward(f, fh(f, a, fb)), pushforward(f, hom(pullback(f, a), epsilon(f, b)))});
}

SheafMap Sheaves::qh_inv(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const {
  SheafComplex fa = pullback(f, a), h = hom(fa, b);
  return chain({coev_l(a, pushforward(f, h)), hom(a, q(f, h, a)), hom(a, pushforward(f, ev_l(fa, b)))});
}

SheafMap Sheaves::rr(const FiniteMap& f, const SheafComplex& a, const SheafComplex& k) const {
  return compose(hom(pushforward(f, a), epsilon_shriek(f, k)), ff(f, a, shriek(f, k)));
}

SheafMap Sheaves::sh_prime(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const {
  SheafComplex sb = shriek(f, b);
  return chain({eta_shriek(f, hom(pullback(f, a), sb)), shriek(f, qh_inv(f, a, sb)),
                shriek(f, hom(a, epsilon_shriek(f, b)))});
}

SheafMap Sheaves::sh(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const {
  return inverse(sh_prime(f, a, b), "sh");
}

SheafMap Sheaves::sp(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const {
  SheafComplex sa = shriek(f, a);
  return chain({eta_shriek(f, tensor(sa, pullback(f, b))), shriek(f, q_inv(f, sa, b)),
                shriek(f, tensor(epsilon_shriek(f, a), identity_of(b)))});
}

SheafMap Sheaves::sp_alt(const FiniteMap& f, const SheafComplex& a, const SheafComplex& b) const {
  SheafComplex fb = pullback(f, b), ab = tensor(a, b);
  SheafMap idb = identity_of(fb);
  return chain({tensor(shriek(f, coev_l(b, a)), idb), tensor(sh(f, b, ab), idb), ev_l(fb, shriek(f, ab))});
}

SheafMap Sheaves::ea(const FiniteMap& g, const FiniteMap& f, const SheafComplex& a) const {
  return identity_of(pullback(f, pullback(g, a)));
}

SheafMap Sheaves::ea_inv(const FiniteMap& g, const FiniteMap& f, const SheafComplex& a) const {
  return identity_of(pullback(compose(g, f), a));
}

SheafMap Sheaves::eb(const FiniteMap& g, const FiniteMap& f, const SheafComplex& a) const {
  FiniteMap gf = compose(g, f);
  SheafComplex pa = pushforward(gf, a);
  SheafComplex gpa = pullback(g, pa);
  SheafComplex fgpa = pullback(f, gpa);
  return chain({eta(g, pa), pushforward(g, eta(f, gpa)), pushforward(g, pushforward(f, ea(g, f, pa))),
                pushforward(g, pushforward(f, epsilon(gf, a)))});
}

SheafMap Sheaves::ec(const FiniteMap& g, const FiniteMap& f, const SheafComplex& b) const {
  FiniteMap gf = compose(g, f);
  SheafComplex gb = shriek(g, b), fgb = shriek(f, gb);
  return chain({eta_shriek(gf, fgb), shriek(gf, eb(g, f, fgb)), shriek(gf, pushforward(g, epsilon_shriek(f, gb))),
                shriek(gf, epsilon_shriek(g, b))});
}

SheafMap Sheaves::xi(const CommSquare& s, const SheafComplex& b) const {
  return compose(ea_inv(s.g, s.fbar, b), ea(s.f, s.gbar, b));
}

SheafMap Sheaves::xi_inv(const CommSquare& s, const SheafComplex& b) const {
  return compose(ea_inv(s.f, s.gbar, b), ea(s.g, s.fbar, b));
}

SheafMap Sheaves::eps(const CommSquare& s, const SheafComplex& a) const {
  SNat x = [this, s](const Objs& b) { return Maps{xi(s, b.at(0))}; };
  SNat m = mate(x, pull_push(s.g), pull_push(s.gbar), pullback_functor(s.fbar), pullback_functor(s.f));
  return m(Objs{a}).at(0);
}

SheafMap Sheaves::gam(const CommSquare& s, const SheafComplex& b) const {
  SNat x = [this, s](const Objs& a) { return Maps{inverse(eps(s, a.at(0)), "gam")}; };
  SNat m = mate(x, push_shriek(s.g), push_shriek(s.gbar), pullback_functor(s.f), pullback_functor(s.fbar));
  return m(Objs{b}).at(0);
}

SheafMap Sheaves::iprime(const FiniteMap& g, const FiniteMap& f) const {
  SheafComplex wg = omega(g);
  return chain({sp(f, unit(f.ntgt()), wg), shriek(f, lunit(wg)), ec(g, f, unit(g.ntgt()))});
}

BaseChange base_change(const Sheaves& s, const CommSquare& sq, const SheafComplex& b) {
  BaseChange r{s.eps(sq, s.shriek(sq.g, b)), std::nullopt};
  if (r.eps.is_iso()) r.gam = s.gam(sq, b);
  return r;
}

namespace {

using TransformFn = std::function<SheafMap(const Sheaves&, const SiteContext&)>;

const FiniteMap& map_at(const SiteContext& c, std::size_t i) {
  if (c.maps.size() <= i) throw std::invalid_argument("transform: missing map");
  return c.maps[i];
}
const SheafComplex& obj_at(const SiteContext& c, std::size_t i) {
  if (c.objs.size() <= i) throw std::invalid_argument("transform: missing object");
  return c.objs[i];
}
const CommSquare& square_of(const SiteContext& c) {
  if (!c.square) throw std::invalid_argument("transform: missing square");
  return *c.square;
}

using Binary = SheafMap (Sheaves::*)(const FiniteMap&, const SheafComplex&, const SheafComplex&) const;
using Pseudo = SheafMap (Sheaves::*)(const FiniteMap&, const FiniteMap&, const SheafComplex&) const;
using Square = SheafMap (Sheaves::*)(const CommSquare&, const SheafComplex&) const;

TransformFn binary(Binary m) {
  return [m](const Sheaves& s, const SiteContext& c) { return (s.*m)(map_at(c, 0), obj_at(c, 0), obj_at(c, 1)); };
}
TransformFn pseudo(Pseudo m) {
  return [m](const Sheaves& s, const SiteContext& c) { return (s.*m)(map_at(c, 1), map_at(c, 0), obj_at(c, 0)); };
}
TransformFn square(Square m) {
  return [m](const Sheaves& s, const SiteContext& c) { return (s.*m)(square_of(c), obj_at(c, 0)); };
}

const std::map<std::string, TransformFn>& registry() {
  static const std::map<std::string, TransformFn> r = {
      {"fp", binary(&Sheaves::fp)},
      {"fh", binary(&Sheaves::fh)},
      {"fg", binary(&Sheaves::fg)},
      {"ff", binary(&Sheaves::ff)},
      {"q", binary(&Sheaves::q)},
      {"qh", binary(&Sheaves::qh)},
      {"qh_inv", binary(&Sheaves::qh_inv)},
      {"rr", binary(&Sheaves::rr)},
      {"sh", binary(&Sheaves::sh)},
      {"sh_prime", binary(&Sheaves::sh_prime)},
      {"sp", binary(&Sheaves::sp)},
      {"ea", pseudo(&Sheaves::ea)},
      {"eb", pseudo(&Sheaves::eb)},
      {"ec", pseudo(&Sheaves::ec)},
      {"xi", square(&Sheaves::xi)},
      {"eps", square(&Sheaves::eps)},
      {"gam", square(&Sheaves::gam)},
      {"eta", [](const Sheaves& s, const SiteContext& c) { return s.eta(map_at(c, 0), obj_at(c, 0)); }},
      {"epsilon", [](const Sheaves& s, const SiteContext& c) { return s.epsilon(map_at(c, 0), obj_at(c, 0)); }},
      {"eta_shriek", [](const Sheaves& s, const SiteContext& c) { return s.eta_shriek(map_at(c, 0), obj_at(c, 0)); }},
      {"epsilon_shriek",
       [](const Sheaves& s, const SiteContext& c) { return s.epsilon_shriek(map_at(c, 0), obj_at(c, 0)); }},
      {"iprime", [](const Sheaves& s, const SiteContext& c) { return s.iprime(map_at(c, 1), map_at(c, 0)); }},
  };
  return r;
}

}  // namespace

SheafMap transform(const Sheaves& s, const std::string& name, const SiteContext& ctx) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown transform: " + name);
  return it->second(s, ctx);
}

const std::vector<std::string>& transform_names() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> r;
    for (const auto& [k, _] : registry()) r.push_back(k);
    return r;
  }();
  return v;
}

}  // namespace cxd
