#include "cxd/duality.hpp"

namespace cxd {

namespace {

Objs concat(const std::vector<Objs>& parts) {
  Objs r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

Maps one(SheafMap m) { return Maps{std::move(m)}; }

}  // namespace

// ---------------------------------------------------------------- Duality

Duality::Duality(const Sheaves& s, Objs k) : s_(&s), k_(std::move(k)) {}

void Duality::check_arity(std::size_t n) const {
  if (n != k_.size()) throw std::invalid_argument("duality: list length differs from the number of dualizing objects");
}

Objs Duality::D(const Objs& a) const {
  check_arity(a.size());
  Objs r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(s_->hom(a[i], k_[i]));
  return r;
}

Maps Duality::D(const Maps& f) const {
  check_arity(f.size());
  Maps r;
  for (std::size_t i = 0; i < f.size(); ++i) r.push_back(s_->hom(f[i], k_[i]));
  return r;
}

Maps Duality::bid(const Objs& a) const {
  check_arity(a.size());
  Maps r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(s_->bid(a[i], k_[i]));
  return r;
}

nlohmann::json Duality::to_json() const {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& k : k_) v.push_back(k.to_json());
  return {{"K", v}};
}

bool same(const Duality& a, const Duality& b) {
  if (a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!same(a.K()[i], b.K()[i])) return false;
  return true;
}

MapsSides eq1_sides(const Duality& d, const Objs& a) {
  Objs da = d.D(a);
  return {compose(d.D(d.bid(a)), d.bid(da)), identity_of(da)};
}

MapsSides duality_triangle_left(const Duality& d, const Objs& a) {
  // counit at D(A) in C^op after D(unit_A), read back in C.
  Objs da = d.D(a);
  Maps counit = d.bid(da);
  Maps l_unit = d.D(d.bid(a));
  return {compose(l_unit, counit), identity_of(da)};
}

MapsSides duality_triangle_right(const Duality& d, const Objs& b) {
  // D^o(counit_B) o unit_{D^o B} with B an object of C^op.
  Objs db = d.D(b);
  return {compose(d.D(d.bid(b)), d.bid(db)), identity_of(db)};
}

bool is_strong_at(const Duality& d, const Objs& a) {
  for (const auto& m : d.bid(a))
    if (!m.is_iso()) return false;
  return true;
}

Duality make_duality(const Sheaves& s, Objs k) {
  Duality d(s, std::move(k));
  Objs units;
  for (const auto& x : d.K()) units.push_back(s.unit(x.size()));
  if (!eq1_sides(d, d.K()).holds() || !eq1_sides(d, units).holds())
    throw std::logic_error("duality: bidual identity fails");
  return d;
}

// ------------------------------------------------------------- DP functors

MapsSides dp_sides(const DPFunctor& f, const Objs& a) {
  Objs d1a = f.src.D(a);
  return {compose(f.phi(d1a), f.F.map(f.src.bid(a))), compose(f.tgt.D(f.phi(a)), f.tgt.bid(f.F.obj(a)))};
}

bool check_dp(const DPFunctor& f, const Objs& a) { return dp_sides(f, a).holds(); }

MapsSides dp_morphism_sides(const SNat& rho, const DPFunctor& f, const DPFunctor& g, const Objs& a) {
  if (!same(f.src, g.src) || !same(f.tgt, g.tgt)) throw std::invalid_argument("dp morphism: dualities differ");
  return {compose(f.tgt.D(rho(a)), compose(g.phi(a), rho(f.src.D(a)))), f.phi(a)};
}

bool check_dp_morphism(const SNat& rho, const DPFunctor& f, const DPFunctor& g, const Objs& a) {
  return dp_morphism_sides(rho, f, g, a).holds();
}

DPFunctor identity_dp(const Duality& d) {
  SFunctor id{"Id", [](const Objs& a) { return a; }, [](const Maps& m) { return m; }};
  return {"Id", d, d, id, [d](const Objs& a) { return identity_of(d.D(a)); }};
}

DPFunctor compose_dp(const DPFunctor& f2, const DPFunctor& f1) {
  if (!same(f1.tgt, f2.src)) throw std::invalid_argument("compose_dp: dualities do not match");
  SFunctor F = compose_functors(f2.F, f1.F);
  F.name = f2.name + " o " + f1.name;
  SNat phi = [f1, f2](const Objs& a) { return compose(f2.phi(f1.F.obj(a)), f2.F.map(f1.phi(a))); };
  return {F.name, f1.src, f2.tgt, F, phi};
}

DPFunctor product_dp(const std::vector<DPFunctor>& factors) {
  if (factors.empty()) throw std::invalid_argument("product_dp: no factors");
  const Sheaves& s = factors[0].src.sheaves();
  std::vector<Objs> srcK, tgtK;
  std::string name;
  for (const auto& f : factors) {
    if (f.src.arity() != 1 || f.tgt.arity() != 1) throw std::invalid_argument("product_dp: factors must be unary");
    srcK.push_back(f.src.K());
    tgtK.push_back(f.tgt.K());
    name += (name.empty() ? "" : " x ") + f.name;
  }
  auto obj = [factors](const Objs& a) {
    Objs r;
    for (std::size_t i = 0; i < factors.size(); ++i) r.push_back(factors[i].F.obj({a.at(i)}).at(0));
    return r;
  };
  auto map = [factors](const Maps& m) {
    Maps r;
    for (std::size_t i = 0; i < factors.size(); ++i) r.push_back(factors[i].F.map({m.at(i)}).at(0));
    return r;
  };
  SNat phi = [factors](const Objs& a) {
    Maps r;
    for (std::size_t i = 0; i < factors.size(); ++i) r.push_back(factors[i].phi({a.at(i)}).at(0));
    return r;
  };
  return {name, Duality(s, concat(srcK)), Duality(s, concat(tgtK)), SFunctor{name, obj, map}, phi};
}

DPFunctor I_iota(const Duality& src, const Maps& iota) {
  if (iota.size() != src.arity()) throw std::invalid_argument("I_iota: arity");
  Objs m;
  for (std::size_t i = 0; i < iota.size(); ++i) {
    if (iota[i].size() > 0 && iota[i][0].degree() != 0) throw std::invalid_argument("I_iota: iota must have degree 0");
    if (!same(iota[i].source(), src.K()[i])) throw std::invalid_argument("I_iota: iota does not start at K");
    m.push_back(iota[i].target());
  }
  const Sheaves* s = &src.sheaves();
  SFunctor id{"Id", [](const Objs& a) { return a; }, [](const Maps& x) { return x; }};
  SNat phi = [s, iota](const Objs& a) {
    Maps r;
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(s->hom(a[i], iota[i]));
    return r;
  };
  return {"I", src, Duality(*s, m), id, phi};
}

DPFunctor pullback_dp(const Sheaves& s, const FiniteMap& f, const SheafComplex& k) {
  const Sheaves* sp = &s;
  SNat phi = [sp, f, k](const Objs& a) { return one(sp->fh(f, a.at(0), k)); };
  return {"f*", Duality(s, {k}), Duality(s, {s.pullback(f, k)}), s.pullback_functor(f), phi};
}

DPFunctor pushforward_dp(const Sheaves& s, const FiniteMap& f, const SheafComplex& k) {
  const Sheaves* sp = &s;
  SNat phi = [sp, f, k](const Objs& a) { return one(sp->rr(f, a.at(0), k)); };
  return {"f_*", Duality(s, {s.shriek(f, k)}), Duality(s, {k}), s.pushforward_functor(f), phi};
}

DPFunctor product_dp(const Sheaves& s, const SheafComplex& k, const SheafComplex& m) {
  const Sheaves* sp = &s;
  SFunctor F{"(x)", [sp](const Objs& a) { return Objs{sp->tensor(a.at(0), a.at(1))}; },
             [sp](const Maps& x) { return one(sp->tensor(x.at(0), x.at(1))); }};
  SNat phi = [sp, k, m](const Objs& a) { return one(sp->dd(a.at(0), a.at(1), k, m)); };
  return {"(x)", Duality(s, {k, m}), Duality(s, {s.tensor(k, m)}), F, phi};
}

// ------------------------------------------------------- morphism cases

DPMorphismCase ea_case(const Sheaves& s, const FiniteMap& g, const FiniteMap& f, const SheafComplex& k) {
  FiniteMap gf = compose(g, f);
  SheafComplex gk = s.pullback(g, k), fgk = s.pullback(f, gk);
  DPFunctor F = compose_dp(I_iota(Duality(s, {fgk}), {s.ea(g, f, k)}),
                           compose_dp(pullback_dp(s, f, gk), pullback_dp(s, g, k)));
  DPFunctor G = pullback_dp(s, gf, k);
  const Sheaves* sp = &s;
  SNat rho = [sp, g, f](const Objs& a) { return one(sp->ea(g, f, a.at(0))); };
  return {"M.ea", F, G, rho, {g.ntgt()}};
}

DPMorphismCase eb_case(const Sheaves& s, const FiniteMap& g, const FiniteMap& f, const SheafComplex& k) {
  FiniteMap gf = compose(g, f);
  SheafComplex gk = s.shriek(g, k), fgk = s.shriek(f, gk);
  DPFunctor F = compose_dp(pushforward_dp(s, gf, k), I_iota(Duality(s, {fgk}), {s.ec(g, f, k)}));
  DPFunctor G = compose_dp(pushforward_dp(s, g, k), pushforward_dp(s, f, gk));
  const Sheaves* sp = &s;
  SNat rho = [sp, g, f](const Objs& a) { return one(sp->eb(g, f, a.at(0))); };
  return {"M.eb", F, G, rho, {f.nsrc()}};
}

DPMorphismCase eps_case(const Sheaves& s, const CommSquare& sq, const SheafComplex& k) {
  SheafComplex gk = s.shriek(sq.g, k), fk = s.pullback(sq.f, k);
  DPFunctor F = compose_dp(pullback_dp(s, sq.f, k), pushforward_dp(s, sq.g, k));
  DPFunctor G = compose_dp(pushforward_dp(s, sq.gbar, fk),
                           compose_dp(I_iota(Duality(s, {s.pullback(sq.fbar, gk)}), {s.gam(sq, k)}),
                                      pullback_dp(s, sq.fbar, gk)));
  const Sheaves* sp = &s;
  SNat rho = [sp, sq](const Objs& a) { return one(sp->eps(sq, a.at(0))); };
  return {"M.eps", F, G, rho, {sq.g.nsrc()}};
}

DPMorphismCase fp_case(const Sheaves& s, const FiniteMap& f, const SheafComplex& k, const SheafComplex& m) {
  SheafComplex fk = s.pullback(f, k), fm = s.pullback(f, m);
  DPFunctor F = compose_dp(I_iota(Duality(s, {s.tensor(fk, fm)}), {s.fp(f, k, m)}),
                           compose_dp(product_dp(s, fk, fm), product_dp({pullback_dp(s, f, k), pullback_dp(s, f, m)})));
  DPFunctor G = compose_dp(pullback_dp(s, f, s.tensor(k, m)), product_dp(s, k, m));
  const Sheaves* sp = &s;
  SNat rho = [sp, f](const Objs& a) { return one(sp->fp(f, a.at(0), a.at(1))); };
  return {"M.fp", F, G, rho, {f.ntgt(), f.ntgt()}};
}

DPMorphismCase q_case(const Sheaves& s, const FiniteMap& f, const SheafComplex& k, const SheafComplex& m) {
  SheafComplex sk = s.shriek(f, k), fm = s.pullback(f, m);
  DPFunctor F = compose_dp(product_dp(s, k, m), product_dp({pushforward_dp(s, f, k), identity_dp(Duality(s, {m}))}));
  DPFunctor G = compose_dp(
      pushforward_dp(s, f, s.tensor(k, m)),
      compose_dp(I_iota(Duality(s, {s.tensor(sk, fm)}), {s.sp(f, k, m)}),
                 compose_dp(product_dp(s, sk, fm), product_dp({identity_dp(Duality(s, {sk})), pullback_dp(s, f, m)}))));
  const Sheaves* sp = &s;
  SNat rho = [sp, f](const Objs& a) { return one(sp->q(f, a.at(0), a.at(1))); };
  return {"M.q", F, G, rho, {f.nsrc(), f.ntgt()}};
}

// ------------------------------------------------------------------ forms

bool is_symmetric(const Duality& d, const SymmetricForm& f) {
  return compose(d.D(f.psi), d.bid(f.A)) == f.psi;
}

SymmetricForm transfer_form(const DPFunctor& f, const SymmetricForm& form) {
  if (!is_symmetric(f.src, form)) throw std::invalid_argument("transfer_form: input form is not symmetric");
  return {f.F.obj(form.A), compose(f.phi(form.A), f.F.map(form.psi))};
}

SymmetricForm form_from_grams(const Sheaves& s, const std::vector<Matrix>& grams) {
  SheafComplex a, one_;
  a.p = one_.p = s.p();
  for (const auto& g : grams) {
    if (g.rows() != g.cols()) throw std::invalid_argument("form_from_grams: Gram matrix not square");
    a.stalks.push_back(Complex::concentrated(s.p(), 0, g.rows()));
  }
  SheafComplex da = s.hom(a, s.unit(a.size()));
  std::vector<ChainMap> parts;
  for (int x = 0; x < a.size(); ++x) {
    ChainMap m(share(a[x]), share(da[x]));
    if (grams[x].rows() > 0) m.set_comp(0, grams[x]);
    parts.push_back(m);
  }
  return {{a}, {SheafMap(s.p(), parts)}};
}

std::vector<Matrix> grams_of(const SymmetricForm& f) {
  if (f.psi.size() != 1) throw std::invalid_argument("grams_of: expected a single component");
  std::vector<Matrix> r;
  for (int x = 0; x < f.psi[0].size(); ++x) {
    const ChainMap& m = f.psi[0][x];
    for (int n = m.source().min_degree; n <= m.source().max_degree(); ++n)
      if (n != 0 && m.source().dim(n) > 0) throw std::invalid_argument("grams_of: stalk not concentrated in degree 0");
    r.push_back(m.comp(0));
  }
  return r;
}

SheafComplex random_dualizing(Rng& rng, int n, int p, int lo, int hi) {
  SheafComplex k;
  k.p = p;
  for (int x = 0; x < n; ++x) k.stalks.push_back(Complex::concentrated(p, lo + int(rng() % (hi - lo + 1)), 1));
  return k;
}

}  // namespace cxd
