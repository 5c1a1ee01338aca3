#include "cxd/sites.hpp"

#include <algorithm>
#include <map>

namespace cxd {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(std::to_string(i));
  return v;
}

// Direct sum in the given order; block diagonal differentials.
Complex direct_sum(const std::vector<const Complex*>& parts, int p) {
  int lo = 0, hi = -1;
  bool any = false;
  for (const Complex* c : parts) {
    if (c->len() == 0) continue;
    lo = any ? std::min(lo, c->min_degree) : c->min_degree;
    hi = any ? std::max(hi, c->max_degree()) : c->max_degree();
    any = true;
  }
  if (!any) return Complex::zero(p);
  std::vector<int> dims;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    int s = 0;
    for (const Complex* c : parts) s += c->dim(n);
    dims.push_back(s);
    if (n > lo) {
      std::vector<Matrix> blocks;
      for (const Complex* c : parts) blocks.push_back(c->d(n));
      diffs.push_back(block_direct_sum(blocks, p));
    }
  }
  return Complex::make(p, lo, dims, diffs);
}

// Columns: summand `j` of a sum with summand dims `dims`; rows: the whole sum.
Matrix inclusion(int p, const std::vector<int>& dims, int j) {
  int total = 0, off = 0;
  for (int i = 0; i < int(dims.size()); ++i) {
    if (i == j) off = total;
    total += dims[i];
  }
  Matrix m(p, total, dims[j]);
  for (int r = 0; r < dims[j]; ++r) m.set(off + r, r, 1);
  return m;
}

std::vector<int> dims_at(const std::vector<const Complex*>& parts, int n) {
  std::vector<int> d;
  for (const Complex* c : parts) d.push_back(c->dim(n));
  return d;
}

void check_base(const FiniteMap& f, int n, bool source_side) {
  if ((source_side ? f.nsrc() : f.ntgt()) != n) throw std::invalid_argument("base mismatch");
}

}  // namespace

// ---------------------------------------------------------------- FiniteMap

FiniteMap FiniteMap::make(int nsrc, int ntgt, std::vector<int> assignment) {
  if (int(assignment.size()) != nsrc) throw std::invalid_argument("finite map: assignment size");
  for (int y : assignment)
    if (y < 0 || y >= ntgt) throw std::invalid_argument("finite map: value out of range");
  return {default_labels(nsrc), default_labels(ntgt), std::move(assignment)};
}

FiniteMap FiniteMap::identity(int n) {
  std::vector<int> a(n);
  for (int i = 0; i < n; ++i) a[i] = i;
  return make(n, n, a);
}

FiniteMap FiniteMap::to_point(int nsrc) {
  FiniteMap f = make(nsrc, 1, std::vector<int>(nsrc, 0));
  f.target = {"*"};
  return f;
}

std::vector<int> FiniteMap::fiber(int y) const {
  std::vector<int> v;
  for (int x = 0; x < nsrc(); ++x)
    if (map[x] == y) v.push_back(x);
  return v;
}

nlohmann::json FiniteMap::to_json() const {
  nlohmann::json m = nlohmann::json::object();
  for (int x = 0; x < nsrc(); ++x) m[source[x]] = target[map[x]];
  return {{"source", source}, {"target", target}, {"map", m}};
}

FiniteMap FiniteMap::from_json(const nlohmann::json& j) {
  FiniteMap f;
  f.source = j.at("source").get<std::vector<std::string>>();
  f.target = j.at("target").get<std::vector<std::string>>();
  for (const auto& s : f.source) {
    std::string t = j.at("map").at(s).get<std::string>();
    auto it = std::find(f.target.begin(), f.target.end(), t);
    if (it == f.target.end()) throw std::invalid_argument("finite map: unknown target label " + t);
    f.map.push_back(int(it - f.target.begin()));
  }
  return f;
}

FiniteMap compose(const FiniteMap& g, const FiniteMap& f) {
  if (f.ntgt() != g.nsrc()) throw std::invalid_argument("finite maps not composable");
  FiniteMap h;
  h.source = f.source;
  h.target = g.target;
  for (int x = 0; x < f.nsrc(); ++x) h.map.push_back(g(f(x)));
  return h;
}

// ------------------------------------------------------------ SheafComplex

int SheafComplex::total_dim() const {
  int s = 0;
  for (const auto& c : stalks) s += c.total_dim();
  return s;
}

nlohmann::json SheafComplex::to_json() const {
  nlohmann::json st = nlohmann::json::array();
  for (const auto& c : stalks) st.push_back(c.to_json());
  return {{"p", p}, {"stalks", st}};
}

SheafComplex SheafComplex::from_json(const nlohmann::json& j) {
  SheafComplex s;
  s.p = j.at("p").get<int>();
  for (const auto& c : j.at("stalks")) s.stalks.push_back(Complex::from_json(c));
  return s;
}

bool same(const SheafComplex& a, const SheafComplex& b) {
  if (a.size() != b.size() || a.p != b.p) return false;
  for (int x = 0; x < a.size(); ++x)
    if (!same(a[x], b[x])) return false;
  return true;
}

// ---------------------------------------------------------------- SheafMap

SheafMap::SheafMap(int p, std::vector<ChainMap> parts) : p_(p), parts_(std::move(parts)) {
  for (const auto& c : parts_)
    if (c.degree() != (parts_.empty() ? 0 : parts_[0].degree()))
      throw std::invalid_argument("sheaf map: stalk degrees differ");
}

SheafMap SheafMap::identity(const SheafComplex& a) {
  std::vector<ChainMap> v;
  for (const auto& c : a.stalks) v.push_back(ChainMap::identity(share(c)));
  return SheafMap(a.p, std::move(v));
}

SheafComplex SheafMap::source() const {
  SheafComplex s;
  s.p = p_;
  for (const auto& c : parts_) s.stalks.push_back(c.source());
  return s;
}

SheafComplex SheafMap::target() const {
  SheafComplex s;
  s.p = p_;
  for (const auto& c : parts_) s.stalks.push_back(c.target());
  return s;
}

SheafMap SheafMap::scaled(long long s) const {
  std::vector<ChainMap> v;
  for (const auto& c : parts_) v.push_back(c.scaled(s));
  return SheafMap(p_, std::move(v));
}

bool SheafMap::is_iso() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const ChainMap& c) { return cxd::is_iso(c); });
}

nlohmann::json SheafMap::to_json() const {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& c : parts_) v.push_back(c.to_json());
  return {{"p", p_}, {"stalks", v}};
}

SheafMap SheafMap::from_json(const nlohmann::json& j) {
  std::vector<ChainMap> v;
  for (const auto& c : j.at("stalks")) v.push_back(ChainMap::from_json(c));
  return SheafMap(j.at("p").get<int>(), std::move(v));
}

bool operator==(const SheafMap& f, const SheafMap& g) {
  if (f.size() != g.size()) return false;
  for (int x = 0; x < f.size(); ++x)
    if (!(f[x] == g[x])) return false;
  return true;
}

SheafMap compose(const SheafMap& g, const SheafMap& f) {
  if (f.size() != g.size()) throw std::invalid_argument("incomposable: bases differ");
  std::vector<ChainMap> v;
  for (int x = 0; x < f.size(); ++x) v.push_back(compose(g[x], f[x]));
  return SheafMap(f.p(), std::move(v));
}

SheafMap inverse(const SheafMap& f, const std::string& what) {
  std::vector<ChainMap> v;
  for (int x = 0; x < f.size(); ++x) {
    if (!is_iso(f[x])) throw AssumptionViolated(what);
    v.push_back(inverse(f[x]));
  }
  return SheafMap(f.p(), std::move(v));
}

Maps compose(const Maps& g, const Maps& f) {
  if (g.size() != f.size()) throw std::invalid_argument("incomposable: arity");
  Maps r;
  for (std::size_t i = 0; i < f.size(); ++i) r.push_back(compose(g[i], f[i]));
  return r;
}

Maps identity_of(const Objs& a) {
  Maps r;
  for (const auto& o : a) r.push_back(identity_of(o));
  return r;
}

// -------------------------------------------------------------- CommSquare

bool is_cartesian(const FiniteMap& f, const FiniteMap& g, const FiniteMap& fbar, const FiniteMap& gbar) {
  std::map<std::pair<int, int>, int> seen;
  for (int v = 0; v < fbar.nsrc(); ++v)
    if (seen[{fbar(v), gbar(v)}]++) return false;
  for (int x = 0; x < g.nsrc(); ++x)
    for (int y = 0; y < f.nsrc(); ++y)
      if (g(x) == f(y) && !seen.count({x, y})) return false;
  return true;
}

CommSquare CommSquare::make(FiniteMap f, FiniteMap g, FiniteMap fbar, FiniteMap gbar) {
  if (fbar.nsrc() != gbar.nsrc() || fbar.ntgt() != g.nsrc() || gbar.ntgt() != f.nsrc() || f.ntgt() != g.ntgt())
    throw std::invalid_argument("square: shapes do not match");
  for (int v = 0; v < fbar.nsrc(); ++v)
    if (f(gbar(v)) != g(fbar(v))) throw std::invalid_argument("square does not commute");
  bool c = is_cartesian(f, g, fbar, gbar);
  return {std::move(f), std::move(g), std::move(fbar), std::move(gbar), c};
}

CommSquare CommSquare::fiber_product(const FiniteMap& f, const FiniteMap& g) {
  std::vector<int> fb, gb;
  std::vector<std::string> labels;
  for (int x = 0; x < g.nsrc(); ++x)
    for (int y = 0; y < f.nsrc(); ++y)
      if (g(x) == f(y)) {
        fb.push_back(x);
        gb.push_back(y);
        labels.push_back("(" + g.source[x] + "," + f.source[y] + ")");
      }
  int nv = int(fb.size());
  FiniteMap fbar = FiniteMap::make(nv, g.nsrc(), fb), gbar = FiniteMap::make(nv, f.nsrc(), gb);
  fbar.source = gbar.source = labels;
  fbar.target = g.source;
  gbar.target = f.source;
  return make(f, g, fbar, gbar);
}

nlohmann::json CommSquare::to_json() const {
  return {{"f", f.to_json()}, {"g", g.to_json()}, {"fbar", fbar.to_json()}, {"gbar", gbar.to_json()}, {"cartesian", cartesian}};
}

CommSquare CommSquare::from_json(const nlohmann::json& j) {
  return make(FiniteMap::from_json(j.at("f")), FiniteMap::from_json(j.at("g")), FiniteMap::from_json(j.at("fbar")),
              FiniteMap::from_json(j.at("gbar")));
}

// ----------------------------------------------------------------- Sheaves

Sheaves::Sheaves(Monoidal m) : m_(std::move(m)) {}

SheafMap Sheaves::lift(int n, const std::function<ChainMap(int)>& at) const {
  std::vector<ChainMap> v;
  for (int x = 0; x < n; ++x) v.push_back(at(x));
  return SheafMap(p(), std::move(v));
}

SheafComplex Sheaves::lift_obj(int n, const std::function<Complex(int)>& at) const {
  SheafComplex s;
  s.p = p();
  for (int x = 0; x < n; ++x) s.stalks.push_back(at(x));
  return s;
}

SheafComplex Sheaves::unit(int n) const {
  return lift_obj(n, [&](int) { return m_.unit(); });
}

SheafComplex Sheaves::zero(int n) const {
  return lift_obj(n, [&](int) { return Complex::zero(p()); });
}

SheafComplex Sheaves::tensor(const SheafComplex& a, const SheafComplex& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("base mismatch");
  return lift_obj(a.size(), [&](int x) { return m_.tensor(a[x], b[x]); });
}

SheafComplex Sheaves::hom(const SheafComplex& a, const SheafComplex& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("base mismatch");
  return lift_obj(a.size(), [&](int x) { return m_.hom(a[x], b[x]); });
}

SheafComplex Sheaves::T(const SheafComplex& a) const {
  return lift_obj(a.size(), [&](int x) { return m_.T(a[x]); });
}

SheafMap Sheaves::tensor(const SheafMap& f, const SheafMap& g) const {
  if (f.size() != g.size()) throw std::invalid_argument("base mismatch");
  return lift(f.size(), [&](int x) { return m_.tensor(f[x], g[x]); });
}

SheafMap Sheaves::hom(const SheafMap& f, const SheafMap& g) const {
  if (f.size() != g.size()) throw std::invalid_argument("base mismatch");
  return lift(f.size(), [&](int x) { return m_.hom(f[x], g[x]); });
}

SheafMap Sheaves::structural(const std::string& name, const std::vector<SheafComplex>& objs) const {
  if (objs.empty()) throw std::invalid_argument("structural map needs objects");
  int n = objs[0].size();
  for (const auto& o : objs)
    if (o.size() != n) throw std::invalid_argument("base mismatch");
  return lift(n, [&](int x) {
    std::vector<Complex> at;
    for (const auto& o : objs) at.push_back(o[x]);
    return m_.structural(name, at);
  });
}

SheafMap Sheaves::assoc(const SheafComplex& a, const SheafComplex& b, const SheafComplex& c) const {
  return structural("assoc", {a, b, c});
}
SheafMap Sheaves::assoc_inv(const SheafComplex& a, const SheafComplex& b, const SheafComplex& c) const {
  return structural("assoc_inv", {a, b, c});
}
SheafMap Sheaves::lunit(const SheafComplex& a) const { return structural("lunit", {a}); }
SheafMap Sheaves::sym(const SheafComplex& a, const SheafComplex& b) const { return structural("sym", {a, b}); }
SheafMap Sheaves::ev_l(const SheafComplex& a, const SheafComplex& k) const { return structural("ev_l", {a, k}); }
SheafMap Sheaves::coev_l(const SheafComplex& a, const SheafComplex& k) const { return structural("coev_l", {a, k}); }
SheafMap Sheaves::bid(const SheafComplex& a, const SheafComplex& k) const { return structural("bid", {a, k}); }
SheafMap Sheaves::exch(const SheafComplex& p_, const SheafComplex& q_, const SheafComplex& a, const SheafComplex& b) const {
  return structural("exch", {p_, q_, a, b});
}
SheafMap Sheaves::dd(const SheafComplex& a, const SheafComplex& b, const SheafComplex& k, const SheafComplex& m) const {
  return structural("dd", {a, b, k, m});
}

SheafComplex Sheaves::pullback(const FiniteMap& f, const SheafComplex& b) const {
  check_base(f, b.size(), false);
  return lift_obj(f.nsrc(), [&](int x) { return b[f(x)]; });
}

SheafMap Sheaves::pullback(const FiniteMap& f, const SheafMap& phi) const {
  check_base(f, phi.size(), false);
  return lift(f.nsrc(), [&](int x) { return phi[f(x)]; });
}

SheafComplex Sheaves::pushforward(const FiniteMap& f, const SheafComplex& a) const {
  check_base(f, a.size(), true);
  return lift_obj(f.ntgt(), [&](int y) {
    std::vector<const Complex*> parts;
    for (int x : f.fiber(y)) parts.push_back(&a[x]);
    return direct_sum(parts, p());
  });
}

SheafMap Sheaves::pushforward(const FiniteMap& f, const SheafMap& phi) const {
  check_base(f, phi.size(), true);
  return lift(f.ntgt(), [&](int y) {
    std::vector<const Complex*> src, tgt;
    auto fib = f.fiber(y);
    for (int x : fib) {
      src.push_back(&phi[x].source());
      tgt.push_back(&phi[x].target());
    }
    int deg = phi.size() ? phi[0].degree() : 0;
    ChainMap r(share(direct_sum(src, p())), share(direct_sum(tgt, p())), deg);
    for (int n = r.source().min_degree; n <= r.source().max_degree(); ++n) {
      std::vector<Matrix> blocks;
      for (int x : fib) blocks.push_back(phi[x].comp(n));
      r.set_comp(n, block_direct_sum(blocks, p()));
    }
    return r;
  });
}

SheafMap Sheaves::eta(const FiniteMap& f, const SheafComplex& b) const {
  check_base(f, b.size(), false);
  SheafComplex tgt = pushforward(f, pullback(f, b));
  return lift(f.ntgt(), [&](int y) {
    auto fib = f.fiber(y);
    std::vector<const Complex*> parts(fib.size(), &b[y]);
    ChainMap r(share(b[y]), share(tgt[y]));
    for (int n = b[y].min_degree; n <= b[y].max_degree(); ++n) {
      Matrix m(p(), tgt[y].dim(n), b[y].dim(n));
      for (std::size_t j = 0; j < fib.size(); ++j) m = m + inclusion(p(), dims_at(parts, n), int(j));
      r.set_comp(n, m);
    }
    return r;
  });
}

SheafMap Sheaves::epsilon(const FiniteMap& f, const SheafComplex& a) const {
  check_base(f, a.size(), true);
  SheafComplex fa = pushforward(f, a);
  return lift(f.nsrc(), [&](int x) {
    auto fib = f.fiber(f(x));
    std::vector<const Complex*> parts;
    for (int u : fib) parts.push_back(&a[u]);
    int j = int(std::find(fib.begin(), fib.end(), x) - fib.begin());
    const Complex& s = fa[f(x)];
    ChainMap r(share(s), share(a[x]));
    for (int n = s.min_degree; n <= s.max_degree(); ++n) r.set_comp(n, inclusion(p(), dims_at(parts, n), j).transpose());
    return r;
  });
}

SheafMap Sheaves::eta_shriek(const FiniteMap& f, const SheafComplex& a) const {
  check_base(f, a.size(), true);
  SheafComplex fa = pushforward(f, a);
  return lift(f.nsrc(), [&](int x) {
    auto fib = f.fiber(f(x));
    std::vector<const Complex*> parts;
    for (int u : fib) parts.push_back(&a[u]);
    int j = int(std::find(fib.begin(), fib.end(), x) - fib.begin());
    ChainMap r(share(a[x]), share(fa[f(x)]));
    for (int n = a[x].min_degree; n <= a[x].max_degree(); ++n) r.set_comp(n, inclusion(p(), dims_at(parts, n), j));
    return r;
  });
}

SheafMap Sheaves::epsilon_shriek(const FiniteMap& f, const SheafComplex& b) const {
  check_base(f, b.size(), false);
  SheafComplex src = pushforward(f, shriek(f, b));
  return lift(f.ntgt(), [&](int y) {
    auto fib = f.fiber(y);
    std::vector<const Complex*> parts(fib.size(), &b[y]);
    ChainMap r(share(src[y]), share(b[y]));
    for (int n = src[y].min_degree; n <= src[y].max_degree(); ++n) {
      Matrix m(p(), b[y].dim(n), src[y].dim(n));
      for (std::size_t j = 0; j < fib.size(); ++j) m = m + inclusion(p(), dims_at(parts, n), int(j)).transpose();
      r.set_comp(n, m);
    }
    return r;
  });
}

namespace {

template <class F, class G>
SFunctor elementwise(std::string name, F obj, G map) {
  return {std::move(name),
          [obj](const Objs& xs) {
            Objs r;
            for (const auto& x : xs) r.push_back(obj(x));
            return r;
          },
          [map](const Maps& fs) {
            Maps r;
            for (const auto& f : fs) r.push_back(map(f));
            return r;
          }};
}

template <class F>
SNat elementwise_nat(F at) {
  return [at](const Objs& xs) {
    Maps r;
    for (const auto& x : xs) r.push_back(at(x));
    return r;
  };
}

}  // namespace

SFunctor Sheaves::pullback_functor(const FiniteMap& f) const {
  return elementwise(
      "f*", [this, f](const SheafComplex& b) { return pullback(f, b); },
      [this, f](const SheafMap& m) { return pullback(f, m); });
}

SFunctor Sheaves::pushforward_functor(const FiniteMap& f) const {
  return elementwise(
      "f_*", [this, f](const SheafComplex& a) { return pushforward(f, a); },
      [this, f](const SheafMap& m) { return pushforward(f, m); });
}

SFunctor Sheaves::shriek_functor(const FiniteMap& f) const {
  SFunctor s = pullback_functor(f);
  s.name = "f^!";
  return s;
}

SAdjunction Sheaves::pull_push(const FiniteMap& f) const {
  return {pullback_functor(f), pushforward_functor(f),
          elementwise_nat([this, f](const SheafComplex& b) { return eta(f, b); }),
          elementwise_nat([this, f](const SheafComplex& a) { return epsilon(f, a); })};
}

SAdjunction Sheaves::push_shriek(const FiniteMap& f) const {
  return {pushforward_functor(f), shriek_functor(f),
          elementwise_nat([this, f](const SheafComplex& a) { return eta_shriek(f, a); }),
          elementwise_nat([this, f](const SheafComplex& b) { return epsilon_shriek(f, b); })};
}

SAdjunction Sheaves::tensor_hom(const SheafComplex& a) const {
  SFunctor left = elementwise(
      "-(x)A", [this, a](const SheafComplex& x) { return tensor(x, a); },
      [this, a](const SheafMap& m) { return tensor(m, identity_of(a)); });
  SFunctor right = elementwise(
      "[A,-]", [this, a](const SheafComplex& x) { return hom(a, x); },
      [this, a](const SheafMap& m) { return hom(a, m); });
  return {left, right, elementwise_nat([this, a](const SheafComplex& x) { return coev_l(a, x); }),
          elementwise_nat([this, a](const SheafComplex& y) { return ev_l(a, y); })};
}

// -------------------------------------------------------------- generators

FiniteMap random_finite_map(Rng& rng, int max_set, int nsrc, int ntgt) {
  if (nsrc < 0) nsrc = int(rng() % max_set) + 1;
  if (ntgt < 0) ntgt = int(rng() % max_set) + 1;
  std::vector<int> a;
  for (int x = 0; x < nsrc; ++x) a.push_back(int(rng() % ntgt));
  return FiniteMap::make(nsrc, ntgt, a);
}

SheafComplex random_sheaf(Rng& rng, int n, const ComplexBounds& bounds, int p) {
  SheafComplex s;
  s.p = p;
  for (int x = 0; x < n; ++x) s.stalks.push_back(random_complex(rng, bounds, p));
  return s;
}

CommSquare random_cartesian_square(Rng& rng, int max_set) {
  int nz = int(rng() % max_set) + 1;
  FiniteMap g = random_finite_map(rng, max_set, -1, nz);
  FiniteMap f = random_finite_map(rng, max_set, -1, nz);
  return CommSquare::fiber_product(f, g);
}

CommSquare empty_corner_square() {
  FiniteMap id = FiniteMap::to_point(1);
  FiniteMap e1 = FiniteMap::make(0, 1, {}), e2 = FiniteMap::make(0, 1, {});
  return CommSquare::make(id, id, e1, e2);
}

}  // namespace cxd
