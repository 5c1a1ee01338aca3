#include <algorithm>
#include <set>

#include "cxd/harness.hpp"
#include "cxd/site_diagrams.hpp"
#include "cxd/witt.hpp"

namespace cxd {

using nlohmann::json;

nlohmann::json CheckParams::to_json() const {
  return {{"p", p}, {"max_dim", max_dim}, {"max_len", max_len}, {"max_set", max_set}, {"trials", trials}};
}

CheckParams CheckParams::from_json(const nlohmann::json& j) {
  CheckParams c;
  c.p = j.value("p", c.p);
  c.max_dim = j.value("max_dim", c.max_dim);
  c.max_len = j.value("max_len", c.max_len);
  c.max_set = j.value("max_set", c.max_set);
  c.trials = j.value("trials", c.trials);
  return c;
}

CheckContext::CheckContext(const SignAssignment& signs, int p)
    : signs_(signs), p_(p), s_(Monoidal::unchecked(signs, p)) {}

namespace {

// ---- instance serialization ----

json objs_json(const Objs& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_json());
  return a;
}

Objs objs_from(const json& j) {
  Objs v;
  for (const auto& x : j) v.push_back(SheafComplex::from_json(x));
  return v;
}

json maps_json(const std::vector<FiniteMap>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_json());
  return a;
}

std::vector<FiniteMap> maps_from(const json& j) {
  std::vector<FiniteMap> v;
  for (const auto& x : j) v.push_back(FiniteMap::from_json(x));
  return v;
}

json context_json(const SiteContext& c) {
  json j{{"maps", maps_json(c.maps)}, {"objs", objs_json(c.objs)}};
  if (c.square) j["square"] = c.square->to_json();
  return j;
}

SiteContext context_from(const json& j) {
  SiteContext c;
  c.maps = maps_from(j.at("maps"));
  c.objs = objs_from(j.at("objs"));
  if (j.contains("square")) c.square = CommSquare::from_json(j["square"]);
  return c;
}

json complexes_json(const std::vector<Complex>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_json());
  return a;
}

std::vector<Complex> complexes_from(const json& j) {
  std::vector<Complex> v;
  for (const auto& x : j) v.push_back(Complex::from_json(x));
  return v;
}

json grams_json(const std::vector<Matrix>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

std::vector<Matrix> grams_from(const json& j, int p) {
  std::vector<Matrix> v;
  for (const auto& x : j) v.push_back(matrix_from_json(x, p));
  return v;
}

// ---- outcomes ----

TrialOutcome pass() { return {}; }
TrialOutcome fail(std::string why) { return {TrialStatus::Fail, std::move(why)}; }
TrialOutcome verdict(bool ok, const std::string& why) { return ok ? pass() : fail(why); }

// Assumption failures skip the trial; any other exception (a structure map that is no longer a
// chain map, say) fails it.
template <class F>
std::function<TrialOutcome(const CheckContext&, const json&)> guarded(F f) {
  return [f](const CheckContext& c, const json& inst) -> TrialOutcome {
    try {
      return f(c, inst);
    } catch (const AssumptionViolated& e) {
      return {TrialStatus::Skipped, e.what()};
    } catch (const std::exception& e) {
      return fail(std::string("evaluation threw: ") + e.what());
    }
  };
}

ComplexBounds complex_bounds(const CheckParams& p, int cap_dim = 99, int cap_len = 99) {
  ComplexBounds b;
  b.max_dim = std::min(p.max_dim, cap_dim);
  b.max_len = std::min(p.max_len, cap_len);
  return b;
}

bool nonzero(const SheafComplex& a) {
  for (const auto& c : a.stalks)
    if (c.total_dim() > 0) return true;
  return false;
}

// Redraws a few times so that most instances carry something.
SheafComplex sheaf(Rng& rng, int n, const ComplexBounds& b, int p) {
  SheafComplex a = random_sheaf(rng, n, b, p);
  for (int i = 0; i < 4 && n > 0 && !nonzero(a); ++i) a = random_sheaf(rng, n, b, p);
  return a;
}

int set_size(Rng& rng, const CheckParams& p, int cap = 99) { return 1 + int(rng() % std::max(1, std::min(p.max_set, cap))); }

std::string legs(const std::string& what) { return what + ": the two composites differ"; }

// ---- monoidal ----

bool heavy_monoidal(const std::string& id) {
  return id == "dd_literal" || id == "pentagon" || id == "P.shift" || (id[0] == 'D' && std::isdigit(static_cast<unsigned char>(id[1])));
}

std::string registry_id(const std::string& catalogue_id) {
  return catalogue_id[0] == 'D' && std::isdigit(static_cast<unsigned char>(catalogue_id[1])) ? catalogue_id : "MON." + catalogue_id;
}

DiagramSpec monoidal_spec(const DiagramInfo& info) {
  std::string cid = info.id;
  DiagramSpec d;
  d.id = registry_id(cid);
  d.group = "monoidal";
  d.anchor = info.statement;
  d.generate = [cid, arity = info.arity](Rng& rng, const CheckParams& p) {
    std::vector<Complex> o;
    if (cid == "bid_scalar") {
      for (int i = 0; i < 2; ++i) o.push_back(Complex::concentrated(p.p, int(rng() % 7) - 3, 1));
    } else {
      ComplexBounds b = heavy_monoidal(cid) ? complex_bounds(p, 2, 2) : complex_bounds(p);
      for (int i = 0; i < arity; ++i) o.push_back(random_complex(rng, b, p.p));
    }
    return json{{"objs", complexes_json(o)}, {"aux", rng()}};
  };
  d.evaluate = guarded([cid](const CheckContext& c, const json& inst) {
    Rng aux(inst.at("aux").get<std::uint64_t>());
    Sides s = diagram(c.monoidal(), cid, complexes_from(inst.at("objs")), aux);
    return verdict(s.holds(), legs(cid));
  });
  return d;
}

DiagramSpec closure_spec() {
  DiagramSpec d;
  d.id = "VALID.tensor_hom";
  d.group = "monoidal";
  d.anchor = "tensor and internal hom of valid complexes are valid complexes";
  d.generate = [](Rng& rng, const CheckParams& p) {
    ComplexBounds b = complex_bounds(p);
    return json{{"objs", complexes_json({random_complex(rng, b, p.p), random_complex(rng, b, p.p)})}};
  };
  d.evaluate = guarded([](const CheckContext& c, const json& inst) {
    auto o = complexes_from(inst.at("objs"));
    if (!validate(c.monoidal().tensor(o[0], o[1]))) return fail("tensor fails d o d = 0");
    if (!validate(c.monoidal().hom(o[0], o[1]))) return fail("hom fails d o d = 0");
    return pass();
  });
  return d;
}

// ---- sign table ----

DiagramSpec table_spec(const Equation& eq) {
  DiagramSpec d;
  d.id = eq.id;
  d.group = "signs";
  d.anchor = eq.reason;
  d.exhaustive = true;
  d.generate = [](Rng&, const CheckParams&) { return json{{"lo", -4}, {"hi", 3}}; };
  int row = eq.row;
  d.evaluate = [row](const CheckContext& c, const json& inst) {
    const Equation& e = equation_table().at(std::size_t(row - 1));
    RowReport r = verify_equation(e, c.signs(), inst.at("lo").get<int>(), inst.at("hi").get<int>());
    return verdict(r.pass, "counterexample " + r.to_json(e.vars).dump());
  };
  return d;
}

// ---- sites ----

DiagramSpec site_spec(const SiteDiagramInfo& info) {
  std::string id = info.id;
  DiagramSpec d;
  d.id = id;
  d.group = "sites";
  d.anchor = info.statement;
  d.generate = [id](Rng& rng, const CheckParams& p) {
    const SiteDiagramInfo& i = *find_site_diagram(id);
    SiteBounds b{p.max_set, p.max_len, p.max_dim};
    return context_json(random_site_context(rng, i, capped(i, b), p.p));
  };
  d.evaluate = guarded([id](const CheckContext& c, const json& inst) {
    return verdict(site_diagram(c.sheaves(), id, context_from(inst)).holds(), legs(id));
  });
  return d;
}

// ---- duality ----

// Sizes for the duality checks; the M cases compose several functors and stay small.
ComplexBounds duality_bounds(const CheckParams& p) { return complex_bounds(p, 2, 2); }

using DualEval = std::function<TrialOutcome(const CheckContext&, const json&)>;

DiagramSpec duality_spec(std::string id, std::string anchor, std::function<json(Rng&, const CheckParams&)> gen,
                         DualEval ev, std::string group = "duality") {
  DiagramSpec d;
  d.id = std::move(id);
  d.group = std::move(group);
  d.anchor = std::move(anchor);
  d.generate = std::move(gen);
  d.evaluate = guarded(std::move(ev));
  return d;
}

json k_and_a(Rng& rng, const CheckParams& p, bool dualizing) {
  int n = set_size(rng, p);
  SheafComplex k = dualizing ? random_dualizing(rng, n, p.p) : sheaf(rng, n, duality_bounds(p), p.p);
  return {{"K", objs_json({k})}, {"A", objs_json({sheaf(rng, n, duality_bounds(p), p.p)})}};
}

SheafComplex first(const json& j) { return SheafComplex::from_json(j.at(0)); }

std::vector<DiagramSpec> duality_specs() {
  std::vector<DiagramSpec> v;
  auto any_k = [](Rng& rng, const CheckParams& p) { return k_and_a(rng, p, false); };
  auto dual_k = [](Rng& rng, const CheckParams& p) { return k_and_a(rng, p, true); };

  v.push_back(duality_spec("EQ1", "D(bid_A) o bid_{DA} = id", any_k, [](const CheckContext& c, const json& j) {
    Duality d(c.sheaves(), objs_from(j["K"]));
    return verdict(eq1_sides(d, objs_from(j["A"])).holds(), legs("EQ1"));
  }));
  v.push_back(duality_spec("DUAL.triangle_l", "counit-side triangle of (D, D^o, bid, bid^o)", any_k,
                           [](const CheckContext& c, const json& j) {
                             Duality d(c.sheaves(), objs_from(j["K"]));
                             return verdict(duality_triangle_left(d, objs_from(j["A"])).holds(), legs("triangle"));
                           }));
  v.push_back(duality_spec("DUAL.triangle_r", "unit-side triangle of (D, D^o, bid, bid^o)", any_k,
                           [](const CheckContext& c, const json& j) {
                             Duality d(c.sheaves(), objs_from(j["K"]));
                             return verdict(duality_triangle_right(d, objs_from(j["A"])).holds(), legs("triangle"));
                           }));
  v.push_back(duality_spec("P.identity", "P for the identity functor", dual_k, [](const CheckContext& c, const json& j) {
    Duality d(c.sheaves(), objs_from(j["K"]));
    return verdict(check_dp(identity_dp(d), objs_from(j["A"])), legs("P"));
  }));

  v.push_back(duality_spec(
      "P.pullback", "P for <f*, fh>",
      [](Rng& rng, const CheckParams& p) {
        FiniteMap f = random_finite_map(rng, p.max_set);
        return json{{"f", f.to_json()},
                    {"K", objs_json({random_dualizing(rng, f.ntgt(), p.p)})},
                    {"A", objs_json({sheaf(rng, f.ntgt(), duality_bounds(p), p.p)})}};
      },
      [](const CheckContext& c, const json& j) {
        DPFunctor F = pullback_dp(c.sheaves(), FiniteMap::from_json(j["f"]), first(j["K"]));
        return verdict(check_dp(F, objs_from(j["A"])), legs("P"));
      }));
  v.push_back(duality_spec(
      "P.pushforward", "P for <f_*, rr>",
      [](Rng& rng, const CheckParams& p) {
        FiniteMap f = random_finite_map(rng, p.max_set);
        return json{{"f", f.to_json()},
                    {"K", objs_json({random_dualizing(rng, f.ntgt(), p.p)})},
                    {"A", objs_json({sheaf(rng, f.nsrc(), duality_bounds(p), p.p)})}};
      },
      [](const CheckContext& c, const json& j) {
        DPFunctor F = pushforward_dp(c.sheaves(), FiniteMap::from_json(j["f"]), first(j["K"]));
        return verdict(check_dp(F, objs_from(j["A"])), legs("P"));
      }));
  v.push_back(duality_spec(
      "P.product", "P for <(x), dd>",
      [](Rng& rng, const CheckParams& p) {
        int n = set_size(rng, p);
        return json{{"K", objs_json({random_dualizing(rng, n, p.p), random_dualizing(rng, n, p.p)})},
                    {"A", objs_json({sheaf(rng, n, duality_bounds(p), p.p), sheaf(rng, n, duality_bounds(p), p.p)})}};
      },
      [](const CheckContext& c, const json& j) {
        Objs k = objs_from(j["K"]);
        return verdict(check_dp(product_dp(c.sheaves(), k[0], k[1]), objs_from(j["A"])), legs("P"));
      }));

  v.push_back(duality_spec(
      "I.compose", "I_kappa o I_iota = I_{kappa o iota}",
      [](Rng& rng, const CheckParams& p) {
        int n = set_size(rng, p);
        SheafComplex k = random_dualizing(rng, n, p.p, 0, 0);
        auto scalar = [&] {
          std::vector<ChainMap> parts;
          for (const auto& st : k.stalks) parts.push_back(random_chain_map(rng, share(st), share(st)));
          return SheafMap(p.p, parts);
        };
        SheafMap iota = scalar(), kappa = scalar();
        return json{{"K", objs_json({k})}, {"iota", iota.to_json()}, {"kappa", kappa.to_json()},
                    {"A", objs_json({sheaf(rng, n, duality_bounds(p), p.p)})}};
      },
      [](const CheckContext& c, const json& j) {
        Duality d(c.sheaves(), objs_from(j["K"]));
        SheafMap iota = SheafMap::from_json(j["iota"]), kappa = SheafMap::from_json(j["kappa"]);
        DPFunctor a = I_iota(d, {iota});
        DPFunctor b = I_iota(a.tgt, {kappa});
        Objs x = objs_from(j["A"]);
        return verdict(compose_dp(b, a).phi(x) == I_iota(d, {compose(kappa, iota)}).phi(x), legs("I.compose"));
      }));

  // M diagrams. Instances carry the maps (or square), the duality objects and the arguments.
  struct MCase {
    const char* id;
    const char* anchor;
  };
  for (MCase m : {MCase{"M.ea", "ea : I_ea f* g* -> (gf)* preserves dualities"},
                  MCase{"M.eb", "eb : (gf)_* I_ec -> g_* f_* preserves dualities"},
                  MCase{"M.eps", "eps : f* g_* -> gbar_* I_gam fbar* preserves dualities"},
                  MCase{"M.fp", "fp : I_fp (x) (f* x f*) -> f* (x) preserves dualities"},
                  MCase{"M.q", "q : (x) (f_* x Id) -> f_* I_sp (x) (Id x f*) preserves dualities"}}) {
    std::string id = m.id;
    auto build = [id](const Sheaves& s, const json& j) {
      if (id == "M.eps") return eps_case(s, CommSquare::from_json(j["square"]), first(j["K"]));
      auto maps = maps_from(j["maps"]);
      Objs k = objs_from(j["K"]);
      if (id == "M.ea") return ea_case(s, maps[1], maps[0], k[0]);
      if (id == "M.eb") return eb_case(s, maps[1], maps[0], k[0]);
      if (id == "M.fp") return fp_case(s, maps[0], k[0], k[1]);
      return q_case(s, maps[0], k[0], k[1]);
    };
    auto gen = [id](Rng& rng, const CheckParams& p) {
      int cap = std::min(p.max_set, 2);
      json j;
      if (id == "M.eps") {
        CommSquare sq = random_cartesian_square(rng, cap);
        j["square"] = sq.to_json();
        j["K"] = objs_json({random_dualizing(rng, sq.f.ntgt(), p.p)});
      } else {
        FiniteMap f = random_finite_map(rng, cap);
        std::vector<FiniteMap> maps{f};
        Objs k;
        if (id == "M.ea" || id == "M.eb") {
          FiniteMap g = random_finite_map(rng, cap, f.ntgt());
          maps.push_back(g);
          k.push_back(random_dualizing(rng, g.ntgt(), p.p));
        } else {
          k = {random_dualizing(rng, f.ntgt(), p.p), random_dualizing(rng, f.ntgt(), p.p)};
        }
        j["maps"] = maps_json(maps);
        j["K"] = objs_json(k);
      }
      std::vector<int> bases;
      if (id == "M.eps") bases = {CommSquare::from_json(j["square"]).g.nsrc()};
      else {
        auto maps = maps_from(j["maps"]);
        if (id == "M.ea") bases = {maps[1].ntgt()};
        else if (id == "M.eb") bases = {maps[0].nsrc()};
        else if (id == "M.fp") bases = {maps[0].ntgt(), maps[0].ntgt()};
        else bases = {maps[0].nsrc(), maps[0].ntgt()};
      }
      Objs a;
      for (int n : bases) a.push_back(sheaf(rng, n, duality_bounds(p), p.p));
      j["A"] = objs_json(a);
      return j;
    };
    v.push_back(duality_spec(id, m.anchor, gen, [id, build](const CheckContext& c, const json& j) {
      DPMorphismCase mc = build(c.sheaves(), j);
      Objs a = objs_from(j["A"]);
      if (!check_dp(mc.F, a)) return fail("P fails for the source functor");
      if (!check_dp(mc.G, a)) return fail("P fails for the target functor");
      return verdict(check_dp_morphism(mc.rho, mc.F, mc.G, a), legs(id));
    }));
  }
  return v;
}

// ---- invertibility ----

std::vector<DiagramSpec> invertibility_specs() {
  std::vector<DiagramSpec> v;
  v.push_back(duality_spec(
      "INV.bid", "bid_A is invertible for dualizing K",
      [](Rng& rng, const CheckParams& p) { return k_and_a(rng, p, true); },
      [](const CheckContext& c, const json& j) {
        Duality d(c.sheaves(), objs_from(j["K"]));
        return verdict(is_strong_at(d, objs_from(j["A"])), "bid is not invertible");
      },
      "invertibility"));
  v.push_back(duality_spec(
      "INV.q", "q is invertible",
      [](Rng& rng, const CheckParams& p) {
        FiniteMap f = random_finite_map(rng, p.max_set);
        return json{{"f", f.to_json()},
                    {"A", objs_json({sheaf(rng, f.nsrc(), duality_bounds(p), p.p), sheaf(rng, f.ntgt(), duality_bounds(p), p.p)})}};
      },
      [](const CheckContext& c, const json& j) {
        Objs a = objs_from(j["A"]);
        return verdict(c.sheaves().q(FiniteMap::from_json(j["f"]), a[0], a[1]).is_iso(), "q is not invertible");
      },
      "invertibility"));
  v.push_back(duality_spec(
      "INV.eps_cartesian", "eps is invertible on cartesian squares",
      [](Rng& rng, const CheckParams& p) {
        CommSquare sq = random_cartesian_square(rng, p.max_set);
        return json{{"square", sq.to_json()}, {"A", objs_json({sheaf(rng, sq.g.nsrc(), duality_bounds(p), p.p)})}};
      },
      [](const CheckContext& c, const json& j) {
        return verdict(c.sheaves().eps(CommSquare::from_json(j["square"]), first(j["A"])).is_iso(), "eps is not invertible");
      },
      "invertibility"));
  v.push_back(duality_spec(
      "INV.eps_counterexample", "eps is not invertible on the square with empty corner",
      [](Rng& rng, const CheckParams& p) {
        CommSquare sq = empty_corner_square();
        SheafComplex a = sheaf(rng, sq.g.nsrc(), duality_bounds(p), p.p);
        while (!nonzero(a)) a = sheaf(rng, sq.g.nsrc(), duality_bounds(p), p.p);
        return json{{"square", sq.to_json()}, {"A", objs_json({a})}};
      },
      [](const CheckContext& c, const json& j) {
        return verdict(!c.sheaves().eps(CommSquare::from_json(j["square"]), first(j["A"])).is_iso(),
                       "eps is invertible on a non-cartesian square");
      },
      "invertibility"));
  return v;
}

// ---- Witt ----

std::vector<DiagramSpec> witt_specs() {
  std::vector<DiagramSpec> v;
  auto table = [](std::string id, int p, std::string anchor, std::function<std::string(const WittTable&)> check) {
    DiagramSpec d;
    d.id = std::move(id);
    d.group = "witt";
    d.anchor = std::move(anchor);
    d.exhaustive = true;
    d.generate = [p](Rng&, const CheckParams&) { return json{{"p", p}, {"maxdim", 4}}; };
    d.evaluate = [check](const CheckContext&, const json& j) {
      WittTable t = witt_classify(j.at("p").get<int>(), j.at("maxdim").get<int>());
      std::string why = check(t);
      return verdict(why.empty(), why);
    };
    return d;
  };
  v.push_back(table("W.F3", 3, "W(F_3) has four classes and <1> has order 4", [](const WittTable& t) -> std::string {
    if (t.classes.size() != 4) return "size " + std::to_string(t.classes.size());
    WittClass one = witt_reduce(Matrix::identity(3, 1));
    for (std::size_t i = 0; i < t.classes.size(); ++i)
      if (t.classes[i] == one && t.order[i] != 4) return "<1> has order " + std::to_string(t.order[i]);
    return "";
  }));
  v.push_back(table("W.F5", 5, "W(F_5) has four classes and exponent 2", [](const WittTable& t) -> std::string {
    if (t.classes.size() != 4) return "size " + std::to_string(t.classes.size());
    if (t.exponent() != 2) return "exponent " + std::to_string(t.exponent());
    return "";
  }));

  auto form = [](Rng& rng, const CheckParams& p) { return random_nondegenerate_form(rng, p.p, 1 + int(rng() % std::min(3, p.max_dim))); };
  v.push_back(duality_spec(
      "W.transfer", "transfer to a point is the orthogonal sum",
      [form](Rng& rng, const CheckParams& p) {
        int n = set_size(rng, p, 3);
        std::vector<Matrix> g;
        for (int i = 0; i < n; ++i) g.push_back(form(rng, p));
        return json{{"grams", grams_json(g)}};
      },
      [](const CheckContext& c, const json& j) {
        auto g = grams_from(j["grams"], c.p());
        WittClass a = transfer_witt(c.sheaves(), FiniteMap::to_point(int(g.size())), g), b = orthogonal_sum_witt(c.p(), g);
        return verdict(a == b, "transfer " + a.label() + " against sum " + b.label());
      },
      "witt"));
  v.push_back(duality_spec(
      "W.product", "the dd product of forms is the Kronecker product",
      [form](Rng& rng, const CheckParams& p) { return json{{"grams", grams_json({form(rng, p), form(rng, p)})}}; },
      [](const CheckContext& c, const json& j) {
        auto g = grams_from(j["grams"], c.p());
        WittClass a = product_witt(c.sheaves(), g[0], g[1]), b = witt_reduce(kronecker(g[0], g[1]));
        return verdict(a == b, "product " + a.label() + " against Kronecker " + b.label());
      },
      "witt"));
  v.push_back(duality_spec(
      "W.projection", "transfer(x . f*y) = transfer(x) . y for f to a point",
      [](Rng& rng, const CheckParams& p) {
        int n = set_size(rng, p, 2);
        std::vector<Matrix> x;
        for (int i = 0; i < n; ++i) x.push_back(random_nondegenerate_form(rng, p.p, 1 + int(rng() % 2)));
        return json{{"x", grams_json(x)}, {"y", to_json(random_nondegenerate_form(rng, p.p, 1 + int(rng() % 2)))}};
      },
      [](const CheckContext& c, const json& j) {
        auto x = grams_from(j["x"], c.p());
        auto [l, r] = projection_formula_sides(c.sheaves(), FiniteMap::to_point(int(x.size())), x, matrix_from_json(j["y"], c.p()));
        return verdict(l == r, "lhs " + l.label() + " against rhs " + r.label());
      },
      "witt"));
  return v;
}

std::vector<DiagramSpec> build_registry() {
  std::vector<DiagramSpec> v;
  for (const auto& e : equation_table()) v.push_back(table_spec(e));
  v.push_back(closure_spec());
  for (const auto& info : diagram_catalogue()) v.push_back(monoidal_spec(info));
  for (const auto& info : site_diagram_catalogue()) v.push_back(site_spec(info));
  for (auto& d : duality_specs()) v.push_back(std::move(d));
  for (auto& d : invertibility_specs()) v.push_back(std::move(d));
  for (auto& d : witt_specs()) v.push_back(std::move(d));
  return v;
}

}  // namespace

const std::vector<DiagramSpec>& registry() {
  static const std::vector<DiagramSpec> r = build_registry();
  return r;
}

const DiagramSpec* find_diagram(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return &d;
  return nullptr;
}

const std::vector<std::pair<std::string, std::string>>& coverage_map() {
  static const std::vector<std::pair<std::string, std::string>> m = [] {
    std::vector<std::pair<std::string, std::string>> v;
    auto add = [&](const std::string& group, std::initializer_list<const char*> ids) {
      for (const char* id : ids) v.emplace_back(id, group);
    };
    for (int i = 1; i <= 21; ++i) v.emplace_back("Table2.row" + std::to_string(i), "signs");
    add("signs", {"Table2.bid"});
    add("monoidal", {"VALID.tensor_hom", "D4", "D5", "D6", "D7", "D8", "D9", "D10", "D11", "MON.pentagon", "MON.hexagon",
                     "MON.unit_triangle", "MON.sym_involution", "MON.row14", "MON.row15", "MON.row16", "MON.row17",
                     "MON.row18", "MON.triangle_l", "MON.triangle_r", "MON.curry", "MON.uncurry", "MON.dd_literal",
                     "MON.bid_scalar", "MON.P.shift"});
    add("sites", {"Happ0", "H'app0", "D12", "Happ1", "H'app1", "Rapp1", "R'app1", "G1app1", "G2app1", "F1app1",
                  "F2app1", "F1app2", "F2app2", "Rapp2", "R'app2", "G1app2", "G2app2", "Happ4", "H'app4", "D18",
                  "D19", "D20", "D21", "compAdj1", "compAdj2", "COC.ec", "D22", "D23", "D24", "D25", "D26", "D27",
                  "Happ3", "H'app3", "D28", "D29", "D30", "D31", "D32", "COC.iprime", "X.fh_mate", "X.fg_mate",
                  "X.q_fg", "X.fg_q", "X.qh_ff", "X.qh_inverse", "X.rr_sh", "X.sp_alt", "X.q_inverse",
                  "X.eps_inverse", "ADJ.pull_push.l", "ADJ.pull_push.r", "ADJ.push_shriek.l", "ADJ.push_shriek.r"});
    add("duality", {"EQ1", "DUAL.triangle_l", "DUAL.triangle_r", "P.identity", "P.pullback", "P.pushforward",
                    "P.product", "I.compose", "M.ea", "M.eb", "M.eps", "M.fp", "M.q"});
    add("invertibility", {"INV.bid", "INV.q", "INV.eps_cartesian", "INV.eps_counterexample"});
    add("witt", {"W.F3", "W.F5", "W.transfer", "W.product", "W.projection"});
    return v;
  }();
  return m;
}

nlohmann::json AuditResult::to_json() const { return {{"ok", ok()}, {"missing", missing}, {"extra", extra}}; }

AuditResult audit_registry() {
  AuditResult r;
  std::set<std::string> reg, cov;
  for (const auto& d : registry()) reg.insert(d.id);
  for (const auto& [id, g] : coverage_map()) cov.insert(id);
  std::set_difference(cov.begin(), cov.end(), reg.begin(), reg.end(), std::back_inserter(r.missing));
  std::set_difference(reg.begin(), reg.end(), cov.begin(), cov.end(), std::back_inserter(r.extra));
  return r;
}

}  // namespace cxd
