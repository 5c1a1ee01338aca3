#include "cxd/site_diagrams.hpp"

#include <functional>
#include <map>

namespace cxd {

namespace {

SheafMap chain(std::initializer_list<SheafMap> right_to_left) {
  auto it = right_to_left.begin();
  SheafMap r = *it;
  for (++it; it != right_to_left.end(); ++it) r = compose(*it, r);
  return r;
}

using Builder = std::function<SheafSides(const Sheaves&, const SiteContext&)>;

struct Entry {
  SiteDiagramInfo info;
  Builder build;
};

const FiniteMap& M(const SiteContext& c, std::size_t i) {
  if (c.maps.size() <= i) throw std::invalid_argument("site diagram: missing map");
  return c.maps[i];
}

const CommSquare& Sq(const SiteContext& c) {
  if (!c.square) throw std::invalid_argument("site diagram: missing square");
  return *c.square;
}

std::vector<SheafComplex> objs(const SiteContext& c, std::size_t n) {
  if (c.objs.size() != n) throw std::invalid_argument("site diagram: wrong number of objects");
  return c.objs;
}

SheafMap id(const SheafComplex& a) { return identity_of(a); }

std::vector<Entry> build_entries() {
  using S = SiteShape;
  std::vector<Entry> e;
  auto add = [&](std::string id_, S shape, std::vector<int> bases, std::string stmt, int weight, Builder b) {
    e.push_back({{std::move(id_), shape, std::move(bases), std::move(stmt), weight}, std::move(b)});
  };

  // ---- fg, ff and the tensor-hom mates along f
  add("Happ0", S::Map, {1, 1}, "f_*fp^-1 o eta = fg o (eta (x) eta)", 0, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);
    const auto& f = M(c, 0);
    return SheafSides{compose(s.pushforward(f, s.fp_inv(f, o[0], o[1])), s.eta(f, s.tensor(o[0], o[1]))),
                      compose(s.fg(f, s.pullback(f, o[0]), s.pullback(f, o[1])), s.tensor(s.eta(f, o[0]), s.eta(f, o[1])))};
  });
  add("H'app0", S::Map, {0, 0}, "(eps (x) eps) o fp^-1 = eps o f*fg", 0, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);
    const auto& f = M(c, 0);
    SheafComplex fa = s.pushforward(f, o[0]), fb = s.pushforward(f, o[1]);
    return SheafSides{compose(s.tensor(s.epsilon(f, o[0]), s.epsilon(f, o[1])), s.fp_inv(f, fa, fb)),
                      compose(s.epsilon(f, s.tensor(o[0], o[1])), s.pullback(f, s.fg(f, o[0], o[1])))};
  });
  add("D12", S::Map, {0, 0}, "f_*sym o fg = fg o sym", 0, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);
    const auto& f = M(c, 0);
    return SheafSides{compose(s.pushforward(f, s.sym(o[0], o[1])), s.fg(f, o[0], o[1])),
                      compose(s.fg(f, o[1], o[0]), s.sym(s.pushforward(f, o[0]), s.pushforward(f, o[1])))};
  });
  add("Happ1", S::Map, {0, 0}, "ff o f_*coev = [f_*X, fg] o coev", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // A, X
    const auto& f = M(c, 0);
    SheafComplex fa = s.pushforward(f, o[0]), fx = s.pushforward(f, o[1]);
    return SheafSides{compose(s.ff(f, o[1], s.tensor(o[0], o[1])), s.pushforward(f, s.coev_l(o[1], o[0]))),
                      compose(s.hom(fx, s.fg(f, o[0], o[1])), s.coev_l(fx, fa))};
  });
  add("H'app1", S::Map, {0, 0}, "ev o (ff (x) id) = f_*ev o fg", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // X, A
    const auto& f = M(c, 0);
    SheafComplex fx = s.pushforward(f, o[0]), fa = s.pushforward(f, o[1]);
    return SheafSides{compose(s.ev_l(fx, fa), s.tensor(s.ff(f, o[0], o[1]), id(fx))),
                      compose(s.pushforward(f, s.ev_l(o[0], o[1])), s.fg(f, s.hom(o[0], o[1]), o[0]))};
  });

  // ---- q and qh
  add("Rapp1", S::Map, {0, 1}, "[X, q] o coev = qh^-1 o f_*coev", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // A on X, X on Y
    const auto& f = M(c, 0);
    SheafComplex fx = s.pullback(f, o[1]);
    return SheafSides{compose(s.hom(o[1], s.q(f, o[0], o[1])), s.coev_l(o[1], s.pushforward(f, o[0]))),
                      compose(s.qh_inv(f, o[1], s.tensor(o[0], fx)), s.pushforward(f, s.coev_l(fx, o[0])))};
  });
  add("R'app1", S::Map, {0, 1}, "ev o (qh^-1 (x) id) = f_*ev o q", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // A on X, X on Y
    const auto& f = M(c, 0);
    SheafComplex fx = s.pullback(f, o[1]);
    return SheafSides{compose(s.ev_l(o[1], s.pushforward(f, o[0])), s.tensor(s.qh_inv(f, o[1], o[0]), id(o[1]))),
                      compose(s.pushforward(f, s.ev_l(fx, o[0])), s.q(f, s.hom(fx, o[0]), o[1]))};
  });
  add("G1app1", S::Map, {1, 1}, "q o (eta (x) id) = f_*fp^-1 o eta", 0, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // B, X on Y
    const auto& f = M(c, 0);
    return SheafSides{compose(s.q(f, s.pullback(f, o[0]), o[1]), s.tensor(s.eta(f, o[0]), id(o[1]))),
                      compose(s.pushforward(f, s.fp_inv(f, o[0], o[1])), s.eta(f, s.tensor(o[0], o[1])))};
  });
  add("G2app1", S::Map, {0, 1}, "(eps (x) id) o fp^-1 = eps o f*q", 0, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // A on X, X on Y
    const auto& f = M(c, 0);
    SheafComplex fx = s.pullback(f, o[1]);
    return SheafSides{compose(s.tensor(s.epsilon(f, o[0]), id(fx)), s.fp_inv(f, s.pushforward(f, o[0]), o[1])),
                      compose(s.epsilon(f, s.tensor(o[0], fx)), s.pullback(f, s.q(f, o[0], o[1])))};
  });
  add("F1app1", S::Map, {1, 1}, "qh o [X, eta] = f_*fh o eta", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // X, B on Y
    const auto& f = M(c, 0);
    return SheafSides{compose(s.qh(f, o[0], s.pullback(f, o[1])), s.hom(o[0], s.eta(f, o[1]))),
                      compose(s.pushforward(f, s.fh(f, o[0], o[1])), s.eta(f, s.hom(o[0], o[1])))};
  });
  add("F2app1", S::Map, {1, 0}, "[f*X, eps] o fh = eps o f*qh", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // X on Y, A on X
    const auto& f = M(c, 0);
    return SheafSides{compose(s.hom(s.pullback(f, o[0]), s.epsilon(f, o[1])), s.fh(f, o[0], s.pushforward(f, o[1]))),
                      compose(s.epsilon(f, s.hom(s.pullback(f, o[0]), o[1])), s.pullback(f, s.qh(f, o[0], o[1])))};
  });

  // ---- sh' and sp
  add("F1app2", S::Map, {1, 0}, "sh' o [f*X, eta!] = f^!qh^-1 o eta!", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // X on Y, A on X
    const auto& f = M(c, 0);
    SheafComplex fx = s.pullback(f, o[0]);
    return SheafSides{compose(s.sh_prime(f, o[0], s.pushforward(f, o[1])), s.hom(fx, s.eta_shriek(f, o[1]))),
                      compose(s.shriek(f, s.qh_inv(f, o[0], o[1])), s.eta_shriek(f, s.hom(fx, o[1])))};
  });
  add("F2app2", S::Map, {1, 1}, "eps! o f_*sh' = [X, eps!] o qh^-1", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // X, B on Y
    const auto& f = M(c, 0);
    return SheafSides{compose(s.epsilon_shriek(f, s.hom(o[0], o[1])), s.pushforward(f, s.sh_prime(f, o[0], o[1]))),
                      compose(s.hom(o[0], s.epsilon_shriek(f, o[1])), s.qh_inv(f, o[0], s.shriek(f, o[1])))};
  });
  add("Rapp2", S::Map, {1, 1}, "sh o f^!coev = [f*X, sp] o coev", 2, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // X, B on Y
    const auto& f = M(c, 0);
    SheafComplex fx = s.pullback(f, o[0]);
    return SheafSides{compose(s.sh(f, o[0], s.tensor(o[1], o[0])), s.shriek(f, s.coev_l(o[0], o[1]))),
                      compose(s.hom(fx, s.sp(f, o[1], o[0])), s.coev_l(fx, s.shriek(f, o[1])))};
  });
  add("R'app2", S::Map, {1, 1}, "f^!ev o sp = ev o (sh (x) id)", 2, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // X, B on Y
    const auto& f = M(c, 0);
    SheafComplex fx = s.pullback(f, o[0]);
    return SheafSides{compose(s.shriek(f, s.ev_l(o[0], o[1])), s.sp(f, s.hom(o[0], o[1]), o[0])),
                      compose(s.ev_l(fx, s.shriek(f, o[1])), s.tensor(s.sh(f, o[0], o[1]), id(fx)))};
  });
  add("G1app2", S::Map, {0, 1}, "sp o (eta! (x) id) = f^!q^-1 o eta!", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // A on X, X on Y
    const auto& f = M(c, 0);
    SheafComplex fx = s.pullback(f, o[1]);
    return SheafSides{compose(s.sp(f, s.pushforward(f, o[0]), o[1]), s.tensor(s.eta_shriek(f, o[0]), id(fx))),
                      compose(s.shriek(f, s.q_inv(f, o[0], o[1])), s.eta_shriek(f, s.tensor(o[0], fx)))};
  });
  add("G2app2", S::Map, {1, 1}, "(eps! (x) id) o q^-1 = eps! o f_*sp", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // B, X on Y
    const auto& f = M(c, 0);
    return SheafSides{compose(s.tensor(s.epsilon_shriek(f, o[0]), id(o[1])), s.q_inv(f, s.shriek(f, o[0]), o[1])),
                      compose(s.epsilon_shriek(f, s.tensor(o[0], o[1])), s.pushforward(f, s.sp(f, o[0], o[1])))};
  });

  // ---- dd against ev and coev, on one base
  add("Happ4", S::Map, {0, 0, 0, 0}, "ev o (dd (x) id) = (ev (x) ev) o exch", 1,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 4);  // X1, X2, K, M
        SheafComplex x12 = s.tensor(o[0], o[1]);
        return SheafSides{
            compose(s.ev_l(x12, s.tensor(o[2], o[3])), s.tensor(s.dd(o[0], o[1], o[2], o[3]), id(x12))),
            compose(s.tensor(s.ev_l(o[0], o[2]), s.ev_l(o[1], o[3])),
                    s.exch(s.hom(o[0], o[2]), s.hom(o[1], o[3]), o[0], o[1]))};
      });
  add("H'app4", S::Map, {0, 0, 0, 0}, "dd o (coev (x) coev) = [X1 (x) X2, exch] o coev", 1,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 4);  // X1, X2, K, M
        SheafComplex x12 = s.tensor(o[0], o[1]);
        return SheafSides{compose(s.dd(o[0], o[1], s.tensor(o[2], o[0]), s.tensor(o[3], o[1])),
                                  s.tensor(s.coev_l(o[0], o[2]), s.coev_l(o[1], o[3]))),
                          compose(s.hom(x12, s.exch(o[2], o[3], o[0], o[1])), s.coev_l(x12, s.tensor(o[2], o[3])))};
      });

  // ---- pseudofunctor structure
  add("D18", S::Chain3, {3}, "ea_{h,gf} o ea_{g,f} = ea_{hg,f} o f*ea_{h,g}", 0,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 1);
        const auto &f = M(c, 0), &g = M(c, 1), &h = M(c, 2);
        return SheafSides{compose(s.ea(h, compose(g, f), o[0]), s.ea(g, f, s.pullback(h, o[0]))),
                          compose(s.ea(compose(h, g), f, o[0]), s.pullback(f, s.ea(h, g, o[0])))};
      });
  add("D19", S::Chain2, {2, 2}, "ea o f*fp o fp = fp o (ea (x) ea)", 0, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);
    const auto &f = M(c, 0), &g = M(c, 1);
    FiniteMap gf = compose(g, f);
    return SheafSides{
        chain({s.fp(f, s.pullback(g, o[0]), s.pullback(g, o[1])), s.pullback(f, s.fp(g, o[0], o[1])),
               s.ea(g, f, s.tensor(o[0], o[1]))}),
        compose(s.fp(gf, o[0], o[1]), s.tensor(s.ea(g, f, o[0]), s.ea(g, f, o[1])))};
  });
  add("D20", S::Chain2, {0, 0}, "g_*fg o fg o (eb (x) eb) = eb o fg", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);
    const auto &f = M(c, 0), &g = M(c, 1);
    FiniteMap gf = compose(g, f);
    return SheafSides{compose(s.eb(g, f, s.tensor(o[0], o[1])), s.fg(gf, o[0], o[1])),
                      chain({s.tensor(s.eb(g, f, o[0]), s.eb(g, f, o[1])),
                             s.fg(g, s.pushforward(f, o[0]), s.pushforward(f, o[1])),
                             s.pushforward(g, s.fg(f, o[0], o[1]))})};
  });
  add("D21", S::Chain3, {0}, "h_*eb_{g,f} o eb_{h,gf} = eb_{h,g} o eb_{hg,f}", 0,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 1);
        const auto &f = M(c, 0), &g = M(c, 1), &h = M(c, 2);
        return SheafSides{compose(s.pushforward(h, s.eb(g, f, o[0])), s.eb(h, compose(g, f), o[0])),
                          compose(s.eb(h, g, s.pushforward(f, o[0])), s.eb(compose(h, g), f, o[0]))};
      });
  add("compAdj1", S::Chain2, {2}, "eb o eta^{gf} = g_*f_*ea o g_*eta^f o eta^g", 0,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 1);
        const auto &f = M(c, 0), &g = M(c, 1);
        FiniteMap gf = compose(g, f);
        SheafComplex gb = s.pullback(g, o[0]);
        return SheafSides{compose(s.eb(g, f, s.pullback(gf, o[0])), s.eta(gf, o[0])),
                          chain({s.eta(g, o[0]), s.pushforward(g, s.eta(f, gb)),
                                 s.pushforward(g, s.pushforward(f, s.ea(g, f, o[0])))})};
      });
  add("compAdj2", S::Chain2, {0}, "eps^f o f*eps^g o f*g*eb = eps^{gf} o ea", 0,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 1);
        const auto &f = M(c, 0), &g = M(c, 1);
        FiniteMap gf = compose(g, f);
        SheafComplex fa = s.pushforward(f, o[0]);
        return SheafSides{chain({s.pullback(f, s.pullback(g, s.eb(g, f, o[0]))), s.pullback(f, s.epsilon(g, fa)),
                                 s.epsilon(f, o[0])}),
                          compose(s.epsilon(gf, o[0]), s.ea(g, f, s.pushforward(gf, o[0])))};
      });
  add("COC.ec", S::Chain3, {3}, "ec_{hg,f} o f^!ec_{h,g} = ec_{h,gf} o ec_{g,f}", 1,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 1);
        const auto &f = M(c, 0), &g = M(c, 1), &h = M(c, 2);
        return SheafSides{compose(s.ec(compose(h, g), f, o[0]), s.shriek(f, s.ec(h, g, o[0]))),
                          compose(s.ec(h, compose(g, f), o[0]), s.ec(g, f, s.shriek(h, o[0])))};
      });

  // ---- associativity
  add("D22", S::Map, {1, 1, 1}, "fp o (fp (x) id) then f*assoc = fp o (id (x) fp) o assoc", 0,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 3);
        const auto& f = M(c, 0);
        SheafComplex a = s.pullback(f, o[0]), b = s.pullback(f, o[1]), cc = s.pullback(f, o[2]);
        return SheafSides{chain({s.tensor(s.fp(f, o[0], o[1]), id(cc)), s.fp(f, s.tensor(o[0], o[1]), o[2]),
                                 s.pullback(f, s.assoc(o[0], o[1], o[2]))}),
                          chain({s.assoc(a, b, cc), s.tensor(id(a), s.fp(f, o[1], o[2])),
                                 s.fp(f, o[0], s.tensor(o[1], o[2]))})};
      });
  add("D23", S::Map, {0, 0, 0}, "f_*assoc o fg o (fg (x) id) = fg o (id (x) fg) o assoc", 1,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 3);
        const auto& f = M(c, 0);
        SheafComplex a = s.pushforward(f, o[0]), b = s.pushforward(f, o[1]), cc = s.pushforward(f, o[2]);
        return SheafSides{chain({s.tensor(s.fg(f, o[0], o[1]), id(cc)), s.fg(f, s.tensor(o[0], o[1]), o[2]),
                                 s.pushforward(f, s.assoc(o[0], o[1], o[2]))}),
                          chain({s.assoc(a, b, cc), s.tensor(id(a), s.fg(f, o[1], o[2])),
                                 s.fg(f, o[0], s.tensor(o[1], o[2]))})};
      });
  add("D24", S::Map, {0, 1, 1}, "q o (q (x) id) = f_*assoc^-1 o f_*(id (x) fp^-1) o q o assoc", 1,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 3);  // A on X, B, C on Y
        const auto& f = M(c, 0);
        SheafComplex fa = s.pushforward(f, o[0]), b = s.pullback(f, o[1]), cc = s.pullback(f, o[2]);
        return SheafSides{
            compose(s.q(f, s.tensor(o[0], b), o[2]), s.tensor(s.q(f, o[0], o[1]), id(o[2]))),
            chain({s.assoc(fa, o[1], o[2]), s.q(f, o[0], s.tensor(o[1], o[2])),
                   s.pushforward(f, s.tensor(id(o[0]), s.fp_inv(f, o[1], o[2]))),
                   s.pushforward(f, s.assoc_inv(o[0], b, cc))})};
      });
  add("D25", S::Map, {0, 0, 1}, "q o (fg (x) id) = f_*assoc^-1 o fg o (id (x) q) o assoc", 1,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 3);  // A, B on X, C on Y
        const auto& f = M(c, 0);
        SheafComplex fa = s.pushforward(f, o[0]), fb = s.pushforward(f, o[1]), cc = s.pullback(f, o[2]);
        return SheafSides{compose(s.q(f, s.tensor(o[0], o[1]), o[2]), s.tensor(s.fg(f, o[0], o[1]), id(o[2]))),
                          chain({s.assoc(fa, fb, o[2]), s.tensor(id(fa), s.q(f, o[1], o[2])),
                                 s.fg(f, o[0], s.tensor(o[1], cc)), s.pushforward(f, s.assoc_inv(o[0], o[1], cc))})};
      });

  // ---- composition and base change of the duality data
  add("D26", S::Chain2, {0, 2}, "rr^{gf} o (gf)_*[A, ec] = [eb, K] o rr^g o g_*rr^f o eb", 2,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 2);  // A on X, K on Z
        const auto &f = M(c, 0), &g = M(c, 1);
        FiniteMap gf = compose(g, f);
        SheafComplex gk = s.shriek(g, o[1]), fgk = s.shriek(f, gk);
        return SheafSides{
            compose(s.rr(gf, o[0], o[1]), s.pushforward(gf, s.hom(o[0], s.ec(g, f, o[1])))),
            chain({s.eb(g, f, s.hom(o[0], fgk)), s.pushforward(g, s.rr(f, o[0], gk)),
                   s.rr(g, s.pushforward(f, o[0]), o[1]), s.hom(s.eb(g, f, o[0]), o[1])})};
      });
  add("D27", S::Square, {1, 3}, "fh o f*rr = [eps, f*K] o rr o gbar_*[id, gam] o gbar_*fh o eps", 2,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 2);  // A on X, K on Z
        const auto& q = Sq(c);
        SheafComplex gk = s.shriek(q.g, o[1]), fa = s.pullback(q.fbar, o[0]), fk = s.pullback(q.f, o[1]);
        return SheafSides{
            compose(s.fh(q.f, s.pushforward(q.g, o[0]), o[1]), s.pullback(q.f, s.rr(q.g, o[0], o[1]))),
            chain({s.eps(q, s.hom(o[0], gk)), s.pushforward(q.gbar, s.fh(q.fbar, o[0], gk)),
                   s.pushforward(q.gbar, s.hom(fa, s.gam(q, o[1]))), s.rr(q.gbar, fa, fk),
                   s.hom(s.eps(q, o[0]), fk)})};
      });
  add("Happ3", S::Square, {3}, "eps! o gbar_*gam = f*eps! o eps^-1", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 1);  // B on Z
    const auto& q = Sq(c);
    SheafComplex gb = s.shriek(q.g, o[0]);
    return SheafSides{compose(s.epsilon_shriek(q.gbar, s.pullback(q.f, o[0])), s.pushforward(q.gbar, s.gam(q, o[0]))),
                      compose(s.pullback(q.f, s.epsilon_shriek(q.g, o[0])), inverse(s.eps(q, gb), "eps"))};
  });
  add("H'app3", S::Square, {1}, "gam o fbar*eta! = gbar^!eps^-1 o eta!", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 1);  // A on X
    const auto& q = Sq(c);
    return SheafSides{
        compose(s.gam(q, s.pushforward(q.g, o[0])), s.pullback(q.fbar, s.eta_shriek(q.g, o[0]))),
        compose(s.shriek(q.gbar, inverse(s.eps(q, o[0]), "eps")), s.eta_shriek(q.gbar, s.pullback(q.fbar, o[0])))};
  });
  add("D28", S::Square, {1, 3}, "gbar_*fp o gbar_*(id (x) xi) o q o (eps (x) id) = eps o f*q o fp", 1,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 2);  // A on X, B on Z
        const auto& q = Sq(c);
        SheafComplex fa = s.pullback(q.fbar, o[0]), gb = s.pullback(q.g, o[1]), fb = s.pullback(q.f, o[1]);
        return SheafSides{
            chain({s.tensor(s.eps(q, o[0]), id(fb)), s.q(q.gbar, fa, fb),
                   s.pushforward(q.gbar, s.tensor(id(fa), s.xi(q, o[1]))),
                   s.pushforward(q.gbar, s.fp(q.fbar, o[0], gb))}),
            chain({s.fp(q.f, s.pushforward(q.g, o[0]), o[1]), s.pullback(q.f, s.q(q.g, o[0], o[1])),
                   s.eps(q, s.tensor(o[0], gb))})};
      });
  add("D29", S::Square, {3, 3}, "gbar^!fp o sp o (gam (x) xi^-1) = gam o fbar*sp o fp", 2,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 2);  // A, B on Z
        const auto& q = Sq(c);
        SheafComplex ga = s.shriek(q.g, o[0]), gb = s.pullback(q.g, o[1]);
        return SheafSides{
            chain({s.tensor(s.gam(q, o[0]), s.xi_inv(q, o[1])), s.sp(q.gbar, s.pullback(q.f, o[0]), s.pullback(q.f, o[1])),
                   s.shriek(q.gbar, s.fp(q.f, o[0], o[1]))}),
            chain({s.fp(q.fbar, ga, gb), s.pullback(q.fbar, s.sp(q.g, o[0], o[1])), s.gam(q, s.tensor(o[0], o[1]))})};
      });

  // ---- products and the projection formula
  add("D30", S::Map, {1, 1, 1, 1}, "[id, fp] o dd o (fh (x) fh) = [fp, id] o fh o f*dd o fp", 2,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 4);  // A, B, K, M on Y
        const auto& f = M(c, 0);
        SheafComplex fa = s.pullback(f, o[0]), fb = s.pullback(f, o[1]), fk = s.pullback(f, o[2]),
                     fm = s.pullback(f, o[3]);
        SheafComplex ab = s.tensor(o[0], o[1]), km = s.tensor(o[2], o[3]);
        return SheafSides{
            chain({s.tensor(s.fh(f, o[0], o[2]), s.fh(f, o[1], o[3])), s.dd(fa, fb, fk, fm),
                   s.hom(s.tensor(fa, fb), s.fp(f, o[2], o[3]))}),
            chain({s.fp(f, s.hom(o[0], o[2]), s.hom(o[1], o[3])), s.pullback(f, s.dd(o[0], o[1], o[2], o[3])),
                   s.fh(f, ab, km), s.hom(s.fp(f, o[0], o[1]), s.pullback(f, km))})};
      });
  add("D31", S::Map, {0, 1, 1, 1}, "dd o (rr (x) id) = [q, id] o rr o f_*[id, sp] o f_*dd o f_*(id (x) fh) o q", 2,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 4);  // A on X; K, B, M on Y
        const auto& f = M(c, 0);
        const SheafComplex &a = o[0], &k = o[1], &b = o[2], &m = o[3];
        SheafComplex sk = s.shriek(f, k), fb = s.pullback(f, b), fm = s.pullback(f, m), fa = s.pushforward(f, a);
        SheafComplex ak = s.hom(a, sk), bm = s.hom(b, m), afb = s.tensor(a, fb), km = s.tensor(k, m);
        return SheafSides{
            compose(s.dd(fa, b, k, m), s.tensor(s.rr(f, a, k), id(bm))),
            chain({s.q(f, ak, bm), s.pushforward(f, s.tensor(id(ak), s.fh(f, b, m))),
                   s.pushforward(f, s.dd(a, fb, sk, fm)), s.pushforward(f, s.hom(afb, s.sp(f, k, m))),
                   s.rr(f, afb, km), s.hom(s.q(f, a, b), km)})};
      });
  add("D32", S::Map, {0, 0, 1, 1}, "dd o (ff (x) id) = [q, id] o [id, q^-1] o ff o f_*dd o f_*(id (x) fh) o q", 2,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 4);  // A, N on X; B, M on Y
        const auto& f = M(c, 0);
        const SheafComplex &a = o[0], &n = o[1], &b = o[2], &m = o[3];
        SheafComplex fb = s.pullback(f, b), fm = s.pullback(f, m), fa = s.pushforward(f, a), fn = s.pushforward(f, n);
        SheafComplex an = s.hom(a, n), bm = s.hom(b, m), afb = s.tensor(a, fb), nfm = s.tensor(n, fm);
        return SheafSides{
            compose(s.dd(fa, b, fn, m), s.tensor(s.ff(f, a, n), id(bm))),
            chain({s.q(f, an, bm), s.pushforward(f, s.tensor(id(an), s.fh(f, b, m))), s.pushforward(f, s.dd(a, fb, n, fm)),
                   s.ff(f, afb, nfm), s.hom(s.pushforward(f, afb), s.q_inv(f, n, m)),
                   s.hom(s.q(f, a, b), s.tensor(fn, m))})};
      });

  // ---- relative dualizing object
  add("COC.iprime", S::Chain3, {}, "i'_{hg,f} o (id (x) f*i'_{h,g}) = i'_{h,gf} o (i'_{g,f} (x) id) o assoc^-1 o ...", 1,
      [](const Sheaves& s, const SiteContext& c) {
        objs(c, 0);
        const auto &f = M(c, 0), &g = M(c, 1), &h = M(c, 2);
        SheafComplex wf = s.omega(f), wg = s.omega(g), wh = s.omega(h);
        SheafComplex fwg = s.pullback(f, wg), gfwh = s.pullback(compose(g, f), wh);
        return SheafSides{
            compose(s.iprime(compose(h, g), f), s.tensor(id(wf), s.pullback(f, s.iprime(h, g)))),
            chain({s.tensor(id(wf), s.fp_inv(f, wg, s.pullback(g, wh))),
                   s.tensor(id(wf), s.tensor(id(fwg), s.ea(g, f, wh))),
                   s.assoc_inv(wf, fwg, gfwh), s.tensor(s.iprime(g, f), id(gfwh)),
                   s.iprime(h, compose(g, f))})};
      });

  // ---- cross-checks of constructions against each other
  add("X.fh_mate", S::Map, {1, 1}, "fh equals the mate of fp", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // A, B on Y
    const auto& f = M(c, 0);
    SNat fp = [&s, f, a = o[0]](const Objs& x) { return Maps{s.fp(f, x.at(0), a)}; };
    SNat b = mate(fp, s.tensor_hom(o[0]), s.tensor_hom(s.pullback(f, o[0])), s.pullback_functor(f), s.pullback_functor(f));
    return SheafSides{s.fh(f, o[0], o[1]), b(Objs{o[1]}).at(0)};
  });
  add("X.fg_mate", S::Map, {0, 0}, "fg equals the mate of fp^-1", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // A, B on X
    const auto& f = M(c, 0);
    SFunctor pull = s.pullback_functor(f), push = s.pushforward_functor(f);
    // (f* x f*, f_* x f_*) on pairs: both functors already act elementwise.
    SAdjunction pairs{pull, push,
                      [&s, f](const Objs& x) {
                        Maps r;
                        for (const auto& b : x) r.push_back(s.eta(f, b));
                        return r;
                      },
                      [&s, f](const Objs& x) {
                        Maps r;
                        for (const auto& a : x) r.push_back(s.epsilon(f, a));
                        return r;
                      }};
    SFunctor tens{"(x)", [&s](const Objs& x) { return Objs{s.tensor(x.at(0), x.at(1))}; },
                  [&s](const Maps& m) { return Maps{s.tensor(m.at(0), m.at(1))}; }};
    SNat a = [&s, f](const Objs& x) { return Maps{s.fp_inv(f, x.at(0), x.at(1))}; };
    SNat b = mate(a, pairs, s.pull_push(f), tens, tens);
    return SheafSides{s.fg(f, o[0], o[1]), b(Objs{o[0], o[1]}).at(0)};
  });
  add("X.q_fg", S::Map, {0, 1}, "q = fg o (id (x) eta)", 0, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // A on X, B on Y
    const auto& f = M(c, 0);
    return SheafSides{s.q(f, o[0], o[1]),
                      compose(s.fg(f, o[0], s.pullback(f, o[1])), s.tensor(id(s.pushforward(f, o[0])), s.eta(f, o[1])))};
  });
  add("X.fg_q", S::Map, {0, 0}, "fg = f_*(id (x) eps) o q", 0, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // A, B on X
    const auto& f = M(c, 0);
    return SheafSides{s.fg(f, o[0], o[1]),
                      compose(s.pushforward(f, s.tensor(id(o[0]), s.epsilon(f, o[1]))), s.q(f, o[0], s.pushforward(f, o[1])))};
  });
  add("X.qh_ff", S::Map, {1, 0}, "qh^-1 = [eta, f_*B] o ff", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // A on Y, B on X
    const auto& f = M(c, 0);
    return SheafSides{s.qh_inv(f, o[0], o[1]),
                      compose(s.hom(s.eta(f, o[0]), s.pushforward(f, o[1])), s.ff(f, s.pullback(f, o[0]), o[1]))};
  });
  add("X.qh_inverse", S::Map, {1, 0}, "qh o qh^-1 = id", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // A on Y, B on X
    const auto& f = M(c, 0);
    return SheafSides{compose(s.qh(f, o[0], o[1]), s.qh_inv(f, o[0], o[1])),
                      id(s.pushforward(f, s.hom(s.pullback(f, o[0]), o[1])))};
  });
  add("X.rr_sh", S::Map, {0, 1}, "rr = eps! o f_*sh' o f_*[eps, f^!K]", 1, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);  // A on X, K on Y
    const auto& f = M(c, 0);
    SheafComplex fa = s.pushforward(f, o[0]), sk = s.shriek(f, o[1]);
    return SheafSides{s.rr(f, o[0], o[1]),
                      chain({s.pushforward(f, s.hom(s.epsilon(f, o[0]), sk)), s.pushforward(f, s.sh_prime(f, fa, o[1])),
                             s.epsilon_shriek(f, s.hom(fa, o[1]))})};
  });
  add("X.sp_alt", S::Map, {1, 1}, "sp through coev, sh and ev", 2, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);
    const auto& f = M(c, 0);
    return SheafSides{s.sp(f, o[0], o[1]), s.sp_alt(f, o[0], o[1])};
  });
  add("X.q_inverse", S::Map, {0, 1}, "q^-1 o q = id", 0, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 2);
    const auto& f = M(c, 0);
    return SheafSides{compose(s.q_inv(f, o[0], o[1]), s.q(f, o[0], o[1])),
                      id(s.tensor(s.pushforward(f, o[0]), o[1]))};
  });
  add("X.eps_inverse", S::Square, {1}, "eps is invertible on a cartesian square", 0,
      [](const Sheaves& s, const SiteContext& c) {
        auto o = objs(c, 1);
        const auto& q = Sq(c);
        SheafMap e = s.eps(q, o[0]);
        return SheafSides{compose(inverse(e, "eps"), e), id(e.source())};
      });

  // ---- triangle identities
  add("ADJ.pull_push.l", S::Map, {1}, "eps_{f*B} o f*eta_B = id", 0, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 1);
    const auto& f = M(c, 0);
    SheafComplex fb = s.pullback(f, o[0]);
    return SheafSides{compose(s.epsilon(f, fb), s.pullback(f, s.eta(f, o[0]))), id(fb)};
  });
  add("ADJ.pull_push.r", S::Map, {0}, "f_*eps_A o eta_{f_*A} = id", 0, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 1);
    const auto& f = M(c, 0);
    SheafComplex pa = s.pushforward(f, o[0]);
    return SheafSides{compose(s.pushforward(f, s.epsilon(f, o[0])), s.eta(f, pa)), id(pa)};
  });
  add("ADJ.push_shriek.l", S::Map, {0}, "eps!_{f_*A} o f_*eta!_A = id", 0, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 1);
    const auto& f = M(c, 0);
    SheafComplex pa = s.pushforward(f, o[0]);
    return SheafSides{compose(s.epsilon_shriek(f, pa), s.pushforward(f, s.eta_shriek(f, o[0]))), id(pa)};
  });
  add("ADJ.push_shriek.r", S::Map, {1}, "f^!eps!_B o eta!_{f^!B} = id", 0, [](const Sheaves& s, const SiteContext& c) {
    auto o = objs(c, 1);
    const auto& f = M(c, 0);
    SheafComplex sb = s.shriek(f, o[0]);
    return SheafSides{compose(s.shriek(f, s.epsilon_shriek(f, o[0])), s.eta_shriek(f, sb)), id(sb)};
  });
  return e;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = build_entries();
  return e;
}

}  // namespace

const std::vector<SiteDiagramInfo>& site_diagram_catalogue() {
  static const std::vector<SiteDiagramInfo> v = [] {
    std::vector<SiteDiagramInfo> r;
    for (const auto& e : entries()) r.push_back(e.info);
    return r;
  }();
  return v;
}

const SiteDiagramInfo* find_site_diagram(const std::string& id) {
  for (const auto& e : entries())
    if (e.info.id == id) return &e.info;
  return nullptr;
}

SheafSides site_diagram(const Sheaves& s, const std::string& id, const SiteContext& ctx) {
  for (const auto& e : entries())
    if (e.info.id == id) return e.build(s, ctx);
  throw std::invalid_argument("unknown site diagram: " + id);
}

SiteBounds capped(const SiteDiagramInfo& info, SiteBounds b) {
  if (info.weight >= 1) {
    b.max_dim = std::min(b.max_dim, 2);
    b.max_len = std::min(b.max_len, 2);
    b.max_set = std::min(b.max_set, 3);
  }
  if (info.weight >= 2) {
    b.max_set = std::min(b.max_set, 2);
  }
  return b;
}

SiteContext random_site_context(Rng& rng, const SiteDiagramInfo& info, const SiteBounds& bounds, int p) {
  SiteBounds b = capped(info, bounds);
  auto size = [&](bool may_be_empty) {
    if (may_be_empty && rng() % 6 == 0) return 0;
    return int(rng() % b.max_set) + 1;
  };
  SiteContext c;
  std::vector<int> sets;
  switch (info.shape) {
    case SiteShape::Map:
    case SiteShape::Chain2:
    case SiteShape::Chain3: {
      int n = info.shape == SiteShape::Map ? 2 : info.shape == SiteShape::Chain2 ? 3 : 4;
      sets.push_back(size(true));
      for (int i = 1; i < n; ++i) sets.push_back(size(false));
      for (int i = 0; i + 1 < n; ++i) c.maps.push_back(random_finite_map(rng, b.max_set, sets[i], sets[i + 1]));
      break;
    }
    case SiteShape::Square: {
      CommSquare q = random_cartesian_square(rng, b.max_set);
      sets = {q.fbar.nsrc(), q.g.nsrc(), q.f.nsrc(), q.f.ntgt()};
      c.square = q;
      break;
    }
  }
  ComplexBounds cb;
  cb.max_len = b.max_len;
  cb.max_dim = b.max_dim;
  // Redraw all-zero sheaves a few times so that small caps still give nondegenerate legs.
  for (int base : info.bases) {
    SheafComplex o = random_sheaf(rng, sets.at(base), cb, p);
    for (int tries = 0; tries < 4 && o.size() > 0 && o.total_dim() == 0; ++tries) o = random_sheaf(rng, sets.at(base), cb, p);
    c.objs.push_back(std::move(o));
  }
  return c;
}

}  // namespace cxd
