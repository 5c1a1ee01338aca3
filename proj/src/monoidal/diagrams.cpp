#include "cxd/diagrams.hpp"

#include <cctype>
#include <stdexcept>

namespace cxd {

const std::vector<DiagramInfo>& diagram_catalogue() {
  static const std::vector<DiagramInfo> cat = {
      {"D4", 2, "T(ev_l) o tp1 o (th2 (x) id) = ev_l(A,TK)"},
      {"D5", 2, "T(ev_r) o tp2 o (id (x) th2) = ev_r(A,TK)"},
      {"D6", 2, "[A,tp1] o coev_l(A,TK) = th2^-1 o T(coev_l)"},
      {"D7", 2, "[A,tp2] o coev_r(A,TK) = th2^-1 o T(coev_r)"},
      {"D8", 2, "ev_l o tp1^-1 o tp2 = ev_l(TA,K) o (T^-1 th1 (x) id)"},
      {"D9", 2, "ev_r o tp2^-1 o tp1 = ev_r(TA,K) o (id (x) T^-1 th1)"},
      {"D10", 2, "T^-1 th1^-1 o coev_l(TA,K) = T^-1[A,tp2^-1] o T^-1 th2^-1 o coev_l(A,K)"},
      {"D11", 2, "T^-1 th1^-1 o coev_r(TA,K) = T^-1[A,tp1^-1] o T^-1 th2^-1 o coev_r(A,K)"},
      {"pentagon", 4, "a o a = (id (x) a) o a o (a (x) id)"},
      {"hexagon", 3, "a o c o a = (id (x) c) o a o (c (x) id)"},
      {"unit_triangle", 2, "(id (x) l) o a = r (x) id"},
      {"sym_involution", 2, "c_{B,A} o c_{A,B} = id"},
      {"row14", 2, "T(tp2) o tp1 = -T(tp1) o tp2"},
      {"row15", 3, "T(a) o tp1 o (tp1 (x) id) = tp1 o a"},
      {"row16", 3, "T(a) o tp1 o (tp2 (x) id) = tp2 o (id (x) tp1) o a"},
      {"row17", 3, "T(a) o tp2 = tp2 o (id (x) tp2) o a"},
      {"row18", 2, "T(c) o tp1 = tp2 o c"},
      {"triangle_l", 2, "ev_l o (coev_l (x) id) = id"},
      {"triangle_r", 2, "[A,ev_l] o coev_l = id"},
      {"curry", 3, "curry(u) = [A,u] o coev_l"},
      {"uncurry", 3, "uncurry(v) = ev_l o (v (x) id)"},
      {"dd_literal", 4, "dd = [A (x) B, w] o coev_l"},
      {"bid_scalar", 2, "bid = (-1)^{j(j-1)/2} on one-dimensional A, K"},
      {"P.shift", 2, "T[th2,K] o delta th1 o bid(A,K) = th2 o bid(A,TK)"},
  };
  return cat;
}

const DiagramInfo& diagram_info(const std::string& id) {
  for (const auto& d : diagram_catalogue())
    if (d.id == id) return d;
  throw std::invalid_argument("no such diagram: " + id);
}

namespace {

ChainMap chain(const ChainMap& f) { return f; }
template <class... R>
ChainMap chain(const ChainMap& g, const ChainMap& f, const R&... rest) {
  return compose(g, chain(f, rest...));
}

ChainMap shifted_bidual_lhs(const Monoidal& m, const Complex& a, const Complex& k) {
  Complex hak = m.hom(a, k);
  ChainMap th1 = m.th1(m.T(hak), k);
  return compose(m.T(m.hom(m.th2(a, k), k)), compose(th1, m.bid(a, k)));
}

ChainMap shifted_bidual_rhs(const Monoidal& m, const Complex& a, const Complex& k) {
  Complex tk = m.T(k);
  return compose(m.th2(m.hom(a, tk), k), m.bid(a, tk));
}

}  // namespace

int shifted_bidual_sign(const Monoidal& m, const Complex& a, const Complex& k) {
  ChainMap l = shifted_bidual_lhs(m, a, k), r = shifted_bidual_rhs(m, a, k);
  if (l == r) return 1;
  if (l == -r) return -1;
  return 0;
}

Sides diagram(const Monoidal& m, const std::string& id, const std::vector<Complex>& o, Rng& rng) {
  const DiagramInfo& info = diagram_info(id);
  if (int(o.size()) != info.arity)
    throw std::invalid_argument(id + " expects " + std::to_string(info.arity) + " complexes");

  if (id.size() >= 2 && id[0] == 'D' && std::isdigit(static_cast<unsigned char>(id[1]))) {
    const Complex &a = o[0], &k = o[1];
    Complex ta = m.T(a), tk = m.T(k), hak = m.hom(a, k);
    if (id == "D4")
      return {chain(m.T(m.ev_l(a, k)), m.tp1(hak, a), m.tensor(m.th2(a, k), identity_of(a))), m.ev_l(a, tk)};
    if (id == "D5")
      return {chain(m.T(m.ev_r(a, k)), m.tp2(a, hak), m.tensor(identity_of(a), m.th2(a, k))), m.ev_r(a, tk)};
    if (id == "D6")
      return {compose(m.hom(a, m.tp1(k, a)), m.coev_l(a, tk)), compose(m.th2_inv(a, m.tensor(k, a)), m.T(m.coev_l(a, k)))};
    if (id == "D7")
      return {compose(m.hom(a, m.tp2(a, k)), m.coev_r(a, tk)), compose(m.th2_inv(a, m.tensor(a, k)), m.T(m.coev_r(a, k)))};
    Complex x = m.Tinv(hak);
    if (id == "D8")
      return {chain(m.ev_l(a, k), m.tp1_inv(x, a), m.tp2(x, a)),
              compose(m.ev_l(ta, k), m.tensor(m.Tinv(m.th1(ta, k)), identity_of(ta)))};
    if (id == "D9")
      return {chain(m.ev_r(a, k), m.tp2_inv(a, x), m.tp1(a, x)),
              compose(m.ev_r(ta, k), m.tensor(identity_of(ta), m.Tinv(m.th1(ta, k))))};
    if (id == "D10")
      return {compose(m.Tinv(m.th1_inv(ta, m.tensor(k, ta))), m.coev_l(ta, k)),
              chain(m.Tinv(m.hom(a, m.tp2_inv(k, a))), m.Tinv(m.th2_inv(a, m.tensor(k, a))), m.coev_l(a, k))};
    if (id == "D11")
      return {compose(m.Tinv(m.th1_inv(ta, m.tensor(ta, k))), m.coev_r(ta, k)),
              chain(m.Tinv(m.hom(a, m.tp1_inv(a, k))), m.Tinv(m.th2_inv(a, m.tensor(a, k))), m.coev_r(a, k))};
  }

  if (id == "pentagon") {
    const Complex &a = o[0], &b = o[1], &c = o[2], &d = o[3];
    return {compose(m.assoc(a, b, m.tensor(c, d)), m.assoc(m.tensor(a, b), c, d)),
            chain(m.tensor(identity_of(a), m.assoc(b, c, d)), m.assoc(a, m.tensor(b, c), d), m.tensor(m.assoc(a, b, c), identity_of(d)))};
  }
  if (id == "hexagon") {
    const Complex &a = o[0], &b = o[1], &c = o[2];
    return {chain(m.assoc(b, c, a), m.sym(a, m.tensor(b, c)), m.assoc(a, b, c)),
            chain(m.tensor(identity_of(b), m.sym(a, c)), m.assoc(b, a, c), m.tensor(m.sym(a, b), identity_of(c)))};
  }
  if (id == "unit_triangle") {
    const Complex &a = o[0], &b = o[1];
    return {compose(m.tensor(identity_of(a), m.lunit(b)), m.assoc(a, m.unit(), b)),
            m.tensor(m.runit(a), identity_of(b))};
  }
  if (id == "sym_involution") {
    ChainMap f = m.sym(o[0], o[1]);
    return {compose(m.sym(o[1], o[0]), f), identity_of(f.source())};
  }
  if (id == "row14") {
    const Complex &a = o[0], &c = o[1];
    return {compose(m.T(m.tp2(a, c)), m.tp1(a, m.T(c))), -compose(m.T(m.tp1(a, c)), m.tp2(m.T(a), c))};
  }
  if (id == "row15" || id == "row16" || id == "row17") {
    const Complex &a = o[0], &b = o[1], &c = o[2];
    Complex ab = m.tensor(a, b), bc = m.tensor(b, c);
    ChainMap ta = m.T(m.assoc(a, b, c));
    if (id == "row15")
      return {chain(ta, m.tp1(ab, c), m.tensor(m.tp1(a, b), identity_of(c))),
              compose(m.tp1(a, bc), m.assoc(m.T(a), b, c))};
    if (id == "row16")
      return {chain(ta, m.tp1(ab, c), m.tensor(m.tp2(a, b), identity_of(c))),
              chain(m.tp2(a, bc), m.tensor(identity_of(a), m.tp1(b, c)), m.assoc(a, m.T(b), c))};
    return {compose(ta, m.tp2(ab, c)),
            chain(m.tp2(a, bc), m.tensor(identity_of(a), m.tp2(b, c)), m.assoc(a, b, m.T(c)))};
  }
  if (id == "row18") {
    const Complex &a = o[0], &b = o[1];
    return {compose(m.T(m.sym(a, b)), m.tp1(a, b)), compose(m.tp2(b, a), m.sym(m.T(a), b))};
  }

  auto adj = [&] { return m.tensor_hom_adjunction(o[0]); };
  if (id == "triangle_l") {
    auto ad = adj();
    Complex lx = ad.left.obj(o[1]);
    return {compose(ad.counit(lx), ad.left.map(ad.unit(o[1]))), identity_of(lx)};
  }
  if (id == "triangle_r") {
    auto ad = adj();
    Complex ry = ad.right.obj(o[1]);
    return {compose(ad.right.map(ad.counit(o[1])), ad.unit(ry)), identity_of(ry)};
  }
  if (id == "curry") {
    const Complex &p = o[0], &a = o[1], &c = o[2];
    ChainMap u = random_chain_map(rng, share(m.tensor(p, a)), share(c));
    return {m.curry(u, p, a), compose(m.hom(a, u), m.coev_l(a, p))};
  }
  if (id == "uncurry") {
    const Complex &p = o[0], &a = o[1], &c = o[2];
    ChainMap v = random_chain_map(rng, share(p), share(m.hom(a, c)));
    return {m.uncurry(v, a, c), compose(m.ev_l(a, c), m.tensor(v, identity_of(a)))};
  }
  if (id == "dd_literal") return {m.dd(o[0], o[1], o[2], o[3]), m.dd_literal(o[0], o[1], o[2], o[3])};
  if (id == "bid_scalar") {
    const Complex &a = o[0], &k = o[1];
    if (a.len() != 1 || k.len() != 1 || a.total_dim() != 1 || k.total_dim() != 1)
      throw std::invalid_argument("bid_scalar expects one-dimensional complexes");
    ChainMap b = m.bid(a, k);
    long long j = k.min_degree;
    ChainMap want(b.source_ptr(), b.target_ptr(), 0);
    want.set_comp(a.min_degree, Matrix::identity(m.p(), 1).scaled((j * (j - 1) / 2) % 2 ? -1 : 1));
    return {b, want};
  }
  if (id == "P.shift") {
    const Complex &a = o[0], &k = o[1];
    return {shifted_bidual_lhs(m, a, k).scaled(kShiftedBidualSign), shifted_bidual_rhs(m, a, k)};
  }
  throw std::invalid_argument("no such diagram: " + id);
}

}  // namespace cxd
