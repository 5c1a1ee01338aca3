#pragma once

#include <functional>
#include <string>

// Generic adjunction and mate machinery over any category whose objects are O and morphisms M.
// Requires free functions compose(M g, M f) -> M, identity_of(O) -> M and operator== on M,
// found by argument-dependent lookup.

namespace cxd {

template <class O, class M>
struct FunctorT {
  std::string name;
  std::function<O(const O&)> obj;
  std::function<M(const M&)> map;
};

template <class O, class M>
using NatTransT = std::function<M(const O&)>;

// unit: X -> R L X, counit: L R Y -> Y.
template <class O, class M>
struct AdjunctionT {
  FunctorT<O, M> left, right;
  NatTransT<O, M> unit, counit;
};

template <class O, class M>
FunctorT<O, M> identity_functor() {
  return {"Id", [](const O& x) { return x; }, [](const M& f) { return f; }};
}

template <class O, class M>
FunctorT<O, M> compose_functors(const FunctorT<O, M>& g, const FunctorT<O, M>& f) {
  return {g.name + f.name, [g, f](const O& x) { return g.obj(f.obj(x)); }, [g, f](const M& m) { return g.map(f.map(m)); }};
}

// Given a : J2 H' -> H J1, returns its mate b : H' K1 -> K2 H,
//   b_Y = K2(H(counit1_Y)) o K2(a_{K1 Y}) o unit2_{H' K1 Y}.
template <class O, class M>
NatTransT<O, M> mate(const NatTransT<O, M>& a, const AdjunctionT<O, M>& adj1, const AdjunctionT<O, M>& adj2,
                     const FunctorT<O, M>& H, const FunctorT<O, M>& Hp) {
  return [=](const O& y) {
    O k1y = adj1.right.obj(y);
    M eta = adj2.unit(Hp.obj(k1y));
    M ka = adj2.right.map(a(k1y));
    M keps = adj2.right.map(H.map(adj1.counit(y)));
    return compose(keps, compose(ka, eta));
  };
}

// Inverse direction: from b : H' K1 -> K2 H recover a : J2 H' -> H J1,
//   a_X = counit2_{H J1 X} o J2(b_{J1 X}) o J2(H'(unit1_X)).
template <class O, class M>
NatTransT<O, M> mate_back(const NatTransT<O, M>& b, const AdjunctionT<O, M>& adj1, const AdjunctionT<O, M>& adj2,
                          const FunctorT<O, M>& H, const FunctorT<O, M>& Hp) {
  return [=](const O& x) {
    O j1x = adj1.left.obj(x);
    M first = adj2.left.map(Hp.map(adj1.unit(x)));
    M mid = adj2.left.map(b(j1x));
    M last = adj2.counit(H.obj(j1x));
    return compose(last, compose(mid, first));
  };
}

// counit_{L X} o L(unit_X) = id_{L X}
template <class O, class M>
bool left_triangle(const AdjunctionT<O, M>& adj, const O& x) {
  O lx = adj.left.obj(x);
  return compose(adj.counit(lx), adj.left.map(adj.unit(x))) == identity_of(lx);
}

// R(counit_Y) o unit_{R Y} = id_{R Y}
template <class O, class M>
bool right_triangle(const AdjunctionT<O, M>& adj, const O& y) {
  O ry = adj.right.obj(y);
  return compose(adj.right.map(adj.counit(y)), adj.unit(ry)) == identity_of(ry);
}

}  // namespace cxd
