#include "cxd/monoidal.hpp"

#include <optional>
#include <stdexcept>

namespace cxd {

namespace {

// Returned by value: callers often pass a temporary block list.
template <class B>
std::optional<B> find_block(const std::vector<B>& v, int i) {
  for (const auto& b : v)
    if (b.i == i) return b;
  return std::nullopt;
}

// Signed permutation matrices invert by transposition.
ChainMap transpose_inverse(const ChainMap& f) {
  ChainMap r(f.target_ptr(), f.source_ptr(), 0);
  for (int n = f.target().min_degree; n <= f.target().max_degree(); ++n) r.set_comp(n, f.comp(n).transpose());
  return r;
}

}  // namespace

std::vector<TensorBlock> tensor_blocks(const Complex& a, const Complex& b, int n) {
  std::vector<TensorBlock> v;
  int off = 0;
  for (int i = a.min_degree; i <= a.max_degree(); ++i) {
    int j = n - i;
    if (!b.in_range(j)) continue;
    v.push_back({i, j, off, a.dim(i), b.dim(j)});
    off += a.dim(i) * b.dim(j);
  }
  return v;
}

std::vector<HomBlock> hom_blocks(const Complex& a, const Complex& b, int n) {
  std::vector<HomBlock> v;
  int off = 0;
  for (int i = a.min_degree; i <= a.max_degree(); ++i) {
    int j = i + n;
    if (!b.in_range(j)) continue;
    v.push_back({i, j, off, a.dim(i), b.dim(j)});
    off += a.dim(i) * b.dim(j);
  }
  return v;
}

Monoidal::Monoidal(const SignAssignment& s, int p) : s_(s), p_(p) {
  PrimeField check(p);
  TableReport r = verify_table(s);
  for (const auto& row : r.rows)
    if (!row.pass) throw std::invalid_argument("sign assignment fails " + row.id);
}

Monoidal::Monoidal(const SignAssignment& s, int p, NoCheck) : s_(s), p_(p) { PrimeField check(p); }

Monoidal Monoidal::unchecked(const SignAssignment& s, int p) { return Monoidal(s, p, NoCheck{}); }

ShiftSign Monoidal::shift_sign() const {
  SignExpr e = s_[Sym::T];
  return [e](int i) { return e.eval(i); };
}

ChainMap Monoidal::certify(ChainMap f, const char* name) const {
  if (!is_chain_map(f)) throw std::logic_error(std::string("structural map ") + name + " is not a chain map");
  return f;
}

Complex Monoidal::checked(Complex c, const char* name) const {
  if (!validate(c)) throw std::logic_error(std::string(name) + " is not a complex");
  return c;
}

Complex Monoidal::tensor(const Complex& a, const Complex& b) const {
  if (a.p != b.p) throw std::invalid_argument("tensor over different fields");
  if (a.len() == 0 || b.len() == 0) return Complex::zero(a.p);
  int lo = a.min_degree + b.min_degree, hi = a.max_degree() + b.max_degree();
  std::vector<int> dims;
  std::vector<std::vector<TensorBlock>> blocks;
  for (int n = lo; n <= hi; ++n) {
    blocks.push_back(tensor_blocks(a, b, n));
    int d = 0;
    for (const auto& bl : blocks.back()) d += bl.da * bl.db;
    dims.push_back(d);
  }
  std::vector<Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    Matrix d(a.p, dims[n - 1 - lo], dims[n - lo]);
    const auto& below = blocks[n - 1 - lo];
    for (const auto& bl : blocks[n - lo]) {
      if (a.in_range(bl.i - 1)) {
        auto t = find_block(below, bl.i - 1);
        d.add_block(t->offset, bl.offset,
                    kronecker(a.d(bl.i), Matrix::identity(a.p, bl.db)).scaled(eps(Sym::Tens1, bl.i, bl.j)));
      }
      if (b.in_range(bl.j - 1)) {
        auto t = find_block(below, bl.i);
        d.add_block(t->offset, bl.offset,
                    kronecker(Matrix::identity(a.p, bl.da), b.d(bl.j)).scaled(eps(Sym::Tens2, bl.i, bl.j)));
      }
    }
    diffs.push_back(d);
  }
  return checked(Complex::make(a.p, lo, dims, diffs), "tensor product");
}

Complex Monoidal::hom(const Complex& a, const Complex& b) const {
  if (a.p != b.p) throw std::invalid_argument("hom over different fields");
  if (a.len() == 0 || b.len() == 0) return Complex::zero(a.p);
  int lo = b.min_degree - a.max_degree(), hi = b.max_degree() - a.min_degree;
  std::vector<int> dims;
  std::vector<std::vector<HomBlock>> blocks;
  for (int n = lo; n <= hi; ++n) {
    blocks.push_back(hom_blocks(a, b, n));
    int d = 0;
    for (const auto& bl : blocks.back()) d += bl.da * bl.db;
    dims.push_back(d);
  }
  std::vector<Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    Matrix d(a.p, dims[n - 1 - lo], dims[n - lo]);
    const auto& below = blocks[n - 1 - lo];
    for (const auto& bl : blocks[n - lo]) {
      if (a.in_range(bl.i + 1)) {
        // phi |-> phi o d^A_{i+1}, landing in hom(A_{i+1}, B_j)
        auto t = find_block(below, bl.i + 1);
        d.add_block(t->offset, bl.offset,
                    kronecker(a.d(bl.i + 1).transpose(), Matrix::identity(a.p, bl.db)).scaled(eps(Sym::Hom1, bl.i, bl.j)));
      }
      if (b.in_range(bl.j - 1)) {
        // phi |-> d^B_j o phi, landing in hom(A_i, B_{j-1})
        auto t = find_block(below, bl.i);
        d.add_block(t->offset, bl.offset,
                    kronecker(Matrix::identity(a.p, bl.da), b.d(bl.j)).scaled(eps(Sym::Hom2, bl.i, bl.j)));
      }
    }
    diffs.push_back(d);
  }
  return checked(Complex::make(a.p, lo, dims, diffs), "internal hom");
}

ChainMap Monoidal::tensor(const ChainMap& f, const ChainMap& g) const {
  if (f.degree() != 0 || g.degree() != 0) throw std::invalid_argument("tensor of maps expects degree 0");
  auto src = share(tensor(f.source(), g.source()));
  auto tgt = share(tensor(f.target(), g.target()));
  ChainMap r(src, tgt, 0);
  for (int n = src->min_degree; n <= src->max_degree(); ++n) {
    Matrix m(p_, tgt->dim(n), src->dim(n));
    auto tb = tensor_blocks(f.target(), g.target(), n);
    for (const auto& bl : tensor_blocks(f.source(), g.source(), n)) {
      auto t = find_block(tb, bl.i);
      if (!t) continue;
      m.set_block(t->offset, bl.offset, kronecker(f.comp(bl.i), g.comp(bl.j)));
    }
    r.set_comp(n, m);
  }
  return certify(r, "tensor of maps");
}

ChainMap Monoidal::hom(const ChainMap& f, const ChainMap& g) const {
  if (f.degree() != 0 || g.degree() != 0) throw std::invalid_argument("hom of maps expects degree 0");
  auto src = share(hom(f.target(), g.source()));
  auto tgt = share(hom(f.source(), g.target()));
  ChainMap r(src, tgt, 0);
  for (int n = src->min_degree; n <= src->max_degree(); ++n) {
    Matrix m(p_, tgt->dim(n), src->dim(n));
    auto tb = hom_blocks(f.source(), g.target(), n);
    for (const auto& bl : hom_blocks(f.target(), g.source(), n)) {
      auto t = find_block(tb, bl.i);
      if (!t) continue;
      m.set_block(t->offset, bl.offset, kronecker(f.comp(bl.i).transpose(), g.comp(bl.j)));
    }
    r.set_comp(n, m);
  }
  return certify(r, "hom of maps");
}

ChainMap Monoidal::assoc(const Complex& a, const Complex& b, const Complex& c) const {
  Complex ab = tensor(a, b), bc = tensor(b, c);
  auto src = share(tensor(ab, c));
  auto tgt = share(tensor(a, bc));
  ChainMap r(src, tgt, 0);
  for (int n = src->min_degree; n <= src->max_degree(); ++n) {
    Matrix m(p_, tgt->dim(n), src->dim(n));
    auto outer_t = tensor_blocks(a, bc, n);
    for (const auto& outer : tensor_blocks(ab, c, n)) {
      int k = outer.j, dc = outer.db;
      for (const auto& inner : tensor_blocks(a, b, outer.i)) {
        int i = inner.i, j = inner.j;
        auto to = find_block(outer_t, i);
        auto ti = find_block(tensor_blocks(b, c, j + k), j);
        int dbc = bc.dim(j + k);
        Elem s = PrimeField(p_).from_int(eps(Sym::Asso, i, j, k));
        for (int x = 0; x < inner.da; ++x)
          for (int y = 0; y < inner.db; ++y)
            for (int z = 0; z < dc; ++z) {
              int from = outer.offset + (inner.offset + x * inner.db + y) * dc + z;
              int to_idx = to->offset + x * dbc + ti->offset + y * dc + z;
              m.set(to_idx, from, s);
            }
      }
    }
    r.set_comp(n, m);
  }
  return certify(r, "associator");
}

ChainMap Monoidal::assoc_inv(const Complex& a, const Complex& b, const Complex& c) const {
  return transpose_inverse(assoc(a, b, c));
}

ChainMap Monoidal::lunit(const Complex& a) const {
  auto src = share(tensor(unit(), a));
  ChainMap r(src, share(a), 0);
  for (int n = a.min_degree; n <= a.max_degree(); ++n) r.set_comp(n, Matrix::identity(p_, a.dim(n)));
  return certify(r, "left unitor");
}

ChainMap Monoidal::runit(const Complex& a) const {
  auto src = share(tensor(a, unit()));
  ChainMap r(src, share(a), 0);
  for (int n = a.min_degree; n <= a.max_degree(); ++n) r.set_comp(n, Matrix::identity(p_, a.dim(n)));
  return certify(r, "right unitor");
}

ChainMap Monoidal::lunit_inv(const Complex& a) const { return transpose_inverse(lunit(a)); }
ChainMap Monoidal::runit_inv(const Complex& a) const { return transpose_inverse(runit(a)); }

ChainMap Monoidal::sym(const Complex& a, const Complex& b) const {
  auto src = share(tensor(a, b));
  auto tgt = share(tensor(b, a));
  ChainMap r(src, tgt, 0);
  PrimeField F(p_);
  for (int n = src->min_degree; n <= src->max_degree(); ++n) {
    Matrix m(p_, tgt->dim(n), src->dim(n));
    auto tb = tensor_blocks(b, a, n);
    for (const auto& bl : tensor_blocks(a, b, n)) {
      auto t = find_block(tb, bl.j);
      Elem s = F.from_int(eps(Sym::C, bl.i, bl.j));
      for (int x = 0; x < bl.da; ++x)
        for (int y = 0; y < bl.db; ++y) m.set(t->offset + y * bl.da + x, bl.offset + x * bl.db + y, s);
    }
    r.set_comp(n, m);
  }
  return certify(r, "symmetry");
}

ChainMap Monoidal::tp1(const Complex& a, const Complex& b) const {
  Complex ta = T(a);
  auto src = share(tensor(ta, b));
  auto tgt = share(T(tensor(a, b)));
  ChainMap r(src, tgt, 0);
  for (int n = src->min_degree; n <= src->max_degree(); ++n) {
    Matrix m(p_, tgt->dim(n), src->dim(n));
    auto tb = tensor_blocks(a, b, n - 1);
    for (const auto& bl : tensor_blocks(ta, b, n)) {
      int i = bl.i - 1;
      auto t = find_block(tb, i);
      m.set_block(t->offset, bl.offset, Matrix::identity(p_, bl.da * bl.db).scaled(eps(Sym::Tp1, i, bl.j)));
    }
    r.set_comp(n, m);
  }
  return certify(r, "left shift map");
}

ChainMap Monoidal::tp2(const Complex& a, const Complex& b) const {
  Complex tb_ = T(b);
  auto src = share(tensor(a, tb_));
  auto tgt = share(T(tensor(a, b)));
  ChainMap r(src, tgt, 0);
  for (int n = src->min_degree; n <= src->max_degree(); ++n) {
    Matrix m(p_, tgt->dim(n), src->dim(n));
    auto tb = tensor_blocks(a, b, n - 1);
    for (const auto& bl : tensor_blocks(a, tb_, n)) {
      int j = bl.j - 1;
      auto t = find_block(tb, bl.i);
      m.set_block(t->offset, bl.offset, Matrix::identity(p_, bl.da * bl.db).scaled(eps(Sym::Tp2, bl.i, j)));
    }
    r.set_comp(n, m);
  }
  return certify(r, "right shift map");
}

ChainMap Monoidal::tp1_inv(const Complex& a, const Complex& b) const { return transpose_inverse(tp1(a, b)); }
ChainMap Monoidal::tp2_inv(const Complex& a, const Complex& b) const { return transpose_inverse(tp2(a, b)); }

ChainMap Monoidal::th1(const Complex& a, const Complex& b) const {
  Complex ta = Tinv(a);
  auto src = share(hom(ta, b));
  auto tgt = share(T(hom(a, b)));
  ChainMap r(src, tgt, 0);
  for (int n = src->min_degree; n <= src->max_degree(); ++n) {
    Matrix m(p_, tgt->dim(n), src->dim(n));
    auto tb = hom_blocks(a, b, n - 1);
    for (const auto& bl : hom_blocks(ta, b, n)) {
      int i = bl.i + 1;
      auto t = find_block(tb, i);
      m.set_block(t->offset, bl.offset, Matrix::identity(p_, bl.da * bl.db).scaled(eps(Sym::Th1, i, bl.j)));
    }
    r.set_comp(n, m);
  }
  return certify(r, "left hom shift map");
}

ChainMap Monoidal::th2(const Complex& a, const Complex& b) const {
  Complex tb_ = T(b);
  auto src = share(hom(a, tb_));
  auto tgt = share(T(hom(a, b)));
  ChainMap r(src, tgt, 0);
  for (int n = src->min_degree; n <= src->max_degree(); ++n) {
    Matrix m(p_, tgt->dim(n), src->dim(n));
    auto tb = hom_blocks(a, b, n - 1);
    for (const auto& bl : hom_blocks(a, tb_, n)) {
      int j = bl.j - 1;
      auto t = find_block(tb, bl.i);
      m.set_block(t->offset, bl.offset, Matrix::identity(p_, bl.da * bl.db).scaled(eps(Sym::Th2, bl.i, j)));
    }
    r.set_comp(n, m);
  }
  return certify(r, "right hom shift map");
}

ChainMap Monoidal::th1_inv(const Complex& a, const Complex& b) const { return transpose_inverse(th1(a, b)); }
ChainMap Monoidal::th2_inv(const Complex& a, const Complex& b) const { return transpose_inverse(th2(a, b)); }

ChainMap Monoidal::ev_l(const Complex& a, const Complex& k) const {
  Complex h = hom(a, k);
  auto src = share(tensor(h, a));
  ChainMap r(src, share(k), 0);
  PrimeField F(p_);
  for (int n = src->min_degree; n <= src->max_degree(); ++n) {
    Matrix m(p_, k.dim(n), src->dim(n));
    for (const auto& bl : tensor_blocks(h, a, n)) {
      int hd = bl.i, md = bl.j;
      auto hb = find_block(hom_blocks(a, k, hd), md);
      if (!hb) continue;
      Elem s = F.from_int(eps(Sym::Ath, hd, md));
      int dk = hb->db, da = bl.db;
      for (int x = 0; x < da; ++x)
        for (int row = 0; row < dk; ++row) m.set(row, bl.offset + (hb->offset + x * dk + row) * da + x, s);
    }
    r.set_comp(n, m);
  }
  return certify(r, "left evaluation");
}

ChainMap Monoidal::coev_l(const Complex& a, const Complex& k) const {
  Complex ka = tensor(k, a);
  auto tgt = share(hom(a, ka));
  ChainMap r(share(k), tgt, 0);
  PrimeField F(p_);
  for (int n = k.min_degree; n <= k.max_degree(); ++n) {
    Matrix m(p_, tgt->dim(n), k.dim(n));
    for (const auto& hb : hom_blocks(a, ka, n)) {
      int md = hb.i;
      auto tb = find_block(tensor_blocks(k, a, n + md), n);
      if (!tb) continue;
      Elem s = F.from_int(eps(Sym::Ath, n, md));
      int dka = hb.db, da = hb.da;
      for (int z = 0; z < k.dim(n); ++z)
        for (int x = 0; x < da; ++x) m.set(hb.offset + x * dka + tb->offset + z * da + x, z, s);
    }
    r.set_comp(n, m);
  }
  return certify(r, "left coevaluation");
}

ChainMap Monoidal::ev_r(const Complex& a, const Complex& k) const {
  return compose(ev_l(a, k), sym(a, hom(a, k)));
}

ChainMap Monoidal::coev_r(const Complex& a, const Complex& k) const {
  return compose(hom(a, sym(k, a)), coev_l(a, k));
}

ChainMap Monoidal::curry(const ChainMap& u, const Complex& pc, const Complex& a) const {
  if (!same(u.source(), tensor(pc, a))) throw std::invalid_argument("curry: source is not P (x) A");
  const Complex& c = u.target();
  auto tgt = share(hom(a, c));
  ChainMap r(share(pc), tgt, 0);
  PrimeField F(p_);
  for (int n = pc.min_degree; n <= pc.max_degree(); ++n) {
    Matrix m(p_, tgt->dim(n), pc.dim(n));
    for (const auto& hb : hom_blocks(a, c, n)) {
      int md = hb.i;
      auto tb = find_block(tensor_blocks(pc, a, n + md), n);
      if (!tb) continue;
      Matrix U = u.comp(n + md);
      int s = eps(Sym::Ath, n, md);
      int dc = hb.db, da = hb.da;
      for (int z = 0; z < pc.dim(n); ++z)
        for (int x = 0; x < da; ++x)
          for (int row = 0; row < dc; ++row) {
            Elem v = U.at(row, tb->offset + z * da + x);
            if (v) m.set(hb.offset + x * dc + row, z, s > 0 ? v : F.neg(v));
          }
    }
    r.set_comp(n, m);
  }
  return certify(r, "curried map");
}

ChainMap Monoidal::uncurry(const ChainMap& v, const Complex& a, const Complex& c) const {
  if (!same(v.target(), hom(a, c))) throw std::invalid_argument("uncurry: target is not [A, C]");
  const Complex& pc = v.source();
  auto src = share(tensor(pc, a));
  ChainMap r(src, share(c), 0);
  PrimeField F(p_);
  for (int s = src->min_degree; s <= src->max_degree(); ++s) {
    Matrix m(p_, c.dim(s), src->dim(s));
    for (const auto& tb : tensor_blocks(pc, a, s)) {
      int n = tb.i, md = tb.j;
      auto hb = find_block(hom_blocks(a, c, n), md);
      if (!hb) continue;
      Matrix V = v.comp(n);
      int sg = eps(Sym::Ath, n, md);
      int dc = hb->db, da = hb->da;
      for (int z = 0; z < pc.dim(n); ++z)
        for (int x = 0; x < da; ++x)
          for (int row = 0; row < dc; ++row) {
            Elem e = V.at(hb->offset + x * dc + row, z);
            if (e) m.set(row, tb.offset + z * da + x, sg > 0 ? e : F.neg(e));
          }
    }
    r.set_comp(s, m);
  }
  return certify(r, "uncurried map");
}

ChainMap Monoidal::bid(const Complex& a, const Complex& k) const { return curry(ev_r(a, k), a, hom(a, k)); }

ChainMap Monoidal::exch(const Complex& pc, const Complex& q, const Complex& a, const Complex& b) const {
  Complex ab = tensor(a, b), qb = tensor(q, b);
  ChainMap idp = identity_of(pc);
  ChainMap s1 = assoc(pc, q, ab);
  ChainMap s2 = tensor(idp, assoc_inv(q, a, b));
  ChainMap s3 = tensor(idp, tensor(sym(q, a), identity_of(b)));
  ChainMap s4 = tensor(idp, assoc(a, q, b));
  ChainMap s5 = assoc_inv(pc, a, qb);
  return compose({&s5, &s4, &s3, &s2, &s1});
}

ChainMap Monoidal::dd(const Complex& a, const Complex& b, const Complex& k, const Complex& m) const {
  Complex hak = hom(a, k), hbm = hom(b, m);
  ChainMap w = compose(tensor(ev_l(a, k), ev_l(b, m)), exch(hak, hbm, a, b));
  return curry(w, tensor(hak, hbm), tensor(a, b));
}

ChainMap Monoidal::dd_literal(const Complex& a, const Complex& b, const Complex& k, const Complex& m) const {
  Complex hak = hom(a, k), hbm = hom(b, m), ab = tensor(a, b);
  ChainMap w = compose(tensor(ev_l(a, k), ev_l(b, m)), exch(hak, hbm, a, b));
  return compose(hom(ab, w), coev_l(ab, tensor(hak, hbm)));
}

const std::vector<std::string>& Monoidal::structural_names() {
  static const std::vector<std::string> names = {"assoc", "assoc_inv", "lunit",  "runit",  "lunit_inv", "runit_inv",
                                                 "sym",   "tp1",       "tp2",    "tp1_inv", "tp2_inv",  "th1",
                                                 "th2",   "th1_inv",   "th2_inv", "ev_l",   "coev_l",   "ev_r",
                                                 "coev_r", "bid",      "exch",   "dd"};
  return names;
}

ChainMap Monoidal::structural(const std::string& name, const std::vector<Complex>& o) const {
  auto need = [&](std::size_t n) {
    if (o.size() != n) throw std::invalid_argument(name + " expects " + std::to_string(n) + " objects");
  };
  if (name == "assoc") { need(3); return assoc(o[0], o[1], o[2]); }
  if (name == "assoc_inv") { need(3); return assoc_inv(o[0], o[1], o[2]); }
  if (name == "lunit") { need(1); return lunit(o[0]); }
  if (name == "runit") { need(1); return runit(o[0]); }
  if (name == "lunit_inv") { need(1); return lunit_inv(o[0]); }
  if (name == "runit_inv") { need(1); return runit_inv(o[0]); }
  if (name == "sym") { need(2); return sym(o[0], o[1]); }
  if (name == "tp1") { need(2); return tp1(o[0], o[1]); }
  if (name == "tp2") { need(2); return tp2(o[0], o[1]); }
  if (name == "tp1_inv") { need(2); return tp1_inv(o[0], o[1]); }
  if (name == "tp2_inv") { need(2); return tp2_inv(o[0], o[1]); }
  if (name == "th1") { need(2); return th1(o[0], o[1]); }
  if (name == "th2") { need(2); return th2(o[0], o[1]); }
  if (name == "th1_inv") { need(2); return th1_inv(o[0], o[1]); }
  if (name == "th2_inv") { need(2); return th2_inv(o[0], o[1]); }
  if (name == "ev_l") { need(2); return ev_l(o[0], o[1]); }
  if (name == "coev_l") { need(2); return coev_l(o[0], o[1]); }
  if (name == "ev_r") { need(2); return ev_r(o[0], o[1]); }
  if (name == "coev_r") { need(2); return coev_r(o[0], o[1]); }
  if (name == "bid") { need(2); return bid(o[0], o[1]); }
  if (name == "exch") { need(4); return exch(o[0], o[1], o[2], o[3]); }
  if (name == "dd") { need(4); return dd(o[0], o[1], o[2], o[3]); }
  throw std::invalid_argument("no such transform: " + name);
}

AdjunctionT<Complex, ChainMap> Monoidal::tensor_hom_adjunction(const Complex& a) const {
  const Monoidal* self = this;
  AdjunctionT<Complex, ChainMap> adj;
  adj.left = {"-(x)A", [self, a](const Complex& x) { return self->tensor(x, a); },
              [self, a](const ChainMap& f) { return self->tensor(f, identity_of(a)); }};
  adj.right = {"[A,-]", [self, a](const Complex& y) { return self->hom(a, y); },
               [self, a](const ChainMap& g) { return self->hom(a, g); }};
  adj.unit = [self, a](const Complex& x) { return self->coev_l(a, x); };
  adj.counit = [self, a](const Complex& y) { return self->ev_l(a, y); };
  return adj;
}

}  // namespace cxd
