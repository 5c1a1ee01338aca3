#include "cxd/witt.hpp"

#include <numeric>
#include <sstream>

namespace cxd {

namespace {

long long pow_mod(long long a, long long e, int p) {
  long long r = 1;
  a %= p;
  if (a < 0) a += p;
  for (; e > 0; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

Matrix diag(int p, const std::vector<long long>& d) {
  PrimeField F(p);
  Matrix m(p, int(d.size()), int(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m.set(int(i), int(i), F.from_int(d[i]));
  return m;
}

Elem quad(const Matrix& g, const std::vector<Elem>& v, const std::vector<Elem>& w) {
  PrimeField F(g.p());
  Elem s = 0;
  for (int i = 0; i < g.rows(); ++i) {
    if (!v[i]) continue;
    Elem row = 0;
    for (int j = 0; j < g.cols(); ++j) row = F.add(row, F.mul(g.at(i, j), w[j]));
    s = F.add(s, F.mul(v[i], row));
  }
  return s;
}

void check_form(const Matrix& g) {
  if (g.rows() != g.cols() || !(g == g.transpose())) throw std::invalid_argument("witt: Gram matrix is not symmetric");
  if (g.rows() > 0 && !is_invertible(g)) throw std::invalid_argument("witt: degenerate form");
}

}  // namespace

bool is_square(long long a, int p) {
  a %= p;
  if (a < 0) a += p;
  return a == 0 || pow_mod(a, (p - 1) / 2, p) == 1;
}

int least_nonsquare(int p) {
  for (int r = 2; r < p; ++r)
    if (!is_square(r, p)) return r;
  throw std::invalid_argument("no non-square");
}

int WittClass::disc() const {
  if (dim() == 0) return 0;
  return is_square(determinant(rep), p) ? 1 : -1;
}

Matrix WittClass::canonical() const {
  int r = least_nonsquare(p);
  switch (dim()) {
    case 0: return Matrix(p, 0, 0);
    case 1: return diag(p, {disc() > 0 ? 1 : r});
    case 2: return diag(p, {1, -r});
    default: throw std::logic_error("witt: representative is not anisotropic");
  }
}

std::string WittClass::label() const {
  if (dim() == 0) return "0";
  Matrix c = canonical();
  PrimeField F(p);
  std::string s = "<";
  for (int i = 0; i < c.rows(); ++i) s += (i ? "," : "") + std::to_string(F.centered(c.at(i, i)));
  return s + ">";
}

nlohmann::json WittClass::to_json() const {
  return {{"p", p}, {"dim", dim()}, {"disc", disc()}, {"label", label()}, {"rep", cxd::to_json(rep)}};
}

bool operator==(const WittClass& a, const WittClass& b) {
  return a.p == b.p && a.dim() == b.dim() && a.disc() == b.disc();
}

std::vector<Elem> find_isotropic(const Matrix& g) {
  int n = g.rows(), p = g.p();
  std::vector<Elem> v(n, 0);
  // Odometer over F_p^n; the first vector visited is e_{n-1}.
  for (;;) {
    int i = n - 1;
    while (i >= 0 && v[i] == Elem(p - 1)) v[i--] = 0;
    if (i < 0) return {};
    ++v[i];
    if (quad(g, v, v) == 0) return v;
  }
}

WittClass witt_reduce(const Matrix& g0) {
  check_form(g0);
  int p = g0.p();
  PrimeField F(p);
  Matrix g = g0;
  while (g.rows() > 0) {
    auto v = find_isotropic(g);
    if (v.empty()) break;
    int n = g.rows();
    // w with B(v, w) = 1; exists because g is nondegenerate.
    std::vector<Elem> gv(n, 0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) gv[j] = F.add(gv[j], F.mul(v[i], g.at(i, j)));
    int j = 0;
    while (gv[j] == 0) ++j;
    std::vector<Elem> w(n, 0);
    w[j] = F.inv(gv[j]);
    Matrix constraints(p, 2, n);
    for (int c = 0; c < n; ++c) {
      Elem a = 0, b = 0;
      for (int i = 0; i < n; ++i) {
        a = F.add(a, F.mul(v[i], g.at(i, c)));
        b = F.add(b, F.mul(w[i], g.at(i, c)));
      }
      constraints.set(0, c, a);
      constraints.set(1, c, b);
    }
    Matrix basis = kernel_basis(constraints);  // n x (n-2), spans the orthogonal complement of the plane
    g = basis.transpose() * g * basis;
  }
  return {p, g};
}

WittClass witt_zero(int p) { return {p, Matrix(p, 0, 0)}; }

WittClass witt_add(const WittClass& a, const WittClass& b) {
  if (a.p != b.p) throw std::invalid_argument("witt: different fields");
  return witt_reduce(block_direct_sum({a.rep, b.rep}, a.p));
}

WittClass witt_neg(const WittClass& a) { return {a.p, -a.rep}; }

WittClass witt_mul(const WittClass& a, const WittClass& b) {
  if (a.p != b.p) throw std::invalid_argument("witt: different fields");
  if (a.dim() == 0 || b.dim() == 0) return witt_zero(a.p);
  return witt_reduce(kronecker(a.rep, b.rep));
}

bool congruent_exhaustive(const Matrix& a, const Matrix& b) {
  int n = a.rows(), p = a.p();
  if (n != b.rows()) return false;
  if (n > 2) throw std::invalid_argument("congruent_exhaustive: n <= 2 only");
  if (n == 0) return true;
  int total = 1;
  for (int i = 0; i < n * n; ++i) total *= p;
  for (int code = 0; code < total; ++code) {
    Matrix m(p, n, n);
    int c = code;
    for (int i = 0; i < n * n; ++i, c /= p) m.set(i / n, i % n, Elem(c % p));
    if (is_invertible(m) && m.transpose() * a * m == b) return true;
  }
  return false;
}

bool WittTable::cyclic() const {
  for (int o : order)
    if (o == int(classes.size())) return true;
  return false;
}

int WittTable::exponent() const {
  int e = 1;
  for (int o : order) e = std::lcm(e, o);
  return e;
}

std::string WittTable::to_string() const {
  std::ostringstream os;
  os << "W(F_" << p << "): " << classes.size() << " classes, " << (cyclic() ? "cyclic" : "not cyclic") << ", exponent "
     << exponent() << "\n";
  std::size_t w = 6;
  for (const auto& c : classes) w = std::max(w, c.label().size() + 1);
  auto cell = [&](const std::string& s) {
    os << s << std::string(w - s.size(), ' ');
  };
  cell("+");
  for (const auto& c : classes) cell(c.label());
  os << "order\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    cell(classes[i].label());
    for (int j : add[i]) cell(classes[j].label());
    os << order[i] << "\n";
  }
  return os.str();
}

nlohmann::json WittTable::to_json() const {
  nlohmann::json cl = nlohmann::json::array();
  for (const auto& c : classes) cl.push_back(c.to_json());
  return {{"p", p}, {"size", classes.size()}, {"cyclic", cyclic()}, {"exponent", exponent()},
          {"classes", cl}, {"add", add}, {"order", order}};
}

WittTable witt_classify(int p, int maxdim) {
  WittTable t;
  t.p = p;
  t.classes.push_back(witt_zero(p));
  auto index_of = [&](const WittClass& c) {
    for (std::size_t i = 0; i < t.classes.size(); ++i)
      if (t.classes[i] == c) return int(i);
    t.classes.push_back(c);
    return int(t.classes.size()) - 1;
  };
  for (int n = 1; n <= maxdim; ++n) {
    std::vector<long long> d(n, 1);
    for (;;) {
      index_of(witt_reduce(diag(p, d)));
      int i = n - 1;
      while (i >= 0 && d[i] == p - 1) d[i--] = 1;
      if (i < 0) break;
      ++d[i];
    }
  }
  // Close under addition; with maxdim >= 2 nothing new appears over F_p.
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    t.add.resize(t.classes.size());
    for (std::size_t j = 0; j < t.classes.size(); ++j) {
      int k = index_of(witt_add(t.classes[i], t.classes[j]));
      t.add[i].resize(t.classes.size(), 0);
      t.add[i][j] = k;
    }
  }
  for (auto& row : t.add) row.resize(t.classes.size(), 0);
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    int o = 1;
    WittClass x = t.classes[i];
    while (!(x == t.classes[0])) {
      x = witt_add(x, t.classes[i]);
      ++o;
    }
    t.order.push_back(i == 0 ? 1 : o);
  }
  return t;
}

WittClass transfer_witt(const Sheaves& s, const FiniteMap& f, const std::vector<Matrix>& grams) {
  if (f.ntgt() != 1) throw std::invalid_argument("transfer_witt: target must be a point");
  if (int(grams.size()) != f.nsrc()) throw std::invalid_argument("transfer_witt: one form per stalk");
  for (const auto& g : grams) check_form(g);
  SymmetricForm out = transfer_form(pushforward_dp(s, f, s.unit(1)), form_from_grams(s, grams));
  return witt_reduce(grams_of(out).at(0));
}

WittClass orthogonal_sum_witt(int p, const std::vector<Matrix>& grams) {
  for (const auto& g : grams) check_form(g);
  return witt_reduce(block_direct_sum(grams, p));
}

namespace {

DPFunctor unit_product(const Sheaves& s, int n) {
  SheafComplex one = s.unit(n);
  return compose_dp(I_iota(Duality(s, {s.tensor(one, one)}), {s.lunit(one)}), product_dp(s, one, one));
}

}  // namespace

WittClass product_witt(const Sheaves& s, const Matrix& a, const Matrix& b) {
  check_form(a);
  check_form(b);
  SymmetricForm fa = form_from_grams(s, {a}), fb = form_from_grams(s, {b});
  SymmetricForm out = transfer_form(unit_product(s, 1), {{fa.A[0], fb.A[0]}, {fa.psi[0], fb.psi[0]}});
  return witt_reduce(grams_of(out).at(0));
}

std::pair<WittClass, WittClass> projection_formula_sides(const Sheaves& s, const FiniteMap& f,
                                                         const std::vector<Matrix>& x, const Matrix& y) {
  if (f.ntgt() != 1) throw std::invalid_argument("projection formula: target must be a point");
  for (const auto& g : x) check_form(g);
  check_form(y);
  int n = f.nsrc();
  SymmetricForm fx = form_from_grams(s, x), fy = form_from_grams(s, {y});
  SymmetricForm pulled = transfer_form(pullback_dp(s, f, s.unit(1)), fy);
  SymmetricForm prod = transfer_form(unit_product(s, n), {{fx.A[0], pulled.A[0]}, {fx.psi[0], pulled.psi[0]}});
  SymmetricForm lhs = transfer_form(pushforward_dp(s, f, s.unit(1)), prod);
  WittClass tx = transfer_witt(s, f, x);
  WittClass rhs = tx.dim() == 0 ? witt_zero(s.p()) : product_witt(s, tx.rep, y);
  return {witt_reduce(grams_of(lhs).at(0)), rhs};
}

Matrix random_nondegenerate_form(Rng& rng, int p, int n) {
  for (;;) {
    Matrix m = random_matrix(rng, p, n, n);
    m = m + m.transpose();
    if (n == 0 || is_invertible(m)) return m;
  }
}

}  // namespace cxd
