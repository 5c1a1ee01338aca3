#include "cxd/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace cxd {

Complex Complex::concentrated(int p, int degree, int dim) {
  Complex c;
  c.p = p;
  c.min_degree = degree;
  c.dims = {dim};
  return c;
}

Complex Complex::make(int p, int min_degree, std::vector<int> dims, std::vector<Matrix> diffs) {
  Complex c;
  c.p = p;
  c.min_degree = min_degree;
  c.dims = std::move(dims);
  c.diffs = std::move(diffs);
  if (c.dims.empty() ? !c.diffs.empty() : c.diffs.size() + 1 != c.dims.size())
    throw std::invalid_argument("complex needs exactly one differential between consecutive degrees");
  for (std::size_t t = 0; t < c.diffs.size(); ++t) {
    const Matrix& m = c.diffs[t];
    if (m.rows() != c.dims[t] || m.cols() != c.dims[t + 1] || m.p() != p)
      throw std::invalid_argument("differential shape does not match dimensions");
  }
  return c;
}

Matrix Complex::d(int n) const {
  if (in_range(n) && in_range(n - 1)) return diffs[n - 1 - min_degree];
  return Matrix(p, dim(n - 1), dim(n));
}

int Complex::total_dim() const {
  int s = 0;
  for (int x : dims) s += x;
  return s;
}

nlohmann::json Complex::to_json() const {
  nlohmann::json ds = nlohmann::json::array();
  for (const auto& m : diffs) ds.push_back(cxd::to_json(m));
  return {{"p", p}, {"min_degree", min_degree}, {"dims", dims}, {"diffs", ds}};
}

Complex Complex::from_json(const nlohmann::json& j) {
  int p = j.at("p").get<int>();
  std::vector<Matrix> diffs;
  for (const auto& m : j.at("diffs")) diffs.push_back(matrix_from_json(m, p));
  return make(p, j.at("min_degree").get<int>(), j.at("dims").get<std::vector<int>>(), std::move(diffs));
}

bool validate(const Complex& a) {
  if (a.dims.empty()) return a.diffs.empty();
  if (a.diffs.size() + 1 != a.dims.size()) return false;
  for (int x : a.dims)
    if (x < 0) return false;
  for (std::size_t t = 0; t < a.diffs.size(); ++t) {
    const Matrix& m = a.diffs[t];
    if (m.p() != a.p || m.rows() != a.dims[t] || m.cols() != a.dims[t + 1]) return false;
  }
  for (std::size_t t = 0; t + 1 < a.diffs.size(); ++t)
    if (!(a.diffs[t] * a.diffs[t + 1]).is_zero()) return false;
  return true;
}

bool same(const Complex& a, const Complex& b) {
  if (&a == &b) return true;
  if (a.p != b.p) return false;
  int lo = std::min(a.min_degree, b.min_degree), hi = std::max(a.max_degree(), b.max_degree());
  for (int n = lo; n <= hi; ++n)
    if (a.dim(n) != b.dim(n)) return false;
  for (int n = lo + 1; n <= hi; ++n)
    if (!(a.d(n) == b.d(n))) return false;
  return true;
}

Complex suspend(const Complex& a, const ShiftSign& eps) {
  Complex r = a;
  r.min_degree = a.min_degree + 1;
  for (std::size_t t = 0; t < r.diffs.size(); ++t) r.diffs[t] = a.diffs[t].scaled(eps(a.min_degree + int(t) + 1));
  return r;
}

Complex desuspend(const Complex& a, const ShiftSign& eps) {
  Complex r = a;
  r.min_degree = a.min_degree - 1;
  for (std::size_t t = 0; t < r.diffs.size(); ++t) r.diffs[t] = a.diffs[t].scaled(eps(a.min_degree + int(t)));
  return r;
}

ChainMap::ChainMap(ComplexPtr source, ComplexPtr target, int degree)
    : src_(std::move(source)), tgt_(std::move(target)), degree_(degree) {
  if (!src_ || !tgt_) throw std::invalid_argument("chain map needs both endpoints");
  if (src_->p != tgt_->p) throw std::invalid_argument("chain map endpoints over different fields");
  for (int n = src_->min_degree; n <= src_->max_degree(); ++n)
    comps_.emplace_back(src_->p, tgt_->dim(n + degree_), src_->dim(n));
}

ChainMap ChainMap::identity(ComplexPtr a) {
  ChainMap f(a, a, 0);
  for (int n = a->min_degree; n <= a->max_degree(); ++n) f.set_comp(n, Matrix::identity(a->p, a->dim(n)));
  return f;
}

Matrix ChainMap::comp(int n) const {
  if (src_->in_range(n)) return comps_[n - src_->min_degree];
  return Matrix(src_->p, tgt_->dim(n + degree_), src_->dim(n));
}

void ChainMap::set_comp(int n, const Matrix& m) {
  if (!src_->in_range(n)) {
    if (m.rows() == tgt_->dim(n + degree_) && m.cols() == 0) return;
    throw std::out_of_range("component outside the source range");
  }
  Matrix& c = comps_[n - src_->min_degree];
  if (c.rows() != m.rows() || c.cols() != m.cols()) throw std::invalid_argument("component shape mismatch");
  c = m;
}

void ChainMap::add_comp(int n, const Matrix& m) {
  if (!src_->in_range(n)) {
    if (m.cols() == 0) return;
    throw std::out_of_range("component outside the source range");
  }
  Matrix& c = comps_[n - src_->min_degree];
  c = c + m;
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
  if (!same(source(), o.source()) || !same(target(), o.target()) || degree_ != o.degree_)
    throw std::invalid_argument("sum of maps with different endpoints");
  ChainMap r = *this;
  for (int n = src_->min_degree; n <= src_->max_degree(); ++n) r.comps_[n - src_->min_degree] = comp(n) + o.comp(n);
  return r;
}

ChainMap ChainMap::operator-(const ChainMap& o) const { return *this + o.scaled(-1); }

ChainMap ChainMap::scaled(long long s) const {
  ChainMap r = *this;
  for (auto& c : r.comps_) c = c.scaled(s);
  return r;
}

bool ChainMap::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

nlohmann::json ChainMap::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (int n = src_->min_degree; n <= src_->max_degree(); ++n)
    cs.push_back({{"degree", n}, {"matrix", cxd::to_json(comp(n))}});
  return {{"degree", degree_}, {"source", src_->to_json()}, {"target", tgt_->to_json()}, {"components", cs}};
}

ChainMap ChainMap::from_json(const nlohmann::json& j) {
  auto s = share(Complex::from_json(j.at("source")));
  auto t = share(Complex::from_json(j.at("target")));
  ChainMap f(s, t, j.at("degree").get<int>());
  for (const auto& c : j.at("components")) f.set_comp(c.at("degree").get<int>(), matrix_from_json(c.at("matrix"), s->p));
  return f;
}

bool operator==(const ChainMap& f, const ChainMap& g) {
  if (f.degree_ != g.degree_) return false;
  if (!same(f.source(), g.source()) || !same(f.target(), g.target())) return false;
  int lo = std::min(f.src_->min_degree, g.src_->min_degree), hi = std::max(f.src_->max_degree(), g.src_->max_degree());
  for (int n = lo; n <= hi; ++n)
    if (!(f.comp(n) == g.comp(n))) return false;
  return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!same(f.target(), g.source())) throw std::invalid_argument("incomposable");
  ChainMap r(f.source_ptr(), g.target_ptr(), f.degree() + g.degree());
  for (int n = f.source().min_degree; n <= f.source().max_degree(); ++n)
    r.set_comp(n, g.comp(n + f.degree()) * f.comp(n));
  return r;
}

ChainMap compose(std::initializer_list<const ChainMap*> right_to_left) {
  // First entry is applied last, matching the written order g o f.
  std::vector<const ChainMap*> v(right_to_left);
  if (v.empty()) throw std::invalid_argument("empty composite");
  ChainMap r = *v.back();
  for (std::size_t t = v.size() - 1; t-- > 0;) r = compose(*v[t], r);
  return r;
}

bool is_chain_map(const ChainMap& f) {
  const Complex& a = f.source();
  const Complex& b = f.target();
  int s = (f.degree() % 2 == 0) ? 1 : -1;
  for (int n = a.min_degree; n <= a.max_degree() + 1; ++n) {
    Matrix lhs = b.d(n + f.degree()) * f.comp(n);
    Matrix rhs = (f.comp(n - 1) * a.d(n)).scaled(s);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool is_iso(const ChainMap& f) {
  const Complex& a = f.source();
  const Complex& b = f.target();
  int lo = std::min(a.min_degree, b.min_degree - f.degree()), hi = std::max(a.max_degree(), b.max_degree() - f.degree());
  for (int n = lo; n <= hi; ++n)
    if (!is_invertible(f.comp(n))) return false;
  return true;
}

ChainMap inverse(const ChainMap& f) {
  if (!is_iso(f)) throw std::domain_error("map is not invertible");
  ChainMap r(f.target_ptr(), f.source_ptr(), -f.degree());
  const Complex& b = f.target();
  for (int n = b.min_degree; n <= b.max_degree(); ++n) r.set_comp(n, cxd::inverse(f.comp(n + r.degree())));
  return r;
}

ChainMap suspend(const ChainMap& f, const ShiftSign& eps) {
  ChainMap r(share(suspend(f.source(), eps)), share(suspend(f.target(), eps)), f.degree());
  for (int n = f.source().min_degree; n <= f.source().max_degree(); ++n) r.set_comp(n + 1, f.comp(n));
  return r;
}

ChainMap desuspend(const ChainMap& f, const ShiftSign& eps) {
  ChainMap r(share(desuspend(f.source(), eps)), share(desuspend(f.target(), eps)), f.degree());
  for (int n = f.source().min_degree; n <= f.source().max_degree(); ++n) r.set_comp(n - 1, f.comp(n));
  return r;
}

std::vector<ChainMap> chain_map_space(const ComplexPtr& a, const ComplexPtr& b) {
  int p = a->p;
  // Unknowns: entries of f_n for every degree n of a, row-major per component.
  std::vector<int> offset;
  int nvars = 0;
  for (int n = a->min_degree; n <= a->max_degree(); ++n) {
    offset.push_back(nvars);
    nvars += b->dim(n) * a->dim(n);
  }
  auto var = [&](int n, int r, int c) { return offset[n - a->min_degree] + r * a->dim(n) + c; };
  std::vector<std::vector<std::pair<int, Elem>>> rows;
  PrimeField F(p);
  // d^B_n f_n - f_{n-1} d^A_n = 0 as maps A_n -> B_{n-1}.
  for (int n = a->min_degree; n <= a->max_degree() + 1; ++n) {
    Matrix dB = b->d(n), dA = a->d(n);
    int R = b->dim(n - 1), C = a->dim(n);
    for (int r = 0; r < R; ++r)
      for (int c = 0; c < C; ++c) {
        std::vector<std::pair<int, Elem>> row;
        if (a->in_range(n))
          for (int k = 0; k < b->dim(n); ++k)
            if (dB.at(r, k)) row.push_back({var(n, k, c), dB.at(r, k)});
        if (a->in_range(n - 1))
          for (int k = 0; k < a->dim(n - 1); ++k)
            if (dA.at(k, c)) row.push_back({var(n - 1, r, k), F.neg(dA.at(k, c))});
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  Matrix sys(p, int(rows.size()), nvars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto [v, x] : rows[r]) sys.add_to(int(r), v, x);
  Matrix ker = kernel_basis(sys);
  std::vector<ChainMap> basis;
  for (int t = 0; t < ker.cols(); ++t) {
    ChainMap f(a, b, 0);
    for (int n = a->min_degree; n <= a->max_degree(); ++n) {
      Matrix m(p, b->dim(n), a->dim(n));
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.set(r, c, ker.at(var(n, r, c), t));
      f.set_comp(n, m);
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

Matrix random_matrix(Rng& rng, int p, int rows, int cols) {
  std::uniform_int_distribution<int> u(0, p - 1);
  Matrix m(p, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, Elem(u(rng)));
  return m;
}

Matrix random_invertible(Rng& rng, int p, int n) {
  for (;;) {
    Matrix m = random_matrix(rng, p, n, n);
    if (is_invertible(m)) return m;
  }
}

Complex random_complex(Rng& rng, const ComplexBounds& bounds, int p) {
  std::uniform_int_distribution<int> len_d(1, std::max(1, bounds.max_len));
  std::uniform_int_distribution<int> deg_d(bounds.min_degree_lo, bounds.min_degree_hi);
  int len = len_d(rng);
  int lo = deg_d(rng);
  std::vector<int> dims(len);
  std::uniform_int_distribution<int> dim_d(0, std::max(0, bounds.max_dim));
  for (auto& x : dims) x = dim_d(rng);
  // discs[t] connects degree lo+t+1 to lo+t; each disc uses one basis vector at both ends.
  std::vector<int> used(len, 0), discs(std::max(0, len - 1), 0);
  for (int t = 0; t + 1 < len; ++t) {
    int room = std::min(dims[t] - used[t], dims[t + 1] - used[t + 1]);
    discs[t] = room > 0 ? std::uniform_int_distribution<int>(0, room)(rng) : 0;
    used[t] += discs[t];
    used[t + 1] += discs[t];
  }
  // Basis layout per degree: [vectors hit from above | free | vectors mapping down].
  std::vector<Matrix> diffs;
  for (int t = 0; t + 1 < len; ++t) {
    Matrix d(p, dims[t], dims[t + 1]);
    int hit_start = 0;
    int src_start = dims[t + 1] - discs[t];
    for (int k = 0; k < discs[t]; ++k) d.set(hit_start + k, src_start + k, 1);
    diffs.push_back(d);
  }
  std::vector<Matrix> P, Pinv;
  for (int t = 0; t < len; ++t) {
    P.push_back(random_invertible(rng, p, dims[t]));
    Pinv.push_back(inverse(P.back()));
  }
  for (int t = 0; t + 1 < len; ++t) diffs[t] = P[t] * diffs[t] * Pinv[t + 1];
  Complex c = Complex::make(p, lo, dims, diffs);
  if (!validate(c)) throw std::logic_error("random_complex produced an invalid complex");
  return c;
}

Complex random_complex(std::uint64_t seed, int max_len, int max_dim, int p) {
  Rng rng(seed);
  ComplexBounds b;
  b.max_len = max_len;
  b.max_dim = max_dim;
  return random_complex(rng, b, p);
}

ChainMap random_chain_map(Rng& rng, const ComplexPtr& a, const ComplexPtr& b) {
  auto basis = chain_map_space(a, b);
  ChainMap f(a, b, 0);
  std::uniform_int_distribution<int> u(0, a->p - 1);
  for (const auto& g : basis) {
    int c = u(rng);
    if (c) f = f + g.scaled(c);
  }
  return f;
}

}  // namespace cxd
