#include "cxd/signs.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cxd {

namespace {

const char kVarNames[4] = {'i', 'j', 'k', 'l'};

int var_index(char c) {
  for (int v = 0; v < 4; ++v)
    if (kVarNames[v] == c) return v;
  return -1;
}

int mod2(long long x) { return int(((x % 2) + 2) % 2); }

std::string strip_spaces(const std::string& s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r += c;
  return r;
}

// Exponent grammar: term (('+'|'-') term)*, term = digits | v | v v | v '*' v | v '(' v '-1)/2'.
void parse_exponent(const std::string& s, SignExpr& e) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad sign exponent '" + s + "': " + why);
  };
  if (s.empty()) fail("empty");
  while (pos < s.size()) {
    if (s[pos] == '+' || s[pos] == '-') ++pos;  // parity ignores the sign of a term
    if (pos >= s.size()) fail("dangling operator");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
      e.constant += mod2(v);
      continue;
    }
    int x = var_index(c);
    if (x < 0) fail(std::string("unknown index '") + c + "'");
    ++pos;
    if (pos < s.size() && s[pos] == '(') {
      std::string want = std::string("(") + c + "-1)/2";
      if (s.compare(pos, want.size(), want) != 0) fail("expected " + want);
      pos += want.size();
      e.binom[x] ^= 1;
      continue;
    }
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos < s.size() && var_index(s[pos]) >= 0) {
      int y = var_index(s[pos++]);
      if (x == y)
        e.linear[x] ^= 1;  // x^2 has the parity of x
      else
        e.bilinear[std::min(x, y)][std::max(x, y)] ^= 1;
      continue;
    }
    e.linear[x] ^= 1;
  }
}

IndexForm parse_index(const std::string& text) {
  IndexForm f;
  std::string s = strip_spaces(text);
  std::size_t pos = 0;
  int sign = 1;
  while (pos < s.size()) {
    if (s[pos] == '+') { sign = 1; ++pos; continue; }
    if (s[pos] == '-') { sign = -1; ++pos; continue; }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      int v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
      f.c += sign * v;
    } else {
      int x = var_index(s[pos++]);
      if (x < 0) throw std::invalid_argument("bad index form " + text);
      f.coef[x] += sign;
    }
    sign = 1;
  }
  return f;
}

Factor fac(Sym s, std::initializer_list<const char*> args) {
  Factor f{s, {}};
  for (const char* a : args) f.args.push_back(parse_index(a));
  if (int(f.args.size()) != sym_arity(s)) throw std::logic_error("arity mismatch in equation table");
  return f;
}

Equation eq(int row, int vars, std::string reason, int rhs, std::vector<Factor> fs) {
  Equation e;
  e.id = "Table2.row" + std::to_string(row);
  e.row = row;
  e.reason = std::move(reason);
  e.vars = vars;
  e.factors = std::move(fs);
  e.rhs = rhs > 0 ? SignExpr::one() : SignExpr::minus_one();
  return e;
}

std::vector<Equation> build_table() {
  using S = Sym;
  std::vector<Equation> t;
  t.push_back(eq(1, 2, "tensor product is a complex", -1,
                 {fac(S::Tens1, {"i", "j"}), fac(S::Tens1, {"i", "j-1"}), fac(S::Tens2, {"i", "j"}), fac(S::Tens2, {"i-1", "j"})}));
  t.push_back(eq(2, 3, "associator commutes with the first differential", 1,
                 {fac(S::Tens1, {"i", "j"}), fac(S::Tens1, {"i", "j+k"}), fac(S::Tens1, {"i+j", "k"}),
                  fac(S::Asso, {"i", "j", "k"}), fac(S::Asso, {"i-1", "j", "k"})}));
  t.push_back(eq(3, 3, "associator commutes with the middle differential", 1,
                 {fac(S::Tens2, {"i", "j"}), fac(S::Tens1, {"j", "k"}), fac(S::Tens1, {"i+j", "k"}),
                  fac(S::Tens2, {"i", "j+k"}), fac(S::Asso, {"i", "j", "k"}), fac(S::Asso, {"i", "j-1", "k"})}));
  t.push_back(eq(4, 3, "associator commutes with the last differential", 1,
                 {fac(S::Tens2, {"i+j", "k"}), fac(S::Tens2, {"j", "k"}), fac(S::Tens2, {"i", "j+k"}),
                  fac(S::Asso, {"i", "j", "k"}), fac(S::Asso, {"i", "j", "k-1"})}));
  t.push_back(eq(5, 4, "pentagon", 1,
                 {fac(S::Asso, {"i", "j", "k"}), fac(S::Asso, {"i", "j+k", "l"}), fac(S::Asso, {"j", "k", "l"}),
                  fac(S::Asso, {"i", "j", "k+l"}), fac(S::Asso, {"i+j", "k", "l"})}));
  t.push_back(eq(6, 2, "symmetry commutes with the first differential", 1,
                 {fac(S::Tens1, {"i", "j"}), fac(S::Tens2, {"j", "i"}), fac(S::C, {"i", "j"}), fac(S::C, {"i-1", "j"})}));
  t.push_back(eq(7, 2, "symmetry commutes with the second differential", 1,
                 {fac(S::Tens1, {"j", "i"}), fac(S::Tens2, {"i", "j"}), fac(S::C, {"i", "j"}), fac(S::C, {"i", "j-1"})}));
  t.push_back(eq(8, 2, "symmetry is self-inverse", 1, {fac(S::C, {"i", "j"}), fac(S::C, {"j", "i"})}));
  t.push_back(eq(9, 3, "hexagon", 1,
                 {fac(S::C, {"j", "k"}), fac(S::C, {"i", "k"}), fac(S::C, {"i+j", "k"}), fac(S::Asso, {"i", "j", "k"}),
                  fac(S::Asso, {"k", "i", "j"}), fac(S::Asso, {"i", "k", "j"})}));
  t.push_back(eq(10, 2, "left shift map commutes with the first differential", 1,
                 {fac(S::T, {"i"}), fac(S::T, {"i+j"}), fac(S::Tens1, {"i", "j"}), fac(S::Tens1, {"i+1", "j"}),
                  fac(S::Tp1, {"i", "j"}), fac(S::Tp1, {"i-1", "j"})}));
  t.push_back(eq(11, 2, "left shift map commutes with the second differential", 1,
                 {fac(S::T, {"i+j"}), fac(S::Tens2, {"i", "j"}), fac(S::Tens2, {"i+1", "j"}), fac(S::Tp1, {"i", "j"}),
                  fac(S::Tp1, {"i", "j-1"})}));
  t.push_back(eq(12, 2, "right shift map commutes with the second differential", 1,
                 {fac(S::T, {"j"}), fac(S::T, {"i+j"}), fac(S::Tens2, {"i", "j"}), fac(S::Tens2, {"i", "j+1"}),
                  fac(S::Tp2, {"i", "j"}), fac(S::Tp2, {"i", "j-1"})}));
  t.push_back(eq(13, 2, "right shift map commutes with the first differential", 1,
                 {fac(S::T, {"i+j"}), fac(S::Tens1, {"i", "j"}), fac(S::Tens1, {"i", "j+1"}), fac(S::Tp2, {"i", "j"}),
                  fac(S::Tp2, {"i-1", "j"})}));
  t.push_back(eq(14, 2, "the two shift maps anticommute", -1,
                 {fac(S::Tp1, {"i", "j"}), fac(S::Tp1, {"i", "j+1"}), fac(S::Tp2, {"i", "j"}), fac(S::Tp2, {"i+1", "j"})}));
  t.push_back(eq(15, 3, "left shift map and associator", 1,
                 {fac(S::Tp1, {"i", "j"}), fac(S::Tp1, {"i+j", "k"}), fac(S::Tp1, {"i", "j+k"}), fac(S::Asso, {"i", "j", "k"}),
                  fac(S::Asso, {"i+1", "j", "k"})}));
  t.push_back(eq(16, 3, "middle shift and associator", 1,
                 {fac(S::Tp2, {"i", "j"}), fac(S::Tp1, {"i+j", "k"}), fac(S::Tp2, {"i", "j+k"}), fac(S::Tp1, {"j", "k"}),
                  fac(S::Asso, {"i", "j", "k"}), fac(S::Asso, {"i", "j+1", "k"})}));
  t.push_back(eq(17, 3, "right shift map and associator", 1,
                 {fac(S::Tp2, {"i+j", "k"}), fac(S::Tp2, {"i", "j+k"}), fac(S::Tp2, {"j", "k"}), fac(S::Asso, {"i", "j", "k"}),
                  fac(S::Asso, {"i", "j", "k+1"})}));
  t.push_back(eq(18, 2, "shift maps and symmetry", 1,
                 {fac(S::Tp1, {"i", "j"}), fac(S::Tp2, {"j", "i"}), fac(S::C, {"i", "j"}), fac(S::C, {"i+1", "j"})}));
  t.push_back(eq(19, 2, "internal hom is a complex", -1,
                 {fac(S::Hom1, {"i", "j"}), fac(S::Hom1, {"i", "j-1"}), fac(S::Hom2, {"i", "j"}), fac(S::Hom2, {"i+1", "j"})}));
  t.push_back(eq(20, 2, "adjunction respects the first differential", -1,
                 {fac(S::Tens1, {"i", "j"}), fac(S::Tens2, {"i", "j"}), fac(S::Hom1, {"j-1", "i+j-1"}), fac(S::Ath, {"i", "j-1"}),
                  fac(S::Ath, {"i-1", "j"})}));
  t.push_back(eq(21, 2, "adjunction respects the second differential", 1,
                 {fac(S::Tens1, {"i", "j"}), fac(S::Hom2, {"j", "i+j"}), fac(S::Ath, {"i-1", "j"}), fac(S::Ath, {"i", "j"})}));
  Equation bid;
  bid.id = "Table2.bid";
  bid.row = 22;
  bid.reason = "bidual sign matches the classical double-dual convention";
  bid.vars = 2;
  bid.factors = {fac(S::Ath, {"j-i", "i"}), fac(S::Ath, {"i", "j-i"}), fac(S::C, {"j-i", "i"})};
  bid.rhs = SignExpr::parse("(-1)^{j(j-1)/2}");
  t.push_back(bid);
  return t;
}

}  // namespace

SignExpr SignExpr::parse(const std::string& text) {
  std::string s = strip_spaces(text);
  SignExpr e;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    if (s[pos] == '-') e.global = -1;
    ++pos;
  }
  std::string rest = s.substr(pos);
  if (rest == "1") return e;
  const std::string base = "(-1)^";
  if (rest.compare(0, base.size(), base) != 0) throw std::invalid_argument("bad sign expression '" + text + "'");
  rest = rest.substr(base.size());
  if (!rest.empty() && rest.front() == '{') {
    if (rest.back() != '}') throw std::invalid_argument("unbalanced braces in '" + text + "'");
    rest = rest.substr(1, rest.size() - 2);
  }
  parse_exponent(rest, e);
  return e.normalized();
}

int SignExpr::eval(const std::array<long long, 4>& x) const {
  long long ex = constant;
  for (int a = 0; a < 4; ++a) {
    ex += linear[a] * mod2(x[a]);
    long long xa = x[a];
    if (binom[a]) ex += mod2(xa * (xa - 1) / 2);
    for (int b = a + 1; b < 4; ++b)
      if (bilinear[a][b]) ex += mod2(x[a]) * mod2(x[b]);
  }
  return mod2(ex) ? -global : global;
}

SignExpr SignExpr::normalized() const {
  SignExpr e = *this;
  // A constant odd exponent is folded into the global sign.
  e.global = (global < 0 ? -1 : 1) * (mod2(constant) ? -1 : 1);
  e.constant = 0;
  for (int a = 0; a < 4; ++a) {
    e.linear[a] = mod2(linear[a]);
    e.binom[a] = mod2(binom[a]);
    for (int b = 0; b < 4; ++b) e.bilinear[a][b] = b > a ? mod2(bilinear[a][b]) : 0;
  }
  return e;
}

bool operator==(const SignExpr& x, const SignExpr& y) {
  SignExpr a = x.normalized(), b = y.normalized();
  return a.global == b.global && a.constant == b.constant && a.linear == b.linear && a.bilinear == b.bilinear &&
         a.binom == b.binom;
}

std::string SignExpr::to_string() const {
  SignExpr e = normalized();
  std::vector<std::string> terms;
  for (int a = 0; a < 4; ++a)
    if (e.binom[a]) terms.push_back(std::string(1, kVarNames[a]) + "(" + kVarNames[a] + "-1)/2");
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (e.bilinear[a][b]) terms.push_back(std::string(1, kVarNames[a]) + kVarNames[b]);
  for (int a = 0; a < 4; ++a)
    if (e.linear[a]) terms.push_back(std::string(1, kVarNames[a]));
  std::string head = e.global < 0 ? "-" : "";
  if (terms.empty()) return head + "1";
  std::string ex;
  for (std::size_t t = 0; t < terms.size(); ++t) ex += (t ? "+" : "") + terms[t];
  return head + "(-1)^{" + ex + "}";
}

std::string sym_name(Sym s) {
  static const char* names[kSymCount] = {"T", "1tens", "2tens", "tp1", "tp2", "asso",
                                         "c", "ath",   "1hom",  "2hom", "th1", "th2"};
  return names[int(s)];
}

Sym sym_from_name(const std::string& name) {
  for (Sym s : kAllSyms)
    if (sym_name(s) == name) return s;
  throw std::invalid_argument("unknown sign symbol '" + name + "'");
}

int sym_arity(Sym s) {
  if (s == Sym::T) return 1;
  if (s == Sym::Asso) return 3;
  return 2;
}

SignAssignment::SignAssignment() = default;

nlohmann::json SignAssignment::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (Sym s : kAllSyms) j[sym_name(s)] = e_[int(s)].to_string();
  return j;
}

SignAssignment SignAssignment::from_json(const nlohmann::json& j) {
  SignAssignment s;
  for (Sym x : kAllSyms) s[x] = SignExpr::parse(j.at(sym_name(x)).get<std::string>());
  return s;
}

bool operator==(const SignAssignment& a, const SignAssignment& b) {
  for (Sym s : kAllSyms)
    if (!(a[s] == b[s])) return false;
  return true;
}

SignAssignment default_assignment(int a, int b) {
  if ((a != 1 && a != -1) || (b != 1 && b != -1)) throw std::invalid_argument("sign parameters must be +1 or -1");
  SignAssignment s;
  s[Sym::T] = SignExpr::minus_one();
  s[Sym::Tens1] = SignExpr::one();
  s[Sym::Tens2] = SignExpr::parse("(-1)^i");
  s[Sym::Tp1] = SignExpr::one();
  s[Sym::Tp2] = SignExpr::parse("(-1)^i");
  s[Sym::Asso] = SignExpr::one();
  s[Sym::C] = SignExpr::parse("(-1)^{ij}");
  s[Sym::Ath] = SignExpr::parse("(-1)^{i(i-1)/2}");
  s[Sym::Hom1] = SignExpr::one();
  s[Sym::Hom2] = SignExpr::parse("(-1)^{i+j+1}");
  s[Sym::Th1] = SignExpr::one();
  s[Sym::Th2] = SignExpr::parse("(-1)^{i+j}");
  if (a < 0)
    for (Sym x : {Sym::Tp1, Sym::Tp2, Sym::Th2}) s[x] = s[x].flipped();
  if (b < 0) s[Sym::Ath] = s[Sym::Ath].flipped();
  return s;
}

long long IndexForm::eval(const std::array<long long, 4>& x) const {
  long long v = c;
  for (int a = 0; a < 4; ++a) v += coef[a] * x[a];
  return v;
}

std::string IndexForm::to_string() const {
  std::string s;
  for (int a = 0; a < 4; ++a) {
    if (!coef[a]) continue;
    if (coef[a] < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    if (std::abs(coef[a]) != 1) s += std::to_string(std::abs(coef[a]));
    s += kVarNames[a];
  }
  if (c || s.empty()) s += (c >= 0 && !s.empty() ? "+" : "") + std::to_string(c);
  return s;
}

std::string Equation::to_string() const {
  std::string s;
  for (const auto& f : factors) {
    s += "e[" + sym_name(f.sym) + "](";
    for (std::size_t a = 0; a < f.args.size(); ++a) s += (a ? "," : "") + f.args[a].to_string();
    s += ") ";
  }
  return s + "= " + rhs.to_string();
}

const std::vector<Equation>& equation_table() {
  static const std::vector<Equation> table = build_table();
  return table;
}

nlohmann::json RowReport::to_json(int vars) const {
  nlohmann::json j = {{"id", id}, {"row", row}, {"reason", reason}, {"verdict", pass ? "PASS" : "FAIL"}};
  if (!pass) {
    nlohmann::json ce = nlohmann::json::object();
    for (int a = 0; a < vars; ++a) ce[std::string(1, kVarNames[a])] = counterexample[a];
    j["counterexample"] = ce;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
  }
  return j;
}

bool TableReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

nlohmann::json TableReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  const auto& t = equation_table();
  for (std::size_t r = 0; r < rows.size(); ++r) arr.push_back(rows[r].to_json(r < t.size() ? t[r].vars : 4));
  return {{"rows", arr}, {"all_pass", all_pass()}};
}

RowReport verify_equation(const Equation& eq, const SignAssignment& s, int lo, int hi) {
  RowReport rep;
  rep.id = eq.id;
  rep.row = eq.row;
  rep.reason = eq.reason;
  std::array<long long, 4> x{};
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == eq.vars) {
      int lhs = 1;
      for (const auto& f : eq.factors) {
        std::array<long long, 4> args{};
        for (std::size_t a = 0; a < f.args.size(); ++a) args[a] = f.args[a].eval(x);
        lhs *= s[f.sym].eval(args);
      }
      int rhs = eq.rhs.eval(x);
      if (lhs != rhs) {
        rep.pass = false;
        rep.counterexample = x;
        rep.lhs = lhs;
        rep.rhs = rhs;
        return false;
      }
      return true;
    }
    for (long long t = lo; t <= hi; ++t) {
      x[v] = t;
      if (!rec(v + 1)) return false;
    }
    x[v] = 0;
    return true;
  };
  rec(0);
  return rep;
}

TableReport verify_table(const SignAssignment& s, int lo, int hi) {
  TableReport r;
  for (const auto& eq : equation_table()) r.rows.push_back(verify_equation(eq, s, lo, hi));
  return r;
}

Family ab_family() {
  Family f;
  f.base = default_assignment(1, 1);
  SignAssignment flipped_a = default_assignment(-1, 1);
  SignAssignment flipped_b = default_assignment(1, -1);
  f.knobs.push_back({"a",
                     {{"+1", {}},
                      {"-1",
                       {{Sym::Tp1, flipped_a[Sym::Tp1]}, {Sym::Tp2, flipped_a[Sym::Tp2]}, {Sym::Th2, flipped_a[Sym::Th2]}}}}});
  f.knobs.push_back({"b", {{"+1", {}}, {"-1", {{Sym::Ath, flipped_b[Sym::Ath]}}}}});
  return f;
}

std::vector<SearchHit> search(const Family& fam, long long cap) {
  std::vector<SearchHit> hits;
  if (!fam.base) return hits;
  long long total = 1;
  for (const auto& k : fam.knobs) {
    if (k.options.empty()) return hits;
    total *= static_cast<long long>(k.options.size());
    if (total > cap) throw std::length_error("search space exceeded");
  }
  std::vector<std::size_t> pick(fam.knobs.size(), 0);
  for (long long n = 0; n < total; ++n) {
    long long rem = n;
    for (std::size_t k = fam.knobs.size(); k-- > 0;) {
      pick[k] = std::size_t(rem % static_cast<long long>(fam.knobs[k].options.size()));
      rem /= static_cast<long long>(fam.knobs[k].options.size());
    }
    SearchHit h{{}, *fam.base};
    for (std::size_t k = 0; k < fam.knobs.size(); ++k) {
      const auto& opt = fam.knobs[k].options[pick[k]];
      h.choice.push_back(fam.knobs[k].name + "=" + opt.first);
      for (const auto& [sym, e] : opt.second) h.assignment[sym] = e;
    }
    if (verify_table(h.assignment).all_pass()) hits.push_back(std::move(h));
  }
  return hits;
}

void apply_override(SignAssignment& s, const std::string& spec) {
  auto eqpos = spec.find('=');
  if (eqpos == std::string::npos) throw std::invalid_argument("override must look like sym=EXPR: " + spec);
  s[sym_from_name(strip_spaces(spec.substr(0, eqpos)))] = SignExpr::parse(spec.substr(eqpos + 1));
}

}  // namespace cxd
