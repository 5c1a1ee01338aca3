#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cxd {

// Exponent of (-1) as an integer-valued function of up to four indices i, j, k, l:
//   constant + sum linear[x] x + sum_{x<y} bilinear[x][y] x y + sum binom[x] x(x-1)/2
// All coefficients only matter mod 2.
struct SignExpr {
  int global = 1;
  int constant = 0;
  std::array<int, 4> linear{};
  std::array<std::array<int, 4>, 4> bilinear{};  // only x < y is used
  std::array<int, 4> binom{};

  static SignExpr one() { return {}; }
  static SignExpr minus_one() { SignExpr e; e.global = -1; return e; }
  // Parses "1", "-1", "(-1)^i", "-(-1)^{i+j+1}", "(-1)^{ij}", "(-1)^{i(i-1)/2}", "-(-1)^{i*j+k}".
  // Throws std::invalid_argument on malformed text.
  static SignExpr parse(const std::string& text);

  int eval(const std::array<long long, 4>& x) const;
  int eval(long long i, long long j = 0, long long k = 0, long long l = 0) const { return eval({i, j, k, l}); }
  SignExpr flipped() const { SignExpr e = *this; e.global = -e.global; return e; }
  // Normalizes coefficients to {0,1} so that equal functions compare equal field by field.
  SignExpr normalized() const;
  std::string to_string() const;

  friend bool operator==(const SignExpr& a, const SignExpr& b);
};

enum class Sym { T, Tens1, Tens2, Tp1, Tp2, Asso, C, Ath, Hom1, Hom2, Th1, Th2 };
inline constexpr int kSymCount = 12;
inline constexpr std::array<Sym, kSymCount> kAllSyms = {Sym::T,   Sym::Tens1, Sym::Tens2, Sym::Tp1,
                                                         Sym::Tp2, Sym::Asso,  Sym::C,     Sym::Ath,
                                                         Sym::Hom1, Sym::Hom2, Sym::Th1,  Sym::Th2};

// Short ids used on the command line and in JSON: T 1tens 2tens tp1 tp2 asso c ath 1hom 2hom th1 th2.
std::string sym_name(Sym s);
Sym sym_from_name(const std::string& name);
int sym_arity(Sym s);

class SignAssignment {
 public:
  SignAssignment();  // every symbol +1

  const SignExpr& operator[](Sym s) const { return e_[int(s)]; }
  SignExpr& operator[](Sym s) { return e_[int(s)]; }

  int eps(Sym s, long long i, long long j = 0, long long k = 0) const { return e_[int(s)].eval(i, j, k, 0); }

  nlohmann::json to_json() const;
  static SignAssignment from_json(const nlohmann::json& j);

  friend bool operator==(const SignAssignment& a, const SignAssignment& b);

 private:
  std::array<SignExpr, kSymCount> e_;
};

SignAssignment default_assignment(int a = 1, int b = 1);

// Linear index expression c0 i + c1 j + c2 k + c3 l + c.
struct IndexForm {
  std::array<int, 4> coef{};
  int c = 0;
  long long eval(const std::array<long long, 4>& x) const;
  std::string to_string() const;
};

struct Factor {
  Sym sym;
  std::vector<IndexForm> args;
};

struct Equation {
  std::string id;  // "Table2.row14", "Table2.bid"
  int row = 0;     // 1..21, 22 for the bidual relation
  std::string reason;
  int vars = 2;  // number of free indices among i, j, k, l
  std::vector<Factor> factors;
  SignExpr rhs;  // required value of the product, as a function of the free indices
  std::string to_string() const;
};

// The 21 compatibility rows followed by the bidual relation.
const std::vector<Equation>& equation_table();

struct RowReport {
  std::string id;
  int row = 0;
  std::string reason;
  bool pass = true;
  std::array<long long, 4> counterexample{};  // first failing index tuple
  int lhs = 1, rhs = 1;                       // values at the counterexample
  nlohmann::json to_json(int vars) const;
};

struct TableReport {
  std::vector<RowReport> rows;
  bool all_pass() const;
  nlohmann::json to_json() const;
};

// Exhaustive evaluation of every free index over [lo, hi].
RowReport verify_equation(const Equation& eq, const SignAssignment& s, int lo = -4, int hi = 3);
TableReport verify_table(const SignAssignment& s, int lo = -4, int hi = 3);

// A family is a base assignment plus independent knobs; each knob picks one of its options,
// and an option overwrites some symbols.
struct FamilyKnob {
  std::string name;
  std::vector<std::pair<std::string, std::vector<std::pair<Sym, SignExpr>>>> options;
};

struct Family {
  std::optional<SignAssignment> base;
  std::vector<FamilyKnob> knobs;
};

// The two-parameter family (a, b) as knobs over the default choices.
Family ab_family();

struct SearchHit {
  std::vector<std::string> choice;  // option label per knob
  SignAssignment assignment;
};

// Throws std::length_error("search space exceeded") when the product of knob sizes exceeds cap.
std::vector<SearchHit> search(const Family& fam, long long cap = 1 << 16);

// Parses overrides like "tp1=-1" or "ath=-(-1)^{i(i-1)/2}" and applies them.
void apply_override(SignAssignment& s, const std::string& spec);

}  // namespace cxd
