#include "nichols/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "nichols/kernels.hpp"

namespace nichols {

namespace {

// ---------------------------------------------------------------------------
// expression and condition evaluation

// Recursive descent over the template grammar. Templates are compiled into
// the library, so violations are internal faults, not input errors.
//
//   cond := cmp (('and'|'or') cmp)*        'and' binds tighter than 'or'
//   cmp  := expr ('=='|'!=') expr
//   expr := term (('+'|'-') term)*
//   term := unary (('*'|'/') unary)*
//   unary:= '-' unary | power
//   power:= atom ('^' uint)?
//   atom := '(' expr ')' | uint | param
struct Parser {
  std::string_view s;
  std::size_t pos = 0;
  const Field* f;
  const Params* params;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::logic_error("catalog expression '" + std::string(s) + "': " +
                           what + " at position " + std::to_string(pos));
  }

  void skip() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat(std::string_view t) {
    skip();
    if (s.substr(pos, t.size()) != t) return false;
    pos += t.size();
    return true;
  }
  // Keywords must end at a token boundary so 'or' never eats into a name.
  bool eat_kw(std::string_view kw) {
    skip();
    if (s.substr(pos, kw.size()) != kw) return false;
    std::size_t end = pos + kw.size();
    if (end < s.size() && std::isalnum(static_cast<unsigned char>(s[end])))
      return false;
    pos = end;
    return true;
  }

  unsigned integer() {
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected integer");
    unsigned v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + unsigned(s[pos++] - '0');
    return v;
  }

  Scalar atom() {
    skip();
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      return Scalar::of(*f, Rational(static_cast<long>(integer())));
    if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
      std::string name(1, s[pos++]);
      while (pos < s.size() &&
             std::isalnum(static_cast<unsigned char>(s[pos])))
        name += s[pos++];
      auto it = params->find(name);
      if (it == params->end()) fail("unknown parameter '" + name + "'");
      return it->second;
    }
    fail("expected value");
  }
  Scalar power() {
    Scalar v = atom();
    if (eat('^')) v = v.pow(static_cast<long>(integer()));
    return v;
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    return power();
  }
  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*'))
        v *= unary();
      else if (eat('/'))
        v = v * unary().inv();
      else
        return v;
    }
  }
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      skip();
      if (pos < s.size() && s[pos] == '-') {
        ++pos;
        v -= term();
      } else if (eat('+')) {
        v += term();
      } else {
        return v;
      }
    }
  }

  bool cmp() {
    Scalar l = expr();
    if (eat("==")) return l == expr();
    if (eat("!=")) return l != expr();
    fail("expected comparison");
  }
  bool conj() {
    bool v = cmp();
    while (eat_kw("and")) {
      bool r = cmp();
      v = v && r;
    }
    return v;
  }
  bool cond() {
    bool v = conj();
    while (eat_kw("or")) {
      bool r = conj();
      v = v || r;
    }
    return v;
  }

  void done() {
    skip();
    if (pos != s.size()) fail("trailing input");
  }
};

}  // namespace

Scalar eval_expr(const std::string& text, const Field& f, const Params& params) {
  Parser p{text, 0, &f, &params};
  Scalar v = p.expr();
  p.done();
  return v;
}

bool eval_condition(const std::string& text, const Field& f, const Params& params) {
  Parser p{text, 0, &f, &params};
  bool v = p.cond();
  p.done();
  return v;
}

// ---------------------------------------------------------------------------
// family table

const char* family_str(FamilyId id) {
  switch (id) {
    case FamilyId::R2_1: return "R2_1";
    case FamilyId::R2_2: return "R2_2";
    case FamilyId::R2_2a: return "R2_2a";
    case FamilyId::R2_3: return "R2_3";
    case FamilyId::R1_1: return "R1_1";
    case FamilyId::R1_2: return "R1_2";
    case FamilyId::R1_2a: return "R1_2a";
    case FamilyId::R1_2c: return "R1_2c";
    case FamilyId::R1_2ac: return "R1_2ac";
    case FamilyId::R1_3: return "R1_3";
    case FamilyId::R1_4: return "R1_4";
    case FamilyId::R0_1: return "R0_1";
  }
  throw std::logic_error("family_str: bad id");
}

std::optional<FamilyId> family_id(const std::string& name) {
  for (const auto& fs : families())
    if (fs.name == name) return fs.id;
  return std::nullopt;
}

const std::vector<FamilySpec>& families() {
  static const std::vector<FamilySpec> table = [] {
    std::vector<FamilySpec> v;
    v.push_back({FamilyId::R2_1, "R2_1", OperatorKind::R_MATRIX,
                 {"k", "p", "q"},
                 {"k != 0", "p != 0", "q != 0", "k^2 != p*q"},
                 "k^2 == -1 or p*q == 1",
                 {"k^2", "0", "0", "0",
                  "0", "k*p", "k^2 - p*q", "0",
                  "0", "0", "k*q", "0",
                  "0", "0", "0", "k^2"},
                 {"(k^2 == -1 or p*q == 1) and ord(k^2) finite",
                  "(k^2 == -1 or p*q == 1) and ord(k^2) not found",
                  "k^2 != -1 and p*q != 1"}});
    v.push_back({FamilyId::R2_2, "R2_2", OperatorKind::R_MATRIX,
                 {"k", "p", "q"},
                 {"k != 0", "p != 0", "q != 0", "k^2 != p*q"},
                 "k^2 == -1 or p*q == 1",
                 {"k^2", "0", "0", "0",
                  "0", "k*p", "k^2 - p*q", "0",
                  "0", "0", "k*q", "0",
                  "0", "0", "0", "-p*q"},
                 {"k^2 == -1 or p*q == 1",
                  "k^2 != -1 and p*q != 1"}});
    v.push_back({FamilyId::R2_2a, "R2_2a", OperatorKind::BRAIDING,
                 {"k", "p", "q"},
                 {"k != 0", "p != 0", "q != 0", "k^2 != p*q"},
                 "k^2 == -1 or p*q == 1",
                 {"k^2", "0", "0", "0",
                  "0", "k^2 - p*q", "k*q", "0",
                  "0", "k*p", "0", "0",
                  "0", "0", "0", "-p*q"},
                 {"k^2 == -1 or p*q == 1",
                  "k^2 != -1 and p*q != 1"}});
    v.push_back({FamilyId::R2_3, "R2_3", OperatorKind::R_MATRIX,
                 {"k", "p", "q", "s"},
                 {"k != 0", "p != 0 or q != 0 or s != 0"},
                 "k^2 == 1",
                 {"k", "p", "q", "s",
                  "0", "k", "0", "q",
                  "0", "0", "k", "p",
                  "0", "0", "0", "k"},
                 {"k == -1 and p == -q and s == q^2",
                  "k == -1 and p == -q and s != q^2",
                  "k == -1 and p != -q",
                  "k == 1",
                  "k != 1 and k != -1"}});
    v.push_back({FamilyId::R1_1, "R1_1", OperatorKind::R_MATRIX,
                 {"p", "q"},
                 {"p != 0", "q != 0", "p^2 != q^2"},
                 "2*p^2 == -1 or 2*q^2 == 1",
                 {"p^2 - q^2 + 2*p*q", "0", "0", "p^2 - q^2",
                  "0", "p^2 + q^2", "p^2 - q^2", "0",
                  "0", "p^2 - q^2", "p^2 + q^2", "0",
                  "p^2 - q^2", "0", "0", "p^2 - q^2 - 2*p*q"},
                 {"2*p^2 == -1 and 2*q^2 == 1",
                  "2*q^2 == 1 and ord(-2*p*q) >= 3",
                  "2*q^2 == 1 and ord(-2*p*q) not found",
                  "2*p^2 == -1 and ord(-2*p*q) >= 3",
                  "2*p^2 == -1 and ord(-2*p*q) not found",
                  "2*p^2 != -1 and 2*q^2 != 1"}});
    v.push_back({FamilyId::R1_2, "R1_2", OperatorKind::R_MATRIX,
                 {"p", "q", "k"},
                 {"p != 0", "q != 0", "p != q or k != 0"},
                 "p == -1 or q == 1",
                 {"p", "0", "0", "k",
                  "0", "p", "p - q", "0",
                  "0", "0", "q", "0",
                  "0", "0", "0", "-q"},
                 {"p == -1 and q == 1 and k == 0",
                  "p == -1 and ord(-q) >= 3",
                  "p == -1 otherwise",
                  "q == 1 and ord(p) >= 3",
                  "q == 1 and ord(p) not found",
                  "p != -1 and q != 1"}});
    v.push_back({FamilyId::R1_2a, "R1_2a", OperatorKind::BRAIDING,
                 {"p", "q", "k"},
                 {"p != 0", "q != 0", "p != q or k != 0"},
                 "p == -1 or q == 1",
                 {"p", "0", "0", "0",
                  "0", "p - q", "q", "0",
                  "0", "p", "0", "0",
                  "k", "0", "0", "-q"},
                 {"p == -1 and q == 1 and k == 0",
                  "p == -1 and q == 1 and k != 0",
                  "p == -1 and ord(-q) >= 3",
                  "p == -1 and ord(-q) not found",
                  "q == 1 and ord(p) >= 3",
                  "q == 1 and ord(p) not found",
                  "p != -1 and q != 1"}});
    v.push_back({FamilyId::R1_2c, "R1_2c", OperatorKind::BRAIDING,
                 {"p", "q", "k"},
                 {"p != 0", "q != 0", "p != q or k != 0"},
                 "p == -1 or q == 1",
                 {"p", "0", "0", "k",
                  "0", "p - q", "p", "0",
                  "0", "q", "0", "0",
                  "0", "0", "0", "-q"},
                 {"p == -1 and q == 1 and k == 0",
                  "p == -1 and ord(-q) >= 3",
                  "p == -1 otherwise",
                  "q == 1 and ord(p) >= 3",
                  "q == 1 and ord(p) not found",
                  "p != -1 and q != 1"}});
    v.push_back({FamilyId::R1_2ac, "R1_2ac", OperatorKind::BRAIDING,
                 {"p", "q", "k"},
                 {"p != 0", "q != 0", "p != q or k != 0"},
                 "p == -1 or q == 1",
                 {"p", "0", "0", "0",
                  "0", "0", "p", "0",
                  "0", "q", "p - q", "0",
                  "k", "0", "0", "-q"},
                 {"p == -1 and q == 1 and k == 0",
                  "p == -1 and q == 1 and k != 0",
                  "p == -1 and ord(-q) >= 3",
                  "p == -1 and ord(-q) not found",
                  "q == 1 and ord(p) >= 3",
                  "q == 1 and ord(p) not found",
                  "p != -1 and q != 1"}});
    v.push_back({FamilyId::R1_3, "R1_3", OperatorKind::R_MATRIX,
                 {"k", "p", "q"},
                 {"k != 0", "p != 0 or q != 0"},
                 "k^4 == 1",
                 {"k^2", "k*p", "-k*p", "p*q",
                  "0", "k^2", "0", "k*q",
                  "0", "0", "k^2", "-k*q",
                  "0", "0", "0", "k^2"},
                 {"k^2 == -1",
                  "k^2 == 1",
                  "k^4 != 1"}});
    v.push_back({FamilyId::R1_4, "R1_4", OperatorKind::R_MATRIX,
                 {"k", "p", "q"},
                 {"k != 0", "p != 0", "q != 0"},
                 "k == -1 or p*q == 1",
                 {"0", "0", "0", "p",
                  "0", "0", "k", "0",
                  "0", "k", "0", "0",
                  "q", "0", "0", "0"},
                 {"k == -1 and ord(p*q) finite",
                  "k == -1 and ord(p*q) not found",
                  "p*q == 1 and ord(k) >= 3",
                  "p*q == 1 and ord(k) not found",
                  "k != -1 and p*q != 1"}});
    v.push_back({FamilyId::R0_1, "R0_1", OperatorKind::R_MATRIX,
                 {"k"},
                 {"k != 0"},
                 "k^2 == 1",
                 {"k", "0", "0", "k",
                  "0", "-k", "0", "0",
                  "0", "0", "-k", "0",
                  "0", "0", "0", "k"},
                 {"k == 1",
                  "k == -1",
                  "k^2 != 1"}});
    return v;
  }();
  return table;
}

const FamilySpec& family(FamilyId id) {
  for (const auto& fs : families())
    if (fs.id == id) return fs;
  throw std::logic_error("family: bad id");
}

// ---------------------------------------------------------------------------
// exponent ladders

std::string ladder_text(const PBWLadder& ladder) {
  std::string gens;
  for (const auto& g : ladder.gens) {
    if (!gens.empty()) gens += " ";
    gens += g.name + "(" + std::to_string(g.degree) + ")";
  }
  if (ladder.clauses.empty()) return gens + ": free";
  std::string body;
  for (const auto& clause : ladder.clauses) {
    if (!body.empty()) body += " or ";
    std::string conj;
    for (const auto& a : clause) {
      if (!conj.empty()) conj += " and ";
      std::string lhs;
      for (std::size_t i = 0; i < a.coef.size(); ++i) {
        if (a.coef[i] == 0) continue;
        long mag = a.coef[i] < 0 ? -a.coef[i] : a.coef[i];
        std::string term = "e" + std::to_string(i + 1);
        if (mag != 1) term = std::to_string(mag) + "*" + term;
        if (lhs.empty())
          lhs = (a.coef[i] < 0 ? "-" : "") + term;
        else
          lhs += (a.coef[i] < 0 ? " - " : " + ") + term;
      }
      if (lhs.empty()) lhs = "0";
      conj += lhs + " <= " + std::to_string(a.bound);
    }
    body += clause.size() > 1 && ladder.clauses.size() > 1 ? "(" + conj + ")"
                                                           : conj;
  }
  return gens + ": " + body;
}

namespace {

bool clause_admits(const std::vector<LadderAtom>& clause,
                   const std::vector<unsigned>& e) {
  for (const auto& a : clause) {
    long lhs = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      lhs += a.coef.at(i) * static_cast<long>(e[i]);
    if (lhs > a.bound) return false;
  }
  return true;
}

bool ladder_admits(const PBWLadder& l, const std::vector<unsigned>& e) {
  if (l.clauses.empty()) return true;
  for (const auto& clause : l.clauses)
    if (clause_admits(clause, e)) return true;
  return false;
}

void count_rec(const PBWLadder& l, std::size_t idx, unsigned remaining,
               std::vector<unsigned>& e, std::uint64_t& acc) {
  if (idx == l.gens.size()) {
    if (remaining == 0 && ladder_admits(l, e)) ++acc;
    return;
  }
  unsigned d = l.gens[idx].degree;
  for (unsigned k = 0; k * d <= remaining; ++k) {
    e[idx] = k;
    count_rec(l, idx + 1, remaining - k * d, e, acc);
  }
  e[idx] = 0;
}

PBWLadder finish(PBWLadder l) {
  l.text = ladder_text(l);
  return l;
}

// x1^e1 x2^e2 with independent upper bounds; bound < 0 leaves a side free.
PBWLadder box_ladder(long b1, long b2) {
  PBWLadder l;
  l.gens = {{"x1", 1}, {"x2", 1}};
  std::vector<LadderAtom> clause;
  if (b1 >= 0) clause.push_back({{1, 0}, b1});
  if (b2 >= 0) clause.push_back({{0, 1}, b2});
  if (!clause.empty()) l.clauses.push_back(std::move(clause));
  return finish(l);
}

PBWLadder free_ladder2() { return box_ladder(-1, -1); }

}  // namespace

std::uint64_t pbw_count(const PBWLadder& ladder, unsigned degree) {
  for (const auto& g : ladder.gens)
    if (g.degree == 0) throw std::logic_error("pbw_count: degree-0 generator");
  std::vector<unsigned> e(ladder.gens.size(), 0);
  std::uint64_t acc = 0;
  count_rec(ladder, 0, degree, e, acc);
  return acc;
}

// ---------------------------------------------------------------------------
// row resolution

namespace {

Word wd(std::initializer_list<int> letters) {
  Word w;
  for (int l : letters) w.push_back(static_cast<unsigned char>(l - 1));
  return w;
}

Word wpow(int letter, unsigned e) {
  return Word(e, static_cast<unsigned char>(letter - 1));
}

// (x2 x1)^reps with optional prefix x1 / suffix x2 letters, for the
// staircase relations below.
Word walt(bool lead1, unsigned reps, bool trail2) {
  Word w;
  if (lead1) w.push_back(0);
  for (unsigned i = 0; i < reps; ++i) {
    w.push_back(1);
    w.push_back(0);
  }
  if (trail2) w.push_back(1);
  return w;
}

TensorElem lin(const Field& f,
               std::initializer_list<std::pair<Word, Scalar>> terms) {
  unsigned deg = static_cast<unsigned>(terms.begin()->first.size());
  TensorElem u(f, 2, deg);
  for (const auto& [w, c] : terms) u.add_term(w, c);
  return u;
}

TensorElem mono(const Field& f, Word w) {
  return TensorElem::monomial(f, 2, std::move(w));
}

std::string bound_note(const std::string& what, unsigned bound) {
  return "ord(" + what + ") not found within bound " + std::to_string(bound) +
         "; treated as infinite";
}

ExpectedProfile rows_r2_1(const Field& f, const Params& P, unsigned bound) {
  ExpectedProfile pr;
  const Scalar &k = P.at("k"), &p = P.at("p"), &q = P.at("q");
  Scalar one = Scalar::one(f);
  Scalar k2 = k * k;
  if (k2 != -one && p * q != one) {
    pr.row = "k^2 != -1 and p*q != 1";
    return pr;
  }
  TensorElem comm = lin(f, {{wd({1, 2}), one}, {wd({2, 1}), -(k * q)}});
  UnityOrder N = root_of_unity_order(k2, bound);
  if (N.is_finite()) {
    unsigned n = N.value();
    if (n < 2)
      throw std::logic_error("R2_1: ord(k^2) = 1 inside the quadratic locus");
    pr.row = family(FamilyId::R2_1).rows[0];
    pr.relations = {comm, mono(f, wpow(1, n)), mono(f, wpow(2, n))};
    pr.ladder = box_ladder(n - 1, n - 1);
    pr.total_dim = std::uint64_t(n) * n;
    pr.growth = GrowthTag::FINITE;
  } else {
    pr.row = family(FamilyId::R2_1).rows[1];
    pr.relations = {comm};
    pr.ladder = free_ladder2();
    pr.growth = GrowthTag::LINEAR;
    pr.notes.push_back(bound_note("k^2", bound));
  }
  return pr;
}

ExpectedProfile rows_r2_2(const Field& f, const Params& P, unsigned bound,
                          bool variant_a) {
  ExpectedProfile pr;
  const FamilySpec& fs = family(variant_a ? FamilyId::R2_2a : FamilyId::R2_2);
  const Scalar &k = P.at("k"), &p = P.at("p"), &q = P.at("q");
  Scalar one = Scalar::one(f);
  Scalar k2 = k * k, mpq = -(p * q);
  if (k2 != -one && p * q != one) {
    pr.row = fs.rows[1];
    return pr;
  }
  pr.row = fs.rows[0];
  TensorElem comm =
      variant_a ? lin(f, {{wd({2, 1}), one}, {wd({1, 2}), -(k * p)}})
                : lin(f, {{wd({1, 2}), one}, {wd({2, 1}), -(k * q)}});
  pr.relations = {comm};
  // Power relation orders; order 1 means the letter never truncates.
  std::optional<unsigned> n1, n2;
  if (k2 == one) {
    pr.notes.push_back("ord(k^2) = 1: no power relation on x1");
  } else {
    UnityOrder o = root_of_unity_order(k2, bound);
    if (o.is_finite())
      n1 = o.value();
    else
      pr.notes.push_back(bound_note("k^2", bound));
  }
  if (mpq == one) {
    pr.notes.push_back("ord(-p*q) = 1: no power relation on x2");
  } else {
    UnityOrder o = root_of_unity_order(mpq, bound);
    if (o.is_finite())
      n2 = o.value();
    else
      pr.notes.push_back(bound_note("-p*q", bound));
  }
  if (n1) pr.relations.push_back(mono(f, wpow(1, *n1)));
  if (n2) pr.relations.push_back(mono(f, wpow(2, *n2)));
  pr.ladder = box_ladder(n1 ? long(*n1) - 1 : -1, n2 ? long(*n2) - 1 : -1);
  if (n1 && n2) {
    pr.total_dim = std::uint64_t(*n1) * *n2;
    pr.growth = GrowthTag::FINITE;
  } else if (n1 || n2) {
    pr.growth = GrowthTag::BOUNDED;
  } else {
    pr.growth = GrowthTag::LINEAR;
  }
  return pr;
}

ExpectedProfile rows_r2_3(const Field& f, const Params& P, unsigned) {
  ExpectedProfile pr;
  const FamilySpec& fs = family(FamilyId::R2_3);
  const Scalar &k = P.at("k"), &p = P.at("p"), &q = P.at("q"), &s = P.at("s");
  Scalar one = Scalar::one(f);
  TensorElem x1sq = mono(f, wpow(1, 2));
  if (k == one) {
    pr.row = fs.rows[3];
    Scalar half = Scalar::of(f, Rational(1, 2));
    pr.relations = {lin(f, {{wd({1, 1}), (q - p) * half},
                            {wd({1, 2}), -one},
                            {wd({2, 1}), one}})};
    pr.ladder = free_ladder2();
    pr.growth = GrowthTag::LINEAR;
    return pr;
  }
  if (k != -one) {
    pr.row = fs.rows[4];
    return pr;
  }
  if (p == -q) {
    if (s == q * q) {
      pr.row = fs.rows[0];
      pr.relations = {x1sq,
                      lin(f, {{wd({2, 2}), one}, {wd({1, 2}), -q}}),
                      lin(f, {{wd({1, 2}), one}, {wd({2, 1}), one}})};
      pr.ladder = box_ladder(1, 1);
      pr.total_dim = 4;
      pr.growth = GrowthTag::FINITE;
    } else {
      pr.row = fs.rows[1];
      pr.relations = {x1sq, lin(f, {{wd({1, 2}), one}, {wd({2, 1}), one}})};
      pr.ladder = box_ladder(1, -1);
      pr.growth = GrowthTag::BOUNDED;
    }
    return pr;
  }
  pr.row = fs.rows[2];
  TensorElem cubic = lin(f, {{wd({2, 2, 1}), one},
                             {wd({1, 2, 1}), p - q},
                             {wd({1, 2, 2}), -one}});
  pr.relations = {x1sq, cubic};
  PBWLadder l;
  l.gens = {{"x1", 1}, {"x21", 2}, {"x2", 1}};
  l.clauses = {{{{1, 0, 0}, 1}}};
  pr.ladder = finish(l);
  pr.growth = GrowthTag::LINEAR;
  return pr;
}

ExpectedProfile rows_r1_1(const Field& f, const Params& P, unsigned bound) {
  ExpectedProfile pr;
  const FamilySpec& fs = family(FamilyId::R1_1);
  const Scalar &p = P.at("p"), &q = P.at("q");
  Scalar one = Scalar::one(f), two = Scalar::of(f, 2);
  Scalar a = p * p - q * q;  // nonzero on the domain
  bool row_p = two * p * p == -one, row_q = two * q * q == one;
  if (!row_p && !row_q) {
    pr.row = fs.rows[5];
    return pr;
  }
  Scalar c0 = (a + two * p * q + one) * a.inv();
  TensorElem r1 = lin(f, {{wd({1, 1}), one}, {wd({2, 2}), -c0}});
  TensorElem r2 = lin(f, {{wd({1, 2}), one}, {wd({2, 1}), -one}});
  TensorElem r3 = lin(f, {{wd({1, 2}), one}, {wd({2, 1}), one}});
  if (row_p && row_q) {
    pr.row = fs.rows[0];
    pr.relations = {r1, r2, r3};
    PBWLadder l;
    l.gens = {{"x1", 1}, {"x2", 1}};
    l.clauses = {{{{1, 0}, 1}, {{0, 1}, 0}}, {{{1, 0}, 0}, {{0, 1}, 2}}};
    pr.ladder = finish(l);
    pr.total_dim = 4;
    pr.growth = GrowthTag::FINITE;
    return pr;
  }
  const TensorElem& parity_rel = row_q ? r2 : r3;
  UnityOrder o = root_of_unity_order(-(two * p * q), bound);
  if (o.is_finite()) {
    unsigned N = o.value();
    if (N < 3 || N == 4)
      throw std::invalid_argument(
          "no matching row: ord(-2*p*q) = " + std::to_string(N) +
          " is outside every guard");
    pr.row = row_q ? fs.rows[1] : fs.rows[3];
    if (N % 2 == 1) {
      pr.relations = {r1, parity_rel, mono(f, wpow(2, N))};
      pr.ladder = box_ladder(1, long(N) - 1);
      pr.total_dim = 2u * N;
    } else {
      // Two chains x1 x2^a and x2^a; the total is their combined length N.
      Word r4 = wpow(1, 1);
      for (unsigned i = 0; i < (N - 2) / 2; ++i) r4.push_back(1);
      pr.relations = {r1, parity_rel, mono(f, std::move(r4))};
      PBWLadder l;
      l.gens = {{"x1", 1}, {"x2", 1}};
      l.clauses = {{{{1, 0}, 1}, {{-1, 0}, -1}, {{0, 1}, long(N - 2) / 2 - 1}},
                   {{{1, 0}, 0}, {{0, 1}, long(N) / 2}}};
      pr.ladder = finish(l);
      pr.total_dim = N;
      pr.notes.push_back("even order: the total equals the ladder count");
    }
    pr.growth = GrowthTag::FINITE;
  } else {
    pr.row = row_q ? fs.rows[2] : fs.rows[4];
    pr.relations = {r1, parity_rel};
    pr.ladder = box_ladder(1, -1);
    pr.growth = GrowthTag::BOUNDED;
    pr.notes.push_back(bound_note("-2*p*q", bound));
  }
  return pr;
}

// The four R1_2 variants share their row structure; what differs is the
// braiding template, the two named relations and which letter truncates.
ExpectedProfile rows_r1_2(const Field& f, const Params& P, unsigned bound,
                          FamilyId id) {
  ExpectedProfile pr;
  const FamilySpec& fs = family(id);
  const Scalar &p = P.at("p"), &q = P.at("q"), &k = P.at("k");
  Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  bool variant_a = id == FamilyId::R1_2a || id == FamilyId::R1_2ac;
  // r1: the mixed quadratic; orientation differs per variant.
  TensorElem r1 = [&] {
    switch (id) {
      case FamilyId::R1_2:
        return lin(f, {{wd({1, 2}), one}, {wd({2, 1}), -q}});
      case FamilyId::R1_2a:
        return lin(f, {{wd({2, 1}), one}, {wd({1, 2}), -p}});
      case FamilyId::R1_2c:
        return lin(f, {{wd({2, 1}), one}, {wd({1, 2}), -q}});
      default:
        return lin(f, {{wd({1, 2}), one}, {wd({2, 1}), -p}});
    }
  }();
  auto r2 = [&]() -> TensorElem {
    if (variant_a)
      return lin(f, {{wd({1, 1}), one - q}, {wd({2, 2}), -k}});
    // p != -1 wherever this row is reachable
    return lin(f, {{wd({2, 2}), one}, {wd({1, 1}), -(k * (p + one).inv())}});
  };
  TensorElem x1sq = mono(f, wpow(1, 2));
  TensorElem x2sq = mono(f, wpow(2, 2));

  if (p == -one) {
    if (q == one) {
      if (k == zero) {
        pr.row = fs.rows[0];
        pr.relations = {x1sq, x2sq, r1};
        pr.ladder = box_ladder(1, 1);
        pr.total_dim = 4;
        pr.growth = GrowthTag::FINITE;
        return pr;
      }
      if (variant_a) {
        pr.row = fs.rows[1];
        pr.relations = {r1, r2()};
        pr.ladder = box_ladder(-1, 1);
        pr.growth = GrowthTag::BOUNDED;
        return pr;
      }
      pr.row = fs.rows[2];  // otherwise
      pr.relations = {x1sq, r1};
      pr.ladder = box_ladder(1, -1);
      pr.growth = GrowthTag::BOUNDED;
      return pr;
    }
    UnityOrder o = root_of_unity_order(-q, bound);
    if (o.is_finite() && o.value() >= 3) {
      unsigned N = o.value();
      pr.row = fs.rows[variant_a ? 2 : 1];
      if (variant_a)
        pr.relations = {mono(f, wpow(2, N)), r1, r2()};
      else
        pr.relations = {x1sq, mono(f, wpow(2, N)), r1};
      pr.ladder = box_ladder(1, long(N) - 1);
      pr.total_dim = 2u * N;
      pr.growth = GrowthTag::FINITE;
      return pr;
    }
    if (variant_a) {
      if (o.is_finite())
        throw std::invalid_argument(
            "no matching row: ord(-q) = " + std::to_string(o.value()) +
            " is outside every guard");
      pr.row = fs.rows[3];
      pr.relations = {r1, r2()};
      pr.ladder = box_ladder(1, -1);
      pr.growth = GrowthTag::BOUNDED;
      pr.notes.push_back(bound_note("-q", bound));
      return pr;
    }
    pr.row = fs.rows[2];  // otherwise
    pr.relations = {x1sq, r1};
    pr.ladder = box_ladder(1, -1);
    pr.growth = GrowthTag::BOUNDED;
    if (!o.is_finite()) pr.notes.push_back(bound_note("-q", bound));
    return pr;
  }
  if (q == one) {
    UnityOrder o = root_of_unity_order(p, bound);
    if (o.is_finite() && o.value() >= 3) {
      unsigned M = o.value();
      pr.row = fs.rows[variant_a ? 4 : 3];
      if (variant_a)
        pr.relations = {mono(f, wpow(1, M)), x2sq, r1};
      else
        pr.relations = {mono(f, wpow(1, M)), r1, r2()};
      pr.ladder = box_ladder(long(M) - 1, 1);
      pr.total_dim = 2u * M;
      pr.growth = GrowthTag::FINITE;
      return pr;
    }
    if (o.is_finite())
      throw std::invalid_argument("no matching row: ord(p) = " +
                                  std::to_string(o.value()) +
                                  " is outside every guard");
    pr.row = fs.rows[variant_a ? 5 : 4];
    if (variant_a) {
      pr.relations = {x2sq, r1};
      pr.ladder = box_ladder(-1, 1);
    } else {
      pr.relations = {r1, r2()};
      // The two one-sided caps count the same in every degree; each variant
      // keeps the side its chain is written on.
      pr.ladder = id == FamilyId::R1_2c ? box_ladder(-1, 1) : box_ladder(1, -1);
    }
    pr.growth = GrowthTag::BOUNDED;
    pr.notes.push_back(bound_note("p", bound));
    return pr;
  }
  pr.row = fs.rows.back();
  return pr;
}

ExpectedProfile rows_r1_3(const Field& f, const Params& P, unsigned) {
  ExpectedProfile pr;
  const FamilySpec& fs = family(FamilyId::R1_3);
  const Scalar &k = P.at("k"), &p = P.at("p"), &q = P.at("q");
  Scalar one = Scalar::one(f);
  Scalar k2 = k * k;
  if (k2 == -one) {
    pr.row = fs.rows[0];
    pr.relations = {mono(f, wpow(1, 2)),
                    lin(f, {{wd({2, 2}), one}, {wd({1, 2}), -(k * q)}}),
                    lin(f, {{wd({1, 2}), one}, {wd({2, 1}), one}})};
    pr.ladder = box_ladder(1, 1);
    pr.total_dim = 4;
    pr.growth = GrowthTag::FINITE;
  } else if (k2 == one) {
    pr.row = fs.rows[1];
    pr.relations = {lin(
        f, {{wd({1, 2}), one}, {wd({2, 1}), -one}, {wd({1, 1}), k * p}})};
    pr.ladder = free_ladder2();
    pr.growth = GrowthTag::LINEAR;
  } else {
    pr.row = fs.rows[2];
  }
  return pr;
}

ExpectedProfile rows_r1_4(const Field& f, const Params& P, unsigned bound) {
  ExpectedProfile pr;
  const FamilySpec& fs = family(FamilyId::R1_4);
  const Scalar &k = P.at("k"), &p = P.at("p"), &q = P.at("q");
  Scalar one = Scalar::one(f);
  if (k == -one) {
    UnityOrder o = root_of_unity_order(p * q, bound);
    TensorElem m12 = mono(f, wd({1, 2})), m21 = mono(f, wd({2, 1}));
    if (o.is_finite()) {
      unsigned N = o.value();
      pr.row = fs.rows[0];
      pr.relations = {m12, m21,
                      lin(f, {{wpow(1, 2 * N), one},
                              {wpow(2, 2 * N), (-q).pow(long(N))}})};
      PBWLadder l;
      l.gens = {{"x1", 1}, {"x2", 1}};
      l.clauses = {{{{0, 1}, 0}, {{1, 0}, long(2 * N)}},
                   {{{1, 0}, 0}, {{0, 1}, long(2 * N) - 1}}};
      pr.ladder = finish(l);
      pr.total_dim = 4u * N;
      pr.growth = GrowthTag::FINITE;
    } else {
      pr.row = fs.rows[1];
      pr.relations = {m12, m21};
      PBWLadder l;
      l.gens = {{"x1", 1}, {"x2", 1}};
      l.clauses = {{{{0, 1}, 0}}, {{{1, 0}, 0}}};
      pr.ladder = finish(l);
      pr.growth = GrowthTag::BOUNDED;
      pr.notes.push_back(bound_note("p*q", bound));
    }
    return pr;
  }
  if (p * q == one) {
    TensorElem r3 = lin(f, {{wd({1, 1}), one}, {wd({2, 2}), -q}});
    UnityOrder o = root_of_unity_order(k, bound);
    if (o.is_finite()) {
      unsigned N = o.value();
      if (N < 3)
        throw std::invalid_argument(
            "no matching row: ord(k) = " + std::to_string(N) +
            " is outside every guard");
      pr.row = fs.rows[2];
      // Alternating-word relations of degree N.
      TensorElem r1N = N % 2 ? mono(f, walt(true, N / 2, false))
                             : mono(f, walt(false, N / 2, false));
      TensorElem r2N = N % 2 ? mono(f, walt(false, N / 2, true))
                             : mono(f, walt(true, N / 2 - 1, true));
      pr.relations = {r3, r1N, r2N};
      PBWLadder l;
      l.gens = {{"x1", 1}, {"x2x1", 2}, {"x2", 1}};
      l.clauses = {{{{1, 0, 0}, long(N) - 1},
                    {{0, 2, 1}, long(N) - 1},
                    {{0, 0, 1}, 1}}};
      pr.ladder = finish(l);
      pr.total_dim = std::uint64_t(N) * N;
      pr.growth = GrowthTag::FINITE;
      pr.notes.push_back(
          "ladder chosen to reproduce the degree counts 1,2,...,N,...,2,1");
    } else {
      pr.row = fs.rows[3];
      pr.relations = {r3};
      PBWLadder l;
      l.gens = {{"x1", 1}, {"x2x1", 2}, {"x2", 1}};
      l.clauses = {{{{0, 0, 1}, 1}}};
      pr.ladder = finish(l);
      pr.growth = GrowthTag::LINEAR;
      pr.notes.push_back(bound_note("k", bound));
    }
    return pr;
  }
  pr.row = fs.rows[4];
  return pr;
}

ExpectedProfile rows_r0_1(const Field& f, const Params& P, unsigned) {
  ExpectedProfile pr;
  const FamilySpec& fs = family(FamilyId::R0_1);
  const Scalar& k = P.at("k");
  Scalar one = Scalar::one(f);
  if (k == one) {
    pr.row = fs.rows[0];
    pr.relations = {lin(f, {{wd({1, 2}), one}, {wd({2, 1}), one}})};
    pr.ladder = free_ladder2();
    pr.growth = GrowthTag::LINEAR;
  } else if (k == -one) {
    pr.row = fs.rows[1];
    pr.relations = {mono(f, wpow(1, 2)),
                    lin(f, {{wd({1, 2}), one}, {wd({2, 1}), -one}})};
    pr.ladder = box_ladder(1, -1);
    pr.growth = GrowthTag::BOUNDED;
    pr.notes.push_back(
        "x1 exponent capped at 1; every positive degree has dimension 2");
  } else {
    pr.row = fs.rows[2];
  }
  return pr;
}

ExpectedProfile resolve_rows(FamilyId id, const Field& f, const Params& P,
                             unsigned bound) {
  switch (id) {
    case FamilyId::R2_1: return rows_r2_1(f, P, bound);
    case FamilyId::R2_2: return rows_r2_2(f, P, bound, false);
    case FamilyId::R2_2a: return rows_r2_2(f, P, bound, true);
    case FamilyId::R2_3: return rows_r2_3(f, P, bound);
    case FamilyId::R1_1: return rows_r1_1(f, P, bound);
    case FamilyId::R1_2:
    case FamilyId::R1_2a:
    case FamilyId::R1_2c:
    case FamilyId::R1_2ac: return rows_r1_2(f, P, bound, id);
    case FamilyId::R1_3: return rows_r1_3(f, P, bound);
    case FamilyId::R1_4: return rows_r1_4(f, P, bound);
    case FamilyId::R0_1: return rows_r0_1(f, P, bound);
  }
  throw std::logic_error("resolve_rows: bad id");
}

}  // namespace

// ---------------------------------------------------------------------------
// instantiation

BraidingSpec instantiate_braiding(FamilyId id, unsigned conductor,
                                  const Params& params) {
  const FamilySpec& fs = family(id);
  const Field& f = Field::of(conductor);
  for (const auto& [name, value] : params) {
    if (std::find(fs.params.begin(), fs.params.end(), name) ==
        fs.params.end())
      throw std::invalid_argument("family " + fs.name +
                                  ": unknown parameter '" + name + "'");
    if (value.conductor() != conductor)
      throw std::invalid_argument(
          "family " + fs.name + ": parameter '" + name + "' has conductor " +
          std::to_string(value.conductor()) + ", expected " +
          std::to_string(conductor));
  }
  for (const auto& name : fs.params)
    if (params.find(name) == params.end())
      throw std::invalid_argument("family " + fs.name +
                                  ": missing parameter '" + name + "'");
  for (const auto& cond : fs.domain)
    if (!eval_condition(cond, f, params))
      throw std::invalid_argument("family " + fs.name +
                                  ": domain violation: " + cond);
  Matrix m(f, 4, 4);
  for (unsigned r = 0; r < 4; ++r)
    for (unsigned c = 0; c < 4; ++c)
      m.at(r, c) = eval_expr(fs.entries[r * 4 + c], f, params);
  return canonical_braiding(
      {2, conductor, fs.kind, BasisOrdering::PAPER, std::move(m)});
}

Instantiated instantiate(FamilyId id, unsigned conductor, const Params& params,
                         unsigned order_bound) {
  BraidingSpec c = instantiate_braiding(id, conductor, params);
  ExpectedProfile pr =
      resolve_rows(id, Field::of(conductor), params, order_bound);
  return {&family(id), conductor, params, std::move(c), std::move(pr)};
}

// ---------------------------------------------------------------------------
// verification

namespace {

std::string dims_str(const std::vector<std::uint64_t>& dims) {
  std::string s;
  for (auto d : dims) {
    if (!s.empty()) s += " ";
    s += std::to_string(d);
  }
  return s;
}

// Span comparison over the degree-2 coefficient space: expected must be
// independent, match the kernel dimension, and lie inside the kernel span.
// Together that is equality of the two spans.
CheckResult quad_span_check(const Field& f,
                            const std::vector<TensorElem>& expected,
                            const std::vector<TensorElem>& computed) {
  CheckResult out;
  out.name = "quadratic_span";
  out.expected = std::to_string(expected.size()) + " relations";
  if (expected.empty()) {
    out.computed = std::to_string(computed.size()) + " relations";
    out.pass = computed.empty();
    return out;
  }
  unsigned cols = 4;
  Matrix exp_rows(f, static_cast<unsigned>(expected.size()), cols);
  for (unsigned i = 0; i < expected.size(); ++i) {
    auto v = expected[i].dense();
    for (unsigned j = 0; j < cols; ++j) exp_rows.at(i, j) = v[j];
  }
  unsigned exp_rank = rank(exp_rows);
  Matrix stacked(f, static_cast<unsigned>(expected.size() + computed.size()),
                 cols);
  for (unsigned i = 0; i < expected.size(); ++i)
    for (unsigned j = 0; j < cols; ++j)
      stacked.at(i, j) = exp_rows.at(i, j);
  for (unsigned i = 0; i < computed.size(); ++i) {
    auto v = computed[i].dense();
    for (unsigned j = 0; j < cols; ++j)
      stacked.at(static_cast<unsigned>(expected.size()) + i, j) = v[j];
  }
  unsigned joint_rank = rank(stacked);
  bool independent = exp_rank == expected.size();
  bool same_size = computed.size() == expected.size();
  bool same_span = joint_rank == exp_rank;
  out.pass = independent && same_size && same_span;
  std::string verdict = out.pass          ? "spans match"
                        : !independent    ? "expected set is dependent"
                        : !same_size      ? "dimension mismatch"
                                          : "spans differ";
  out.computed = std::to_string(computed.size()) + " relations, " + verdict;
  return out;
}

}  // namespace

VerifyReport verify_profile(const Instantiated& inst, unsigned max_degree) {
  auto t0 = std::chrono::steady_clock::now();
  const Field& f = Field::of(inst.conductor);
  const BraidingSpec& c = inst.braiding;
  VerifyReport rep;
  rep.family = inst.spec->name;
  rep.row = inst.profile.row;
  rep.conductor = inst.conductor;
  for (const auto& [name, value] : inst.params)
    rep.params.emplace_back(name, value.str());

  auto add_bool = [&rep](const char* name, bool ok) {
    rep.checks.push_back({name, "true", ok ? "true" : "false", ok});
  };
  add_bool("braid_equation", satisfies_braid_eq(c.op, c.dim));
  add_bool("qybe", satisfies_qybe(mat_mul(tau_matrix(f, c.dim), c.op), c.dim));
  add_bool("invertible", is_invertible(c.op));
  add_bool("rigid", is_rigid(c));

  std::vector<TensorElem> expected_quad;
  for (const auto& r : inst.profile.relations)
    if (r.degree() == 2) expected_quad.push_back(r);
  rep.checks.push_back(quad_span_check(f, expected_quad, quadratic_relations(c)));

  for (const auto& r : inst.profile.relations) {
    bool ok = verify_relation(c, r);
    rep.checks.push_back({"relation[" + r.str() + "]", "vanishes",
                          ok ? "vanishes" : "does not vanish", ok});
  }

  HilbertWindow h = hilbert_series(c, max_degree);
  rep.dims = h.dims;
  if (inst.profile.ladder) {
    std::vector<std::uint64_t> want(max_degree + 1);
    for (unsigned m = 0; m <= max_degree; ++m)
      want[m] = pbw_count(*inst.profile.ladder, m);
    rep.checks.push_back({"hilbert_dims", dims_str(want), dims_str(h.dims),
                          want == h.dims});
  }
  if (inst.profile.total_dim) {
    std::uint64_t sum = std::accumulate(h.dims.begin(), h.dims.end(),
                                        std::uint64_t{0});
    bool closed = max_degree >= 1 && h.dims[max_degree] == 0 &&
                  h.dims[max_degree - 1] == 0;
    bool ok = closed && sum == *inst.profile.total_dim;
    rep.checks.push_back({"total_dimension",
                          std::to_string(*inst.profile.total_dim),
                          std::to_string(sum) +
                              (closed ? ", window closed" : ", window open"),
                          ok});
  }
  rep.growth = max_degree >= 6 ? growth_str(growth_classify(h).tag) : "UNKNOWN";
  if (inst.profile.growth && max_degree >= 6) {
    std::string want = growth_str(*inst.profile.growth);
    rep.checks.push_back({"growth", want, rep.growth, want == rep.growth});
  }

  auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rep;
}

VerifyReport verify_profile(FamilyId id, unsigned conductor,
                            const Params& params, unsigned max_degree,
                            unsigned order_bound) {
  return verify_profile(instantiate(id, conductor, params, order_bound),
                        max_degree);
}

// ---------------------------------------------------------------------------
// witness suite

const std::vector<Witness>& witness_suite() {
  static const std::vector<Witness> rows = {
      {FamilyId::R2_1, 4, {{"k", "z"}, {"p", "2"}, {"q", "3"}}, 6,
       "R2_1 order-2 square"},
      {FamilyId::R2_1, 3, {{"k", "z^2"}, {"p", "2"}, {"q", "1/2"}}, 8,
       "R2_1 unit product, order 3"},
      {FamilyId::R2_1, 1, {{"k", "2"}, {"p", "3"}, {"q", "5"}}, 3,
       "R2_1 generic"},
      {FamilyId::R2_2, 4, {{"k", "z"}, {"p", "z"}, {"q", "1"}}, 6,
       "R2_2 both letters truncate"},
      {FamilyId::R2_2, 4, {{"k", "z"}, {"p", "2"}, {"q", "3"}}, 6,
       "R2_2 one letter truncates"},
      {FamilyId::R2_2, 1, {{"k", "2"}, {"p", "3"}, {"q", "1/3"}}, 6,
       "R2_2 second letter truncates"},
      {FamilyId::R2_2a, 4, {{"k", "z"}, {"p", "z"}, {"q", "1"}}, 6,
       "R2_2a both letters truncate"},
      {FamilyId::R2_3, 1, {{"k", "1"}, {"p", "0"}, {"q", "1"}, {"s", "0"}}, 8,
       "R2_3 unipotent"},
      {FamilyId::R2_3, 1, {{"k", "-1"}, {"p", "0"}, {"q", "1"}, {"s", "0"}}, 8,
       "R2_3 signed unipotent"},
      {FamilyId::R2_3, 1, {{"k", "-1"}, {"p", "-1"}, {"q", "1"}, {"s", "1"}},
       6, "R2_3 four dimensional"},
      {FamilyId::R2_3, 1, {{"k", "-1"}, {"p", "-1"}, {"q", "1"}, {"s", "2"}},
       6, "R2_3 bounded"},
      {FamilyId::R1_1, 8,
       {{"p", "1/2*z+1/2*z^3"}, {"q", "1/2*z+1/2*z^7"}}, 6,
       "R1_1 four dimensional"},
      {FamilyId::R1_1, 24,
       {{"p", "-1/2*z^5-1/2*z^11"}, {"q", "1/2*z^3+1/2*z^21"}}, 6,
       "R1_1 odd order chain"},
      {FamilyId::R1_1, 24,
       {{"p", "-1/2*z-1/2*z^7"}, {"q", "1/2*z^3+1/2*z^21"}}, 6,
       "R1_1 even order chains"},
      {FamilyId::R1_1, 8, {{"p", "1"}, {"q", "1/2*z+1/2*z^7"}}, 6,
       "R1_1 bounded"},
      {FamilyId::R1_2, 1, {{"p", "-1"}, {"q", "1"}, {"k", "0"}}, 6,
       "R1_2 four dimensional"},
      {FamilyId::R1_2, 4, {{"p", "-1"}, {"q", "z"}, {"k", "1"}}, 6,
       "R1_2 order-4 chain"},
      {FamilyId::R1_2, 1, {{"p", "-1"}, {"q", "2"}, {"k", "1"}}, 6,
       "R1_2 bounded, first letter"},
      {FamilyId::R1_2, 3, {{"p", "z"}, {"q", "1"}, {"k", "1"}}, 6,
       "R1_2 order-3 chain"},
      {FamilyId::R1_2, 1, {{"p", "2"}, {"q", "1"}, {"k", "1"}}, 6,
       "R1_2 bounded, no truncation"},
      {FamilyId::R1_2a, 1, {{"p", "-1"}, {"q", "1"}, {"k", "0"}}, 6,
       "R1_2a four dimensional"},
      {FamilyId::R1_2a, 1, {{"p", "-1"}, {"q", "1"}, {"k", "1"}}, 6,
       "R1_2a bounded with mixing"},
      {FamilyId::R1_2a, 4, {{"p", "-1"}, {"q", "z"}, {"k", "1"}}, 6,
       "R1_2a order-4 chain"},
      {FamilyId::R1_2c, 1, {{"p", "-1"}, {"q", "1"}, {"k", "0"}}, 6,
       "R1_2c four dimensional"},
      {FamilyId::R1_2ac, 1, {{"p", "-1"}, {"q", "1"}, {"k", "0"}}, 6,
       "R1_2ac four dimensional"},
      {FamilyId::R1_3, 4, {{"k", "z"}, {"p", "1"}, {"q", "1"}}, 6,
       "R1_3 four dimensional"},
      {FamilyId::R1_3, 1, {{"k", "1"}, {"p", "1"}, {"q", "0"}}, 6,
       "R1_3 linear growth"},
      {FamilyId::R1_4, 1, {{"k", "-1"}, {"p", "2"}, {"q", "-1/2"}}, 6,
       "R1_4 order-2 product"},
      {FamilyId::R1_4, 1, {{"k", "-1"}, {"p", "2"}, {"q", "3"}}, 6,
       "R1_4 bounded"},
      {FamilyId::R1_4, 4, {{"k", "z"}, {"p", "2"}, {"q", "1/2"}}, 8,
       "R1_4 staircase, order 4"},
      {FamilyId::R1_4, 1, {{"k", "2"}, {"p", "1/3"}, {"q", "3"}}, 6,
       "R1_4 linear growth"},
      {FamilyId::R0_1, 1, {{"k", "1"}}, 8, "R0_1 symmetric"},
      {FamilyId::R0_1, 1, {{"k", "-1"}}, 8, "R0_1 skew"},
  };
  return rows;
}

// ---------------------------------------------------------------------------
// quadratic sweep

SweepResult sweep_quadratic(FamilyId id,
                            const std::map<std::string, std::string>& fixed,
                            unsigned order_bound) {
  const FamilySpec& fs = family(id);
  for (const auto& [name, text] : fixed) {
    (void)text;
    if (std::find(fs.params.begin(), fs.params.end(), name) ==
        fs.params.end())
      throw std::invalid_argument("sweep: unknown parameter '" + name + "'");
  }
  std::string varying;
  for (const auto& name : fs.params)
    if (fixed.find(name) == fixed.end()) {
      if (!varying.empty())
        throw std::invalid_argument("sweep: parameters '" + varying +
                                    "' and '" + name + "' are both unset");
      varying = name;
    }
  if (varying.empty())
    throw std::invalid_argument("sweep: every parameter is fixed");

  SweepResult out;
  out.id = id;
  out.varying = varying;
  for (unsigned n = 1; n <= order_bound; ++n) {
    const Field& f = Field::of(n);
    for (unsigned j = 0; j < n; ++j) {
      if (std::gcd(j, n) != 1) continue;  // n = 1 keeps j = 0
      std::string value = j == 0   ? "1"
                          : j == 1 ? "z"
                                   : "z^" + std::to_string(j);
      SweepSample smp;
      smp.conductor = n;
      smp.power = j;
      smp.value = value;
      Params P;
      P.emplace(varying, parse_scalar(value, n));
      for (const auto& [name, text] : fixed)
        P.emplace(name, parse_scalar(text, n));
      smp.in_domain = true;
      for (const auto& cond : fs.domain)
        smp.in_domain = smp.in_domain && eval_condition(cond, f, P);
      if (smp.in_domain) {
        BraidingSpec c = instantiate_braiding(id, n, P);
        smp.has_quadratic = !quadratic_relations(c).empty();
        smp.predicted = eval_condition(fs.quad_condition, f, P);
        smp.match = smp.has_quadratic == smp.predicted;
        out.all_match = out.all_match && smp.match;
      }
      out.samples.push_back(std::move(smp));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// catalog dump

std::string catalog_json() {
  nlohmann::json doc;
  doc["families"] = nlohmann::json::array();
  for (const auto& fs : families()) {
    nlohmann::json j;
    j["name"] = fs.name;
    j["kind"] = fs.kind == OperatorKind::R_MATRIX ? "R" : "c";
    j["params"] = fs.params;
    j["domain"] = fs.domain;
    j["quad_condition"] = fs.quad_condition;
    auto entries = nlohmann::json::array();
    for (unsigned r = 0; r < 4; ++r) {
      auto row = nlohmann::json::array();
      for (unsigned c = 0; c < 4; ++c) row.push_back(fs.entries[r * 4 + c]);
      entries.push_back(row);
    }
    j["entries"] = entries;
    j["rows"] = fs.rows;
    doc["families"].push_back(j);
  }
  return doc.dump(2);
}

}  // namespace nichols
