#include "bvs/poly.hpp"

#include <algorithm>
#include <cctype>

namespace bvs {

// ---------- univariate ----------

UniPoly make_uni(std::initializer_list<long> coeffs_low_to_high) {
  std::vector<Integer> c;
  for (long v : coeffs_low_to_high) c.emplace_back(v);
  return UniPoly(std::move(c));
}

Integer content(const UniPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UniPoly primitive_part(const UniPoly& f) {
  if (f.is_zero()) return f;
  Integer g = content(f);
  if (sgn(f.lc()) < 0) g = -g;
  if (g == 1) return f;
  return f.div_scalar(g);
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  UniPoly u = primitive_part(a), v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero() && v.degree() > 0) {
    UniPoly r = primitive_part(prem(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  if (!v.is_zero()) return UniPoly::one();  // a nonzero constant remainder: coprime
  return u;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw PreconditionError("squarefree_part of the zero polynomial");
  if (f.degree() == 0) return UniPoly::one();
  UniPoly g = gcd(f, derivative(f));
  return primitive_part(exact_div(primitive_part(f), g));
}

std::vector<UniPoly> squarefree_factors(const UniPoly& f) {
  if (f.is_zero()) throw PreconditionError("squarefree decomposition of the zero polynomial");
  std::vector<UniPoly> out;
  if (f.degree() == 0) return out;
  UniPoly pf = primitive_part(f);
  UniPoly df = derivative(pf);
  UniPoly a = gcd(pf, df);
  UniPoly b = exact_div(pf, a);
  UniPoly c = exact_div(df, a);
  UniPoly d = c - derivative(b);
  while (b.degree() > 0) {
    UniPoly ai = gcd(b, d);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = c - derivative(b);
    out.push_back(primitive_part(ai));
  }
  return out;
}

Rational eval_rational(const UniPoly& f, const Rational& a) {
  Rational acc = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * a + c[i];
  return acc;
}

Integer eval_scaled(const UniPoly& f, const Rational& a) {
  // sum c_i n^i d^(deg-i), Horner in n with a running power of d
  const auto& c = f.coeffs();
  if (c.empty()) return 0;
  const Integer& n = a.get_num();
  const Integer& d = a.get_den();
  Integer acc = c.back();
  Integer dp = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp *= d;
    acc *= n;
    mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), dp.get_mpz_t());
  }
  return acc;
}

int sign_at_rational(const UniPoly& f, const Rational& a) { return sgn(eval_scaled(f, a)); }

int sign_at_minus_inf(const UniPoly& f) {
  if (f.is_zero()) return 0;
  int s = sgn(f.lc());
  return (f.degree() % 2 == 0) ? s : -s;
}

UniPoly linear_through(const Rational& a) {
  return UniPoly(std::vector<Integer>{-a.get_num(), a.get_den()});
}

Rational cauchy_bound(const UniPoly& f) {
  if (f.degree() <= 0) return Rational(1);
  Integer m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Integer v = abs(f.coeffs()[i]);
    if (v > m) m = v;
  }
  Rational r(m, abs(f.lc()));
  r.canonicalize();
  return r + 1;
}

std::size_t bitsize(const UniPoly& f) {
  std::size_t b = 0;
  for (const auto& c : f.coeffs()) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b + 1;
}

namespace {

void append_term(std::string& out, const Integer& c, const std::string& mono, bool first) {
  int s = sgn(c);
  Integer a = abs(c);
  if (first)
    out += s < 0 ? "-" : "";
  else
    out += s < 0 ? " - " : " + ";
  if (mono.empty()) {
    out += a.get_str();
  } else {
    if (a != 1) out += a.get_str() + "*";
    out += mono;
  }
}

std::string power(const std::string& v, int e) {
  if (e == 0) return "";
  if (e == 1) return v;
  return v + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const UniPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const Integer& c = f.coeffs()[i];
    if (sgn(c) == 0) continue;
    append_term(out, c, power(var, i), first);
    first = false;
  }
  return out;
}

// ---------- bivariate ----------

BivPoly::BivPoly(std::map<Exponent, Integer> terms) : terms_(std::move(terms)) { normalize(); }

void BivPoly::normalize() {
  dx_ = dy_ = -1;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (sgn(it->second) == 0) {
      it = terms_.erase(it);
      continue;
    }
    if (it->first.first < 0 || it->first.second < 0) throw InternalError("negative exponent");
    dx_ = std::max(dx_, it->first.first);
    dy_ = std::max(dy_, it->first.second);
    ++it;
  }
}

BivPoly BivPoly::constant(const Integer& c) { return BivPoly(std::map<Exponent, Integer>{{{0, 0}, c}}); }

BivPoly BivPoly::variable(Var v) {
  return v == Var::x ? BivPoly(std::map<Exponent, Integer>{{{1, 0}, Integer(1)}}) : BivPoly(std::map<Exponent, Integer>{{{0, 1}, Integer(1)}});
}

BivPoly BivPoly::from_uni(const UniPoly& f, Var v) {
  std::map<Exponent, Integer> t;
  for (int i = 0; i <= f.degree(); ++i)
    if (sgn(f.coeffs()[i]) != 0) t[v == Var::x ? Exponent{i, 0} : Exponent{0, i}] = f.coeffs()[i];
  return BivPoly(std::move(t));
}

int BivPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

Integer BivPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

std::size_t BivPoly::bitsize() const {
  std::size_t b = 0;
  for (const auto& [e, c] : terms_) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b + 1;
}

BivPoly BivPoly::operator-() const {
  BivPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BivPoly operator+(const BivPoly& a, const BivPoly& b) {
  auto t = a.terms_;
  for (const auto& [e, c] : b.terms_) t[e] += c;
  return BivPoly(std::move(t));
}

BivPoly operator-(const BivPoly& a, const BivPoly& b) {
  auto t = a.terms_;
  for (const auto& [e, c] : b.terms_) t[e] -= c;
  return BivPoly(std::move(t));
}

BivPoly operator*(const BivPoly& a, const BivPoly& b) {
  std::map<BivPoly::Exponent, Integer> t;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Integer& acc = t[{ea.first + eb.first, ea.second + eb.second}];
      mpz_addmul(acc.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  return BivPoly(std::move(t));
}

RecPoly to_rec(const BivPoly& f, Var main) {
  int dm = f.degree(main);
  if (dm < 0) return RecPoly();
  int doth = f.degree(other(main));
  std::vector<std::vector<Integer>> c(dm + 1, std::vector<Integer>(doth + 1));
  for (const auto& [e, v] : f.terms()) {
    int im = main == Var::x ? e.first : e.second;
    int io = main == Var::x ? e.second : e.first;
    c[im][io] = v;
  }
  std::vector<UniPoly> out;
  out.reserve(c.size());
  for (auto& row : c) out.emplace_back(std::move(row));
  return RecPoly(std::move(out));
}

BivPoly from_rec(const RecPoly& f, Var main) {
  std::map<BivPoly::Exponent, Integer> t;
  for (int i = 0; i <= f.degree(); ++i) {
    const UniPoly& c = f.coeffs()[i];
    for (int j = 0; j <= c.degree(); ++j) {
      if (sgn(c.coeffs()[j]) == 0) continue;
      t[main == Var::x ? BivPoly::Exponent{i, j} : BivPoly::Exponent{j, i}] = c.coeffs()[j];
    }
  }
  return BivPoly(std::move(t));
}

UniPoly coeff_in(const BivPoly& f, Var main, int k) {
  std::vector<Integer> c(std::max(0, f.degree(other(main)) + 1));
  for (const auto& [e, v] : f.terms()) {
    int im = main == Var::x ? e.first : e.second;
    int io = main == Var::x ? e.second : e.first;
    if (im == k) c[io] = v;
  }
  return UniPoly(std::move(c));
}

BivPoly derivative(const BivPoly& f, Var v) {
  std::map<BivPoly::Exponent, Integer> t;
  for (const auto& [e, c] : f.terms()) {
    int k = v == Var::x ? e.first : e.second;
    if (k == 0) continue;
    BivPoly::Exponent ne = v == Var::x ? BivPoly::Exponent{e.first - 1, e.second}
                                       : BivPoly::Exponent{e.first, e.second - 1};
    t[ne] += c * k;
  }
  return BivPoly(std::move(t));
}

BivPoly shear_substitute(const BivPoly& f, const Integer& t) {
  // (x + t y)^i = sum_k binom(i,k) x^k t^(i-k) y^(i-k)
  std::map<BivPoly::Exponent, Integer> out;
  for (const auto& [e, c] : f.terms()) {
    int i = e.first, j = e.second;
    Integer binom = 1;
    Integer tp = 1;  // t^(i-k), built from k = i downwards
    for (int k = i; k >= 0; --k) {
      Integer& acc = out[{k, j + i - k}];
      acc += c * binom * tp;
      // next: binom(i, k-1) = binom(i,k) * k / (i-k+1)
      binom = binom * k / (i - k + 1);
      tp *= t;
    }
  }
  return BivPoly(std::move(out));
}

UniPoly specialize(const BivPoly& f, Var v, const Rational& a) {
  int D = f.degree(v);
  int dothers = f.degree(other(v));
  if (D < 0) return UniPoly();
  const Integer& n = a.get_num();
  const Integer& d = a.get_den();
  std::vector<Integer> npow(D + 1), dpow(D + 1);
  npow[0] = dpow[0] = 1;
  for (int k = 1; k <= D; ++k) {
    npow[k] = npow[k - 1] * n;
    dpow[k] = dpow[k - 1] * d;
  }
  std::vector<Integer> c(dothers + 1);
  for (const auto& [e, coef] : f.terms()) {
    int iv = v == Var::x ? e.first : e.second;
    int io = v == Var::x ? e.second : e.first;
    c[io] += coef * npow[iv] * dpow[D - iv];
  }
  return UniPoly(std::move(c));
}

UniPoly specialize_coeffs(const RecPoly& f, const Rational& a) {
  int D = -1;
  for (const auto& c : f.coeffs()) D = std::max(D, c.degree());
  std::vector<Integer> out(f.coeffs().size());
  if (D < 0) return UniPoly();
  const Integer& d = a.get_den();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const UniPoly& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    Integer v = eval_scaled(c, a);
    if (c.degree() < D) {
      Integer s;
      mpz_pow_ui(s.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(D - c.degree()));
      v *= s;
    }
    out[i] = std::move(v);
  }
  return UniPoly(std::move(out));
}

UniPoly as_uni(const BivPoly& f, Var v) {
  if (f.degree(other(v)) > 0) throw PreconditionError("polynomial is not univariate");
  return coeff_in(f, other(v), 0);
}

UniPoly content_in(const BivPoly& f, Var main) {
  RecPoly r = to_rec(f, main);
  UniPoly g;
  for (const auto& c : r.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

// ---------- parsing and printing ----------

namespace {

class Parser {
 public:
  Parser(std::string_view s, const VarNames& names) : s_(s), names_(names) {}

  BivPoly run() {
    std::map<BivPoly::Exponent, Integer> terms;
    skip_ws();
    if (pos_ >= s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      terms[e] += sign * c;
    }
    return BivPoly(std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1), pos_ + 1);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_factor_start() const {
    if (pos_ >= s_.size()) return false;
    char ch = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(ch)) || std::isalpha(static_cast<unsigned char>(ch)) ||
           ch == '_';
  }
  Integer number() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(std::string(s_.substr(b, pos_ - b)));
  }
  int exponent() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
      Integer e = number();
      if (e > 100000) fail("exponent too large");
      return static_cast<int>(e.get_si());
    }
    return 1;
  }
  std::pair<BivPoly::Exponent, Integer> term() {
    Integer c = 1;
    int ex = 0, ey = 0;
    bool any = false;
    while (true) {
      skip_ws();
      if (any && pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (!at_factor_start()) fail("expected factor after '*'");
      }
      if (!at_factor_start()) break;
      char ch = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        Integer v = number();
        int e = exponent();
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(e));
        c *= p;
      } else {
        std::size_t b = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string name(s_.substr(b, pos_ - b));
        std::size_t save = pos_;
        int e = exponent();
        if (name == names_.x) {
          ex += e;
        } else if (name == names_.y) {
          ey += e;
        } else {
          pos_ = b;
          (void)save;
          fail("unknown variable '" + name + "'");
        }
      }
      any = true;
    }
    if (!any) fail("expected a term");
    return {{ex, ey}, c};
  }

  std::string_view s_;
  const VarNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

BivPoly parse_poly(std::string_view text, const VarNames& names) { return Parser(text, names).run(); }

std::string to_string(const BivPoly& f, const VarNames& names) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<BivPoly::Exponent, Integer>> t(f.terms().begin(), f.terms().end());
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : t) {
    std::string mono = power(names.x, e.first);
    std::string ym = power(names.y, e.second);
    if (!ym.empty()) mono = mono.empty() ? ym : mono + "*" + ym;
    append_term(out, c, mono, first);
    first = false;
  }
  return out;
}

}  // namespace bvs
