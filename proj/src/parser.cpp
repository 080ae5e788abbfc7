#include <cctype>
#include <map>
#include <string>

#include "whs/surface.hpp"

namespace whs {

namespace {

// Sparse exact polynomial in x, y, z used only while parsing.
struct Mono {
  int i, j, k;
  bool operator<(const Mono& o) const {
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return k < o.k;
  }
};

using Poly3 = std::map<Mono, GaussianRational>;

void add_term(Poly3& p, const Mono& m, const GaussianRational& c) {
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly3 add(const Poly3& a, const Poly3& b) {
  Poly3 r = a;
  for (const auto& [m, c] : b) add_term(r, m, c);
  return r;
}

Poly3 neg(const Poly3& a) {
  Poly3 r;
  for (const auto& [m, c] : a) r.emplace(m, -c);
  return r;
}

Poly3 mul(const Poly3& a, const Poly3& b) {
  Poly3 r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b)
      add_term(r, Mono{ma.i + mb.i, ma.j + mb.j, ma.k + mb.k}, ca * cb);
  return r;
}

bool constant_value(const Poly3& a, GaussianRational& out) {
  if (a.empty()) {
    out = GaussianRational();
    return true;
  }
  if (a.size() == 1) {
    const auto& [m, c] = *a.begin();
    if (m.i == 0 && m.j == 0 && m.k == 0) {
      out = c;
      return true;
    }
  }
  return false;
}

std::string mono_str(const Mono& m) {
  std::string s;
  auto piece = [&s](const char* v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  piece("x", m.i);
  piece("y", m.j);
  piece("z", m.k);
  return s.empty() ? "1" : s;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  Poly3 run() {
    Poly3 p = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly3 expr() {
    Poly3 p = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        p = add(p, term());
      } else if (c == '-') {
        ++pos_;
        p = add(p, neg(term()));
      } else {
        return p;
      }
    }
  }

  Poly3 term() {
    Poly3 p = unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        p = mul(p, unary());
      } else if (c == '/') {
        std::size_t at = pos_;
        ++pos_;
        Poly3 d = unary();
        GaussianRational val;
        if (!constant_value(d, val))
          throw ParseError("division by a non-constant expression", at);
        if (val.is_zero()) throw ParseError("division by zero", at);
        GaussianRational inv = val.inverse();
        Poly3 r;
        for (const auto& [m, coef] : p) r.emplace(m, coef * inv);
        p = std::move(r);
      } else {
        return p;
      }
    }
  }

  Poly3 unary() {
    int sign = 1;
    while (true) {
      char c = peek();
      if (c == '-') {
        sign = -sign;
        ++pos_;
      } else if (c == '+') {
        ++pos_;
      } else {
        break;
      }
    }
    Poly3 p = power();
    return sign < 0 ? neg(p) : p;
  }

  Poly3 power() {
    Poly3 base = atom();
    if (peek() != '^') return base;
    ++pos_;
    long e = exponent();
    Poly3 r;
    r.emplace(Mono{0, 0, 0}, GaussianRational(1));
    for (long n = 0; n < e; ++n) r = mul(r, base);
    return r;
  }

  long exponent() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a nonnegative integer exponent");
    long e = 0;
    for (std::size_t k = start; k < pos_; ++k) {
      e = e * 10 + (s_[k] - '0');
      if (e > 1000) throw ParseError("exponent too large", start);
    }
    return e;
  }

  Poly3 atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly3 p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Poly3 p;
      p.emplace(Mono{0, 0, 0}, number());
      return p;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])) &&
          s_[pos_] != '^')
        fail("unknown variable '" + std::string(1, c) + std::string(1, s_[pos_]) + "'");
      Poly3 p;
      switch (c) {
        case 'x': p.emplace(Mono{1, 0, 0}, GaussianRational(1)); break;
        case 'y': p.emplace(Mono{0, 1, 0}, GaussianRational(1)); break;
        case 'z': p.emplace(Mono{0, 0, 1}, GaussianRational(1)); break;
        case 'i': p.emplace(Mono{0, 0, 0}, GaussianRational::i()); break;
        default:
          --pos_;
          fail("unknown variable '" + std::string(1, c) + "'");
      }
      return p;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  GaussianRational number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits(s_.substr(start, pos_ - start));
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      std::size_t fs = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string frac(s_.substr(fs, pos_ - fs));
      if (frac.empty()) fail("expected digits after '.'");
      Rational den(1);
      for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
      Rational v(mpz_class(digits + frac), den.get_num());
      v.canonicalize();
      return GaussianRational(v);
    }
    return GaussianRational(Rational(mpz_class(digits)));
  }
};

}  // namespace

SurfaceEquation parse_expression(std::string_view text) {
  ExprParser parser(text);
  Poly3 p = parser.run();
  SurfaceEquation out;
  std::array<std::vector<Scalar>, 6> coeffs;
  for (int k = 0; k <= 5; ++k)
    coeffs[k].assign(SurfaceEquation::block_degree(k) + 1, Scalar(0L));
  for (const auto& [m, c] : p) {
    int wdeg = m.i + m.j + 2 * m.k;
    if (wdeg != 10)
      throw DomainError("monomial " + mono_str(m) + " has weighted degree " +
                        std::to_string(wdeg) + ", expected 10");
    coeffs[m.k][m.j] = Scalar(c);  // slot j holds x^i y^j
  }
  std::array<BinaryForm, 6> q{BinaryForm::zero(10), BinaryForm::zero(8),
                              BinaryForm::zero(6),  BinaryForm::zero(4),
                              BinaryForm::zero(2),  BinaryForm::zero(0)};
  for (int k = 0; k <= 5; ++k)
    q[k] = BinaryForm(SurfaceEquation::block_degree(k), std::move(coeffs[k]));
  return SurfaceEquation(std::move(q));
}

}  // namespace whs
