#include <mgo/polynomial.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace mgo {

Rational rational_pow(const Rational& base, int e) {
  if (e < 0) throw std::invalid_argument("rational_pow: negative exponent");
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Polynomial Polynomial::constant(int dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term(std::vector<int>(dim, 0), c);
  return p;
}

Polynomial Polynomial::variable(int dim, int index) {
  if (index < 0 || index >= dim)
    throw std::invalid_argument("variable: index out of range");
  Polynomial p(dim);
  std::vector<int> expo(dim, 0);
  expo[index] = 1;
  p.add_term(expo, 1);
  return p;
}

void Polynomial::add_term(const std::vector<int>& expo, const Rational& c) {
  if (static_cast<int>(expo.size()) != dim)
    throw std::invalid_argument("add_term: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(expo, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (dim != o.dim) throw std::invalid_argument("polynomial: dim mismatch");
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (dim != o.dim) throw std::invalid_argument("polynomial: dim mismatch");
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms) out.add_term(e, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (dim != o.dim) throw std::invalid_argument("polynomial: dim mismatch");
  Polynomial out(dim);
  std::vector<int> expo(dim);
  for (const auto& [ea, ca] : terms)
    for (const auto& [eb, cb] : o.terms) {
      for (int i = 0; i < dim; ++i) expo[i] = ea[i] + eb[i];
      out.add_term(expo, ca * cb);
    }
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(dim);
  if (c == 0) return out;
  for (const auto& [e, coef] : terms) out.terms.emplace(e, coef * c);
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  Polynomial out = Polynomial::constant(dim, 1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= dim)
    throw std::invalid_argument("derivative: variable out of range");
  Polynomial out(dim);
  for (const auto& [e, c] : terms) {
    if (e[var] == 0) continue;
    std::vector<int> expo = e;
    --expo[var];
    out.add_term(expo, c * e[var]);
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != dim)
    throw std::invalid_argument("evaluate: point dimension mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms) {
    Rational t = c;
    for (int i = 0; i < dim; ++i)
      if (e[i] > 0) t *= rational_pow(x[i], e[i]);
    sum += t;
  }
  return sum;
}

int Polynomial::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms)
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

std::string Polynomial::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms) {
    Rational a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono;
    for (int i = 0; i < dim; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += rational_to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += rational_to_string(a) + "*" + mono;
    }
  }
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  int dim;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + msg);
  }

  bool starts_atom() {
    skip_ws();
    if (pos >= text.size()) return false;
    char c = text[pos];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(';
  }

  Integer read_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected digits");
    return Integer(text.substr(start, pos - start));
  }

  Polynomial atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Polynomial e = expr();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return e;
    }
    if (c == 'x') {
      ++pos;
      Integer idx = read_integer();
      if (idx < 1 || idx > dim) fail("variable index out of range 1.." +
                                     std::to_string(dim));
      return Polynomial::variable(dim, static_cast<int>(idx) - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = read_integer();
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        Integer den = read_integer();
        if (den == 0) fail("zero denominator");
        return Polynomial::constant(dim, Rational(num, den));
      }
      return Polynomial::constant(dim, Rational(num));
    }
    fail("expected number, variable, or '('");
  }

  Polynomial factor() {
    Polynomial base = atom();
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      Integer e = read_integer();
      if (e < 0 || e > 64) fail("exponent out of range");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  Polynomial term() {
    skip_ws();
    bool neg = false;
    while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') neg = !neg;
      ++pos;
      skip_ws();
    }
    Polynomial prod = factor();
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        prod = prod * factor();
      } else if (starts_atom()) {
        prod = prod * factor();
      } else {
        break;
      }
    }
    return neg ? prod * Rational(-1) : prod;
  }

  Polynomial expr() {
    Polynomial sum = term();
    for (;;) {
      skip_ws();
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        bool minus = text[pos] == '-';
        ++pos;
        Polynomial t = term();
        sum = minus ? sum - t : sum + t;
      } else {
        break;
      }
    }
    return sum;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int dim) {
  if (dim < 1) throw std::invalid_argument("parse_polynomial: dim must be >= 1");
  Parser p{text, dim};
  Polynomial out = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

const Rational& Jet::entry(const std::vector<int>& indices) const {
  std::vector<int> expo(dim, 0);
  for (int i : indices) {
    if (i < 1 || i > dim)
      throw std::invalid_argument("jet entry: index out of range");
    ++expo[i - 1];
  }
  return entry_exponent(expo);
}

const Rational& Jet::entry_exponent(const std::vector<int>& expo) const {
  auto it = values.find(expo);
  if (it == values.end())
    throw std::invalid_argument("jet entry: order exceeds max_order");
  return it->second;
}

Jet jet(const Polynomial& f, const std::vector<Rational>& x, int max_order) {
  if (static_cast<int>(x.size()) != f.dim)
    throw std::invalid_argument("jet: point dimension mismatch");
  if (max_order < 0) throw std::invalid_argument("jet: negative order");

  Jet out;
  out.dim = f.dim;
  out.max_order = max_order;
  out.point = x;

  // Derivative polynomials built order by order, each from a predecessor.
  std::map<std::vector<int>, Polynomial> derivs;
  std::vector<int> zero(f.dim, 0);
  derivs.emplace(zero, f);
  out.values.emplace(zero, f.evaluate(x));

  std::vector<std::vector<int>> frontier{zero};
  for (int order = 1; order <= max_order; ++order) {
    std::vector<std::vector<int>> next;
    for (const auto& expo : frontier) {
      // Extend only at positions <= the first nonzero, so each multi-index
      // is generated exactly once.
      int limit = f.dim - 1;
      for (int i = 0; i < f.dim; ++i)
        if (expo[i] > 0) {
          limit = i;
          break;
        }
      for (int i = 0; i <= limit; ++i) {
        std::vector<int> e = expo;
        ++e[i];
        Polynomial d = derivs.at(expo).derivative(i);
        out.values.emplace(e, d.evaluate(x));
        derivs.emplace(e, std::move(d));
        next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

Polynomial random_polynomial(int dim, int degree, Rng& rng) {
  Polynomial f(dim);
  std::vector<int> expo(dim, 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == dim) {
      f.add_term(expo, Rational(rng.uniform_int(-9, 9)));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      expo[var] = e;
      self(self, var + 1, remaining - e);
    }
    expo[var] = 0;
  };
  rec(rec, 0, degree);
  return f;
}

}  // namespace mgo
