#include "wb/hecke.hpp"

#include <algorithm>
#include <cctype>

namespace wb {

ZPoly ZPoly::constant(Int c) {
  ZPoly p;
  if (c != 0) p.coeffs = {c};
  return p;
}

ZPoly ZPoly::variable() {
  ZPoly p;
  p.coeffs = {0, 1};
  return p;
}

void ZPoly::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

int ZPoly::term_count() const {
  int n = 0;
  for (Int c : coeffs)
    if (c != 0) ++n;
  return n;
}

Int ZPoly::evaluate_mod(Int q_image, Int p) const {
  Int acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = ((acc * q_image + *it) % p + p) % p;
  return acc;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  ZPoly r;
  r.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += coeffs[i];
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  r.trim();
  return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (Int& c : r.coeffs) c = -c;
  return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  ZPoly r;
  r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs.size(); ++j)
      r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  }
  r.trim();
  return r;
}

std::string ZPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    Int c = coeffs[d];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    Int a = c < 0 ? -c : c;
    if (d == 0) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + "*";
      out += d == 1 ? "q" : "q^" + std::to_string(d);
    }
  }
  return out;
}

namespace {

struct PolyParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Int parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw error("expected integer in polynomial at '" + s.substr(start) + "'");
    return std::stoll(s.substr(start, pos - start));
  }

  ZPoly parse_sum() {
    ZPoly acc = ZPoly::constant(0);
    bool negate_term = false;
    if (eat('-')) negate_term = true;
    for (;;) {
      ZPoly term = parse_product();
      acc = negate_term ? acc - term : acc + term;
      if (eat('+')) {
        negate_term = false;
      } else if (eat('-')) {
        negate_term = true;
      } else {
        break;
      }
    }
    return acc;
  }

  ZPoly parse_product() {
    ZPoly acc = parse_atom();
    while (eat('*')) acc = acc * parse_atom();
    return acc;
  }

  ZPoly parse_atom() {
    skip_ws();
    if (eat('(')) {
      ZPoly inner = parse_sum();
      if (!eat(')')) throw error("unbalanced parenthesis in polynomial");
      return power_suffix(inner);
    }
    if (peek() == 'q') {
      ++pos;
      return power_suffix(ZPoly::variable());
    }
    return ZPoly::constant(parse_int());
  }

  ZPoly power_suffix(ZPoly base) {
    if (!eat('^')) return base;
    Int e = parse_int();
    if (e < 0) throw error("negative exponent in polynomial");
    ZPoly acc = ZPoly::constant(1);
    for (Int k = 0; k < e; ++k) acc = acc * base;
    return acc;
  }
};

}  // namespace

ZPoly parse_zpoly(const std::string& text) {
  PolyParser p(text);
  ZPoly result = p.parse_sum();
  p.skip_ws();
  if (p.pos != text.size())
    throw error("trailing characters in polynomial: '" + text.substr(p.pos) + "'");
  return result;
}

PrimeField::PrimeField(Int p_, Int q_image_, bool allow_p2) : p(p_) {
  if (p < 2) throw error("p must be a prime");
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw error("p must be a prime, got " + std::to_string(p));
  if (p == 2 && !allow_p2)
    throw error("p = 2 is outside the supported hypothesis (odd prime p > 2); "
                "pass the explicit override to experiment");
  q_image = ((q_image_ % p) + p) % p;
}

HeckeElt<PrimeField> specialize(const HeckeElt<GenericQ>& a,
                                const PrimeField& target) {
  HeckeElt<PrimeField> out{target, {}};
  for (const auto& [w, poly] : a.terms) {
    Int c = poly.evaluate_mod(target.q_image, target.p);
    if (c != 0) out.terms.emplace(w, c);
  }
  return out;
}

}  // namespace wb
