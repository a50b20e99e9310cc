#include "wb/textio.hpp"

#include <cctype>

namespace wb {

std::string cochar_to_string(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

Vec parse_cochar(const std::string& text) {
  std::string body = text;
  std::size_t b = body.find_first_not_of(" \t");
  std::size_t e = body.find_last_not_of(" \t");
  if (b == std::string::npos) throw error("empty cocharacter");
  body = body.substr(b, e - b + 1);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw error("unbalanced bracket in cocharacter");
    body = body.substr(1, body.size() - 2);
  }
  Vec out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string piece = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
    std::size_t pb = piece.find_first_not_of(" \t");
    std::size_t pe = piece.find_last_not_of(" \t");
    if (pb == std::string::npos) throw error("empty coordinate in cocharacter");
    piece = piece.substr(pb, pe - pb + 1);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw error("bad coordinate '" + piece + "' in cocharacter");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string element_to_string(const AffineWeyl& W, const ExtAffine& x) {
  ReducedWord rw = W.reduced_word(x);
  std::string out;
  if (!(rw.omega == W.identity())) {
    Int k = W.omega_exponent(rw.omega);
    out = k == 1 ? "pi" : "pi^" + std::to_string(k);
  }
  for (int i : rw.word) {
    if (!out.empty()) out += " ";
    out += "s" + std::to_string(i);
  }
  return out.empty() ? "e" : out;
}

namespace {

std::vector<std::string> tokenize_element(const std::string& text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    if (text[pos] == 't' && pos + 1 < text.size() && text[pos + 1] == '[') {
      int depth = 0;
      while (pos < text.size()) {
        if (text[pos] == '[') ++depth;
        if (text[pos] == ']' && --depth == 0) {
          ++pos;
          break;
        }
        ++pos;
      }
      if (depth != 0) throw error("unbalanced bracket in element expression");
    } else {
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    }
    tokens.push_back(text.substr(start, pos - start));
  }
  return tokens;
}

}  // namespace

ExtAffine parse_element(const AffineWeyl& W, const std::string& text) {
  std::vector<std::string> tokens = tokenize_element(text);
  if (tokens.empty()) throw error("empty element expression");
  ExtAffine acc = W.identity();
  for (const std::string& tok : tokens) {
    if (tok == "e") continue;
    if (tok[0] == 's' && tok.size() > 1 && std::isdigit(static_cast<unsigned char>(tok[1]))) {
      int idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoi(tok.substr(1), &used);
        if (used + 1 != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw error("bad generator token '" + tok + "'");
      }
      acc = W.multiply(acc, W.simple(idx));
      continue;
    }
    if (tok == "pi" || tok.rfind("pi^", 0) == 0) {
      Int k = 1;
      if (tok.size() > 2) {
        try {
          std::size_t used = 0;
          k = std::stoll(tok.substr(3), &used);
          if (used + 3 != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          throw error("bad Omega power token '" + tok + "'");
        }
      }
      const ExtAffine& pi = W.omega_pi();
      ExtAffine step = k >= 0 ? pi : W.inverse(pi);
      for (Int c = 0; c < (k >= 0 ? k : -k); ++c) acc = W.multiply(acc, step);
      continue;
    }
    if (tok[0] == 't' && tok.size() > 1 && tok[1] == '[') {
      acc = W.multiply(acc, W.translation(parse_cochar(tok.substr(1))));
      continue;
    }
    throw error("unrecognized token '" + tok + "' in element expression");
  }
  return acc;
}

namespace detail {

std::vector<std::string> split_hecke_terms(const std::string& text,
                                           std::vector<int>& signs) {
  std::vector<std::string> pieces;
  signs.clear();
  int depth = 0;
  int sign = 1;
  std::size_t pos = 0;
  if (!text.empty() && text[0] == '-') {
    sign = -1;
    pos = 1;
  } else if (!text.empty() && text[0] == '+') {
    pos = 1;
  }
  std::string cur;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      pieces.push_back(cur);
      signs.push_back(sign);
      cur.clear();
      sign = ch == '-' ? -1 : 1;
      continue;
    }
    cur += ch;
  }
  if (depth != 0) throw error("unbalanced brackets in Hecke expression");
  pieces.push_back(cur);
  signs.push_back(sign);
  return pieces;
}

std::pair<std::string, std::string> split_coeff_and_word(const std::string& term) {
  std::size_t tpos = std::string::npos;
  int depth = 0;
  for (std::size_t i = 0; i + 1 < term.size(); ++i) {
    char ch = term[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth == 0 && ch == 'T' && term[i + 1] == '[') {
      tpos = i;
      break;
    }
  }
  if (tpos == std::string::npos)
    throw error("Hecke term without T[...]: '" + term + "'");
  std::string coeff = term.substr(0, tpos);
  {
    std::size_t e = coeff.find_last_not_of(" \t");
    coeff = e == std::string::npos ? "" : coeff.substr(0, e + 1);
  }
  if (!coeff.empty()) {
    if (coeff.back() != '*')
      throw error("expected '*' between coefficient and T[...] in '" + term + "'");
    coeff.pop_back();
  }
  // Matching bracket of T[ ... ]
  int d = 0;
  std::size_t end = std::string::npos;
  for (std::size_t i = tpos + 1; i < term.size(); ++i) {
    if (term[i] == '[') ++d;
    if (term[i] == ']' && --d == 0) {
      end = i;
      break;
    }
  }
  if (end == std::string::npos) throw error("unbalanced T[...] in '" + term + "'");
  std::string tail = term.substr(end + 1);
  if (tail.find_first_not_of(" \t") != std::string::npos)
    throw error("trailing characters after T[...] in '" + term + "'");
  return {coeff, term.substr(tpos + 2, end - tpos - 2)};
}

}  // namespace detail

Json datum_to_json(const RootDatum& d) {
  Json j;
  j["name"] = d.name;
  j["rank"] = d.rank;
  j["simple_roots"] = d.simple_roots;
  j["simple_coroots"] = d.simple_coroots;
  Json pairing = Json::array();
  for (int i = 0; i < d.rank; ++i) {
    Json row = Json::array();
    for (int k = 0; k < d.rank; ++k) row.push_back(i == k ? 1 : 0);
    pairing.push_back(std::move(row));
  }
  j["pairing"] = std::move(pairing);
  j["positive_roots"] = d.positive_roots;
  j["positive_coroots"] = d.positive_coroots;
  j["highest_root"] = d.highest_root;
  j["highest_coroot"] = d.highest_coroot;
  j["two_rho"] = d.two_rho;
  return j;
}

Json element_to_json(const ExtAffine& x) {
  Json j;
  j["t"] = x.t;
  j["w"] = x.w;
  return j;
}

ExtAffine element_from_json(const AffineWeyl& W, const Json& j) {
  ExtAffine x;
  x.t = j.at("t").get<Vec>();
  x.w = j.at("w").get<Mat>();
  W.require_valid(x);
  return x;
}

Json ring_to_json(const GenericQ&) {
  Json j;
  j["kind"] = "generic-q";
  return j;
}

Json ring_to_json(const PrimeField& f) {
  Json j;
  j["kind"] = "prime-field";
  j["p"] = f.p;
  j["q"] = f.q_image;
  return j;
}

namespace {

void check_ring_json(const Json& j, const GenericQ&) {
  if (j.at("kind") != "generic-q") throw error("ring mismatch in JSON (expected generic-q)");
}

void check_ring_json(const Json& j, const PrimeField& f) {
  if (j.at("kind") != "prime-field" || j.at("p").get<Int>() != f.p ||
      j.at("q").get<Int>() != f.q_image)
    throw error("ring mismatch in JSON (expected " + f.name() + ")");
}

template <class R>
HeckeElt<R> hecke_from_json_impl(const HeckeAlgebra<R>& H, const Json& j) {
  check_ring_json(j.at("ring"), H.ring());
  HeckeElt<R> out{H.ring(), {}};
  for (const Json& t : j.at("terms")) {
    ExtAffine w = element_from_json(H.group(), t.at("w"));
    ZPoly poly = parse_zpoly(t.at("c").get<std::string>());
    typename R::Elem c = detail::ring_from_poly(H.ring(), poly);
    if (!H.ring().is_zero(c)) {
      HeckeElt<R> term{H.ring(), {}};
      term.terms.emplace(w, c);
      out = H.add(out, term);
    }
  }
  return out;
}

}  // namespace

HeckeElt<GenericQ> hecke_from_json(const HeckeAlgebra<GenericQ>& H, const Json& j) {
  return hecke_from_json_impl(H, j);
}

HeckeElt<PrimeField> hecke_from_json(const HeckeAlgebra<PrimeField>& H, const Json& j) {
  return hecke_from_json_impl(H, j);
}

Json spherical_to_json(const Satake& S, const SphericalElt& a) {
  Json j;
  j["ring"] = ring_to_json(S.ring());
  Json terms = Json::array();
  for (const auto& [mu, c] : a.terms) {
    Json t;
    t["mu"] = mu;
    t["c"] = std::to_string(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

SphericalElt spherical_from_json(const Satake& S, const Json& j) {
  check_ring_json(j.at("ring"), S.ring());
  SphericalElt out = S.spherical_zero();
  for (const Json& t : j.at("terms")) {
    Vec mu = t.at("mu").get<Vec>();
    Int c = std::stoll(t.at("c").get<std::string>());
    out = S.spherical_add(out, S.spherical_basis(mu, c));
  }
  return out;
}

Json monomial_to_json(const Satake& S, const DomMonomial& m) {
  Json j;
  j["ring"] = ring_to_json(S.ring());
  Json terms = Json::array();
  for (const auto& [mu, c] : m.terms) {
    Json t;
    t["mu"] = mu;
    t["c"] = std::to_string(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

DomMonomial monomial_from_json(const Satake& S, const Json& j) {
  check_ring_json(j.at("ring"), S.ring());
  DomMonomial out{S.ring(), {}};
  for (const Json& t : j.at("terms")) {
    Vec mu = t.at("mu").get<Vec>();
    Int c = std::stoll(t.at("c").get<std::string>());
    DomMonomial piece = S.monomial(mu, c);
    for (const auto& [k, v] : piece.terms) {
      auto [it, ins] = out.terms.emplace(k, v);
      if (!ins) {
        it->second = S.ring().add(it->second, v);
        if (it->second == 0) out.terms.erase(it);
      }
    }
  }
  return out;
}

}  // namespace wb
