#pragma once

#include <string>

#include <json.hpp>

#include "wb/hecke.hpp"
#include "wb/satake.hpp"

namespace wb {

using Json = nlohmann::ordered_json;

// ---- element grammar ----------------------------------------------------
// `e` identity; `s0 s1 ...` affine simple letters; `pi` / `pi^k` powers of
// the distinguished Omega generator; `t[a,b,...]` translations.
// Whitespace-separated juxtaposition is product. The printer emits the
// canonical reduced form `pi^k si1 si2 ...`.

std::string cochar_to_string(const Vec& v);
Vec parse_cochar(const std::string& text);  // "[a,b]" or "a,b"

std::string element_to_string(const AffineWeyl& W, const ExtAffine& x);
ExtAffine parse_element(const AffineWeyl& W, const std::string& text);

// ---- Hecke element grammar ----------------------------------------------
// Sum of `c*T[word]` terms joined by +/-, coefficients integers or integer
// polynomials in q, parenthesized when composite: `(q-1)*T[s0] + T[e]`.
// Round trips bit-exactly through parse.

template <class R>
std::string hecke_to_string(const HeckeAlgebra<R>& H,
                            const HeckeElt<R>& a);

template <class R>
HeckeElt<R> parse_hecke(const HeckeAlgebra<R>& H, const std::string& text);

// ---- JSON forms ----------------------------------------------------------

Json datum_to_json(const RootDatum& d);

Json element_to_json(const ExtAffine& x);
ExtAffine element_from_json(const AffineWeyl& W, const Json& j);

Json ring_to_json(const GenericQ&);
Json ring_to_json(const PrimeField& f);

template <class R>
Json hecke_to_json(const HeckeAlgebra<R>& H, const HeckeElt<R>& a);

HeckeElt<GenericQ> hecke_from_json(const HeckeAlgebra<GenericQ>& H, const Json& j);
HeckeElt<PrimeField> hecke_from_json(const HeckeAlgebra<PrimeField>& H, const Json& j);

Json spherical_to_json(const Satake& S, const SphericalElt& a);
SphericalElt spherical_from_json(const Satake& S, const Json& j);
Json monomial_to_json(const Satake& S, const DomMonomial& m);
DomMonomial monomial_from_json(const Satake& S, const Json& j);

// ---- implementation of the templated pieces ------------------------------

namespace detail {
std::vector<std::string> split_hecke_terms(const std::string& text,
                                           std::vector<int>& signs);
std::pair<std::string, std::string> split_coeff_and_word(const std::string& term);

inline ZPoly ring_coeff_to_poly(const GenericQ&, const ZPoly& c) { return c; }
inline ZPoly ring_coeff_to_poly(const PrimeField&, Int c) { return ZPoly::constant(c); }
inline ZPoly ring_from_poly(const GenericQ&, const ZPoly& p) { return p; }
inline Int ring_from_poly(const PrimeField& f, const ZPoly& p) {
  return p.evaluate_mod(f.q_image, f.p);
}
}  // namespace detail

template <class R>
std::string hecke_to_string(const HeckeAlgebra<R>& H, const HeckeElt<R>& a) {
  if (a.terms.empty()) return "0";
  const R& ring = H.ring();
  // Print by (length, element order) so small terms come first.
  std::vector<std::pair<std::pair<Int, ExtAffine>, typename R::Elem>> rows;
  for (const auto& [w, c] : a.terms)
    rows.push_back({{H.group().length(w), w}, c});
  std::sort(rows.begin(), rows.end(),
            [](const auto& x, const auto& y) {
              if (x.first.first != y.first.first) return x.first.first < y.first.first;
              return ExtAffineLess{}(x.first.second, y.first.second);
            });
  std::string out;
  for (const auto& [key, c] : rows) {
    std::string cs = ring.coeff_string(c);
    bool negative = !cs.empty() && cs[0] == '-';
    std::string mag = negative ? cs.substr(1) : cs;
    std::string piece;
    if (mag == "1") {
      piece = "";
    } else if (ring.coeff_terms(c) > 1) {
      piece = "(" + cs + ")*";
      negative = false;
    } else {
      piece = mag + "*";
    }
    piece += "T[" + element_to_string(H.group(), key.second) + "]";
    if (out.empty()) {
      out = (negative ? "-" : "") + piece;
    } else {
      out += (negative ? " - " : " + ") + piece;
    }
  }
  return out;
}

template <class R>
HeckeElt<R> parse_hecke(const HeckeAlgebra<R>& H, const std::string& text) {
  HeckeElt<R> out{H.ring(), {}};
  std::string trimmed = text;
  {
    std::size_t b = trimmed.find_first_not_of(" \t\n");
    std::size_t e = trimmed.find_last_not_of(" \t\n");
    trimmed = b == std::string::npos ? "" : trimmed.substr(b, e - b + 1);
  }
  if (trimmed.empty()) throw error("empty Hecke expression");
  if (trimmed == "0") return out;
  std::vector<int> signs;
  std::vector<std::string> pieces = detail::split_hecke_terms(trimmed, signs);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    auto [coeff_text, word_text] = detail::split_coeff_and_word(pieces[i]);
    ZPoly poly = coeff_text.empty() ? ZPoly::constant(1) : parse_zpoly(coeff_text);
    if (signs[i] < 0) poly = -poly;
    typename R::Elem c = detail::ring_from_poly(H.ring(), poly);
    ExtAffine w = parse_element(H.group(), word_text);
    HeckeElt<R> term{H.ring(), {}};
    if (!H.ring().is_zero(c)) term.terms.emplace(w, c);
    out = H.add(out, term);
  }
  return out;
}

template <class R>
Json hecke_to_json(const HeckeAlgebra<R>& H, const HeckeElt<R>& a) {
  Json j;
  j["ring"] = ring_to_json(H.ring());
  Json terms = Json::array();
  for (const auto& [w, c] : a.terms) {
    Json t;
    t["w"] = element_to_json(w);
    t["c"] = H.ring().coeff_string(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace wb
