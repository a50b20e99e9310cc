#pragma once

#include <map>
#include <string>
#include <vector>

#include "wb/affine_weyl.hpp"

namespace wb {

/// Integer polynomial in one variable q. coeffs[i] is the coefficient of
/// q^i; no trailing zeros are stored, the zero polynomial is empty.
struct ZPoly {
  std::vector<Int> coeffs;

  static ZPoly constant(Int c);
  static ZPoly variable();  // q

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  int term_count() const;
  Int evaluate_mod(Int q_image, Int p) const;

  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly operator-() const;
  bool operator==(const ZPoly& o) const { return coeffs == o.coeffs; }

  std::string to_string() const;  // canonical, e.g. "q^2-2*q+1"
  void trim();
};

ZPoly parse_zpoly(const std::string& text);  // inverse of to_string

/// Generic coefficients: the ring Z[q].
struct GenericQ {
  using Elem = ZPoly;

  Elem zero() const { return {}; }
  Elem one() const { return ZPoly::constant(1); }
  Elem from_int(Int c) const { return ZPoly::constant(c); }
  Elem q() const { return ZPoly::variable(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  std::string coeff_string(const Elem& a) const { return a.to_string(); }
  int coeff_terms(const Elem& a) const { return a.term_count(); }
  std::string name() const { return "Z[q]"; }
  bool operator==(const GenericQ&) const { return true; }
  bool operator!=(const GenericQ&) const { return false; }
};

/// Coefficients in the prime field F_p with a chosen image of q.
/// The residue characteristic is odd: q is a power of p, so the default
/// image is 0. p = 2 needs the explicit override flag and is excluded
/// from verification runs.
struct PrimeField {
  Int p = 3;
  Int q_image = 0;

  PrimeField() = default;
  PrimeField(Int p, Int q_image, bool allow_p2 = false);

  using Elem = Int;  // canonical representative in [0, p)

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(Int c) const { return ((c % p) + p) % p; }
  Elem q() const { return q_image; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return (p - a) % p; }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  std::string coeff_string(Elem a) const { return std::to_string(a); }
  int coeff_terms(Elem) const { return 1; }
  std::string name() const {
    return "F_" + std::to_string(p) + "[q->" + std::to_string(q_image) + "]";
  }
  bool operator==(const PrimeField& o) const {
    return p == o.p && q_image == o.q_image;
  }
  bool operator!=(const PrimeField& o) const { return !(*this == o); }
};

/// Finitely supported function W~ -> R, in the T-basis. No zero
/// coefficients are stored; terms are ordered for reproducible output.
template <class R>
struct HeckeElt {
  R ring;
  std::map<ExtAffine, typename R::Elem, ExtAffineLess> terms;

  bool is_zero() const { return terms.empty(); }
};

/// The Iwahori-Hecke algebra of the extended affine Weyl group over R,
/// in the Iwahori-Matsumoto presentation
///   T_s^2 = q + (q-1) T_s,   T_u T_v = T_{uv} when lengths add,
///   T_omega T_w = T_{omega w} for length-zero omega.
/// At q -> 0 the quadratic relation degenerates to T_s^2 = -T_s.
template <class R>
class HeckeAlgebra {
 public:
  using Elt = HeckeElt<R>;

  HeckeAlgebra(const AffineWeyl& group, R ring)
      : group_(group), ring_(std::move(ring)) {}

  const AffineWeyl& group() const { return group_; }
  const R& ring() const { return ring_; }

  Elt zero() const { return Elt{ring_, {}}; }
  Elt one() const { return t_basis(group_.identity()); }

  Elt t_basis(const ExtAffine& w) const {
    group_.require_valid(w);
    Elt e{ring_, {}};
    e.terms.emplace(w, ring_.one());
    return e;
  }

  Elt add(const Elt& a, const Elt& b) const {
    require_same_ring(a, b);
    Elt out = a;
    for (const auto& [w, c] : b.terms) accumulate(out, w, c);
    return out;
  }

  Elt sub(const Elt& a, const Elt& b) const {
    require_same_ring(a, b);
    Elt out = a;
    for (const auto& [w, c] : b.terms) accumulate(out, w, ring_.neg(c));
    return out;
  }

  Elt scale(const typename R::Elem& c, const Elt& a) const {
    Elt out{ring_, {}};
    if (ring_.is_zero(c)) return out;
    for (const auto& [w, cw] : a.terms) accumulate(out, w, ring_.mul(c, cw));
    return out;
  }

  bool equal(const Elt& a, const Elt& b) const {
    require_same_ring(a, b);
    if (a.terms.size() != b.terms.size()) return false;
    auto it = b.terms.begin();
    for (const auto& [w, c] : a.terms) {
      if (!(w == it->first) || !ring_.equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }

  /// Product, computed by expanding each left term's reduced word and
  /// folding one letter at a time:
  ///   T_s x = T_{sv} on ascents, q T_{sv} + (q-1) T_v on descents.
  Elt mul(const Elt& a, const Elt& b) const {
    require_same_ring(a, b);
    Elt acc{ring_, {}};
    const typename R::Elem q = ring_.q();
    const typename R::Elem q_minus_one = ring_.sub(q, ring_.one());
    for (const auto& [w, c] : a.terms) {
      ReducedWord rw = group_.reduced_word(w);
      std::map<ExtAffine, typename R::Elem, ExtAffineLess> cur = b.terms;
      for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) {
        const ExtAffine s = group_.simple(*it);
        std::map<ExtAffine, typename R::Elem, ExtAffineLess> next;
        for (const auto& [v, cv] : cur) {
          ExtAffine sv = group_.multiply(s, v);
          if (group_.length(sv) > group_.length(v)) {
            add_term(next, sv, cv);
          } else {
            add_term(next, sv, ring_.mul(q, cv));
            add_term(next, v, ring_.mul(q_minus_one, cv));
          }
        }
        cur = std::move(next);
      }
      if (!(rw.omega == group_.identity())) {
        std::map<ExtAffine, typename R::Elem, ExtAffineLess> shifted;
        for (const auto& [v, cv] : cur)
          shifted.emplace(group_.multiply(rw.omega, v), cv);
        cur = std::move(shifted);
      }
      for (const auto& [v, cv] : cur) accumulate(acc, v, ring_.mul(c, cv));
    }
    return acc;
  }

  /// 1_K = sum of T_w over the finite Weyl group.
  Elt one_K() const {
    Elt e{ring_, {}};
    for (const Mat& w : group_.finite_elements())
      e.terms.emplace(group_.from_finite(w), ring_.one());
    return e;
  }

  /// Indicator of the spherical double coset of t_lambda: the sum of T_w
  /// over {u t_lambda v : u, v in W}, deduplicated. Requires lambda
  /// dominant.
  Elt double_coset_indicator(const Cocharacter& lambda) const {
    if (!group_.datum().is_dominant(lambda))
      throw error("double coset indicator requires a dominant cocharacter");
    const ExtAffine t = group_.translation(lambda);
    Elt e{ring_, {}};
    for (const Mat& u : group_.finite_elements()) {
      ExtAffine ut = group_.multiply(group_.from_finite(u), t);
      for (const Mat& v : group_.finite_elements()) {
        ExtAffine utv = group_.multiply(ut, group_.from_finite(v));
        e.terms.emplace(utv, ring_.one());  // no-op on duplicates
      }
    }
    return e;
  }

  /// z_mu: all-ones sum over the mu-admissible set.
  Elt z_mu(const Cocharacter& mu) const {
    Elt e{ring_, {}};
    for (const ExtAffine& w : group_.admissible_set(mu))
      e.terms.emplace(w, ring_.one());
    return e;
  }

  /// True iff a commutes with every T_{s_i} and with T_omega for the
  /// Omega generators; these generate the algebra, so this is centrality.
  bool is_central(const Elt& a) const {
    for (int i = 0; i < group_.num_generators(); ++i) {
      Elt g = t_basis(group_.simple(i));
      if (!equal(mul(g, a), mul(a, g))) return false;
    }
    for (const ExtAffine& om : group_.omega_generators()) {
      Elt g = t_basis(om);
      if (!equal(mul(g, a), mul(a, g))) return false;
    }
    return true;
  }

  void require_same_ring(const Elt& a, const Elt& b) const {
    if (a.ring != ring_ || b.ring != ring_)
      throw error("coefficient ring mismatch");
  }

 private:
  void accumulate(Elt& e, const ExtAffine& w, const typename R::Elem& c) const {
    add_term(e.terms, w, c);
  }

  void add_term(std::map<ExtAffine, typename R::Elem, ExtAffineLess>& terms,
                const ExtAffine& w, const typename R::Elem& c) const {
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms.erase(it);
    }
  }

  const AffineWeyl& group_;
  R ring_;
};

/// Coefficientwise evaluation at q -> q_image followed by reduction
/// mod p. A ring homomorphism Z[q] -> F_p.
HeckeElt<PrimeField> specialize(const HeckeElt<GenericQ>& a,
                                const PrimeField& target);

}  // namespace wb
