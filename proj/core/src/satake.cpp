#include "wb/satake.hpp"

#include <algorithm>

namespace wb {

namespace {
std::string vec_str(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}
}  // namespace

void Satake::require_dominant(const Cocharacter& mu) const {
  if (!group_.datum().is_dominant(mu))
    throw error("spherical support keys must be dominant");
}

void Satake::add_term(std::map<Cocharacter, Int>& terms, const Cocharacter& mu,
                      Int c) const {
  c = ring_.from_int(c);
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(mu, c);
  if (!inserted) {
    it->second = ring_.add(it->second, c);
    if (it->second == 0) terms.erase(it);
  }
}

SphericalElt Satake::spherical_basis(const Cocharacter& mu, Int coeff) const {
  require_dominant(mu);
  SphericalElt e{ring_, {}};
  add_term(e.terms, mu, coeff);
  return e;
}

DomMonomial Satake::monomial(const Cocharacter& mu, Int coeff) const {
  require_dominant(mu);
  DomMonomial m{ring_, {}};
  Int c = ring_.from_int(coeff);
  if (c != 0) m.terms.emplace(mu, c);
  return m;
}

SphericalElt Satake::spherical_add(const SphericalElt& a,
                                   const SphericalElt& b) const {
  if (a.ring != ring_ || b.ring != ring_) throw error("coefficient ring mismatch");
  SphericalElt out = a;
  for (const auto& [mu, c] : b.terms) add_term(out.terms, mu, c);
  return out;
}

bool Satake::spherical_equal(const SphericalElt& a, const SphericalElt& b) const {
  if (a.ring != ring_ || b.ring != ring_) throw error("coefficient ring mismatch");
  return a.terms == b.terms;
}

bool Satake::monomial_equal(const DomMonomial& a, const DomMonomial& b) const {
  if (a.ring != ring_ || b.ring != ring_) throw error("coefficient ring mismatch");
  return a.terms == b.terms;
}

HeckeElt<PrimeField> Satake::to_iwahori(const SphericalElt& a) const {
  if (a.ring != ring_) throw error("coefficient ring mismatch");
  HeckeElt<PrimeField> out = hecke_.zero();
  for (const auto& [lam, c] : a.terms) {
    require_dominant(lam);
    out = hecke_.add(out, hecke_.scale(c, hecke_.double_coset_indicator(lam)));
  }
  return out;
}

SphericalElt Satake::from_iwahori(const HeckeElt<PrimeField>& h) const {
  if (h.ring != ring_) throw error("coefficient ring mismatch");
  std::map<Cocharacter, Int> value;
  std::map<Cocharacter, std::size_t> seen;
  for (const auto& [w, c] : h.terms) {
    Cocharacter lam = group_.coset_dominant(w);
    auto [it, inserted] = value.emplace(lam, c);
    if (!inserted && it->second != c)
      throw error("not K-bi-invariant: coefficients differ on the double coset of t_" +
                  vec_str(lam));
    ++seen[lam];
  }
  for (const auto& [lam, count] : seen) {
    std::size_t coset_size =
        weyl_orbit(group_.datum(), lam).size() * group_.finite_elements().size();
    if (count != coset_size)
      throw error("not K-bi-invariant: support covers a double coset only partially");
  }
  SphericalElt out{ring_, {}};
  for (const auto& [lam, c] : value) add_term(out.terms, lam, c);
  return out;
}

SphericalElt Satake::c_map(const HeckeElt<PrimeField>& z) const {
  if (!hecke_.is_central(z)) throw error("c_map requires a central element");
  HeckeElt<PrimeField> product = hecke_.mul(z, hecke_.one_K());
  try {
    return from_iwahori(product);
  } catch (const error&) {
    throw error("central element convolved with 1_K is not spherical "
                "(internal inconsistency)");
  }
}

HeckeElt<PrimeField> Satake::c_inverse(const SphericalElt& a) const {
  if (a.ring != ring_) throw error("coefficient ring mismatch");
  HeckeElt<PrimeField> acc = hecke_.zero();
  std::map<Cocharacter, Int> rem = a.terms;
  while (!rem.empty()) {
    // Maximal height last; ties broken lexicographically.
    auto top = std::max_element(
        rem.begin(), rem.end(), [&](const auto& x, const auto& y) {
          Int hx = group_.datum().height(x.first), hy = group_.datum().height(y.first);
          if (hx != hy) return hx < hy;
          return x.first < y.first;
        });
    Cocharacter mu = top->first;
    Int c = top->second;
    acc = hecke_.add(acc, hecke_.scale(c, hecke_.z_mu(mu)));
    for (const Cocharacter& lam : dominant_below(group_.datum(), mu))
      add_term(rem, lam, ring_.neg(c));
  }
  return acc;
}

SphericalElt Satake::satake_inverse(const DomMonomial& m) const {
  if (m.ring != ring_) throw error("coefficient ring mismatch");
  SphericalElt out{ring_, {}};
  for (const auto& [mu, c] : m.terms) {
    require_dominant(mu);
    for (const Cocharacter& lam : dominant_below(group_.datum(), mu))
      add_term(out.terms, lam, c);
  }
  return out;
}

DomMonomial Satake::satake_forward(const SphericalElt& a) const {
  if (a.ring != ring_) throw error("coefficient ring mismatch");
  DomMonomial out{ring_, {}};
  std::map<Cocharacter, Int> rem = a.terms;
  while (!rem.empty()) {
    auto top = std::max_element(
        rem.begin(), rem.end(), [&](const auto& x, const auto& y) {
          Int hx = group_.datum().height(x.first), hy = group_.datum().height(y.first);
          if (hx != hy) return hx < hy;
          return x.first < y.first;
        });
    Cocharacter mu = top->first;
    Int c = top->second;
    add_term(out.terms, mu, c);
    for (const Cocharacter& lam : dominant_below(group_.datum(), mu))
      add_term(rem, lam, ring_.neg(c));
  }
  return out;
}

HeckeElt<PrimeField> Satake::bernstein_map(const DomMonomial& m) const {
  return c_inverse(satake_inverse(m));
}

SphericalElt Satake::spherical_mul(const SphericalElt& a,
                                   const SphericalElt& b) const {
  return from_iwahori(hecke_.mul(c_inverse(a), to_iwahori(b)));
}

}  // namespace wb
