#pragma once

#include "wb/hecke.hpp"

namespace wb {

/// Element of the spherical algebra H_K in the basis {1_lambda} of
/// double-coset indicators, lambda dominant. Coefficients in F_p.
struct SphericalElt {
  PrimeField ring;
  std::map<Cocharacter, Int> terms;  // keys dominant, values in (0, p)

  bool is_zero() const { return terms.empty(); }
};

/// Element of the monoid algebra F_p[X_*(T)^+], written in the basis of
/// dominant monomials. Kept as a distinct type from SphericalElt so the
/// two sides of the Satake isomorphism cannot be confused.
struct DomMonomial {
  PrimeField ring;
  std::map<Cocharacter, Int> terms;

  bool is_zero() const { return terms.empty(); }
};

/// The spherical algebra, the Satake isomorphism S, the central-element
/// isomorphism C(f) = f * 1_K and the Bernstein map B = C^{-1} o S^{-1}.
///
/// Products in H_K are routed through the Iwahori algebra with the
/// central representative on the left, so the intertwining property of C
/// is itself exercised by every spherical product.
class Satake {
 public:
  Satake(const AffineWeyl& group, PrimeField ring)
      : group_(group), hecke_(group, ring), ring_(ring) {}

  const AffineWeyl& group() const { return group_; }
  const HeckeAlgebra<PrimeField>& hecke() const { return hecke_; }
  const PrimeField& ring() const { return ring_; }

  SphericalElt spherical_zero() const { return SphericalElt{ring_, {}}; }
  SphericalElt spherical_basis(const Cocharacter& mu, Int coeff = 1) const;
  DomMonomial monomial(const Cocharacter& mu, Int coeff = 1) const;

  SphericalElt spherical_add(const SphericalElt& a, const SphericalElt& b) const;
  bool spherical_equal(const SphericalElt& a, const SphericalElt& b) const;
  bool monomial_equal(const DomMonomial& a, const DomMonomial& b) const;

  /// Linear extension of lambda -> 1_lambda into the Iwahori algebra.
  HeckeElt<PrimeField> to_iwahori(const SphericalElt& a) const;

  /// Inverse of to_iwahori on its image. Throws "not K-bi-invariant"
  /// when the input is not constant on some spherical double coset
  /// meeting its support.
  SphericalElt from_iwahori(const HeckeElt<PrimeField>& h) const;

  /// C: z -> z * 1_K. Rejects non-central input.
  SphericalElt c_map(const HeckeElt<PrimeField>& z) const;

  /// C^{-1}: expand in the triangular basis 1'_mu = sum_{lambda<=mu}
  /// 1_lambda by back-substitution along dominance order, then map
  /// 1'_mu -> z_mu. Always solvable (unitriangular).
  HeckeElt<PrimeField> c_inverse(const SphericalElt& a) const;

  /// S^{-1}: monomial mu -> sum of 1_lambda over dominant lambda <= mu.
  SphericalElt satake_inverse(const DomMonomial& m) const;

  /// S: inverse of satake_inverse, by the same back-substitution.
  DomMonomial satake_forward(const SphericalElt& a) const;

  /// B = C^{-1} o S^{-1}; on a monomial mu this equals z_mu.
  HeckeElt<PrimeField> bernstein_map(const DomMonomial& m) const;

  /// Product in H_K, computed inside the Iwahori algebra as
  /// from_iwahori(c_inverse(a) * to_iwahori(b)).
  SphericalElt spherical_mul(const SphericalElt& a, const SphericalElt& b) const;

 private:
  void require_dominant(const Cocharacter& mu) const;
  void add_term(std::map<Cocharacter, Int>& terms, const Cocharacter& mu,
                Int c) const;

  const AffineWeyl& group_;
  HeckeAlgebra<PrimeField> hecke_;
  PrimeField ring_;
};

}  // namespace wb
