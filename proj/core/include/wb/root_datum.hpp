#pragma once

#include <string>
#include <vector>

#include "wb/base.hpp"

namespace wb {

// A cocharacter is an integer vector in X_*(T) ~ Z^rank. Dominance is a
// predicate, not a type constraint.
using Cocharacter = Vec;

/// Based root datum of a split reductive group with almost simple derived
/// group, in fixed preset coordinates. The pairing between the character
/// and cocharacter lattices is the standard dot product, so a simple root
/// and a cocharacter pair via dot().
///
/// Preset coordinate tables:
///   SL2, SL3, G2 : X_* has the simple coroots as standard basis, X^* has
///                  the fundamental weights as standard basis (so a simple
///                  root is a column of the Cartan matrix).
///   Sp4          : standard symplectic coordinates, roots ±e1±e2, ±2e_i.
///   GL2, GL3     : standard coordinates, roots e_i − e_j on both sides.
struct RootDatum {
  std::string name;
  int rank = 0;                       // dimension of both lattices
  std::vector<Vec> simple_roots;      // character side
  std::vector<Vec> simple_coroots;    // cocharacter side
  std::vector<Vec> positive_roots;    // reflection closure of the simples
  std::vector<Vec> positive_coroots;  // coroot matched to positive_roots[i]
  Vec highest_root;                   // theta
  Vec highest_coroot;                 // theta-vee
  Vec two_rho;                        // sum of positive roots
  Vec central;                        // generator of the central lattice, empty if X_* = span(coroots)

  int semisimple_rank() const { return static_cast<int>(simple_roots.size()); }

  Int pair(const Vec& character, const Vec& cocharacter) const {
    return dot(character, cocharacter);
  }

  // <2rho, mu>; for dominant mu this is the length of the translation t_mu.
  Int height(const Cocharacter& mu) const { return dot(two_rho, mu); }

  bool is_dominant(const Cocharacter& mu) const;

  // s_i(mu) = mu - <alpha_i, mu> alpha_i-vee
  Cocharacter simple_reflection(int i, const Cocharacter& mu) const;

  // Action matrix of s_i on the cocharacter lattice.
  Mat simple_reflection_matrix(int i) const;

  // Reflection in the highest root, as a matrix on X_*.
  Mat highest_root_reflection_matrix() const;

  void validate() const;  // throws wb::error when an invariant fails
};

const std::vector<std::string>& preset_names();

/// Builds one of the preset data ("SL2", "GL2", "SL3", "GL3", "Sp4", "G2").
/// Throws on an unknown label.
RootDatum build_datum(const std::string& preset);

/// Dominance order: true iff mu - lambda is a nonnegative *integer*
/// combination of simple coroots. Exact rational solve; differences
/// outside the coroot span (distinct central characters) compare false.
bool dominance_leq(const RootDatum& d, const Cocharacter& lambda,
                   const Cocharacter& mu);

/// W-orbit of mu, by breadth-first closure under the simple reflections.
/// Sorted lexicographically for reproducibility.
std::vector<Cocharacter> weyl_orbit(const RootDatum& d, const Cocharacter& mu);

/// The unique dominant element of the orbit of mu.
Cocharacter dominant_representative(const RootDatum& d, const Cocharacter& mu);

/// All dominant lambda with lambda <= mu in dominance order (mu included
/// when dominant). Sorted by (height, lex).
std::vector<Cocharacter> dominant_below(const RootDatum& d,
                                        const Cocharacter& mu);

/// Subtracts the central component so that enumeration grids are finite
/// for the GL presets: the representative has last coordinate 0. Identity
/// for data with X_* = span(coroots).
Cocharacter normalize_central(const RootDatum& d, Cocharacter mu);

/// Dominant cocharacters with height <= max_height, one representative
/// per central coset, sorted by (height, lex) so minimal counterexamples
/// surface first.
std::vector<Cocharacter> dominant_cocharacters(const RootDatum& d,
                                               Int max_height);

}  // namespace wb
