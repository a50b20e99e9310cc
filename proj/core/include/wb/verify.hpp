#pragma once

#include <string>
#include <vector>

#include "wb/satake.hpp"
#include "wb/textio.hpp"

namespace wb {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample payload on failure, empty on pass
};

struct VerificationReport {
  std::string suite;
  std::string group;
  Json params;
  std::vector<CaseResult> cases;
  double duration_ms = 0;

  bool passed() const;
  std::size_t failures() const;
  Json to_json(bool include_timing = true) const;
  std::string summary_line() const;
  std::string to_text() const;  // one line per case plus the summary
};

struct VerifyOptions {
  Int height = 6;                 // bound on <2rho, mu>
  std::vector<Int> primes = {3, 5};
  bool allow_p2 = false;
};

/// z_mu is central and z_mu * 1_K = sum of 1_lambda over lambda <= mu,
/// as an exact identity of Iwahori elements, over the (mu, p) grid.
VerificationReport verify_central(const AffineWeyl& W, const VerifyOptions& opts);

/// The Bernstein map lands on z_mu: c_inverse(satake_inverse(mu)) = z_mu,
/// computed through the triangular-basis path, plus centrality.
VerificationReport verify_bernstein(const AffineWeyl& W, const VerifyOptions& opts);

/// z_mu * z_nu = z_{mu+nu} for dominant pairs with height(mu+nu) bounded.
VerificationReport verify_monoidal(const AffineWeyl& W, const VerifyOptions& opts);

/// Affine Weyl invariants: translation lengths equal <2rho, mu>, the
/// length-additivity identity for t_mu * t_lambda w0, Bruhat order against
/// the subword oracle, the Cartan partition into spherical double cosets,
/// reduced-word round-trips, and Bruhat/dominance compatibility on
/// translations.
VerificationReport verify_coxeter(const AffineWeyl& W);

/// Independent-oracle equivalences: BFS admissible sets against 2^l
/// subword enumeration, associativity over Z[q] on random triples,
/// specialization as a ring homomorphism on random pairs, the quadratic
/// relation, the Omega twist, and exhaustive length-additive products.
VerificationReport verify_oracles(const AffineWeyl& W, const VerifyOptions& opts);

std::vector<VerificationReport> verify_all(const AffineWeyl& W,
                                           const VerifyOptions& opts);

// ---- test oracles, deliberately independent of the production paths ----

/// All products of subwords of one reduced word of y: the brute-force
/// lower Bruhat interval. Exponential in length(y).
std::vector<ExtAffine> subword_closure(const AffineWeyl& W, const ExtAffine& y);

/// Union of subword closures over the translations of the W-orbit of mu.
std::vector<ExtAffine> admissible_set_bruteforce(const AffineWeyl& W,
                                                 const Cocharacter& mu);

/// Elements of W_aff with length <= max_length (breadth-first).
std::vector<ExtAffine> waff_ball(const AffineWeyl& W, Int max_length);

// ---- deterministic table export ----

/// table "adm-sizes": |Adm(mu)| over the dominant grid; "strata": the
/// (element, length) rows of A(mu); "matrix": the unitriangular
/// basis-change matrix of the inverse Satake map on the dominant grid.
std::string export_table(const AffineWeyl& W, const std::string& table,
                         const std::string& format, Int max_height,
                         const Cocharacter* mu);

}  // namespace wb
