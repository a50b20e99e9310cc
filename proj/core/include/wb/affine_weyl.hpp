#pragma once

#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wb/root_datum.hpp"

namespace wb {

/// Finite Weyl group element, canonically represented by its action
/// matrix on the cocharacter lattice.
struct WeylElement {
  Mat m;
  bool operator==(const WeylElement& o) const { return m == o.m; }
};

/// Element t_lambda * w of the extended affine Weyl group X_*(T) x| W.
/// Multiplication: (l1, w1)(l2, w2) = (l1 + w1 l2, w1 w2).
struct ExtAffine {
  Vec t;  // translation part
  Mat w;  // finite part, cocharacter action matrix
  bool operator==(const ExtAffine& o) const { return t == o.t && w == o.w; }
  bool operator!=(const ExtAffine& o) const { return !(*this == o); }
};

struct ExtAffineLess {
  bool operator()(const ExtAffine& a, const ExtAffine& b) const {
    if (a.t != b.t) return a.t < b.t;
    return a.w < b.w;
  }
};

struct ExtAffineHash {
  std::size_t operator()(const ExtAffine& x) const {
    return hash_combine(hash_vec(x.t), hash_mat(x.w));
  }
};

/// Reduced expression x = omega * s_{i1} ... s_{ik} with k = length(x),
/// omega of length zero and letters in {0, ..., r}.
struct ReducedWord {
  ExtAffine omega;
  std::vector<int> word;
};

/// The extended affine Weyl group of a root datum: arithmetic, the
/// Iwahori-Matsumoto length, reduced words, the Omega decomposition,
/// Bruhat order and mu-admissible sets.
///
/// Conventions: the affine reflection s_0 is t_{-theta-vee} s_theta, i.e.
/// lengths are measured from the alcove on the antidominant side of the
/// origin. With this choice, for dominant mu and lambda,
///   length(t_mu) = <2rho, mu>   and
///   length(t_mu) + length(t_lambda w_0) = length(t_{mu+lambda} w_0).
///
/// Values are immutable and operations are pure; the internal memo caches
/// (lengths, reduced words, lower intervals) are mutex-guarded so a
/// context can be shared across threads. No result depends on cache hits.
class AffineWeyl {
 public:
  explicit AffineWeyl(RootDatum datum);

  const RootDatum& datum() const { return datum_; }

  /// Number of affine simple reflections, semisimple rank + 1.
  int num_generators() const { return datum_.semisimple_rank() + 1; }

  ExtAffine identity() const;
  /// s_i for i in {0, ..., r}; s_0 = t_{-theta-vee} s_theta.
  ExtAffine simple(int i) const;
  ExtAffine translation(const Cocharacter& lambda) const;
  ExtAffine from_finite(const Mat& w) const;

  /// Checks an element belongs to this group (matrix is a Weyl matrix of
  /// the right datum). Throws otherwise; used by every entry point.
  void require_valid(const ExtAffine& x) const;

  ExtAffine multiply(const ExtAffine& x, const ExtAffine& y) const;
  ExtAffine inverse(const ExtAffine& x) const;

  /// Affine action on the cocharacter lattice: x . v = t + w v.
  Vec apply(const ExtAffine& x, const Vec& v) const;

  Int length(const ExtAffine& x) const;

  /// Greedy right-descent reduction; recompose() inverts it exactly.
  ReducedWord reduced_word(const ExtAffine& x) const;
  ExtAffine recompose(const ReducedWord& rw) const;

  /// x = omega * w_a with length(w_a) = length(x) and w_a in W_aff.
  std::pair<ExtAffine, ExtAffine> omega_decompose(const ExtAffine& x) const;

  bool is_length_zero(const ExtAffine& x) const { return length(x) == 0; }

  /// Bruhat order via the lifting recursion. Elements in distinct Omega
  /// components are incomparable.
  bool bruhat_leq(const ExtAffine& x, const ExtAffine& y) const;

  /// {x : x <= y}, sorted by (length, element order).
  std::vector<ExtAffine> lower_interval(const ExtAffine& y) const;

  /// Adm(mu) = union over lambda in the W-orbit of mu of {w <= t_lambda}.
  /// Requires mu dominant. Sorted by (length, element order).
  std::vector<ExtAffine> admissible_set(const Cocharacter& mu) const;

  /// One (element, length) row per admissible element; lengths are the
  /// dimensions of the corresponding strata.
  std::vector<std::pair<ExtAffine, Int>> a_mu_report(const Cocharacter& mu) const;

  /// All |W| finite Weyl matrices, in generation order (identity first).
  const std::vector<Mat>& finite_elements() const { return finite_; }
  const Mat& longest_element() const { return finite_[w0_index_]; }
  Mat finite_inverse(const Mat& w) const;

  /// Length-zero representatives of a generating set of X_*(T)/Q-vee.
  /// Empty when X_* equals the coroot lattice.
  const std::vector<ExtAffine>& omega_generators() const { return omega_gens_; }

  /// The distinguished generator pi of Omega (throws when Omega is
  /// trivial), and the exponent k with omega ~ pi^k on translation
  /// classes. Used by the element grammar.
  const ExtAffine& omega_pi() const;
  Int omega_exponent(const ExtAffine& omega) const;

  /// Dominant representative of the translation class of x: the unique
  /// lambda with x in W t_lambda W.
  Cocharacter coset_dominant(const ExtAffine& x) const;

  /// Cache interface: reduced words may be seeded from disk. Entries are
  /// validated (recompose + length) before insertion and recomputed on
  /// miss; results never depend on a hit.
  std::map<ExtAffine, ReducedWord, ExtAffineLess> snapshot_words() const;
  void seed_words(const std::map<ExtAffine, ReducedWord, ExtAffineLess>& words) const;

 private:
  Int length_uncached(const ExtAffine& x) const;
  std::vector<ExtAffine> lower_interval_affine(const ExtAffine& y) const;

  RootDatum datum_;
  std::set<Vec> positive_set_;
  std::vector<Mat> finite_;
  std::unordered_map<std::size_t, std::vector<int>> finite_buckets_;
  std::vector<int> finite_inv_;
  int w0_index_ = 0;
  std::vector<ExtAffine> gens_;  // s_0 .. s_r
  std::vector<ExtAffine> omega_gens_;
  ExtAffine pi_;
  bool has_pi_ = false;
  Vec omega_class_functional_;  // integral functional X_* -> Z vanishing on Q-vee

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<ExtAffine, Int, ExtAffineHash> length_cache_;
  mutable std::unordered_map<ExtAffine, ReducedWord, ExtAffineHash> word_cache_;
  mutable std::unordered_map<ExtAffine, std::vector<ExtAffine>, ExtAffineHash>
      interval_cache_;

  int finite_index(const Mat& w) const;  // -1 when not a Weyl matrix
};

}  // namespace wb
