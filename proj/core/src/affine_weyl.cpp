#include "wb/affine_weyl.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <deque>
#include <numeric>
#include <queue>
#include <set>

namespace wb {

using Rat = boost::rational<Int>;

namespace {

// Primitive integer functional vanishing on the given cocharacter-lattice
// vectors. Requires a one-dimensional kernel.
Vec kernel_functional(const std::vector<Vec>& rows, int n) {
  const std::size_t r = rows.size();
  std::vector<std::vector<Rat>> m(r, std::vector<Rat>(n));
  for (std::size_t i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rat(rows[i][j]);

  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (int col = 0; col < n && row < r; ++col) {
    std::size_t p = row;
    while (p < r && m[p][col] == Rat(0)) ++p;
    if (p == r) continue;
    std::swap(m[p], m[row]);
    Rat inv = m[row][col];
    for (int j = col; j < n; ++j) m[row][j] /= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || m[i][col] == Rat(0)) continue;
      Rat f = m[i][col];
      for (int j = col; j < n; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (row != r || static_cast<int>(r) + 1 != n)
    throw error("omega class functional needs corank one");

  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end())
    ++free_col;

  std::vector<Rat> u(n, Rat(0));
  u[free_col] = Rat(1);
  for (std::size_t i = 0; i < r; ++i) u[pivot_col[i]] = -m[i][free_col];

  Int denom = 1;
  for (const Rat& x : u) denom = std::lcm(denom, x.denominator());
  Vec out(n);
  for (int j = 0; j < n; ++j) out[j] = boost::rational_cast<Int>(u[j] * denom);
  Int g = 0;
  for (Int x : out) g = std::gcd(g, x < 0 ? -x : x);
  for (Int& x : out) x /= g;
  for (Int x : out) {
    if (x > 0) break;
    if (x < 0) {
      for (Int& y : out) y = -y;
      break;
    }
  }
  return out;
}

// Integer vector b with <u, b> = 1 (u primitive). Chained extended gcd.
Vec unit_pairing_vector(const Vec& u) {
  const int n = static_cast<int>(u.size());
  Vec b(n, 0);
  Int g = 0;
  for (int j = 0; j < n; ++j) {
    if (u[j] == 0) continue;
    if (g == 0) {
      g = u[j] < 0 ? -u[j] : u[j];
      b[j] = u[j] < 0 ? -1 : 1;
      continue;
    }
    // g_new = s*g + t*|u[j]|
    Int r0 = g, r1 = u[j] < 0 ? -u[j] : u[j];
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      Int q = r0 / r1;
      Int r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
      r0 = r1; r1 = r2;
      s0 = s1; s1 = s2;
      t0 = t1; t1 = t2;
    }
    for (Int& x : b) x *= s0;
    b[j] = u[j] < 0 ? -t0 : t0;
    g = r0;
    if (g == 1) break;
  }
  if (g != 1) throw error("omega class functional is not primitive");
  return b;
}

}  // namespace

AffineWeyl::AffineWeyl(RootDatum datum) : datum_(std::move(datum)) {
  datum_.validate();
  const int n = datum_.rank;
  const int r = datum_.semisimple_rank();

  // Finite Weyl group by closure under the simple reflections.
  std::vector<Mat> simple_mats;
  for (int i = 0; i < r; ++i) simple_mats.push_back(datum_.simple_reflection_matrix(i));
  finite_.push_back(identity_matrix(n));
  finite_buckets_[hash_mat(finite_[0])].push_back(0);
  std::queue<int> queue;
  queue.push(0);
  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop();
    for (const Mat& s : simple_mats) {
      Mat next = mat_mul(s, finite_[idx]);
      if (finite_index(next) >= 0) continue;
      finite_.push_back(next);
      int nidx = static_cast<int>(finite_.size()) - 1;
      finite_buckets_[hash_mat(next)].push_back(nidx);
      queue.push(nidx);
      if (finite_.size() > 4000) throw error("finite Weyl group closure too large");
    }
  }
  finite_inv_.assign(finite_.size(), -1);
  const Mat id = identity_matrix(n);
  for (std::size_t i = 0; i < finite_.size(); ++i) {
    for (std::size_t j = 0; j < finite_.size(); ++j) {
      if (mat_mul(finite_[i], finite_[j]) == id) {
        finite_inv_[i] = static_cast<int>(j);
        break;
      }
    }
  }

  // Longest element: maximal number of inversions.
  positive_set_.insert(datum_.positive_roots.begin(), datum_.positive_roots.end());
  std::size_t most = 0;
  for (std::size_t i = 0; i < finite_.size(); ++i) {
    // w sends alpha to (M_{w^{-1}})^T alpha on the character side.
    const Mat& w_inv = finite_[finite_inv_[i]];
    std::size_t inversions = 0;
    for (const Vec& alpha : datum_.positive_roots)
      if (!positive_set_.count(transpose_apply(w_inv, alpha))) ++inversions;
    if (inversions > most) {
      most = inversions;
      w0_index_ = static_cast<int>(i);
    }
  }
  if (most != datum_.positive_roots.size())
    throw error("longest element does not invert all positive roots");

  gens_.push_back(ExtAffine{negate(datum_.highest_coroot),
                            datum_.highest_root_reflection_matrix()});
  for (int i = 0; i < r; ++i) gens_.push_back(ExtAffine{Vec(n, 0), simple_mats[i]});

  // Omega: length-zero representatives of X_*(T)/Q-vee.
  bool coroot_basis_unimodular = true;
  for (int j = 0; j < n && coroot_basis_unimodular; ++j) {
    Vec e(n, 0);
    e[j] = 1;
    if (n != r || !solve_in_basis_integral(datum_.simple_coroots, e))
      coroot_basis_unimodular = false;
  }
  if (!coroot_basis_unimodular) {
    if (n != r + 1) throw error("unsupported cocharacter lattice for Omega");
    omega_class_functional_ = kernel_functional(datum_.simple_coroots, n);
    Vec b = unit_pairing_vector(omega_class_functional_);
    pi_ = reduced_word(translation(b)).omega;
    has_pi_ = true;
    for (int j = 0; j < n; ++j) {
      Vec e(n, 0);
      e[j] = 1;
      ExtAffine om = reduced_word(translation(e)).omega;
      // Consistency: the class exponent must reproduce the element.
      Int k = omega_exponent(om);
      ExtAffine probe = identity();
      ExtAffine step = k >= 0 ? pi_ : inverse(pi_);
      for (Int c = 0; c < (k >= 0 ? k : -k); ++c) probe = multiply(probe, step);
      if (probe != om) throw error("Omega is not generated by pi");
      if (!(om == identity()) &&
          std::find(omega_gens_.begin(), omega_gens_.end(), om) == omega_gens_.end())
        omega_gens_.push_back(om);
    }
  }
}

int AffineWeyl::finite_index(const Mat& w) const {
  auto it = finite_buckets_.find(hash_mat(w));
  if (it == finite_buckets_.end()) return -1;
  for (int idx : it->second)
    if (finite_[idx] == w) return idx;
  return -1;
}

ExtAffine AffineWeyl::identity() const {
  return ExtAffine{Vec(datum_.rank, 0), identity_matrix(datum_.rank)};
}

ExtAffine AffineWeyl::simple(int i) const {
  if (i < 0 || i >= num_generators()) throw error("affine generator index out of range");
  return gens_[i];
}

ExtAffine AffineWeyl::translation(const Cocharacter& lambda) const {
  if (static_cast<int>(lambda.size()) != datum_.rank)
    throw error("dimension mismatch: translation has wrong length");
  return ExtAffine{lambda, identity_matrix(datum_.rank)};
}

ExtAffine AffineWeyl::from_finite(const Mat& w) const {
  ExtAffine x{Vec(datum_.rank, 0), w};
  require_valid(x);
  return x;
}

void AffineWeyl::require_valid(const ExtAffine& x) const {
  if (static_cast<int>(x.t.size()) != datum_.rank || finite_index(x.w) < 0)
    throw error("element does not belong to this group (datum mismatch)");
}

ExtAffine AffineWeyl::multiply(const ExtAffine& x, const ExtAffine& y) const {
  require_valid(x);
  require_valid(y);
  return ExtAffine{add(x.t, mat_vec(x.w, y.t)), mat_mul(x.w, y.w)};
}

ExtAffine AffineWeyl::inverse(const ExtAffine& x) const {
  require_valid(x);
  const Mat& w_inv = finite_[finite_inv_[finite_index(x.w)]];
  return ExtAffine{negate(mat_vec(w_inv, x.t)), w_inv};
}

Vec AffineWeyl::apply(const ExtAffine& x, const Vec& v) const {
  return add(x.t, mat_vec(x.w, v));
}

Int AffineWeyl::length_uncached(const ExtAffine& x) const {
  // l(t_lambda w) = sum over alpha > 0 of |<alpha, lambda>| when
  // w^{-1} alpha > 0, and |<alpha, lambda> + 1| when w^{-1} alpha < 0.
  Int len = 0;
  for (const Vec& alpha : datum_.positive_roots) {
    Vec beta = transpose_apply(x.w, alpha);  // w^{-1} acting on characters
    Int m = dot(alpha, x.t);
    if (positive_set_.count(beta)) {
      len += m < 0 ? -m : m;
    } else {
      len += m + 1 < 0 ? -(m + 1) : m + 1;
    }
  }
  return len;
}

Int AffineWeyl::length(const ExtAffine& x) const {
  require_valid(x);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = length_cache_.find(x);
    if (it != length_cache_.end()) return it->second;
  }
  Int len = length_uncached(x);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  length_cache_.emplace(x, len);
  return len;
}

ReducedWord AffineWeyl::reduced_word(const ExtAffine& x) const {
  require_valid(x);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = word_cache_.find(x);
    if (it != word_cache_.end()) return it->second;
  }
  ExtAffine cur = x;
  Int len = length(cur);
  std::deque<int> letters;
  while (len > 0) {
    bool moved = false;
    for (int i = 0; i < num_generators(); ++i) {
      ExtAffine next = multiply(cur, gens_[i]);
      Int nlen = length(next);
      if (nlen < len) {
        letters.push_front(i);
        cur = next;
        len = nlen;
        moved = true;
        break;
      }
    }
    if (!moved) throw error("no descent found for a positive-length element");
  }
  ReducedWord rw{cur, {letters.begin(), letters.end()}};
  std::lock_guard<std::mutex> lock(cache_mutex_);
  word_cache_.emplace(x, rw);
  return rw;
}

ExtAffine AffineWeyl::recompose(const ReducedWord& rw) const {
  ExtAffine x = rw.omega;
  for (int i : rw.word) x = multiply(x, gens_[i]);
  return x;
}

std::pair<ExtAffine, ExtAffine> AffineWeyl::omega_decompose(const ExtAffine& x) const {
  ReducedWord rw = reduced_word(x);
  return {rw.omega, multiply(inverse(rw.omega), x)};
}

bool AffineWeyl::bruhat_leq(const ExtAffine& x, const ExtAffine& y) const {
  auto [omx, u0] = omega_decompose(x);
  auto [omy, v0] = omega_decompose(y);
  if (omx != omy) return false;
  ExtAffine u = u0, v = v0;
  Int lu = length(u), lv = length(v);
  while (true) {
    if (lu > lv) return false;
    if (lv == 0) return u == v;
    // Left descent of v, then lift.
    int s = -1;
    ExtAffine sv = v;
    for (int i = 0; i < num_generators(); ++i) {
      ExtAffine cand = multiply(gens_[i], v);
      if (length(cand) < lv) {
        s = i;
        sv = cand;
        break;
      }
    }
    ExtAffine su = multiply(gens_[s], u);
    Int lsu = length(su);
    if (lsu < lu) {
      u = su;
      lu = lsu;
    }
    v = sv;
    --lv;
  }
}

std::vector<ExtAffine> AffineWeyl::lower_interval_affine(const ExtAffine& y) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = interval_cache_.find(y);
    if (it != interval_cache_.end()) return it->second;
  }
  std::vector<ExtAffine> result;
  Int ly = length(y);
  if (ly == 0) {
    result.push_back(y);
  } else {
    int s = -1;
    ExtAffine sy = y;
    for (int i = 0; i < num_generators(); ++i) {
      ExtAffine cand = multiply(gens_[i], y);
      if (length(cand) < ly) {
        s = i;
        sy = cand;
        break;
      }
    }
    // Lifting: {u <= y} = {u <= sy} union s{u <= sy}.
    std::vector<ExtAffine> below = lower_interval_affine(sy);
    std::set<ExtAffine, ExtAffineLess> acc(below.begin(), below.end());
    for (const ExtAffine& u : below) acc.insert(multiply(gens_[s], u));
    result.assign(acc.begin(), acc.end());
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  interval_cache_.emplace(y, result);
  return result;
}

std::vector<ExtAffine> AffineWeyl::lower_interval(const ExtAffine& y) const {
  auto [om, ya] = omega_decompose(y);
  std::vector<ExtAffine> out;
  for (const ExtAffine& u : lower_interval_affine(ya)) out.push_back(multiply(om, u));
  std::sort(out.begin(), out.end(), [&](const ExtAffine& a, const ExtAffine& b) {
    Int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return ExtAffineLess{}(a, b);
  });
  return out;
}

std::vector<ExtAffine> AffineWeyl::admissible_set(const Cocharacter& mu) const {
  if (!datum_.is_dominant(mu))
    throw error("admissible set requires a dominant cocharacter");
  std::set<ExtAffine, ExtAffineLess> acc;
  ExtAffine omega_common = identity();
  bool first = true;
  for (const Cocharacter& lam : weyl_orbit(datum_, mu)) {
    auto [om, ta] = omega_decompose(translation(lam));
    if (first) {
      omega_common = om;
      first = false;
    } else if (om != omega_common) {
      throw error("translations in one W-orbit landed in distinct Omega classes");
    }
    for (const ExtAffine& u : lower_interval_affine(ta)) acc.insert(multiply(om, u));
  }
  std::vector<ExtAffine> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end(), [&](const ExtAffine& a, const ExtAffine& b) {
    Int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return ExtAffineLess{}(a, b);
  });
  return out;
}

std::vector<std::pair<ExtAffine, Int>> AffineWeyl::a_mu_report(
    const Cocharacter& mu) const {
  std::vector<std::pair<ExtAffine, Int>> rows;
  for (const ExtAffine& w : admissible_set(mu)) rows.emplace_back(w, length(w));
  return rows;
}

Mat AffineWeyl::finite_inverse(const Mat& w) const {
  int idx = finite_index(w);
  if (idx < 0) throw error("matrix is not a Weyl element of this datum");
  return finite_[finite_inv_[idx]];
}

const ExtAffine& AffineWeyl::omega_pi() const {
  if (!has_pi_) throw error("Omega is trivial for " + datum_.name);
  return pi_;
}

Int AffineWeyl::omega_exponent(const ExtAffine& omega) const {
  require_valid(omega);
  if (omega_class_functional_.empty()) {
    if (omega == identity()) return 0;
    throw error("nontrivial length-zero element in a group with trivial Omega");
  }
  return dot(omega_class_functional_, omega.t);
}

Cocharacter AffineWeyl::coset_dominant(const ExtAffine& x) const {
  require_valid(x);
  return dominant_representative(datum_, x.t);
}

std::map<ExtAffine, ReducedWord, ExtAffineLess> AffineWeyl::snapshot_words() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return {word_cache_.begin(), word_cache_.end()};
}

void AffineWeyl::seed_words(
    const std::map<ExtAffine, ReducedWord, ExtAffineLess>& words) const {
  for (const auto& [x, rw] : words) {
    require_valid(x);
    if (length(rw.omega) != 0) throw error("cache entry corrupt: omega part has positive length");
    if (recompose(rw) != x) throw error("cache entry corrupt: word does not recompose");
    if (static_cast<Int>(rw.word.size()) != length(x))
      throw error("cache entry corrupt: word is not reduced");
    std::lock_guard<std::mutex> lock(cache_mutex_);
    word_cache_.emplace(x, rw);
  }
}

}  // namespace wb
