#include "wb/root_datum.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace wb {

using Rat = boost::rational<Int>;

namespace {

// Gaussian elimination on [columns | target] over Q. Throws when the
// columns are dependent; returns nothing when target is outside the span.
std::optional<std::vector<Rat>> solve_rational(const std::vector<Vec>& basis,
                                               const Vec& target) {
  const std::size_t n = target.size();
  const std::size_t r = basis.size();
  for (const Vec& b : basis)
    if (b.size() != n) throw error("dimension mismatch in solve");

  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(r + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = Rat(basis[j][i]);
    m[i][r] = Rat(target[i]);
  }

  std::vector<std::size_t> pivot_row(r);
  std::size_t row = 0;
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col] == Rat(0)) ++p;
    if (p == n) throw error("dependent basis in solve");
    std::swap(m[p], m[row]);
    Rat inv = m[row][col];
    for (std::size_t j = col; j <= r; ++j) m[row][j] /= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col] == Rat(0)) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j <= r; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (m[i][r] != Rat(0)) return std::nullopt;  // outside the span

  std::vector<Rat> x(r);
  for (std::size_t col = 0; col < r; ++col) x[col] = m[pivot_row[col]][r];
  return x;
}

}  // namespace

std::optional<std::vector<std::pair<Int, Int>>> solve_in_basis(
    const std::vector<Vec>& basis, const Vec& target) {
  auto sol = solve_rational(basis, target);
  if (!sol) return std::nullopt;
  std::vector<std::pair<Int, Int>> out;
  out.reserve(sol->size());
  for (const Rat& x : *sol) out.emplace_back(x.numerator(), x.denominator());
  return out;
}

std::optional<Vec> solve_in_basis_integral(const std::vector<Vec>& basis,
                                           const Vec& target) {
  auto sol = solve_rational(basis, target);
  if (!sol) return std::nullopt;
  Vec out;
  out.reserve(sol->size());
  for (const Rat& x : *sol) {
    if (x.denominator() != 1) return std::nullopt;
    out.push_back(x.numerator());
  }
  return out;
}

bool RootDatum::is_dominant(const Cocharacter& mu) const {
  if (static_cast<int>(mu.size()) != rank) throw error("dimension mismatch: cocharacter has wrong length");
  for (const Vec& a : simple_roots)
    if (dot(a, mu) < 0) return false;
  return true;
}

Cocharacter RootDatum::simple_reflection(int i, const Cocharacter& mu) const {
  return sub(mu, scaled(simple_coroots[i], dot(simple_roots[i], mu)));
}

Mat RootDatum::simple_reflection_matrix(int i) const {
  Mat m = identity_matrix(rank);
  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b)
      m[a][b] -= simple_coroots[i][a] * simple_roots[i][b];
  return m;
}

Mat RootDatum::highest_root_reflection_matrix() const {
  Mat m = identity_matrix(rank);
  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b)
      m[a][b] -= highest_coroot[a] * highest_root[b];
  return m;
}

namespace {

// Reflection closure from the simple (root, coroot) pairs. Keeps the
// root/coroot correspondence through every reflection step.
void close_roots(RootDatum& d) {
  const int r = d.semisimple_rank();
  std::map<Vec, Vec> coroot_of;
  std::queue<Vec> queue;
  for (int i = 0; i < r; ++i) {
    coroot_of[d.simple_roots[i]] = d.simple_coroots[i];
    queue.push(d.simple_roots[i]);
  }
  while (!queue.empty()) {
    Vec beta = queue.front();
    queue.pop();
    Vec beta_vee = coroot_of.at(beta);
    for (int i = 0; i < r; ++i) {
      Vec gamma = sub(beta, scaled(d.simple_roots[i], dot(beta, d.simple_coroots[i])));
      if (coroot_of.count(gamma)) continue;
      Vec gamma_vee =
          sub(beta_vee, scaled(d.simple_coroots[i], dot(d.simple_roots[i], beta_vee)));
      coroot_of[gamma] = gamma_vee;
      queue.push(gamma);
      if (coroot_of.size() > 500) throw error("root closure does not terminate: not finite type");
    }
  }

  // A root is positive iff its simple-root coordinates are nonnegative.
  std::vector<std::pair<Int, Vec>> positives;  // (root height, root)
  for (const auto& [beta, beta_vee] : coroot_of) {
    auto coords = solve_in_basis_integral(d.simple_roots, beta);
    if (!coords) throw error("root outside the simple-root lattice");
    bool pos = true, neg = true;
    Int ht = 0;
    for (Int c : *coords) {
      ht += c;
      if (c < 0) pos = false;
      if (c > 0) neg = false;
    }
    if (!pos && !neg) throw error("root with mixed signs in closure");
    if (pos) positives.emplace_back(ht, beta);
  }
  std::sort(positives.begin(), positives.end());
  d.positive_roots.clear();
  d.positive_coroots.clear();
  d.two_rho = Vec(d.rank, 0);
  for (const auto& [ht, beta] : positives) {
    d.positive_roots.push_back(beta);
    d.positive_coroots.push_back(coroot_of.at(beta));
    d.two_rho = add(d.two_rho, beta);
  }
  // Unique root of maximal height.
  d.highest_root = positives.back().second;
  d.highest_coroot = coroot_of.at(d.highest_root);
  if (positives.size() > 1 &&
      positives[positives.size() - 2].first == positives.back().first)
    throw error("highest root is not unique: root system not irreducible");
}

RootDatum make_datum(std::string name, int rank, std::vector<Vec> roots,
                     std::vector<Vec> coroots, Vec central) {
  RootDatum d;
  d.name = std::move(name);
  d.rank = rank;
  d.simple_roots = std::move(roots);
  d.simple_coroots = std::move(coroots);
  d.central = std::move(central);
  close_roots(d);
  d.validate();
  return d;
}

}  // namespace

void RootDatum::validate() const {
  const int r = semisimple_rank();
  for (int i = 0; i < r; ++i) {
    if (dot(simple_roots[i], simple_coroots[i]) != 2)
      throw error("Cartan diagonal entry is not 2");
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      Int aij = dot(simple_roots[j], simple_coroots[i]);
      Int aji = dot(simple_roots[i], simple_coroots[j]);
      if (aij > 0 || aji > 0) throw error("positive off-diagonal Cartan entry");
      if ((aij == 0) != (aji == 0)) throw error("asymmetric Cartan zero pattern");
    }
  }
  // Simple coroots must be linearly independent (solve throws otherwise).
  solve_in_basis(simple_coroots, Vec(rank, 0));

  // Irreducible Dynkin diagram: the derived group is almost simple.
  std::vector<bool> seen(r, false);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = true;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop();
    for (int j = 0; j < r; ++j)
      if (!seen[j] && dot(simple_roots[j], simple_coroots[i]) != 0) {
        seen[j] = true;
        queue.push(j);
      }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw error("root system is not irreducible");

  for (int i = 0; i < r; ++i)
    if (dot(two_rho, simple_coroots[i]) != 2)
      throw error("two_rho does not pair to 2 with a simple coroot");
  for (int i = 0; i < r; ++i)
    if (dot(highest_root, simple_coroots[i]) < 0)
      throw error("highest root is not dominant");
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"SL2", "GL2", "SL3",
                                                 "GL3", "Sp4", "G2"};
  return names;
}

RootDatum build_datum(const std::string& preset) {
  if (preset == "SL2")
    return make_datum("SL2", 1, {{2}}, {{1}}, {});
  if (preset == "GL2")
    return make_datum("GL2", 2, {{1, -1}}, {{1, -1}}, {1, 1});
  if (preset == "SL3")
    return make_datum("SL3", 2, {{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}}, {});
  if (preset == "GL3")
    return make_datum("GL3", 3, {{1, -1, 0}, {0, 1, -1}},
                      {{1, -1, 0}, {0, 1, -1}}, {1, 1, 1});
  if (preset == "Sp4")
    return make_datum("Sp4", 2, {{1, -1}, {0, 2}}, {{1, -1}, {0, 1}}, {});
  if (preset == "G2")
    return make_datum("G2", 2, {{2, -3}, {-1, 2}}, {{1, 0}, {0, 1}}, {});
  throw error("unknown preset '" + preset + "'; supported: SL2 GL2 SL3 GL3 Sp4 G2");
}

bool dominance_leq(const RootDatum& d, const Cocharacter& lambda,
                   const Cocharacter& mu) {
  if (lambda.size() != mu.size() || static_cast<int>(mu.size()) != d.rank)
    throw error("dimension mismatch in dominance comparison");
  auto coeffs = solve_in_basis_integral(d.simple_coroots, sub(mu, lambda));
  if (!coeffs) return false;
  return std::all_of(coeffs->begin(), coeffs->end(), [](Int c) { return c >= 0; });
}

std::vector<Cocharacter> weyl_orbit(const RootDatum& d, const Cocharacter& mu) {
  if (static_cast<int>(mu.size()) != d.rank) throw error("dimension mismatch: cocharacter has wrong length");
  std::set<Vec> orbit{mu};
  std::queue<Vec> queue;
  queue.push(mu);
  while (!queue.empty()) {
    Vec lam = queue.front();
    queue.pop();
    for (int i = 0; i < d.semisimple_rank(); ++i) {
      Vec next = d.simple_reflection(i, lam);
      if (orbit.insert(next).second) queue.push(next);
    }
  }
  return {orbit.begin(), orbit.end()};
}

Cocharacter dominant_representative(const RootDatum& d, const Cocharacter& mu) {
  Cocharacter lam = mu;
  for (;;) {
    bool moved = false;
    for (int i = 0; i < d.semisimple_rank(); ++i) {
      if (dot(d.simple_roots[i], lam) < 0) {
        lam = d.simple_reflection(i, lam);
        moved = true;
      }
    }
    if (!moved) return lam;
  }
}

std::vector<Cocharacter> dominant_below(const RootDatum& d,
                                        const Cocharacter& mu) {
  if (!d.is_dominant(mu)) throw error("dominant_below requires a dominant cocharacter");
  const int r = d.semisimple_rank();
  const Int budget = d.height(mu) / 2;  // subtracting a simple coroot costs height 2
  std::vector<std::pair<std::pair<Int, Vec>, Vec>> found;
  std::vector<Int> c(r, 0);
  // Odometer over coefficient vectors with sum <= budget.
  for (;;) {
    Int total = std::accumulate(c.begin(), c.end(), Int{0});
    if (total <= budget) {
      Vec lam = mu;
      for (int i = 0; i < r; ++i) lam = sub(lam, scaled(d.simple_coroots[i], c[i]));
      if (d.is_dominant(lam)) found.push_back({{d.height(lam), lam}, lam});
    }
    int pos = r - 1;
    while (pos >= 0) {
      ++c[pos];
      if (std::accumulate(c.begin(), c.end(), Int{0}) <= budget) break;
      c[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(found.begin(), found.end());
  std::vector<Cocharacter> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

Cocharacter normalize_central(const RootDatum& d, Cocharacter mu) {
  if (d.central.empty()) return mu;
  // Presets have central generator (1,...,1); pin the last coordinate to 0.
  Int k = mu.back() / d.central.back();
  return sub(mu, scaled(d.central, k));
}

std::vector<Cocharacter> dominant_cocharacters(const RootDatum& d,
                                               Int max_height) {
  const int free_rank = d.central.empty() ? d.rank : d.rank - 1;
  std::vector<std::pair<std::pair<Int, Vec>, Vec>> found;
  Vec mu(d.rank, 0);
  std::vector<Int> c(free_rank, -max_height);
  for (;;) {
    for (int i = 0; i < free_rank; ++i) mu[i] = c[i];
    if (d.is_dominant(mu) && d.height(mu) <= max_height)
      found.push_back({{d.height(mu), mu}, mu});
    int pos = free_rank - 1;
    while (pos >= 0) {
      if (c[pos] < max_height) {
        ++c[pos];
        break;
      }
      c[pos] = -max_height;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(found.begin(), found.end());
  std::vector<Cocharacter> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

}  // namespace wb
