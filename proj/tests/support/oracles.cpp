#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "simpcalc/constructions.hpp"
#include "simpcalc/delta.hpp"
#include "simpcalc/error.hpp"
#include "simpcalc/excision.hpp"
#include "simpcalc/nerve.hpp"

namespace oracle {

using namespace simpcalc;

namespace {

std::size_t uz(int k) { return static_cast<std::size_t>(k); }

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InvalidArgument("determinant: not square");
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Integer term = m(0, c) * determinant(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

IntVector invariant_factors(const IntMatrix& m) {
  IntVector out;
  Integer previous = 1;
  const std::size_t r = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= r; ++k) {
    Integer g = 0;
    for (const auto& rows : subsets(m.rows(), k))
      for (const auto& cols : subsets(m.cols(), k)) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(rows[i], cols[j]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(determinant(minor)).get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

std::size_t rank(const IntMatrix& m) { return invariant_factors(m).size(); }

HomologyGroup homology(const ChainComplex& c, int n) {
  const IntMatrix out = c.boundary(n);
  const IntMatrix in = c.boundary(n + 1);
  const std::size_t r = c.rank(n) - rank(out) - rank(in);
  IntVector torsion;
  for (const auto& d : invariant_factors(in))
    if (d > 1) torsion.push_back(d);
  return HomologyGroup{r, torsion};
}

std::size_t count_maps(const FiniteSSet& x, const FiniteSSet& y) {
  const int n = static_cast<int>(x.size());
  std::vector<Simplex> images(x.size());
  std::function<std::size_t(int)> go = [&](int id) -> std::size_t {
    if (id == n) return 1;
    const auto& cell = x.cell(id);
    std::size_t total = 0;
    for (const Simplex& candidate : y.simplices(cell.dim)) {
      bool ok = true;
      for (int i = 0; ok && i < static_cast<int>(cell.faces.size()); ++i) {
        const Simplex& f = cell.faces[uz(i)];
        const Simplex expected = images[uz(f.base)].pull_back_along(f.surjection());
        ok = expected == y.face(candidate, i);
      }
      if (!ok) continue;
      images[uz(id)] = candidate;
      total += go(id + 1);
    }
    return total;
  };
  return go(0);
}

std::vector<std::string> identity_violations(const FiniteSSet& x, int top) {
  std::vector<std::string> out;
  const auto d = [&](const Simplex& s, int i) { return x.apply(MonotoneMap::coface(s.dim, i), s); };
  const auto s_ = [&](const Simplex& s, int j) { return x.apply(MonotoneMap::codegeneracy(s.dim, j), s); };
  const auto report = [&](const std::string& what, const Simplex& s) { out.push_back(what + " at " + x.format(s)); };
  for (int n = 0; n <= top; ++n) {
    for (const Simplex& s : x.simplices(n)) {
      if (!x.is_valid(s)) report("invalid simplex", s);
      for (int j = 0; j <= n; ++j) {
        if (n >= 2)
          for (int i = 0; i < j; ++i)
            if (d(d(s, j), i) != d(d(s, i), j - 1)) report("d" + std::to_string(i) + "d" + std::to_string(j), s);
        const Simplex sj = s_(s, j);
        for (int i = 0; i <= n + 1; ++i) {
          Simplex expected;
          if (i < j)
            expected = s_(d(s, i), j - 1);
          else if (i == j || i == j + 1)
            expected = s;
          else
            expected = s_(d(s, i - 1), j);
          if (n == 0 && i != j && i != j + 1) continue;
          if (d(sj, i) != expected) report("d" + std::to_string(i) + "s" + std::to_string(j), s);
        }
        for (int i = 0; i <= j; ++i)
          if (s_(s_(s, j), i) != s_(s_(s, i), j + 1)) report("s" + std::to_string(i) + "s" + std::to_string(j), s);
      }
    }
  }
  return out;
}

bool closed_under_faces(const FiniteSSet& x, const std::vector<bool>& members) {
  for (int id = 0; id < static_cast<int>(x.size()); ++id) {
    if (!members[uz(id)]) continue;
    for (const auto& f : x.cell(id).faces)
      if (!members[uz(f.base)]) return false;
  }
  return true;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

namespace {

struct Unimodular {
  IntMatrix u, inverse;
};

Unimodular random_unimodular(std::mt19937& rng, std::size_t n, int steps) {
  Unimodular out{IntMatrix::identity(n), IntMatrix::identity(n)};
  if (n < 2) {
    if (n == 1 && rng() % 2) out.u(0, 0) = out.inverse(0, 0) = -1;
    return out;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const int c = rng() % 2 ? 1 : -1;
    IntMatrix e = IntMatrix::identity(n), e_inv = IntMatrix::identity(n);
    e(a, b) = c;
    e_inv(a, b) = -c;
    out.u = e * out.u;
    out.inverse = out.inverse * e_inv;
  }
  return out;
}

Integer max_abs(const IntMatrix& m) {
  Integer best = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) best = std::max(best, Integer(abs(m(r, c))));
  return best;
}

}  // namespace

ChainComplex random_complex(std::mt19937& rng, int top, std::size_t max_rank, int max_entry) {
  std::vector<std::size_t> ranks(uz(top + 1), 0);
  struct Arrow {
    int degree;  // source degree
    std::size_t source, target;
    int k;
  };
  std::vector<Arrow> arrows;
  std::uniform_int_distribution<int> degree(0, top), coefficient(1, max_entry);
  for (int attempt = 0; attempt < 3 * (top + 1); ++attempt) {
    const int n = degree(rng);
    if (n >= 1 && rng() % 3 != 0) {
      if (ranks[uz(n)] >= max_rank || ranks[uz(n - 1)] >= max_rank) continue;
      arrows.push_back({n, ranks[uz(n)]++, ranks[uz(n - 1)]++, coefficient(rng)});
    } else if (ranks[uz(n)] < max_rank) {
      ++ranks[uz(n)];
    }
  }
  std::vector<IntMatrix> base;
  for (int n = 0; n <= top; ++n) base.emplace_back(n == 0 ? 0 : ranks[uz(n - 1)], ranks[uz(n)]);
  for (const auto& a : arrows) base[uz(a.degree)](a.target, a.source) = a.k;
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Unimodular> change;
    for (int n = 0; n <= top; ++n) change.push_back(random_unimodular(rng, ranks[uz(n)], 2));
    std::vector<IntMatrix> boundaries{base[0]};
    bool small = true;
    for (int n = 1; n <= top; ++n) {
      boundaries.push_back(change[uz(n - 1)].u * base[uz(n)] * change[uz(n)].inverse);
      small = small && max_abs(boundaries.back()) <= max_entry;
    }
    if (small) return ChainComplex(0, ranks, std::move(boundaries));
  }
  return ChainComplex(0, ranks, std::move(base));
}

FiniteSSet corpus(const std::string& name) {
  static const std::map<std::string, std::function<FiniteSSet()>> table{
      {"point", [] { return point(); }},
      {"simplex1", [] { return standard_simplex(1); }},
      {"simplex2", [] { return standard_simplex(2); }},
      {"simplex3", [] { return standard_simplex(3); }},
      {"simplex4", [] { return standard_simplex(4); }},
      {"boundary1", [] { return boundary(1); }},
      {"boundary2", [] { return boundary(2); }},
      {"boundary3", [] { return boundary(3); }},
      {"horn2_0", [] { return horn(2, 0); }},
      {"horn2_1", [] { return horn(2, 1); }},
      {"horn3_1", [] { return horn(3, 1); }},
      {"horn3_3", [] { return horn(3, 3); }},
      {"circle", [] { return quotient(boundary_subset(1)).space; }},
      {"sphere2", [] { return quotient(boundary_subset(2)).space; }},
      {"square", [] { return nerve(FiniteCategory::square()); }},
      {"product_1_1", [] { return product(standard_simplex(1), standard_simplex(1)).space(); }},
      {"product_2_1", [] { return product(standard_simplex(2), standard_simplex(1)).space(); }},
      {"cylinder_boundary2", [] { return product(boundary(2), standard_simplex(1)).space(); }},
      {"cone_boundary2", [] { return cone(boundary(2)); }},
      {"suspension_circle", [] { return reduced_suspension(boundary(2).with_basepoint(0)); }},
  };
  return table.at(name)();
}

std::vector<std::string> corpus_names() {
  return {"point",   "simplex1",  "simplex2",  "simplex3", "simplex4", "boundary1",   "boundary2",
          "boundary3", "horn2_0", "horn2_1",   "horn3_1",  "horn3_3",  "circle",      "sphere2",
          "square",  "product_1_1", "product_2_1", "cylinder_boundary2", "cone_boundary2", "suspension_circle"};
}

std::vector<std::vector<std::vector<bool>>> small_posets(int max_elements) {
  std::vector<std::vector<std::vector<bool>>> out;
  for (int n = 1; n <= max_elements; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) pairs.emplace_back(a, b);
    std::set<std::vector<bool>> seen;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::vector<bool>> leq(uz(n), std::vector<bool>(uz(n), false));
      for (int a = 0; a < n; ++a) leq[uz(a)][uz(a)] = true;
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if (mask & (1u << p)) leq[uz(pairs[p].first)][uz(pairs[p].second)] = true;
      bool ok = true;
      for (int a = 0; ok && a < n; ++a)
        for (int b = 0; ok && b < n; ++b) {
          if (a != b && leq[uz(a)][uz(b)] && leq[uz(b)][uz(a)]) ok = false;
          for (int c = 0; ok && c < n; ++c)
            if (leq[uz(a)][uz(b)] && leq[uz(b)][uz(c)] && !leq[uz(a)][uz(c)]) ok = false;
        }
      if (!ok) continue;
      std::vector<int> perm(uz(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<bool> canonical;
      do {
        std::vector<bool> code;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) code.push_back(leq[uz(perm[uz(a)])][uz(perm[uz(b)])]);
        if (canonical.empty() || code < canonical) canonical = code;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (seen.insert(canonical).second) out.push_back(leq);
    }
  }
  return out;
}

}  // namespace oracle
