#include "simpcalc/smith.hpp"

#include <algorithm>

#include "simpcalc/error.hpp"

namespace simpcalc {
namespace {

// Applies elementary operations to D and mirrors them on whichever
// transforms are tracked (null pointers are skipped).
struct Reducer {
  IntMatrix& d;
  IntMatrix* u = nullptr;
  IntMatrix* u_inv = nullptr;
  IntMatrix* v = nullptr;
  IntMatrix* v_inv = nullptr;

  void row_add(std::size_t dst, std::size_t src, const Integer& k) {
    d.add_row_multiple(dst, src, k);
    if (u) u->add_row_multiple(dst, src, k);
    if (u_inv) u_inv->add_col_multiple(src, dst, -k);
  }
  void row_swap(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    if (u) u->swap_rows(a, b);
    if (u_inv) u_inv->swap_cols(a, b);
  }
  void row_negate(std::size_t r) {
    d.negate_row(r);
    if (u) u->negate_row(r);
    if (u_inv) u_inv->negate_col(r);
  }
  void col_add(std::size_t dst, std::size_t src, const Integer& k) {
    d.add_col_multiple(dst, src, k);
    if (v) v->add_col_multiple(dst, src, k);
    if (v_inv) v_inv->add_row_multiple(src, dst, -k);
  }
  void col_swap(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    if (v) v->swap_cols(a, b);
    if (v_inv) v_inv->swap_rows(a, b);
  }

  // (row a, row b) <- [[x, y], [p, q]] (row a, row b), with xq - yp = 1.
  static void mix_rows(IntMatrix& m, std::size_t a, std::size_t b, const Integer& x, const Integer& y,
                       const Integer& p, const Integer& q) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer ra = m(a, c), rb = m(b, c);
      m(a, c) = x * ra + y * rb;
      m(b, c) = p * ra + q * rb;
    }
  }
  static void mix_cols(IntMatrix& m, std::size_t a, std::size_t b, const Integer& x, const Integer& y,
                       const Integer& p, const Integer& q) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Integer ca = m(r, a), cb = m(r, b);
      m(r, a) = x * ca + y * cb;
      m(r, b) = p * ca + q * cb;
    }
  }

  // Replaces d(t, t) by gcd(d(t, t), d(i, t)) and d(i, t) by zero.
  void bezout_rows(std::size_t t, std::size_t i) {
    Integer g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), d(t, t).get_mpz_t(), d(i, t).get_mpz_t());
    const Integer p = -d(i, t) / g, q = d(t, t) / g;
    mix_rows(d, t, i, x, y, p, q);
    if (u) mix_rows(*u, t, i, x, y, p, q);
    if (u_inv) mix_cols(*u_inv, t, i, q, -p, -y, x);
  }
  // Replaces d(t, t) by gcd(d(t, t), d(t, j)) and d(t, j) by zero.
  void bezout_cols(std::size_t t, std::size_t j) {
    Integer g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), d(t, t).get_mpz_t(), d(t, j).get_mpz_t());
    const Integer p = -d(t, j) / g, q = d(t, t) / g;
    mix_cols(d, t, j, x, y, p, q);
    if (v) mix_cols(*v, t, j, x, y, p, q);
    if (v_inv) mix_rows(*v_inv, t, j, q, -p, -y, x);
  }

  // Returns the rank.
  std::size_t run() {
    const std::size_t m = d.rows();
    const std::size_t n = d.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      // smallest nonzero entry of the trailing block becomes the pivot
      bool found = false;
      std::size_t pr = t, pc = t;
      Integer best;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (sgn(d(i, j)) == 0) continue;
          Integer a = abs(d(i, j));
          if (!found || a < best) {
            best = a;
            pr = i;
            pc = j;
            found = true;
          }
        }
      }
      if (!found) break;
      row_swap(t, pr);
      col_swap(t, pc);

      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (sgn(d(i, t)) == 0) continue;
          if (mpz_divisible_p(d(i, t).get_mpz_t(), d(t, t).get_mpz_t())) {
            row_add(i, t, -(d(i, t) / d(t, t)));
          } else {
            bezout_rows(t, i);
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (sgn(d(t, j)) == 0) continue;
          if (mpz_divisible_p(d(t, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            col_add(j, t, -(d(t, j) / d(t, t)));
          } else {
            bezout_cols(t, j);
            clean = false;  // the column step may refill column t
          }
        }
        if (!clean) continue;

        bool divisible = true;
        for (std::size_t i = t + 1; i < m && divisible; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (sgn(d(i, j)) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
              row_add(t, i, Integer(1));
              divisible = false;
              break;
            }
          }
        }
        if (divisible) break;
      }
      if (sgn(d(t, t)) < 0) row_negate(t);
    }
    return t;
  }
};

}  // namespace

IntVector SmithDecomposition::invariant_factors() const {
  IntVector out;
  out.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition s;
  s.diagonal = m;
  s.left = IntMatrix::identity(m.rows());
  s.left_inverse = IntMatrix::identity(m.rows());
  s.right = IntMatrix::identity(m.cols());
  s.right_inverse = IntMatrix::identity(m.cols());
  Reducer r{s.diagonal, &s.left, &s.left_inverse, &s.right, &s.right_inverse};
  s.rank = r.run();
  return s;
}

IntVector invariant_factors(const IntMatrix& m) {
  IntMatrix d = m;
  Reducer r{d};
  const std::size_t rank = r.run();
  IntVector out;
  out.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

std::size_t matrix_rank(const IntMatrix& m) { return invariant_factors(m).size(); }

IntMatrix kernel_basis(const IntMatrix& m) {
  if (m.rows() == 0) return IntMatrix::identity(m.cols());
  const SmithDecomposition s = smith_normal_form(m);
  return s.right.block(0, s.rank, m.cols(), m.cols() - s.rank);
}

std::optional<IntVector> solve(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw InvalidArgument("solve: right-hand side has wrong length");
  const SmithDecomposition s = smith_normal_form(a);
  const IntVector c = s.left * b;
  IntVector y(a.cols(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < s.rank) {
      const Integer& d = s.diagonal(i, i);
      if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      y[i] = c[i] / d;
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return s.right * y;
}

std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b) {
  if (b.rows() != a.rows()) throw InvalidArgument("solve: right-hand side has wrong height");
  const SmithDecomposition s = smith_normal_form(a);
  const IntMatrix c = s.left * b;
  IntMatrix y(a.cols(), b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i < s.rank) {
        const Integer& d = s.diagonal(i, i);
        if (!mpz_divisible_p(c(i, col).get_mpz_t(), d.get_mpz_t())) return std::nullopt;
        y(i, col) = c(i, col) / d;
      } else if (sgn(c(i, col)) != 0) {
        return std::nullopt;
      }
    }
  }
  return s.right * y;
}

IntMatrix left_inverse(const IntMatrix& basis) {
  const SmithDecomposition s = smith_normal_form(basis);
  if (s.rank != basis.cols()) throw InvalidArgument("left_inverse: columns are linearly dependent");
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.diagonal(i, i) != 1) throw InvalidArgument("left_inverse: column span is not saturated");
  }
  return s.right * s.left.block(0, 0, basis.cols(), basis.rows());
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  const IntVector f = invariant_factors(m);
  return f.size() == m.rows() && std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
}

bool is_split_injective(const IntMatrix& m) {
  const IntVector f = invariant_factors(m);
  return f.size() == m.cols() && std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
}

}  // namespace simpcalc
