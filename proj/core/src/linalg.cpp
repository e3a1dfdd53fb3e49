#include "grt/linalg.hpp"

#include <algorithm>
#include <utility>

#include "grt/error.hpp"

namespace grt {

namespace {

int cmpabs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

struct Echelon {
  IntMatrix rows;                  // fraction-free row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each leading row
};

// Fraction-free (Bareiss) elimination with row pivoting on the smallest
// nonzero magnitude. Every intermediate entry is a minor of the input, and
// the division by the previous pivot is exact.
Echelon bareiss(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  Echelon out;
  Integer prev = 1;
  std::size_t r = 0;
  Integer t1, t2;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t best = m;
    for (std::size_t i = r; i < m; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      if (best == m || cmpabs(a(i, c), a(best, c)) < 0) best = i;
    }
    if (best == m) continue;
    a.swap_rows(r, best);
    const Integer& piv = a(r, c);
    for (std::size_t i = r + 1; i < m; ++i) {
      const bool lead_zero = sgn(a(i, c)) == 0;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (lead_zero) {
          if (sgn(a(i, j)) == 0) continue;
          mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), a(i, j).get_mpz_t());
        } else {
          mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), a(i, j).get_mpz_t());
          mpz_mul(t2.get_mpz_t(), a(i, c).get_mpz_t(), a(r, j).get_mpz_t());
          mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        }
        mpz_divexact(a(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = piv;
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = std::move(a);
  return out;
}

std::uint64_t checked_prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 32))
    throw Error(ErrorCode::Precondition, "modular routines need 2 <= p < 2^32");
  return p;
}

std::uint64_t reduce(const Integer& z, std::uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

std::uint64_t reduce(std::int64_t z, std::uint64_t p) {
  auto r = z % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime: a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

using ModRows = std::vector<std::vector<std::uint64_t>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_mod(ModRows& a, std::size_t cols, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t sel = a.size();
    for (std::size_t i = r; i < a.size(); ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == a.size()) continue;
    std::swap(a[r], a[sel]);
    const std::uint64_t inv = inv_mod(a[r][c], p);
    for (auto& x : a[r]) x = x * inv % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = p - a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] = (a[i][j] + f * a[r][j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

ModRows to_mod_rows(const IntMatrix& m, std::uint64_t p) {
  ModRows rows(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = reduce(m(i, j), p);
  return rows;
}

}  // namespace

IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

std::size_t rank(const IntMatrix& m) { return bareiss(m).pivots.size(); }
std::size_t rank(const RatMatrix& m) { return rank(clear_denominators(m)); }

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  std::size_t first = 0;
  while (first < v.size() && sgn(v[first]) == 0) ++first;
  if (sgn(v[first]) < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

IntVector primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_num() * (l / x.get_den()));
  return primitive(std::move(out));
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  Echelon e = bareiss(m);
  const std::size_t r = e.pivots.size();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(n, Rational(0));
    x[f] = 1;
    for (std::size_t i = r; i-- > 0;) {
      const std::size_t pc = e.pivots[i];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < n; ++j)
        if (sgn(e.rows(i, j)) != 0 && sgn(x[j]) != 0) s += Rational(e.rows(i, j)) * x[j];
      x[pc] = -s / Rational(e.rows(i, pc));
    }
    basis.push_back(primitive(x));
  }
  return basis;
}

std::vector<IntVector> kernel_basis(const RatMatrix& m) {
  return kernel_basis(clear_denominators(m));
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::Precondition, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(a(piv, k)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      a.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? prev : Integer(-prev);
}

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SNFResult smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows(), n = input.cols();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto row_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    // row dst -= q * row src (on A and U)
    for (std::size_t j = 0; j < n; ++j) a(dst, j) -= q * a(src, j);
    for (std::size_t j = 0; j < m; ++j) u(dst, j) -= q * u(src, j);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    // col dst -= q * col src (on A and V)
    for (std::size_t i = 0; i < m; ++i) a(i, dst) -= q * a(i, src);
    for (std::size_t i = 0; i < n; ++i) v(i, dst) -= q * v(i, src);
  };
  auto swap_r = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    u.swap_rows(x, y);
  };
  auto swap_c = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    v.swap_cols(x, y);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(a(i, j)) != 0 && (bi == m || cmpabs(a(i, j), a(bi, bj)) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    swap_r(t, bi);
    swap_c(t, bj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_axpy(i, t, q);
        if (sgn(a(i, t)) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_axpy(j, t, q);
        if (sgn(a(t, j)) != 0) dirty = true;
      }
      if (dirty) {
        // move the smallest remainder in row/column t into the pivot
        std::size_t si = t, sj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(a(i, t)) != 0 && cmpabs(a(i, t), a(si, sj)) < 0) {
            si = i;
            sj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(a(t, j)) != 0 && cmpabs(a(t, j), a(si, sj)) < 0) {
            si = t;
            sj = j;
          }
        swap_r(t, si);
        swap_c(t, sj);
        continue;
      }
      // enforce divisibility of the trailing block by the pivot
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      row_axpy(t, bad_row, Integer(-1));
    }
    if (sgn(a(t, t)) < 0) {
      for (std::size_t j = 0; j < n; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
  }
  return SNFResult{std::move(u), std::move(a), std::move(v)};
}

QuotientInvariants quotient_invariants(const IntMatrix& rows, std::size_t ambient_rank) {
  if (rows.rows() > 0 && rows.cols() != ambient_rank)
    throw Error(ErrorCode::Precondition, "sublattice rows must have ambient_rank columns");
  QuotientInvariants q;
  if (rows.rows() == 0) {
    q.free_rank = ambient_rank;
    return q;
  }
  auto d = smith_normal_form(rows).diagonal();
  std::size_t r = 0;
  for (const auto& x : d) {
    if (sgn(x) == 0) continue;
    ++r;
    if (x > 1) q.torsion.push_back(x);
  }
  q.free_rank = ambient_rank - r;
  return q;
}

IntMatrix saturation_basis(const IntMatrix& rows) {
  const std::size_t n = rows.cols();
  if (rows.rows() == 0) return IntMatrix(0, n);
  SNFResult s = smith_normal_form(rows);
  // rows span D * V^{-1}; the saturation is spanned by the rows of V^{-1}
  // that meet a nonzero diagonal entry.
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rational(s.V(i, j));
    aug(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (sgn(aug(p, c)) == 0) ++p;
    aug.swap_rows(p, c);
    Rational inv = 1 / aug(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(aug(i, c)) == 0) continue;
      Rational f = aug(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
    }
  }
  auto d = s.diagonal();
  IntMatrix out(0, n);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sgn(d[i]) == 0) continue;
    IntVector r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = to_integer(aug(i, n + j));
    out.append_row(r);
  }
  return out;
}

std::size_t rank_mod(const IntMatrix& m, std::uint64_t prime) {
  checked_prime(prime);
  auto rows = to_mod_rows(m, prime);
  return rref_mod(rows, m.cols(), prime).size();
}

std::size_t rank_mod(const SmallIntRows& rows, std::size_t cols, std::uint64_t prime) {
  return independent_rows_mod(rows, cols, prime).size();
}

std::vector<std::size_t> independent_rows_mod(const SmallIntRows& rows, std::size_t cols,
                                              std::uint64_t prime) {
  const std::uint64_t p = checked_prime(prime);
  ModRows basis;
  std::vector<std::size_t> pivot_of;
  std::vector<std::size_t> chosen;
  std::vector<std::uint64_t> work(cols);
  for (std::size_t r = 0; r < rows.size() && basis.size() < cols; ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::Precondition, "row length mismatch");
    bool any = false;
    for (std::size_t j = 0; j < cols; ++j) {
      work[j] = reduce(rows[r][j], p);
      any |= work[j] != 0;
    }
    if (!any) continue;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::uint64_t f = work[pivot_of[b]];
      if (f == 0) continue;
      const std::uint64_t g = p - f;
      const auto& br = basis[b];
      for (std::size_t j = pivot_of[b]; j < cols; ++j)
        if (br[j] != 0) work[j] = (work[j] + g * br[j]) % p;
    }
    std::size_t lead = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (work[j] != 0) {
        lead = j;
        break;
      }
    if (lead == cols) continue;
    const std::uint64_t inv = inv_mod(work[lead], p);
    for (auto& x : work) x = x * inv % p;
    basis.push_back(work);
    pivot_of.push_back(lead);
    chosen.push_back(r);
  }
  return chosen;
}

std::vector<std::vector<std::uint64_t>> kernel_basis_mod(const IntMatrix& m, std::uint64_t prime) {
  checked_prime(prime);
  const std::size_t n = m.cols();
  auto rows = to_mod_rows(m, prime);
  auto pivots = rref_mod(rows, n, prime);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> x(n, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      x[pivots[i]] = rows[i][f] == 0 ? 0 : prime - rows[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace grt
