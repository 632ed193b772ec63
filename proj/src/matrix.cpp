#include "planebundles/matrix.hpp"

#include <algorithm>

namespace pb {

DenseMatrix DenseMatrix::identity(const FieldCtx& ctx, std::size_t n) {
  DenseMatrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ctx);
  return m;
}

DenseMatrix DenseMatrix::from_ints(const FieldCtx& ctx, std::size_t rows, std::size_t cols,
                                   std::initializer_list<long long> vals) {
  check_internal(vals.size() == rows * cols, "from_ints size mismatch");
  DenseMatrix m(ctx, rows, cols);
  std::size_t k = 0;
  for (long long v : vals) m.a_[k++] = Scalar::from_int(ctx, v);
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  check_internal(cols_ == o.rows_, "matrix product shape mismatch");
  DenseMatrix r(ctx_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

std::vector<Scalar> DenseMatrix::apply(std::span<const Scalar> v) const {
  check_internal(v.size() == cols_, "matrix apply shape mismatch");
  std::vector<Scalar> r(rows_, Scalar::zero(ctx_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
  return r;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix r(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(ctx_ == o.ctx_)) return false;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!(a_[k] == o.a_[k])) return false;
  return true;
}

namespace {

// Prime-field path: plain pivoted Gauss-Jordan on raw residues.
Rref rref_prime(const DenseMatrix& m) {
  const std::uint64_t q = m.ctx().modulus;
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::uint64_t> a(R * C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) a[i * C + j] = m.at(i, j).res();

  auto inv = [&](std::uint64_t x) { return Scalar::from_residue(m.ctx(), x).inverse().res(); };

  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < C && pr < R; ++c) {
    std::size_t sel = pr;
    while (sel < R && a[sel * C + c] == 0) ++sel;
    if (sel == R) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < C; ++j) std::swap(a[sel * C + j], a[pr * C + j]);
    const std::uint64_t pinv = inv(a[pr * C + c]);
    for (std::size_t j = c; j < C; ++j) a[pr * C + j] = a[pr * C + j] * pinv % q;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == pr) continue;
      const std::uint64_t f = a[i * C + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < C; ++j)
        a[i * C + j] = (a[i * C + j] + (q - f) * a[pr * C + j]) % q;
    }
    pivots.push_back(c);
    ++pr;
  }

  DenseMatrix out(m.ctx(), R, C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) out.at(i, j) = Scalar::from_residue(m.ctx(), a[i * C + j]);
  return {std::move(out), std::move(pivots)};
}

// Rational path. Rows are scaled to integers, the forward pass is Bareiss
// (fraction-free, entries stay minors of the scaled matrix), and the reduced
// form is recovered by rational back-substitution on the echelon rows.
Rref rref_rational(const DenseMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
  for (std::size_t i = 0; i < R; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < C; ++j) den = lcm(den, m.at(i, j).rat().get_den());
    for (std::size_t j = 0; j < C; ++j) {
      const mpq_class& v = m.at(i, j).rat();
      a[i][j] = v.get_num() * (den / v.get_den());
    }
  }

  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < C && pr < R; ++c) {
    std::size_t sel = pr;
    while (sel < R && a[sel][c] == 0) ++sel;
    if (sel == R) continue;
    if (sel != pr) std::swap(a[sel], a[pr]);
    for (std::size_t i = pr + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        mpz_class num = a[pr][c] * a[i][j] - a[i][c] * a[pr][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[pr][c];
    pivots.push_back(c);
    ++pr;
  }

  // Back-substitution over Q on the (already triangular) pivot rows.
  const std::size_t rk = pivots.size();
  std::vector<std::vector<mpq_class>> rows(rk, std::vector<mpq_class>(C));
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < C; ++j) rows[i][j] = mpq_class(a[i][j]);
  for (std::size_t ii = rk; ii-- > 0;) {
    mpq_class lead = rows[ii][pivots[ii]];
    for (std::size_t j = pivots[ii]; j < C; ++j) rows[ii][j] /= lead;
    for (std::size_t k = 0; k < ii; ++k) {
      mpq_class f = rows[k][pivots[ii]];
      if (f == 0) continue;
      for (std::size_t j = pivots[ii]; j < C; ++j) rows[k][j] -= f * rows[ii][j];
    }
  }

  DenseMatrix out(m.ctx(), R, C);
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      mpq_class v = rows[i][j];
      v.canonicalize();
      out.at(i, j) = Scalar::from_mpq(m.ctx(), v);
    }
  return {std::move(out), std::move(pivots)};
}

}  // namespace

Rref rref(const DenseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {m, {}};
  return m.ctx().is_prime_field() ? rref_prime(m) : rref_rational(m);
}

std::size_t rank(const DenseMatrix& m) { return rref(m).pivots.size(); }

namespace {

std::vector<std::vector<Scalar>> kernel_from_rref(const Rref& r, std::size_t cols,
                                                  const FieldCtx& ctx) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(ctx));
    v[f] = Scalar::one(ctx);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.m.at(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<Scalar>> kernel_basis(const DenseMatrix& m) {
  Rref r = rref(m);
  return kernel_from_rref(r, m.cols(), m.ctx());
}

std::optional<Solution> solve(const DenseMatrix& m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) fail(Errc::precondition, "solve: rhs length != rows");
  DenseMatrix aug(m.ctx(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  Rref r = rref(aug);
  for (std::size_t p : r.pivots)
    if (p == m.cols()) return std::nullopt;

  Solution sol;
  sol.particular.assign(m.cols(), Scalar::zero(m.ctx()));
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    sol.particular[r.pivots[k]] = r.m.at(k, m.cols());
  // The first cols columns of the augmented RREF are the RREF of m itself.
  Rref sub{DenseMatrix(m.ctx(), r.m.rows(), m.cols()), r.pivots};
  for (std::size_t i = 0; i < r.m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) sub.m.at(i, j) = r.m.at(i, j);
  sol.kernel = kernel_from_rref(sub, m.cols(), m.ctx());
  return sol;
}

Scalar det3(const DenseMatrix& m) {
  check_internal(m.rows() == 3 && m.cols() == 3, "det3 wants a 3x3 matrix");
  auto& a = m;
  return a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
         a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
         a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
}

DenseMatrix inverse3(const DenseMatrix& m) {
  Scalar d = det3(m);
  if (d.is_zero()) fail(Errc::invalid_argument, "matrix not invertible");
  DenseMatrix adj(m.ctx(), 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      adj.at(j, i) = m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
    }
  DenseMatrix out(m.ctx(), 3, 3);
  Scalar dinv = d.inverse();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out.at(i, j) = adj.at(i, j) * dinv;
  return out;
}

}  // namespace pb
