#pragma once

#include <optional>
#include <span>
#include <vector>

#include "planebundles/field.hpp"

namespace pb {

/// Dense exact matrix over the active field. Values are immutable in spirit:
/// operations return fresh matrices, nothing here is mutated after build.
class DenseMatrix {
public:
  DenseMatrix(FieldCtx ctx, std::size_t rows, std::size_t cols)
      : ctx_(ctx), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(ctx)) {}

  static DenseMatrix identity(const FieldCtx& ctx, std::size_t n);
  static DenseMatrix from_ints(const FieldCtx& ctx, std::size_t rows, std::size_t cols,
                               std::initializer_list<long long> vals);

  const FieldCtx& ctx() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  DenseMatrix operator*(const DenseMatrix& o) const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;
  DenseMatrix transpose() const;
  bool operator==(const DenseMatrix& o) const;

private:
  FieldCtx ctx_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

/// Reduced row echelon form plus the pivot column of each pivot row.
/// Pivoting rule everywhere: first nonzero entry in column order.
struct Rref {
  DenseMatrix m;
  std::vector<std::size_t> pivots;
};

/// Over Q the forward pass is fraction-free (Bareiss) on a row-scaled integer
/// matrix; over F_q it is plain pivoted elimination.
Rref rref(const DenseMatrix& m);

std::size_t rank(const DenseMatrix& m);

/// Basis of the right null space; size is always cols - rank.
std::vector<std::vector<Scalar>> kernel_basis(const DenseMatrix& m);

struct Solution {
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> kernel;
};

/// One exact particular solution of m x = rhs plus the kernel basis, or
/// nullopt when rhs is outside the column span.
std::optional<Solution> solve(const DenseMatrix& m, std::span<const Scalar> rhs);

Scalar det3(const DenseMatrix& m);
DenseMatrix inverse3(const DenseMatrix& m);

}  // namespace pb
