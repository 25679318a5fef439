#pragma once

#include <cstdint>
#include <vector>

#include "qmds/code.hpp"
#include "qmds/field.hpp"

namespace qmds {

// Dense matrix over a field context, entries stored as packed element
// indices. Elimination is exact with first-nonzero pivoting, so results are
// deterministic.
class MatrixFq {
 public:
  MatrixFq(FieldCtxPtr ctx, std::size_t rows, std::size_t cols);
  static MatrixFq identity(FieldCtxPtr ctx, std::size_t n);

  const FieldCtxPtr& ctx() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }

 private:
  FieldCtxPtr ctx_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> v_;
};

// k x n generator matrix: row i holds the coefficients of x^i * g(x). For
// i < k the product has degree < n, so no reduction mod x^n - eta occurs.
MatrixFq generator_matrix(const ConstacyclicCode& code);

// Reduced row echelon form; pivot columns appended to *pivot_cols if given.
MatrixFq rref(MatrixFq m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t row_rank(const MatrixFq& m);

// Basis (as rows) of {x : m x^T = 0}.
MatrixFq nullspace(const MatrixFq& m);

// Basis of the Hermitian dual: the null space of m with conj applied
// entrywise, so (row, y)_h = sum row_i^q y_i vanishes for every row.
MatrixFq hermitian_dual_basis(const MatrixFq& g);

// sum x_i^q * y_i as a packed index.
std::uint64_t hermitian_inner_product(const FieldCtxPtr& ctx, const MatrixFq& a, std::size_t row_a,
                                      const MatrixFq& b, std::size_t row_b);

// True iff every Hermitian dual basis vector lies in the row space of the
// generator matrix. Ground truth for the coset-level criterion.
bool dual_containment_matrix_check(const ConstacyclicCode& code);

// Minimum Hamming weight over all nonzero codewords, by lexicographic
// enumeration of message vectors. Requires (q^2)^k <= budget and k >= 1.
std::uint64_t brute_force_min_distance(const ConstacyclicCode& code, std::uint64_t budget = 10'000'000);

// Independent route: the minimum number of linearly dependent columns of a
// parity-check matrix, by rank tests over column subsets. Exact; small n only.
std::uint64_t min_distance_by_parity_rank(const ConstacyclicCode& code);

}  // namespace qmds
