#include "qmds/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmds {

MatrixFq::MatrixFq(FieldCtxPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), v_(rows * cols, 0) {
  if (!ctx_) throw std::invalid_argument("MatrixFq: null context");
  if (ctx_->size() > 0xFFFFFFFFull) throw std::invalid_argument("MatrixFq: field too large for packed entries");
}

MatrixFq MatrixFq::identity(FieldCtxPtr ctx, std::size_t n) {
  MatrixFq m(std::move(ctx), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixFq generator_matrix(const ConstacyclicCode& code) {
  const FieldCtxPtr& ctx = code.tower.gf_q2;
  MatrixFq g(ctx, code.k, code.spec.n);
  std::vector<std::uint32_t> gen_packed;
  gen_packed.reserve(code.gen.coeff_count());
  for (std::size_t j = 0; j < code.gen.coeff_count(); ++j) {
    gen_packed.push_back(static_cast<std::uint32_t>(ctx->pack(code.gen.coeff(j).coeffs())));
  }
  for (std::size_t i = 0; i < code.k; ++i) {
    for (std::size_t j = 0; j < gen_packed.size(); ++j) g.at(i, i + j) = gen_packed[j];
  }
  return g;
}

MatrixFq rref(MatrixFq m, std::vector<std::size_t>* pivot_cols) {
  const FieldCtx& f = *m.ctx();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m.at(r, col) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(r, c), m.at(pivot_row, c));
    }
    const std::uint32_t inv = static_cast<std::uint32_t>(f.idx_inv(m.at(pivot_row, col)));
    for (std::size_t c = col; c < m.cols(); ++c) {
      m.at(pivot_row, c) = static_cast<std::uint32_t>(f.idx_mul(m.at(pivot_row, c), inv));
    }
    for (std::size_t rr = 0; rr < m.rows(); ++rr) {
      if (rr == pivot_row) continue;
      const std::uint32_t factor = m.at(rr, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < m.cols(); ++c) {
        const std::uint64_t prod = f.idx_mul(factor, m.at(pivot_row, c));
        m.at(rr, c) = static_cast<std::uint32_t>(f.idx_sub(m.at(rr, c), prod));
      }
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++pivot_row;
  }
  return m;
}

std::size_t row_rank(const MatrixFq& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

MatrixFq nullspace(const MatrixFq& m) {
  const FieldCtx& f = *m.ctx();
  std::vector<std::size_t> pivots;
  MatrixFq r = rref(m, &pivots);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0, pi = 0; c < m.cols(); ++c) {
    if (pi < pivots.size() && pivots[pi] == c) {
      ++pi;
    } else {
      free_cols.push_back(c);
    }
  }
  MatrixFq basis(m.ctx(), free_cols.size(), m.cols());
  for (std::size_t bi = 0; bi < free_cols.size(); ++bi) {
    const std::size_t fc = free_cols[bi];
    basis.at(bi, fc) = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
      basis.at(bi, pivots[pi]) = static_cast<std::uint32_t>(f.idx_neg(r.at(pi, fc)));
    }
  }
  return basis;
}

MatrixFq hermitian_dual_basis(const MatrixFq& g) {
  const FieldCtx& f = *g.ctx();
  MatrixFq conj(g.ctx(), g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      conj.at(r, c) = static_cast<std::uint32_t>(f.idx_conj(g.at(r, c)));
    }
  }
  return nullspace(conj);
}

std::uint64_t hermitian_inner_product(const FieldCtxPtr& ctx, const MatrixFq& a, std::size_t row_a,
                                      const MatrixFq& b, std::size_t row_b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("hermitian_inner_product: length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    acc = ctx->idx_add(acc, ctx->idx_mul(ctx->idx_conj(a.at(row_a, c)), b.at(row_b, c)));
  }
  return acc;
}

bool dual_containment_matrix_check(const ConstacyclicCode& code) {
  if (code.spec.n > 2000) throw std::invalid_argument("dual_containment_matrix_check: n too large");
  const FieldCtx& f = *code.tower.gf_q2;
  const MatrixFq g = generator_matrix(code);
  std::vector<std::size_t> pivots;
  const MatrixFq r = rref(g, &pivots);
  if (pivots.size() != code.k) throw std::runtime_error("dual_containment_matrix_check: generator rank deficit (bug)");

  MatrixFq dual = hermitian_dual_basis(g);
  for (std::size_t row = 0; row < dual.rows(); ++row) {
    // Reduce against the RREF of g; a remainder outside the row space stays.
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
      const std::uint32_t factor = dual.at(row, pivots[pi]);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < dual.cols(); ++c) {
        const std::uint64_t prod = f.idx_mul(factor, r.at(pi, c));
        dual.at(row, c) = static_cast<std::uint32_t>(f.idx_sub(dual.at(row, c), prod));
      }
    }
    for (std::size_t c = 0; c < dual.cols(); ++c) {
      if (dual.at(row, c) != 0) return false;
    }
  }
  return true;
}

std::uint64_t brute_force_min_distance(const ConstacyclicCode& code, std::uint64_t budget) {
  if (code.k == 0) throw std::domain_error("brute_force_min_distance: code has no nonzero codewords");
  const FieldCtx& f = *code.tower.gf_q2;
  unsigned __int128 total = 1;
  for (std::uint64_t i = 0; i < code.k; ++i) {
    total *= f.size();
    if (total > budget) throw std::domain_error("brute_force_min_distance: budget exceeded");
  }

  const MatrixFq g = generator_matrix(code);
  const std::size_t n = code.spec.n;
  std::vector<std::uint32_t> message(code.k, 0);
  std::vector<std::uint32_t> word(n);
  std::uint64_t best = n + 1;
  for (;;) {
    // Next message, lexicographically.
    std::size_t pos = 0;
    while (pos < message.size()) {
      if (++message[pos] < f.size()) break;
      message[pos] = 0;
      ++pos;
    }
    if (pos == message.size()) break;

    std::fill(word.begin(), word.end(), 0);
    for (std::size_t i = 0; i < message.size(); ++i) {
      if (message[i] == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        word[c] = static_cast<std::uint32_t>(f.idx_add(word[c], f.idx_mul(message[i], g.at(i, c))));
      }
    }
    std::uint64_t weight = 0;
    for (std::size_t c = 0; c < n && weight < best; ++c) weight += word[c] != 0;
    best = std::min(best, weight);
    if (best == 1) break;  // cannot improve further
  }
  return best;
}

namespace {

bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
  const std::size_t w = pick.size();
  std::size_t i = w;
  while (i > 0) {
    --i;
    if (pick[i] != i + n - w) {
      ++pick[i];
      for (std::size_t j = i + 1; j < w; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::uint64_t min_distance_by_parity_rank(const ConstacyclicCode& code) {
  if (code.k == 0) throw std::domain_error("min_distance_by_parity_rank: code has no nonzero codewords");
  const std::size_t n = code.spec.n;
  if (n > 16) throw std::invalid_argument("min_distance_by_parity_rank: n too large for subset enumeration");
  if (code.k == n) return 1;

  const MatrixFq h = nullspace(generator_matrix(code));
  for (std::size_t w = 1; w <= n; ++w) {
    std::vector<std::size_t> pick(w);
    for (std::size_t i = 0; i < w; ++i) pick[i] = i;
    do {
      MatrixFq sub(code.tower.gf_q2, h.rows(), w);
      for (std::size_t r = 0; r < h.rows(); ++r) {
        for (std::size_t c = 0; c < w; ++c) sub.at(r, c) = h.at(r, pick[c]);
      }
      if (row_rank(sub) < w) return w;
    } while (next_combination(pick, n));
  }
  throw std::runtime_error("min_distance_by_parity_rank: no dependent column set found (bug)");
}

}  // namespace qmds
