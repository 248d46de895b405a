#include "balkan/relation_finder.hpp"

namespace balkan {

namespace {

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// nearest integer to num/den, den > 0
BigInt nearest(const BigInt& num, const BigInt& den) {
  BigInt q;
  BigInt t = 2 * num + den;
  BigInt d2 = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), d2.get_mpz_t());
  return q;
}

// Integral LLL after Cohen, A Course in Computational Algebraic Number Theory, Alg. 2.6.7.
// Indices are 1-based inside; d[0] = 1.
class IntegralLLL {
 public:
  IntegralLLL(LatticeBasis& b, const BigRational& delta)
      : b_(b), n_(b.size()), d_(n_ + 1), lam_(n_ + 1, std::vector<BigInt>(n_ + 1)),
        dp_(delta.get_num()), dq_(delta.get_den()) {}

  void run() {
    if (n_ == 0) return;
    d_[0] = 1;
    d_[1] = dot(row(1), row(1));
    if (d_[1] == 0) throw DomainError("lll_reduce: dependent rows");
    long k = 2, kmax = 1;
    while (k <= static_cast<long>(n_)) {
      if (k > kmax) {
        kmax = k;
        for (long j = 1; j <= k; ++j) {
          BigInt u = dot(row(k), row(j));
          for (long i = 1; i <= j - 1; ++i) u = (d_[i] * u - lam_[k][i] * lam_[j][i]) / d_[i - 1];
          if (j < k) lam_[k][j] = u;
          else d_[k] = u;
        }
        if (d_[k] == 0) throw DomainError("lll_reduce: dependent rows");
      }
      while (true) {
        reduce(k, k - 1);
        // Lovasz: d_k d_{k-2} < delta d_{k-1}^2 - lambda^2  => swap
        const BigInt lhs = dq_ * d_[k] * d_[k - 2];
        const BigInt rhs = dp_ * d_[k - 1] * d_[k - 1] - dq_ * lam_[k][k - 1] * lam_[k][k - 1];
        if (lhs < rhs) {
          swap(k, kmax);
          k = std::max(2L, k - 1);
          continue;
        }
        for (long l = k - 2; l >= 1; --l) reduce(k, l);
        ++k;
        break;
      }
    }
  }

 private:
  IntVector& row(long i) { return b_[i - 1]; }

  void reduce(long k, long l) {
    if (BigInt(abs(2 * lam_[k][l])) <= d_[l]) return;
    const BigInt q = nearest(lam_[k][l], d_[l]);
    IntVector& bk = row(k);
    const IntVector& bl = row(l);
    for (size_t i = 0; i < bk.size(); ++i) bk[i] -= q * bl[i];
    lam_[k][l] -= q * d_[l];
    for (long i = 1; i <= l - 1; ++i) lam_[k][i] -= q * lam_[l][i];
  }

  void swap(long k, long kmax) {
    std::swap(row(k), row(k - 1));
    for (long j = 1; j <= k - 2; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
    const BigInt lam = lam_[k][k - 1];
    const BigInt B = (d_[k - 2] * d_[k] + lam * lam) / d_[k - 1];
    for (long i = k + 1; i <= kmax; ++i) {
      const BigInt t = lam_[i][k];
      lam_[i][k] = (d_[k] * lam_[i][k - 1] - lam * t) / d_[k - 1];
      lam_[i][k - 1] = (B * t + lam * lam_[i][k]) / d_[k];
    }
    d_[k - 1] = B;
  }

  LatticeBasis& b_;
  size_t n_;
  std::vector<BigInt> d_;
  std::vector<std::vector<BigInt>> lam_;
  BigInt dp_, dq_;
};

}  // namespace

LatticeBasis lll_reduce(LatticeBasis basis, const BigRational& delta) {
  if (delta <= make_rational(1, 4) || delta >= 1) throw DomainError("lll_reduce: delta must lie in (1/4, 1)");
  for (const auto& r : basis)
    if (r.size() != basis.front().size()) throw DomainError("lll_reduce: rows of unequal length");
  IntegralLLL(basis, delta).run();
  return basis;
}

}  // namespace balkan
