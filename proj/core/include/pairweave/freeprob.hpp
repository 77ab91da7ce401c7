#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "pairweave/qpoly.hpp"
#include "pairweave/rational.hpp"
#include "pairweave/sequence.hpp"
#include "pairweave/weights.hpp"

namespace pairweave {

/// Non-crossing partition of {1..n} with blocks of any size. Blocks are
/// sorted internally and ordered by their smallest element.
struct NCPartition {
    std::vector<std::vector<int>> blocks;
};

/// Every non-crossing partition of {1..n} exactly once (Catalan(n) of them).
void for_each_nc_partition(int n, const std::function<void(const NCPartition&)>& fn);
std::vector<NCPartition> enumerate_nc(int n);

namespace detail {

// coefficient table c[s][t] = [x^t] M(x)^s for M(x) = 1 + m_1 x + m_2 x^2 + ...,
// using m_1..m_known only, t <= tmax
template <typename Scalar>
std::vector<std::vector<Scalar>> composition_sums(const std::vector<Scalar>& m, std::size_t known, std::size_t smax,
                                                  std::size_t tmax) {
    std::vector<std::vector<Scalar>> c(smax + 1, std::vector<Scalar>(tmax + 1, Scalar(0)));
    c[0][0] = Scalar(1);
    for (std::size_t s = 1; s <= smax; ++s) {
        for (std::size_t t = 0; t <= tmax; ++t) {
            Scalar acc = c[s - 1][t];
            for (std::size_t j = 1; j <= std::min(t, known); ++j) acc += c[s - 1][t - j] * m[j - 1];
            c[s][t] = acc;
        }
    }
    return c;
}

}  // namespace detail

/// Inverts m_n = sum_{s=1}^{n} k_s sum_{n_1+...+n_s = n-s} m_{n_1}...m_{n_s}.
template <typename Scalar>
CumulantSeq<Scalar> moments_to_cumulants(const MomentSeq<Scalar>& moments) {
    const std::size_t order = moments.order();
    const auto& m = moments.terms();
    const auto c = detail::composition_sums(m, order, order, order);
    std::vector<Scalar> k(order, Scalar(0));
    for (std::size_t n = 1; n <= order; ++n) {
        Scalar acc = m[n - 1];
        for (std::size_t s = 1; s < n; ++s) acc -= k[s - 1] * c[s][n - s];
        k[n - 1] = acc;
    }
    return CumulantSeq<Scalar>(std::move(k));
}

/// Forward evaluation of the same recursion.
template <typename Scalar>
MomentSeq<Scalar> cumulants_to_moments(const CumulantSeq<Scalar>& cumulants) {
    const std::size_t order = cumulants.order();
    const auto& k = cumulants.terms();
    std::vector<Scalar> m(order, Scalar(0));
    for (std::size_t n = 1; n <= order; ++n) {
        // [x^{n-s}] M^s only involves m_1..m_{n-1}
        const auto c = detail::composition_sums(m, n - 1, n, n - 1);
        Scalar acc(0);
        for (std::size_t s = 1; s <= n; ++s) acc += k[s - 1] * c[s][n - s];
        m[n - 1] = acc;
    }
    return MomentSeq<Scalar>(std::move(m));
}

/// m_n as the direct sum over non-crossing partitions of products of
/// cumulants indexed by block size.
template <typename Scalar>
MomentSeq<Scalar> moments_from_nc_sum(const CumulantSeq<Scalar>& cumulants) {
    std::vector<Scalar> m;
    for (std::size_t n = 1; n <= cumulants.order(); ++n) {
        Scalar acc(0);
        for_each_nc_partition(static_cast<int>(n), [&](const NCPartition& p) {
            Scalar prod(1);
            for (const auto& b : p.blocks) prod = prod * cumulants[b.size()];
            acc += prod;
        });
        m.push_back(acc);
    }
    return MomentSeq<Scalar>(std::move(m));
}

/// Free additive convolution: cumulants add. Orders must match.
MomentSeq<Rational> free_convolve(const MomentSeq<Rational>& a, const MomentSeq<Rational>& b);

/// Dilation by lambda with lambda^2 = lam2 given exactly: m_2r <- lam2^r m_2r.
/// Only symmetric sequences are supported; nonzero odd moments throw
/// std::domain_error.
MomentSeq<Rational> dilate(const MomentSeq<Rational>& a, const Rational& lam2);

/// Symbolic moments of c + c* under the connected-component weight in the
/// given regime, cached per regime.
MomentSeq<QPoly> tq_moment_polys(TqRegime regime, int order);

/// Exact moments of mu_q for -1 <= q <= 1, order <= 16.
MomentSeq<Rational> mu_q_moments(const Rational& q, int order);

/// Cumulants as the pairing sum restricted to connected (one-block)
/// pairings, with the Fock covariance.
CumulantSeq<QPoly> connected_cumulants(const Weight& t, int order);

struct Theorem6Report {
    Rational q1;
    Rational q2;
    Rational q;
    MomentSeq<Rational> direct;
    MomentSeq<Rational> convolved;
    bool moments_equal = false;
    /// q^{r-1} == (q/q1)^r q1^{r-1} + (q/q2)^r q2^{r-1} for r = 1..7.
    bool cumulant_scaling = false;
    bool ok() const { return moments_equal && cumulant_scaling; }
};

/// mu_q == D_{sqrt(q/q1)} mu_{q1} [+] D_{sqrt(q/q2)} mu_{q2}, 1/q = 1/q1 + 1/q2.
/// q1 and q2 must be nonzero, of the same sign and within [-1, 1];
/// otherwise std::domain_error.
Theorem6Report verify_theorem6(const Rational& q1, const Rational& q2, int order);

struct IteratedReport {
    Rational base;
    int copies = 0;
    Rational q;
    MomentSeq<Rational> direct;
    MomentSeq<Rational> convolved;
    bool ok() const { return direct == convolved; }
};

/// mu_{base/N} == N-fold free convolution of D_{1/sqrt N} mu_base.
IteratedReport verify_iterated(const Rational& base, int copies, int order);

}  // namespace pairweave
