#include "pairweave/psd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace pairweave {

RationalMatrix evaluate(const PolyMatrix& m, const Rational& q) {
    RationalMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).eval(q);
    }
    return out;
}

PsdVerdict ldl_psd(const RationalMatrix& m) {
    if (!m.symmetric()) throw std::invalid_argument("ldl_psd: matrix is not symmetric");
    const std::size_t n = m.dim();
    PsdVerdict verdict;
    verdict.dimension = n;
    verdict.method = "ldl";

    // in-place on the lower triangle; s holds the running Schur complement
    std::vector<mpq_class> s(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) s[i * n + j] = m(i, j).raw();
    }
    mpq_class factor;
    for (std::size_t k = 0; k < n; ++k) {
        const mpq_class& pivot = s[k * n + k];
        const int sign = sgn(pivot);
        if (sign < 0) {
            verdict.failing_index = k;
            return verdict;
        }
        if (sign == 0) {
            for (std::size_t i = k + 1; i < n; ++i) {
                if (sgn(s[i * n + k]) != 0) {
                    verdict.failing_index = k;
                    return verdict;
                }
            }
            continue;
        }
        ++verdict.rank;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(s[i * n + k]) == 0) continue;
            factor = s[i * n + k] / pivot;
            for (std::size_t j = k + 1; j <= i; ++j) {
                if (sgn(s[j * n + k]) == 0) continue;
                s[i * n + j] -= factor * s[j * n + k];
            }
        }
    }
    verdict.psd = true;
    return verdict;
}

PsdVerdict eigen_psd(const RationalMatrix& m) {
    if (!m.symmetric()) throw std::invalid_argument("eigen_psd: matrix is not symmetric");
    const auto n = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_double();
        }
    }
    PsdVerdict verdict;
    verdict.dimension = m.dim();
    verdict.method = "eigen";
    if (n == 0) {
        verdict.psd = true;
        return verdict;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    const double tol = 1e-9 * std::max(1.0, a.norm());
    verdict.min_eigenvalue = ev.minCoeff();
    verdict.rank = static_cast<std::size_t>((ev.array() > tol).count());
    verdict.psd = *verdict.min_eigenvalue >= -tol;
    return verdict;
}

PsdVerdict certify_psd(const RationalMatrix& m, PsdMethod method) {
    switch (method) {
        case PsdMethod::exact:
            return ldl_psd(m);
        case PsdMethod::eigen:
            return eigen_psd(m);
        case PsdMethod::automatic:
            return m.dim() <= kExactPsdLimit ? ldl_psd(m) : eigen_psd(m);
    }
    return ldl_psd(m);
}

}  // namespace pairweave
