#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pairweave/qpoly.hpp"
#include "pairweave/rational.hpp"

namespace pairweave {

/// Dense square matrix, row-major.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n) {}
    SquareMatrix(std::size_t n, const T& fill) : n_(n), data_(n * n, fill) {}

    std::size_t dim() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    bool symmetric() const {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                if (!((*this)(i, j) == (*this)(j, i))) return false;
            }
        }
        return true;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = SquareMatrix<Rational>;
using PolyMatrix = SquareMatrix<QPoly>;

RationalMatrix evaluate(const PolyMatrix& m, const Rational& q);

enum class PsdMethod {
    /// Exact LDL^T up to exact_limit, floating eigenvalues beyond.
    automatic,
    exact,
    eigen,
};

struct PsdVerdict {
    bool psd = false;
    std::size_t dimension = 0;
    std::string method;
    /// Exact rank from the LDL^T pivots; for the eigen path, the count of
    /// eigenvalues above tolerance.
    std::size_t rank = 0;
    /// Index of the first pivot that proved indefiniteness (exact path only).
    std::optional<std::size_t> failing_index;
    /// Smallest eigenvalue (eigen path only).
    std::optional<double> min_eigenvalue;
};

/// Exact PSD certificate by symmetric elimination without pivoting. A
/// negative pivot, or a zero pivot with a nonzero remainder in its row,
/// proves the matrix is not positive semidefinite.
PsdVerdict ldl_psd(const RationalMatrix& m);

/// Floating symmetric eigenvalue test with threshold -1e-9 * max(1, |G|_F).
PsdVerdict eigen_psd(const RationalMatrix& m);

inline constexpr std::size_t kExactPsdLimit = 256;

PsdVerdict certify_psd(const RationalMatrix& m, PsdMethod method = PsdMethod::automatic);

}  // namespace pairweave
