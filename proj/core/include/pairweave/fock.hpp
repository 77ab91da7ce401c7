#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "pairweave/psd.hpp"
#include "pairweave/qpoly.hpp"
#include "pairweave/states.hpp"

namespace pairweave {

/// `nonnegative` is the blocked Fock space for 0 <= q <= 1. `signed_q` is the
/// variant for -1 <= q <= 0, where annihilation picks up (-1)^{p-1} and the
/// base (-q), and the form picks up (-1)^{#I(pi)}. All coefficients stay
/// polynomials in q.
enum class FockRegime { nonnegative, signed_q };

/// Basis vector (f_{i_1} x ... x f_{i_n}, A) of the blocked Fock space.
///
/// A is a subset of {1..n-1} stored as a bitmask, bit k-1 for separation
/// point k. Separation points are numbered from the right: point k sits
/// between particles n-k and n-k+1.
struct BlockedBasis {
    std::vector<int> indices;
    std::uint32_t seps = 0;

    int particles() const { return static_cast<int>(indices.size()); }
    bool has_sep(int k) const { return k >= 1 && ((seps >> static_cast<unsigned>(k - 1)) & 1U) != 0; }
    std::vector<int> sep_list() const;

    static BlockedBasis make(std::vector<int> indices, const std::vector<int>& seps);

    /// Lexicographic in (indices, seps bitmask).
    friend auto operator<=>(const BlockedBasis&, const BlockedBasis&) = default;
};

/// Formal linear combination of the vacuum and blocked basis vectors with
/// polynomial coefficients. Zero coefficients are never stored.
class FockVector {
public:
    FockVector() = default;

    static FockVector vacuum();
    static FockVector basis(BlockedBasis b, QPoly coeff = QPoly(1));

    const QPoly& vacuum_coeff() const { return vacuum_; }
    const std::map<BlockedBasis, QPoly>& terms() const { return terms_; }
    bool is_zero() const { return vacuum_.is_zero() && terms_.empty(); }

    void add_vacuum(const QPoly& c) { vacuum_ += c; }
    void add(const BlockedBasis& b, const QPoly& c);

    FockVector& operator+=(const FockVector& o);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    FockVector& operator*=(const QPoly& c);
    friend FockVector operator*(const QPoly& c, FockVector v) { return v *= c; }

    friend bool operator==(const FockVector&, const FockVector&) = default;

private:
    QPoly vacuum_;
    std::map<BlockedBasis, QPoly> terms_;
};

/// <(f, A), (g, B)> for basis vectors: the sum over index-matching
/// bijections pi of q^{(n-1) - #(A n B n b(pi))}, signed by (-1)^{#I(pi)}
/// in the signed regime.
QPoly basis_inner_product(const BlockedBasis& a, const BlockedBasis& b, FockRegime regime);

/// Bilinear extension; the vacuum is orthogonal to every particle vector.
QPoly inner_product(const FockVector& u, const FockVector& v, FockRegime regime);

/// c*(f_i): prepends i and adds separation point n. Same in both regimes.
FockVector create(int i, const FockVector& v);

/// c(f_i), removing any particle with index i.
FockVector annihilate(int i, const FockVector& v, FockRegime regime);

/// <c*(f_i) u, v> == <u, c(f_i) v> as exact polynomials.
bool adjoint_identity_check(int i, const FockVector& u, const FockVector& v, FockRegime regime);

/// Every basis vector with n particles over indices 1..index_count, in
/// lexicographic (indices, seps) order.
std::vector<BlockedBasis> blocked_basis(int n, int index_count);

GramReport fock_gram_psd(int n, int index_count, const std::vector<Rational>& qpoints, FockRegime regime,
                         PsdMethod method = PsdMethod::automatic);

/// <Omega, w Omega>: letters act right to left; star letters create.
QPoly vacuum_moment(const Word& w, FockRegime regime);

/// Seeded random vector: a few basis terms with up to max_particles
/// particles (possibly the vacuum) and small integer coefficients.
FockVector random_fock_vector(std::mt19937_64& rng, int max_particles, int index_count);

}  // namespace pairweave
