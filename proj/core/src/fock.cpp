#include "pairweave/fock.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace pairweave {

namespace {

constexpr int kMaxParticles = 31;

std::uint32_t low_bits(int count) {
    return count <= 0 ? 0U : (count >= 32 ? ~0U : ((1U << static_cast<unsigned>(count)) - 1U));
}

// (-1)^e q^e, or q^e
QPoly signed_power(int exponent, bool negate) {
    return QPoly::monomial(static_cast<std::size_t>(exponent), Rational(negate ? -1 : 1));
}

}  // namespace

std::vector<int> BlockedBasis::sep_list() const {
    std::vector<int> out;
    for (int k = 1; k < particles(); ++k) {
        if (has_sep(k)) out.push_back(k);
    }
    return out;
}

BlockedBasis BlockedBasis::make(std::vector<int> indices, const std::vector<int>& seps) {
    const int n = static_cast<int>(indices.size());
    if (n < 1 || n > kMaxParticles) throw std::invalid_argument("blocked basis needs 1..31 particles");
    BlockedBasis b{std::move(indices), 0U};
    for (int k : seps) {
        if (k < 1 || k > n - 1) {
            throw std::invalid_argument("separation point " + std::to_string(k) + " outside 1.." +
                                        std::to_string(n - 1));
        }
        b.seps |= 1U << static_cast<unsigned>(k - 1);
    }
    return b;
}

FockVector FockVector::vacuum() {
    FockVector v;
    v.vacuum_ = QPoly(1);
    return v;
}

FockVector FockVector::basis(BlockedBasis b, QPoly coeff) {
    FockVector v;
    v.add(b, coeff);
    return v;
}

void FockVector::add(const BlockedBasis& b, const QPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    vacuum_ += o.vacuum_;
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

FockVector& FockVector::operator*=(const QPoly& c) {
    if (c.is_zero()) {
        *this = FockVector();
        return *this;
    }
    vacuum_ *= c;
    for (auto& [b, x] : terms_) x *= c;
    return *this;
}

QPoly basis_inner_product(const BlockedBasis& a, const BlockedBasis& b, FockRegime regime) {
    const int n = a.particles();
    if (n != b.particles()) return {};
    const std::uint32_t common = a.seps & b.seps;

    QPoly total;
    std::vector<int> pi(static_cast<std::size_t>(n));  // 0-based images
    std::vector<bool> taken(static_cast<std::size_t>(n), false);

    auto accumulate = [&] {
        // b(pi): prefix {1..k} stable gives separation point n-k
        std::uint32_t bmask = 0;
        int running_max = -1;
        for (int k = 1; k <= n - 1; ++k) {
            running_max = std::max(running_max, pi[static_cast<std::size_t>(k - 1)]);
            if (running_max == k - 1) bmask |= 1U << static_cast<unsigned>(n - k - 1);
        }
        const int exponent = (n - 1) - std::popcount(common & bmask);
        if (regime == FockRegime::nonnegative) {
            total += signed_power(exponent, false);
            return;
        }
        int inversions = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) inversions += pi[i] > pi[j] ? 1 : 0;
        }
        total += signed_power(exponent, ((exponent + inversions) & 1) != 0);
    };

    // only bijections with a.indices[i] == b.indices[pi(i)] contribute
    auto recurse = [&](auto&& self, int i) -> void {
        if (i == n) {
            accumulate();
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (taken[j] || a.indices[i] != b.indices[j]) continue;
            taken[j] = true;
            pi[i] = j;
            self(self, i + 1);
            taken[j] = false;
        }
    };
    recurse(recurse, 0);
    return total;
}

QPoly inner_product(const FockVector& u, const FockVector& v, FockRegime regime) {
    QPoly total = u.vacuum_coeff() * v.vacuum_coeff();
    for (const auto& [a, ca] : u.terms()) {
        for (const auto& [b, cb] : v.terms()) {
            if (a.particles() != b.particles()) continue;
            QPoly g = basis_inner_product(a, b, regime);
            if (!g.is_zero()) total += ca * cb * g;
        }
    }
    return total;
}

FockVector create(int i, const FockVector& v) {
    FockVector out;
    if (!v.vacuum_coeff().is_zero()) out.add(BlockedBasis{{i}, 0U}, v.vacuum_coeff());
    for (const auto& [b, c] : v.terms()) {
        const int n = b.particles();
        if (n + 1 > kMaxParticles) throw std::length_error("Fock vector exceeds particle limit");
        BlockedBasis nb;
        nb.indices.reserve(static_cast<std::size_t>(n) + 1);
        nb.indices.push_back(i);
        nb.indices.insert(nb.indices.end(), b.indices.begin(), b.indices.end());
        nb.seps = b.seps | (1U << static_cast<unsigned>(n - 1));
        out.add(nb, c);
    }
    return out;
}

FockVector annihilate(int i, const FockVector& v, FockRegime regime) {
    FockVector out;
    for (const auto& [b, c] : v.terms()) {
        const int n = b.particles();
        if (n == 1) {
            if (b.indices[0] == i) out.add_vacuum(c);
            continue;
        }
        const bool last_sep = b.has_sep(n - 1);
        for (int p = 1; p <= n; ++p) {
            if (b.indices[static_cast<std::size_t>(p - 1)] != i) continue;
            BlockedBasis nb;
            nb.indices = b.indices;
            nb.indices.erase(nb.indices.begin() + (p - 1));
            int z = 1;
            if (p == 1 && last_sep) {
                z = 0;
                nb.seps = b.seps & ~(1U << static_cast<unsigned>(n - 2));
            } else {
                nb.seps = b.seps & low_bits(n - p);
            }
            QPoly factor;
            if (regime == FockRegime::nonnegative) {
                factor = signed_power(z, false);
            } else {
                factor = signed_power(z, ((z + p - 1) & 1) != 0);
            }
            out.add(nb, c * factor);
        }
    }
    return out;
}

bool adjoint_identity_check(int i, const FockVector& u, const FockVector& v, FockRegime regime) {
    return inner_product(create(i, u), v, regime) == inner_product(u, annihilate(i, v, regime), regime);
}

std::vector<BlockedBasis> blocked_basis(int n, int index_count) {
    if (n < 1 || n > kMaxParticles) throw std::invalid_argument("blocked_basis needs 1..31 particles");
    if (index_count < 1) throw std::invalid_argument("blocked_basis needs at least one index");
    std::vector<BlockedBasis> out;
    std::vector<int> idx(static_cast<std::size_t>(n), 1);
    const std::uint32_t masks = 1U << static_cast<unsigned>(n - 1);
    while (true) {
        for (std::uint32_t m = 0; m < masks; ++m) out.push_back(BlockedBasis{idx, m});
        int pos = n - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == index_count) {
            idx[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
    }
    return out;
}

GramReport fock_gram_psd(int n, int index_count, const std::vector<Rational>& qpoints, FockRegime regime,
                         PsdMethod method) {
    const auto basis = blocked_basis(n, index_count);
    GramReport report;
    report.gram = PolyMatrix(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            QPoly g = basis_inner_product(basis[i], basis[j], regime);
            report.gram(j, i) = g;
            report.gram(i, j) = std::move(g);
        }
    }
    for (const auto& q : qpoints) report.points.push_back({q, certify_psd(evaluate(report.gram, q), method)});
    return report;
}

QPoly vacuum_moment(const Word& w, FockRegime regime) {
    FockVector v = FockVector::vacuum();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        v = it->star ? create(it->index, v) : annihilate(it->index, v, regime);
        if (v.is_zero()) return {};
    }
    return v.vacuum_coeff();
}

FockVector random_fock_vector(std::mt19937_64& rng, int max_particles, int index_count) {
    auto below = [&rng](std::uint64_t bound) { return static_cast<int>(rng() % bound); };
    FockVector v;
    const int terms = 1 + below(4);
    for (int t = 0; t < terms; ++t) {
        const long coeff = below(7) - 3;
        if (coeff == 0) continue;
        const int n = below(static_cast<std::uint64_t>(max_particles) + 1);
        if (n == 0) {
            v.add_vacuum(QPoly(coeff));
            continue;
        }
        BlockedBasis b;
        for (int p = 0; p < n; ++p) b.indices.push_back(1 + below(static_cast<std::uint64_t>(index_count)));
        b.seps = static_cast<std::uint32_t>(rng()) & low_bits(n - 1);
        v.add(b, QPoly(coeff));
    }
    return v;
}

}  // namespace pairweave
