#include "pairweave/freeprob.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "pairweave/pairings.hpp"
#include "pairweave/states.hpp"

namespace pairweave {

void for_each_nc_partition(int n, const std::function<void(const NCPartition&)>& fn) {
    if (n < 0) throw std::invalid_argument("for_each_nc_partition: negative n");
    NCPartition current;
    // stack of block slots that may still receive elements; joining a block
    // closes every block opened after it
    std::vector<std::size_t> open;

    auto place = [&](auto&& self, int element) -> void {
        if (element > n) {
            fn(current);
            return;
        }
        // new block
        current.blocks.push_back({element});
        open.push_back(current.blocks.size() - 1);
        self(self, element + 1);
        open.pop_back();
        current.blocks.pop_back();

        // join an open block, innermost first
        for (std::size_t depth = open.size(); depth-- > 0;) {
            const std::size_t slot = open[depth];
            std::vector<std::size_t> closed(open.begin() + static_cast<std::ptrdiff_t>(depth) + 1, open.end());
            open.resize(depth + 1);
            current.blocks[slot].push_back(element);
            self(self, element + 1);
            current.blocks[slot].pop_back();
            open.insert(open.end(), closed.begin(), closed.end());
        }
    };
    place(place, 1);
}

std::vector<NCPartition> enumerate_nc(int n) {
    std::vector<NCPartition> out;
    for_each_nc_partition(n, [&](const NCPartition& p) { out.push_back(p); });
    return out;
}

MomentSeq<Rational> free_convolve(const MomentSeq<Rational>& a, const MomentSeq<Rational>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("free_convolve: sequences of different order");
    const auto ka = moments_to_cumulants(a);
    const auto kb = moments_to_cumulants(b);
    std::vector<Rational> k;
    k.reserve(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) k.push_back(ka[n] + kb[n]);
    return cumulants_to_moments(CumulantSeq<Rational>(std::move(k)));
}

MomentSeq<Rational> dilate(const MomentSeq<Rational>& a, const Rational& lam2) {
    std::vector<Rational> out;
    out.reserve(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) {
        if (n % 2 == 1) {
            if (!a[n].is_zero()) throw std::domain_error("dilate: only symmetric sequences (zero odd moments)");
            out.emplace_back(0);
        } else {
            out.push_back(pow(lam2, static_cast<long>(n / 2)) * a[n]);
        }
    }
    return MomentSeq<Rational>(std::move(out));
}

MomentSeq<QPoly> tq_moment_polys(TqRegime regime, int order) {
    static std::mutex mutex;
    static std::map<TqRegime, MomentSeq<QPoly>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(regime); it != cache.end() && it->second.order() >= static_cast<std::size_t>(order)) {
            const auto& t = it->second.terms();
            return MomentSeq<QPoly>(std::vector<QPoly>(t.begin(), t.begin() + order));
        }
    }
    auto m = selfadjoint_moments(Weight::tq(regime), order, CovarianceQ::fock());
    std::lock_guard lock(mutex);
    auto& slot = cache[regime];
    if (slot.order() < m.order()) slot = m;
    return m;
}

MomentSeq<Rational> mu_q_moments(const Rational& q, int order) {
    if (q < Rational(-1) || q > Rational(1)) throw std::domain_error("mu_q_moments: q must lie in [-1, 1]");
    if (order > 16) throw std::domain_error("mu_q_moments: order capped at 16");
    const TqRegime regime = q.sign() < 0 ? TqRegime::negative : TqRegime::nonnegative;
    return evaluate(tq_moment_polys(regime, order), q);
}

CumulantSeq<QPoly> connected_cumulants(const Weight& t, int order) {
    std::vector<QPoly> k(static_cast<std::size_t>(std::max(order, 0)));
    for (int n = 2; n <= order; n += 2) {
        QPoly sum;
        for_each_pairing(n, [&](const Pairing& v) {
            if (v.block_count() == 1) sum += eval_weight(t, v);
        });
        k[static_cast<std::size_t>(n - 1)] = std::move(sum);
    }
    return CumulantSeq<QPoly>(std::move(k));
}

namespace {

void check_parameter(const Rational& x, const char* name) {
    if (x.is_zero()) throw std::domain_error(std::string(name) + " must be nonzero");
    if (x < Rational(-1) || x > Rational(1)) throw std::domain_error(std::string(name) + " must lie in [-1, 1]");
}

}  // namespace

Theorem6Report verify_theorem6(const Rational& q1, const Rational& q2, int order) {
    check_parameter(q1, "q1");
    check_parameter(q2, "q2");
    if (q1.sign() != q2.sign()) throw std::domain_error("q1 and q2 must have the same sign");
    if (order > 14) throw std::domain_error("verify_theorem6: order capped at 14");

    Theorem6Report report;
    report.q1 = q1;
    report.q2 = q2;
    report.q = Rational(1) / (Rational(1) / q1 + Rational(1) / q2);
    const Rational& q = report.q;

    report.direct = mu_q_moments(q, order);
    report.convolved = free_convolve(dilate(mu_q_moments(q1, order), q / q1), dilate(mu_q_moments(q2, order), q / q2));
    report.moments_equal = report.direct == report.convolved;

    report.cumulant_scaling = true;
    for (long r = 1; r <= 7; ++r) {
        const Rational lhs = pow(q, r - 1);
        const Rational rhs = pow(q / q1, r) * pow(q1, r - 1) + pow(q / q2, r) * pow(q2, r - 1);
        if (lhs != rhs) report.cumulant_scaling = false;
    }
    return report;
}

IteratedReport verify_iterated(const Rational& base, int copies, int order) {
    check_parameter(base, "base");
    if (copies < 1) throw std::domain_error("verify_iterated: need at least one copy");
    IteratedReport report;
    report.base = base;
    report.copies = copies;
    report.q = base / Rational(copies);
    report.direct = mu_q_moments(report.q, order);

    const auto piece = dilate(mu_q_moments(base, order), Rational(1, copies));
    MomentSeq<Rational> acc = piece;
    for (int i = 1; i < copies; ++i) acc = free_convolve(acc, piece);
    report.convolved = std::move(acc);
    return report;
}

}  // namespace pairweave
