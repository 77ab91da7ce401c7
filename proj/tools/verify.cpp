#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <string>

#include "pairweave/fock.hpp"
#include "pairweave/freeprob.hpp"
#include "pairweave/measures.hpp"
#include "pairweave/pairings.hpp"
#include "pairweave/states.hpp"
#include "pairweave/weights.hpp"

namespace pairweave::cli {

namespace {

std::string fmt_point(const Rational& q) { return "q=" + q.to_string(); }

Json verdict_json(const PsdVerdict& v) {
    Json out;
    out["psd"] = v.psd;
    out["dimension"] = v.dimension;
    out["method"] = v.method;
    out["rank"] = v.rank;
    out["failing_index"] = v.failing_index ? Json(*v.failing_index) : Json(nullptr);
    if (v.min_eigenvalue) out["min_eigenvalue"] = *v.min_eigenvalue;
    return out;
}

long odd_double_factorial(int r) {
    long out = 1;
    for (int k = 3; k <= 2 * r - 1; k += 2) out *= k;
    return out;
}

long catalan(int r) {
    // C_r = binom(2r, r) / (r + 1), computed incrementally
    long c = 1;
    for (int i = 0; i < r; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

const std::vector<Rational>& theorem3_grid() {
    static const std::vector<Rational> grid = {0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
    return grid;
}

// every word of length len over indices 1..k with both star flags
template <typename Fn>
void for_each_word(int len, int k, Fn&& fn) {
    Word w(static_cast<std::size_t>(len));
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == len) {
            fn(w);
            return;
        }
        for (int i = 1; i <= k; ++i) {
            for (bool s : {false, true}) {
                w[static_cast<std::size_t>(pos)] = {i, s};
                self(self, pos + 1);
            }
        }
    };
    rec(rec, 0);
}

}  // namespace

Report verify_counts(int rmax) {
    Report report;
    report.command = "verify counts";
    report.params["rmax"] = rmax;
    static const long connected[] = {1, 1, 4, 27, 248, 2830, 38232};
    for (int r = 1; r <= rmax; ++r) {
        long total = 0;
        long nc = 0;
        long conn = 0;
        for_each_pairing(2 * r, [&](const Pairing& v) {
            ++total;
            nc += v.noncrossing() ? 1 : 0;
            conn += v.block_count() == 1 ? 1 : 0;
        });
        const std::string tag = "2r=" + std::to_string(2 * r);
        report.check("pairings " + tag, odd_double_factorial(r), total, total == odd_double_factorial(r));
        report.check("noncrossing " + tag, catalan(r), nc, nc == catalan(r));
        if (r <= 7) report.check("connected " + tag, connected[r - 1], conn, conn == connected[r - 1]);
    }
    return report;
}

Report verify_corollary7(int rmax) {
    Report report;
    report.command = "verify corollary7";
    report.params["rmax"] = rmax;
    Json rows = Json::array();
    for (int r = 1; r <= rmax; ++r) {
        const auto id = pairweave::verify_corollary7(r);
        report.check("r=" + std::to_string(r), to_json(id.rhs), to_json(id.lhs), id.equal);
        rows.push_back({{"r", r}, {"lhs", id.lhs.to_string()}, {"rhs", id.rhs.to_string()}});
        if (r == 2) {
            const QPoly printed = QPoly(2) - QPoly::q();
            report.check("r=2 printed value", printed.to_string(), id.lhs.to_string(),
                         id.lhs == printed && id.rhs == printed);
        }
        if (r == 3) {
            const QPoly printed = QPoly(5) - QPoly::q() * Rational(6) + QPoly::monomial(2, 2);
            report.check("r=3 printed rhs", printed.to_string(), id.rhs.to_string(), id.rhs == printed);
        }
    }
    report.details["polynomials"] = std::move(rows);
    return report;
}

Report verify_theorem1(int rmax, int explore_rmax) {
    Report report;
    report.command = "verify theorem1";
    report.params["rmax"] = rmax;
    report.params["explore_rmax"] = explore_rmax;
    const std::vector<Rational> grid = {0, Rational(1, 2), 1};
    const Weight tq = Weight::tq();
    const Weight prod = Weight::product({Weight::tq(), Weight::that_mu(Rational(1, 2))});
    const Weight twisted = Weight::tq(TqRegime::negative);
    for (int r = 1; r <= rmax; ++r) {
        const std::string tag = "r=" + std::to_string(r);
        for (const auto& pv : symgroup_gram_psd(tq, r, grid, PsdMethod::exact).points) {
            report.check("tq " + tag + " " + fmt_point(pv.point), true, pv.verdict.psd, pv.verdict.psd);
        }
        for (const auto& pv : symgroup_gram_psd(prod, r, grid, PsdMethod::exact).points) {
            report.check("tq*mu^I(mu=1/2) " + tag + " " + fmt_point(pv.point), true, pv.verdict.psd, pv.verdict.psd);
        }
        for (const auto& pv : symgroup_gram_psd(twisted, r, {Rational(-1, 2), -1}, PsdMethod::exact).points) {
            report.check("twisted tq " + tag + " " + fmt_point(pv.point), true, pv.verdict.psd, pv.verdict.psd);
        }
    }
    // q^{d(pi)} taken literally at negative q; positivity is not claimed
    Json raw = Json::array();
    Json smallest = nullptr;
    for (int r = 1; r <= explore_rmax; ++r) {
        for (const auto& pv : symgroup_gram_psd(tq, r, {Rational(-1, 2), Rational(-1, 4), -1}, PsdMethod::exact).points) {
            raw.push_back({{"r", r}, {"q", pv.point.to_string()}, {"verdict", verdict_json(pv.verdict)}});
            if (!pv.verdict.psd && smallest.is_null()) smallest = {{"r", r}, {"q", pv.point.to_string()}};
        }
    }
    report.details["raw_negative_q"] = std::move(raw);
    report.details["smallest_failing"] = std::move(smallest);
    return report;
}

Report verify_theorem3(int nmax, int index_count) {
    Report report;
    report.command = "verify theorem3";
    report.params["nmax"] = nmax;
    report.params["indices"] = index_count;
    for (int n = 1; n <= nmax; ++n) {
        for (int k = 1; k <= index_count; ++k) {
            const auto r = fock_gram_psd(n, k, theorem3_grid(), FockRegime::nonnegative, PsdMethod::exact);
            const std::string tag = "n=" + std::to_string(n) + " K=" + std::to_string(k);
            report.check("symmetric " + tag, true, r.gram.symmetric(), r.gram.symmetric());
            for (const auto& pv : r.points) {
                report.check("psd " + tag + " " + fmt_point(pv.point), true, pv.verdict.psd, pv.verdict.psd);
            }
        }
    }
    {
        const auto r = fock_gram_psd(2, 1, {}, FockRegime::nonnegative);
        const QPoly two_q = QPoly::monomial(1, 2);
        const QPoly one_plus_q = QPoly(1) + QPoly::q();
        const bool ok = r.gram.dim() == 2 && r.gram(0, 0) == two_q && r.gram(0, 1) == two_q &&
                        r.gram(1, 0) == two_q && r.gram(1, 1) == one_plus_q;
        Json actual = Json::array();
        for (std::size_t i = 0; i < r.gram.dim(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < r.gram.dim(); ++j) row.push_back(r.gram(i, j).to_string());
            actual.push_back(std::move(row));
        }
        report.check("n=2 closed form", Json::array({Json::array({"2q", "2q"}), Json::array({"2q", "1 + q"})}), actual,
                     ok);
    }
    // the signed form is explored, not asserted
    Json signed_rows = Json::array();
    const std::vector<Rational> negative = {Rational(-1, 4), Rational(-1, 2), Rational(-3, 4), -1};
    for (int n = 1; n <= std::min(nmax, 3); ++n) {
        for (int k = 1; k <= index_count; ++k) {
            const auto r = fock_gram_psd(n, k, negative, FockRegime::signed_q, PsdMethod::exact);
            for (const auto& pv : r.points) {
                signed_rows.push_back(
                    {{"n", n}, {"K", k}, {"q", pv.point.to_string()}, {"verdict", verdict_json(pv.verdict)}});
            }
        }
    }
    report.details["signed_regime"] = std::move(signed_rows);
    return report;
}

Report verify_theorem4(int trials, std::uint64_t seed) {
    Report report;
    report.command = "verify theorem4";
    report.params["trials"] = trials;
    report.params["seed"] = seed;
    std::mt19937_64 rng(seed);
    for (auto regime : {FockRegime::nonnegative, FockRegime::signed_q}) {
        int passed = 0;
        for (int t = 0; t < trials; ++t) {
            const auto u = random_fock_vector(rng, 4, 3);
            const auto v = random_fock_vector(rng, 4, 3);
            const int i = 1 + static_cast<int>(rng() % 3);
            passed += adjoint_identity_check(i, u, v, regime) ? 1 : 0;
        }
        const std::string name = regime == FockRegime::nonnegative ? "nonnegative" : "signed";
        report.check(name, trials, passed, passed == trials);
    }
    return report;
}

Report verify_theorem5(int maxlen, int samples, std::uint64_t seed) {
    Report report;
    report.command = "verify theorem5";
    report.params["maxlen"] = maxlen;
    report.params["samples"] = samples;
    report.params["seed"] = seed;
    const auto k = Kernel::identity();
    const auto fock = CovarianceQ::fock();
    const Weight pos = Weight::tq();
    const Weight neg = Weight::tq(TqRegime::negative);
    const int exhaustive = std::min(maxlen, 6);

    long total = 0;
    long agree_pos = 0;
    long agree_neg = 0;
    for (int len = 0; len <= exhaustive; ++len) {
        for_each_word(len, 3, [&](const Word& w) {
            ++total;
            agree_pos += vacuum_moment(w, FockRegime::nonnegative) == word_moment(w, k, fock, pos) ? 1 : 0;
            agree_neg += vacuum_moment(w, FockRegime::signed_q) == word_moment(w, k, fock, neg) ? 1 : 0;
        });
    }
    report.check("exhaustive nonnegative len<=" + std::to_string(exhaustive), total, agree_pos, agree_pos == total);
    report.check("exhaustive signed len<=" + std::to_string(exhaustive), total, agree_neg, agree_neg == total);

    std::mt19937_64 rng(seed);
    long s_pos = 0;
    long s_neg = 0;
    long nonzero = 0;
    const int max_half = std::max(1, maxlen / 2);
    for (int s = 0; s < samples; ++s) {
        const int len = 2 * (1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_half)));
        Word w(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) {
            w[static_cast<std::size_t>(i)] = {1 + static_cast<int>(rng() % 3), i < len / 2};
        }
        std::shuffle(w.begin(), w.end(), rng);
        const QPoly a = vacuum_moment(w, FockRegime::nonnegative);
        s_pos += a == word_moment(w, k, fock, pos) ? 1 : 0;
        s_neg += vacuum_moment(w, FockRegime::signed_q) == word_moment(w, k, fock, neg) ? 1 : 0;
        nonzero += a.is_zero() ? 0 : 1;
    }
    report.check("sampled nonnegative", samples, s_pos, s_pos == samples);
    report.check("sampled signed", samples, s_neg, s_neg == samples);
    report.details["sampled_nonzero_moments"] = nonzero;
    return report;
}

Report verify_theorem6(const std::optional<Rational>& q1, const std::optional<Rational>& q2, int order,
                       std::optional<int> iterate) {
    Report report;
    report.command = "verify theorem6";
    report.params["order"] = order;
    auto add = [&](const Rational& a, const Rational& b) {
        const auto r = pairweave::verify_theorem6(a, b, order);
        const std::string tag = "q1=" + a.to_string() + " q2=" + b.to_string();
        report.check("moments " + tag, to_json(r.direct), to_json(r.convolved), r.moments_equal);
        report.check("cumulant scaling " + tag, true, r.cumulant_scaling, r.cumulant_scaling);
    };
    auto add_iterated = [&](const Rational& base, int copies) {
        const auto r = verify_iterated(base, copies, order);
        report.check("iterated base=" + base.to_string() + " N=" + std::to_string(copies), to_json(r.direct),
                     to_json(r.convolved), r.ok());
    };
    if (q1 || q2) {
        if (!q1 || !q2) throw std::invalid_argument("--q1 and --q2 go together");
        report.params["q1"] = q1->to_string();
        report.params["q2"] = q2->to_string();
        add(*q1, *q2);
        if (iterate) {
            report.params["iterate"] = *iterate;
            add_iterated(*q1, *iterate);
        }
        return report;
    }
    const std::vector<Rational> mags = {1, Rational(1, 2), Rational(1, 3), Rational(3, 4)};
    for (int sign : {1, -1}) {
        for (std::size_t i = 0; i < mags.size(); ++i) {
            for (std::size_t j = i; j < mags.size(); ++j) add(mags[i] * Rational(sign), mags[j] * Rational(sign));
        }
    }
    const int copies = iterate.value_or(3);
    report.params["iterate"] = copies;
    add_iterated(1, copies);
    add_iterated(-1, copies);
    return report;
}

Report verify_theorem7(int order, int quad_order, int npoints) {
    Report report;
    report.command = "verify theorem7";
    report.params["order"] = order;
    report.params["quad_order"] = quad_order;
    report.params["npoints"] = npoints;
    report.params["tolerance"] = 1e-8;
    for (const Rational& q : {Rational(-1, 4), Rational(-1, 2), Rational(-3, 4)}) {
        const auto lhs = mu_ab_moments(1, Rational(1) + q, order);
        const auto rhs = mu_q_moments(q, order);
        report.check("combinatorial " + fmt_point(q), to_json(rhs), to_json(lhs), lhs == rhs);
    }
    Json paper = Json::array();
    for (const Rational& q : {Rational(-1, 4), Rational(-1, 2), Rational(-3, 4), Rational(-9, 10)}) {
        const auto exact = mu_q_moments(q, quad_order);
        MeasureParams params;
        params.q = q;
        params.atom_mode = AtomMode::derived;
        const auto quad = quad_moments(make_measure(MeasureKind::mu_q, params), quad_order, npoints);
        double worst = std::abs(quad.moments[0] - 1.0);
        for (int n = 1; n <= quad_order; ++n) {
            worst = std::max(worst, std::abs(quad.moments[static_cast<std::size_t>(n)] -
                                             exact[static_cast<std::size_t>(n)].to_double()));
        }
        report.check("analytic derived " + fmt_point(q), "<= 1e-8", worst, worst <= 1e-8);

        params.atom_mode = AtomMode::paper;
        const auto pq = quad_moments(make_measure(MeasureKind::mu_q, params), quad_order, npoints);
        double pworst = 0.0;
        for (int n = 2; n <= quad_order; n += 2) {
            pworst = std::max(pworst, std::abs(pq.moments[static_cast<std::size_t>(n)] -
                                               exact[static_cast<std::size_t>(n)].to_double()));
        }
        paper.push_back({{"q", q.to_string()}, {"total_mass", pq.moments[0]}, {"max_moment_error", pworst}});
    }
    report.details["paper_atom_mode"] = std::move(paper);
    return report;
}

Report verify_boundary(int order) {
    Report report;
    report.command = "verify boundary";
    report.params["order"] = order;
    const auto one = mu_q_moments(1, order);
    const auto zero = mu_q_moments(0, order);
    const auto minus = mu_q_moments(-1, order);
    for (int r = 1; 2 * r <= order; ++r) {
        const auto n = static_cast<std::size_t>(2 * r);
        const std::string tag = "m" + std::to_string(2 * r);
        report.check("q=1 " + tag, std::to_string(odd_double_factorial(r)), one[n].to_string(),
                     one[n] == Rational(odd_double_factorial(r)));
        report.check("q=0 " + tag, std::to_string(catalan(r)), zero[n].to_string(), zero[n] == Rational(catalan(r)));
        report.check("q=-1 " + tag, "1", minus[n].to_string(), minus[n] == Rational(1));
    }
    bool odd_zero = true;
    for (int n = 1; n <= order; n += 2) {
        for (const auto* m : {&one, &zero, &minus}) odd_zero = odd_zero && (*m)[static_cast<std::size_t>(n)].is_zero();
    }
    report.check("odd moments vanish", true, odd_zero, odd_zero);
    return report;
}

Report verify_hankel(int order) {
    Report report;
    report.command = "verify hankel";
    report.params["order"] = order;
    for (const Rational& q : {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)}) {
        const auto v = hankel_psd(mu_q_moments(q, order));
        report.check("hankel " + fmt_point(q), true, v.psd, v.psd);
    }
    return report;
}

Report verify_all(const SuiteOptions& options, Json& sub_reports) {
    Report report;
    report.command = "verify all";
    report.params["quick"] = options.quick;
    report.params["seed"] = options.seed;
    const bool q = options.quick;
    std::vector<Report> parts;
    parts.push_back(verify_counts(6));
    parts.push_back(verify_corollary7(q ? 5 : 6));
    parts.push_back(verify_theorem5(10, q ? 200 : 1000, options.seed));
    parts.push_back(verify_theorem4(100, options.seed));
    parts.push_back(verify_theorem3(4, 2));
    parts.push_back(verify_theorem1(q ? 4 : 5, q ? 4 : 5));
    parts.push_back(verify_theorem6(std::nullopt, std::nullopt, q ? 12 : 14, 3));
    parts.push_back(verify_theorem7(12, 10, 256));
    parts.push_back(verify_boundary(12));
    parts.push_back(verify_hankel(12));
    sub_reports = Json::array();
    for (const auto& p : parts) {
        long failed = 0;
        for (const auto& c : p.checks) failed += c.pass ? 0 : 1;
        report.check(p.command, 0, failed, p.pass());
        sub_reports.push_back(p.to_json());
    }
    return report;
}

}  // namespace pairweave::cli
