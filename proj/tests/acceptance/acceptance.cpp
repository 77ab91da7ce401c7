// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
// Each criterion also has to finish inside its wall-clock budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pairweave/fock.hpp"
#include "pairweave/freeprob.hpp"
#include "pairweave/measures.hpp"
#include "pairweave/pairings.hpp"
#include "pairweave/states.hpp"
#include "pairweave/weights.hpp"

using namespace pairweave;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) note << "first failure: " << what;
            pass = false;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<void(Outcome&)> body;
};

QPoly poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(std::move(v));
}

void counts(Outcome& o) {
    const long connected[] = {1, 1, 4, 27};
    for (int r = 1; r <= 6; ++r) {
        long total = 0;
        long nc = 0;
        long conn = 0;
        for_each_pairing(2 * r, [&](const Pairing& v) {
            ++total;
            nc += v.noncrossing() ? 1 : 0;
            conn += v.block_count() == 1 ? 1 : 0;
        });
        const std::string tag = " 2r=" + std::to_string(2 * r);
        o.expect(total == pwtest::double_factorial_odd(r), "pairings" + tag);
        o.expect(nc == pwtest::catalan(r), "noncrossing" + tag);
        if (r <= 4) o.expect(conn == connected[r - 1], "connected" + tag);
    }
    o.note << (o.pass ? "1,3,15,105,945,10395; Catalan; 1,1,4,27" : "");
}

void corollary7(Outcome& o) {
    for (int r = 1; r <= 5; ++r) o.expect(verify_corollary7(r).equal, "r=" + std::to_string(r));
    const auto r2 = verify_corollary7(2);
    o.expect(r2.lhs == poly({2, -1}) && r2.rhs == poly({2, -1}), "r=2 equals 2 - q");
    o.expect(verify_corollary7(3).rhs == poly({5, -6, 2}), "r=3 rhs equals 5 - 6q + 2q^2");
    if (o.pass) o.note << "r<=5 exact; r=2: 2 - q; r=3: 5 - 6q + 2q^2";
}

void theorem5(Outcome& o) {
    const auto k = Kernel::identity();
    const auto fock = CovarianceQ::fock();
    const Weight pos = Weight::tq();
    const Weight neg = Weight::tq(TqRegime::negative);
    long words = 0;
    auto compare = [&](const Word& w) {
        ++words;
        o.expect(vacuum_moment(w, FockRegime::nonnegative) == word_moment(w, k, fock, pos), "nonnegative word");
        o.expect(vacuum_moment(w, FockRegime::signed_q) == word_moment(w, k, fock, neg), "signed word");
    };
    for (int len = 0; len <= 6; ++len) {
        Word w(static_cast<std::size_t>(len));
        std::function<void(int)> rec = [&](int pos_) {
            if (pos_ == len) {
                compare(w);
                return;
            }
            for (int i = 1; i <= 3; ++i) {
                for (bool s : {false, true}) {
                    w[static_cast<std::size_t>(pos_)] = {i, s};
                    rec(pos_ + 1);
                }
            }
        };
        rec(0);
    }
    std::mt19937_64 rng(20240515);
    for (int s = 0; s < 200; ++s) {
        const int len = 2 * std::uniform_int_distribution<int>(1, 5)(rng);
        Word w(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) {
            w[static_cast<std::size_t>(i)] = {std::uniform_int_distribution<int>(1, 3)(rng), i < len / 2};
        }
        std::shuffle(w.begin(), w.end(), rng);
        compare(w);
    }
    if (o.pass) o.note << words << " words, both regimes";
}

void theorem4(Outcome& o) {
    std::mt19937_64 rng(7);
    for (auto regime : {FockRegime::nonnegative, FockRegime::signed_q}) {
        for (int t = 0; t < 100; ++t) {
            const auto u = random_fock_vector(rng, 4, 3);
            const auto v = random_fock_vector(rng, 4, 3);
            const int i = std::uniform_int_distribution<int>(1, 3)(rng);
            o.expect(adjoint_identity_check(i, u, v, regime), "trial " + std::to_string(t));
        }
    }
    if (o.pass) o.note << "200 triples exact";
}

void theorem3(Outcome& o) {
    const std::vector<Rational> grid = {0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
    std::size_t largest = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 2; ++k) {
            const auto r = fock_gram_psd(n, k, grid, FockRegime::nonnegative, PsdMethod::exact);
            largest = std::max(largest, r.gram.dim());
            for (const auto& pv : r.points) {
                o.expect(pv.verdict.psd && pv.verdict.method == "ldl",
                         "n=" + std::to_string(n) + " K=" + std::to_string(k) + " q=" + pv.point.to_string());
            }
        }
    }
    const auto two = fock_gram_psd(2, 1, {}, FockRegime::nonnegative);
    const QPoly two_q = poly({0, 2});
    o.expect(two.gram(0, 0) == two_q && two.gram(0, 1) == two_q && two.gram(1, 0) == two_q &&
                 two.gram(1, 1) == poly({1, 1}),
             "n=2 closed form");
    if (o.pass) o.note << "exact LDL up to dimension " << largest << "; [[2q,2q],[2q,1+q]]";
}

void theorem1(Outcome& o) {
    const std::vector<Rational> grid = {0, Rational(1, 2), 1};
    const Weight prod = Weight::product({Weight::tq(), Weight::that_mu(Rational(1, 2))});
    for (int r = 1; r <= 4; ++r) {
        for (const auto* w : {&prod}) {
            for (const auto& pv : symgroup_gram_psd(*w, r, grid, PsdMethod::exact).points) {
                o.expect(pv.verdict.psd, "product r=" + std::to_string(r) + " q=" + pv.point.to_string());
            }
        }
        for (const auto& pv : symgroup_gram_psd(Weight::tq(), r, grid, PsdMethod::exact).points) {
            o.expect(pv.verdict.psd, "tq r=" + std::to_string(r) + " q=" + pv.point.to_string());
        }
    }
    if (o.pass) o.note << "r<=4 (24x24), tq and tq*mu^I at mu=1/2";
}

void theorem6(Outcome& o) {
    const std::vector<Rational> mags = {1, Rational(1, 2), Rational(1, 3), Rational(3, 4)};
    int pairs = 0;
    for (int sign : {1, -1}) {
        for (const auto& a : mags) {
            for (const auto& b : mags) {
                const auto r = verify_theorem6(a * Rational(sign), b * Rational(sign), 12);
                o.expect(r.ok(), "q1=" + r.q1.to_string() + " q2=" + r.q2.to_string());
                ++pairs;
            }
        }
    }
    const auto plus = verify_iterated(1, 3, 12);
    const auto minus = verify_iterated(-1, 3, 12);
    o.expect(plus.ok() && plus.q == Rational(1, 3), "iterated mu_{1/3}");
    o.expect(minus.ok() && minus.q == Rational(-1, 3), "iterated mu_{-1/3}");
    if (o.pass) o.note << pairs << " grid pairs, order 12; N=3 iterated both signs";
}

void theorem7_combinatorial(Outcome& o) {
    for (const Rational q : {Rational(-1, 4), Rational(-1, 2), Rational(-3, 4)}) {
        o.expect(mu_ab_moments(1, Rational(1) + q, 12) == mu_q_moments(q, 12), "q=" + q.to_string());
    }
    if (o.pass) o.note << "order 12 exact at q=-1/4,-1/2,-3/4";
}

void theorem7_analytic(Outcome& o) {
    double worst = 0.0;
    for (const Rational q : {Rational(-1, 4), Rational(-1, 2), Rational(-3, 4), Rational(-9, 10)}) {
        MeasureParams p;
        p.q = q;
        const auto quad = quad_moments(make_measure(MeasureKind::mu_q, p), 10, 256);
        const auto exact = mu_q_moments(q, 10);
        const double mass_err = std::abs(quad.moments[0] - 1.0);
        o.expect(mass_err <= 1e-8, "total mass q=" + q.to_string());
        worst = std::max(worst, mass_err);
        for (std::size_t n = 1; n <= 10; ++n) {
            const double e = std::abs(quad.moments[n] - exact[n].to_double());
            worst = std::max(worst, e);
            o.expect(e <= 1e-8, "m" + std::to_string(n) + " q=" + q.to_string());
        }
    }
    MeasureParams p;
    p.q = Rational(-3, 4);
    p.atom_mode = AtomMode::paper;
    const double paper_mass = quad_moments(make_measure(MeasureKind::mu_q, p), 0, 256).moments[0];
    char buf[160];
    std::snprintf(buf, sizeof buf, "derived mode max error %.2e; paper mode total mass at q=-3/4: %.6f", worst,
                  paper_mass);
    if (o.pass) o.note << buf;
}

void boundary(Outcome& o) {
    const auto one = mu_q_moments(1, 12);
    const auto zero = mu_q_moments(0, 12);
    const auto minus = mu_q_moments(-1, 12);
    for (int r = 1; r <= 6; ++r) {
        const auto n = static_cast<std::size_t>(2 * r);
        o.expect(one[n] == Rational(pwtest::double_factorial_odd(r)), "q=1 m" + std::to_string(n));
        o.expect(zero[n] == Rational(pwtest::catalan(r)), "q=0 m" + std::to_string(n));
        o.expect(minus[n] == Rational(1), "q=-1 m" + std::to_string(n));
    }
    if (o.pass) o.note << "Gaussian, Catalan, Bernoulli to order 12";
}

void hankel(Outcome& o) {
    for (const Rational q : {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)}) {
        const auto v = hankel_psd(mu_q_moments(q, 12));
        o.expect(v.psd && v.method == "ldl", "q=" + q.to_string());
    }
    if (o.pass) o.note << "7x7 exact LDL at q=-1,-1/2,0,1/2,1";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "combinatorial counts", 5, counts},
        {2, "signed pairing sum identity", 10, corollary7},
        {3, "vacuum moments equal pairing sums", 30, theorem5},
        {4, "creation/annihilation adjointness", 10, theorem4},
        {5, "blocked Fock Gram positivity", 20, theorem3},
        {6, "symmetric-group Gram positivity", 20, theorem1},
        {7, "free convolution of dilated mu_q", 20, theorem6},
        {8, "mu_q from non-crossing inner/outer sums", 10, theorem7_combinatorial},
        {9, "mu_q density and atoms by quadrature", 20, theorem7_analytic},
        {10, "boundary distributions", 5, boundary},
        {11, "Hankel positivity of mu_q moments", 10, hankel},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.note << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.budget_s;
        const bool ok = o.pass && in_time;
        failed += ok ? 0 : 1;
        std::printf("[%s] criterion %2d: %s (%.2fs of %.0fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                    c.budget_s, o.note.str().empty() ? "" : " - ", o.note.str().c_str());
        if (!in_time) std::printf("       over time budget\n");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
