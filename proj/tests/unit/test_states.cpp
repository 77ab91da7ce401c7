#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "pairweave/states.hpp"

using namespace pairweave;

namespace {

constexpr bool kStar = true;

QPoly poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(std::move(v));
}

Word letters(std::initializer_list<std::pair<int, bool>> ls) {
    Word w;
    for (auto [i, s] : ls) w.push_back({i, s});
    return w;
}

}  // namespace

TEST(WordMoment, FockExamples) {
    const auto fock = CovarianceQ::fock();
    const auto k = Kernel::identity();
    const Weight t = Weight::tq();
    EXPECT_EQ(word_moment(letters({{1, false}, {1, kStar}}), k, fock, t), QPoly(1));
    EXPECT_EQ(word_moment(letters({{1, false}, {1, false}, {1, kStar}, {1, kStar}}), k, fock, t), poly({1, 1}));
    EXPECT_EQ(word_moment(letters({{1, kStar}, {1, false}}), k, fock, t), QPoly());
}

TEST(WordMoment, OmegaExample) {
    EXPECT_EQ(word_moment(omega_word({1, 2, 1, 2}), Kernel::identity(), CovarianceQ::omega(), Weight::tq()),
              QPoly::q());
}

TEST(WordMoment, OddWordsVanish) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int len = 2 * pwtest::uniform_int(rng, 0, 4) + 1;
        ASSERT_TRUE(word_moment(pwtest::random_word(rng, len, 2), Kernel::identity(), CovarianceQ::omega(),
                                Weight::tq())
                        .is_zero());
    }
}

TEST(WordMoment, EmptyWordIsOne) {
    EXPECT_EQ(word_moment({}, Kernel::identity(), CovarianceQ::fock(), Weight::tq()), QPoly(1));
}

TEST(WordMoment, KernelEntriesEnter) {
    Kernel k;
    k.set(1, 2, Rational(1, 3));
    EXPECT_EQ(k(2, 1), Rational(1, 3));
    EXPECT_EQ(k(1, 1), Rational(1));
    EXPECT_EQ(k(1, 3), Rational(0));
    // omega_1 omega_2: one pairing, kernel 1/3
    EXPECT_EQ(word_moment(omega_word({1, 2}), k, CovarianceQ::omega(), Weight::tq()), QPoly(Rational(1, 3)));
}

TEST(WordMoment, EachIndexTwiceSelectsOnePairing) {
    for (int n = 2; n <= 8; n += 2) {
        for_each_pairing(n, [&](const Pairing& v) {
            std::vector<int> idx(static_cast<std::size_t>(n));
            int label = 1;
            for (const auto& c : v.chords()) {
                idx[static_cast<std::size_t>(c.k - 1)] = label;
                idx[static_cast<std::size_t>(c.l - 1)] = label;
                ++label;
            }
            for (const auto& t : {Weight::tq(), Weight::that_mu(), Weight::tq(TqRegime::negative)}) {
                ASSERT_EQ(word_moment(omega_word(idx), Kernel::identity(), CovarianceQ::omega(), t), eval_weight(t, v));
            }
        });
    }
}

TEST(WordMoment, PyramidalFactorization) {
    // u = u1 u2 over {1,2}, v over {3,4}; moment(u1 v u2) = moment(u) moment(v)
    const auto k = Kernel::identity();
    const auto omega = CovarianceQ::omega();
    const Weight t = Weight::tq();
    auto words = [](int len, int base) {
        std::vector<std::vector<int>> out;
        std::vector<int> w(static_cast<std::size_t>(len), base);
        for (int code = 0; code < (1 << len); ++code) {
            for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(i)] = base + ((code >> i) & 1);
            out.push_back(w);
        }
        return out;
    };
    long checks = 0;
    for (int lu = 0; lu <= 6; lu += 2) {
        for (int lv = 2; lu + lv <= 8; lv += 2) {
            for (const auto& u : words(lu, 1)) {
                for (const auto& v : words(lv, 3)) {
                    for (int cut = 0; cut <= lu; ++cut) {
                        std::vector<int> joined(u.begin(), u.begin() + cut);
                        joined.insert(joined.end(), v.begin(), v.end());
                        joined.insert(joined.end(), u.begin() + cut, u.end());
                        ASSERT_EQ(word_moment(omega_word(joined), k, omega, t),
                                  word_moment(omega_word(u), k, omega, t) * word_moment(omega_word(v), k, omega, t));
                        ++checks;
                    }
                }
            }
        }
    }
    EXPECT_GT(checks, 1000);
}

TEST(SelfadjointMoments, Tq) {
    const auto m = selfadjoint_moments(Weight::tq(), 8);
    EXPECT_EQ(m[1], QPoly());
    EXPECT_EQ(m[2], QPoly(1));
    EXPECT_EQ(m[4], poly({2, 1}));
    EXPECT_EQ(m[6], poly({5, 6, 4}));
    EXPECT_EQ(m[8], poly({14, 28, 36, 27}));
}

TEST(SelfadjointMoments, Boundaries) {
    const auto m = selfadjoint_moments(Weight::tq(), 12);
    for (int r = 1; r <= 6; ++r) {
        EXPECT_EQ(m[static_cast<std::size_t>(2 * r)].eval(0), Rational(pwtest::catalan(r)));
        EXPECT_EQ(m[static_cast<std::size_t>(2 * r)].eval(1), Rational(pwtest::double_factorial_odd(r)));
    }
}

TEST(SelfadjointMoments, MatchesWordExpansion) {
    // (c + c*)^n expanded into 2^n words
    const auto m = selfadjoint_moments(Weight::tq(), 6);
    for (int n = 2; n <= 6; n += 2) {
        QPoly sum;
        for (int code = 0; code < (1 << n); ++code) {
            Word w;
            for (int i = 0; i < n; ++i) w.push_back({1, ((code >> i) & 1) != 0});
            sum += word_moment(w, Kernel::identity(), CovarianceQ::fock(), Weight::tq());
        }
        EXPECT_EQ(sum, m[static_cast<std::size_t>(n)]);
    }
}

TEST(SchurQ, Examples) {
    const auto fock = CovarianceQ::fock();
    const auto sym = CovarianceQ::symmetric();
    EXPECT_EQ(schur_q(fock, fock), fock);
    EXPECT_EQ(schur_q(CovarianceQ::omega(), sym), sym);
    EXPECT_EQ(schur_q(fock, sym), fock);
    const CovarianceQ odd(Rational(1, 2), 2, 3, Rational(-1, 5));
    EXPECT_EQ(schur_q(CovarianceQ::omega(), odd), odd);
}

TEST(WordGram, Orthonormal) {
    const auto r = word_gram_psd({omega_word({1}), omega_word({2})}, Kernel::identity(), CovarianceQ::omega(),
                                 Weight::tq(), {0, Rational(1, 2), 1});
    EXPECT_EQ(r.gram(0, 0), QPoly(1));
    EXPECT_EQ(r.gram(0, 1), QPoly());
    EXPECT_TRUE(r.all_psd());
}

TEST(WordGram, EmptyAndSquare) {
    const auto r = word_gram_psd({Word{}, omega_word({1, 1})}, Kernel::identity(), CovarianceQ::omega(), Weight::tq(),
                                 {0, Rational(1, 2), 1});
    EXPECT_EQ(r.gram(0, 0), QPoly(1));
    EXPECT_EQ(r.gram(0, 1), QPoly(1));
    EXPECT_EQ(r.gram(1, 1), poly({2, 1}));
    EXPECT_EQ(evaluate(r.gram, 0)(1, 1), Rational(2));
    EXPECT_TRUE(r.all_psd());
}

TEST(WordGram, ShortWordsTwoIndices) {
    const auto words = all_omega_words(2, 2);
    EXPECT_EQ(words.size(), 7U);
    const auto r = word_gram_psd(words, Kernel::identity(), CovarianceQ::omega(), Weight::tq(), {0, Rational(1, 2), 1});
    EXPECT_TRUE(r.gram.symmetric());
    EXPECT_TRUE(r.all_psd());
    for (const auto& p : r.points) {
        const auto g = evaluate(r.gram, p.point);
        for (std::size_t i = 0; i < g.dim(); ++i) EXPECT_GE(g(i, i), Rational(0));
    }
}

TEST(WordGram, LongerWordsStayPsd) {
    const auto r = word_gram_psd(all_omega_words(3, 2), Kernel::identity(), CovarianceQ::omega(), Weight::tq(),
                                 {0, Rational(1, 4), Rational(3, 4), 1});
    EXPECT_TRUE(r.all_psd());
}

TEST(SymgroupGram, SmallCases) {
    const auto r1 = symgroup_gram_psd(Weight::tq(), 1, {Rational(1, 2)});
    EXPECT_EQ(r1.gram.dim(), 1U);
    EXPECT_EQ(r1.gram(0, 0), QPoly(1));
    EXPECT_TRUE(r1.all_psd());
    const auto r3 = symgroup_gram_psd(Weight::tq(), 3, {Rational(1, 2)});
    EXPECT_EQ(r3.gram.dim(), 6U);
    EXPECT_TRUE(r3.gram.symmetric());
    EXPECT_TRUE(r3.all_psd());
}

TEST(SymgroupGram, EntriesAreDistinctGeneratorPowers) {
    const auto perms = all_permutations(3);
    const auto r = symgroup_gram_psd(Weight::tq(), 3, {});
    for (std::size_t i = 0; i < perms.size(); ++i) {
        for (std::size_t j = 0; j < perms.size(); ++j) {
            const Permutation p = perms[i].inverse() * perms[j];
            ASSERT_EQ(r.gram(i, j), QPoly::monomial(static_cast<std::size_t>(coxeter_d(p))));
        }
    }
}

TEST(SymgroupGram, RawTqAtNegativeQIsReportedNotAsserted) {
    // q^{d(pi)} at q = -1/2: record whether any r <= 5 breaks positivity
    std::optional<int> smallest;
    for (int r = 1; r <= 5 && !smallest; ++r) {
        if (!symgroup_gram_psd(Weight::tq(), r, {Rational(-1, 2)}).all_psd()) smallest = r;
    }
    RecordProperty("smallest_failing_r", smallest ? std::to_string(*smallest) : "none up to 5");
    SUCCEED();
}

TEST(SymgroupGram, TwistedNegativeRegimePsd) {
    for (int r = 1; r <= 4; ++r) {
        EXPECT_TRUE(symgroup_gram_psd(Weight::tq(TqRegime::negative), r, {Rational(-1, 2), -1, 0}).all_psd());
    }
}

TEST(Hankel, Examples) {
    EXPECT_TRUE(hankel_psd(MomentSeq<Rational>(std::vector<Rational>(6, 0))).psd);
    const auto m = evaluate(selfadjoint_moments(Weight::tq(), 12), Rational(1, 2));
    EXPECT_TRUE(hankel_psd(m).psd);
    EXPECT_FALSE(hankel_psd(MomentSeq<Rational>({0, 1, 0, Rational(1, 2)})).psd);
    EXPECT_TRUE(hankel_psd(MomentSeq<Rational>({0, 1, 0, 3})).psd);
    const auto h = hankel_matrix(MomentSeq<Rational>({0, 1, 0, 3}));
    EXPECT_EQ(h.dim(), 3U);
    EXPECT_EQ(h(0, 0), Rational(1));
    EXPECT_EQ(h(2, 2), Rational(3));
}
