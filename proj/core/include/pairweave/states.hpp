#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pairweave/pairings.hpp"
#include "pairweave/psd.hpp"
#include "pairweave/qpoly.hpp"
#include "pairweave/sequence.hpp"
#include "pairweave/weights.hpp"

namespace pairweave {

/// One factor of a product: a creation (star) or annihilation operator, or a
/// field omega_i when stars are ignored by the covariance.
struct Letter {
    int index = 1;
    bool star = false;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Word of self-adjoint fields omega_{i_1} ... omega_{i_n}.
Word omega_word(const std::vector<int>& indices);

/// The adjoint word: letters reversed, every star flipped.
Word reverse_starred(const Word& w);

Word concat(const Word& a, const Word& b);

/// Symmetric table of <conj(f_i), f_j> for generator indices. Entries not
/// set explicitly follow the identity (orthonormal self-conjugate basis).
class Kernel {
public:
    static Kernel identity() { return Kernel(); }

    void set(int i, int j, Rational value);
    Rational operator()(int i, int j) const;

private:
    std::map<std::pair<int, int>, Rational> entries_;
};

/// 2x2 table Q(left star?, right star?) of two-point functions.
class CovarianceQ {
public:
    CovarianceQ(Rational cc, Rational c_cs, Rational cs_c, Rational cs_cs);

    /// Vacuum state: only an annihilator left of a creator survives.
    static CovarianceQ fock();
    static CovarianceQ symmetric();
    /// All ones: the star flag is irrelevant (omega fields).
    static CovarianceQ omega();

    const Rational& operator()(bool left_star, bool right_star) const {
        return entries_[left_star ? 1 : 0][right_star ? 1 : 0];
    }
    Rational total() const;

    friend bool operator==(const CovarianceQ&, const CovarianceQ&) = default;

private:
    Rational entries_[2][2];
};

/// Entrywise product.
CovarianceQ schur_q(const CovarianceQ& a, const CovarianceQ& b);

/// Pairing-prescription moment: the sum over pairings V of the word's
/// positions of prod kernel * Q over chords, times t(V). Odd words give 0.
QPoly word_moment(const Word& w, const Kernel& k, const CovarianceQ& q, const Weight& t);

/// Moments of x = c + c* (or omega) for a single generator: every star
/// labelling of a pairing contributes, so m_2r = (sum of Q)^r * sum_V t(V).
MomentSeq<QPoly> selfadjoint_moments(const Weight& t, int order, const CovarianceQ& q = CovarianceQ::fock());

struct PointVerdict {
    Rational point;
    PsdVerdict verdict;
};

struct GramReport {
    PolyMatrix gram;
    std::vector<PointVerdict> points;
    bool all_psd() const;
};

/// Gram matrix G_ij = moment(w_i * reverse_starred(w_j)) with a PSD verdict
/// at each evaluation point of the weight's variable.
GramReport word_gram_psd(const std::vector<Word>& words, const Kernel& k, const CovarianceQ& q, const Weight& t,
                         const std::vector<Rational>& points, PsdMethod method = PsdMethod::automatic);

/// All words of length 0..maxlen over indices 1..index_count, shortest first
/// then lexicographic.
std::vector<Word> all_omega_words(int maxlen, int index_count);

/// The r! x r! matrix [t(V_{sigma^-1 pi})] over the symmetric group, with
/// permutations in lexicographic order.
GramReport symgroup_gram_psd(const Weight& t, int r, const std::vector<Rational>& points,
                             PsdMethod method = PsdMethod::automatic);

/// Hankel matrix H_ij = m_{i+j}, 0 <= i, j <= order/2, with m_0 = 1.
RationalMatrix hankel_matrix(const MomentSeq<Rational>& m);
PsdVerdict hankel_psd(const MomentSeq<Rational>& m);

}  // namespace pairweave
