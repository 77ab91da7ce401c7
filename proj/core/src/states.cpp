#include "pairweave/states.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pairweave {

Word omega_word(const std::vector<int>& indices) {
    Word w;
    w.reserve(indices.size());
    for (int i : indices) w.push_back(Letter{i, false});
    return w;
}

Word reverse_starred(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) l.star = !l.star;
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

void Kernel::set(int i, int j, Rational value) {
    entries_[{i, j}] = value;
    entries_[{j, i}] = std::move(value);
}

Rational Kernel::operator()(int i, int j) const {
    if (auto it = entries_.find({i, j}); it != entries_.end()) return it->second;
    return Rational(i == j ? 1 : 0);
}

CovarianceQ::CovarianceQ(Rational cc, Rational c_cs, Rational cs_c, Rational cs_cs)
    : entries_{{std::move(cc), std::move(c_cs)}, {std::move(cs_c), std::move(cs_cs)}} {}

CovarianceQ CovarianceQ::fock() { return {0, 1, 0, 0}; }
CovarianceQ CovarianceQ::symmetric() { return {0, 1, 1, 0}; }
CovarianceQ CovarianceQ::omega() { return {1, 1, 1, 1}; }

Rational CovarianceQ::total() const { return entries_[0][0] + entries_[0][1] + entries_[1][0] + entries_[1][1]; }

CovarianceQ schur_q(const CovarianceQ& a, const CovarianceQ& b) {
    return {a(false, false) * b(false, false), a(false, true) * b(false, true), a(true, false) * b(true, false),
            a(true, true) * b(true, true)};
}

QPoly word_moment(const Word& w, const Kernel& k, const CovarianceQ& q, const Weight& t) {
    const std::size_t n = w.size();
    if (n == 0) return QPoly(1);
    if (n % 2 != 0) return {};

    QPoly total;
    std::vector<bool> used(n, false);
    std::vector<Chord> chords;
    chords.reserve(n / 2);

    // backtracking over pairings, pruning chords whose two-point factor is 0
    std::function<void(const Rational&)> recurse = [&](const Rational& factor) {
        const auto first = std::find(used.begin(), used.end(), false);
        if (first == used.end()) {
            total += eval_weight(t, Pairing(chords)) * factor;
            return;
        }
        const auto a = static_cast<std::size_t>(first - used.begin());
        used[a] = true;
        for (std::size_t b = a + 1; b < n; ++b) {
            if (used[b]) continue;
            Rational f = k(w[a].index, w[b].index) * q(w[a].star, w[b].star);
            if (f.is_zero()) continue;
            used[b] = true;
            chords.push_back(Chord{static_cast<int>(a) + 1, static_cast<int>(b) + 1});
            recurse(factor * f);
            chords.pop_back();
            used[b] = false;
        }
        used[a] = false;
    };
    recurse(Rational(1));
    return total;
}

MomentSeq<QPoly> selfadjoint_moments(const Weight& t, int order, const CovarianceQ& q) {
    if (order < 0) throw std::invalid_argument("selfadjoint_moments: negative order");
    std::vector<QPoly> m(static_cast<std::size_t>(order));
    const Rational per_chord = q.total();
    for (int n = 2; n <= order; n += 2) {
        QPoly sum;
        for_each_pairing(n, [&](const Pairing& v) { sum += eval_weight(t, v); });
        m[static_cast<std::size_t>(n - 1)] = sum * pow(per_chord, n / 2);
    }
    return MomentSeq<QPoly>(std::move(m));
}

bool GramReport::all_psd() const {
    return std::all_of(points.begin(), points.end(), [](const PointVerdict& p) { return p.verdict.psd; });
}

namespace {

std::vector<PointVerdict> verdicts_at(const PolyMatrix& gram, const std::vector<Rational>& points, PsdMethod method) {
    std::vector<PointVerdict> out;
    out.reserve(points.size());
    for (const auto& x : points) out.push_back({x, certify_psd(evaluate(gram, x), method)});
    return out;
}

}  // namespace

GramReport word_gram_psd(const std::vector<Word>& words, const Kernel& k, const CovarianceQ& q, const Weight& t,
                         const std::vector<Rational>& points, PsdMethod method) {
    GramReport report;
    report.gram = PolyMatrix(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i; j < words.size(); ++j) {
            QPoly g = word_moment(concat(words[i], reverse_starred(words[j])), k, q, t);
            report.gram(j, i) = g;
            report.gram(i, j) = std::move(g);
        }
    }
    report.points = verdicts_at(report.gram, points, method);
    return report;
}

std::vector<Word> all_omega_words(int maxlen, int index_count) {
    std::vector<Word> out;
    std::vector<int> idx;
    for (int len = 0; len <= maxlen; ++len) {
        idx.assign(static_cast<std::size_t>(len), 1);
        while (true) {
            out.push_back(omega_word(idx));
            int pos = len - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == index_count) {
                idx[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
        }
    }
    return out;
}

GramReport symgroup_gram_psd(const Weight& t, int r, const std::vector<Rational>& points, PsdMethod method) {
    if (r < 1) throw std::invalid_argument("symgroup_gram_psd needs r >= 1");
    const auto perms = all_permutations(r);
    GramReport report;
    report.gram = PolyMatrix(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) {
        const Permutation sigma_inv = perms[i].inverse();
        for (std::size_t j = 0; j < perms.size(); ++j) {
            report.gram(i, j) = eval_weight(t, perm_embed(sigma_inv * perms[j]));
        }
    }
    report.points = verdicts_at(report.gram, points, method);
    return report;
}

RationalMatrix hankel_matrix(const MomentSeq<Rational>& m) {
    const std::size_t half = m.order() / 2;
    RationalMatrix h(half + 1);
    for (std::size_t i = 0; i <= half; ++i) {
        for (std::size_t j = 0; j <= half; ++j) h(i, j) = (i + j == 0) ? Rational(1) : m[i + j];
    }
    return h;
}

PsdVerdict hankel_psd(const MomentSeq<Rational>& m) { return ldl_psd(hankel_matrix(m)); }

}  // namespace pairweave
