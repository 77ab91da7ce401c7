#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace pairweave {

/// One pair (k, l) of a pairing, 1-based positions with k < l.
struct Chord {
    int k = 0;
    int l = 0;
    friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// A 2-partition of {1..n}: r = n/2 disjoint chords covering every point.
///
/// Chords are stored sorted by their left endpoint. The crossing count and
/// block count are computed once at construction.
class Pairing {
public:
    Pairing() = default;
    /// Validates the chords (disjoint, cover {1..2r}, k < l) and sorts them.
    /// Throws std::invalid_argument otherwise.
    explicit Pairing(std::vector<Chord> chords);

    const std::vector<Chord>& chords() const { return chords_; }
    int points() const { return static_cast<int>(2 * chords_.size()); }
    int size() const { return static_cast<int>(chords_.size()); }

    /// #I(V)
    int crossing_count() const { return crossings_; }
    /// #B(V)
    int block_count() const { return blocks_; }
    bool noncrossing() const { return crossings_ == 0; }

    /// #V - #B(V), the exponent of q in the connected-component weight.
    int excess() const { return size() - blocks_; }

    friend bool operator==(const Pairing& a, const Pairing& b) { return a.chords_ == b.chords_; }

private:
    std::vector<Chord> chords_;
    int crossings_ = 0;
    int blocks_ = 0;
};

/// Enumerates every pairing of {1..n} exactly once. The partner of the
/// smallest unpaired point is advanced in increasing order, so the sequence
/// is lexicographic in the chord list.
class PairingEnumerator {
public:
    /// n must be even and >= 2; throws std::invalid_argument otherwise.
    explicit PairingEnumerator(int n);

    std::optional<Pairing> next();

private:
    void fill_from(std::size_t level);

    int n_;
    bool started_ = false;
    bool done_ = false;
    // partner_[level] = chosen partner of the level-th left endpoint
    std::vector<int> left_;
    std::vector<int> partner_;
    std::vector<bool> used_;
};

void for_each_pairing(int n, const std::function<void(const Pairing&)>& fn);
std::vector<Pairing> all_pairings(int n);

/// Chord-index pairs (i, j), 0-based into chords(), with k_i < k_j < l_i < l_j.
std::vector<std::pair<int, int>> crossing_set(const Pairing& v);

struct BlockDecomposition {
    /// Each block is a list of chords in original positions, sorted; blocks
    /// are ordered by their leftmost point.
    std::vector<std::vector<Chord>> blocks;
    std::size_t size() const { return blocks.size(); }
};

/// Connected components of the crossing graph.
BlockDecomposition block_decompose(const Pairing& v);

bool is_noncrossing(const Pairing& v);

struct InnerOuter {
    int outer = 0;
    int inner = 0;
};

/// A chord is inner when another chord covers it. Throws
/// std::invalid_argument for crossing pairings.
InnerOuter inner_outer_counts(const Pairing& v);

/// Reverses the order of the points: (k, l) -> (n+1-l, n+1-k).
Pairing adjoint(const Pairing& v);

/// Restricts a sub-pairing given on arbitrary positions to its own ordered
/// point set, relabelled 1..2m.
Pairing normalize(const std::vector<Chord>& chords);

/// Permutation of {1..r} stored as its images (1-based).
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument if images is not a bijection on 1..r.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int r);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    /// (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;

    int inversion_count() const;

private:
    std::vector<int> images_;
};

std::vector<Permutation> all_permutations(int r);

/// V_pi = {(i, 2r+1-pi(i))}
Pairing perm_embed(const Permutation& pi);

/// b(pi) = {r-k | 1 <= k <= r-1, pi({1..k}) = {1..k}}, sorted ascending.
std::vector<int> b_set(const Permutation& pi);

/// Number of distinct Coxeter generators in a reduced word: (r-1) - #b(pi).
int coxeter_d(const Permutation& pi);

}  // namespace pairweave
