#include "pairweave/pairings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pairweave {

namespace {

bool crosses(const Chord& a, const Chord& b) { return a.k < b.k && b.k < a.l && a.l < b.l; }

bool cross_either(const Chord& a, const Chord& b) { return crosses(a, b) || crosses(b, a); }

class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

Pairing::Pairing(std::vector<Chord> chords) : chords_(std::move(chords)) {
    std::sort(chords_.begin(), chords_.end());
    const int n = points();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& c : chords_) {
        if (c.k >= c.l || c.k < 1 || c.l > n || seen[c.k] || seen[c.l]) {
            throw std::invalid_argument("invalid pairing chord (" + std::to_string(c.k) + "," +
                                        std::to_string(c.l) + ") on " + std::to_string(n) + " points");
        }
        seen[c.k] = seen[c.l] = true;
    }

    const std::size_t r = chords_.size();
    DisjointSet components(r);
    blocks_ = static_cast<int>(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            // chords are sorted by k, so only i-before-j crossings are possible
            if (crosses(chords_[i], chords_[j])) {
                ++crossings_;
                if (components.unite(i, j)) --blocks_;
            }
        }
    }
}

PairingEnumerator::PairingEnumerator(int n) : n_(n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("pairings need an even positive point count, got " + std::to_string(n));
    }
    const auto r = static_cast<std::size_t>(n / 2);
    left_.assign(r, 0);
    partner_.assign(r, 0);
    used_.assign(static_cast<std::size_t>(n) + 1, false);
}

void PairingEnumerator::fill_from(std::size_t level) {
    int cursor = 1;
    for (std::size_t lv = level; lv < left_.size(); ++lv) {
        while (used_[cursor]) ++cursor;
        left_[lv] = cursor;
        used_[cursor] = true;
        int p = cursor + 1;
        while (used_[p]) ++p;
        partner_[lv] = p;
        used_[p] = true;
    }
}

std::optional<Pairing> PairingEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        fill_from(0);
    } else {
        bool advanced = false;
        for (std::size_t lv = left_.size(); lv-- > 0;) {
            used_[left_[lv]] = false;
            used_[partner_[lv]] = false;
            int p = partner_[lv] + 1;
            while (p <= n_ && used_[p]) ++p;
            if (p <= n_) {
                used_[left_[lv]] = true;
                used_[p] = true;
                partner_[lv] = p;
                fill_from(lv + 1);
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            done_ = true;
            return std::nullopt;
        }
    }
    std::vector<Chord> chords(left_.size());
    for (std::size_t lv = 0; lv < left_.size(); ++lv) chords[lv] = Chord{left_[lv], partner_[lv]};
    return Pairing(std::move(chords));
}

void for_each_pairing(int n, const std::function<void(const Pairing&)>& fn) {
    PairingEnumerator e(n);
    while (auto v = e.next()) fn(*v);
}

std::vector<Pairing> all_pairings(int n) {
    std::vector<Pairing> out;
    for_each_pairing(n, [&](const Pairing& v) { out.push_back(v); });
    return out;
}

std::vector<std::pair<int, int>> crossing_set(const Pairing& v) {
    std::vector<std::pair<int, int>> out;
    const auto& c = v.chords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (crosses(c[i], c[j])) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

BlockDecomposition block_decompose(const Pairing& v) {
    const auto& c = v.chords();
    DisjointSet components(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            if (cross_either(c[i], c[j])) components.unite(i, j);
        }
    }
    // roots are the smallest chord index, and chords are sorted by k, so
    // walking in order yields blocks ordered by leftmost point
    BlockDecomposition out;
    std::vector<int> slot(c.size(), -1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::size_t root = components.find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(out.blocks.size());
            out.blocks.emplace_back();
        }
        out.blocks[static_cast<std::size_t>(slot[root])].push_back(c[i]);
    }
    return out;
}

bool is_noncrossing(const Pairing& v) { return v.noncrossing(); }

InnerOuter inner_outer_counts(const Pairing& v) {
    if (!v.noncrossing()) throw std::invalid_argument("inner/outer classification needs a non-crossing pairing");
    InnerOuter out;
    const auto& c = v.chords();
    for (const auto& a : c) {
        const bool covered =
            std::any_of(c.begin(), c.end(), [&](const Chord& b) { return b.k < a.k && a.l < b.l; });
        ++(covered ? out.inner : out.outer);
    }
    return out;
}

Pairing adjoint(const Pairing& v) {
    const int m = v.points() + 1;
    std::vector<Chord> out;
    out.reserve(v.chords().size());
    for (const auto& c : v.chords()) out.push_back(Chord{m - c.l, m - c.k});
    return Pairing(std::move(out));
}

Pairing normalize(const std::vector<Chord>& chords) {
    std::vector<int> pts;
    pts.reserve(chords.size() * 2);
    for (const auto& c : chords) {
        pts.push_back(c.k);
        pts.push_back(c.l);
    }
    std::sort(pts.begin(), pts.end());
    auto rank = [&](int p) {
        return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin()) + 1;
    };
    std::vector<Chord> out;
    out.reserve(chords.size());
    for (const auto& c : chords) out.push_back(Chord{rank(c.k), rank(c.l)});
    return Pairing(std::move(out));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
        if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)]) {
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int r) {
    std::vector<int> v(static_cast<std::size_t>(r));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> out(b.images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a(b.images_[i]);
    return Permutation(std::move(out));
}

int Permutation::inversion_count() const {
    int count = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        for (std::size_t j = i + 1; j < images_.size(); ++j) count += images_[i] > images_[j] ? 1 : 0;
    }
    return count;
}

std::vector<Permutation> all_permutations(int r) {
    std::vector<int> v(static_cast<std::size_t>(r));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Pairing perm_embed(const Permutation& pi) {
    const int r = pi.size();
    std::vector<Chord> chords;
    chords.reserve(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i) chords.push_back(Chord{i, 2 * r + 1 - pi(i)});
    return Pairing(std::move(chords));
}

std::vector<int> b_set(const Permutation& pi) {
    const int r = pi.size();
    std::vector<int> out;
    // prefix {1..k} is stable iff max(pi(1..k)) == k
    int running_max = 0;
    for (int k = 1; k <= r - 1; ++k) {
        running_max = std::max(running_max, pi(k));
        if (running_max == k) out.push_back(r - k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int coxeter_d(const Permutation& pi) {
    if (pi.size() == 0) return 0;
    return (pi.size() - 1) - static_cast<int>(b_set(pi).size());
}

}  // namespace pairweave
