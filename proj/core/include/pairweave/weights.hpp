#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pairweave/pairings.hpp"
#include "pairweave/qpoly.hpp"

namespace pairweave {

/// Which branch of the connected-component weight is meant.
///
/// `nonnegative` is q^{#V-#B(V)} for 0 <= q <= 1. `negative` is the twisted
/// weight t_{-q} * t_{-1} for -1 <= q <= 0, written as a polynomial in q so
/// that evaluating it at a negative rational gives |q|^{#V-#B(V)} (-1)^{#I(V)}.
enum class TqRegime { nonnegative, negative };

/// A weight function on pairings. Evaluates to a polynomial in a single
/// indeterminate: q for the connected-component weight, mu for the crossing
/// weight when mu is left symbolic.
class Weight {
public:
    enum class Kind { tq, that_mu, tminus_one, product };
    enum class Variable { none, q, mu };

    /// q^{#V-#B(V)} (or its negative-regime twist).
    static Weight tq(TqRegime regime = TqRegime::nonnegative);
    /// mu^{#I(V)} with mu symbolic.
    static Weight that_mu();
    /// mu^{#I(V)} at a fixed rational mu (a constant polynomial).
    static Weight that_mu(Rational mu);
    /// (-1)^{#I(V)}
    static Weight tminus_one();
    /// Pointwise product. Nested products are flattened. Throws
    /// std::invalid_argument when factors are symbolic in different variables.
    static Weight product(std::vector<Weight> factors);

    Kind kind() const { return kind_; }
    TqRegime regime() const { return regime_; }
    const std::optional<Rational>& mu() const { return mu_; }
    const std::vector<Weight>& factors() const { return factors_; }

    /// The indeterminate of eval_weight's result.
    Variable variable() const;

    std::string describe() const;

private:
    Weight() = default;

    Kind kind_ = Kind::tq;
    TqRegime regime_ = TqRegime::nonnegative;
    std::optional<Rational> mu_;
    std::vector<Weight> factors_;
};

QPoly eval_weight(const Weight& w, const Pairing& v);

using WeightFn = std::function<QPoly(const Pairing&)>;

enum class SplitMode { weak, strong };

struct MultiplicativityViolation {
    int n = 0;
    /// The split interval is {k+1..l}; its complement is the other part.
    int k = 0;
    int l = 0;
    Pairing outer;
    Pairing inner;
    QPoly joined;
    QPoly product;
};

struct MultiplicativityReport {
    long checks = 0;
    std::vector<MultiplicativityViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Exhaustive check of t(V1 u V2) = t(V1) t(V2) over all splits with up to
/// nmax points. Weak mode splits {1..n} into a prefix and a suffix; strong
/// mode additionally allows any inner interval {k+1..l} with the remaining
/// points as the outer part.
MultiplicativityReport check_multiplicativity(const WeightFn& w, int nmax, SplitMode mode);
MultiplicativityReport check_multiplicativity(const Weight& w, int nmax, SplitMode mode);

struct SignedSumIdentity {
    QPoly lhs;
    QPoly rhs;
    bool equal = false;
};

/// Both sides of
///   sum over all pairings of 2r points of q^{#V-#B(V)} (-1)^{#I(V)}
///   = sum over non-crossing pairings of (1-q)^{#inner chords}.
SignedSumIdentity verify_corollary7(int r);

}  // namespace pairweave
