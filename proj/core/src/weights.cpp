#include "pairweave/weights.hpp"

#include <stdexcept>

namespace pairweave {

Weight Weight::tq(TqRegime regime) {
    Weight w;
    w.kind_ = Kind::tq;
    w.regime_ = regime;
    return w;
}

Weight Weight::that_mu() {
    Weight w;
    w.kind_ = Kind::that_mu;
    return w;
}

Weight Weight::that_mu(Rational mu) {
    Weight w;
    w.kind_ = Kind::that_mu;
    w.mu_ = std::move(mu);
    return w;
}

Weight Weight::tminus_one() {
    Weight w;
    w.kind_ = Kind::tminus_one;
    return w;
}

Weight Weight::product(std::vector<Weight> factors) {
    Weight w;
    w.kind_ = Kind::product;
    Variable var = Variable::none;
    for (auto& f : factors) {
        const Variable fv = f.variable();
        if (fv != Variable::none && var != Variable::none && fv != var) {
            throw std::invalid_argument("weight product mixes symbolic q and symbolic mu; fix mu first");
        }
        if (fv != Variable::none) var = fv;
        if (f.kind_ == Kind::product) {
            for (auto& g : f.factors_) w.factors_.push_back(std::move(g));
        } else {
            w.factors_.push_back(std::move(f));
        }
    }
    return w;
}

Weight::Variable Weight::variable() const {
    switch (kind_) {
        case Kind::tq:
            return Variable::q;
        case Kind::that_mu:
            return mu_ ? Variable::none : Variable::mu;
        case Kind::tminus_one:
            return Variable::none;
        case Kind::product:
            for (const auto& f : factors_) {
                if (f.variable() != Variable::none) return f.variable();
            }
            return Variable::none;
    }
    return Variable::none;
}

std::string Weight::describe() const {
    switch (kind_) {
        case Kind::tq:
            return regime_ == TqRegime::nonnegative ? "tq" : "tq(negative)";
        case Kind::that_mu:
            return mu_ ? "that_mu(" + mu_->to_string() + ")" : "that_mu";
        case Kind::tminus_one:
            return "tminus1";
        case Kind::product: {
            std::string s = "product(";
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                if (i) s += ",";
                s += factors_[i].describe();
            }
            return s + ")";
        }
    }
    return {};
}

QPoly eval_weight(const Weight& w, const Pairing& v) {
    switch (w.kind()) {
        case Weight::Kind::tq: {
            const auto e = static_cast<std::size_t>(v.excess());
            if (w.regime() == TqRegime::nonnegative) return QPoly::monomial(e);
            const bool odd = ((v.excess() + v.crossing_count()) & 1) != 0;
            return QPoly::monomial(e, Rational(odd ? -1 : 1));
        }
        case Weight::Kind::that_mu: {
            if (w.mu()) return QPoly(pow(*w.mu(), v.crossing_count()));
            return QPoly::monomial(static_cast<std::size_t>(v.crossing_count()));
        }
        case Weight::Kind::tminus_one:
            return QPoly((v.crossing_count() & 1) ? -1 : 1);
        case Weight::Kind::product: {
            QPoly acc(1);
            for (const auto& f : w.factors()) acc *= eval_weight(f, v);
            return acc;
        }
    }
    return {};
}

namespace {

// Interleaves an outer pairing on n-(l-k) points with an inner pairing on
// l-k points occupying {k+1..l}.
Pairing join(const Pairing& outer, const Pairing& inner, int k, int l) {
    const int width = l - k;
    auto lift = [&](int p) { return p <= k ? p : p + width; };
    std::vector<Chord> chords;
    for (const auto& c : outer.chords()) chords.push_back(Chord{lift(c.k), lift(c.l)});
    for (const auto& c : inner.chords()) chords.push_back(Chord{c.k + k, c.l + k});
    return Pairing(std::move(chords));
}

std::vector<Pairing> pairings_or_empty(int n) {
    if (n == 0) return {Pairing()};
    return all_pairings(n);
}

}  // namespace

MultiplicativityReport check_multiplicativity(const WeightFn& w, int nmax, SplitMode mode) {
    MultiplicativityReport report;
    for (int n = 4; n <= nmax; n += 2) {
        for (int k = 0; k < n; ++k) {
            for (int l = k + 2; l <= n; l += 2) {
                const int outer_points = n - (l - k);
                if (outer_points < 2 || outer_points % 2 != 0) continue;
                // weak splits: prefix/suffix only
                if (mode == SplitMode::weak && l != n) continue;
                const auto outers = pairings_or_empty(outer_points);
                const auto inners = pairings_or_empty(l - k);
                for (const auto& o : outers) {
                    const QPoly to = w(o);
                    for (const auto& i : inners) {
                        const Pairing joined = join(o, i, k, l);
                        QPoly lhs = w(joined);
                        QPoly rhs = to * w(i);
                        ++report.checks;
                        if (lhs != rhs) {
                            report.violations.push_back({n, k, l, o, i, std::move(lhs), std::move(rhs)});
                        }
                    }
                }
            }
        }
    }
    return report;
}

MultiplicativityReport check_multiplicativity(const Weight& w, int nmax, SplitMode mode) {
    return check_multiplicativity([&w](const Pairing& v) { return eval_weight(w, v); }, nmax, mode);
}

SignedSumIdentity verify_corollary7(int r) {
    if (r < 1) throw std::invalid_argument("verify_corollary7 needs r >= 1");
    SignedSumIdentity out;
    const QPoly one_minus_q = QPoly(1) - QPoly::q();
    for_each_pairing(2 * r, [&](const Pairing& v) {
        const Rational sign((v.crossing_count() & 1) ? -1 : 1);
        out.lhs += QPoly::monomial(static_cast<std::size_t>(v.excess()), sign);
        if (v.noncrossing()) out.rhs += pow(one_minus_q, static_cast<unsigned>(inner_outer_counts(v).inner));
    });
    out.equal = out.lhs == out.rhs;
    return out;
}

}  // namespace pairweave
