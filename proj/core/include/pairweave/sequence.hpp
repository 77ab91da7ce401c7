#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairweave/qpoly.hpp"
#include "pairweave/rational.hpp"

namespace pairweave {

struct MomentTag {};
struct CumulantTag {};

/// A 1-indexed sequence x_1..x_N; the zeroth term is implicit.
template <typename Scalar, typename Tag>
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::vector<Scalar> terms) : terms_(std::move(terms)) {}

    std::size_t order() const { return terms_.size(); }
    const std::vector<Scalar>& terms() const { return terms_; }

    /// 1-based access, 1 <= n <= order().
    const Scalar& operator[](std::size_t n) const { return terms_.at(n - 1); }
    Scalar& operator[](std::size_t n) { return terms_.at(n - 1); }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<Scalar> terms_;
};

template <typename Scalar>
using MomentSeq = Sequence<Scalar, MomentTag>;
template <typename Scalar>
using CumulantSeq = Sequence<Scalar, CumulantTag>;

template <typename Tag>
Sequence<Rational, Tag> evaluate(const Sequence<QPoly, Tag>& s, const Rational& q) {
    std::vector<Rational> out;
    out.reserve(s.order());
    for (const auto& p : s.terms()) out.push_back(p.eval(q));
    return Sequence<Rational, Tag>(std::move(out));
}

template <typename Tag>
std::vector<std::string> to_strings(const Sequence<Rational, Tag>& s) {
    std::vector<std::string> out;
    out.reserve(s.order());
    for (const auto& x : s.terms()) out.push_back(x.to_string());
    return out;
}

template <typename Tag>
Sequence<Rational, Tag> sequence_from_strings(const std::vector<std::string>& terms) {
    std::vector<Rational> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back(Rational::parse(t));
    return Sequence<Rational, Tag>(std::move(out));
}

}  // namespace pairweave
