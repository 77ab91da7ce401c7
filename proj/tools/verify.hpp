#pragma once

#include <cstdint>
#include <optional>

#include "report.hpp"

namespace pairweave::cli {

/// Pairing counts, non-crossing counts and connected counts.
Report verify_counts(int rmax);
Report verify_corollary7(int rmax);
/// Symmetric-group Gram positivity for the connected-component weight and
/// its product with the crossing weight; raw negative q is explored only.
Report verify_theorem1(int rmax, int explore_rmax);
/// Blocked Fock Gram positivity on the grid 0, 1/4, ..., 1; the signed
/// regime is explored only.
Report verify_theorem3(int nmax, int index_count);
Report verify_theorem4(int trials, std::uint64_t seed);
Report verify_theorem5(int maxlen, int samples, std::uint64_t seed);
/// A single (q1, q2) pair when given, else the sign-matched grid plus the
/// iterated case. `iterate` adds an N-fold check with base q1 (or +-1).
Report verify_theorem6(const std::optional<Rational>& q1, const std::optional<Rational>& q2, int order,
                       std::optional<int> iterate);
Report verify_theorem7(int order, int quad_order, int npoints);
Report verify_boundary(int order);
Report verify_hankel(int order);

struct SuiteOptions {
    bool quick = true;
    std::uint64_t seed = 0;
};

/// Every verification at acceptance-level parameters (larger ones when not
/// quick). The combined report has one check per sub-report.
Report verify_all(const SuiteOptions& options, Json& sub_reports);

}  // namespace pairweave::cli
