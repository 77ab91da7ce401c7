#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pairweave/qpoly.hpp"
#include "pairweave/rational.hpp"
#include "pairweave/sequence.hpp"

namespace pairweave {

/// How the atom mass of mu_q (q < -1/2) is computed.
///
/// `paper` uses max(1 - 2(1+q), 0) / (4|q|), the published constant, kept
/// for comparison. `derived` uses max(1 - 2(1+q), 0) / (2|q|), which is what total
/// mass 1 and m_2 = 1 require and which gives 1/2 per atom as q -> -1.
enum class AtomMode { paper, derived };

enum class MeasureKind { semicircle, gaussian, bernoulli, mu_q, mu_alpha_beta };

struct Atom {
    double location = 0.0;
    double mass = 0.0;
};

/// A symmetric probability measure: a density supported on [-radius, radius]
/// plus point masses outside the open support interval.
struct MeasureSpec {
    std::string name;
    double radius = 0.0;
    /// Density on the real line; zero outside [-radius, radius]. Empty for
    /// purely atomic measures.
    std::function<double(double)> density;
    /// When set, the density has square-root edges and this returns
    /// density(radius * sin(theta)) * radius * cos(theta), evaluated without
    /// cancellation, for theta in [-pi/2, pi/2].
    std::function<double(double)> angular_density;
    std::vector<Atom> atoms;
};

struct MeasureParams {
    /// q for mu_q; must lie in (-1, 0).
    Rational q{0};
    /// alpha and beta^2 for mu_alpha_beta; only alpha = 1 with
    /// 0 < beta^2 <= 1 has a density here (it coincides with mu_{beta^2 - 1}).
    Rational alpha{1};
    Rational beta2{1};
    AtomMode atom_mode = AtomMode::derived;
};

/// Throws std::domain_error for parameters outside the supported range.
MeasureSpec make_measure(MeasureKind kind, const MeasureParams& params = {});

double density_eval(const MeasureSpec& spec, double t);

struct QuadMoments {
    /// moments[n] for n = 0..order; moments[0] is the total mass.
    std::vector<double> moments;
    /// |I(npoints) - I(2 npoints)| per moment.
    std::vector<double> error_estimate;
};

/// Gauss-Legendre quadrature of t^n against the density, plus the atoms.
/// npoints must be at least 64.
QuadMoments quad_moments(const MeasureSpec& spec, int order, int npoints);

/// sum over non-crossing pairings of alpha^{2 #outer} (beta^2)^{#inner}.
MomentSeq<Rational> mu_ab_moments(const Rational& alpha, const Rational& beta2, int order);
/// Same sum with beta^2 a polynomial in q.
MomentSeq<QPoly> mu_ab_moments(const Rational& alpha, const QPoly& beta2, int order);

}  // namespace pairweave
