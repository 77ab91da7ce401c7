#include "pairweave/measures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gsl/gsl_integration.h>

#include "pairweave/pairings.hpp"

namespace pairweave {

namespace {

constexpr double kGaussianRadius = 12.0;

// Semicircle-type density (1/2pi) sqrt(R^2 - t^2) / (1 - a t^2) with R^2 = 4(1+q), a = |q|.
MeasureSpec kesten(std::string name, double r2, double a) {
    MeasureSpec spec;
    spec.name = std::move(name);
    spec.radius = std::sqrt(r2);
    spec.density = [r2, a](double t) {
        const double s = r2 - t * t;
        if (s <= 0.0) return 0.0;
        return std::sqrt(s) / (2.0 * std::numbers::pi * (1.0 - a * t * t));
    };
    spec.angular_density = [r2, a](double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return r2 * c * c / (2.0 * std::numbers::pi * (1.0 - a * r2 * s * s));
    };
    return spec;
}

MeasureSpec make_mu_q(const Rational& q, AtomMode mode) {
    if (!(q > Rational(-1) && q < Rational(0))) throw std::domain_error("mu_q needs -1 < q < 0");
    const double qd = q.to_double();
    const double a = -qd;
    MeasureSpec spec = kesten("mu_q(" + q.to_string() + ")", 4.0 * (1.0 + qd), a);
    // 1 - 2(1+q) = -1 - 2q, exact in rationals
    const Rational excess = Rational(-1) - Rational(2) * q;
    if (excess.sign() > 0) {
        const Rational divisor = (mode == AtomMode::derived ? Rational(2) : Rational(4)) * (-q);
        const double mass = (excess / divisor).to_double();
        const double loc = 1.0 / std::sqrt(a);
        spec.atoms = {{-loc, mass}, {loc, mass}};
    }
    return spec;
}

}  // namespace

MeasureSpec make_measure(MeasureKind kind, const MeasureParams& params) {
    switch (kind) {
        case MeasureKind::semicircle:
            return kesten("semicircle", 4.0, 0.0);
        case MeasureKind::gaussian: {
            MeasureSpec spec;
            spec.name = "gaussian";
            spec.radius = kGaussianRadius;
            spec.density = [](double t) {
                if (std::abs(t) > kGaussianRadius) return 0.0;
                return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi);
            };
            return spec;
        }
        case MeasureKind::bernoulli: {
            MeasureSpec spec;
            spec.name = "bernoulli";
            spec.radius = 0.0;
            spec.atoms = {{-1.0, 0.5}, {1.0, 0.5}};
            return spec;
        }
        case MeasureKind::mu_q:
            return make_mu_q(params.q, params.atom_mode);
        case MeasureKind::mu_alpha_beta: {
            if (params.alpha != Rational(1)) {
                throw std::domain_error("mu_alpha_beta has a density here only for alpha = 1; use mu_ab_moments");
            }
            if (!(params.beta2 > Rational(0) && params.beta2 <= Rational(1))) {
                throw std::domain_error("mu_alpha_beta needs 0 < beta^2 <= 1");
            }
            if (params.beta2 == Rational(1)) return make_measure(MeasureKind::semicircle);
            MeasureSpec spec = make_mu_q(params.beta2 - Rational(1), params.atom_mode);
            spec.name = "mu_alpha_beta(1," + params.beta2.to_string() + ")";
            return spec;
        }
    }
    throw std::domain_error("unknown measure kind");
}

double density_eval(const MeasureSpec& spec, double t) {
    if (!spec.density || std::abs(t) > spec.radius) return 0.0;
    return spec.density(t);
}

namespace {

std::vector<double> integrate(const MeasureSpec& spec, int order, int npoints) {
    std::vector<double> out(static_cast<std::size_t>(order) + 1, 0.0);
    if (spec.density && spec.radius > 0.0) {
        gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(npoints));
        if (table == nullptr) throw std::runtime_error("gsl_integration_glfixed_table_alloc failed");
        const bool angular = static_cast<bool>(spec.angular_density);
        const double lo = angular ? -std::numbers::pi / 2.0 : -spec.radius;
        const double hi = -lo;
        for (int i = 0; i < npoints; ++i) {
            double x = 0.0;
            double w = 0.0;
            gsl_integration_glfixed_point(lo, hi, static_cast<std::size_t>(i), &x, &w, table);
            const double t = angular ? spec.radius * std::sin(x) : x;
            const double f = w * (angular ? spec.angular_density(x) : spec.density(x));
            double power = 1.0;
            for (int n = 0; n <= order; ++n) {
                out[static_cast<std::size_t>(n)] += f * power;
                power *= t;
            }
        }
        gsl_integration_glfixed_table_free(table);
    }
    for (const auto& atom : spec.atoms) {
        double power = 1.0;
        for (int n = 0; n <= order; ++n) {
            out[static_cast<std::size_t>(n)] += atom.mass * power;
            power *= atom.location;
        }
    }
    return out;
}

}  // namespace

QuadMoments quad_moments(const MeasureSpec& spec, int order, int npoints) {
    if (npoints < 64) throw std::domain_error("quad_moments needs at least 64 nodes");
    if (order < 0) throw std::domain_error("quad_moments: negative order");
    QuadMoments out;
    out.moments = integrate(spec, order, npoints);
    const auto fine = integrate(spec, order, 2 * npoints);
    out.error_estimate.reserve(fine.size());
    for (std::size_t n = 0; n < fine.size(); ++n) out.error_estimate.push_back(std::abs(fine[n] - out.moments[n]));
    return out;
}

namespace {

template <typename Scalar>
MomentSeq<Scalar> nc_pairing_sum(const Rational& alpha, const Scalar& beta2, int order) {
    if (order < 0 || order > 16) throw std::domain_error("mu_ab_moments: order must lie in 0..16");
    const Rational alpha2 = alpha * alpha;
    std::vector<Scalar> m(static_cast<std::size_t>(order), Scalar(0));
    for (int n = 2; n <= order; n += 2) {
        Scalar sum(0);
        for_each_pairing(n, [&](const Pairing& v) {
            if (!v.noncrossing()) return;
            const auto io = inner_outer_counts(v);
            Scalar term(pow(alpha2, io.outer));
            for (int i = 0; i < io.inner; ++i) term = term * beta2;
            sum += term;
        });
        m[static_cast<std::size_t>(n - 1)] = std::move(sum);
    }
    return MomentSeq<Scalar>(std::move(m));
}

}  // namespace

MomentSeq<Rational> mu_ab_moments(const Rational& alpha, const Rational& beta2, int order) {
    return nc_pairing_sum(alpha, beta2, order);
}

MomentSeq<QPoly> mu_ab_moments(const Rational& alpha, const QPoly& beta2, int order) {
    return nc_pairing_sum(alpha, beta2, order);
}

}  // namespace pairweave
