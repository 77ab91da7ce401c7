#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "pairweave/fock.hpp"
#include "pairweave/freeprob.hpp"
#include "pairweave/measures.hpp"
#include "pairweave/pairings.hpp"
#include "pairweave/states.hpp"
#include "pairweave/weights.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace pairweave::cli {

namespace {

constexpr std::size_t kMatrixEmbedLimit = 16;
constexpr std::size_t kGramDimensionLimit = 2048;

/// Malformed input that CLI11 cannot see (rational strings, JSON files).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text, const char* what) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(what) + ": expected a rational p/q, got '" + text + "'");
    }
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::domain_error(message);
}

PsdMethod parse_method(const std::string& m) {
    if (m == "exact") return PsdMethod::exact;
    if (m == "eigen") return PsdMethod::eigen;
    return PsdMethod::automatic;
}

AtomMode parse_atom_mode(const std::string& m) { return m == "paper" ? AtomMode::paper : AtomMode::derived; }

/// Measure with a closed-form description at this q, if any.
MeasureSpec measure_for_q(const Rational& q, AtomMode mode) {
    if (q == Rational(0)) return make_measure(MeasureKind::semicircle);
    if (q == Rational(1)) return make_measure(MeasureKind::gaussian);
    if (q == Rational(-1)) return make_measure(MeasureKind::bernoulli);
    require(q > Rational(-1) && q < Rational(0), "no closed-form density for q=" + q.to_string() +
                                                     "; densities exist for q in [-1, 0] and q = 1");
    MeasureParams p;
    p.q = q;
    p.atom_mode = mode;
    return make_measure(MeasureKind::mu_q, p);
}

Json pairing_json(const Pairing& v) {
    Json pairs = Json::array();
    for (const auto& c : v.chords()) pairs.push_back(Json::array({c.k, c.l}));
    return pairs;
}

Json pairing_stats(const Pairing& v) {
    Json o;
    o["pairs"] = pairing_json(v);
    o["crossings"] = v.crossing_count();
    o["blocks"] = v.block_count();
    o["noncrossing"] = v.noncrossing();
    if (v.noncrossing()) {
        const auto io = inner_outer_counts(v);
        o["inner"] = io.inner;
        o["outer"] = io.outer;
    } else {
        o["inner"] = nullptr;
        o["outer"] = nullptr;
    }
    return o;
}

Json matrix_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

void add_gram_point(Report& report, const GramReport& g) {
    for (const auto& pv : g.points) {
        Json verdict;
        verdict["psd"] = pv.verdict.psd;
        verdict["method"] = pv.verdict.method;
        verdict["rank"] = pv.verdict.rank;
        verdict["failing_index"] = pv.verdict.failing_index ? Json(*pv.verdict.failing_index) : Json(nullptr);
        if (pv.verdict.min_eigenvalue) verdict["min_eigenvalue"] = *pv.verdict.min_eigenvalue;
        report.check("psd q=" + pv.point.to_string(), true, pv.verdict.psd, pv.verdict.psd);
        report.details["dimension"] = g.gram.dim();
        report.details["verdict"] = std::move(verdict);
        if (g.gram.dim() <= kMatrixEmbedLimit) {
            report.details["matrix"] = matrix_json(evaluate(g.gram, pv.point));
            Json symbolic = Json::array();
            for (std::size_t i = 0; i < g.gram.dim(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < g.gram.dim(); ++j) row.push_back(g.gram(i, j).to_strings());
                symbolic.push_back(std::move(row));
            }
            report.details["matrix_polynomial"] = std::move(symbolic);
        }
    }
}

MomentSeq<Rational> read_moments(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
    if (!j.is_array()) throw UsageError(path + ": expected a JSON array of rational strings");
    std::vector<Rational> terms;
    for (const auto& x : j) {
        if (x.is_string()) {
            terms.push_back(parse_rational(x.get<std::string>(), path.c_str()));
        } else if (x.is_number_integer()) {
            terms.emplace_back(x.get<long>());
        } else {
            throw UsageError(path + ": entries must be rational strings");
        }
    }
    return MomentSeq<Rational>(std::move(terms));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact pairing-weight calculus: moments, positivity certificates and identity checks.\n"
                 "Reports are JSON with \"schema\": \"pairweave/1\"; moments and density emit CSV.",
                 "pairweave"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    std::string out_target = "-";
    bool timing = false;
    app.add_option("--seed", seed, "Seed for every pseudo-random choice")->capture_default_str();
    app.add_option("--out", out_target,
                   "Output: a file path, or one of csv|json|- for standard output in that format");
    app.add_flag("--timing", timing, "Add elapsed_ms to JSON reports (makes output time-dependent)");

    // pairings
    auto* pairings = app.add_subcommand("pairings", "Enumerate or inspect pairings");
    pairings->require_subcommand(1);
    auto* p_enum = pairings->add_subcommand("enum", "One JSON object per line for every pairing of n points");
    int p_n = 0;
    bool p_stats = false;
    p_enum->add_option("--n", p_n, "Number of points (even, 2..16)")->required();
    p_enum->add_flag("--stats", p_stats, "Add crossings, blocks, noncrossing, inner, outer");
    auto* p_show = pairings->add_subcommand("show", "Statistics and weights of one pairing");
    std::string p_pairs;
    p_show->add_option("--pairs", p_pairs, "JSON array of [k,l] pairs, e.g. [[1,3],[2,4]]")->required();

    // moments
    auto* moments = app.add_subcommand(
        "moments", "CSV columns: order,moment (pairing) or order,moment,error_estimate (quadrature); rows 0..N");
    std::string m_weight = "tq";
    std::string m_q;
    int m_order = 12;
    std::string m_method = "pairing";
    std::string m_atom = "derived";
    int m_npoints = 256;
    std::string m_alpha = "1";
    std::string m_beta2 = "1";
    moments->add_option("--weight", m_weight, "tq | mu_ab")->check(CLI::IsMember({"tq", "mu_ab"}))->capture_default_str();
    moments->add_option("--q", m_q, "Rational q in [-1, 1] (tq)");
    moments->add_option("--order", m_order, "Highest moment (<= 16)")->capture_default_str();
    moments->add_option("--method", m_method, "pairing | quadrature")
        ->check(CLI::IsMember({"pairing", "quadrature"}))
        ->capture_default_str();
    moments->add_option("--atom-mode", m_atom, "paper | derived")->check(CLI::IsMember({"paper", "derived"}));
    moments->add_option("--npoints", m_npoints, "Gauss-Legendre nodes (>= 64)")->capture_default_str();
    moments->add_option("--alpha", m_alpha, "alpha (mu_ab)");
    moments->add_option("--beta2", m_beta2, "beta^2 (mu_ab)");

    // gram
    auto* gram = app.add_subcommand("gram", "Gram matrices with exact positivity verdicts (JSON)");
    gram->require_subcommand(1);
    std::string g_q;
    std::string g_method = "auto";
    auto add_gram_common = [&](CLI::App* s) {
        s->add_option("--q", g_q, "Rational evaluation point")->required();
        s->add_option("--method", g_method, "auto | exact | eigen")->check(CLI::IsMember({"auto", "exact", "eigen"}));
    };
    auto* g_sym = gram->add_subcommand("symgroup", "Matrix [t(V_{sigma^-1 pi})] over the symmetric group");
    int g_r = 3;
    bool g_raw = false;
    std::string g_mu;
    g_sym->add_option("--r", g_r, "Group size (1..6)")->capture_default_str();
    g_sym->add_flag("--raw", g_raw, "At q < 0 use q^{#V-#B} literally instead of the twisted weight");
    g_sym->add_option("--mu", g_mu, "Multiply by the crossing weight mu^{#I} at this rational mu");
    add_gram_common(g_sym);
    auto* g_words = gram->add_subcommand("words", "Gram of all omega words up to a length");
    int g_maxlen = 2;
    int g_indices = 2;
    g_words->add_option("--maxlen", g_maxlen, "Longest word")->capture_default_str();
    g_words->add_option("--indices", g_indices, "Generator count")->capture_default_str();
    add_gram_common(g_words);
    auto* g_fock = gram->add_subcommand("fock", "Gram of the blocked Fock basis with n particles");
    int g_n = 2;
    bool g_signed = false;
    g_fock->add_option("--n", g_n, "Particle count")->capture_default_str();
    g_fock->add_option("--indices", g_indices, "Generator count")->capture_default_str();
    g_fock->add_flag("--signed", g_signed, "Signed form for -1 <= q <= 0");
    add_gram_common(g_fock);

    // density
    auto* density = app.add_subcommand(
        "density", "CSV: '# atom,location,mass' header lines, then columns t,density on a uniform grid");
    std::string d_q;
    int d_points = 201;
    std::string d_atom = "derived";
    density->add_option("--q", d_q, "Rational q in [-1, 0] or 1")->required();
    density->add_option("--points", d_points, "Grid points (>= 2)")->capture_default_str();
    density->add_option("--atom-mode", d_atom, "paper | derived")->check(CLI::IsMember({"paper", "derived"}));

    // freeconv
    auto* freeconv = app.add_subcommand("freeconv", "Free convolution of two moment sequences (JSON)");
    std::string f_a;
    std::string f_b;
    std::string f_lam_a = "1";
    std::string f_lam_b = "1";
    freeconv->add_option("--a", f_a, "JSON file: array of rational strings m_1..m_N")->required();
    freeconv->add_option("--b", f_b, "JSON file: array of rational strings m_1..m_N")->required();
    freeconv->add_option("--lam2-a", f_lam_a, "Dilate a by lambda with lambda^2 given");
    freeconv->add_option("--lam2-b", f_lam_b, "Dilate b by lambda with lambda^2 given");

    // verify
    auto* verify = app.add_subcommand("verify", "Identity and positivity checks; exit 0 iff all pass");
    verify->require_subcommand(1);
    int v_rmax = 5;
    auto* v_counts = verify->add_subcommand("counts", "Pairing, non-crossing and connected counts");
    v_counts->add_option("--rmax", v_rmax, "Largest r (2r points)");
    auto* v_c7 = verify->add_subcommand("corollary7", "Signed pairing sum equals the inner-block sum");
    v_c7->add_option("--rmax", v_rmax, "Largest r (<= 6)");
    auto* v_t1 = verify->add_subcommand("theorem1", "Symmetric-group positivity, including products of weights");
    int v_explore = 4;
    v_t1->add_option("--rmax", v_rmax, "Largest r (<= 5)");
    v_t1->add_option("--explore-rmax", v_explore, "Largest r for the raw negative-q search (<= 5)");
    auto* v_t3 = verify->add_subcommand("theorem3", "Blocked Fock Gram positivity for 0 <= q <= 1");
    int v_nmax = 4;
    int v_indices = 2;
    v_t3->add_option("--nmax", v_nmax, "Largest particle count");
    v_t3->add_option("--indices", v_indices, "Largest generator count");
    auto* v_t4 = verify->add_subcommand("theorem4", "Creation and annihilation are adjoint");
    int v_trials = 100;
    v_t4->add_option("--trials", v_trials, "Random triples per regime");
    auto* v_t5 = verify->add_subcommand("theorem5", "Vacuum moments equal pairing sums");
    int v_maxlen = 10;
    int v_samples = 200;
    v_t5->add_option("--maxlen", v_maxlen, "Longest sampled word");
    v_t5->add_option("--samples", v_samples, "Sampled words");
    auto* v_t6 = verify->add_subcommand("theorem6", "mu_q as a free convolution of dilated mu_q1, mu_q2");
    std::string v_q1;
    std::string v_q2;
    int v_order = 12;
    std::optional<int> v_iterate;
    v_t6->add_option("--q1", v_q1, "Rational q1 (omit both for the grid)");
    v_t6->add_option("--q2", v_q2, "Rational q2");
    v_t6->add_option("--order", v_order, "Highest moment (<= 14)");
    v_t6->add_option("--iterate", v_iterate, "Also check the N-fold convolution with base q1");
    auto* v_t7 = verify->add_subcommand("theorem7", "mu_q through non-crossing inner/outer sums and quadrature");
    int v_quad_order = 10;
    int v_npoints = 256;
    v_t7->add_option("--order", v_order, "Highest moment for the exact check");
    v_t7->add_option("--quad-order", v_quad_order, "Highest moment for the quadrature check");
    v_t7->add_option("--npoints", v_npoints, "Gauss-Legendre nodes");
    auto* v_boundary = verify->add_subcommand("boundary", "Gaussian, semicircle and Bernoulli endpoints");
    v_boundary->add_option("--order", v_order, "Highest moment");
    auto* v_hankel = verify->add_subcommand("hankel", "Hankel positivity of mu_q moments");
    v_hankel->add_option("--order", v_order, "Highest moment");
    auto* v_all = verify->add_subcommand("all", "Every check above");
    bool v_quick = false;
    v_all->add_flag("--quick", v_quick, "Acceptance-level parameters");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kPass;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kPass;
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kUsage;
    }

    const bool format_token = out_target == "-" || out_target == "csv" || out_target == "json";
    std::ofstream file;
    if (!format_token) {
        file.open(out_target);
        if (!file) {
            err << "error: cannot open " << out_target << " for writing\n";
            return kUsage;
        }
    }
    std::ostream& sink = format_token ? out : static_cast<std::ostream&>(file);
    const bool want_json = out_target == "json";

    const auto start = std::chrono::steady_clock::now();
    auto emit = [&](Report& report, const Json* extra_key_value = nullptr) {
        Json j = report.to_json();
        if (extra_key_value != nullptr) {
            for (const auto& [k, v] : extra_key_value->items()) j[k] = v;
        }
        if (timing) {
            j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                                     start)
                                  .count();
        }
        sink << j.dump(2) << '\n';
        return report.pass() ? kPass : kChecksFailed;
    };

    try {
        if (*p_enum) {
            require(p_n >= 2 && p_n % 2 == 0 && p_n <= 16, "--n must be even and within 2..16");
            PairingEnumerator e(p_n);
            while (auto v = e.next()) {
                Json line = p_stats ? pairing_stats(*v) : Json{{"pairs", pairing_json(*v)}};
                sink << line.dump() << '\n';
            }
            return kPass;
        }
        if (*p_show) {
            Json j;
            try {
                j = Json::parse(p_pairs);
            } catch (const Json::parse_error& e) {
                throw UsageError(std::string("--pairs: ") + e.what());
            }
            std::vector<Chord> chords;
            for (const auto& c : j) {
                if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
                    throw UsageError("--pairs: expected [[k,l],...]");
                }
                chords.push_back({c[0].get<int>(), c[1].get<int>()});
            }
            const Pairing v(std::move(chords));
            Report report;
            report.command = "pairings show";
            report.params["pairs"] = pairing_json(v);
            report.details = pairing_stats(v);
            report.details.erase("pairs");
            report.details["tq_exponent"] = v.excess();
            report.details["tq"] = eval_weight(Weight::tq(), v).to_string();
            report.details["crossing_weight"] = eval_weight(Weight::that_mu(), v).to_string('m');
            Json blocks = Json::array();
            for (const auto& b : block_decompose(v).blocks) {
                Json pb = Json::array();
                for (const auto& c : b) pb.push_back(Json::array({c.k, c.l}));
                blocks.push_back(std::move(pb));
            }
            report.details["block_decomposition"] = std::move(blocks);
            return emit(report);
        }
        if (*moments) {
            require(m_order >= 0 && m_order <= 16, "--order must lie in 0..16");
            const AtomMode mode = parse_atom_mode(m_atom);
            Report report;
            report.command = "moments";
            report.params["weight"] = m_weight;
            report.params["order"] = m_order;
            report.params["method"] = m_method;
            std::vector<std::string> col_moment;
            std::vector<std::string> col_error;
            if (m_method == "pairing") {
                MomentSeq<Rational> m;
                if (m_weight == "tq") {
                    if (m_q.empty()) throw UsageError("--q is required for --weight tq");
                    const Rational q = parse_rational(m_q, "--q");
                    require(q >= Rational(-1) && q <= Rational(1), "q must lie in [-1, 1]");
                    report.params["q"] = q.to_string();
                    m = mu_q_moments(q, m_order);
                } else {
                    const Rational a = parse_rational(m_alpha, "--alpha");
                    const Rational b = parse_rational(m_beta2, "--beta2");
                    report.params["alpha"] = a.to_string();
                    report.params["beta2"] = b.to_string();
                    m = mu_ab_moments(a, b, m_order);
                }
                col_moment.emplace_back("1");
                for (const auto& x : m.terms()) col_moment.push_back(x.to_string());
            } else {
                require(m_npoints >= 64, "--npoints must be at least 64");
                MeasureSpec spec;
                if (m_weight == "tq") {
                    if (m_q.empty()) throw UsageError("--q is required for --weight tq");
                    const Rational q = parse_rational(m_q, "--q");
                    report.params["q"] = q.to_string();
                    spec = measure_for_q(q, mode);
                } else {
                    MeasureParams p;
                    p.alpha = parse_rational(m_alpha, "--alpha");
                    p.beta2 = parse_rational(m_beta2, "--beta2");
                    p.atom_mode = mode;
                    report.params["alpha"] = p.alpha.to_string();
                    report.params["beta2"] = p.beta2.to_string();
                    spec = make_measure(MeasureKind::mu_alpha_beta, p);
                }
                report.params["atom_mode"] = m_atom;
                report.params["npoints"] = m_npoints;
                const auto quad = quad_moments(spec, m_order, m_npoints);
                for (std::size_t n = 0; n < quad.moments.size(); ++n) {
                    col_moment.push_back(fmt_double(quad.moments[n]));
                    col_error.push_back(fmt_double(quad.error_estimate[n]));
                }
            }
            if (want_json) {
                report.details["moments"] = col_moment;
                if (!col_error.empty()) report.details["error_estimate"] = col_error;
                return emit(report);
            }
            sink << (col_error.empty() ? "order,moment\n" : "order,moment,error_estimate\n");
            for (std::size_t n = 0; n < col_moment.size(); ++n) {
                sink << n << ',' << col_moment[n];
                if (!col_error.empty()) sink << ',' << col_error[n];
                sink << '\n';
            }
            return kPass;
        }
        if (*gram) {
            const Rational q = parse_rational(g_q, "--q");
            const PsdMethod method = parse_method(g_method);
            Report report;
            report.params["q"] = q.to_string();
            report.params["method"] = g_method;
            GramReport g;
            if (*g_sym) {
                require(g_r >= 1 && g_r <= 6, "--r must lie in 1..6");
                require(q >= Rational(-1) && q <= Rational(1), "q must lie in [-1, 1]");
                report.command = "gram symgroup";
                report.params["r"] = g_r;
                Weight t = (q.sign() < 0 && !g_raw) ? Weight::tq(TqRegime::negative) : Weight::tq();
                report.params["weight"] = (q.sign() < 0 && !g_raw) ? "tq twisted" : "tq";
                if (!g_mu.empty()) {
                    const Rational mu = parse_rational(g_mu, "--mu");
                    report.params["mu"] = mu.to_string();
                    t = Weight::product({t, Weight::that_mu(mu)});
                }
                g = symgroup_gram_psd(t, g_r, {q}, method);
            } else if (*g_words) {
                require(g_maxlen >= 0 && g_indices >= 1, "--maxlen >= 0 and --indices >= 1 required");
                require(q >= Rational(-1) && q <= Rational(1), "q must lie in [-1, 1]");
                std::size_t dim = 0;
                std::size_t layer = 1;
                for (int l = 0; l <= g_maxlen && dim <= kGramDimensionLimit; ++l) {
                    dim += layer;
                    layer *= static_cast<std::size_t>(g_indices);
                }
                require(dim <= kGramDimensionLimit, "Gram dimension exceeds 2048");
                report.command = "gram words";
                report.params["maxlen"] = g_maxlen;
                report.params["indices"] = g_indices;
                const Weight t = q.sign() < 0 ? Weight::tq(TqRegime::negative) : Weight::tq();
                g = word_gram_psd(all_omega_words(g_maxlen, g_indices), Kernel::identity(), CovarianceQ::omega(), t,
                                  {q}, method);
            } else {
                require(g_n >= 1 && g_n <= 8 && g_indices >= 1, "--n must lie in 1..8 and --indices >= 1");
                std::size_t dim = std::size_t{1} << static_cast<unsigned>(g_n - 1);
                for (int i = 0; i < g_n && dim <= kGramDimensionLimit; ++i) dim *= static_cast<std::size_t>(g_indices);
                require(dim <= kGramDimensionLimit, "Gram dimension exceeds 2048");
                if (g_signed) {
                    require(q >= Rational(-1) && q <= Rational(0), "the signed form needs -1 <= q <= 0");
                } else {
                    require(q >= Rational(0) && q <= Rational(1), "the blocked form needs 0 <= q <= 1 (use --signed)");
                }
                report.command = "gram fock";
                report.params["n"] = g_n;
                report.params["indices"] = g_indices;
                report.params["signed"] = g_signed;
                g = fock_gram_psd(g_n, g_indices, {q}, g_signed ? FockRegime::signed_q : FockRegime::nonnegative,
                                  method);
            }
            add_gram_point(report, g);
            return emit(report);
        }
        if (*density) {
            const Rational q = parse_rational(d_q, "--q");
            require(d_points >= 2, "--points must be at least 2");
            const MeasureSpec spec = measure_for_q(q, parse_atom_mode(d_atom));
            std::vector<std::pair<double, double>> rows;
            if (spec.density) {
                for (int i = 0; i < d_points; ++i) {
                    const double t = -spec.radius + 2.0 * spec.radius * i / (d_points - 1);
                    rows.emplace_back(t, density_eval(spec, t));
                }
            }
            if (want_json) {
                Report report;
                report.command = "density";
                report.params["q"] = q.to_string();
                report.params["points"] = d_points;
                report.params["atom_mode"] = d_atom;
                report.details["measure"] = spec.name;
                report.details["radius"] = spec.radius;
                Json atoms = Json::array();
                for (const auto& a : spec.atoms) atoms.push_back({{"location", a.location}, {"mass", a.mass}});
                report.details["atoms"] = std::move(atoms);
                Json t = Json::array();
                Json f = Json::array();
                for (const auto& [x, y] : rows) {
                    t.push_back(x);
                    f.push_back(y);
                }
                report.details["t"] = std::move(t);
                report.details["density"] = std::move(f);
                return emit(report);
            }
            sink << "# measure=" << spec.name << " atom_mode=" << d_atom << " radius=" << fmt_double(spec.radius)
                 << '\n';
            sink << "# atom,location,mass\n";
            for (const auto& a : spec.atoms) {
                sink << "# atom," << fmt_double(a.location) << ',' << fmt_double(a.mass) << '\n';
            }
            sink << "t,density\n";
            for (const auto& [x, y] : rows) sink << fmt_double(x) << ',' << fmt_double(y) << '\n';
            return kPass;
        }
        if (*freeconv) {
            const auto a = read_moments(f_a);
            const auto b = read_moments(f_b);
            require(a.order() == b.order(), "moment sequences must have the same length");
            const Rational la = parse_rational(f_lam_a, "--lam2-a");
            const Rational lb = parse_rational(f_lam_b, "--lam2-b");
            const auto m = free_convolve(dilate(a, la), dilate(b, lb));
            Report report;
            report.command = "freeconv";
            report.params["a"] = f_a;
            report.params["b"] = f_b;
            report.params["lam2_a"] = la.to_string();
            report.params["lam2_b"] = lb.to_string();
            report.details["moments"] = to_json(m);
            report.details["cumulants"] = to_json(moments_to_cumulants(m));
            return emit(report);
        }
        if (*verify) {
            Report report;
            if (*v_counts) {
                const int rmax = v_counts->count("--rmax") ? v_rmax : 6;
                require(rmax >= 1 && rmax <= 7, "--rmax must lie in 1..7");
                report = verify_counts(rmax);
            } else if (*v_c7) {
                require(v_rmax >= 1 && v_rmax <= 6, "--rmax must lie in 1..6");
                report = verify_corollary7(v_rmax);
            } else if (*v_t1) {
                const int rmax = v_t1->count("--rmax") ? v_rmax : 4;
                require(rmax >= 1 && rmax <= 5 && v_explore >= 0 && v_explore <= 5, "--rmax and --explore-rmax in 1..5");
                report = verify_theorem1(rmax, v_explore);
            } else if (*v_t3) {
                require(v_nmax >= 1 && v_nmax <= 5 && v_indices >= 1 && v_indices <= 3, "--nmax in 1..5, --indices in 1..3");
                report = verify_theorem3(v_nmax, v_indices);
            } else if (*v_t4) {
                require(v_trials >= 1, "--trials must be positive");
                report = verify_theorem4(v_trials, seed);
            } else if (*v_t5) {
                require(v_maxlen >= 0 && v_maxlen <= 12 && v_samples >= 0, "--maxlen in 0..12");
                report = verify_theorem5(v_maxlen, v_samples, seed);
            } else if (*v_t6) {
                require(v_order >= 1 && v_order <= 14, "--order must lie in 1..14");
                std::optional<Rational> q1;
                std::optional<Rational> q2;
                if (!v_q1.empty()) q1 = parse_rational(v_q1, "--q1");
                if (!v_q2.empty()) q2 = parse_rational(v_q2, "--q2");
                if (q1.has_value() != q2.has_value()) throw UsageError("--q1 and --q2 go together");
                if (v_iterate) require(*v_iterate >= 1 && *v_iterate <= 8, "--iterate must lie in 1..8");
                report = verify_theorem6(q1, q2, v_order, v_iterate);
            } else if (*v_t7) {
                require(v_order >= 1 && v_order <= 16, "--order must lie in 1..16");
                require(v_quad_order >= 0 && v_quad_order <= 16 && v_npoints >= 64, "--quad-order <= 16, --npoints >= 64");
                report = verify_theorem7(v_order, v_quad_order, v_npoints);
            } else if (*v_boundary) {
                require(v_order >= 1 && v_order <= 16, "--order must lie in 1..16");
                report = verify_boundary(v_order);
            } else if (*v_hankel) {
                require(v_order >= 1 && v_order <= 16, "--order must lie in 1..16");
                report = verify_hankel(v_order);
            } else {
                Json subs;
                report = verify_all({v_quick, seed}, subs);
                const Json extra = {{"reports", subs}};
                return emit(report, &extra);
            }
            return emit(report);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "invalid parameter: " << e.what() << '\n';
        return kInvalidParameter;
    } catch (const std::invalid_argument& e) {
        err << "invalid parameter: " << e.what() << '\n';
        return kInvalidParameter;
    } catch (const std::length_error& e) {
        err << "invalid parameter: " << e.what() << '\n';
        return kInvalidParameter;
    }
    err << app.help();
    return kUsage;
}

}  // namespace pairweave::cli
