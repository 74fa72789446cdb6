// Acceptance run: one PASS/FAIL line per criterion, details indented below it.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "turan/turan.hpp"

using namespace turan;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void verdict(int id, bool pass, const std::string& what, double secs) {
    std::printf("%s criterion %d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", id, what.c_str(), secs);
    std::fflush(stdout);
    failures += pass ? 0 : 1;
}

void detail_line(const std::string& text) { std::printf("    %s\n", text.c_str()); }

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::vector<Complex> random_poles(std::mt19937_64& g, int n, double lo, double hi) {
    std::vector<Complex> out;
    for (int j = 0; j < n; ++j) out.push_back(oracle::random_in_annulus(g, lo, hi));
    return out;
}

RationalFn random_instance(std::mt19937_64& g, int max_n, int force_s, bool m_equals_n, double k) {
    const int n = std::uniform_int_distribution<int>(1, max_n)(g);
    const int m = m_equals_n ? n : std::uniform_int_distribution<int>(0, n)(g);
    const int s = force_s >= 0 ? std::min(force_s, m) : std::uniform_int_distribution<int>(0, m)(g);
    RootForm num{oracle::random_in_annulus(g, 0.5, 2.0), {}, s};
    for (int j = 0; j < m - s; ++j) num.roots.push_back(oracle::random_in_disk(g, k));
    return RationalFn(num, PoleSet(random_poles(g, n, 1.1, 4.0)), k);
}

void criterion_identities() {
    const auto t0 = Clock::now();
    std::mt19937_64 g(101);
    double worst_lemma = 0.0, worst_unimodular = 0.0, worst_log = 0.0;
    for (int set = 0; set < 200; ++set) {
        const PoleSet ps(random_poles(g, 1 + set % 16, 1.01, 5.0));
        const Blaschke b(ps);
        for (int i = 0; i < 100; ++i) {
            const Complex z = std::polar(1.0, oracle::random_angle(g));
            worst_lemma = std::max(worst_lemma, std::abs(lemma42_residual(ps, z)));
            const Complex bz = eval_B(b, z);
            worst_unimodular = std::max(worst_unimodular, std::abs(std::abs(bz) - 1.0));
            const double bp = abs_B_prime_on_circle(b, z);
            worst_log = std::max(worst_log, std::abs(std::real(z * eval_B_prime(b, z) / bz) - bp) / std::max(1.0, bp));
        }
    }
    const double secs = seconds_since(t0);
    const bool pass = worst_lemma < 1e-9 && worst_unimodular < 1e-9 && worst_log < 1e-9 && secs < 5.0;
    verdict(1, pass, "identity suite on 200 pole sets x 100 points", secs);
    detail_line("max |lemma residual| = " + fmt("%.3e", worst_lemma) + ", max ||B|-1| = " + fmt("%.3e", worst_unimodular) +
                ", max |Re(zB'/B) - |B'|| = " + fmt("%.3e", worst_log));
}

void criterion_sequences() {
    const auto t0 = Clock::now();
    std::mt19937_64 g(103);
    long violations = 0;
    std::uniform_int_distribution<int> len(1, 16);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (auto dir : {SeqDirection::le_one, SeqDirection::ge_one}) {
        for (int t = 0; t < 10000; ++t) {
            std::vector<double> xs(static_cast<std::size_t>(len(g)));
            for (auto& x : xs) x = dir == SeqDirection::le_one ? unit(g) : 1.0 / std::max(unit(g), 1e-300);
            if (!seq_inequality(xs, dir).holds) ++violations;
        }
    }
    bool equality = true;
    for (int n = 1; n <= 16; ++n) {
        const std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
        for (auto dir : {SeqDirection::le_one, SeqDirection::ge_one}) {
            const auto res = seq_inequality(ones, dir);
            equality = equality && std::abs(res.lhs - res.rhs) <= 1e-15;
        }
    }
    verdict(2, violations == 0 && equality, "sequence inequalities, 10^4 sequences per direction", seconds_since(t0));
    detail_line("violations = " + std::to_string(violations) + ", all-ones equality " + (equality ? "exact" : "broken"));
}

SweepOptions criterion3_options(unsigned threads) {
    SweepOptions opt;
    opt.instances = 1000;
    opt.points = 256;
    opt.kinds = {BoundKind::Thm2_1, BoundKind::Thm2_2, BoundKind::Thm2_3,   BoundKind::Thm3_1,    BoundKind::Cor3_1,
                 BoundKind::Cor3_2, BoundKind::Cor3_2_exponent_fixed,       BoundKind::Cor3_3,    BoundKind::Cor3_4,
                 BoundKind::Thm3_2, BoundKind::Turan_1_3, BoundKind::Bernstein_1_1, BoundKind::ErdosLax_1_2};
    opt.threads = threads;
    return opt;
}

VerificationReport criterion_sweep(unsigned threads) {
    const auto t0 = Clock::now();
    GenConfig cfg;
    cfg.seed = 7;
    const VerificationReport rep = verify_sweep(cfg, criterion3_options(threads));
    const double secs = seconds_since(t0);
    verdict(3, rep.total_violations() == 0 && secs < 60.0,
            "theorem sweep, 1000 instances x 256 points, seed 7, " + std::to_string(threads) + " threads", secs);
    for (const auto& k : rep.kinds) {
        std::string line = std::string(to_string(k.kind)) + ": applicable " + std::to_string(k.instances_applicable) +
                           ", checks " + std::to_string(k.checks) + ", violations " + std::to_string(k.violations);
        if (k.worst) line += ", worst normalized margin " + fmt("%.3e", k.worst->normalized);
        if (!k.violation_samples.empty()) {
            const auto& v = k.violation_samples.front();
            line += ", e.g. instance " + std::to_string(v.instance) + " angle " + fmt("%.6f", v.angle) + " lhs " +
                    fmt("%.6g", v.lhs) + " rhs " + fmt("%.6g", v.rhs);
        }
        detail_line(line);
    }
    return rep;
}

void criterion_sharpness() {
    const auto t0 = Clock::now();
    const VerificationReport rep = extremal_suite(1e-8);
    int gated = 0, gated_failed = 0, printed_sharp = 0, printed_loose = 0, printed_loose_expected = 0;
    double worst = 0.0;
    for (const auto& row : rep.equality) {
        if (row.kind == BoundKind::Cor3_2) {
            (row.within ? printed_sharp : printed_loose) += 1;
            if (!row.expected_sharp) ++printed_loose_expected;
            continue;
        }
        ++gated;
        worst = std::max(worst, row.rel_error);
        if (!row.within) ++gated_failed;
    }
    // worked tuple z(z + 1/2)/(z − 2)^2 at z = 1: r′ = [(2z + 1/2)(z − 2) − 2z(z + 1/2)]/(z − 2)^3 = 11/2
    const RationalFn worked = turan_extremal(2, 2, 1, 0.5, 2.0);
    const Margin mg = check_point(BoundKind::Thm3_1, worked, Complex{1.0});
    const double z = 1.0;
    const double oracle_lhs = std::abs(((2 * z + 0.5) * (z - 2) - 2 * z * (z + 0.5)) / std::pow(z - 2, 3));
    const bool worked_ok = std::abs(mg.lhs - 5.5) <= 1e-9 && std::abs(mg.rhs - 5.5) <= 1e-9 && oracle_lhs == 5.5;
    const auto tuples = std::count_if(rep.equality.begin(), rep.equality.end(), [](const ExtremalRow& row) {
        return row.kind == BoundKind::Thm3_1 || row.kind == BoundKind::Thm2_1;
    });
    verdict(4, gated_failed == 0 && worked_ok && tuples >= 200,
            "sharpness of Thm3_1, Cor3_2_exponent_fixed and Thm2_1 on the extremal grid", seconds_since(t0));
    detail_line("parameter tuples " + std::to_string(tuples) + ", gated rows " + std::to_string(gated) + ", outside 1e-8: " + std::to_string(gated_failed) +
                ", max relative gap " + fmt("%.3e", worst));
    detail_line("worked tuple (2,2,1,0.5,2): lhs " + fmt("%.17g", mg.lhs) + ", rhs " + fmt("%.17g", mg.rhs));
    detail_line("printed Cor3_2 exponent (diagnostic): sharp " + std::to_string(printed_sharp) + ", not sharp " +
                std::to_string(printed_loose) + " (expected not sharp: " + std::to_string(printed_loose_expected) + ")");
}

void criterion_ordering(const VerificationReport& rep) {
    const auto& o = rep.ordering;
    const bool pass = rep.ordering_checked && o.violations == 0 && o.strict_failures == 0;
    verdict(5, pass, "ordering against Thm2_3 on every sweep instance", 0.0);
    detail_line("checks " + std::to_string(o.checks) + ", violations " + std::to_string(o.violations) +
                ", strict instances " + std::to_string(o.strict_instances) + ", strict failures " +
                std::to_string(o.strict_failures) + ", min differences " + fmt("%.3e", o.min_thm31_minus_thm23) + " / " +
                fmt("%.3e", o.min_cor32_fixed_minus_thm23));
}

void criterion_reductions() {
    const auto t0 = Clock::now();
    std::mt19937_64 g(107);
    double gap_s0 = 0.0, gap_mn = 0.0, gap_k1 = 0.0;
    std::uniform_real_distribution<double> kd(0.1, 1.0);
    for (int t = 0; t < 100; ++t) {
        const RationalFn a = random_instance(g, 12, 0, false, kd(g));
        const RationalFn b = random_instance(g, 12, -1, true, kd(g));
        const RationalFn c = random_instance(g, 12, -1, false, 1.0);
        const Complex z = std::polar(1.0, oracle::random_angle(g));
        gap_s0 = std::max(gap_s0, std::abs(rhs_factor(BoundKind::Thm3_1, a, z) - origin_free_factor(a, z)));
        gap_mn = std::max(gap_mn, std::abs(rhs_factor(BoundKind::Thm3_1, b, z) - rhs_factor(BoundKind::Cor3_1, b, z)));
        gap_k1 = std::max(gap_k1, std::abs(rhs_factor(BoundKind::Cor3_2, c, z) - unit_radius_factor(c, z)));
    }
    verdict(6, gap_s0 <= 1e-12 && gap_mn <= 1e-12 && gap_k1 <= 1e-12, "reductions s = 0, m = n, k = 1",
            seconds_since(t0));
    detail_line("max gaps " + fmt("%.3e", gap_s0) + ", " + fmt("%.3e", gap_mn) + ", " + fmt("%.3e", gap_k1));
}

void criterion_polar_bridge() {
    const auto t0 = Clock::now();
    std::mt19937_64 g(109);
    double worst = 0.0, worst_limit = 0.0;
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + t % 10;
        RootForm p{oracle::random_in_annulus(g, 0.5, 2.0), {}, 0};
        for (int j = 0; j < n; ++j) p.roots.push_back(oracle::random_in_disk(g, 1.5));
        const Complex alpha = oracle::random_in_annulus(g, 2.0, 10.0);
        const RationalFn r(p, PoleSet(std::vector<Complex>(static_cast<std::size_t>(n), alpha)), 1.0);
        const Complex z = oracle::random_in_disk(g, 1.0);
        const Complex bridge = -polar_derivative(expand(p), n, alpha)(z) / std::pow(z - alpha, n + 1);
        const Complex direct = eval_r_prime(r, z);
        worst = std::max(worst, std::abs(direct - bridge) / std::abs(bridge));

        const Complex far = std::polar(1e6, oracle::random_angle(g));
        const Complex dp = derivative(expand(p))(z);
        worst_limit = std::max(worst_limit, std::abs(polar_derivative(expand(p), n, far)(z) / far - dp) / std::abs(dp));
    }
    verdict(7, worst <= 1e-9 && worst_limit <= 1e-4, "polar-derivative bridge", seconds_since(t0));
    detail_line("max relative gap " + fmt("%.3e", worst) + ", limit gap at |alpha| = 1e6: " + fmt("%.3e", worst_limit));
}

void criterion_circlenorm() {
    const auto t0 = Clock::now();
    std::mt19937_64 g(113);
    double worst_sup = 0.0, worst_min = 0.0;
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + t % 8;
        const int m = std::uniform_int_distribution<int>(0, n)(g);
        RootForm num{oracle::random_in_annulus(g, 0.5, 2.0), {}, 0};
        for (int j = 0; j < m; ++j) num.roots.push_back(oracle::random_in_disk(g, 0.8));
        const auto poles = random_poles(g, n, 1.5, 4.0);
        const RationalFn r(num, PoleSet(poles), 1.0);
        const auto brute = oracle::brute_force_circle(
            [&](Complex z) { return oracle::product_quotient(num.leading, 0, num.roots, poles, z); }, 1.0);
        worst_sup = std::max(worst_sup, std::abs(sup_on_circle(r).value - brute.max) / brute.max);
        worst_min = std::max(worst_min, std::abs(min_on_circle(r).value - brute.min) / brute.min);
    }
    verdict(8, worst_sup <= 1e-8 && worst_min <= 1e-8, "circle extrema against 10^6-point brute force",
            seconds_since(t0));
    detail_line("max relative gap sup " + fmt("%.3e", worst_sup) + ", min " + fmt("%.3e", worst_min));
}

void criterion_determinism(const VerificationReport& first, unsigned first_threads) {
    const auto t0 = Clock::now();
    const unsigned other = first_threads == 1 ? 4 : 1;
    GenConfig cfg;
    cfg.seed = 7;
    const VerificationReport second = verify_sweep(cfg, criterion3_options(other));
    const std::string a = to_json(first, "verify").dump(2);
    const std::string b = to_json(second, "verify").dump(2);
    verdict(9, a == b,
            "sweep report identical with " + std::to_string(first_threads) + " and " + std::to_string(other) + " threads",
            seconds_since(t0));
    detail_line("report body " + std::to_string(a.size()) + " bytes");
}

} // namespace

int main() {
    const auto t0 = Clock::now();
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    criterion_identities();
    criterion_sequences();
    const VerificationReport sweep = criterion_sweep(threads);
    criterion_sharpness();
    criterion_ordering(sweep);
    criterion_reductions();
    criterion_polar_bridge();
    criterion_circlenorm();
    criterion_determinism(sweep, threads);
    std::printf("%d of 9 criteria failed (%.1f s total)\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
