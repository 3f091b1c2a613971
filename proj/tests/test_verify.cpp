#include "wmono/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace wmono;
using namespace wmono::verify;

TEST_CASE("trial seeds are deterministic and spread out") {
    CHECK(trial_seed(42, 0) == trial_seed(42, 0));
    CHECK(trial_seed(42, 0) != trial_seed(42, 1));
    CHECK(trial_seed(42, 7) != trial_seed(43, 7));
}

TEST_CASE("sample_wclass is reproducible and normalized") {
    std::mt19937_64 a(123), b(123);
    const auto c1 = sample_wclass(5, a);
    const auto c2 = sample_wclass(5, b);
    CHECK(c1.a() == c2.a());
    for (std::size_t i = 0; i < 5; ++i) CHECK(c1.b()[i] == c2.b()[i]);

    std::mt19937_64 rng(321);
    for (int rep = 0; rep < 100; ++rep) {
        const auto c = sample_wclass(2 + rep % 5, rng);
        double norm2 = std::norm(c.a());
        for (const auto& v : c.b()) norm2 += std::norm(v);
        CHECK(std::abs(norm2 - 1.0) <= 1e-12);
    }
}

TEST_CASE("sample_wclass weight of a is uniform on the sphere") {
    // |a|^2 of a uniform point on the unit sphere of C^5 has mean 1/5 and
    // variance 4/(25*6); 1e5 samples put 3 standard errors at ~1.55e-3.
    std::mt19937_64 rng(555);
    const std::size_t n = 4;
    const std::size_t samples = 100000;
    double sum = 0.0;
    for (std::size_t i = 0; i < samples; ++i) sum += std::norm(sample_wclass(n, rng).a());
    const double mean = sum / static_cast<double>(samples);
    const double se = std::sqrt(4.0 / (25.0 * 6.0) / static_cast<double>(samples));
    CHECK(std::abs(mean - 0.2) <= 3.0 * se);
}

TEST_CASE("oracle is exact on pure input") {
    const double s = 1.0 / std::numbers::sqrt2;
    const DensityMatrix bell = projector(PureState({s, 0.0, 0.0, s}));
    const OracleBudget tiny{100, 20, 2};
    for (auto objective : {RoofObjective::Minimize, RoofObjective::Maximize}) {
        const auto res = convex_roof_oracle(bell, objective, RoofMeasure::Concurrence, tiny, 9);
        CHECK(res.value == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("oracle input validation") {
    const double s = 1.0 / std::numbers::sqrt2;
    const DensityMatrix bell = projector(PureState({s, 0.0, 0.0, s}));
    CHECK_THROWS_AS(
        convex_roof_oracle(bell, RoofObjective::Minimize, RoofMeasure::Concurrence, {0, 0, 0}, 1),
        std::invalid_argument);

    // rank-5 state on 3 qubits exceeds the supported rank
    std::mt19937_64 rng(77);
    ComplexMatrix m(8, 8);
    for (int k = 0; k < 5; ++k) {
        std::vector<Complex> g(8);
        for (auto& v : g) v = Complex{gaussian(rng), gaussian(rng)};
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) m(i, j) += g[i] * std::conj(g[j]);
    }
    const double tr = m.trace().real();
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) m(i, j) /= tr;
    const DensityMatrix rank5(std::move(m), DimList::qubits(3));
    CHECK_THROWS_AS(
        convex_roof_oracle(rank5, RoofObjective::Minimize, RoofMeasure::Concurrence, {}, 1),
        std::invalid_argument);
}

TEST_CASE("oracle brackets the two-qubit spectral values") {
    std::mt19937_64 rng(88);
    for (int rep = 0; rep < 3; ++rep) {
        const auto rho = sample_two_qubit_density(2, rng);
        const double conc = concurrence_two_qubit(rho);
        const double coa = coa_two_qubit(rho);
        const OracleBudget budget{}; // default

        const auto mn =
            convex_roof_oracle(rho, RoofObjective::Minimize, RoofMeasure::Concurrence, budget, rep);
        CHECK(mn.value >= conc - 1e-9);
        CHECK(mn.value <= conc + 1e-3);

        const auto mx =
            convex_roof_oracle(rho, RoofObjective::Maximize, RoofMeasure::Concurrence, budget, rep);
        CHECK(mx.value <= coa + 1e-9);
        CHECK(mx.value >= coa - 1e-3);

        CHECK(mn.diagnostics.evaluations > 0);
        CHECK(!mn.decomposition.empty());
        double psum = 0.0;
        for (const auto& term : mn.decomposition) psum += term.probability;
        CHECK(psum == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("oracle is deterministic for a fixed seed") {
    std::mt19937_64 rng(404);
    const auto rho = sample_two_qubit_density(2, rng);
    const OracleBudget small{500, 50, 2};
    const auto a =
        convex_roof_oracle(rho, RoofObjective::Maximize, RoofMeasure::Concurrence, small, 77);
    const auto b =
        convex_roof_oracle(rho, RoofObjective::Maximize, RoofMeasure::Concurrence, small, 77);
    CHECK(a.value == b.value);
    CHECK(a.diagnostics.evaluations == b.diagnostics.evaluations);
    CHECK(a.diagnostics.best_length == b.diagnostics.best_length);
}

TEST_CASE("oracle reaches the closed block value on a 5-qubit sub-block") {
    std::mt19937_64 rng(99);
    const auto c = sample_wclass(5, rng);
    const SubsystemSelection sel{{1, 3}};
    const double closed = block_concurrence_closed(c, sel);
    const auto res = convex_roof_oracle(reduce(c, sel), RoofObjective::Minimize,
                                        RoofMeasure::Concurrence, {}, 5);
    CHECK(res.value >= closed - 1e-9);
    CHECK(res.value <= closed + 2e-3);
}

TEST_CASE("ckw saturation check") {
    const auto w4 = WClassCoefficients(4, Complex{},
                                       {Complex{0.5}, Complex{0.5}, Complex{0.5}, Complex{0.5}});
    CHECK(ckw_saturation_check(w4) <= 1e-12);

    const auto vacuum =
        WClassCoefficients(3, Complex{1.0}, {Complex{}, Complex{}, Complex{}});
    CHECK(ckw_saturation_check(vacuum) <= 1e-15);

    std::mt19937_64 rng(111);
    for (int rep = 0; rep < 100; ++rep) {
        const auto c = sample_wclass(3 + rep % 4, rng);
        CHECK(ckw_saturation_check(c) <= 1e-10);
    }
}

TEST_CASE("negativity-track power bounds hold on general random pure states") {
    // The lem2/lem4 shapes are not W-class-specific: values are the spin-flip
    // concurrences of the pair reductions (the two-qubit convex-roof
    // negativity) and lhs is the pure-state negativity of the A|rest cut.
    std::mt19937_64 rng(2025);
    std::size_t lem4_applicable = 0;
    for (int rep = 0; rep < 500; ++rep) {
        const auto psi = sample_pure_state(4, rng);
        const auto cut = Bipartition::first_vs_rest(4);
        const double lhs = negativity_pure(psi, cut);
        std::vector<double> values;
        for (std::size_t i = 1; i < 4; ++i) {
            const DensityMatrix pair(reduce_pure(psi, {0, i}), DimList::qubits(2));
            values.push_back(concurrence_two_qubit(pair));
        }
        for (double x : {2.0, 3.0}) {
            const auto report = monogamy::neg_lower_lemma2(values, {x}, lhs);
            CHECK(report.satisfied);
        }
        const auto upper = monogamy::neg_upper_lemma4(values, {-1.0}, lhs);
        if (upper.applicable()) {
            ++lem4_applicable;
            CHECK(upper.satisfied);
        }
    }
    // most Haar-random states have at least one separable pair reduction
    INFO("lem4 applicable on ", lem4_applicable, " of 500 states");
    CHECK(lem4_applicable >= 1);
}

TEST_CASE("fuzz smoke run covers lem2") {
    FuzzConfig cfg;
    cfg.seed = 1;
    cfg.trials = 1;
    cfg.min_qubits = 4;
    cfg.max_qubits = 4;
    cfg.x_grid = {2.0};
    cfg.y_grid = {-1.0};
    const auto summary = run_fuzz(cfg);
    CHECK(summary.per_inequality.at("lem2").applicable >= 1);
    CHECK(summary.total_violations() == 0);
}

TEST_CASE("fuzz summaries are deterministic") {
    FuzzConfig cfg;
    cfg.seed = 2024;
    cfg.trials = 120;
    const auto s1 = run_fuzz(cfg);
    const auto s2 = run_fuzz(cfg);
    CHECK(s1.per_inequality.size() == s2.per_inequality.size());
    for (const auto& [id, tally] : s1.per_inequality) {
        const auto& other = s2.per_inequality.at(id);
        CHECK(tally.applicable == other.applicable);
        CHECK(tally.satisfied == other.satisfied);
        CHECK(tally.violated == other.violated);
        CHECK(tally.worst_distance == other.worst_distance);
        CHECK(tally.worst_seed == other.worst_seed);
    }
    CHECK(s1.max_pair_closed_vs_wootters == s2.max_pair_closed_vs_wootters);
}

TEST_CASE("fuzz covers every inequality id") {
    FuzzConfig cfg;
    cfg.seed = 5;
    cfg.trials = 400;
    const auto summary = run_fuzz(cfg);
    for (const auto& id : monogamy::all_inequality_ids()) {
        INFO("id = ", id);
        CHECK(summary.per_inequality.at(id).applicable >= 1);
    }
    CHECK(summary.total_violations() == 0);
}

TEST_CASE("fuzz id filter restricts the summary") {
    FuzzConfig cfg;
    cfg.seed = 6;
    cfg.trials = 40;
    cfg.id_filter = {"th3"};
    const auto summary = run_fuzz(cfg);
    CHECK(summary.per_inequality.size() == 1);
    CHECK(summary.per_inequality.count("th3") == 1);
    CHECK(summary.per_inequality.at("th3").applicable >= 1);
}

TEST_CASE("a corrupted weight base is caught by the harness") {
    FuzzConfig cfg;
    cfg.seed = 7;
    cfg.trials = 300;
    cfg.weight_base_scale = 2.0;
    const auto summary = run_fuzz(cfg);
    std::size_t weighted_violations = 0;
    for (const char* id : {"th1", "th2", "th4", "th5", "lem3", "eq2"})
        weighted_violations += summary.per_inequality.at(id).violated;
    CHECK(weighted_violations >= 1);
}

TEST_CASE("fuzz config validation") {
    FuzzConfig cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(run_fuzz(cfg), std::invalid_argument);
    cfg.trials = 1;
    cfg.x_grid = {1.0};
    CHECK_THROWS_AS(run_fuzz(cfg), std::invalid_argument);
    cfg.x_grid = {2.0};
    cfg.y_grid = {0.5};
    CHECK_THROWS_AS(run_fuzz(cfg), std::invalid_argument);
    cfg.y_grid = {-1.0};
    cfg.max_qubits = 1;
    CHECK_THROWS_AS(run_fuzz(cfg), std::invalid_argument);
}
