#include "wmono/wclass.hpp"

#include "wmono/measures.hpp"
#include "wmono/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace wmono;

namespace {

WClassCoefficients uniform_w4() {
    return WClassCoefficients(4, Complex{},
                              {Complex{0.5}, Complex{0.5}, Complex{0.5}, Complex{0.5}});
}

} // namespace

TEST_CASE("build_state places amplitudes on the single-excitation basis") {
    const auto psi = build_state(uniform_w4());
    const auto& amp = psi.amplitudes();
    CHECK(amp.size() == 16);
    CHECK(amp[8] == Complex{0.5});  // |1000>
    CHECK(amp[4] == Complex{0.5});  // |0100>
    CHECK(amp[2] == Complex{0.5});  // |0010>
    CHECK(amp[1] == Complex{0.5});  // |0001>
    for (std::size_t i : {0, 3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15})
        CHECK(amp[i] == Complex{});

    const auto product = build_state(WClassCoefficients(2, Complex{}, {Complex{1.0}, Complex{}}));
    CHECK(product.amplitudes()[2] == Complex{1.0}); // |10>

    const auto vacuum =
        build_state(WClassCoefficients(3, Complex{1.0}, {Complex{}, Complex{}, Complex{}}));
    CHECK(vacuum.amplitudes()[0] == Complex{1.0});
}

TEST_CASE("coefficients must be normalized") {
    CHECK_THROWS_AS(WClassCoefficients(2, Complex{1.0}, {Complex{0.5}, Complex{}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(WClassCoefficients(1, Complex{1.0}, {Complex{}}), std::invalid_argument);
    const auto rescaled = WClassCoefficients::normalized(2, Complex{3.0}, {Complex{4.0}, Complex{}});
    CHECK(std::abs(rescaled.a()) == doctest::Approx(0.6).epsilon(1e-15));
}

TEST_CASE("reduce with the full selection is the projector") {
    const auto c = uniform_w4();
    const auto rho = reduce(c, SubsystemSelection::full(4));
    const auto proj = projector(build_state(c));
    CHECK((rho.matrix() - proj.matrix()).max_abs() < 1e-15);
}

TEST_CASE("reduce of the uniform W to A,B1") {
    const auto rho = reduce(uniform_w4(), SubsystemSelection{{1}});
    const auto& m = rho.matrix();
    CHECK(std::abs(m(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(m(1, 1) - 0.25) < 1e-15);
    CHECK(std::abs(m(2, 2) - 0.25) < 1e-15);
    CHECK(std::abs(m(3, 3)) < 1e-15);
    CHECK(std::abs(m(1, 2) - 0.25) < 1e-15);
}

TEST_CASE("reductions have rank at most 2") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 25; ++rep) {
        const std::size_t n = 3 + rng() % 3;
        const auto c = verify::sample_wclass(n, rng);
        SubsystemSelection sel;
        for (std::size_t j = 1; j < n; ++j)
            if (rng() % 2 == 0) sel.block.push_back(j);
        if (sel.block.empty()) sel.block.push_back(1);
        const auto rho = reduce(c, sel);
        const auto eig = hermitian_eig(rho.matrix());
        CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
        if (eig.eigenvalues.size() > 2) CHECK(eig.eigenvalues[2] <= 1e-10);
        CHECK(eig.eigenvalues.back() >= -1e-10);
    }
}

TEST_CASE("selection validation") {
    const auto c = uniform_w4();
    CHECK_THROWS_AS(reduce(c, SubsystemSelection{{0}}), std::invalid_argument);
    CHECK_THROWS_AS(reduce(c, SubsystemSelection{{4}}), std::invalid_argument);
    CHECK_THROWS_AS(reduce(c, SubsystemSelection{{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(reduce(c, SubsystemSelection{{}}), std::invalid_argument);
    CHECK_THROWS_AS(pair_concurrence_closed(c, 0), std::invalid_argument);
    CHECK_THROWS_AS(pair_concurrence_closed(c, 4), std::invalid_argument);
}

TEST_CASE("closed pair concurrence") {
    const auto c = uniform_w4();
    for (std::size_t i = 1; i <= 3; ++i)
        CHECK(pair_concurrence_closed(c, i) == doctest::Approx(0.5).epsilon(1e-15));

    const auto detached = WClassCoefficients::normalized(
        3, Complex{0.5}, {Complex{}, Complex{0.6}, Complex{0.4}});
    CHECK(pair_concurrence_closed(detached, 1) == 0.0);
    CHECK(pair_concurrence_closed(detached, 2) == 0.0);
}

TEST_CASE("closed pair concurrence matches the spin-flip value on random states") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 3 + rng() % 4;
        const auto c = verify::sample_wclass(n, rng);
        const auto psi = build_state(c);
        for (std::size_t i = 1; i < n; ++i) {
            const DensityMatrix pair(reduce_pure(psi, {0, i}), DimList::qubits(2));
            CHECK(std::abs(concurrence_two_qubit(pair) - pair_concurrence_closed(c, i)) <= 1e-10);
        }
    }
}

TEST_CASE("closed block concurrence") {
    const auto c = uniform_w4();
    CHECK(block_concurrence_closed(c, SubsystemSelection::full(4)) ==
          doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
    for (std::size_t i = 1; i <= 3; ++i)
        CHECK(block_concurrence_closed(c, SubsystemSelection{{i}}) ==
              doctest::Approx(pair_concurrence_closed(c, i)).epsilon(1e-15));
}

TEST_CASE("squared block value equals the pair square sum") {
    std::mt19937_64 rng(14);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 3 + rng() % 4;
        const auto c = verify::sample_wclass(n, rng);
        SubsystemSelection sel;
        for (std::size_t j = 1; j < n; ++j)
            if (rng() % 3 != 0) sel.block.push_back(j);
        if (sel.block.empty()) sel.block.push_back(n - 1);
        const double block = block_concurrence_closed(c, sel);
        double sum = 0.0;
        for (auto j : sel.block) {
            const double p = pair_concurrence_closed(c, j);
            sum += p * p;
        }
        CHECK(std::abs(block * block - sum) <= 1e-12);
    }
}

TEST_CASE("block value grows with the block") {
    std::mt19937_64 rng(15);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t n = 4 + rng() % 3;
        const auto c = verify::sample_wclass(n, rng);
        SubsystemSelection small{{1}};
        SubsystemSelection larger{{1}};
        for (std::size_t j = 2; j < n; ++j) {
            larger.block.push_back(j);
            CHECK(block_concurrence_closed(c, larger) >=
                  block_concurrence_closed(c, small) - 1e-15);
            small = larger;
        }
    }
}

TEST_CASE("full block value matches the pure-state concurrence") {
    std::mt19937_64 rng(16);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 2 + rng() % 5;
        const auto c = verify::sample_wclass(n, rng);
        const double closed = block_concurrence_closed(c, SubsystemSelection::full(n));
        const double pure =
            concurrence_pure(build_state(c), Bipartition::first_vs_rest(n));
        CHECK(std::abs(closed - pure) <= 1e-12);
    }
}
