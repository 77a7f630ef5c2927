#include <catch2/catch_amalgamated.hpp>

#include "ybx/analysis.hpp"
#include "ybx/corpus.hpp"
#include "ybx/quotients.hpp"

using namespace ybx;

TEST_CASE("biquandles are fixed points of the biquandle quotient") {
    for (const Solution& s : {twist_solution(3), dihedral_quandle_3(), one_flip_quandle_3(), involutive_six()}) {
        auto res = bq_quotient(s);
        CHECK(res.kernel.is_identity());
        CHECK(res.quotient.same_tables(s));
        CHECK(res.iterations == 1);
    }
}

TEST_CASE("the cycle solution collapses to a point under the biquandle quotient") {
    auto res = bq_quotient(cycle_rack_solution(3));
    CHECK(res.kernel.is_total());
    CHECK(res.quotient.n == 1);
    CHECK(classify(res.quotient).biquandle);
}

TEST_CASE("biquandle quotient output is always a biquandle on the corpus") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& s : enumerate_solutions(n)) {
            auto res = bq_quotient(s);
            CHECK(classify(res.quotient).biquandle);
            CHECK(validate(res.quotient).ok());
            CHECK(res.iterations == 1);
        }
    }
}

TEST_CASE("retract kernels") {
    CHECK(retract(twist_solution(4)).quotient.n == 1);
    CHECK(retract(dihedral_quandle_3()).kernel.is_identity());
    auto flip = retract(one_flip_quandle_3());
    CHECK(partition_string(flip.kernel) == "{0,1}|{2}");
    CHECK(flip.quotient.n == 2);
    CHECK(flip.quotient.same_tables(twist_solution(2)));
}

TEST_CASE("retract kernel agrees with the lambda-rho version on the corpus") {
    for (const auto& s : enumerate_solutions(3)) {
        auto ker = retract(s).kernel;
        detail::UnionFind uf(s.n);
        for (int x = 0; x < s.n; ++x) {
            for (int y = x + 1; y < s.n; ++y) {
                if (s.lambda[static_cast<std::size_t>(x)] == s.lambda[static_cast<std::size_t>(y)] &&
                    s.rho[static_cast<std::size_t>(x)] == s.rho[static_cast<std::size_t>(y)]) {
                    uf.unite(x, y);
                }
            }
        }
        CHECK(uf.partition() == ker);
    }
}

TEST_CASE("multipermutation levels") {
    CHECK(multipermutation_level(twist_solution(3)).finite);
    CHECK(multipermutation_level(twist_solution(3)).level == 1);
    CHECK_FALSE(multipermutation_level(dihedral_quandle_3()).finite);
    auto flip = multipermutation_level(one_flip_quandle_3());
    CHECK((flip.finite && flip.level == 2));
    auto six = multipermutation_level(involutive_six());
    CHECK((six.finite && six.level == 3));  // frozen from the iterated-retraction run
    Solution point = twist_solution(1);
    CHECK(multipermutation_level(point).level == 0);
}

TEST_CASE("injectivization of the fixtures") {
    auto dih = injectivization(dihedral_quandle_3());
    CHECK(dih.status == QuotientStatus::Exact);
    CHECK(dih.kernel.is_identity());

    auto flip = injectivization(one_flip_quandle_3());
    CHECK(flip.status == QuotientStatus::Exact);
    CHECK(partition_string(flip.kernel) == "{0,1}|{2}");
    CHECK(flip.quotient.n == 2);
    CHECK(validate(flip.quotient).ok());

    auto cyc = injectivization(cycle_rack_solution(3));
    CHECK(cyc.status == QuotientStatus::Exact);
    CHECK(cyc.quotient.n == 1);
}

TEST_CASE("injectivity tri-state") {
    CHECK(is_injective(dihedral_quandle_3()) == Tristate::True);
    CHECK(is_injective(one_flip_quandle_3()) == Tristate::False);
    CHECK(is_injective(cycle_rack_solution(3)) == Tristate::False);
    CHECK(is_injective(flip_2()) == Tristate::True);
}

TEST_CASE("kernel chain: biquandle quotient refines injectivization on the corpus") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& s : enumerate_solutions(n)) {
            auto inj = injectivization(s, 3, 200000);
            if (inj.status != QuotientStatus::Exact) continue;
            CHECK(bq_quotient(s).kernel.refines(inj.kernel));
        }
    }
}

TEST_CASE("decomposability is invariant under both quotients on the small corpus") {
    for (int n = 1; n <= 2; ++n) {
        for (const auto& s : enumerate_solutions(n)) {
            int nmax = max_decomposability(s).n_max;
            CHECK(max_decomposability(bq_quotient(s).quotient).n_max == nmax);
            auto inj = injectivization(s, 3, 200000);
            if (inj.status == QuotientStatus::Exact) {
                CHECK(max_decomposability(inj.quotient).n_max == nmax);
            }
        }
    }
}

TEST_CASE("retracts of injective fixtures stay injective") {
    for (const Solution& s : {dihedral_quandle_3(), flip_2(), twist_solution(3)}) {
        REQUIRE(is_injective(s) == Tristate::True);
        auto ret = retract(s);
        if (ret.quotient.n >= 2) {
            CHECK(is_injective(ret.quotient) == Tristate::True);
        }
    }
}

TEST_CASE("singleton solutions quotient trivially") {
    Solution pt = twist_solution(1);
    CHECK(bq_quotient(pt).quotient.n == 1);
    CHECK(retract(pt).quotient.n == 1);
    CHECK(injectivization(pt).kernel.is_identity());
}
