#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qrpoly/quat.hpp"

using namespace qrpoly;

namespace {

Quat random_quat(std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    return {dist(rng), dist(rng), dist(rng), dist(rng)};
}

}  // namespace

TEST_CASE("quaternion unit table") {
    const Quat units[3] = {Quat::e1(), Quat::e2(), Quat::e3()};
    // e_i e_j = -delta_ij + eps_ijk e_k, all nine pairs.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Quat expected;
            if (i == j) {
                expected = Quat::real(-1.0);
            } else {
                const int k = 3 - i - j;
                const double sign = ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
                expected = sign * units[k];
            }
            CHECK(approx_equal(multiply(units[i], units[j]), expected, 1e-15));
        }
    }
    CHECK(approx_equal(multiply(Quat::e1(), Quat::e2()), Quat::e3(), 1e-15));
}

TEST_CASE("product examples") {
    std::mt19937 rng(7);
    const Quat q = random_quat(rng);
    CHECK(approx_equal(multiply(q, Quat::real(1.0)), q, 1e-15));

    const Quat a{1, 1, 0, 0};
    const Quat b{1, 0, 1, 0};
    CHECK(approx_equal(multiply(a, b), Quat{1, 1, 1, 1}, 1e-15));
}

TEST_CASE("scalar product") {
    CHECK(scalar_product(Quat::e1(), Quat::e2()) == doctest::Approx(0.0));
    CHECK(scalar_product(Quat{1, 1, 0, 0}, Quat{1, -1, 0, 0}) == doctest::Approx(0.0));

    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Quat q = random_quat(rng);
        CHECK(scalar_product(q, q) == doctest::Approx(q.norm2()).epsilon(1e-12));
        // Matches the sandwich definition (conj(p) q + conj(q) p) / 2.
        const Quat p = random_quat(rng);
        const Quat half = 0.5 * (p.conj() * q + q.conj() * p);
        CHECK(half.w == doctest::Approx(scalar_product(p, q)).epsilon(1e-12));
        CHECK(std::abs(half.x) < 1e-12);
    }
}

TEST_CASE("rotor") {
    CHECK(approx_equal(rotor(0.0), Quat::real(1.0), 1e-15));
    CHECK(approx_equal(rotor(kPi / 2.0), Quat::e1(), 1e-15));

    Quat p = Quat::real(1.0);
    const Quat r = rotor(kPi / 3.0);
    for (int i = 0; i < 6; ++i) p = p * r;
    CHECK(approx_equal(p, Quat::real(1.0), 1e-12));
}

TEST_CASE("norm multiplicative and associative") {
    std::mt19937 rng(13);
    for (int i = 0; i < 10000; ++i) {
        const Quat p = random_quat(rng);
        const Quat q = random_quat(rng);
        CHECK((p * q).norm() == doctest::Approx(p.norm() * q.norm()).epsilon(1e-10));
    }
    for (int i = 0; i < 2000; ++i) {
        const Quat p = random_quat(rng);
        const Quat q = random_quat(rng);
        const Quat r = random_quat(rng);
        CHECK(approx_equal((p * q) * r, p * (q * r), 1e-12));
    }
}

TEST_CASE("conjugation involution") {
    std::mt19937 rng(17);
    const Quat q = random_quat(rng);
    CHECK(approx_equal(q.conj().conj(), q, 0.0));
}

TEST_CASE("pair transform actions") {
    std::mt19937 rng(19);
    const Quat lam = random_quat(rng);

    SUBCASE("r1 = [1,-1]* negates the real part of a complex argument") {
        const PairTransform r1{Quat::real(1.0), Quat::real(-1.0), true};
        const Quat z{0.7, -0.3, 0, 0};
        CHECK(approx_equal(act(r1, z), Quat{-0.7, -0.3, 0, 0}, 1e-15));
    }
    SUBCASE("identity pair") {
        const PairTransform id{Quat::real(1.0), Quat::real(1.0), false};
        CHECK(approx_equal(act(id, lam), lam, 0.0));
    }
    SUBCASE("r3 = [e2,-e2]* negates the e2 component") {
        const PairTransform r3{Quat::e2(), -Quat::e2(), true};
        const Quat z{0, 0, 1.4, 0};
        CHECK(approx_equal(act(r3, z), Quat{0, 0, -1.4, 0}, 1e-15));
        const Quat full{0.2, 0.5, 1.4, -0.1};
        const Quat img = act(r3, full);
        CHECK(img.y == doctest::Approx(-1.4));
        CHECK(img.w == doctest::Approx(0.2));
    }
    SUBCASE("unit pairs preserve the norm") {
        for (int i = 0; i < 100; ++i) {
            std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
            const PairTransform t{rotor(ang(rng)), rotor(ang(rng)) * Quat::e2(), i % 2 == 0};
            const Quat v = random_quat(rng);
            CHECK(act(t, v).norm() == doctest::Approx(v.norm()).epsilon(1e-12));
        }
    }
    SUBCASE("[s,t] and [-s,-t] induce the same matrix") {
        for (int i = 0; i < 50; ++i) {
            const Quat s = random_quat(rng);
            const Quat t = random_quat(rng);
            const PairTransform a{s, t, i % 2 == 0};
            const PairTransform b{-s, -t, i % 2 == 0};
            const auto ma = a.matrix();
            const auto mb = b.matrix();
            for (int k = 0; k < 16; ++k) CHECK(ma[k] == doctest::Approx(mb[k]).epsilon(1e-12));
        }
    }
}

TEST_CASE("dicyclic root system") {
    SUBCASE("n=2 gives the quaternion group of order 8") {
        const auto elems = dicyclic_root_system(2);
        REQUIRE(elems.size() == 8);
        const Quat expected[8] = {Quat::real(1.0),  Quat::real(-1.0), Quat::e1(), -Quat::e1(),
                                  Quat::e2(),       -Quat::e2(),      Quat::e3(), -Quat::e3()};
        for (const Quat& e : expected) {
            bool found = false;
            for (const Quat& q : elems)
                if (approx_equal(q, e, 1e-12)) found = true;
            CHECK(found);
        }
    }
    SUBCASE("n=3 has 12 unit elements") {
        const auto elems = dicyclic_root_system(3);
        REQUIRE(elems.size() == 12);
        for (const Quat& q : elems) CHECK(q.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("closed under multiplication") {
        for (int n : {2, 3, 4, 5, 6}) {
            const auto elems = dicyclic_root_system(n);
            CHECK(elems.size() == 4 * static_cast<std::size_t>(n));
            for (const Quat& p : elems) {
                for (const Quat& q : elems) {
                    const Quat prod = p * q;
                    bool found = false;
                    for (const Quat& r : elems)
                        if (approx_equal(prod, r, 1e-9)) found = true;
                    CHECK(found);
                }
            }
        }
    }
    SUBCASE("rejects bad n") { CHECK_THROWS_AS(dicyclic_root_system(1), std::invalid_argument); }
}

TEST_CASE("aut group order n=2") { CHECK(aut_group_order(2) == 64); }

TEST_CASE("aut group order matches 16 n^2") {
    for (int n : {2, 3, 4}) CHECK(aut_group_order(n) == 16L * n * n);
}
