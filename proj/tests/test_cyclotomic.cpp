#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fszlab/cyclotomic.hpp"

using namespace fszlab;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<int64_t>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(5) == std::vector<int64_t>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<int64_t>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<int64_t>{1, 0, -1, 0, 1});
    // degree phi(d) throughout
    for (int64_t d : {7, 9, 10, 15, 30, 105})
        CHECK(static_cast<int64_t>(cyclotomic_polynomial(d).size()) == euler_phi(d) + 1);
}

TEST_CASE("normalization") {
    // zeta_4^2 = -1
    CHECK(CycNum::root_of_unity(4, 2) == CycNum::integer(-1));
    // 1 + zeta_5 + ... + zeta_5^4 = 0
    CycNum sum;
    for (int k = 0; k < 5; ++k) sum = sum + CycNum::root_of_unity(5, k);
    CHECK(sum.is_zero());
    // 2/2 = 1
    CHECK(CycNum::rational(2, 2) == CycNum::integer(1));
    CHECK(CycNum::rational(2, 2).denominator() == 1);
    CHECK_THROWS_AS(CycNum::rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(CycNum::from_coeffs(5, {1, 0, 0, 0, 0}, 0), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    CycNum a = CycNum::root_of_unity(5, 1) + CycNum::root_of_unity(5, 4);
    CHECK(a + CycNum() == a);
    // (z + z^4)(z^2 + z^3) = z + z^2 + z^3 + z^4 = -1
    CycNum b = CycNum::root_of_unity(5, 2) + CycNum::root_of_unity(5, 3);
    CHECK(a * b == CycNum::integer(-1));
    // (1/5)(5 z) = z
    CHECK(CycNum::root_of_unity(5, 1).scaled(5, 1).scaled(1, 5) == CycNum::root_of_unity(5, 1));
    // mixed conductors lift to the lcm
    CHECK(CycNum::root_of_unity(4, 2) + CycNum::root_of_unity(3, 0) == CycNum::integer(0));
}

TEST_CASE("classification") {
    CHECK(CycNum::integer(3).classify() == CycKind::Integer);
    CHECK(CycNum::rational(1, 2).classify() == CycKind::RationalNonInteger);
    CycNum golden = CycNum::root_of_unity(5, 1) + CycNum::root_of_unity(5, 4);
    CHECK(golden.classify() == CycKind::Irrational);
    CHECK(golden.is_real());
    auto [num, den] = CycNum::rational(-6, 4).as_rational();
    CHECK(num == -3);
    CHECK(den == 2);
    CHECK_THROWS_AS(golden.as_rational(), std::domain_error);
}

TEST_CASE("galois action") {
    CycNum half = CycNum::rational(1, 2);
    CHECK(half.galois(3 % 1 == 0 ? 1 : 3) == half);  // rationals fixed
    CHECK(CycNum::root_of_unity(5, 1).galois(4) == CycNum::root_of_unity(5, 4));
    CycNum golden = CycNum::root_of_unity(5, 1) + CycNum::root_of_unity(5, 4);
    CHECK(golden.galois(4) == golden);
    CHECK_THROWS_AS(CycNum::root_of_unity(6, 1).galois(2), std::invalid_argument);
}

TEST_CASE("galois round trip and homomorphism") {
    std::mt19937_64 rng(991);
    for (int64_t d : {5, 8, 12, 15, 16, 30}) {
        auto random_value = [&]() {
            std::vector<int64_t> raw(static_cast<size_t>(d));
            for (auto& c : raw) c = static_cast<int64_t>(rng() % 11) - 5;
            return CycNum::from_coeffs(d, std::move(raw), 1 + static_cast<int64_t>(rng() % 4));
        };
        std::vector<int64_t> units;
        for (int64_t q = 1; q < d; ++q)
            if (std::gcd(q, d) == 1) units.push_back(q);
        for (int rep = 0; rep < 40; ++rep) {
            CycNum a = random_value(), b = random_value();
            int64_t q = units[rng() % units.size()];
            int64_t q2 = units[rng() % units.size()];
            CHECK(a.galois(q).galois(q2) == a.galois(q * q2 % d));
            CHECK((a + b).galois(q) == a.galois(q) + b.galois(q));
            CHECK((a * b).galois(q) == a.galois(q) * b.galois(q));
        }
    }
}

TEST_CASE("rendering") {
    CHECK(CycNum::integer(3).to_string() == "3");
    CHECK(CycNum().to_string() == "0");
    std::string s = (CycNum::root_of_unity(5, 1) + CycNum::root_of_unity(5, 4)).to_string();
    CHECK(s.find("conductor 5") != std::string::npos);
    std::string t = CycNum::rational(1, 2).to_string();
    CHECK(t.find("/2") != std::string::npos);
}

TEST_CASE("overflow aborts loudly") {
    CycNum big = CycNum::integer(INT64_MAX / 2);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}
