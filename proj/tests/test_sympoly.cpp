#include "oracles.hpp"

#include "ulp/sympoly.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using ulp::CosSymPoly;
using ulp::LaurentSymPoly;
using ulp::Partition;
using ulp::Rational;
using ulp::Signature;

namespace {

LaurentSymPoly laurent(int n, std::initializer_list<std::pair<Signature, Rational>> terms) {
    LaurentSymPoly p(n);
    for (const auto& [k, c] : terms) p.add_term(k, c);
    return p;
}

std::map<Signature, Rational> as_map(std::initializer_list<std::pair<Signature, Rational>> terms) {
    std::map<Signature, Rational> m;
    for (const auto& [k, c] : terms) m.emplace(k, c);
    return m;
}

Signature random_signature(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> d(-4, 4);
    std::vector<int> e(static_cast<std::size_t>(n));
    for (auto& v : e) v = d(rng);
    std::sort(e.begin(), e.end(), std::greater<>());
    return Signature(e);
}

} // namespace

TEST_CASE("signature decomposition") {
    const Signature k{2, 0, -1};
    CHECK(k.shift() == -1);
    CHECK(k.partition() == Partition({3, 1}));
    CHECK(Signature::from_partition({3, 1}, -1, 3) == k);
    CHECK(k.conjugate() == Signature{1, 0, -2});
    CHECK(Signature{0, 0}.is_trivial());
    CHECK_THROWS(Signature{0, 1});
    CHECK(k.to_string() == "(2,0,-1)");
}

TEST_CASE("m_poly") {
    CHECK(ulp::m_poly({1}, 2).coeffs() == std::map<Partition, Rational>{{Partition{1}, 1}});
    CHECK(ulp::m_poly({}, 3).coeffs() == std::map<Partition, Rational>{{Partition{}, 1}});
    CHECK(ulp::m_poly({2, 1}, 2).coeffs() == std::map<Partition, Rational>{{Partition{2, 1}, 1}});
    CHECK_THROWS_AS(ulp::m_poly({1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("schur_laurent small cases") {
    CHECK(ulp::schur_laurent(Signature{1, 0}) == laurent(2, {{Signature{1, 0}, 1}}));
    CHECK(ulp::schur_laurent(Signature{2, 0}) == laurent(2, {{Signature{2, 0}, 1}, {Signature{1, 1}, 1}}));
    CHECK(ulp::schur_laurent(Signature{0, -1}) == laurent(2, {{Signature{0, -1}, 1}}));
    CHECK(ulp::schur_laurent(Signature{1, -1}) == laurent(2, {{Signature{1, -1}, 1}, {Signature{0, 0}, 1}}));
}

TEST_CASE("bialternant examples") {
    const double a = 0.7, b = -1.9;
    const std::vector<double> quarter{std::numbers::pi / 2, -std::numbers::pi / 2};
    CHECK(std::abs(ulp::schur_eval_bialternant(Signature{1, 0}, quarter)) < 1e-12);
    CHECK(std::abs(ulp::schur_eval_bialternant(Signature{0, 0}, std::vector<double>{a, b}) - 1.0) < 1e-12);
    CHECK(std::abs(ulp::schur_eval_bialternant(Signature{1, 1}, std::vector<double>{a, b}) -
                   std::polar(1.0, a + b)) < 1e-12);
    CHECK_THROWS_AS(ulp::schur_eval_bialternant(Signature{1, 0}, std::vector<double>{0.3, 0.3}),
                    std::invalid_argument);
}

TEST_CASE("schur_laurent agrees with the bialternant") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = trial % 2 ? 3 : 2;
        const Signature k = random_signature(rng, n);
        std::vector<double> th(static_cast<std::size_t>(n));
        bool separated = false;
        while (!separated) {
            for (auto& t : th) t = angle(rng);
            separated = true;
            for (std::size_t i = 0; i < th.size(); ++i)
                for (std::size_t j = i + 1; j < th.size(); ++j)
                    if (std::abs(std::remainder(th[i] - th[j], 2 * std::numbers::pi)) < 0.05) separated = false;
        }
        const auto lhs = ulp::schur_laurent(k).evaluate(th);
        const auto rhs = ulp::schur_eval_bialternant(k, th);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("cos_to_laurent examples") {
    CHECK(ulp::cos_to_laurent(ulp::m_poly({1}, 2)) ==
          laurent(2, {{Signature{1, 0}, Rational(1, 2)}, {Signature{0, -1}, Rational(1, 2)}}));
    CHECK(ulp::cos_to_laurent(CosSymPoly::constant(3, 1)) == laurent(3, {{Signature{0, 0, 0}, 1}}));
    CHECK(ulp::cos_to_laurent(ulp::m_poly({1, 1}, 2)) ==
          laurent(2, {{Signature{1, 1}, Rational(1, 4)},
                      {Signature{1, -1}, Rational(1, 4)},
                      {Signature{-1, -1}, Rational(1, 4)}}));
}

TEST_CASE("cos_to_laurent is inversion invariant") {
    for (const auto& mu : ulp::generate_partitions(6, 3)) {
        const auto mono = oracle::expand_orbits(ulp::cos_to_laurent(ulp::m_poly(mu, 3)));
        for (const auto& [e, c] : mono) {
            for (std::size_t j = 0; j < e.size(); ++j) {
                auto f = e;
                f[j] = -f[j];
                auto it = mono.find(f);
                REQUIRE(it != mono.end());
                CHECK(it->second == c);
            }
        }
    }
}

TEST_CASE("schur_expand examples") {
    CHECK(ulp::schur_expand(laurent(2, {{Signature{1, 0}, 1}})) == as_map({{Signature{1, 0}, 1}}));
    CHECK(ulp::schur_expand(ulp::cos_to_laurent(ulp::m_poly({1}, 2))) ==
          as_map({{Signature{1, 0}, Rational(1, 2)}, {Signature{0, -1}, Rational(1, 2)}}));
    auto q = ulp::m_poly({1, 1}, 2);
    q += CosSymPoly::constant(2, Rational(1, 4));
    CHECK(ulp::schur_expand(ulp::cos_to_laurent(q)) == as_map({{Signature{1, 1}, Rational(1, 4)},
                                                                {Signature{1, -1}, Rational(1, 4)},
                                                                {Signature{-1, -1}, Rational(1, 4)}}));
}

TEST_CASE("schur_expand round trip and alternant oracle") {
    for (int n : {2, 3}) {
        for (const auto& mu : ulp::generate_partitions(8, n)) {
            const auto lp = ulp::cos_to_laurent(ulp::m_poly(mu, n));
            const auto coeffs = ulp::schur_expand(lp);
            LaurentSymPoly back(n);
            for (const auto& [k, c] : coeffs) {
                LaurentSymPoly term = ulp::schur_laurent(k);
                term *= c;
                back += term;
            }
            CHECK(back == lp);
            CHECK(coeffs == oracle::schur_expand_alternant(lp));
        }
    }
}

TEST_CASE("expansions of real polynomials are conjugation symmetric") {
    for (int n : {2, 3, 4}) {
        for (const auto& mu : ulp::generate_partitions(n == 4 ? 5 : 7, n)) {
            const auto coeffs = ulp::schur_expand(ulp::cos_to_laurent(ulp::m_poly(mu, n)));
            for (const auto& [k, c] : coeffs) {
                auto it = coeffs.find(k.conjugate());
                REQUIRE(it != coeffs.end());
                CHECK(it->second == c);
            }
        }
    }
}

TEST_CASE("weyl dimension") {
    CHECK(ulp::weyl_dimension(Signature{0, 0, 0}) == 1);
    CHECK(ulp::weyl_dimension(Signature{1, 0}) == 2);
    CHECK(ulp::weyl_dimension(Signature{2, 0}) == 3);
    CHECK(ulp::weyl_dimension(Signature{3, 1, -2}) == ulp::weyl_dimension(Signature{5, 3, 0}));
    for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : ulp::generate_partitions(6, n)) {
            std::vector<int> shape(lambda.parts().begin(), lambda.parts().end());
            const auto count = oracle::count_tableaux(shape, n, {});
            for (int s : {-2, 0, 1}) CHECK(ulp::weyl_dimension(Signature::from_partition(lambda, s, n)) == count);
        }
}

TEST_CASE("weyl dimension is the character at the identity") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const int n = 2 + t % 3;
        const Signature k = random_signature(rng, n);
        const auto v = ulp::schur_laurent(k).evaluate(std::vector<double>(static_cast<std::size_t>(n), 0.0));
        CHECK(v.real() == doctest::Approx(static_cast<double>(ulp::weyl_dimension(k))));
    }
}

TEST_CASE("eval_cos_poly") {
    CHECK(ulp::eval_cos_poly(ulp::m_poly({1}, 2), std::vector<double>{1, 1}) == 2.0);
    CHECK(ulp::eval_cos_poly(ulp::m_poly({1, 1}, 2), std::vector<double>{1, -1}) == -1.0);
    CHECK(ulp::eval_cos_poly(ulp::m_poly({2}, 2), std::vector<double>{0.5, 0.5}) == 0.5);
    std::map<Partition, double> f{{Partition{2, 1}, 2.0}, {Partition{}, -1.0}};
    // 2 (y1^2 y2 + y1 y2^2 + ... over 3 variables) - 1 at (1, 2, 3)
    const double expect = 2.0 * (1 * 2 + 1 * 4 + 1 * 3 + 1 * 9 + 4 * 3 + 2 * 9) - 1.0;
    CHECK(ulp::eval_cos_poly(f, std::vector<double>{1, 2, 3}) == doctest::Approx(expect));
}

TEST_CASE("cos polynomial products match pointwise products") {
    const auto a = ulp::m_poly({2, 1}, 3) + ulp::m_poly({1}, 3) * Rational(-3, 2);
    const auto b = ulp::m_poly({1, 1}, 3) + CosSymPoly::constant(3, Rational(1, 3));
    const auto ab = a * b;
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> y{u(rng), u(rng), u(rng)};
        CHECK(ulp::eval_cos_poly(ab, y) ==
              doctest::Approx(ulp::eval_cos_poly(a, y) * ulp::eval_cos_poly(b, y)).epsilon(1e-12));
    }
}
