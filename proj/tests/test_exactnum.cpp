#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>

#include "dpt/exactnum.hpp"

using namespace dpt;

namespace {

CycloScalar random_scalar(const FieldContext& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 4), expo(0, 4 * (f.K + f.N));
  CycloScalar s = f.zero();
  for (int k = 0; k < 3; ++k) s += f.rational(Rational(coef(rng), den(rng))) * f.v_pow(expo(rng));
  return s;
}

}  // namespace

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(euler_phi(10) == 4);
  CHECK(euler_phi(22) == 10);
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(1) == 1);
  // Phi_n has exactly the primitive n-th roots of unity as zeros.
  for (int n = 1; n <= 30; ++n) {
    auto phi = cyclotomic_polynomial(n);
    REQUIRE(static_cast<int>(phi.size()) - 1 == euler_phi(n));
    for (int k = 0; k < n; ++k) {
      std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi * k / n), val = 0, zp = 1;
      for (auto& c : phi) {
        val += c.get_d() * zp;
        zp *= z;
      }
      bool primitive = std::gcd(k, n) == 1;
      CHECK((std::abs(val) < 1e-8) == primitive);
    }
  }
}

TEST_CASE("field context") {
  auto f = make_field(3, 2);
  CHECK(f.field->conductor() == 10);
  CHECK(f.order_q() == 5);
  auto q = f.q_pow(1);
  for (int j = 1; j < 5; ++j) CHECK_FALSE(q.pow(j).is_one());
  CHECK(q.pow(5).is_one());
  CHECK(f.v_pow(1) * f.v_pow(1) == q);

  auto g = make_field(1, 1);
  CHECK(g.field->conductor() == 4);
  CHECK(g.q_pow(1) == g.rational(-1));

  CHECK(make_field(7, 4).field->degree() == 10);
  CHECK_THROWS_AS(make_field(0, 2), std::invalid_argument);
}

TEST_CASE("basic field operations") {
  auto f = make_field(3, 2);
  auto q = f.q_pow(1);
  CHECK((f.one() + q + q.pow(2) + q.pow(3) + q.pow(4)).is_zero());
  CHECK((q * q.pow(4)).is_one());
  CHECK(q.pow(-1) == q.pow(4));
  CHECK(q.inverse() == f.q_pow(4));
}

TEST_CASE("inversion") {
  // order(q) = 3: K + N = 3.
  auto f = make_field(2, 1);
  auto q = f.q_pow(1);
  auto x = f.one() - q;
  CHECK(x.inverse() == (f.rational(2) + q) * f.rational(Rational(1, 3)));
  CHECK(f.q_pow(4).inverse() == f.q_pow(-4));
  CHECK_THROWS_AS(f.zero().inverse(), std::domain_error);
}

TEST_CASE("complex embedding") {
  auto f = make_field(3, 2);
  auto q = f.q_pow(1);
  CHECK(std::abs(q.embed(1) - std::polar(1.0, 4 * std::numbers::pi / 10)) < 1e-12);
  auto x = f.one() - q;
  CHECK(std::abs(x.embed(1) * x.inverse().embed(1) - 1.0) < 1e-9);
  CHECK(std::abs(f.zero().embed(1)) == 0.0);
  CHECK_THROWS_AS(q.embed(5), std::invalid_argument);
}

TEST_CASE("ring axioms on random scalars") {
  std::mt19937 rng(7);
  for (auto [K, N] : {std::pair{3, 2}, {4, 3}, {7, 4}, {2, 2}}) {
    auto f = make_field(K, N);
    for (int trial = 0; trial < 30; ++trial) {
      auto x = random_scalar(f, rng), y = random_scalar(f, rng), z = random_scalar(f, rng);
      CHECK((x + y) + z == x + (y + z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * y == y * x);
      // Embedding is a ring homomorphism for every primitive root.
      int n = f.field->conductor();
      for (int k = 1; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        CHECK(std::abs((x * y).embed(k) - x.embed(k) * y.embed(k)) < 1e-8);
      }
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    }
  }
}

TEST_CASE("q^m = t^K = t^-N") {
  for (int K = 1; K <= 5; ++K)
    for (int N = 1; N <= 5; ++N)
      for (int a = -4; a <= 6; ++a)
        for (int b = -3; b <= 3; ++b) {
          long m = static_cast<long>(a) * N - static_cast<long>(b) * K;
          if (m <= 0) continue;
          auto f = make_field(K, N);
          auto t = f.q_pow(-(a + b));
          CHECK(f.q_pow(m) == t.pow(K));
          CHECK(f.q_pow(m) == t.pow(-N));
        }
}

TEST_CASE("json round trip") {
  auto f = make_field(3, 2);
  auto x = f.rational(Rational(3, 7)) + f.q_pow(1) * f.rational(-2);
  auto j = x.to_json();
  CHECK(j["conductor"] == 10);
  CHECK(j["coefficients"][0] == "3/7");
  CHECK(CycloScalar::from_json(j) == x);
  auto g = make_field(2, 2);
  CHECK_THROWS_AS(x + g.one(), std::invalid_argument);
}
