#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace dpt {

using Integer = mpz_class;
using Rational = mpq_class;

/// Q(zeta_n) presented as Q[x]/Phi_n(x). Instances are interned per conductor.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int conductor);

  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  /// Coefficients of Phi_n, lowest degree first; monic.
  const std::vector<Integer>& modulus() const { return phi_; }

  explicit CyclotomicField(int conductor);

 private:
  int n_;
  std::vector<Integer> phi_;
};

int euler_phi(int n);
std::vector<Integer> cyclotomic_polynomial(int n);

class CycloScalar {
 public:
  CycloScalar() = default;
  explicit CycloScalar(std::shared_ptr<const CyclotomicField> field);
  CycloScalar(std::shared_ptr<const CyclotomicField> field, const Rational& r);

  static CycloScalar zeta_power(std::shared_ptr<const CyclotomicField> field, long k);

  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar operator-() const;
  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
  friend bool operator==(const CycloScalar& a, const CycloScalar& b);

  /// Throws std::domain_error on zero.
  CycloScalar inverse() const;
  CycloScalar pow(long k) const;

  /// Image under x -> exp(2 pi i * root_index / n). Intended for numeric cross-checks only.
  std::complex<double> embed(int root_index = 1) const;

  nlohmann::json to_json() const;
  static CycloScalar from_json(const nlohmann::json& j);
  std::string to_string() const;

 private:
  void reduce(std::vector<Rational>& p) const;
  void check_same_field(const CycloScalar& o) const;

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> c_;  // length == field degree
};

/// Scalars attached to parameters (K, N): zeta = v has order 2(K+N) and q = v^2.
struct FieldContext {
  int K = 0;
  int N = 0;
  std::shared_ptr<const CyclotomicField> field;

  CycloScalar v_pow(long k) const { return CycloScalar::zeta_power(field, k); }
  CycloScalar q_pow(long k) const { return CycloScalar::zeta_power(field, 2 * k); }
  CycloScalar one() const { return CycloScalar(field, Rational(1)); }
  CycloScalar zero() const { return CycloScalar(field); }
  CycloScalar rational(const Rational& r) const { return CycloScalar(field, r); }
  int order_q() const { return K + N; }
};

FieldContext make_field(int K, int N);

}  // namespace dpt
