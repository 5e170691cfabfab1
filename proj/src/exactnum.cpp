#include "dpt/exactnum.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dpt {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (quotient, remainder); b must be nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace

int euler_phi(int n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n <= 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  Poly p(n + 1, Rational(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    auto sub_phi = cyclotomic_polynomial(d);
    Poly b(sub_phi.begin(), sub_phi.end());
    auto [q, r] = divmod(p, b);
    p = q;
  }
  std::vector<Integer> out;
  for (auto& c : p) out.push_back(c.get_num());
  return out;
}

CyclotomicField::CyclotomicField(int conductor) : n_(conductor) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  phi_ = cyclotomic_polynomial(conductor);
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int conductor) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const CyclotomicField>(conductor);
  cache.emplace(conductor, f);
  return f;
}

CycloScalar::CycloScalar(std::shared_ptr<const CyclotomicField> field)
    : field_(std::move(field)), c_(field_->degree(), Rational(0)) {}

CycloScalar::CycloScalar(std::shared_ptr<const CyclotomicField> field, const Rational& r)
    : CycloScalar(std::move(field)) {
  if (!c_.empty()) {
    c_[0] = r;
    c_[0].canonicalize();
  }
}

CycloScalar CycloScalar::zeta_power(std::shared_ptr<const CyclotomicField> field, long k) {
  CycloScalar s(field);
  long n = field->conductor();
  long e = ((k % n) + n) % n;
  Poly p(e + 1, Rational(0));
  p[e] = 1;
  s.reduce(p);
  s.c_ = std::move(p);
  return s;
}

void CycloScalar::reduce(std::vector<Rational>& p) const {
  const auto& phi = field_->modulus();
  const size_t d = phi.size() - 1;
  for (size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    Rational c = p[k];
    // Phi is monic: x^d == -(lower terms).
    for (size_t i = 0; i <= d; ++i) p[k - d + i] -= c * phi[i];
  }
  p.resize(d, Rational(0));
}

void CycloScalar::check_same_field(const CycloScalar& o) const {
  if (!field_ || !o.field_ || field_->conductor() != o.field_->conductor())
    throw std::invalid_argument("CycloScalar: mismatched or missing field");
}

bool CycloScalar::is_zero() const {
  for (auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycloScalar::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  check_same_field(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
  check_same_field(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  check_same_field(o);
  Poly p = mul(c_, o.c_);
  if (p.empty()) p.assign(c_.size(), Rational(0));
  reduce(p);
  c_ = std::move(p);
  return *this;
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  a.check_same_field(b);
  return a.c_ == b.c_;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw std::domain_error("CycloScalar: inverse of zero");
  // Extended Euclid: s*a + t*phi = gcd, gcd a nonzero constant since phi is irreducible.
  Poly a = c_;
  trim(a);
  const auto& phi_z = field_->modulus();
  Poly b(phi_z.begin(), phi_z.end());
  Poly s0{Rational(1)}, s1{};
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    Poly s2 = sub(s0, mul(q, s1));
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // a is now a nonzero constant.
  Rational g = a[0];
  for (auto& c : s0) c /= g;
  CycloScalar out(field_);
  reduce(s0);
  out.c_ = std::move(s0);
  return out;
}

CycloScalar CycloScalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycloScalar result(field_, Rational(1));
  CycloScalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::complex<double> CycloScalar::embed(int root_index) const {
  if (std::gcd(root_index, field_->conductor()) != 1)
    throw std::invalid_argument("embed: root index must be coprime to the conductor");
  const double n = field_->conductor();
  std::complex<double> z = 0;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(root_index) * static_cast<double>(k) / n;
    z += c_[k].get_d() * std::polar(1.0, ang);
  }
  return z;
}

nlohmann::json CycloScalar::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (auto& c : c_) coeffs.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
  return {{"conductor", field_->conductor()}, {"coefficients", coeffs}};
}

CycloScalar CycloScalar::from_json(const nlohmann::json& j) {
  auto field = CyclotomicField::get(j.at("conductor").get<int>());
  CycloScalar s(field);
  const auto& arr = j.at("coefficients");
  if (arr.size() != s.c_.size()) throw std::invalid_argument("CycloScalar: wrong coefficient count");
  for (size_t i = 0; i < arr.size(); ++i) {
    Rational r(arr[i].get<std::string>());
    r.canonicalize();
    s.c_[i] = r;
  }
  return s;
}

std::string CycloScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k].get_str() << ")";
    if (k > 0) os << "*z^" << k;
  }
  if (first) os << "0";
  return os.str();
}

FieldContext make_field(int K, int N) {
  if (K < 1 || N < 1) throw std::invalid_argument("make_field: K and N must be positive");
  return FieldContext{K, N, CyclotomicField::get(2 * (K + N))};
}

}  // namespace dpt
