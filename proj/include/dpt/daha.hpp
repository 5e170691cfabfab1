#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "dpt/exactnum.hpp"
#include "dpt/tableaux.hpp"

namespace dpt {

/// Finite linear combination of basis vectors nu_sigma. Zero coefficients are never stored.
class DahaVector {
 public:
  DahaVector() = default;
  explicit DahaVector(FieldContext f) : f_(std::move(f)) {}
  static DahaVector basis(const FieldContext& f, const Dpt& t);

  const FieldContext& field() const { return f_; }
  const std::map<Dpt, CycloScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of nu_t (zero if absent).
  CycloScalar coefficient(const Dpt& t) const;

  void add(const Dpt& t, const CycloScalar& c);
  DahaVector& operator+=(const DahaVector& o);
  DahaVector& operator-=(const DahaVector& o);
  DahaVector& operator*=(const CycloScalar& c);
  friend DahaVector operator+(DahaVector a, const DahaVector& b) { return a += b; }
  friend DahaVector operator-(DahaVector a, const DahaVector& b) { return a -= b; }
  friend DahaVector operator*(const CycloScalar& c, DahaVector v) { return v *= c; }
  bool operator==(const DahaVector& o) const { return terms_ == o.terms_; }

  nlohmann::json to_json() const;

 private:
  FieldContext f_;
  std::map<Dpt, CycloScalar> terms_;
};

enum class GeneratorKind { T, X, Pi };

struct Generator {
  GeneratorKind kind = GeneratorKind::T;
  long index = 0;  ///< T: 0..m-1, X: 1..m, Pi: unused
  int power = 1;   ///< +1 or -1 for X and Pi; always 1 for T
  bool operator==(const Generator&) const = default;
};

/// Tokens "T0", "X3", "X3^-1", "pi", "pi^-1" separated by spaces (underscores allowed: "T_0").
/// As an operator the rightmost token acts first.
struct GeneratorWord {
  std::vector<Generator> tokens;

  static GeneratorWord parse(const std::string& s, long m);
  std::string to_string() const;
};

/// The representation W_(K,N,a,b) with q a primitive (K+N)-th root of unity and t = q^{-a-b}.
class DahaModule {
 public:
  /// Throws InvalidParams for m < 2.
  explicit DahaModule(const Params& p);

  const Params& params() const { return p_; }
  const FieldContext& field() const { return f_; }
  CycloScalar q() const { return f_.q_pow(1); }
  CycloScalar t() const { return f_.q_pow(-(p_.a + p_.b)); }

  /// w_sigma(i) = q^{x-y} at the cell holding i, for any integer i.
  CycloScalar weight(const Dpt& s, long i) const;

  DahaVector basis(const Dpt& s) const { return DahaVector::basis(f_, s); }
  /// X_i^power for any integer i; X_{i+m} = t^{-1} X_i holds automatically.
  DahaVector apply_X(long i, const DahaVector& v, int power = 1) const;
  /// T_i with i taken mod m.
  DahaVector apply_T(long i, const DahaVector& v) const;
  DahaVector apply_pi(int power, const DahaVector& v) const;
  DahaVector apply(const Generator& g, const DahaVector& v) const;
  DahaVector apply_word(const GeneratorWord& w, const DahaVector& v) const;

  /// T_i on a single basis vector, memoized.
  const DahaVector& T_basis(long i, const Dpt& s) const;

 private:
  Params p_;
  FieldContext f_;
  std::vector<CycloScalar> inv_one_minus_q_;  // 1 / (1 - q^k), k mod (K+N), k != 0
  mutable std::mutex memo_mu_;
  mutable std::map<std::pair<Dpt, long>, DahaVector> memo_;
};

/// All DPTs of degree d, by weight in decreasing lexicographic order.
std::vector<Dpt> graded_piece_basis(const Params& p, long d);

struct RelationFailure {
  std::string relation;
  std::string basis;  ///< reading word of the basis vector
  nlohmann::json difference;
};

struct RelationReport {
  Params params;
  bool scalar_preflight = false;  ///< q^m = t^K = t^{-N}
  std::map<long, long> basis_size;
  long relations_checked = 0;
  bool weights_rigid = true;      ///< (degree, content) separates each graded piece
  std::vector<RelationFailure> failures;

  bool ok() const { return scalar_preflight && weights_rigid && failures.empty(); }
  nlohmann::json to_json() const;
};

/// Checks relations (1)-(8) on every basis vector of each graded piece. For m = 2 the braid
/// and commutation relations among the T_i are omitted.
RelationReport verify_relations(const Params& p, const std::vector<long>& degrees, int threads = 1);

/// True iff the allowed simple reflections connect the graded piece.
bool orbit_connectivity(const Params& p, long d);

/// True iff no two basis vectors share a content window (all have the same degree).
bool weights_separate(const std::vector<Dpt>& basis);

}  // namespace dpt
