#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpt/tableaux.hpp"

namespace dpt {

/// Bijection f of Z with f(i + m) = f(i) + m, stored by its window f(0), ..., f(m-1).
/// Elements of the extended affine Weyl group; the pi-power is (sum f(i) - sum i) / m.
class AffinePermutation {
 public:
  explicit AffinePermutation(std::vector<long> window);

  static AffinePermutation identity(long m);
  /// s_i swaps i + km and i + 1 + km.
  static AffinePermutation simple(long m, long i);
  /// pi^r: j -> j + r.
  static AffinePermutation pi(long m, long r);
  static AffinePermutation parse(const std::string& s);

  long m() const { return static_cast<long>(window_.size()); }
  const std::vector<long>& window() const { return window_; }
  long operator()(long i) const;

  /// (f * g)(i) = f(g(i)).
  AffinePermutation operator*(const AffinePermutation& g) const;
  AffinePermutation inverse() const;

  long pi_power() const;
  /// Number of inversions: pairs i < j, 0 <= i < m, with f(i) > f(j).
  long length() const;
  bool is_pi_power() const { return length() == 0; }

  std::string to_string() const;
  bool operator==(const AffinePermutation&) const = default;

 private:
  std::vector<long> window_;
};

/// pi^r * s_{j_1} ... s_{j_s}; as an operator the rightmost reflection acts first.
struct ReflectionWord {
  long pi_power = 0;
  std::vector<long> reflections;

  AffinePermutation to_permutation(long m) const;
  std::string to_string() const;
  static ReflectionWord parse(const std::string& s);
  bool operator==(const ReflectionWord&) const = default;
};

bool is_reduced(const ReflectionWord& w, long m);

/// C(i) in Z/A with C(i + m) = C(i) + drift.
struct ContentFn {
  long m = 0;
  long modulus = 0;
  long drift = 0;
  std::vector<long> window;

  long operator()(long i) const;
  bool operator==(const ContentFn&) const = default;
};

long content(const Dpt& t, long label);
ContentFn content_fn(const Dpt& t);

bool is_allowed_simple(const Dpt& t, long i);
/// Relabels by f; nullopt if the result is not standard.
std::optional<Dpt> act_permutation(const AffinePermutation& f, const Dpt& t);
/// Applies s_i (indices mod m); nullopt when not allowed.
std::optional<Dpt> act_simple(const Dpt& t, long i);

/// The unique f with t2 = f t1.
AffinePermutation quotient_perm(const Dpt& t2, const Dpt& t1);

struct SortResult {
  std::vector<long> reflections;  ///< in application order
  long c = 0;                     ///< final tableau is pi^c t0
};

/// Swaps i, i+1 at the leftmost descent of t0 t^{-1} until reaching pi^c t0.
SortResult sort_to_line(const Dpt& t, const Dpt& t0);

/// Content criterion for every step of a reduced word. Throws std::invalid_argument if the
/// word is not reduced.
bool is_allowed_word(const ReflectionWord& w, const Dpt& t);

struct ContentValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Reconstruction {
  Params params;
  Dpt tableau;
};

/// Rebuilds a DPT from its content function: walks the boundary path diagonal by diagonal using
/// the first positive label of each residue class, then fills diagonals in increasing order.
Reconstruction reconstruct_from_content(long modulus, long drift, const std::vector<long>& window, long m);

/// Applies (DL)^k so that the degree becomes `target`; content is unchanged.
Dpt shift_to_degree(const Dpt& t, long target);

}  // namespace dpt
