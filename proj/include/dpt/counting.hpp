#pragma once

#include <set>
#include <string>
#include <vector>

#include "dpt/exactnum.hpp"
#include "dpt/tableaux.hpp"

namespace dpt {

/// Weights with lambda_N = 0 (hence lambda_1 <= K) and lambda <= lambda[a,b], in decreasing
/// lexicographic order.
std::vector<AlcoveWeight> normalized_weights(const Params& p);

/// One DPT per <D,L>-orbit: lambda_N = 0 and label 1 in row 0.
std::vector<Dpt> enumerate_mod_DL(const Params& p, int threads = 1);
/// One DPT per <pi>-orbit: lambda_N = 0 and label 1 at (0, N-1).
std::vector<Dpt> enumerate_mod_pi(const Params& p, int threads = 1);

bool is_mod_DL_representative(const Dpt& t);
bool is_mod_pi_representative(const Dpt& t);

/// L^{-1} followed by D^{K - lambda_1}. Throws std::invalid_argument on a non-representative.
Dpt bijection_DL_to_pi(const Dpt& t);
/// L followed by D^{-mu_{N-1}}.
Dpt bijection_pi_to_DL(const Dpt& t);

/// A (K, N) path with one vertical step per row, read bottom to top: 'N' is a vertical step
/// and 'E' a horizontal one. Vertical steps sit at x = lambda_N, ..., lambda_1.
struct DyckPath {
  int K = 0;
  int N = 0;
  AlcoveWeight lambda;

  std::string word() const;
  static DyckPath from_word(int K, int N, const std::string& word);
  /// Weakly above the diagonal: every prefix has K * #N >= N * #E.
  bool is_dyck() const;
  bool operator==(const DyckPath&) const = default;
};

/// Dyck paths with lambda_N = 0, in decreasing lexicographic order of lambda.
std::vector<DyckPath> dyck_paths(int K, int N);

struct DyckEntry {
  DyckPath path;
  Dpt tableau;
};

/// Requires gcd(K, N) = 1 (InvalidParams otherwise).
std::vector<DyckEntry> dyck_enumeration(const Params& p);

struct UpperBoundReport {
  Integer count;
  Integer bound;
  bool ok = false;
};

/// |DPT / <D,L>| against K^{m-1}. Requires gcd(K, a) = 1.
UpperBoundReport verify_upper_bound(const Params& p);

/// Excited diagrams of lambda \ omega(lambda) inside Delta_0(lambda) = lambda[a,b] \ omega(lambda).
std::vector<std::vector<Cell>> excited_diagrams(const AlcoveWeight& w, const Params& p);

/// Hook length of a cell of Delta_0(lambda).
long hook_length(const AlcoveWeight& w, const Params& p, Cell u);

/// m! sum over excited diagrams of prod 1/h(u). Requires a <= K and b >= N - 1.
Rational naruse_count(const AlcoveWeight& w, const Params& p);

struct GroupIdentityReport {
  long checked = 0;
  long pi_m_failures = 0;    ///< pi^m != D^{-a} L^b
  long period_failures = 0;  ///< D^K L^{-N} != id
  bool ok() const { return pi_m_failures == 0 && period_failures == 0; }
};

GroupIdentityReport verify_group_identities(const Params& p, const std::vector<Dpt>& sample);

}  // namespace dpt
