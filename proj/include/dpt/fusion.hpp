#pragma once

#include <stdexcept>
#include <vector>

#include "dpt/exactnum.hpp"
#include "dpt/tableaux.hpp"

namespace dpt {

/// Raised when two independent computations of the same quantity disagree.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

/// u_0, ..., u_m with u_{l+1} = u_l + e_{j_l}, all in the alcove.
struct WeightChain {
  std::vector<AlcoveWeight> steps;

  long length() const { return static_cast<long>(steps.size()) - 1; }
  /// Row index j_l (0-based) of the l-th step.
  std::vector<int> rows() const;
  bool operator==(const WeightChain&) const = default;
};

/// V (x) [lambda]: every lambda + e_j in the alcove, in order of j, each with multiplicity 1.
std::vector<AlcoveWeight> pieri_V(const AlcoveWeight& w, int K);
AlcoveWeight tensor_L(const AlcoveWeight& w, int sign, int K);
AlcoveWeight tensor_D(const AlcoveWeight& w, int sign);

/// Throws std::invalid_argument on a length mismatch.
Rational inner(const std::vector<Rational>& x, const std::vector<Rational>& y);
Rational inner(const std::vector<int>& x, const std::vector<int>& y);
std::vector<Rational> rho(int N);
/// 2 rho_j = N + 1 - 2j for j = 1..N.
std::vector<int> two_rho(int N);

/// <lambda, lambda + 2 rho>, so that theta acts on [lambda] by v^exponent.
long theta_exponent(const AlcoveWeight& w);
CycloScalar theta(const AlcoveWeight& w, const FieldContext& f);
/// Exponent of v for the double braiding on the nu-component of lambda (x) mu.
long double_braiding_exponent(const AlcoveWeight& lambda, const AlcoveWeight& mu, const AlcoveWeight& nu);

/// All chains of length m from lambda to mu inside the alcove, in lexicographic order of
/// their row sequences. Empty if mu is unreachable.
std::vector<WeightChain> enumerate_chains(const AlcoveWeight& lambda, const AlcoveWeight& mu, long m, int K,
                                          int threads = 1);

/// The DPT of shape lambda whose label l sits in row j_l. Requires mu = lambda[a,b].
Dpt chain_to_dpt(const WeightChain& c, const Params& p);
WeightChain dpt_to_chain(const Dpt& t);

struct IntertwinerDim {
  long chains = 0;
  long tableaux = 0;
  long value() const { return chains; }
};

/// dim Hom(D^a L^{-b} [lambda], V^m (x) [lambda]) counted by chains and by enumerate_fillings.
/// Throws InternalInconsistency if the two counts (or the tableaux they give) differ.
IntertwinerDim intertwiner_dim(const AlcoveWeight& lambda, const Params& p, int threads = 1);

struct XiReport {
  long checked = 0;
  long mismatches = 0;        ///< v^{2C(i)} != q^{C(i)} or != the chain theta ratio
  long drift_mismatches = 0;  ///< eigenvalue(i + m) != t^{-1} eigenvalue(i)
  bool ok() const { return mismatches == 0 && drift_mismatches == 0; }
};

/// For i = 1..m compares the chain exponent <u_i,u_i+2rho> - <u_{i-1},u_{i-1}+2rho> - <e_1,e_1+2rho>
/// with 2 C(i), and v^{2C(i)} with the DAHA weight q^{C(i)}.
XiReport xi_eigenvalue_check(const Dpt& t);

struct TScalarReport {
  AlcoveWeight lambda;
  AlcoveWeight mu;
  long exponent = 0;  ///< <e_1,e_1+2rho> + <lambda,lambda+2rho> - <mu,mu+2rho>
  bool exponent_ok = false;  ///< exponent == 2(a + b)
  bool scalar_ok = false;    ///< v^exponent == t^{-1}
  bool preflight_ok = false; ///< q^m == t^K == t^{-N}
  bool ok() const { return exponent_ok && scalar_ok && preflight_ok; }
};

/// lambda = (K-a)^b (-a)^{N-b} is D^{-a} L^b and mu = lambda + e_{b+1}.
TScalarReport t_scalar_check(const Params& p);

}  // namespace dpt
