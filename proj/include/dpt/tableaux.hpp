#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace dpt {

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidWeight : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ShiftOrderError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotStandard : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

long floor_div(long a, long b);
long pos_mod(long a, long b);

/// (K, N, a, b) with m = aN - bK > 0, stored with 0 <= b < N.
struct Params {
  int K = 0;
  int N = 0;
  int a = 0;
  int b = 0;

  /// Validates and shifts (a, b) by a multiple of (K, N) so that 0 <= b < N.
  static Params make(int K, int N, int a, int b);

  long m() const { return static_cast<long>(a) * N - static_cast<long>(b) * K; }
  auto operator<=>(const Params&) const = default;
  bool operator==(const Params&) const = default;
};

/// Integer vector lambda_1 >= ... >= lambda_N. Alcove membership (lambda_1 - lambda_N <= K)
/// is checked by the factory since it depends on K.
struct AlcoveWeight {
  std::vector<int> parts;

  static AlcoveWeight make(std::vector<int> parts, int K);
  static bool is_alcove(const std::vector<int>& parts, int K);

  int N() const { return static_cast<int>(parts.size()); }
  long sum() const;
  auto operator<=>(const AlcoveWeight&) const = default;
  bool operator==(const AlcoveWeight&) const = default;
};

struct Cell {
  long x = 0;
  long y = 0;
  auto operator<=>(const Cell&) const = default;
  bool operator==(const Cell&) const = default;
};

/// The lattice path L(y) of a weight: L(i + rN) = lambda_{i+1} - rK.
long path_value(const AlcoveWeight& w, long y, int K);

/// D^a L^{-b} applied to w, i.e. the weight whose path is L(y + b) + a.
AlcoveWeight shifted_weight(const AlcoveWeight& w, int a, int b, int K);

/// Weight actions: D adds 1 everywhere, L rotates (lambda_N + K, lambda_1, ..., lambda_{N-1}).
AlcoveWeight weight_D(const AlcoveWeight& w, int power);
AlcoveWeight weight_L(const AlcoveWeight& w, int power, int K);

/// Pointwise lambda_i <= lambda[a,b]_i.
bool precedes_shift(const AlcoveWeight& w, const Params& p);

/// Cells of the fundamental domain in reading order (row by row, left to right).
/// Throws ShiftOrderError if the shifted path lies to the left somewhere.
std::vector<Cell> delta_cells(const AlcoveWeight& w, const Params& p);

struct CanonicalDecomposition {
  Cell base;  ///< cell inside the fundamental domain
  long s = 0; ///< multiple of (K, -N)
  long r = 0; ///< multiple of (a, -b)
};

CanonicalDecomposition canonical_decomposition(const Params& p, const AlcoveWeight& w, Cell c);

/// A doubly periodic standard tableau, stored by the labels of the fundamental domain
/// in reading order.
class Dpt {
 public:
  Dpt() = default;
  /// Validates standardness of the periodic extension; throws NotStandard otherwise.
  Dpt(Params p, AlcoveWeight w, std::vector<long> labels);

  const Params& params() const { return p_; }
  const AlcoveWeight& weight() const { return w_; }
  const std::vector<long>& labels() const { return labels_; }
  const std::vector<Cell>& cells() const { return cells_; }

  long operator()(long x, long y) const;
  long operator()(Cell c) const { return (*this)(c.x, c.y); }
  /// Some cell holding the given label (the one in the fundamental domain shifted by r(a,-b)).
  Cell cell_of(long label) const;
  /// Label at a fundamental-domain cell, or nullopt if the cell is outside.
  std::optional<long> label_in_delta(Cell c) const;

  long degree() const { return -w_.sum(); }
  std::string reading_word() const;

  nlohmann::json to_json() const;
  static Dpt from_json(const nlohmann::json& j);

  auto operator<=>(const Dpt& o) const {
    if (auto c = p_ <=> o.p_; c != 0) return c;
    if (auto c = w_ <=> o.w_; c != 0) return c;
    return labels_ <=> o.labels_;
  }
  bool operator==(const Dpt& o) const { return p_ == o.p_ && w_ == o.w_ && labels_ == o.labels_; }

 private:
  friend bool is_standard_extension(const AlcoveWeight&, const std::vector<long>&, const Params&);
  friend std::vector<Dpt> enumerate_fillings(const AlcoveWeight&, const Params&);
  struct Unchecked {};
  Dpt(Unchecked, Params p, AlcoveWeight w, std::vector<long> labels);
  bool standard() const;

  Params p_;
  AlcoveWeight w_;
  std::vector<long> labels_;
  AlcoveWeight upper_;  // lambda[a,b]
  std::vector<Cell> cells_;
  std::vector<long> row_start_;
  std::vector<long> label_pos_;  // label - 1 -> index into cells_
};

/// True iff the filling (reading order of delta_cells) is a bijection onto 1..m whose
/// periodic extension is standard.
bool is_standard_extension(const AlcoveWeight& w, const std::vector<long>& labels, const Params& p);

/// Standard fillings of the fundamental domain (rows and columns increase inside it),
/// in lexicographic order of reading words. Extension is not required.
std::vector<std::vector<long>> enumerate_standard_fillings(const AlcoveWeight& w, const Params& p);

/// DPTs of shape w, in lexicographic order of reading words.
std::vector<Dpt> enumerate_fillings(const AlcoveWeight& w, const Params& p);

/// Builds a DPT from an arbitrary doubly periodic function. Returns nullopt if g is not
/// standard. Standardness is checked on `probe` cells, which must meet every lattice coset;
/// an empty probe uses the m x m square.
std::optional<Dpt> try_from_function(const Params& p, const std::function<long(long, long)>& g,
                                     const std::vector<Cell>& probe = {});

enum class Symmetry { D, DInv, L, LInv, Pi, PiInv };

Dpt act_symmetry(Symmetry s, const Dpt& t, int power = 1);
/// Direct pi on pairs: remove the box holding m, add a box labelled 1 left of the path.
Dpt apply_pi_explicit(const Dpt& t);

Dpt linear_dpt(const Params& p, long c);

struct LineDpt {
  Params params;
  Dpt tableau;
};
/// The line tableau with sigma(x, 0) = x for 0 <= x < m. Needs gcd(alpha, N) = 1, 0 <= beta < m.
LineDpt line_dpt(long m, int N, int alpha, int beta);

/// sigma(y, x) over (N, K, -b, -a).
Dpt transpose_dpt(const Dpt& t);
/// -sigma(-x, -y) over the same parameters.
Dpt negate_dpt(const Dpt& t);

/// The conjugation pairs DPT(K,N,a,b) with DPT(N,K,-b,-a).
Params transpose_params(const Params& p);

/// "13524@(1,-1)".
std::string format_reading_word(const Dpt& t);
Dpt parse_reading_word(const std::string& s, const Params& p);

std::string format_weight(const AlcoveWeight& w);
std::vector<int> parse_int_list(const std::string& s);

}  // namespace dpt
