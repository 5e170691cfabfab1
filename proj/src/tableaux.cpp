#include "dpt/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dpt {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long pos_mod(long a, long b) {
  long r = a % b;
  return r < 0 ? r + (b < 0 ? -b : b) : r;
}

Params Params::make(int K, int N, int a, int b) {
  if (K < 1 || N < 1) throw InvalidParams("K and N must be positive");
  Params p{K, N, a, b};
  if (p.m() <= 0) {
    throw InvalidParams("m = aN - bK must be positive (got " + std::to_string(p.m()) + ")");
  }
  long r = floor_div(b, N);
  p.a = static_cast<int>(a - r * K);
  p.b = static_cast<int>(b - r * N);
  return p;
}

bool AlcoveWeight::is_alcove(const std::vector<int>& parts, int K) {
  if (parts.empty()) return false;
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) return false;
  return parts.front() - parts.back() <= K;
}

AlcoveWeight AlcoveWeight::make(std::vector<int> parts, int K) {
  if (parts.empty()) throw InvalidWeight("weight must have at least one part");
  if (!is_alcove(parts, K)) {
    throw InvalidWeight("weight " + format_weight(AlcoveWeight{parts}) +
                        " is not weakly decreasing with lambda_1 - lambda_N <= " + std::to_string(K));
  }
  return AlcoveWeight{std::move(parts)};
}

long AlcoveWeight::sum() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

long path_value(const AlcoveWeight& w, long y, int K) {
  const long N = w.N();
  return w.parts[pos_mod(y, N)] - floor_div(y, N) * K;
}

AlcoveWeight shifted_weight(const AlcoveWeight& w, int a, int b, int K) {
  AlcoveWeight out;
  out.parts.resize(w.parts.size());
  for (int i = 0; i < w.N(); ++i) out.parts[i] = static_cast<int>(path_value(w, i + b, K) + a);
  return out;
}

AlcoveWeight weight_D(const AlcoveWeight& w, int power) {
  AlcoveWeight out = w;
  for (auto& x : out.parts) x += power;
  return out;
}

AlcoveWeight weight_L(const AlcoveWeight& w, int power, int K) { return shifted_weight(w, 0, -power, K); }

bool precedes_shift(const AlcoveWeight& w, const Params& p) {
  if (w.N() != p.N) return false;
  auto up = shifted_weight(w, p.a, p.b, p.K);
  for (int i = 0; i < p.N; ++i)
    if (w.parts[i] > up.parts[i]) return false;
  return true;
}

static void check_shape(const AlcoveWeight& w, const Params& p) {
  if (w.N() != p.N) {
    throw InvalidWeight("weight has " + std::to_string(w.N()) + " parts, expected N = " + std::to_string(p.N));
  }
  if (!AlcoveWeight::is_alcove(w.parts, p.K)) throw InvalidWeight("weight " + format_weight(w) + " is not in the alcove");
  if (!precedes_shift(w, p)) {
    throw ShiftOrderError("shifted path of " + format_weight(w) + " lies left of the path in some row");
  }
}

std::vector<Cell> delta_cells(const AlcoveWeight& w, const Params& p) {
  check_shape(w, p);
  auto up = shifted_weight(w, p.a, p.b, p.K);
  std::vector<Cell> cells;
  for (int y = 0; y < p.N; ++y)
    for (long x = w.parts[y]; x < up.parts[y]; ++x) cells.push_back({x, y});
  return cells;
}

namespace {

// Finds r with F(r) <= x < F(r+1), F(r) = L(y + rb) + ra. F is nondecreasing and unbounded.
long find_r(const Params& p, const AlcoveWeight& w, long x, long y) {
  auto F = [&](long r) { return path_value(w, y + r * p.b, p.K) + r * p.a; };
  long r = floor_div(static_cast<long>(p.N) * x + static_cast<long>(p.K) * y, p.m());
  while (F(r) > x) --r;
  while (F(r + 1) <= x) ++r;
  return r;
}

}  // namespace

CanonicalDecomposition canonical_decomposition(const Params& p, const AlcoveWeight& w, Cell c) {
  long r = find_r(p, w, c.x, c.y);
  long x2 = c.x - r * p.a;
  long y2 = c.y + r * p.b;
  long s = -floor_div(y2, p.N);
  return {{x2 - s * p.K, y2 + s * p.N}, s, r};
}

Dpt::Dpt(Unchecked, Params p, AlcoveWeight w, std::vector<long> labels)
    : p_(p), w_(std::move(w)), labels_(std::move(labels)) {
  cells_ = delta_cells(w_, p_);
  upper_ = shifted_weight(w_, p_.a, p_.b, p_.K);
  const long m = p_.m();
  if (static_cast<long>(labels_.size()) != m) {
    throw NotStandard("filling has " + std::to_string(labels_.size()) + " labels, expected m = " + std::to_string(m));
  }
  label_pos_.assign(m, -1);
  for (size_t k = 0; k < labels_.size(); ++k) {
    long l = labels_[k];
    if (l < 1 || l > m || label_pos_[l - 1] != -1) throw NotStandard("filling is not a bijection onto 1..m");
    label_pos_[l - 1] = static_cast<long>(k);
  }
  row_start_.assign(p_.N + 1, 0);
  for (int y = 0; y < p_.N; ++y) row_start_[y + 1] = row_start_[y] + (upper_.parts[y] - w_.parts[y]);
}

Dpt::Dpt(Params p, AlcoveWeight w, std::vector<long> labels) : Dpt(Unchecked{}, p, std::move(w), std::move(labels)) {
  if (!standard()) throw NotStandard("periodic extension of " + format_reading_word(*this) + " is not standard");
}

std::optional<long> Dpt::label_in_delta(Cell c) const {
  if (c.y < 0 || c.y >= p_.N) return std::nullopt;
  long lo = w_.parts[c.y];
  long hi = upper_.parts[c.y];
  if (c.x < lo || c.x >= hi) return std::nullopt;
  return labels_[row_start_[c.y] + (c.x - lo)];
}

long Dpt::operator()(long x, long y) const {
  long r = find_r(p_, w_, x, y);
  long x2 = x - r * p_.a;
  long y2 = y + r * p_.b;
  long s = -floor_div(y2, p_.N);
  Cell base{x2 - s * p_.K, y2 + s * p_.N};
  return labels_[row_start_[base.y] + (base.x - w_.parts[base.y])] + r * p_.m();
}

Cell Dpt::cell_of(long label) const {
  const long m = p_.m();
  long r = floor_div(label - 1, m);
  Cell c = cells_[label_pos_[label - 1 - r * m]];
  return {c.x + r * p_.a, c.y - r * p_.b};
}

// Every cell is a lattice translate of a fundamental-domain cell, and translation shifts a
// cell and its right/lower neighbours by the same amount, so checking the domain suffices.
bool Dpt::standard() const {
  for (const auto& c : cells_) {
    long v = (*this)(c.x, c.y);
    if ((*this)(c.x + 1, c.y) <= v || (*this)(c.x, c.y + 1) <= v) return false;
  }
  return true;
}

std::string Dpt::reading_word() const {
  std::string s;
  bool wide = p_.m() >= 10;
  for (size_t k = 0; k < labels_.size(); ++k) {
    if (wide && k) s += ",";
    s += std::to_string(labels_[k]);
  }
  return s;
}

nlohmann::json Dpt::to_json() const {
  nlohmann::json fill = nlohmann::json::array();
  for (size_t k = 0; k < cells_.size(); ++k) fill.push_back({cells_[k].x, cells_[k].y, labels_[k]});
  return {{"params", {{"K", p_.K}, {"N", p_.N}, {"a", p_.a}, {"b", p_.b}}},
          {"lambda", w_.parts},
          {"filling", fill}};
}

Dpt Dpt::from_json(const nlohmann::json& j) {
  const auto& jp = j.at("params");
  Params p = Params::make(jp.at("K").get<int>(), jp.at("N").get<int>(), jp.at("a").get<int>(), jp.at("b").get<int>());
  auto w = AlcoveWeight::make(j.at("lambda").get<std::vector<int>>(), p.K);
  auto cells = delta_cells(w, p);
  std::vector<long> labels(cells.size(), 0);
  const auto& fill = j.at("filling");
  if (fill.size() != cells.size()) throw NotStandard("filling size does not match the fundamental domain");
  for (const auto& e : fill) {
    Cell c{e.at(0).get<long>(), e.at(1).get<long>()};
    auto it = std::lower_bound(cells.begin(), cells.end(), c, [](const Cell& u, const Cell& v) {
      return std::pair(u.y, u.x) < std::pair(v.y, v.x);
    });
    if (it == cells.end() || !(*it == c)) throw NotStandard("filling cell outside the fundamental domain");
    labels[it - cells.begin()] = e.at(2).get<long>();
  }
  return Dpt(p, std::move(w), std::move(labels));
}

bool is_standard_extension(const AlcoveWeight& w, const std::vector<long>& labels, const Params& p) {
  try {
    return Dpt(Dpt::Unchecked{}, p, w, labels).standard();
  } catch (const NotStandard&) {
    return false;
  }
}

std::vector<std::vector<long>> enumerate_standard_fillings(const AlcoveWeight& w, const Params& p) {
  auto cells = delta_cells(w, p);
  const size_t m = cells.size();
  auto up = shifted_weight(w, p.a, p.b, p.K);
  auto in_delta = [&](long x, long y) { return y >= 0 && y < p.N && x >= w.parts[y] && x < up.parts[y]; };

  // Indices of the left and upper neighbours inside the domain (or -1).
  std::vector<long> left(m, -1), above(m, -1);
  std::vector<long> row_start(p.N + 1, 0);
  for (int y = 0; y < p.N; ++y) row_start[y + 1] = row_start[y] + (up.parts[y] - w.parts[y]);
  auto index_of = [&](long x, long y) { return row_start[y] + (x - w.parts[y]); };
  for (size_t k = 0; k < m; ++k) {
    auto [x, y] = cells[k];
    if (in_delta(x - 1, y)) left[k] = index_of(x - 1, y);
    if (in_delta(x, y - 1)) above[k] = index_of(x, y - 1);
  }

  std::vector<std::vector<long>> out;
  std::vector<long> cur(m, 0);
  std::vector<bool> used(m + 1, false);
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == m) {
      out.push_back(cur);
      return;
    }
    long lo = 0;
    if (left[k] >= 0) lo = std::max(lo, cur[left[k]]);
    if (above[k] >= 0) lo = std::max(lo, cur[above[k]]);
    for (long l = lo + 1; l <= static_cast<long>(m); ++l) {
      if (used[l]) continue;
      used[l] = true;
      cur[k] = l;
      self(self, k + 1);
      used[l] = false;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Dpt> enumerate_fillings(const AlcoveWeight& w, const Params& p) {
  std::vector<Dpt> out;
  for (auto& labels : enumerate_standard_fillings(w, p)) {
    Dpt t(Dpt::Unchecked{}, p, w, std::move(labels));
    if (t.standard()) out.push_back(std::move(t));
  }
  return out;
}

std::optional<Dpt> try_from_function(const Params& p, const std::function<long(long, long)>& g,
                                     const std::vector<Cell>& probe) {
  const long m = p.m();
  auto check = [&](const Cell& c) {
    long v = g(c.x, c.y);
    if (g(c.x + p.K, c.y - p.N) != v || g(c.x + p.a, c.y - p.b) != v + m) {
      throw std::logic_error("try_from_function: function is not doubly periodic");
    }
    return g(c.x + 1, c.y) > v && g(c.x, c.y + 1) > v;
  };
  if (probe.empty()) {
    for (long y = 0; y < m; ++y)
      for (long x = 0; x < m; ++x)
        if (!check({x, y})) return std::nullopt;
  } else {
    for (const auto& c : probe)
      if (!check(c)) return std::nullopt;
  }

  // Standard, so every row is strictly increasing: locate the first cell >= target.
  auto first_at_least = [&](long y, long target) {
    long x = 0;
    if (g(x, y) >= target) {
      while (g(x - 1, y) >= target) --x;
    } else {
      while (g(x, y) < target) ++x;
    }
    return x;
  };
  std::vector<int> lo(p.N), hi(p.N);
  for (int y = 0; y < p.N; ++y) {
    lo[y] = static_cast<int>(first_at_least(y, 1));
    hi[y] = static_cast<int>(first_at_least(y, m + 1));
  }
  if (!AlcoveWeight::is_alcove(lo, p.K)) return std::nullopt;
  AlcoveWeight w{lo};
  if (shifted_weight(w, p.a, p.b, p.K).parts != hi) return std::nullopt;
  std::vector<long> labels;
  for (int y = 0; y < p.N; ++y)
    for (long x = lo[y]; x < hi[y]; ++x) labels.push_back(g(x, y));
  std::vector<long> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  for (long k = 0; k < static_cast<long>(sorted.size()); ++k)
    if (sorted[k] != k + 1) return std::nullopt;  // not surjective
  if (static_cast<long>(sorted.size()) != m) return std::nullopt;
  return Dpt(p, std::move(w), std::move(labels));
}

Dpt act_symmetry(Symmetry s, const Dpt& t, int power) {
  std::vector<Cell> probe;
  long dx = 0, dy = 0, shift = 0;
  switch (s) {
    case Symmetry::D: dx = power; break;
    case Symmetry::DInv: dx = -power; break;
    case Symmetry::L: dy = power; break;
    case Symmetry::LInv: dy = -power; break;
    case Symmetry::Pi: shift = power; break;
    case Symmetry::PiInv: shift = -power; break;
  }
  for (const auto& c : t.cells()) probe.push_back({c.x + dx, c.y + dy});
  auto r = try_from_function(t.params(), [&](long x, long y) { return t(x - dx, y - dy) + shift; }, probe);
  if (!r) throw std::logic_error("act_symmetry produced a non-standard tableau");
  return *r;
}

Dpt apply_pi_explicit(const Dpt& t) {
  const Params& p = t.params();
  const long m = p.m();
  Cell top = t.cell_of(m);
  // The translate of that box by -(a,-b) lands just left of the path in some row.
  long y0 = top.y + p.b;
  long s = floor_div(y0, p.N);
  Cell fresh{top.x - p.a + s * p.K, y0 - s * p.N};
  AlcoveWeight w = t.weight();
  w.parts[fresh.y] -= 1;
  if (w.parts[fresh.y] != fresh.x) throw std::logic_error("apply_pi_explicit: new box is not adjacent to the path");
  auto cells = delta_cells(w, p);
  std::vector<long> labels;
  for (const auto& c : cells) {
    if (c == fresh) {
      labels.push_back(1);
    } else {
      labels.push_back(*t.label_in_delta(c) + 1);
    }
  }
  return Dpt(p, std::move(w), std::move(labels));
}

Dpt linear_dpt(const Params& p, long c) {
  const long m = p.m();
  const long g = std::gcd(p.K, p.N);
  auto f = [&](long x, long y) { return p.N * x + p.K * y + c + pos_mod(p.b * x + p.a * y, m) / (m / g); };
  auto r = try_from_function(p, f);
  if (!r) throw std::logic_error("linear_dpt: formula did not produce a DPT");
  return *r;
}

LineDpt line_dpt(long m, int N, int alpha, int beta) {
  if (m < 1 || N < 1) throw InvalidParams("line_dpt: m and N must be positive");
  if (alpha < 0 || beta < 0 || beta >= m) throw InvalidParams("line_dpt: need alpha >= 0 and 0 <= beta < m");
  if (alpha == 0 && beta == 0) throw InvalidParams("line_dpt: (alpha, beta) must be nonzero");
  if (std::gcd(alpha, N) != 1) throw InvalidParams("line_dpt: gcd(alpha, N) must be 1");
  // Extended Euclid for u*N - v*alpha = 1.
  long r0 = N, r1 = alpha, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    std::tie(r0, r1) = std::pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::pair(t1, t0 - q * t1);
  }
  // s0*N + t0*alpha = 1.
  long u = s0, v = -t0;
  long K = N * beta + alpha * m;
  long a = v * beta + u * m;
  long b = v;
  Params p = Params::make(static_cast<int>(K), N, static_cast<int>(a), static_cast<int>(b));
  auto f = [=](long x, long y) {
    long xs = x + y * beta;
    long tq = floor_div(xs, m);
    long i = xs - tq * m;
    return y * alpha * m + i + tq * m * N;
  };
  auto r = try_from_function(p, f);
  if (!r) throw std::logic_error("line_dpt: construction did not produce a DPT");
  return {p, *r};
}

Params transpose_params(const Params& p) { return Params::make(p.N, p.K, -p.b, -p.a); }

Dpt transpose_dpt(const Dpt& t) {
  Params q = transpose_params(t.params());
  auto r = try_from_function(q, [&](long x, long y) { return t(y, x); });
  if (!r) throw std::logic_error("transpose_dpt: result is not a DPT");
  return *r;
}

Dpt negate_dpt(const Dpt& t) {
  auto r = try_from_function(t.params(), [&](long x, long y) { return -t(-x, -y); });
  if (!r) throw std::logic_error("negate_dpt: result is not a DPT");
  return *r;
}

std::string format_weight(const AlcoveWeight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.parts[i]);
  }
  return s + ")";
}

std::string format_reading_word(const Dpt& t) { return t.reading_word() + "@" + format_weight(t.weight()); }

std::vector<int> parse_int_list(const std::string& s) {
  std::string cleaned;
  for (char ch : s) cleaned += (ch == '(' || ch == ')' || ch == '[' || ch == ']') ? ' ' : ch;
  std::vector<int> out;
  std::stringstream ss(cleaned);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(' ');
    auto e = tok.find_last_not_of(' ');
    if (b == std::string::npos) throw std::invalid_argument("empty entry in integer list '" + s + "'");
    tok = tok.substr(b, e - b + 1);
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "' in '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

Dpt parse_reading_word(const std::string& s, const Params& p) {
  auto at = s.find('@');
  if (at == std::string::npos) throw std::invalid_argument("reading word needs '@(lambda)': " + s);
  std::string word = s.substr(0, at);
  auto w = AlcoveWeight::make(parse_int_list(s.substr(at + 1)), p.K);
  std::vector<long> labels;
  if (word.find(',') != std::string::npos) {
    for (int v : parse_int_list(word)) labels.push_back(v);
  } else {
    for (char ch : word) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad reading word: " + s);
      labels.push_back(ch - '0');
    }
  }
  return Dpt(p, std::move(w), std::move(labels));
}

}  // namespace dpt
