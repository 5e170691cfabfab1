#include "dpt/weyl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace dpt {

AffinePermutation::AffinePermutation(std::vector<long> window) : window_(std::move(window)) {
  const long m = this->m();
  if (m < 1) throw std::invalid_argument("affine permutation needs a nonempty window");
  std::vector<bool> seen(m, false);
  for (long v : window_) {
    long r = pos_mod(v, m);
    if (seen[r]) throw std::invalid_argument("window entries must be distinct modulo m: " + to_string());
    seen[r] = true;
  }
}

AffinePermutation AffinePermutation::identity(long m) { return pi(m, 0); }

AffinePermutation AffinePermutation::pi(long m, long r) {
  std::vector<long> w(m);
  for (long i = 0; i < m; ++i) w[i] = i + r;
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::simple(long m, long i) {
  if (m < 2) throw std::invalid_argument("simple reflections need m >= 2");
  std::vector<long> w(m);
  std::iota(w.begin(), w.end(), 0L);
  long i0 = pos_mod(i, m);
  w[i0] += 1;
  w[(i0 + 1) % m] -= 1;
  return AffinePermutation(std::move(w));
}

long AffinePermutation::operator()(long i) const {
  const long m = this->m();
  long q = floor_div(i, m);
  return window_[i - q * m] + q * m;
}

AffinePermutation AffinePermutation::operator*(const AffinePermutation& g) const {
  if (g.m() != m()) throw std::invalid_argument("composing affine permutations of different m");
  std::vector<long> w(m());
  for (long i = 0; i < m(); ++i) w[i] = (*this)(g(i));
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
  const long m = this->m();
  std::vector<long> w(m);
  for (long i = 0; i < m; ++i) {
    long v = window_[i];
    long q = floor_div(v, m);
    w[v - q * m] = i - q * m;
  }
  return AffinePermutation(std::move(w));
}

long AffinePermutation::pi_power() const {
  const long m = this->m();
  long s = 0;
  for (long i = 0; i < m; ++i) s += window_[i] - i;
  return s / m;
}

long AffinePermutation::length() const {
  const long m = this->m();
  long total = 0;
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < m; ++j) {
      // Count k with i < j + km and f(i) > f(j) + km.
      long kmin = floor_div(i - j, m) + 1;
      long kmax = -floor_div(-(window_[i] - window_[j]), m) - 1;
      if (kmax >= kmin) total += kmax - kmin + 1;
    }
  }
  return total;
}

std::string AffinePermutation::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < window_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(window_[i]);
  }
  return s + "]";
}

AffinePermutation AffinePermutation::parse(const std::string& s) {
  std::vector<long> w;
  for (int v : parse_int_list(s)) w.push_back(v);
  return AffinePermutation(std::move(w));
}

AffinePermutation ReflectionWord::to_permutation(long m) const {
  AffinePermutation f = AffinePermutation::pi(m, pi_power);
  for (long j : reflections) f = f * AffinePermutation::simple(m, j);
  return f;
}

std::string ReflectionWord::to_string() const {
  std::string s = "pi^" + std::to_string(pi_power);
  if (!reflections.empty()) {
    s += " *";
    for (long j : reflections) s += " s" + std::to_string(j);
  }
  return s;
}

ReflectionWord ReflectionWord::parse(const std::string& s) {
  ReflectionWord w;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "*") continue;
    if (tok.rfind("pi^", 0) == 0) {
      w.pi_power = std::stol(tok.substr(3));
    } else if (tok.size() > 1 && tok[0] == 's') {
      size_t used = 0;
      w.reflections.push_back(std::stol(tok.substr(1), &used));
      if (used != tok.size() - 1) throw std::invalid_argument("bad reflection token '" + tok + "'");
    } else {
      throw std::invalid_argument("bad token '" + tok + "' in word '" + s + "'");
    }
  }
  return w;
}

bool is_reduced(const ReflectionWord& w, long m) {
  return w.to_permutation(m).length() == static_cast<long>(w.reflections.size());
}

long ContentFn::operator()(long i) const {
  long q = floor_div(i, m);
  return pos_mod(window[i - q * m] + q * drift, modulus);
}

long content(const Dpt& t, long label) {
  Cell c = t.cell_of(label);
  return pos_mod(c.x - c.y, t.params().K + t.params().N);
}

ContentFn content_fn(const Dpt& t) {
  const Params& p = t.params();
  ContentFn f{p.m(), p.K + p.N, pos_mod(p.a + p.b, p.K + p.N), {}};
  for (long i = 0; i < p.m(); ++i) f.window.push_back(content(t, i));
  return f;
}

bool is_allowed_simple(const Dpt& t, long i) {
  const long A = t.params().K + t.params().N;
  long d = pos_mod(content(t, i) - content(t, i + 1), A);
  return d != 1 && d != A - 1;
}

std::optional<Dpt> act_permutation(const AffinePermutation& f, const Dpt& t) {
  if (f.m() != t.params().m()) throw std::invalid_argument("permutation and tableau have different m");
  return try_from_function(t.params(), [&](long x, long y) { return f(t(x, y)); }, t.cells());
}

std::optional<Dpt> act_simple(const Dpt& t, long i) {
  return act_permutation(AffinePermutation::simple(t.params().m(), i), t);
}

AffinePermutation quotient_perm(const Dpt& t2, const Dpt& t1) {
  if (!(t1.params() == t2.params())) throw std::invalid_argument("quotient_perm: parameters differ");
  const long m = t1.params().m();
  std::vector<long> w(m);
  for (long i = 0; i < m; ++i) w[i] = t2(t1.cell_of(i));
  return AffinePermutation(std::move(w));
}

SortResult sort_to_line(const Dpt& t, const Dpt& t0) {
  AffinePermutation f = quotient_perm(t0, t);
  const long m = f.m();
  Dpt cur = t;
  SortResult out;
  for (;;) {
    long i = 0;
    while (i < m && f(i) < f(i + 1)) ++i;
    if (i == m) break;
    auto next = act_simple(cur, i);
    if (!next) throw std::logic_error("sort_to_line: descent swap is not allowed");
    cur = std::move(*next);
    f = f * AffinePermutation::simple(m, i);
    out.reflections.push_back(i);
  }
  out.c = -f.pi_power();
  return out;
}

bool is_allowed_word(const ReflectionWord& w, const Dpt& t) {
  const long m = t.params().m();
  if (!is_reduced(w, m)) throw std::invalid_argument("word " + w.to_string() + " is not reduced");
  const long A = t.params().K + t.params().N;
  const auto& js = w.reflections;
  for (size_t l = js.size(); l-- > 0;) {
    auto pull_back = [&](long v) {
      for (size_t k = l + 1; k < js.size(); ++k) v = AffinePermutation::simple(m, js[k])(v);
      return v;
    };
    long d = pos_mod(content(t, pull_back(js[l])) - content(t, pull_back(js[l] + 1)), A);
    if (d == 1 || d == A - 1) return false;
  }
  return true;
}

namespace {

long count_residue(const std::function<long(long)>& C, long lo, long hi, long r) {
  long n = 0;
  for (long i = lo + 1; i < hi; ++i) n += C(i) == r;
  return n;
}

}  // namespace

Reconstruction reconstruct_from_content(long A, long drift, const std::vector<long>& window, long m) {
  if (A < 2) throw ContentValidationError("modulus must be at least 2");
  if (m < 1 || static_cast<long>(window.size()) != m) {
    throw ContentValidationError("content window must have exactly m entries");
  }
  ContentFn cf{m, A, pos_mod(drift, A), {}};
  for (long v : window) cf.window.push_back(pos_mod(v, A));
  auto C = [&](long i) { return cf(i); };
  const long period = m * A;  // C(i + mA) = C(i)

  // Members of each residue class in [1, mA].
  std::vector<std::vector<long>> members(A);
  for (long i = 1; i <= period; ++i) members[C(i)].push_back(i);
  for (long r = 0; r < A; ++r) {
    if (members[r].empty()) throw ContentValidationError("residue " + std::to_string(r) + " never occurs");
  }
  auto nth = [&](long r, long j) {  // i_r^(j), j >= ... any integer
    const auto& P = members[r];
    long c = static_cast<long>(P.size());
    long q = floor_div(j - 1, c);
    return P[(j - 1) - q * c] + q * period;
  };

  // Between consecutive members of a class there is exactly one member of each neighbouring
  // class. For A = 2 both neighbours are the same class and carry the same label.
  for (long r = 0; r < A; ++r) {
    long c = static_cast<long>(members[r].size());
    for (long j = 1; j <= c; ++j) {
      long lo = nth(r, j), hi = nth(r, j + 1);
      long up = pos_mod(r + 1, A), down = pos_mod(r - 1, A);
      if (count_residue(C, lo, hi, up) != 1 || count_residue(C, lo, hi, down) != 1) {
        throw ContentValidationError("labels " + std::to_string(lo) + " and " + std::to_string(hi) +
                                     " share a residue without exactly one neighbouring residue between them");
      }
    }
  }

  // Boundary path: one box per diagonal.
  std::vector<Cell> path(A + 1);
  long K = 0, N = 0;
  for (long r = 0; r < A; ++r) {
    if (nth(pos_mod(r + 1, A), 1) > nth(r, 1)) {
      path[r + 1] = {path[r].x + 1, path[r].y};
      ++K;
    } else {
      path[r + 1] = {path[r].x, path[r].y - 1};
      ++N;
    }
  }
  if (K == 0 || N == 0) throw ContentValidationError("content does not determine positive K and N");

  auto corner = [&](long d) {
    long k = floor_div(d, A);
    Cell base = path[d - k * A];
    return Cell{base.x + k * K, base.y - k * N};
  };
  auto sigma = [&](long x, long y) {
    long d = x - y;
    Cell c = corner(d);
    return nth(pos_mod(d, A), x - c.x + 1);
  };

  long B = cf.drift;
  long target = nth(0, 1) + m;
  if (C(target) != B) throw ContentValidationError("drift is inconsistent with the window");
  const auto& PB = members[B];
  long q = floor_div(target - 1, period);
  long idx = std::find(PB.begin(), PB.end(), target - q * period) - PB.begin();
  long j = idx + q * static_cast<long>(PB.size()) + 1;
  Cell shift{path[B].x + j - 1, path[B].y + j - 1};
  long a = shift.x, b = -shift.y;
  if (a * N - b * K != m) throw ContentValidationError("reconstructed periods do not give aN - bK = m");

  Params p = Params::make(static_cast<int>(K), static_cast<int>(N), static_cast<int>(a), static_cast<int>(b));
  std::optional<Dpt> t;
  try {
    t = try_from_function(p, sigma);
  } catch (const std::logic_error&) {
    throw ContentValidationError("content does not give a doubly periodic filling");
  }
  if (!t) throw ContentValidationError("content does not come from a standard tableau");
  if (!(content_fn(*t) == cf)) throw ContentValidationError("reconstructed tableau has a different content");
  return {p, *t};
}

Dpt shift_to_degree(const Dpt& t, long target) {
  const long A = t.params().K + t.params().N;
  long diff = t.degree() - target;
  if (diff % A != 0) throw std::invalid_argument("degree difference is not a multiple of K + N");
  int k = static_cast<int>(diff / A);
  return act_symmetry(Symmetry::L, act_symmetry(Symmetry::D, t, k), k);
}

}  // namespace dpt
