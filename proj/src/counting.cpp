#include "dpt/counting.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <queue>

namespace dpt {

namespace {

std::vector<AlcoveWeight> weights_with_last_zero(int K, int N) {
  std::vector<AlcoveWeight> out;
  std::vector<int> cur(N, 0);
  auto rec = [&](auto&& self, int i, int hi) -> void {
    if (i == N - 1) {
      out.push_back(AlcoveWeight{cur});
      return;
    }
    for (int v = hi; v >= 0; --v) {
      cur[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, K);
  return out;
}

// Runs fn on every shape, optionally in parallel, and concatenates in shape order.
template <class Fn>
std::vector<Dpt> per_shape(const std::vector<AlcoveWeight>& shapes, int threads, Fn fn) {
  std::vector<std::vector<Dpt>> parts(shapes.size());
  if (threads <= 1) {
    for (size_t k = 0; k < shapes.size(); ++k) parts[k] = fn(shapes[k]);
  } else {
    for (size_t start = 0; start < shapes.size(); start += threads) {
      std::vector<std::future<std::vector<Dpt>>> jobs;
      size_t end = std::min(shapes.size(), start + static_cast<size_t>(threads));
      for (size_t k = start; k < end; ++k) jobs.push_back(std::async(std::launch::async, fn, shapes[k]));
      for (size_t k = start; k < end; ++k) parts[k] = jobs[k - start].get();
    }
  }
  std::vector<Dpt> out;
  for (auto& v : parts)
    for (auto& t : v) out.push_back(std::move(t));
  return out;
}

}  // namespace

std::vector<AlcoveWeight> normalized_weights(const Params& p) {
  std::vector<AlcoveWeight> out;
  for (auto& w : weights_with_last_zero(p.K, p.N))
    if (precedes_shift(w, p)) out.push_back(w);
  return out;
}

bool is_mod_DL_representative(const Dpt& t) {
  return t.weight().parts.back() == 0 && t.cell_of(1).y == 0;
}

bool is_mod_pi_representative(const Dpt& t) {
  return t.weight().parts.back() == 0 && t(0, t.params().N - 1) == 1;
}

std::vector<Dpt> enumerate_mod_DL(const Params& p, int threads) {
  return per_shape(normalized_weights(p), threads, [p](const AlcoveWeight& w) {
    std::vector<Dpt> out;
    for (auto& t : enumerate_fillings(w, p))
      if (t.cell_of(1).y == 0) out.push_back(std::move(t));
    return out;
  });
}

std::vector<Dpt> enumerate_mod_pi(const Params& p, int threads) {
  return per_shape(normalized_weights(p), threads, [p](const AlcoveWeight& w) {
    std::vector<Dpt> out;
    for (auto& t : enumerate_fillings(w, p))
      if (t(0, p.N - 1) == 1) out.push_back(std::move(t));
    return out;
  });
}

Dpt bijection_DL_to_pi(const Dpt& t) {
  if (!is_mod_DL_representative(t)) throw std::invalid_argument("bijection_DL_to_pi: not a <D,L> representative");
  Dpt r = act_symmetry(Symmetry::LInv, t);
  r = act_symmetry(Symmetry::D, r, t.params().K - t.weight().parts.front());
  if (!is_mod_pi_representative(r)) throw std::logic_error("bijection_DL_to_pi: image is not normalized");
  return r;
}

Dpt bijection_pi_to_DL(const Dpt& t) {
  if (!is_mod_pi_representative(t)) throw std::invalid_argument("bijection_pi_to_DL: not a <pi> representative");
  const auto& parts = t.weight().parts;
  Dpt r = act_symmetry(Symmetry::L, t);
  int shift = parts.size() >= 2 ? parts[parts.size() - 2] : parts.back() + t.params().K;
  r = act_symmetry(Symmetry::DInv, r, shift);
  if (!is_mod_DL_representative(r)) throw std::logic_error("bijection_pi_to_DL: image is not normalized");
  return r;
}

std::string DyckPath::word() const {
  std::string s;
  for (long y = N - 1; y >= 0; --y) {
    s += 'N';
    s.append(path_value(lambda, y - 1, K) - path_value(lambda, y, K), 'E');
  }
  return s;
}

DyckPath DyckPath::from_word(int K, int N, const std::string& word) {
  DyckPath d{K, N, AlcoveWeight{std::vector<int>(N, 0)}};
  int x = 0, row = N - 1, east = 0;
  for (char c : word) {
    if (c == 'E') {
      ++x;
      ++east;
    } else if (c == 'N') {
      if (row < 0) throw std::invalid_argument("Dyck word has too many N steps");
      d.lambda.parts[row--] = x;
    } else {
      throw std::invalid_argument(std::string("bad Dyck step '") + c + "'");
    }
  }
  if (row != -1 || east != K) throw std::invalid_argument("Dyck word must have K E steps and N N steps");
  return d;
}

bool DyckPath::is_dyck() const {
  long n = 0, e = 0;
  for (char c : word()) {
    (c == 'N' ? n : e) += 1;
    if (static_cast<long>(K) * n < static_cast<long>(N) * e) return false;
  }
  return true;
}

std::vector<DyckPath> dyck_paths(int K, int N) {
  std::vector<DyckPath> out;
  for (auto& w : weights_with_last_zero(K, N)) {
    DyckPath d{K, N, w};
    if (d.is_dyck()) out.push_back(d);
  }
  return out;
}

std::vector<DyckEntry> dyck_enumeration(const Params& p) {
  if (std::gcd(p.K, p.N) != 1) throw InvalidParams("dyck_enumeration needs gcd(K, N) = 1");
  std::vector<DyckEntry> out;
  for (auto& d : dyck_paths(p.K, p.N)) {
    if (!precedes_shift(d.lambda, p)) continue;
    for (auto& t : enumerate_fillings(d.lambda, p)) out.push_back({d, t});
  }
  return out;
}

UpperBoundReport verify_upper_bound(const Params& p) {
  if (std::gcd(p.K, p.a) != 1) throw InvalidParams("upper bound needs gcd(K, a) = 1");
  UpperBoundReport r;
  r.count = static_cast<unsigned long>(enumerate_mod_DL(p).size());
  mpz_ui_pow_ui(r.bound.get_mpz_t(), p.K, p.m() - 1);
  r.ok = r.count <= r.bound;
  return r;
}

namespace {

struct Region {
  int base = 0;             // lambda_N
  std::vector<int> inner;   // lambda
  std::vector<int> outer;   // lambda[a,b]

  bool contains(Cell c) const {
    return c.y >= 0 && c.y < static_cast<long>(outer.size()) && c.x >= base && c.x < outer[c.y];
  }
};

Region make_region(const AlcoveWeight& w, const Params& p) {
  delta_cells(w, p);  // throws on a shift-order violation
  return {w.parts.back(), w.parts, shifted_weight(w, p.a, p.b, p.K).parts};
}

}  // namespace

std::vector<std::vector<Cell>> excited_diagrams(const AlcoveWeight& w, const Params& p) {
  Region R = make_region(w, p);
  std::vector<Cell> start;
  for (long y = 0; y < p.N; ++y)
    for (long x = R.base; x < R.inner[y]; ++x) start.push_back({x, y});
  std::set<std::vector<Cell>> seen{start};
  std::queue<std::vector<Cell>> todo;
  todo.push(start);
  while (!todo.empty()) {
    auto D = todo.front();
    todo.pop();
    std::set<Cell> in(D.begin(), D.end());
    auto free = [&](Cell c) { return R.contains(c) && !in.count(c); };
    for (size_t k = 0; k < D.size(); ++k) {
      auto [x, y] = D[k];
      if (!free({x + 1, y}) || !free({x, y + 1}) || !free({x + 1, y + 1})) continue;
      auto next = D;
      next[k] = {x + 1, y + 1};
      std::sort(next.begin(), next.end());
      if (seen.insert(next).second) todo.push(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

long hook_length(const AlcoveWeight& w, const Params& p, Cell u) {
  Region R = make_region(w, p);
  if (!R.contains(u)) throw std::invalid_argument("hook_length: cell outside the region");
  long arm = R.outer[u.y] - u.x - 1;
  long leg = 0;
  for (long y = u.y + 1; y < p.N && R.outer[y] > u.x; ++y) ++leg;
  return arm + leg + 1;
}

Rational naruse_count(const AlcoveWeight& w, const Params& p) {
  if (!(p.a <= p.K && p.b >= p.N - 1)) throw InvalidParams("naruse_count needs a <= K and b >= N - 1");
  Region R = make_region(w, p);
  std::vector<Cell> all;
  std::vector<long> hooks;
  for (long y = 0; y < p.N; ++y)
    for (long x = R.base; x < R.outer[y]; ++x) {
      all.push_back({x, y});
      hooks.push_back(hook_length(w, p, {x, y}));
    }
  Rational sum = 0;
  for (auto& D : excited_diagrams(w, p)) {
    std::set<Cell> in(D.begin(), D.end());
    Integer denom = 1;
    for (size_t k = 0; k < all.size(); ++k)
      if (!in.count(all[k])) denom *= hooks[k];
    sum += Rational(1, 1) / Rational(denom);
  }
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), p.m());
  Rational out = sum * Rational(fact);
  out.canonicalize();
  return out;
}

GroupIdentityReport verify_group_identities(const Params& p, const std::vector<Dpt>& sample) {
  GroupIdentityReport r;
  const int m = static_cast<int>(p.m());
  for (const auto& t : sample) {
    if (!(t.params() == p)) throw std::invalid_argument("verify_group_identities: sample has other parameters");
    ++r.checked;
    Dpt lhs = act_symmetry(Symmetry::Pi, t, m);
    Dpt rhs = act_symmetry(Symmetry::L, act_symmetry(Symmetry::D, t, -p.a), p.b);
    if (!(lhs == rhs)) ++r.pi_m_failures;
    if (!(act_symmetry(Symmetry::L, act_symmetry(Symmetry::D, t, p.K), -p.N) == t)) ++r.period_failures;
  }
  return r;
}

}  // namespace dpt
