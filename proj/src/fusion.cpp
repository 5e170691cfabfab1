#include "dpt/fusion.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

namespace dpt {

std::vector<int> WeightChain::rows() const {
  std::vector<int> out;
  for (size_t l = 1; l < steps.size(); ++l) {
    const auto& u = steps[l - 1].parts;
    const auto& w = steps[l].parts;
    for (size_t j = 0; j < u.size(); ++j)
      if (w[j] != u[j]) {
        out.push_back(static_cast<int>(j));
        break;
      }
  }
  return out;
}

std::vector<AlcoveWeight> pieri_V(const AlcoveWeight& w, int K) {
  std::vector<AlcoveWeight> out;
  for (int j = 0; j < w.N(); ++j) {
    auto parts = w.parts;
    ++parts[j];
    if (AlcoveWeight::is_alcove(parts, K)) out.push_back(AlcoveWeight{parts});
  }
  return out;
}

AlcoveWeight tensor_L(const AlcoveWeight& w, int sign, int K) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("tensor_L: sign must be +1 or -1");
  return weight_L(w, sign, K);
}

AlcoveWeight tensor_D(const AlcoveWeight& w, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("tensor_D: sign must be +1 or -1");
  return weight_D(w, sign);
}

Rational inner(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("inner: length mismatch");
  Rational s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Rational inner(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("inner: length mismatch");
  Integer s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += Integer(x[i]) * y[i];
  return Rational(s);
}

std::vector<int> two_rho(int N) {
  std::vector<int> r(N);
  for (int j = 1; j <= N; ++j) r[j - 1] = N + 1 - 2 * j;
  return r;
}

std::vector<Rational> rho(int N) {
  std::vector<Rational> r;
  for (int x : two_rho(N)) r.push_back(Rational(x, 2));
  for (auto& x : r) x.canonicalize();
  return r;
}

namespace {

long to_long_checked(const Rational& r, const char* what) {
  if (r.get_den() != 1) throw InternalInconsistency(std::string(what) + ": exponent is not an integer");
  return r.get_num().get_si();
}

std::vector<Rational> as_rational(const std::vector<int>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

long theta_exponent(const AlcoveWeight& w) {
  auto lam = as_rational(w.parts);
  auto r = rho(w.N());
  std::vector<Rational> shifted(lam.size());
  for (size_t i = 0; i < lam.size(); ++i) shifted[i] = lam[i] + 2 * r[i];
  return to_long_checked(inner(lam, shifted), "theta_exponent");
}

CycloScalar theta(const AlcoveWeight& w, const FieldContext& f) { return f.v_pow(theta_exponent(w)); }

long double_braiding_exponent(const AlcoveWeight& lambda, const AlcoveWeight& mu, const AlcoveWeight& nu) {
  return theta_exponent(nu) - theta_exponent(lambda) - theta_exponent(mu);
}

namespace {

void extend_chains(std::vector<int>& cur, std::vector<int>& need, long left, int K, std::vector<int>& rows,
                   std::vector<std::vector<int>>& out) {
  if (left == 0) {
    out.push_back(rows);
    return;
  }
  for (size_t j = 0; j < cur.size(); ++j) {
    if (need[j] == 0) continue;
    ++cur[j];
    if (AlcoveWeight::is_alcove(cur, K)) {
      --need[j];
      rows.push_back(static_cast<int>(j));
      extend_chains(cur, need, left - 1, K, rows, out);
      rows.pop_back();
      ++need[j];
    }
    --cur[j];
  }
}

WeightChain chain_from_rows(const AlcoveWeight& lambda, const std::vector<int>& rows) {
  WeightChain c;
  c.steps.push_back(lambda);
  for (int j : rows) {
    auto u = c.steps.back();
    ++u.parts[j];
    c.steps.push_back(std::move(u));
  }
  return c;
}

}  // namespace

std::vector<WeightChain> enumerate_chains(const AlcoveWeight& lambda, const AlcoveWeight& mu, long m, int K,
                                          int threads) {
  if (lambda.N() != mu.N()) throw std::invalid_argument("enumerate_chains: weights of different rank");
  std::vector<int> need(lambda.N());
  long total = 0;
  for (int j = 0; j < lambda.N(); ++j) {
    need[j] = mu.parts[j] - lambda.parts[j];
    if (need[j] < 0) return {};
    total += need[j];
  }
  if (total != m || !AlcoveWeight::is_alcove(lambda.parts, K)) return {};
  if (m == 0) return {WeightChain{{lambda}}};

  // One job per first step; results are concatenated in order of j.
  auto job = [&lambda, &need, m, K](int j) {
    std::vector<std::vector<int>> rows_out;
    auto cur = lambda.parts;
    auto nd = need;
    if (nd[j] == 0) return rows_out;
    ++cur[j];
    if (!AlcoveWeight::is_alcove(cur, K)) return rows_out;
    --nd[j];
    std::vector<int> rows{j};
    extend_chains(cur, nd, m - 1, K, rows, rows_out);
    return rows_out;
  };
  std::vector<std::vector<std::vector<int>>> parts(lambda.N());
  if (threads <= 1) {
    for (int j = 0; j < lambda.N(); ++j) parts[j] = job(j);
  } else {
    std::vector<std::future<std::vector<std::vector<int>>>> jobs;
    for (int j = 0; j < lambda.N(); ++j) jobs.push_back(std::async(std::launch::async, job, j));
    for (int j = 0; j < lambda.N(); ++j) parts[j] = jobs[j].get();
  }
  std::vector<WeightChain> out;
  for (auto& ps : parts)
    for (auto& rows : ps) out.push_back(chain_from_rows(lambda, rows));
  return out;
}

Dpt chain_to_dpt(const WeightChain& c, const Params& p) {
  if (c.steps.empty()) throw std::invalid_argument("chain_to_dpt: empty chain");
  const AlcoveWeight& lambda = c.steps.front();
  if (!(c.steps.back() == shifted_weight(lambda, p.a, p.b, p.K)) || c.length() != p.m())
    throw std::invalid_argument("chain_to_dpt: chain does not end at lambda[a,b]");
  auto cells = delta_cells(lambda, p);
  std::map<Cell, size_t> index;
  for (size_t k = 0; k < cells.size(); ++k) index[cells[k]] = k;
  std::vector<long> labels(cells.size());
  auto rows = c.rows();
  for (size_t l = 0; l < rows.size(); ++l) {
    int j = rows[l];
    labels[index.at(Cell{c.steps[l].parts[j], j})] = static_cast<long>(l) + 1;
  }
  return Dpt(p, lambda, labels);
}

WeightChain dpt_to_chain(const Dpt& t) {
  std::vector<int> rows(t.labels().size());
  for (size_t k = 0; k < t.cells().size(); ++k) rows[t.labels()[k] - 1] = static_cast<int>(t.cells()[k].y);
  return chain_from_rows(t.weight(), rows);
}

IntertwinerDim intertwiner_dim(const AlcoveWeight& lambda, const Params& p, int threads) {
  if (lambda.N() != p.N) throw std::invalid_argument("intertwiner_dim: weight has the wrong rank");
  if (!AlcoveWeight::is_alcove(lambda.parts, p.K)) throw std::invalid_argument("intertwiner_dim: weight not in the alcove");
  AlcoveWeight mu = shifted_weight(lambda, p.a, p.b, p.K);
  auto chains = enumerate_chains(lambda, mu, p.m(), p.K, threads);
  std::vector<Dpt> fillings;
  if (precedes_shift(lambda, p)) fillings = enumerate_fillings(lambda, p);

  IntertwinerDim r{static_cast<long>(chains.size()), static_cast<long>(fillings.size())};
  if (r.chains != r.tableaux)
    throw InternalInconsistency("intertwiner_dim: " + std::to_string(r.chains) + " chains but " +
                                std::to_string(r.tableaux) + " tableaux");
  std::set<Dpt> from_chains;
  try {
    for (auto& c : chains) from_chains.insert(chain_to_dpt(c, p));
  } catch (const std::invalid_argument& e) {
    throw InternalInconsistency(std::string("intertwiner_dim: a chain gives no DPT: ") + e.what());
  }
  if (from_chains != std::set<Dpt>(fillings.begin(), fillings.end()))
    throw InternalInconsistency("intertwiner_dim: chains and tableaux give different fillings");
  return r;
}

XiReport xi_eigenvalue_check(const Dpt& t) {
  const Params& p = t.params();
  FieldContext f = make_field(p.K, p.N);
  const long eps_theta = theta_exponent(AlcoveWeight{[&] {
    std::vector<int> e(p.N, 0);
    e[0] = 1;
    return e;
  }()});
  auto chain = dpt_to_chain(t);
  CycloScalar t_inv = f.q_pow(p.a + p.b);
  XiReport r;
  for (long i = 1; i <= p.m(); ++i) {
    ++r.checked;
    Cell c = t.cell_of(i);
    long content = c.x - c.y;
    long exp = theta_exponent(chain.steps[i]) - theta_exponent(chain.steps[i - 1]) - eps_theta;
    if (exp != 2 * content || !(f.v_pow(2 * content) == f.q_pow(content))) ++r.mismatches;
    Cell d = t.cell_of(i + p.m());
    if (!(f.v_pow(2 * (d.x - d.y)) == t_inv * f.v_pow(2 * content))) ++r.drift_mismatches;
  }
  return r;
}

TScalarReport t_scalar_check(const Params& p) {
  FieldContext f = make_field(p.K, p.N);
  TScalarReport r;
  std::vector<int> lam(p.N, -p.a);
  for (int j = 0; j < p.b; ++j) lam[j] = p.K - p.a;
  r.lambda = AlcoveWeight{lam};
  ++lam[p.b];
  r.mu = AlcoveWeight{lam};
  // <e_1, e_1 + 2 rho> = N.
  r.exponent = p.N + theta_exponent(r.lambda) - theta_exponent(r.mu);
  r.exponent_ok = r.exponent == 2L * (p.a + p.b);
  CycloScalar t = f.q_pow(-(p.a + p.b));
  r.scalar_ok = f.v_pow(r.exponent) == t.inverse();
  r.preflight_ok = f.q_pow(p.m()) == t.pow(p.K) && t.pow(p.K) == t.pow(-p.N);
  return r;
}

}  // namespace dpt
