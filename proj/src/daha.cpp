#include "dpt/daha.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <queue>
#include <set>
#include <sstream>

#include "dpt/weyl.hpp"

namespace dpt {

DahaVector DahaVector::basis(const FieldContext& f, const Dpt& t) {
  DahaVector v(f);
  v.add(t, f.one());
  return v;
}

CycloScalar DahaVector::coefficient(const Dpt& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? f_.zero() : it->second;
}

void DahaVector::add(const Dpt& t, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DahaVector& DahaVector::operator+=(const DahaVector& o) {
  if (!f_.field) f_ = o.f_;
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

DahaVector& DahaVector::operator-=(const DahaVector& o) {
  if (!f_.field) f_ = o.f_;
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

DahaVector& DahaVector::operator*=(const CycloScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, x] : terms_) x *= c;
  return *this;
}

nlohmann::json DahaVector::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [t, c] : terms_) out.push_back({{"tableau", format_reading_word(t)}, {"coefficient", c.to_json()}});
  return out;
}

GeneratorWord GeneratorWord::parse(const std::string& s, long m) {
  GeneratorWord w;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    std::string body = tok;
    int power = 1;
    if (auto caret = body.find('^'); caret != std::string::npos) {
      std::string e = body.substr(caret + 1);
      body = body.substr(0, caret);
      if (e == "-1") {
        power = -1;
      } else if (e != "1") {
        throw std::invalid_argument("only powers 1 and -1 are supported: '" + tok + "'");
      }
    }
    if (body == "pi") {
      w.tokens.push_back({GeneratorKind::Pi, 0, power});
      continue;
    }
    if (body.size() < 2 || (body[0] != 'T' && body[0] != 'X')) throw std::invalid_argument("bad generator '" + tok + "'");
    std::string digits = body.substr(body[1] == '_' ? 2 : 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad generator index in '" + tok + "'");
    }
    long idx = std::stol(digits);
    if (body[0] == 'T') {
      if (power != 1) throw std::invalid_argument("T generators take no inverse here: '" + tok + "'");
      if (idx < 0 || idx >= m) throw std::invalid_argument("T index out of range in '" + tok + "'");
      w.tokens.push_back({GeneratorKind::T, idx, 1});
    } else {
      if (idx < 1 || idx > m) throw std::invalid_argument("X index out of range in '" + tok + "'");
      w.tokens.push_back({GeneratorKind::X, idx, power});
    }
  }
  return w;
}

std::string GeneratorWord::to_string() const {
  std::string s;
  for (const auto& g : tokens) {
    if (!s.empty()) s += ' ';
    switch (g.kind) {
      case GeneratorKind::T: s += "T" + std::to_string(g.index); break;
      case GeneratorKind::X: s += "X" + std::to_string(g.index); break;
      case GeneratorKind::Pi: s += "pi"; break;
    }
    if (g.power == -1) s += "^-1";
  }
  return s;
}

DahaModule::DahaModule(const Params& p) : p_(p), f_(make_field(p.K, p.N)) {
  if (p.m() < 2) throw InvalidParams("the DAHA module needs m >= 2");
  const long A = p.K + p.N;
  inv_one_minus_q_.resize(A);
  for (long k = 1; k < A; ++k) inv_one_minus_q_[k] = (f_.one() - f_.q_pow(k)).inverse();
}

CycloScalar DahaModule::weight(const Dpt& s, long i) const { return f_.q_pow(content(s, i)); }

DahaVector DahaModule::apply_X(long i, const DahaVector& v, int power) const {
  DahaVector out(f_);
  for (const auto& [s, c] : v.terms()) out.add(s, c * f_.q_pow(power * content(s, i)));
  return out;
}

const DahaVector& DahaModule::T_basis(long i, const Dpt& s) const {
  const long m = p_.m();
  i = pos_mod(i, m);
  auto key = std::make_pair(s, i);
  {
    std::lock_guard lock(memo_mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const long A = p_.K + p_.N;
  DahaVector out(f_);
  long d = pos_mod(content(s, i) - content(s, i + 1), A);
  if (d == A - 1 || d == 1) {
    Cell c = s.cell_of(i);
    if (s(c.x + 1, c.y) == i + 1) {
      out.add(s, q());
    } else if (s(c.x, c.y + 1) == i + 1) {
      out.add(s, -f_.one());
    } else {
      throw std::logic_error("T_i: adjacent contents without adjacent cells");
    }
  } else {
    // z = w(i) / w(i+1) = q^d.
    auto swapped = act_simple(s, i);
    if (!swapped) throw std::logic_error("T_i: allowed reflection did not act");
    const CycloScalar& inv = inv_one_minus_q_[d];
    out.add(s, -(f_.one() - q()) * inv);
    out.add(*swapped, (f_.one() - f_.q_pow(d + 1)) * inv);
  }
  std::lock_guard lock(memo_mu_);
  return memo_.emplace(key, std::move(out)).first->second;
}

DahaVector DahaModule::apply_T(long i, const DahaVector& v) const {
  DahaVector out(f_);
  for (const auto& [s, c] : v.terms()) {
    const DahaVector& img = T_basis(i, s);
    for (const auto& [u, e] : img.terms()) out.add(u, c * e);
  }
  return out;
}

DahaVector DahaModule::apply_pi(int power, const DahaVector& v) const {
  DahaVector out(f_);
  for (const auto& [s, c] : v.terms()) out.add(act_symmetry(Symmetry::Pi, s, power), c);
  return out;
}

DahaVector DahaModule::apply(const Generator& g, const DahaVector& v) const {
  switch (g.kind) {
    case GeneratorKind::T: return apply_T(g.index, v);
    case GeneratorKind::X: return apply_X(g.index, v, g.power);
    case GeneratorKind::Pi: return apply_pi(g.power, v);
  }
  return v;
}

DahaVector DahaModule::apply_word(const GeneratorWord& w, const DahaVector& v) const {
  DahaVector cur = v;
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) cur = apply(*it, cur);
  return cur;
}

std::vector<Dpt> graded_piece_basis(const Params& p, long d) {
  const long target = -d;
  std::vector<Dpt> out;
  // lambda_N = c and every part in [c, c + K].
  long c_lo = floor_div(target - static_cast<long>(p.N - 1) * p.K, p.N);
  long c_hi = floor_div(target, p.N);
  std::vector<std::vector<int>> shapes;
  for (long c = c_lo; c <= c_hi; ++c) {
    std::vector<int> cur(p.N, static_cast<int>(c));
    auto rec = [&](auto&& self, int i, long hi, long sum) -> void {
      if (i == p.N - 1) {
        if (sum + c == target) shapes.push_back(cur);
        return;
      }
      for (long v = hi; v >= c; --v) {
        cur[i] = static_cast<int>(v);
        self(self, i + 1, v, sum + v);
      }
    };
    rec(rec, 0, c + p.K, 0);
  }
  std::sort(shapes.rbegin(), shapes.rend());
  for (auto& parts : shapes) {
    AlcoveWeight w{parts};
    if (!precedes_shift(w, p)) continue;
    for (auto& t : enumerate_fillings(w, p)) out.push_back(std::move(t));
  }
  return out;
}

bool weights_separate(const std::vector<Dpt>& basis) {
  std::set<std::pair<long, std::vector<long>>> seen;
  for (const auto& t : basis)
    if (!seen.emplace(t.degree(), content_fn(t).window).second) return false;
  return true;
}

nlohmann::json RelationReport::to_json() const {
  nlohmann::json j;
  j["params"] = {{"K", params.K}, {"N", params.N}, {"a", params.a}, {"b", params.b}, {"m", params.m()}};
  j["scalar_preflight"] = scalar_preflight;
  nlohmann::json sizes = nlohmann::json::object();
  for (auto [d, n] : basis_size) sizes[std::to_string(d)] = n;
  j["basis_size"] = sizes;
  j["relations_checked"] = relations_checked;
  j["weights_rigid"] = weights_rigid;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures) {
    j["failures"].push_back({{"relation", f.relation}, {"basis", f.basis}, {"difference", f.difference}});
  }
  j["ok"] = ok();
  return j;
}

namespace {

struct Relation {
  std::string name;
  std::function<DahaVector(const DahaVector&)> diff;
};

std::vector<Relation> relations(const DahaModule& M) {
  const long m = M.params().m();
  const CycloScalar q = M.q(), tinv = M.t().inverse();
  std::vector<Relation> rs;
  for (long i = 0; i < m; ++i) {
    rs.push_back({"(1) (T" + std::to_string(i) + "-q)(T" + std::to_string(i) + "+1)", [&M, i, q](const DahaVector& v) {
                    DahaVector Tv = M.apply_T(i, v);
                    DahaVector out = M.apply_T(i, Tv);
                    out += (M.field().one() - q) * Tv;
                    out -= q * v;
                    return out;
                  }});
  }
  if (m >= 3) {
    for (long i = 0; i < m; ++i) {
      long j = (i + 1) % m;
      rs.push_back({"(2) T" + std::to_string(i) + " T" + std::to_string(j) + " braid", [&M, i, j](const DahaVector& v) {
                      DahaVector l = M.apply_T(i, M.apply_T(j, M.apply_T(i, v)));
                      return l - M.apply_T(j, M.apply_T(i, M.apply_T(j, v)));
                    }});
    }
    for (long i = 0; i < m; ++i)
      for (long j = i + 1; j < m; ++j) {
        if (pos_mod(j - i, m) == 1 || pos_mod(i - j, m) == 1) continue;
        rs.push_back({"(3) T" + std::to_string(i) + " T" + std::to_string(j) + " commute", [&M, i, j](const DahaVector& v) {
                        return M.apply_T(i, M.apply_T(j, v)) - M.apply_T(j, M.apply_T(i, v));
                      }});
      }
  }
  for (long i = 1; i < m; ++i) {
    rs.push_back({"(4) T" + std::to_string(i) + " X" + std::to_string(i) + " T" + std::to_string(i),
                  [&M, i, q](const DahaVector& v) {
                    DahaVector l = M.apply_T(i, M.apply_X(i, M.apply_T(i, v)));
                    return l - q * M.apply_X(i + 1, v);
                  }});
  }
  rs.push_back({"(4) T0 X" + std::to_string(m) + " T0", [&M, m, q, tinv](const DahaVector& v) {
                  DahaVector l = M.apply_T(0, M.apply_X(m, M.apply_T(0, v)));
                  return l - (tinv * q) * M.apply_X(1, v);
                }});
  for (long i = 0; i < m; ++i)
    for (long j = 1; j <= m; ++j) {
      if (pos_mod(j - i, m) == 0 || pos_mod(j - i - 1, m) == 0) continue;
      rs.push_back({"(5) T" + std::to_string(i) + " X" + std::to_string(j) + " commute", [&M, i, j](const DahaVector& v) {
                      return M.apply_T(i, M.apply_X(j, v)) - M.apply_X(j, M.apply_T(i, v));
                    }});
    }
  for (long i = 1; i <= m; ++i) {
    rs.push_back({"(6) pi X" + std::to_string(i) + " pi^-1", [&M, i, m, tinv](const DahaVector& v) {
                    DahaVector l = M.apply_pi(1, M.apply_X(i, M.apply_pi(-1, v)));
                    return i < m ? l - M.apply_X(i + 1, v) : l - tinv * M.apply_X(1, v);
                  }});
  }
  for (long i = 0; i < m; ++i) {
    rs.push_back({"(7) pi T" + std::to_string(i) + " pi^-1", [&M, i, m](const DahaVector& v) {
                    DahaVector l = M.apply_pi(1, M.apply_T(i, M.apply_pi(-1, v)));
                    return l - M.apply_T((i + 1) % m, v);
                  }});
  }
  for (long i = 1; i <= m; ++i)
    for (long j = i + 1; j <= m; ++j) {
      rs.push_back({"(8) X" + std::to_string(i) + " X" + std::to_string(j) + " commute", [&M, i, j](const DahaVector& v) {
                      return M.apply_X(i, M.apply_X(j, v)) - M.apply_X(j, M.apply_X(i, v));
                    }});
    }
  return rs;
}

}  // namespace

RelationReport verify_relations(const Params& p, const std::vector<long>& degrees, int threads) {
  RelationReport rep;
  rep.params = p;
  DahaModule M(p);
  const long m = p.m();
  CycloScalar t = M.t(), qm = M.field().q_pow(m);
  rep.scalar_preflight = qm == t.pow(p.K) && qm == t.pow(-p.N);
  auto rels = relations(M);

  for (long d : degrees) {
    auto basis = graded_piece_basis(p, d);
    rep.basis_size[d] = static_cast<long>(basis.size());
    rep.weights_rigid = rep.weights_rigid && weights_separate(basis);

    auto run = [&](size_t lo, size_t hi) {
      std::vector<RelationFailure> fails;
      long checked = 0;
      for (size_t k = lo; k < hi; ++k) {
        DahaVector v = M.basis(basis[k]);
        for (const auto& r : rels) {
          ++checked;
          DahaVector diff = r.diff(v);
          if (!diff.is_zero()) fails.push_back({r.name, format_reading_word(basis[k]), diff.to_json()});
        }
      }
      return std::make_pair(checked, fails);
    };
    int nt = std::max(1, threads);
    size_t chunk = (basis.size() + nt - 1) / nt;
    std::vector<std::future<std::pair<long, std::vector<RelationFailure>>>> jobs;
    for (size_t lo = 0; lo < basis.size(); lo += std::max<size_t>(chunk, 1)) {
      size_t hi = std::min(basis.size(), lo + std::max<size_t>(chunk, 1));
      jobs.push_back(std::async(nt > 1 ? std::launch::async : std::launch::deferred, run, lo, hi));
    }
    for (auto& j : jobs) {
      auto [checked, fails] = j.get();
      rep.relations_checked += checked;
      for (auto& f : fails) rep.failures.push_back(std::move(f));
    }
  }
  return rep;
}

bool orbit_connectivity(const Params& p, long d) {
  auto basis = graded_piece_basis(p, d);
  if (basis.size() <= 1) return true;
  const long m = p.m();
  std::set<Dpt> seen{basis.front()};
  std::queue<Dpt> todo;
  todo.push(basis.front());
  while (!todo.empty()) {
    Dpt s = todo.front();
    todo.pop();
    for (long i = 0; i < m; ++i)
      if (auto r = act_simple(s, i); r && seen.insert(*r).second) todo.push(*r);
  }
  return seen.size() == basis.size();
}

}  // namespace dpt
