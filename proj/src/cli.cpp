#include "dpt/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "dpt/counting.hpp"
#include "dpt/daha.hpp"
#include "dpt/fusion.hpp"
#include "dpt/weyl.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace dpt::cli {

namespace {

constexpr int kCacheVersion = 1;

int need(const std::optional<int>& v, const char* flag, const std::string& cmd) {
  if (!v) throw std::invalid_argument(cmd + " needs --" + flag);
  return *v;
}

Params need_params(const RunConfig& c) {
  return Params::make(need(c.K, "K", c.command), need(c.N, "N", c.command), need(c.a, "a", c.command),
                      need(c.b, "b", c.command));
}

AlcoveWeight need_lambda(const RunConfig& c, int K, std::optional<int> N) {
  if (!c.lambda) throw std::invalid_argument(c.command + " needs --lambda");
  if (N && static_cast<int>(c.lambda->size()) != *N)
    throw std::invalid_argument("--lambda has " + std::to_string(c.lambda->size()) + " parts but N = " +
                                std::to_string(*N));
  return AlcoveWeight::make(*c.lambda, K);
}

json params_json(const Params& p) { return {{"K", p.K}, {"N", p.N}, {"a", p.a}, {"b", p.b}, {"m", p.m()}}; }

json tableau_json(const Dpt& t) {
  json j = t.to_json();
  j.erase("params");
  j["word"] = format_reading_word(t);
  j["degree"] = t.degree();
  return j;
}

json tableaux_json(const std::vector<Dpt>& ts) {
  json arr = json::array();
  for (auto& t : ts) arr.push_back(tableau_json(t));
  return arr;
}

std::string rational_str(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

RunResult cmd_enumerate(const RunConfig& c) {
  Params p = need_params(c);
  std::vector<Dpt> ts;
  std::string kind;
  if (c.lambda) {
    kind = "shape";
    ts = enumerate_fillings(need_lambda(c, p.K, p.N), p);
  } else if (c.quotient == "dl") {
    kind = "dl";
    ts = enumerate_mod_DL(p, c.threads);
  } else if (c.quotient == "pi") {
    kind = "pi";
    ts = enumerate_mod_pi(p, c.threads);
  } else {
    throw std::invalid_argument("--quotient must be dl or pi");
  }
  return {kOk, {{"params", params_json(p)}, {"quotient", kind}, {"count", ts.size()}, {"tableaux", tableaux_json(ts)}}};
}

RunResult cmd_count(const RunConfig& c) {
  Params p = need_params(c);
  return {kOk, {{"mod_dl", enumerate_mod_DL(p, c.threads).size()}, {"mod_pi", enumerate_mod_pi(p, c.threads).size()}}};
}

RunResult cmd_verify_daha(const RunConfig& c) {
  auto rep = verify_relations(need_params(c), c.degrees, c.threads);
  return {rep.ok() ? kOk : kVerification, rep.to_json()};
}

RunResult cmd_verify_group(const RunConfig& c) {
  Params p = need_params(c);
  auto reps = enumerate_mod_DL(p, c.threads);
  auto g = verify_group_identities(p, reps);
  auto s = t_scalar_check(p);
  bool ok = g.ok() && s.preflight_ok;
  return {ok ? kOk : kVerification,
          {{"params", params_json(p)},
           {"checked", g.checked},
           {"pi_m_failures", g.pi_m_failures},
           {"period_failures", g.period_failures},
           {"scalar_preflight", s.preflight_ok},
           {"ok", ok}}};
}

json weights_json(const std::vector<AlcoveWeight>& ws) {
  json arr = json::array();
  for (auto& w : ws) arr.push_back(w.parts);
  return arr;
}

RunResult cmd_fusion_pieri(const RunConfig& c) {
  int K = need(c.K, "K", c.command);
  auto w = need_lambda(c, K, c.N);
  return {kOk,
          {{"lambda", w.parts},
           {"V", weights_json(pieri_V(w, K))},
           {"L", tensor_L(w, 1, K).parts},
           {"L_inv", tensor_L(w, -1, K).parts},
           {"D", tensor_D(w, 1).parts},
           {"D_inv", tensor_D(w, -1).parts}}};
}

RunResult cmd_fusion_dim(const RunConfig& c) {
  Params p = need_params(c);
  auto w = need_lambda(c, p.K, p.N);
  try {
    auto d = intertwiner_dim(w, p, c.threads);
    return {kOk, {{"params", params_json(p)}, {"lambda", w.parts}, {"dim", d.value()}, {"chains", d.chains}, {"tableaux", d.tableaux}}};
  } catch (const InternalInconsistency& e) {
    return {kVerification, {{"params", params_json(p)}, {"lambda", w.parts}, {"error", e.what()}}};
  }
}

RunResult cmd_fusion_theta(const RunConfig& c) {
  int K = need(c.K, "K", c.command);
  auto w = need_lambda(c, K, c.N);
  FieldContext f = make_field(K, w.N());
  return {kOk, {{"lambda", w.parts}, {"exponent", theta_exponent(w)}, {"value", theta(w, f).to_json()}}};
}

RunResult cmd_fusion_tscalar(const RunConfig& c) {
  Params p = need_params(c);
  auto r = t_scalar_check(p);
  return {r.ok() ? kOk : kVerification,
          {{"params", params_json(p)},
           {"lambda", r.lambda.parts},
           {"mu", r.mu.parts},
           {"exponent", r.exponent},
           {"exponent_ok", r.exponent_ok},
           {"scalar_ok", r.scalar_ok},
           {"preflight_ok", r.preflight_ok},
           {"ok", r.ok()}}};
}

RunResult cmd_naruse(const RunConfig& c) {
  Params p = need_params(c);
  std::vector<AlcoveWeight> ws;
  if (c.lambda) ws.push_back(need_lambda(c, p.K, p.N));
  else ws = normalized_weights(p);
  json arr = json::array();
  bool ok = true;
  for (auto& w : ws) {
    Rational n = naruse_count(w, p);
    auto fillings = enumerate_fillings(w, p).size();
    bool match = n == Rational(static_cast<unsigned long>(fillings));
    ok = ok && match;
    arr.push_back({{"lambda", w.parts}, {"naruse", rational_str(n)}, {"fillings", fillings}, {"match", match}});
  }
  return {ok ? kOk : kVerification, {{"params", params_json(p)}, {"weights", arr}, {"ok", ok}}};
}

RunResult cmd_reconstruct(const RunConfig& c) {
  ContentFn cf;
  std::optional<long> degree = c.degree;
  if (!c.word.empty()) {
    Dpt t = parse_reading_word(c.word, need_params(c));
    cf = content_fn(t);
    if (!degree) degree = t.degree();
  } else {
    if (!c.content || !c.modulus || !c.drift)
      throw std::invalid_argument("reconstruct needs --word with parameters, or --content, --modulus and --drift");
    cf = ContentFn{static_cast<long>(c.content->size()), *c.modulus, *c.drift, *c.content};
  }
  auto rec = reconstruct_from_content(cf.modulus, cf.drift, cf.window, cf.m);
  Dpt t = degree ? shift_to_degree(rec.tableau, *degree) : rec.tableau;
  return {kOk,
          {{"content", {{"modulus", cf.modulus}, {"drift", cf.drift}, {"window", cf.window}}},
           {"params", params_json(rec.params)},
           {"tableau", tableau_json(t)}}};
}

RunResult cmd_dyck(const RunConfig& c) {
  int K = need(c.K, "K", c.command), N = need(c.N, "N", c.command);
  json paths = json::array();
  std::map<AlcoveWeight, long> per_path;
  bool with_counts = c.a.has_value() || c.b.has_value();
  if (with_counts)
    for (auto& e : dyck_enumeration(need_params(c))) ++per_path[e.path.lambda];
  long total = 0;
  for (auto& d : dyck_paths(K, N)) {
    json j{{"lambda", d.lambda.parts}, {"word", d.word()}};
    if (with_counts) {
      j["count"] = per_path[d.lambda];
      total += per_path[d.lambda];
    }
    paths.push_back(j);
  }
  json doc{{"K", K}, {"N", N}, {"paths", paths}};
  if (with_counts) doc["total"] = total;
  return {kOk, doc};
}

const std::map<std::string, RunResult (*)(const RunConfig&)>& commands() {
  static const std::map<std::string, RunResult (*)(const RunConfig&)> table{
      {"enumerate", cmd_enumerate},        {"count", cmd_count},
      {"verify-daha", cmd_verify_daha},    {"verify-group", cmd_verify_group},
      {"fusion pieri", cmd_fusion_pieri},  {"fusion dim", cmd_fusion_dim},
      {"fusion theta", cmd_fusion_theta},  {"fusion tscalar", cmd_fusion_tscalar},
      {"naruse", cmd_naruse},              {"reconstruct", cmd_reconstruct},
      {"dyck", cmd_dyck}};
  return table;
}

std::string cache_root(const RunConfig& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  if (const char* env = std::getenv("DPT_CACHE_DIR"); env && *env) return env;
  return {};
}

std::string serialize(const json& doc, bool pretty) {
  return pretty ? render_pretty(doc) : doc.dump() + "\n";
}

}  // namespace

json RunConfig::key() const {
  json k{{"version", kCacheVersion}, {"command", command}};
  auto put = [&k](const char* name, const auto& v) {
    if (v) k[name] = *v;
  };
  put("K", K);
  put("N", N);
  put("a", a);
  put("b", b);
  put("lambda", lambda);
  put("content", content);
  put("modulus", modulus);
  put("drift", drift);
  put("degree", degree);
  if (command == "verify-daha") k["degrees"] = degrees;
  if (command == "enumerate") k["quotient"] = quotient;
  if (!word.empty()) k["word"] = word;
  return k;
}

RunResult execute(const RunConfig& cfg) {
  auto it = commands().find(cfg.command);
  if (it == commands().end()) throw std::invalid_argument("unknown command '" + cfg.command + "'");
  if (cfg.threads < 1) throw std::invalid_argument("--threads must be at least 1");
  return it->second(cfg);
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return s.str();
}

std::string render_pretty(const json& doc) {
  if (!doc.contains("tableaux") && !doc.contains("tableau")) return doc.dump(2) + "\n";
  std::vector<json> ts;
  if (doc.contains("tableau")) ts.push_back(doc["tableau"]);
  else ts.assign(doc["tableaux"].begin(), doc["tableaux"].end());
  std::ostringstream out;
  if (doc.contains("params")) {
    const auto& p = doc["params"];
    out << "K=" << p["K"] << " N=" << p["N"] << " a=" << p["a"] << " b=" << p["b"] << " m=" << p["m"];
    if (doc.contains("count")) out << "  count=" << doc["count"];
    out << "\n";
  }
  for (const auto& t : ts) {
    long xmin = 0, xmax = 0, ymax = 0, width = 1;
    bool first = true;
    std::map<std::pair<long, long>, long> at;
    for (const auto& e : t["filling"]) {
      long x = e[0], y = e[1], l = e[2];
      at[{y, x}] = l;
      xmin = first ? x : std::min(xmin, x);
      xmax = first ? x : std::max(xmax, x);
      ymax = first ? y : std::max(ymax, y);
      width = std::max<long>(width, static_cast<long>(std::to_string(l).size()));
      first = false;
    }
    out << "\n" << t["word"].get<std::string>() << "  x=" << xmin << ".." << xmax << "\n";
    for (long y = 0; y <= ymax; ++y) {
      for (long x = xmin; x <= xmax; ++x) {
        auto it = at.find({y, x});
        std::string cell = it == at.end() ? "." : std::to_string(it->second);
        out << std::setw(static_cast<int>(width) + 1) << cell;
      }
      out << "\n";
    }
  }
  return out.str();
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RunResult res;
  std::string root = cfg.use_cache ? cache_root(cfg) : std::string{};
  json key = cfg.key();
  fs::path entry;
  bool hit = false;
  if (!root.empty()) {
    entry = fs::path(root) / (sha256_hex(key.dump()) + ".json");
    std::error_code ec;
    if (fs::exists(entry, ec)) {
      std::ifstream in(entry);
      json stored = json::parse(in, nullptr, false);
      if (!stored.is_discarded() && stored.is_object() && stored.value("key", json()) == key &&
          stored.contains("status") && stored["status"].is_number_integer() && stored.contains("result")) {
        res = {stored["status"].get<int>(), stored["result"]};
        hit = true;
      } else {
        err << "warning: corrupt cache entry " << entry.string() << ", recomputing\n";
      }
    }
  }
  if (!hit) {
    try {
      res = execute(cfg);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kValidation;
    } catch (const std::logic_error& e) {
      err << "error: internal check failed: " << e.what() << "\n";
      return kVerification;
    }
    if (!entry.empty()) {
      std::error_code ec;
      fs::create_directories(entry.parent_path(), ec);
      fs::path tmp = entry;
      tmp += ".tmp";
      {
        std::ofstream o(tmp, std::ios::trunc);
        o << json{{"key", key}, {"status", res.status}, {"result", res.doc}}.dump();
        if (!o) ec = std::make_error_code(std::errc::io_error);
      }
      if (!ec) fs::rename(tmp, entry, ec);
      if (ec) err << "warning: could not write cache entry " << entry.string() << ": " << ec.message() << "\n";
    }
  }

  std::string text = serialize(res.doc, cfg.pretty);
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream o(cfg.output, std::ios::trunc);
    o << text;
    if (!o) {
      err << "error: could not write " << cfg.output << "\n";
      return kValidation;
    }
  }
  return res.status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Doubly periodic tableaux, graded DAHA modules and fusion-ring checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string lambda, degrees = "0", content;

  auto common = [&](CLI::App* s, bool abn) {
    s->add_option("--K", cfg.K, "level K");
    s->add_option("--N", cfg.N, "rank N");
    if (abn) {
      s->add_option("--a", cfg.a, "shift a");
      s->add_option("--b", cfg.b, "shift b");
    }
    s->add_flag("--pretty", cfg.pretty, "ASCII grids instead of JSON where available");
    s->add_flag("!--no-cache", cfg.use_cache, "bypass the result cache");
    s->add_option("--cache-dir", cfg.cache_dir, "cache directory (default $DPT_CACHE_DIR)");
    s->add_option("--output", cfg.output, "write to a file instead of standard output");
    s->add_option("--threads", cfg.threads, "parallelism hint");
  };

  auto* en = app.add_subcommand("enumerate", "list DPTs modulo <D,L> or <pi>, or all fillings of one shape");
  common(en, true);
  en->add_option("--quotient", cfg.quotient, "dl or pi");
  en->add_option("--lambda", lambda, "shape, e.g. 1,-1");
  auto* co = app.add_subcommand("count", "sizes of both quotients");
  common(co, true);
  auto* vd = app.add_subcommand("verify-daha", "check the DAHA relations on graded pieces");
  common(vd, true);
  vd->add_option("--degrees", degrees, "comma-separated degrees");
  auto* vg = app.add_subcommand("verify-group", "check pi^m = D^-a L^b and D^K L^-N = id");
  common(vg, true);
  auto* fu = app.add_subcommand("fusion", "fusion ring queries");
  fu->require_subcommand(1);
  auto* fp = fu->add_subcommand("pieri", "V, L and D times [lambda]");
  common(fp, false);
  fp->add_option("--lambda", lambda)->required();
  auto* fd = fu->add_subcommand("dim", "intertwiner dimension by chains and tableaux");
  common(fd, true);
  fd->add_option("--lambda", lambda)->required();
  auto* ft = fu->add_subcommand("theta", "twist exponent <lambda, lambda + 2 rho>");
  common(ft, false);
  ft->add_option("--lambda", lambda)->required();
  auto* fs_ = fu->add_subcommand("tscalar", "the t^-1 scalar identity");
  common(fs_, true);
  auto* na = app.add_subcommand("naruse", "excited-diagram count against enumeration");
  common(na, true);
  na->add_option("--lambda", lambda);
  auto* re = app.add_subcommand("reconstruct", "rebuild a DPT from its content function");
  common(re, true);
  re->add_option("--content", content, "C(0),...,C(m-1)");
  re->add_option("--modulus", cfg.modulus, "K + N");
  re->add_option("--drift", cfg.drift, "C(i + m) - C(i)");
  re->add_option("--degree", cfg.degree, "degree of the result (default: that of --word)");
  re->add_option("--word", cfg.word, "reading word such as 13524@(1,0); needs --K --N --a --b");
  auto* dy = app.add_subcommand("dyck", "rational Dyck paths, with counts when --a --b are given");
  common(dy, true);

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help(e.get_name());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  for (auto* s : app.get_subcommands()) {
    cfg.command = s->get_name();
    for (auto* t : s->get_subcommands()) cfg.command += " " + t->get_name();
  }
  try {
    if (!lambda.empty()) cfg.lambda = parse_int_list(lambda);
    auto ds = parse_int_list(degrees);
    cfg.degrees.assign(ds.begin(), ds.end());
    if (!content.empty()) {
      auto cs = parse_int_list(content);
      cfg.content = std::vector<long>(cs.begin(), cs.end());
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return run(cfg, out, err);
}

}  // namespace dpt::cli
