// bsnq: exact word arithmetic, residual-property classification, generating
// families, free Lie ring computations and nilpotent quotients for
// Baumslag-Solitar groups, with a desk-scale verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "bsnq/britton.hpp"
#include "bsnq/classifier.hpp"
#include "bsnq/free_lie.hpp"
#include "bsnq/lattice.hpp"
#include "bsnq/matrix.hpp"
#include "bsnq/nq.hpp"
#include "bsnq/presentations.hpp"
#include "bsnq/verifier.hpp"
#include "bsnq/version.hpp"

using namespace bsnq;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

json envelope(const std::string& subcommand, json params, json result) {
  return json{{"tool_version", kToolVersion},
              {"subcommand", subcommand},
              {"params", std::move(params)},
              {"result", std::move(result)}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

NqOptions nq_options_from_env() {
  NqOptions opts;
  if (const char* v = std::getenv("BSNQ_MAX_GENERATORS")) opts.max_generators = std::stoul(v);
  if (const char* v = std::getenv("BSNQ_MAX_ENTRY_BITS")) opts.max_entry_bits = std::stoul(v);
  return opts;
}

std::string word_str(const FreeWord& w) { return format_word(w, bs_generator_names()); }

json family_json(const GeneratorFamily& f) {
  json j;
  j["constant_words"] = json::array();
  for (const auto& w : f.constant_words) j["constant_words"].push_back(word_str(w));
  j["parametric_templates"] = json::array();
  for (const auto& [mu, nu] : f.parametric_templates)
    j["parametric_templates"].push_back(
        {{"mu", mu.get_str()},
         {"nu", nu.get_str()},
         {"word", "[t^-k a^" + mu.get_str() + " t^k, a^" + nu.get_str() + "]"}});
  j["extra_words"] = json::array();
  for (const auto& w : f.extra_words) j["extra_words"].push_back(word_str(w));
  return j;
}

json report_json(const VerificationReport& r) {
  json j;
  j["check"] = r.name;
  j["params"] = r.params;
  j["verdict"] = to_string(r.verdict);
  if (!r.note.empty()) j["note"] = r.note;
  j["instances"] = json::array();
  for (const auto& d : r.details)
    j["instances"].push_back({{"description", d.description},
                              {"observed", d.observed},
                              {"expected", d.expected},
                              {"ok", d.ok}});
  return j;
}

void print_report_text(const VerificationReport& r) {
  std::cout << r.name << ": " << to_string(r.verdict) << " (" << r.details.size()
            << " instances)\n";
  if (!r.note.empty()) std::cout << "  note: " << r.note << "\n";
  std::size_t shown = 0;
  for (const auto& d : r.details) {
    if (!d.ok || r.details.size() <= 8 || shown < 3) {
      std::cout << "  " << (d.ok ? "ok  " : "FAIL") << " " << d.description << ": " << d.observed
                << "\n";
      ++shown;
    }
  }
}

json pc_json(const PcPresentation& pc) {
  json j;
  j["class"] = pc.cls();
  j["generators"] = json::array();
  for (std::size_t i = 0; i < pc.size(); ++i)
    j["generators"].push_back({{"name", "g" + std::to_string(i + 1)},
                               {"weight", pc.weight(i)},
                               {"order", pc.generator(i).order.get_str()}});
  j["graded"] = json::array();
  for (const auto& inv : pc.graded_quotients()) {
    json layer;
    layer["invariants"] = inv.to_string();
    layer["free_rank"] = inv.free_rank;
    layer["torsion"] = json::array();
    for (const Int& t : inv.torsion) layer["torsion"].push_back(t.get_str());
    if (inv.is_finite()) layer["order"] = inv.order().get_str();
    j["graded"].push_back(layer);
  }
  j["epimorphism"] = json::object();
  for (std::size_t g = 0; g < pc.epimorphism_images().size(); ++g)
    j["epimorphism"][pc.source().generator_names[g]] =
        pc.format_element(pc.epimorphism_images()[g]);
  return j;
}

GroupPresentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open presentation file: " + path);
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty presentation file");
  const std::string prefix = "gens:";
  if (header.rfind(prefix, 0) != 0)
    throw std::runtime_error("presentation file must start with a 'gens: ...' header");
  GroupPresentation pres;
  std::istringstream hs(header.substr(prefix.size()));
  std::string name;
  while (hs >> name) pres.generator_names.push_back(name);
  if (pres.generator_names.empty())
    throw std::runtime_error("presentation header declares no generators");
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    pres.relators.push_back(parse_word(trimmed, pres.generator_names));
  }
  return pres;
}

int run_classify(const Int& m, const Int& n, const std::vector<long>& primes, bool as_json) {
  BSNormalization norm = normalize_bs(m, n);
  const BSParams& p = norm.params;
  std::vector<Int> ps;
  for (long q : primes) ps.emplace_back(q);
  if (ps.empty()) ps = {Int(2), Int(3)};
  ResidualReport rep = classify(p, ps);
  GeneratorFamily fam = gamma_omega_generators(p);

  if (as_json) {
    json params{{"m", m.get_str()}, {"n", n.get_str()}};
    json result;
    result["normalized"] = {{"m", p.m.get_str()},   {"n", p.n.get_str()},
                            {"d", p.d.get_str()},   {"m1", p.m1.get_str()},
                            {"n1", p.n1.get_str()}, {"delta", p.delta.get_str()}};
    result["residually_finite"] = rep.residually_finite;
    result["residually_nilpotent"] = rep.residually_nilpotent;
    result["residually_p"] = json::object();
    for (const auto& [q, yes] : rep.residually_p) result["residually_p"][q.get_str()] = yes;
    result["case"] = rep.witness_case;
    result["gamma_omega_generators"] = family_json(fam);
    emit(envelope("classify", params, result));
    return kExitPass;
  }

  std::cout << "BS(" << p.m << ", " << p.n << ")  [d=" << p.d << " m1=" << p.m1
            << " n1=" << p.n1 << " delta=" << p.delta << "]\n";
  std::cout << "residually finite:    " << (rep.residually_finite ? "yes" : "no") << "\n";
  std::cout << "residually nilpotent: " << (rep.residually_nilpotent ? "yes" : "no") << "\n";
  for (const auto& [q, yes] : rep.residually_p)
    std::cout << "residually " << q << ":        " << (yes ? "yes" : "no") << "\n";
  std::cout << "case: " << rep.witness_case << "\n";
  std::cout << "gamma-omega normal closure generators:\n";
  for (const auto& w : fam.constant_words) std::cout << "  " << word_str(w) << "\n";
  for (const auto& [mu, nu] : fam.parametric_templates)
    std::cout << "  [t^-k a^" << mu << " t^k, a^" << nu << "]  (k in Z)\n";
  for (const auto& w : fam.extra_words) std::cout << "  " << word_str(w) << "\n";
  return kExitPass;
}

int run_generators(const Int& m, const Int& n, const std::string& set, long prime,
                   long k_window, bool instantiate_flag, bool as_json) {
  BSParams p = bs_params(m, n);
  GeneratorFamily fam;
  if (set == "gamma-omega")
    fam = gamma_omega_generators(p);
  else if (set == "n-omega")
    fam = n_omega_generators(p);
  else if (set == "np-omega")
    fam = np_omega_generators(p, Int(prime));
  else
    throw CLI::ValidationError("--set must be gamma-omega, n-omega or np-omega");

  std::vector<FreeWord> words;
  if (instantiate_flag) words = instantiate(fam, k_window);

  if (as_json) {
    json params{{"m", m.get_str()}, {"n", n.get_str()}, {"set", set}};
    if (set == "np-omega") params["prime"] = prime;
    json result;
    result["family"] = family_json(fam);
    if (instantiate_flag) {
      params["k_window"] = k_window;
      result["instances"] = json::array();
      for (const auto& w : words) result["instances"].push_back(word_str(w));
    }
    emit(envelope("generators", params, result));
    return kExitPass;
  }

  std::cout << set << " generating family for BS(" << p.m << ", " << p.n << "):\n";
  for (const auto& w : fam.constant_words) std::cout << "  " << word_str(w) << "\n";
  for (const auto& [mu, nu] : fam.parametric_templates)
    std::cout << "  [t^-k a^" << mu << " t^k, a^" << nu << "]  (k in Z)\n";
  for (const auto& w : fam.extra_words) std::cout << "  " << word_str(w) << "\n";
  if (instantiate_flag) {
    std::cout << "instances for |k| <= " << k_window << ":\n";
    for (const auto& w : words) std::cout << "  " << word_str(w) << "\n";
  }
  return kExitPass;
}

int run_reduce(const Int& m, const Int& n, const std::string& word_text, bool as_json) {
  BSParams p = bs_params(m, n);
  FreeWord w = parse_word(word_text, bs_generator_names());
  BrittonNormalForm nf = britton_reduce(p, w);
  std::string nf_str = word_str(nf.to_word());
  if (as_json) {
    json params{{"m", m.get_str()}, {"n", n.get_str()}};
    json result{{"input", word_text},
                {"normal_form", nf_str},
                {"is_identity", nf.is_identity()},
                {"t_sum", t_exponent_sum(w).get_str()}};
    emit(envelope("reduce", params, result));
  } else {
    std::cout << nf_str << "\n";
  }
  return kExitPass;
}

int run_nq(const Int& m, const Int& n, const std::string& pres_path, int cls, bool as_json) {
  GroupPresentation pres;
  json params;
  if (!pres_path.empty()) {
    pres = read_presentation_file(pres_path);
    params["presentation"] = pres_path;
  } else {
    pres = bs_presentation(bs_params(m, n));
    params["m"] = m.get_str();
    params["n"] = n.get_str();
  }
  params["class"] = cls;
  PcPresentation pc = nilpotent_quotient(pres, cls, nq_options_from_env());
  if (as_json) {
    emit(envelope("nq", params, pc_json(pc)));
    return kExitPass;
  }
  std::cout << "nilpotent quotient of class " << cls << ": " << pc.size()
            << " pc generators\n";
  for (int c = 1; c <= cls; ++c)
    std::cout << "  gr_" << c << " = " << pc.graded_quotients()[c - 1].to_string() << "\n";
  std::cout << "epimorphism:\n";
  for (std::size_t g = 0; g < pc.epimorphism_images().size(); ++g)
    std::cout << "  " << pres.generator_names[g] << " -> "
              << pc.format_element(pc.epimorphism_images()[g]) << "\n";
  return kExitPass;
}

int run_lie(long basis_c, long witt_c, std::vector<long> index_args,
            std::vector<long> bound_args, bool as_json) {
  FreeLie lie;
  json params, result;
  if (basis_c > 0) {
    params["c"] = basis_c;
    auto ids = lie.hall_basis(static_cast<int>(basis_c));
    json arr = json::array();
    for (int id : ids) arr.push_back(lie.tree_string(id));
    result["basis"] = arr;
    if (!as_json)
      for (int id : ids) std::cout << lie.tree_string(id) << "\n";
  } else if (witt_c > 0) {
    params["c"] = witt_c;
    Int r = witt_rank(static_cast<int>(witt_c));
    result["rank"] = r.get_str();
    if (!as_json) std::cout << r << "\n";
  } else if (!index_args.empty()) {
    params["c"] = index_args[0];
    params["kappa"] = index_args[1];
    Int idx = lattice_index(lie, static_cast<int>(index_args[0]), Int(index_args[1]));
    result["index"] = idx.get_str();
    if (!as_json) std::cout << idx << "\n";
  } else if (!bound_args.empty()) {
    BSParams p = bs_params(bound_args[0], bound_args[1]);
    params["m"] = bound_args[0];
    params["n"] = bound_args[1];
    params["c"] = bound_args[2];
    Int b = grc_order_bound(lie, p, static_cast<int>(bound_args[2]));
    result["bound"] = b.get_str();
    if (!as_json) std::cout << b << "\n";
  } else {
    throw CLI::ValidationError("lie: pass one of --basis, --witt, --index, --bound");
  }
  if (as_json) emit(envelope("lie", params, result));
  return kExitPass;
}

int run_verify(const Int& m, const Int& n, const std::string& check, const VerifyOptions& opts,
               bool as_json) {
  BSParams p = bs_params(m, n);
  std::vector<VerificationReport> reports;
  if (check.empty())
    reports = verify_all(p, opts);
  else
    reports.push_back(run_named_check(check, p, opts));
  bool any_fail = false, any_inconclusive = false;
  for (const auto& r : reports) {
    any_fail |= r.verdict == Verdict::kFail;
    any_inconclusive |= r.verdict == Verdict::kInconclusive;
  }
  if (as_json) {
    json params{{"m", m.get_str()},
                {"n", n.get_str()},
                {"class", opts.class_bound},
                {"k_window", opts.k_window}};
    json result;
    result["reports"] = json::array();
    for (const auto& r : reports) result["reports"].push_back(report_json(r));
    result["all_passed"] = !any_fail && !any_inconclusive;
    emit(envelope("verify", params, result));
  } else {
    for (const auto& r : reports) print_report_text(r);
  }
  if (any_fail) return kExitFail;
  if (any_inconclusive) return kExitUsage;
  return kExitPass;
}

struct CorpusRow {
  int line = 0;
  Int m, n;
  std::map<std::string, std::string> expect;  // rf, rn, case
  std::vector<std::string> checks;
};

CorpusRow parse_corpus_row(const std::string& line, int lineno) {
  std::istringstream in(line);
  CorpusRow row;
  row.line = lineno;
  std::string m_str, n_str;
  if (!(in >> m_str >> n_str))
    throw std::runtime_error("line " + std::to_string(lineno) + ": expected 'm n key=value...'");
  try {
    row.m = Int(m_str);
    row.n = Int(n_str);
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(lineno) + ": m and n must be integers");
  }
  std::string token;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("line " + std::to_string(lineno) + ": malformed token '" + token +
                               "'");
    std::string key = token.substr(0, eq), value = token.substr(eq + 1);
    if (key == "checks") {
      std::istringstream cs(value);
      std::string one;
      while (std::getline(cs, one, ','))
        if (!one.empty()) row.checks.push_back(one);
    } else {
      row.expect[key] = value;
    }
  }
  return row;
}

struct CorpusResult {
  bool ok = true;
  std::vector<std::string> failures;
};

CorpusResult run_corpus_row(const CorpusRow& row, const VerifyOptions& opts) {
  CorpusResult res;
  BSParams p = bs_params(row.m, row.n);
  ResidualReport rep = classify(p, opts.primes);
  auto expect_bool = [&](const std::string& key, bool actual) {
    auto it = row.expect.find(key);
    if (it == row.expect.end()) return;
    bool want = it->second == "1" || it->second == "true" || it->second == "yes";
    if (actual != want) {
      res.ok = false;
      res.failures.push_back(key + ": expected " + it->second + ", got " + (actual ? "1" : "0"));
    }
  };
  expect_bool("rf", rep.residually_finite);
  expect_bool("rn", rep.residually_nilpotent);
  if (auto it = row.expect.find("case"); it != row.expect.end() && it->second != rep.witness_case) {
    res.ok = false;
    res.failures.push_back("case: expected " + it->second + ", got " + rep.witness_case);
  }
  std::vector<std::string> checks = row.checks;
  if (checks.size() == 1 && checks[0] == "all") checks = verifier_check_names();
  if (checks.size() == 1 && checks[0] == "none") checks.clear();
  for (const std::string& name : checks) {
    VerificationReport r = run_named_check(name, p, opts);
    if (r.verdict == Verdict::kFail || r.verdict == Verdict::kInconclusive) {
      res.ok = false;
      res.failures.push_back(name + ": " + to_string(r.verdict));
    }
  }
  return res;
}

int run_corpus(const std::string& path, int jobs, const VerifyOptions& opts, bool as_json) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open corpus file: " << path << "\n";
    return kExitUsage;
  }
  std::vector<CorpusRow> rows;
  std::string line;
  int lineno = 0;
  try {
    while (std::getline(in, line)) {
      ++lineno;
      std::string trimmed = line;
      trimmed.erase(0, trimmed.find_first_not_of(" \t"));
      if (trimmed.empty() || trimmed[0] == '#') continue;
      rows.push_back(parse_corpus_row(trimmed, lineno));
    }
  } catch (const std::exception& e) {
    std::cerr << "corpus: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<CorpusResult> results(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      try {
        results[i] = run_corpus_row(rows[i], opts);
      } catch (const std::exception& e) {
        results[i].ok = false;
        results[i].failures.push_back(std::string("error: ") + e.what());
      }
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  // output strictly in row order
  int failures = 0;
  json rows_json = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CorpusRow& row = rows[i];
    const CorpusResult& r = results[i];
    if (!r.ok) ++failures;
    if (as_json) {
      rows_json.push_back({{"line", row.line},
                           {"m", row.m.get_str()},
                           {"n", row.n.get_str()},
                           {"ok", r.ok},
                           {"failures", r.failures}});
    } else {
      std::cout << (r.ok ? "pass" : "FAIL") << "  BS(" << row.m << ", " << row.n << ")";
      for (const auto& f : r.failures) std::cout << "  [" << f << "]";
      std::cout << "\n";
    }
  }
  if (as_json) {
    emit(envelope("corpus", {{"corpus", path}, {"jobs", jobs}},
                  {{"rows", rows_json}, {"total", rows.size()}, {"failed", failures}}));
  } else {
    std::cout << rows.size() << " rows, " << failures << " failed\n";
  }
  return failures == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Baumslag-Solitar lower central series toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  long m = 0, n = 0;
  bool as_json = false;
  VerifyOptions vopts;
  std::vector<long> primes;

  auto add_mn = [&](CLI::App* cmd, bool required = true) {
    auto* om = cmd->add_option("-m", m, "first parameter of BS(m,n)");
    auto* on = cmd->add_option("-n", n, "second parameter of BS(m,n)");
    if (required) {
      om->required();
      on->required();
    }
  };

  auto* classify_cmd = app.add_subcommand("classify", "residual properties of BS(m,n)");
  add_mn(classify_cmd);
  classify_cmd->add_option("--p", primes, "primes to test residual p-ness for");
  classify_cmd->add_flag("--json", as_json, "emit JSON");

  auto* gen_cmd = app.add_subcommand("generators", "normal-closure generating families");
  add_mn(gen_cmd);
  std::string set_name;
  long gen_prime = 2;
  long k_window_opt = -1;
  gen_cmd->add_option("--set", set_name, "gamma-omega | n-omega | np-omega")->required();
  gen_cmd->add_option("--prime", gen_prime, "prime for np-omega");
  gen_cmd->add_option("--k-window", k_window_opt, "also emit instances for |k| <= K");
  gen_cmd->add_flag("--json", as_json, "emit JSON");

  auto* reduce_cmd = app.add_subcommand("reduce", "Britton normal form of a word");
  add_mn(reduce_cmd);
  std::string word_text;
  reduce_cmd->add_option("--word", word_text, "word over t, a")->required();
  reduce_cmd->add_flag("--json", as_json, "emit JSON");

  auto* nq_cmd = app.add_subcommand("nq", "weighted pc presentation of G modulo a term of its lower central series");
  add_mn(nq_cmd, false);
  std::string pres_path;
  int nq_class = 0;
  nq_cmd->add_option("--presentation", pres_path, "presentation file (gens: header + relators)");
  nq_cmd->add_option("--class", nq_class, "nilpotency class")->required();
  nq_cmd->add_flag("--json", as_json, "emit JSON");

  auto* lie_cmd = app.add_subcommand("lie", "rank-2 free Lie ring computations");
  long basis_c = 0, witt_c = 0;
  std::vector<long> index_args, bound_args;
  lie_cmd->add_option("--basis", basis_c, "Hall basis of degree C");
  lie_cmd->add_option("--witt", witt_c, "Witt rank of degree C");
  lie_cmd->add_option("--index", index_args, "lattice index for C KAPPA")->expected(2);
  lie_cmd->add_option("--bound", bound_args, "graded order bound for M N C")->expected(3);
  lie_cmd->add_flag("--json", as_json, "emit JSON");

  auto* verify_cmd = app.add_subcommand("verify", "run desk-scale verification checks");
  add_mn(verify_cmd);
  bool all_checks = false;
  std::string check_name;
  verify_cmd->add_flag("--all", all_checks, "run every applicable check (default)");
  verify_cmd->add_option("--check", check_name, "run one named check");
  verify_cmd->add_option("--class", vopts.class_bound, "nilpotency class bound (default 5)");
  verify_cmd->add_option("--k-window", vopts.k_window, "k truncation window (default 3)");
  verify_cmd->add_option("--exp-window", vopts.exp_window, "exponent window (default 2)");
  verify_cmd->add_option("--sample-size", vopts.sample_size, "random samples (default 200)");
  std::vector<long> verify_primes;
  verify_cmd->add_option("--p", verify_primes, "primes for the closure chain");
  verify_cmd->add_flag("--json", as_json, "emit JSON");

  auto* corpus_cmd = app.add_subcommand("corpus", "run a fixture corpus file");
  std::string corpus_path;
  int jobs = 1;
  corpus_cmd->add_option("file", corpus_path, "corpus file")->required();
  corpus_cmd->add_option("--jobs", jobs, "parallel rows (default 1)");
  corpus_cmd->add_option("--class", vopts.class_bound, "nilpotency class bound (default 5)");
  corpus_cmd->add_option("--k-window", vopts.k_window, "k truncation window (default 3)");
  corpus_cmd->add_flag("--json", as_json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    vopts.nq = nq_options_from_env();
    if (!verify_primes.empty()) {
      vopts.primes.clear();
      for (long q : verify_primes) vopts.primes.emplace_back(q);
    }
    if (classify_cmd->parsed()) return run_classify(m, n, primes, as_json);
    if (gen_cmd->parsed())
      return run_generators(m, n, set_name, gen_prime, k_window_opt < 0 ? 3 : k_window_opt,
                            k_window_opt >= 0, as_json);
    if (reduce_cmd->parsed()) return run_reduce(m, n, word_text, as_json);
    if (nq_cmd->parsed()) {
      if (pres_path.empty() && (m == 0 || n == 0))
        throw CLI::ValidationError("nq needs -m/-n or --presentation");
      return run_nq(m, n, pres_path, nq_class, as_json);
    }
    if (lie_cmd->parsed()) return run_lie(basis_c, witt_c, index_args, bound_args, as_json);
    if (verify_cmd->parsed()) {
      (void)all_checks;  // --all is the default when no --check is given
      return run_verify(m, n, check_name, vopts, as_json);
    }
    if (corpus_cmd->parsed()) return run_corpus(corpus_path, jobs, vopts, as_json);
  } catch (const NqResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "word syntax error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
