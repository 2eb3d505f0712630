#include "jiso/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "jiso/bounds.hpp"
#include "jiso/cache.hpp"
#include "jiso/combinatorics.hpp"
#include "jiso/compression.hpp"
#include "jiso/family_io.hpp"
#include "jiso/johnson.hpp"
#include "jiso/solver.hpp"
#include "jiso/verify.hpp"

namespace jiso {

namespace {

using Json = nlohmann::ordered_json;

Json family_to_json(const Family& fam) {
  Json arr = Json::array();
  for (Mask x : fam.members) arr.push_back(elements(x));
  return arr;
}

void emit_json(std::ostream& out, const Json& doc) {
  out << doc.dump(2) << '\n';
}

struct MuOptions {
  int n = 0;
  int m = 0;
  std::uint64_t k = 0;
  std::string mode = "auto";
  std::uint64_t budget = SearchBudget{}.max_families;
  bool show_witness = false;
  bool json = false;
  bool no_cache = false;
  std::string cache_path;
};

int run_mu(const MuOptions& opt, std::ostream& out) {
  MuCache cache(MuCache::default_path(opt.cache_path));
  bool cache_hit = false;
  MuResult result;
  if (!opt.no_cache) {
    cache.load();
    if (auto hit = cache.find(opt.n, opt.m, opt.k);
        hit && hit->certified) {
      cache_hit = true;
      result.n = hit->n;
      result.m = hit->m;
      result.k = hit->k;
      result.mu = hit->mu;
      result.certified = hit->certified;
      if (hit->witness) result.witness = *hit->witness;
      // method strings round-trip through the cache
      for (MuMethod method :
           {MuMethod::exhaustive, MuMethod::compressed_search,
            MuMethod::closed_form_m2, MuMethod::formula_tight}) {
        if (hit->method == to_string(method)) result.method = method;
      }
    }
  }
  if (!cache_hit) {
    SearchBudget budget{opt.budget};
    if (opt.mode == "auto") {
      result = mu_best(opt.n, opt.m, opt.k, budget);
    } else if (opt.mode == "exhaustive") {
      result = mu_exact(opt.n, opt.m, opt.k, SearchMode::exhaustive, budget);
    } else if (opt.mode == "compressed") {
      result = mu_exact(opt.n, opt.m, opt.k, SearchMode::compressed, budget);
    } else if (opt.mode == "closed") {
      if (opt.m != 2) {
        throw std::invalid_argument("--mode closed requires m = 2");
      }
      result = mu_m2_closed(opt.n, opt.k);
    } else {
      throw std::invalid_argument("unknown mode: " + opt.mode);
    }
    if (!opt.no_cache) {
      cache.put(cache_entry_from_result(result, /*keep_witness=*/true));
      cache.save();
    }
  }
  if (opt.json) {
    Json doc;
    doc["n"] = result.n;
    doc["m"] = result.m;
    doc["k"] = result.k;
    doc["mu"] = result.mu;
    doc["method"] = to_string(result.method);
    doc["certified"] = result.certified;
    doc["families_visited"] = result.families_visited;
    doc["cache"] = cache_hit ? "hit" : "miss";
    if (opt.show_witness) doc["witness"] = family_to_json(result.witness);
    emit_json(out, doc);
  } else {
    out << "mu=" << result.mu
        << (result.certified ? " certified" : " inconclusive")
        << " method=" << to_string(result.method);
    if (cache_hit) out << " cache=hit";
    out << '\n';
    if (opt.show_witness) {
      write_family(out, result.witness);
    }
  }
  return result.certified ? kExitOk : kExitInconclusive;
}

int run_verify(const std::vector<std::string>& ids, bool all, bool desk,
               bool json, std::ostream& out) {
  std::vector<VerifyReport> reports;
  if (all) {
    reports = desk ? verify_all_desk_scale() : verify_all_quick();
  } else {
    for (const std::string& id : ids) {
      if (id == "example-1.1") {
        reports.push_back(verify_example_1_1());
      } else if (id == "thm-1.2") {
        reports.push_back(verify_theorem_1_2());
      } else if (id == "thm-1.3") {
        reports.push_back(verify_theorem_1_3());
      } else if (id == "prop-4.2") {
        reports.push_back(verify_prop_4_2());
      } else if (id == "prop-1.7") {
        reports.push_back(verify_prop_1_7());
      } else if (id == "lambda") {
        reports.push_back(verify_lambda_sequence());
      } else if (id == "f-formula") {
        reports.push_back(verify_f_formula());
      } else if (id == "properties") {
        reports.push_back(verify_properties());
      } else if (id == "n-threshold") {
        reports.push_back(verify_n_threshold());
      } else {
        throw std::invalid_argument(
            "unknown battery '" + id +
            "'; known: example-1.1 thm-1.2 thm-1.3 prop-4.2 prop-1.7 lambda "
            "f-formula properties n-threshold");
      }
    }
  }
  if (reports.empty()) {
    throw std::invalid_argument("verify: pass --theorem ID or --all");
  }
  std::size_t failed = 0;
  for (const VerifyReport& report : reports) {
    if (!report.passed()) ++failed;
  }
  if (json) {
    Json doc = Json::array();
    for (const VerifyReport& report : reports) {
      Json r;
      r["id"] = report.id;
      r["title"] = report.title;
      r["passed"] = report.passed();
      r["complete"] = report.complete;
      Json rows = Json::array();
      for (const VerifyRow& row : report.rows) {
        Json jr;
        jr["instance"] = row.instance;
        jr["pass"] = row.pass;
        jr["informational"] = row.informational;
        jr["detail"] = row.detail;
        rows.push_back(std::move(jr));
      }
      r["rows"] = std::move(rows);
      doc.push_back(std::move(r));
    }
    emit_json(out, doc);
  } else {
    for (const VerifyReport& report : reports) {
      out << "== " << report.id << ": " << report.title << " ==\n";
      for (const VerifyRow& row : report.rows) {
        const char* mark =
            row.informational ? "INFO" : (row.pass ? "PASS" : "FAIL");
        out << "[" << mark << "] " << row.instance << ": " << row.detail
            << '\n';
      }
      if (!report.complete) out << "[FAIL] battery incomplete\n";
    }
    out << "summary: " << reports.size() - failed << "/" << reports.size()
        << " batteries passed\n";
  }
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int run_family_op(const std::string& op, const std::string& input, int n,
                  bool lower, bool upper, bool json, std::ostream& out) {
  Family fam = read_family_file(input, n);
  Family result;
  if (op == "boundary") {
    result = boundary(fam);
  } else if (op == "ball") {
    result = ball(fam);
  } else if (op == "compress") {
    result = compress(fam);
  } else if (op == "shadow") {
    if (lower == upper) {
      throw std::invalid_argument("shadow: pass exactly one of --lower/--upper");
    }
    result = lower ? lower_shadow(fam) : upper_shadow(fam);
  } else {
    throw std::invalid_argument("unknown family op: " + op);
  }
  if (json) {
    Json doc;
    doc["op"] = op;
    doc["n"] = result.n;
    doc["m"] = result.m;
    doc["size"] = result.size();
    doc["members"] = family_to_json(result);
    emit_json(out, doc);
  } else {
    write_family(out, result);
  }
  return kExitOk;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact isoperimetry toolkit for Johnson graphs J(n,m)"};
  app.require_subcommand(1);

  // mu
  MuOptions mu_opt;
  CLI::App* mu_cmd =
      app.add_subcommand("mu", "minimum boundary over k-vertex sets");
  mu_cmd->add_option("-n", mu_opt.n, "ground set size")->required();
  mu_cmd->add_option("-m", mu_opt.m, "subset size")->required();
  mu_cmd->add_option("-k", mu_opt.k, "family cardinality")->required();
  mu_cmd->add_option("--mode", mu_opt.mode,
                     "auto | exhaustive | compressed | closed");
  mu_cmd->add_option("--budget", mu_opt.budget, "max families visited");
  mu_cmd->add_flag("--witness", mu_opt.show_witness, "print an optimal family");
  mu_cmd->add_flag("--json", mu_opt.json, "machine output");
  mu_cmd->add_flag("--no-cache", mu_opt.no_cache, "skip the result cache");
  mu_cmd->add_option("--cache", mu_opt.cache_path,
                     "cache file (default $JOHNSON_ISO_CACHE or ./mu_cache.json)");

  // bound
  int b_n = 0, b_m = 0;
  std::uint64_t b_k = 0;
  bool b_json = false;
  CLI::App* bound_cmd =
      app.add_subcommand("bound", "colex segment boundary f(k,n,m)");
  bound_cmd->add_option("-n", b_n)->required();
  bound_cmd->add_option("-m", b_m)->required();
  bound_cmd->add_option("-k", b_k)->required();
  bound_cmd->add_flag("--json", b_json);

  // binrep
  std::uint64_t r_k = 0;
  int r_m = 0;
  bool r_json = false;
  CLI::App* binrep_cmd =
      app.add_subcommand("binrep", "m-binomial representation of k");
  binrep_cmd->add_option("-k", r_k)->required();
  binrep_cmd->add_option("-m", r_m)->required();
  binrep_cmd->add_flag("--json", r_json);

  // critical
  std::uint64_t c_k = 0;
  int c_m = 0;
  bool c_json = false;
  CLI::App* critical_cmd =
      app.add_subcommand("critical", "does the representation have m terms?");
  critical_cmd->add_option("-k", c_k)->required();
  critical_cmd->add_option("-m", c_m)->required();
  critical_cmd->add_flag("--json", c_json);

  // lambda
  int l_count = 8;
  bool l_json = false;
  CLI::App* lambda_cmd =
      app.add_subcommand("lambda", "the integer sequence behind g(t,m)");
  lambda_cmd->add_option("--count", l_count, "number of terms (>= 2)");
  lambda_cmd->add_flag("--json", l_json);

  // counterexample
  int x_t = 0, x_m = 3, x_n = 0;
  bool x_json = false;
  CLI::App* ce_cmd = app.add_subcommand(
      "counterexample", "ball of C([t],m) vs the colex segment");
  ce_cmd->add_option("-t", x_t)->required();
  ce_cmd->add_option("-m", x_m, "subset size (>= 3)");
  ce_cmd->add_option("-n", x_n, "ground set (default t+3)");
  ce_cmd->add_flag("--json", x_json);

  // verify
  std::vector<std::string> v_ids;
  bool v_all = false, v_desk = false, v_json = false;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "re-run the desk-scale claim batteries");
  verify_cmd->add_option("--theorem", v_ids, "battery id (repeatable)");
  verify_cmd->add_flag("--all", v_all, "run every battery");
  verify_cmd->add_flag("--desk-scale", v_desk,
                       "full acceptance ranges (with --all)");
  verify_cmd->add_flag("--json", v_json);

  // family operations
  struct FamOpt {
    std::string input;
    int n = 0;
    bool lower = false, upper = false, json = false;
  };
  FamOpt fam_opt[4];
  const char* fam_names[4] = {"boundary", "ball", "shadow", "compress"};
  const char* fam_help[4] = {
      "vertices at distance one from the family",
      "family together with its boundary",
      "lower or upper shadow",
      "canonical shift-stable form",
  };
  CLI::App* fam_cmds[4];
  for (int i = 0; i < 4; ++i) {
    fam_cmds[i] = app.add_subcommand(fam_names[i], fam_help[i]);
    fam_cmds[i]->add_option("-i,--input", fam_opt[i].input, "family file")
        ->required();
    fam_cmds[i]->add_option("-n", fam_opt[i].n,
                            "ground set (default: largest element)");
    fam_cmds[i]->add_flag("--json", fam_opt[i].json);
  }
  fam_cmds[2]->add_flag("--lower", fam_opt[2].lower, "shadow at level m-1");
  fam_cmds[2]->add_flag("--upper", fam_opt[2].upper, "shadow at level m+1");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("jiso");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (mu_cmd->parsed()) return run_mu(mu_opt, out);

    if (bound_cmd->parsed()) {
      std::uint64_t f = f_bound(b_k, b_n, b_m);
      bool crit = is_critical(b_k, b_m);
      if (b_json) {
        Json doc;
        doc["n"] = b_n;
        doc["m"] = b_m;
        doc["k"] = b_k;
        doc["f"] = f;
        doc["critical"] = crit;
        if (crit) doc["critical_upper"] = mu_upper_critical(b_k, b_n, b_m);
        emit_json(out, doc);
      } else {
        out << "f=" << f << " critical=" << (crit ? "true" : "false");
        if (crit) out << " critical_upper=" << mu_upper_critical(b_k, b_n, b_m);
        out << '\n';
      }
      return kExitOk;
    }

    if (binrep_cmd->parsed()) {
      BinomialRep rep = binomial_representation(r_k, r_m);
      if (r_json) {
        Json doc;
        doc["k"] = r_k;
        doc["m"] = r_m;
        Json terms = Json::array();
        for (const auto& [ki, level] : rep.terms) {
          terms.push_back({ki, level});
        }
        doc["terms"] = std::move(terms);
        doc["r"] = rep.r();
        doc["critical"] = rep.r() == r_m - 1;
        emit_json(out, doc);
      } else {
        out << r_k << " =";
        for (std::size_t i = 0; i < rep.terms.size(); ++i) {
          out << (i ? " + C(" : " C(") << rep.terms[i].first << ','
              << rep.terms[i].second << ')';
        }
        out << "  r=" << rep.r()
            << " critical=" << (rep.r() == r_m - 1 ? "true" : "false") << '\n';
      }
      return kExitOk;
    }

    if (critical_cmd->parsed()) {
      bool crit = is_critical(c_k, c_m);
      if (c_json) {
        Json doc;
        doc["k"] = c_k;
        doc["m"] = c_m;
        doc["critical"] = crit;
        emit_json(out, doc);
      } else {
        out << (crit ? "true" : "false") << '\n';
      }
      return kExitOk;
    }

    if (lambda_cmd->parsed()) {
      LambdaSeq seq = lambda_sequence(l_count);
      if (l_json) {
        Json doc;
        doc["count"] = l_count;
        Json values = Json::array();
        for (const Bigint& v : seq.values) values.push_back(v.str());
        doc["values"] = std::move(values);
        emit_json(out, doc);
      } else {
        for (std::size_t i = 0; i < seq.values.size(); ++i) {
          out << (i ? " " : "") << seq.values[i];
        }
        out << '\n';
      }
      return kExitOk;
    }

    if (ce_cmd->parsed()) {
      if (x_n == 0) x_n = x_t + 3;
      CounterexampleReport ce = counterexample(x_t, x_m, x_n);
      if (x_json) {
        Json doc;
        doc["t"] = ce.t;
        doc["m"] = ce.m;
        doc["n"] = ce.n;
        doc["k"] = ce.k.str();
        doc["boundary_construction"] = ce.boundary_construction.str();
        doc["boundary_colex"] = ce.boundary_colex.str();
        doc["ball_construction"] = ce.ball_size_construction.str();
        doc["ball_colex"] = ce.ball_size_colex.str();
        doc["shadow"] = ce.shadow_size.str();
        doc["strict"] = ce.strict;
        doc["t_above_lambda"] = ce.t_above_lambda;
        if (ce.family_materialized) doc["family"] = family_to_json(ce.family);
        emit_json(out, doc);
      } else {
        out << "t=" << ce.t << " m=" << ce.m << " n=" << ce.n
            << " k=" << ce.k << '\n';
        out << "boundary: construction=" << ce.boundary_construction
            << " colex=" << ce.boundary_colex
            << (ce.strict ? " (construction strictly smaller)"
                          : " (no strict gap)")
            << '\n';
        out << "ball: construction=" << ce.ball_size_construction
            << " colex=" << ce.ball_size_colex << '\n';
        out << "shadow=" << ce.shadow_size << " (same for both families)\n";
        if (!ce.t_above_lambda) {
          out << "warning: t <= lambda_{m-1}; the identity may not be the "
                 "m-binomial representation\n";
        }
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      return run_verify(v_ids, v_all, v_desk, v_json, out);
    }

    for (int i = 0; i < 4; ++i) {
      if (fam_cmds[i]->parsed()) {
        return run_family_op(fam_names[i], fam_opt[i].input, fam_opt[i].n,
                             fam_opt[i].lower, fam_opt[i].upper,
                             fam_opt[i].json, out);
      }
    }
  } catch (const FamilyParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInconclusive;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace jiso
