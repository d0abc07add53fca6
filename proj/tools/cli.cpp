#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tourlab/blowup.hpp"
#include "tourlab/classify.hpp"
#include "tourlab/diamonds.hpp"
#include "tourlab/linalg.hpp"
#include "tourlab/lnfamily.hpp"
#include "tourlab/patterns.hpp"
#include "tourlab/switching.hpp"
#include "tourlab/verify.hpp"

namespace tourlab::cli {
namespace {

using nlohmann::json;

struct Globals {
  std::uint64_t seed = VerifyConfig{}.seed;
  int threads = 0;
  bool json = false;
  bool timing = false;
};

// Determinants of order <= 20 stay below 2^63 (Hadamard), so JSON output
// can carry them as plain integers.
json exact(ExactInt v) { return static_cast<std::int64_t>(v); }

json set_json(VertexSet s) { return s.members(); }

std::vector<int> parse_counts(const std::string& text) {
  std::vector<int> counts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      counts.push_back(v);
    } catch (const std::logic_error&) {
      throw ArgumentError("bad count '" + tok + "'");
    }
  }
  if (counts.empty()) throw ArgumentError("--counts needs at least one value");
  return counts;
}

VertexSet parse_set(const std::string& text, const Tournament& t) {
  const VertexSet s = VertexSet::parse(text);
  if (!s.subset_of(t.vertices())) {
    throw ArgumentError("set " + text + " exceeds vertices 1.." + std::to_string(t.order()));
  }
  return s;
}

// Either .trn or a full matrix; .trn is tried first.
Tournament read_any(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_trn(buf.str());
  } catch (const FormatError&) {
    return parse_matrix_text(buf.str()).to_tournament();
  }
}

void emit_trn(const Tournament& t, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << format_trn(t);
  } else {
    write_trn_file(out_path, t);
    out << "wrote " << out_path << "\n";
  }
}

std::string certificate_text(const BlowupCertificate& cert) {
  std::string text = "base " + to_string(cert.base_kind) + "\n";
  text += "switch " + cert.switch_set.vertices.to_string() + "\n";
  for (std::size_t i = 0; i < cert.parts.size(); ++i) {
    text += "part " + std::to_string(i + 1) + " ";
    if (cert.parts[i].empty()) {
      text += "-";
    } else {
      for (std::size_t k = 0; k < cert.parts[i].size(); ++k) {
        text += (k ? "," : "") + std::to_string(cert.parts[i][k]);
      }
    }
    text += "\n";
  }
  return text;
}

json certificate_json(const BlowupCertificate& cert) {
  return {{"base", to_string(cert.base_kind)},
          {"switch", set_json(cert.switch_set.vertices)},
          {"parts", cert.parts}};
}

json report_json(const ClaimReport& r, const std::string& counterexample_path) {
  json j = {{"id", r.id},
            {"statement", r.statement},
            {"population", r.population},
            {"count", r.count},
            {"outcome", r.passed ? "pass" : "fail"},
            {"seed", r.seed},
            {"elapsed_seconds", r.elapsed.count()},
            {"details", r.details}};
  if (r.counterexample) {
    j["counterexample"] = {{"n", r.counterexample->order()},
                           {"bits", r.counterexample->to_bits()},
                           {"path", counterexample_path}};
  }
  return j;
}

struct Timer {
  bool enabled;
  std::ostream& err;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    if (!enabled) return;
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    err << "elapsed " << d.count() << "s\n";
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact determinants, switching and D_k classification for tournaments", "tourlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char* env = std::getenv("TOURLAB_THREADS")) g.threads = std::max(0, std::atoi(env));
  app.add_option("--seed", g.seed, "Seed for sampled populations");
  app.add_option("--threads", g.threads, "Worker threads (default: TOURLAB_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--timing", g.timing, "Print elapsed time to stderr");

  std::string file, file2, set_text, counts_text, out_path, to_format, out_dir;
  int vertex = 0, order = 0;
  bool witnesses = false, with_certificate = false, all = false, quick = false, details = false;
  std::uint64_t samples = 100000;
  std::vector<std::string> ids;
  std::function<int()> action;

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", file, "Tournament (.trn)")->required();
  };
  auto on = [&](CLI::App* sub, std::function<int()> f) {
    sub->callback([&action, f] { action = f; });
  };

  auto* det = app.add_subcommand("det", "Determinant of the skew-adjacency matrix");
  file_arg(det);
  on(det, [&] {
    const ExactInt d = determinant(read_any(file));
    if (g.json) out << json{{"det", exact(d)}}.dump() << "\n"; else out << to_string(d) << "\n";
    return kOk;
  });

  auto* pf = app.add_subcommand("pfaffian", "Pfaffian (even order)");
  file_arg(pf);
  on(pf, [&] {
    const ExactInt p = pfaffian(read_any(file));
    if (g.json) out << json{{"pfaffian", exact(p)}}.dump() << "\n"; else out << to_string(p) << "\n";
    return kOk;
  });

  auto* dia = app.add_subcommand("diamonds", "Diamond count and witnesses");
  file_arg(dia);
  dia->add_flag("--witnesses", witnesses, "List the diamond 4-subsets");
  on(dia, [&] {
    const DiamondCensus c = diamond_census(read_any(file));
    if (g.json) {
      json j = {{"delta", c.delta}};
      if (witnesses) {
        j["witnesses"] = json::array();
        for (VertexSet w : c.witnesses) j["witnesses"].push_back(set_json(w));
      }
      out << j.dump() << "\n";
    } else {
      out << c.delta << "\n";
      if (witnesses) for (VertexSet w : c.witnesses) out << w.to_string() << "\n";
    }
    return kOk;
  });

  auto* ps = app.add_subcommand("psi", "Run pattern of a vertex against a transitive set");
  file_arg(ps);
  ps->add_option("--vertex", vertex, "Vertex u")->required();
  ps->add_option("--set", set_text, "Transitive set X, e.g. 1,2,3")->required();
  on(ps, [&] {
    const Tournament t = read_any(file);
    const PsiPattern p = psi(t, vertex, parse_set(set_text, t));
    if (g.json) out << json{{"psi", p.alphas()}}.dump() << "\n"; else out << p.to_string() << "\n";
    return kOk;
  });

  auto* sw = app.add_subcommand("switch", "Reverse all arcs between W and its complement");
  file_arg(sw);
  sw->add_option("--set", set_text, "Switch set W")->required();
  sw->add_option("--out", out_path, "Write .trn here instead of stdout");
  on(sw, [&] {
    const Tournament t = read_any(file);
    emit_trn(switched(t, parse_set(set_text, t)), out_path, out);
    return kOk;
  });

  auto* seq = app.add_subcommand("switch-equiv", "Labeled switching equivalence");
  seq->add_option("a", file, "First tournament")->required();
  seq->add_option("b", file2, "Second tournament")->required();
  on(seq, [&] {
    const Tournament a = read_any(file);
    const Tournament b = read_any(file2);
    if (a.order() != b.order()) throw ArgumentError("tournaments have different orders");
    const auto w = switching_equivalent_labeled(a, b);
    if (g.json) {
      json j = {{"equivalent", w.has_value()}};
      if (w) j["switch"] = set_json(w->vertices);
      out << j.dump() << "\n";
    } else if (w) {
      out << "equivalent switch " << w->vertices.to_string() << "\n";
    } else {
      out << "not equivalent\n";
    }
    return kOk;
  });

  auto* bl = app.add_subcommand("blowup", "Transitive blowup of a base tournament");
  file_arg(bl);
  bl->add_option("--counts", counts_text, "Part sizes, e.g. 2,1,1,1,1,1")->required();
  bl->add_option("--out", out_path, "Write .trn here instead of stdout");
  on(bl, [&] {
    emit_trn(transitive_blowup(read_any(file), parse_counts(counts_text)), out_path, out);
    return kOk;
  });

  auto* bd = app.add_subcommand("blowup-det", "Determinant of a transitive blowup by formula");
  file_arg(bd);
  bd->add_option("--counts", counts_text, "Part sizes")->required();
  on(bd, [&] {
    const ExactInt d = blowup_det_formula(read_any(file), parse_counts(counts_text));
    if (g.json) out << json{{"det", exact(d)}}.dump() << "\n"; else out << to_string(d) << "\n";
    return kOk;
  });

  auto* ln = app.add_subcommand("ln", "Build L_n");
  ln->add_option("n", order, "Order (2..20)")->required();
  ln->add_option("--out", out_path, "Write .trn here instead of stdout");
  on(ln, [&] {
    emit_trn(make_ln(order), out_path, out);
    return kOk;
  });

  auto* lnd = app.add_subcommand("ln-det", "det(L_n) = (n-1)^2, cross-checked");
  lnd->add_option("n", order, "Even order")->required();
  on(lnd, [&] {
    const ExactInt d = ln_det(order);
    if (g.json) out << json{{"det", exact(d)}}.dump() << "\n"; else out << to_string(d) << "\n";
    return kOk;
  });

  auto* q = app.add_subcommand("q", "Q_m by determinant and by recurrence");
  q->add_option("m", order, "Order (>= 3)")->required();
  on(q, [&] {
    const ExactInt v = q_value(order);
    if (g.json) out << json{{"q", exact(v)}}.dump() << "\n"; else out << to_string(v) << "\n";
    return kOk;
  });

  auto* cl = app.add_subcommand("classify", "Least k with T in D_k");
  file_arg(cl);
  cl->add_flag("--certificate", with_certificate, "Print the blowup certificate");
  on(cl, [&] {
    const Tournament t = read_any(file);
    const ClassifyResult r = classify(t);
    const ExactInt max_det = determinant(t, r.witness_subset);
    if (g.json) {
      json j = {{"level", r.level}, {"max_det", exact(max_det)}, {"witness", set_json(r.witness_subset)}};
      if (with_certificate && r.certificate) j["certificate"] = certificate_json(*r.certificate);
      out << j.dump() << "\n";
    } else {
      out << "level " << r.level << "\n";
      out << "max_det " << to_string(max_det) << "\n";
      out << "witness " << r.witness_subset.to_string() << "\n";
      if (with_certificate) {
        out << (r.certificate ? certificate_text(*r.certificate) : std::string("certificate none\n"));
      }
    }
    return kOk;
  });

  auto* sp = app.add_subcommand("six-profile", "(delta, det) of a 6-tournament");
  file_arg(sp);
  on(sp, [&] {
    const SixProfile p = six_profile(read_any(file));
    if (g.json) {
      out << json{{"delta", p.delta}, {"det", exact(p.det)}}.dump() << "\n";
    } else {
      out << "delta " << p.delta << " det " << to_string(p.det) << "\n";
    }
    return kOk;
  });

  auto* vf = app.add_subcommand("verify", "Replay registered claims");
  vf->add_option("ids", ids, "Claim ids");
  vf->add_flag("--all", all, "Every registered claim");
  vf->add_flag("--quick", quick, "Smaller populations");
  vf->add_flag("--details", details, "Print per-claim tables");
  vf->add_option("--out-dir", out_dir, "Where counterexamples are written (default: .)");
  on(vf, [&] {
    if (all == !ids.empty()) throw CLI::ValidationError("verify", "give claim ids or --all, not both");
    if (all) for (const ClaimInfo& c : claim_registry()) ids.push_back(c.id);
    const VerifyConfig config{g.seed, g.threads, quick};
    bool failed = false;
    json reports = json::array();
    for (const std::string& id : ids) {
      const ClaimReport r = run_claim(id, config);
      std::string path;
      if (r.counterexample) {
        const std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
        std::filesystem::create_directories(dir);
        path = (dir / (id + ".counterexample.trn")).string();
        write_trn_file(path, *r.counterexample);
        failed = true;
      }
      if (g.json) {
        reports.push_back(report_json(r, path));
        continue;
      }
      if (ids.size() > 1) out << id << " ";
      if (r.passed) {
        out << "PASS (" << r.count << " " << (r.population.find("tournament") != std::string::npos ? "tournaments" : "cases") << ")\n";
      } else {
        out << "FAIL counterexample " << path << "\n";
      }
      if (details) for (const std::string& line : r.details) out << "  " << line << "\n";
    }
    if (g.json) out << reports.dump(2) << "\n";
    return failed ? kVerificationFailure : kOk;
  });

  auto* cs = app.add_subcommand("census", "(det, delta, level) frequencies");
  cs->add_option("n", order, "Order (<= 7 full, 8..9 sampled)")->required();
  cs->add_option("--samples", samples, "Draws for sampled orders");
  on(cs, [&] {
    const CensusResult c = census(order, VerifyConfig{g.seed, g.threads, false}, samples);
    if (g.json) {
      json rows = json::array();
      for (const CensusRow& r : c.rows) {
        rows.push_back({{"det", exact(r.det)}, {"delta", r.delta}, {"level", r.level}, {"count", r.count}});
      }
      out << json{{"n", c.order}, {"sampled", c.sampled}, {"population", c.population},
                  {"seed", c.seed}, {"rows", rows}}.dump(2) << "\n";
    } else {
      out << "n " << c.order << (c.sampled ? " sampled " : " full ") << c.population << "\n";
      out << "det delta level count\n";
      for (const CensusRow& r : c.rows) {
        out << to_string(r.det) << " " << r.delta << " " << r.level << " " << r.count << "\n";
      }
    }
    return kOk;
  });

  auto* cv = app.add_subcommand("convert", "Translate between .trn and matrix text");
  file_arg(cv);
  cv->add_option("--to", to_format, "Target format")->required()->check(CLI::IsMember({"matrix", "trn"}));
  cv->add_option("--out", out_path, "Write here instead of stdout");
  on(cv, [&] {
    const Tournament t = read_any(file);
    const std::string text = to_format == "trn" ? format_trn(t) : format_matrix_text(skew_matrix(t));
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw FormatError("cannot write '" + out_path + "'");
      f << text;
      out << "wrote " << out_path << "\n";
    }
    return kOk;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  }

  Timer timer{g.timing, err};
  try {
    return action();
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace tourlab::cli
