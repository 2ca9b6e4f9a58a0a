#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "polyrank/certificate.hpp"
#include "polyrank/oracle.hpp"
#include "polyrank/ranking.hpp"

namespace {

constexpr int kExitProven = 0;
constexpr int kExitUnknown = 10;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;

struct Options {
  std::string mode = "auto";
  int max_degree = 0;
  int max_iters = 50;
  int max_cells = 64;
  int validate = 0;
  std::string format = "text";
  std::uint64_t seed = 1;
};

polyrank::RankingConfig to_config(const Options& opt) {
  polyrank::RankingConfig cfg;
  cfg.consequence.max_degree = opt.max_degree;
  cfg.consequence.max_cells = opt.max_cells;
  cfg.max_iterations = opt.max_iters;
  return cfg;
}

polyrank::TransitionFormula load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return polyrank::parse_formula(buf.str());
}

polyrank::Verdict run_mode(const polyrank::TransitionFormula& f, const Options& opt) {
  polyrank::RankingConfig cfg = to_config(opt);
  if (opt.mode == "prf") return polyrank::terminate_prf(f, cfg);
  if (opt.mode == "lprf") return polyrank::terminate_lprf(f, cfg);
  return polyrank::auto_prove(f, cfg);
}

// Sampling check of the emitted certificate: PRF witness decreases by >= 1 and
// stays nonnegative; every lprf quasi-ranking generator is nonnegative and
// non-increasing.  Returns the number of violations.
int validate_certificate(const polyrank::TransitionFormula& f, const polyrank::Verdict& v,
                         int samples, std::uint64_t seed) {
  polyrank::OracleConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  int violations = 0;
  if (v.certificate.witness) {
    // the witness ranks the zero-stable strengthening (termination-equivalent)
    auto models = polyrank::sample_models(polyrank::zero_stable_restrict(f), cfg);
    const polyrank::Polynomial& r = *v.certificate.witness;
    polyrank::Polynomial rp = r.prime();
    for (const auto& m : models) {
      if (r.eval(m) < 0) ++violations;
      if (rp.eval(m) > r.eval(m) - 1) ++violations;
    }
  }
  // each iteration's generators rank the formula framed by its predecessors
  polyrank::TransitionFormula framed = f;
  for (const auto& iter : v.certificate.iterations) {
    auto models = polyrank::sample_models(framed, cfg);
    for (const polyrank::Polynomial& p : iter.positives) {
      polyrank::Polynomial pp = p.prime();
      for (const auto& m : models) {
        if (p.eval(m) < 0) ++violations;
        if (pp.eval(m) > p.eval(m)) ++violations;
      }
    }
    framed = polyrank::conjoin_frame(framed, iter.zeros, iter.positives);
  }
  return violations;
}

int prove_file(const std::string& path, const Options& opt, bool print) {
  polyrank::TransitionFormula f;
  try {
    f = load(path);
  } catch (const polyrank::ParseError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }

  polyrank::Verdict v;
  try {
    v = run_mode(f, opt);
  } catch (const polyrank::ResourceLimitError& e) {
    std::cerr << path << ": resource limit: " << e.what() << "\n";
    return kExitResource;
  }

  if (print) {
    if (opt.format == "json")
      std::cout << polyrank::verdict_to_json(v).dump(2) << "\n";
    else
      std::cout << polyrank::verdict_text(v);
  }

  if (opt.validate > 0) {
    int bad = validate_certificate(f, v, opt.validate, opt.seed);
    if (print) std::cout << "validation violations: " << bad << "\n";
    if (bad > 0) return kExitUnknown;
  }
  return v.status == polyrank::Status::Unknown ? kExitUnknown : kExitProven;
}

int run_corpus(const std::string& dir, const Options& opt) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".loop") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());

  std::vector<std::future<int>> results;
  for (const std::string& f : files)
    results.push_back(std::async(std::launch::async,
                                 [f, opt] { return prove_file(f, opt, false); }));

  int proven = 0, unknown = 0, failed = 0;
  for (size_t i = 0; i < files.size(); ++i) {
    int code = results[i].get();
    const char* tag = code == kExitProven ? "proven"
                      : code == kExitUnknown ? "unknown"
                                             : "error";
    std::cout << tag << "\t" << files[i] << "\n";
    (code == kExitProven ? proven : code == kExitUnknown ? unknown : failed)++;
  }
  std::cout << proven << " proven, " << unknown << " unknown, " << failed
            << " errors of " << files.size() << "\n";
  return failed > 0 ? kExitResource : kExitProven;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyrank: termination proofs via polynomial ranking functions"};
  app.require_subcommand(1);

  Options opt;
  std::string path;

  CLI::App* prove = app.add_subcommand("prove", "prove termination of one loop file");
  prove->add_option("file", path, "loop file")->required();

  CLI::App* corpus = app.add_subcommand("corpus", "run every .loop file in a directory");
  corpus->add_option("dir", path, "directory of loop files")->required();

  for (CLI::App* sub : {prove, corpus}) {
    sub->add_option("--mode", opt.mode, "prf|lprf|auto")
        ->check(CLI::IsMember({"prf", "lprf", "auto"}));
    sub->add_option("--max-degree", opt.max_degree, "cone-intersection degree bound");
    sub->add_option("--max-iters", opt.max_iters, "lexicographic iteration cap");
    sub->add_option("--max-cells", opt.max_cells, "DNF cell cap");
    sub->add_option("--validate", opt.validate, "sample-check certificates with N models");
    sub->add_option("--format", opt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", opt.seed, "sampling seed");
  }

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(prove)) return prove_file(path, opt, true);
  return run_corpus(path, opt);
}
