#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "commands.hpp"

namespace {

using namespace petit;
using namespace petit::cli;

struct Shared {
  std::string config;
  std::string preset;
  std::string out;
  std::optional<std::uint64_t> budget;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
  std::string format = "text";
};

void add_shared(CLI::App* cmd, Shared& s, bool needs_job) {
  if (needs_job) {
    auto* cfg = cmd->add_option("--config", s.config, "JSON job file");
    auto* pre = cmd->add_option("--preset", s.preset, "named job preset (see: petit presets list)");
    cfg->excludes(pre);
    cmd->add_option("--budget", s.budget, "cap on enumerated elements");
    cmd->add_option("--threads", s.threads, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", s.seed, "seed for sampled checks");
  }
  cmd->add_option("--out", s.out, "write <DIR>/<command>.txt or .jsonl instead of stdout");
  cmd->add_option("--format", s.format, "text or records")->check(CLI::IsMember({"text", "records"}));
}

Job load_job(const Shared& s) {
  if (s.config.empty() == s.preset.empty()) throw ConfigError("exactly one of --config and --preset is required");
  Job job;
  if (!s.preset.empty()) {
    job = parse_job(job_preset(s.preset));
  } else {
    std::ifstream in(s.config);
    if (!in) throw ConfigError("cannot read " + s.config);
    std::stringstream buf;
    buf << in.rdbuf();
    job = parse_job_text(buf.str(), s.config);
  }
  if (s.budget) job.budget = *s.budget;
  if (s.seed != 1 || job.seed == 0) job.seed = s.seed;
  return job;
}

void emit(const Shared& s, const std::string& command, const Records& records) {
  const bool rec = s.format == "records";
  const std::string body = rec ? render_records(records) : render_text(records);
  if (s.out.empty()) {
    std::cout << body;
    return;
  }
  std::filesystem::create_directories(s.out);
  const auto path = std::filesystem::path(s.out) / (command + (rec ? ".jsonl" : ".txt"));
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Petit algebras over number-field orders: quotients, decompositions and coset codes"};
  app.require_subcommand(1);
  Shared s;

  struct Entry {
    const char* name;
    const char* help;
    Records (*run)(const Job&, const RunOptions&);
  };
  const Entry entries[] = {
      {"analyze", "structure of the algebra and its finite quotient", cmd_analyze},
      {"quotient", "quotient cardinalities, fixed rings, splitting and components", cmd_quotient},
      {"decompose", "components of the quotient along the center", cmd_decompose},
      {"codebook", "coset codebook records, d_H, minimum determinants and bound", cmd_codebook},
      {"bound", "determinant bound of the coset code over the configured box", cmd_bound},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    auto* cmd = app.add_subcommand(e.name, e.help);
    add_shared(cmd, s, true);
    subs.emplace_back(cmd, &e);
  }
  auto* presets = app.add_subcommand("presets", "built-in job presets");
  auto* list = presets->add_subcommand("list", "list preset names");
  presets->require_subcommand(1);
  add_shared(list, s, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      emit(s, "presets", cmd_presets());
      return 0;
    }
    for (const auto& [cmd, e] : subs) {
      if (!*cmd) continue;
      const Job job = load_job(s);
      const RunOptions opt{s.threads, job.seed};
      emit(s, e->name, e->run(job, opt));
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
