#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "petit/config/job.hpp"

namespace petit::cli {

struct RunOptions {
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

/// Each command emits a flat list of records; every record has a "type".
using Records = std::vector<nlohmann::json>;

Records cmd_presets();
Records cmd_analyze(const Job& job, const RunOptions& opt);
Records cmd_quotient(const Job& job, const RunOptions& opt);
Records cmd_decompose(const Job& job, const RunOptions& opt);
Records cmd_codebook(const Job& job, const RunOptions& opt);
Records cmd_bound(const Job& job, const RunOptions& opt);

/// records: one compact JSON object per line. text: a readable listing.
std::string render_records(const Records& r);
std::string render_text(const Records& r);

}  // namespace petit::cli
