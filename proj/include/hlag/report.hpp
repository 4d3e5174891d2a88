#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace hlag {

// One result line of a run: a deterministic key, a JSON payload, and the
// wall time spent producing it. Items are emitted in key order regardless
// of completion order.
struct ReportItem {
    std::string key;
    nlohmann::json payload;
    double wall_ms = 0.0;
};

// A reproducible run record. All numeric payload fields are functions of
// (command, config, seed); only the header timestamp and the per-item
// wall_ms fields are exempt from the determinism contract.
struct RunReport {
    std::string command;
    nlohmann::json config;
    std::vector<ReportItem> items;

    // JSONL: one header line, then one line per item.
    void write(std::ostream& os) const;

    // Idempotent overwrite. Throws std::runtime_error on I/O failure.
    void write_file(const std::string& path) const;
};

}  // namespace hlag
