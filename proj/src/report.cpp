#include "hlag/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include "hlag/version.hpp"

namespace hlag {

namespace {

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

void RunReport::write(std::ostream& os) const {
    nlohmann::json header;
    header["tool"] = kToolName;
    header["version"] = kVersion;
    header["command"] = command;
    header["config"] = config;
    header["timestamp"] = utc_timestamp();
    os << header.dump() << "\n";
    for (const auto& item : items) {
        nlohmann::json line = item.payload;
        line["item"] = item.key;
        line["wall_ms"] = item.wall_ms;
        os << line.dump() << "\n";
    }
}

void RunReport::write_file(const std::string& path) const {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open report file: " + path);
    write(os);
    if (!os) throw std::runtime_error("failed writing report file: " + path);
}

}  // namespace hlag
