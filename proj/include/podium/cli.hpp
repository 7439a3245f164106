#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "podium/series.hpp"

namespace podium::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

inline constexpr Order kDefaultOrder = 300;

enum class OutputFormat { Table, Csv, Bfile };

/// Writes values as "n,value" CSV, "n value" b-file lines, or an aligned table.
std::string format_sequence(std::span<const BigInt> values, OutputFormat format);

/// FNV-1a over the decimal coefficients; stable across runs and platforms.
std::uint64_t checksum(const Series& s);

struct BenchTiming {
    std::string label;
    double millis = 0;
    std::uint64_t checksum = 0;
};

/// Full-suite verification, one order-N multiplication, and the pod series build.
std::vector<BenchTiming> run_bench(Order order);

/// Entry point behind the podium executable. `args` excludes the program
/// name; `env_order` is the value of PODIUM_ORDER, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_order = std::nullopt);

} // namespace podium::cli
