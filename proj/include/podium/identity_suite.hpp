#pragma once

// Identity manifests and the runners that verify them, plus the
// enumeration-versus-product-formula oracle suite.

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "podium/partitions.hpp"
#include "podium/series.hpp"

namespace podium {

struct IdentityRecord {
    std::string id;
    std::string description;
    std::string ref;
    std::string quote;
    std::string lhs;
    std::string rhs;
    Order order = 300;
    std::optional<BigInt> modulus;

    friend bool operator==(const IdentityRecord&, const IdentityRecord&) = default;
};

/// Malformed manifest text; the message names the line and, for expression
/// errors, the byte offset inside the expression.
class ManifestError : public std::runtime_error {
public:
    ManifestError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses the line-oriented manifest format and checks every lhs/rhs parses.
std::vector<IdentityRecord> parse_manifest(std::string_view text);
std::vector<IdentityRecord> load_manifest(const std::filesystem::path& path);
std::string format_manifest(std::span<const IdentityRecord> records);

std::string_view bundled_manifest_text();
const std::vector<IdentityRecord>& bundled_manifest();

enum class Status { Pass, Mismatch, Error };

struct SuiteEntry {
    std::string id;
    std::string ref;
    Status status = Status::Error;
    std::optional<Mismatch> mismatch;
    std::string error;
    Order order = 0;
    std::optional<BigInt> modulus;
    double millis = 0;
};

struct SuiteReport {
    std::vector<SuiteEntry> entries;
    double millis = 0;

    std::size_t count(Status s) const;
    bool all_passed() const { return count(Status::Pass) == entries.size(); }
};

/// Checks every record, at its own order or at `order_override` when given.
/// Evaluation errors are captured per record. Entries follow input order.
SuiteReport run_suite(std::span<const IdentityRecord> records,
                      std::optional<Order> order_override = std::nullopt, unsigned threads = 0);

using GfProvider = std::function<Series(FunctionId, Order)>;

/// For each function compares enumeration against the generating series on
/// 0..cap and reports the first disagreement.
SuiteReport run_oracle_suite(const OracleCaps& caps = {},
                             std::span<const FunctionId> functions = kAllFunctions,
                             const GfProvider& gf = gf_series, unsigned threads = 0);

/// One line per entry plus a summary line. Timings are appended only when
/// asked, so the body is byte-stable across runs.
std::string render(const SuiteReport& report, bool with_timing);

} // namespace podium
