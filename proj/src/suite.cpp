#include "podium/identity_suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "podium/qexpr.hpp"

namespace podium {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs job(i) for i in [0, count) on up to `threads` workers. Results are
// written by index, so ordering never depends on scheduling.
template <class Job>
void fan_out(std::size_t count, unsigned threads, Job job)
{
    if (threads == 0)
        threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                job(i);
        });
}

SuiteEntry check_record(const IdentityRecord& r, Order order)
{
    SuiteEntry e;
    e.id = r.id;
    e.ref = r.ref;
    e.order = order;
    e.modulus = r.modulus;
    const auto start = Clock::now();
    try {
        const auto lhs = qexpr::parse(r.lhs);
        const auto rhs = qexpr::parse(r.rhs);
        e.mismatch = qexpr::check(*lhs, *rhs, order, r.modulus);
        e.status = e.mismatch ? Status::Mismatch : Status::Pass;
    } catch (const std::exception& ex) {
        e.status = Status::Error;
        e.error = ex.what();
    }
    e.millis = millis_since(start);
    return e;
}

SuiteEntry check_function(FunctionId id, const OracleCaps& caps, const GfProvider& gf)
{
    SuiteEntry e;
    e.id = std::string(name(id));
    e.ref = "enumeration vs generating series";
    const unsigned cap = caps.cap(id);
    e.order = cap;
    const auto start = Clock::now();
    try {
        if (cap > OracleCaps::hard_limit(id))
            throw CapRefusal("cap " + std::to_string(cap) + " exceeds the enumeration limit " +
                             std::to_string(OracleCaps::hard_limit(id)) + " for " + e.id);
        const Series s = gf(id, cap);
        e.status = Status::Pass;
        for (unsigned n = 0; n <= cap; ++n) {
            BigInt counted = count_by_enumeration(id, n, caps);
            if (counted != s[n]) {
                e.mismatch = Mismatch{n, std::move(counted), s[n]};
                e.status = Status::Mismatch;
                break;
            }
        }
    } catch (const std::exception& ex) {
        e.status = Status::Error;
        e.error = ex.what();
    }
    e.millis = millis_since(start);
    return e;
}

} // namespace

std::size_t SuiteReport::count(Status s) const
{
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [s](const auto& e) { return e.status == s; }));
}

SuiteReport run_suite(std::span<const IdentityRecord> records, std::optional<Order> order_override,
                      unsigned threads)
{
    SuiteReport report;
    report.entries.resize(records.size());
    const auto start = Clock::now();
    fan_out(records.size(), threads, [&](std::size_t i) {
        report.entries[i] = check_record(records[i], order_override.value_or(records[i].order));
    });
    report.millis = millis_since(start);
    return report;
}

SuiteReport run_oracle_suite(const OracleCaps& caps, std::span<const FunctionId> functions,
                             const GfProvider& gf, unsigned threads)
{
    SuiteReport report;
    report.entries.resize(functions.size());
    const auto start = Clock::now();
    fan_out(functions.size(), threads, [&](std::size_t i) {
        report.entries[i] = check_function(functions[i], caps, gf);
    });
    report.millis = millis_since(start);
    return report;
}

std::string render(const SuiteReport& report, bool with_timing)
{
    std::size_t width = 0;
    for (const auto& e : report.entries)
        width = std::max(width, e.id.size());

    std::ostringstream os;
    for (const auto& e : report.entries) {
        switch (e.status) {
        case Status::Pass:
            os << "PASS  ";
            break;
        case Status::Mismatch:
            os << "FAIL  ";
            break;
        case Status::Error:
            os << "ERROR ";
            break;
        }
        os << std::left << std::setw(static_cast<int>(width)) << e.id << "  order=" << e.order;
        if (e.modulus)
            os << " mod=" << e.modulus->get_str();
        if (e.status == Status::Mismatch)
            os << "  mismatch at n=" << e.mismatch->index << ": lhs=" << e.mismatch->lhs.get_str()
               << " rhs=" << e.mismatch->rhs.get_str();
        else if (e.status == Status::Error)
            os << "  " << e.error;
        if (!e.ref.empty())
            os << "  [" << e.ref << "]";
        if (with_timing)
            os << "  (" << std::fixed << std::setprecision(1) << e.millis << " ms)";
        os << '\n';
    }
    os << report.entries.size() << " checked: " << report.count(Status::Pass) << " passed, "
       << report.count(Status::Mismatch) << " failed, " << report.count(Status::Error)
       << " errors";
    if (with_timing)
        os << " in " << std::fixed << std::setprecision(1) << report.millis << " ms";
    os << '\n';
    return os.str();
}

} // namespace podium
