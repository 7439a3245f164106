#include "podium/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "podium/identity_suite.hpp"
#include "podium/partitions.hpp"
#include "podium/qexpr.hpp"

namespace podium::cli {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 1469598103934665603ULL)
{
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex(std::uint64_t v)
{
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

struct Options {
    std::optional<Order> order;
    std::string format;
    std::string out_path;

    std::string function;
    std::string nmax;
    std::string manifest;
    std::string id;
    std::string expression;
    std::optional<unsigned> cap;
};

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err, std::optional<std::string> env_order)
        : out_(out), err_(err), env_order_(std::move(env_order))
    {
    }

    int compute(const Options& o)
    {
        const auto id = parse_function_id(o.function);
        if (!id) {
            err_ << "unknown function '" << o.function << "'; valid names: " << function_names()
                 << '\n';
            return kUsage;
        }
        Order nmax = 0;
        if (!o.nmax.empty()) {
            if (o.nmax.find_first_not_of("0123456789") != std::string::npos || o.nmax.size() > 9) {
                err_ << "nmax must be a non-negative integer, got '" << o.nmax << "'\n";
                return kUsage;
            }
            nmax = std::stoul(o.nmax);
        } else if (!default_order(o, nmax)) {
            return kUsage;
        }
        OutputFormat fmt = OutputFormat::Table;
        if (!o.format.empty() && !parse_format(o.format, fmt))
            return kUsage;
        const auto values = table(*id, nmax);
        return emit(o, format_sequence(values, fmt));
    }

    int verify(const Options& o)
    {
        std::vector<IdentityRecord> records;
        try {
            records = o.manifest.empty() ? bundled_manifest() : load_manifest(o.manifest);
        } catch (const std::exception& e) {
            err_ << e.what() << '\n';
            return kUsage;
        }
        if (!o.id.empty()) {
            std::erase_if(records, [&](const IdentityRecord& r) { return r.id != o.id; });
            if (records.empty()) {
                err_ << "no identity with id '" << o.id << "'\n";
                return kUsage;
            }
        }
        std::optional<Order> order_override;
        if (o.order) {
            order_override = o.order;
        } else if (env_order_) {
            Order n = 0;
            if (!default_order(o, n))
                return kUsage;
            order_override = n;
        }
        const SuiteReport report = run_suite(records, order_override);
        const int rc = emit(o, render(report, false));
        err_ << "verified in " << std::fixed << std::setprecision(1) << report.millis << " ms\n";
        if (rc != kOk)
            return rc;
        return report.all_passed() ? kOk : kVerifyFailed;
    }

    int expand(const Options& o)
    {
        Order order = 0;
        if (!default_order(o, order))
            return kUsage;
        OutputFormat fmt = OutputFormat::Table;
        if (!o.format.empty() && !parse_format(o.format, fmt))
            return kUsage;
        try {
            const auto ast = qexpr::parse(o.expression);
            const Series s = qexpr::eval(*ast, order);
            if (o.format.empty()) {
                std::string line;
                for (const auto& c : s.coeffs()) {
                    if (!line.empty())
                        line += ' ';
                    line += c.get_str();
                }
                return emit(o, line + '\n');
            }
            return emit(o, format_sequence(s.coeffs(), fmt));
        } catch (const qexpr::SyntaxError& e) {
            err_ << e.what() << '\n' << "  " << o.expression << '\n'
                 << "  " << std::string(e.offset(), ' ') << "^\n";
            return kUsage;
        } catch (const std::exception& e) {
            err_ << "evaluation error: " << e.what() << '\n';
            return kUsage;
        }
    }

    int oracle(const Options& o)
    {
        std::vector<FunctionId> functions(kAllFunctions.begin(), kAllFunctions.end());
        if (!o.function.empty()) {
            const auto id = parse_function_id(o.function);
            if (!id) {
                err_ << "unknown function '" << o.function
                     << "'; valid names: " << function_names() << '\n';
                return kUsage;
            }
            functions = {*id};
        }
        OracleCaps caps;
        if (o.cap)
            for (FunctionId id : functions)
                caps.set(id, *o.cap);
        const SuiteReport report = run_oracle_suite(caps, functions);
        const int rc = emit(o, render(report, false));
        if (rc != kOk)
            return rc;
        return report.all_passed() ? kOk : kVerifyFailed;
    }

    int bench(const Options& o)
    {
        Order order = 0;
        if (!default_order(o, order))
            return kUsage;
        std::ostringstream os;
        for (const auto& t : run_bench(order))
            os << std::left << std::setw(9) << t.label << " order=" << order << "  ms=" << std::fixed
               << std::setprecision(1) << t.millis << "  checksum=" << hex(t.checksum) << '\n';
        return emit(o, os.str());
    }

private:
    bool default_order(const Options& o, Order& result)
    {
        if (o.order) {
            result = *o.order;
            return true;
        }
        if (env_order_) {
            const std::string& v = *env_order_;
            if (v.empty() || v.size() > 9 || v.find_first_not_of("0123456789") != std::string::npos) {
                err_ << "PODIUM_ORDER must be a non-negative integer, got '" << v << "'\n";
                return false;
            }
            result = std::stoul(v);
            return true;
        }
        result = kDefaultOrder;
        return true;
    }

    bool parse_format(const std::string& text, OutputFormat& fmt)
    {
        if (text == "table")
            fmt = OutputFormat::Table;
        else if (text == "csv")
            fmt = OutputFormat::Csv;
        else if (text == "bfile")
            fmt = OutputFormat::Bfile;
        else {
            err_ << "unknown format '" << text << "'; expected table, csv or bfile\n";
            return false;
        }
        return true;
    }

    int emit(const Options& o, const std::string& text)
    {
        if (o.out_path.empty()) {
            out_ << text;
            return kOk;
        }
        std::ofstream f(o.out_path, std::ios::binary);
        f << text;
        if (!f) {
            err_ << "cannot write " << o.out_path << '\n';
            return kUsage;
        }
        return kOk;
    }

    std::ostream& out_;
    std::ostream& err_;
    std::optional<std::string> env_order_;
};

} // namespace

std::string format_sequence(std::span<const BigInt> values, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Csv:
        os << "n,value\n";
        for (std::size_t n = 0; n < values.size(); ++n)
            os << n << ',' << values[n].get_str() << '\n';
        break;
    case OutputFormat::Bfile:
        for (std::size_t n = 0; n < values.size(); ++n)
            os << n << ' ' << values[n].get_str() << '\n';
        break;
    case OutputFormat::Table: {
        std::size_t wn = 1;
        std::size_t wv = 5;
        for (std::size_t n = 0; n < values.size(); ++n) {
            wn = std::max(wn, std::to_string(n).size());
            wv = std::max(wv, values[n].get_str().size());
        }
        os << std::right << std::setw(static_cast<int>(wn)) << "n" << "  "
           << std::setw(static_cast<int>(wv)) << "value" << '\n';
        for (std::size_t n = 0; n < values.size(); ++n)
            os << std::setw(static_cast<int>(wn)) << n << "  " << std::setw(static_cast<int>(wv))
               << values[n].get_str() << '\n';
        break;
    }
    }
    return os.str();
}

std::uint64_t checksum(const Series& s)
{
    std::uint64_t h = fnv1a("");
    for (const auto& c : s.coeffs()) {
        h = fnv1a(c.get_str(), h);
        h = fnv1a(",", h);
    }
    return h;
}

std::vector<BenchTiming> run_bench(Order order)
{
    std::vector<BenchTiming> out;

    auto start = Clock::now();
    const SuiteReport report = run_suite(bundled_manifest(), order);
    out.push_back({"suite", millis_since(start), fnv1a(render(report, false))});

    const Series a = gf_series(FunctionId::P, order);
    const Series b = gf_series(FunctionId::QODD3, order);
    start = Clock::now();
    const Series product = mul(a, b);
    out.push_back({"multiply", millis_since(start), checksum(product)});

    start = Clock::now();
    const Series pod = gf_series(FunctionId::POD, order);
    out.push_back({"pod", millis_since(start), checksum(pod)});
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_order)
{
    CLI::App app{"Exact q-series engine for partition generating functions and identities",
                 "podium"};
    app.require_subcommand(1);
    Options o;

    const auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order", o.order, "Truncation order (default 300 or $PODIUM_ORDER)");
    };
    const auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", o.out_path, "Write output to this file instead of stdout");
    };

    auto* compute = app.add_subcommand("compute", "Print a partition function table");
    compute->add_option("function", o.function, "Function name")->required();
    compute->add_option("nmax", o.nmax, "Largest n (default: the default order)");
    compute->add_option("--format", o.format, "table, csv or bfile");
    add_out(compute);

    auto* verify = app.add_subcommand("verify", "Verify the identity manifest");
    verify->add_option("--manifest", o.manifest, "Manifest file (default: bundled)");
    verify->add_option("--id", o.id, "Check only this identity");
    add_order(verify);
    add_out(verify);

    auto* expand = app.add_subcommand("expand", "Expand a q-series expression");
    expand->add_option("expression", o.expression, "Expression text")->required();
    expand->add_option("--format", o.format, "table, csv or bfile (default: one line)");
    add_order(expand);
    add_out(expand);

    auto* oracle = app.add_subcommand("oracle", "Compare enumeration with generating series");
    oracle->add_option("--function", o.function, "Only this function");
    oracle->add_option("--cap", o.cap, "Largest n to enumerate");
    add_out(oracle);

    auto* bench = app.add_subcommand("bench", "Time the core computations");
    add_order(bench);
    add_out(bench);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << "run with --help for usage\n";
        return kUsage;
    }

    Runner r(out, err, env_order);
    if (*compute)
        return r.compute(o);
    if (*verify)
        return r.verify(o);
    if (*expand)
        return r.expand(o);
    if (*oracle)
        return r.oracle(o);
    return r.bench(o);
}

} // namespace podium::cli
