#include "podium/identity_suite.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "podium/qexpr.hpp"

namespace podium {

ManifestError::ManifestError(std::size_t line, const std::string& message)
    : std::runtime_error("manifest line " + std::to_string(line) + ": " + message), line_(line)
{
}

namespace {

struct Pending {
    IdentityRecord record;
    std::size_t line = 0;
    std::size_t lhs_line = 0;
    std::size_t rhs_line = 0;
    bool has_order = false;
};

void finish(Pending& p, std::set<std::string>& seen, std::vector<IdentityRecord>& out)
{
    IdentityRecord& r = p.record;
    if (r.id.empty())
        throw ManifestError(p.line, "record without id=");
    if (r.lhs.empty())
        throw ManifestError(p.line, "record '" + r.id + "' without lhs=");
    if (r.rhs.empty())
        throw ManifestError(p.line, "record '" + r.id + "' without rhs=");
    if (!seen.insert(r.id).second)
        throw ManifestError(p.line, "duplicate id '" + r.id + "'");
    const auto validate = [&](const std::string& text, std::size_t line, const char* side) {
        try {
            (void)qexpr::parse(text);
        } catch (const qexpr::SyntaxError& e) {
            throw ManifestError(line, std::string(side) + " of '" + r.id + "': " + e.what());
        }
    };
    validate(r.lhs, p.lhs_line, "lhs");
    validate(r.rhs, p.rhs_line, "rhs");
    out.push_back(std::move(r));
}

} // namespace

std::vector<IdentityRecord> parse_manifest(std::string_view text)
{
    std::vector<IdentityRecord> out;
    std::set<std::string> seen;
    std::optional<Pending> current;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        for (char c : line)
            if (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) > 0x7e)
                if (c != '\t')
                    throw ManifestError(line_no, "non-printable or non-ASCII byte");
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#')
            continue;
        line = line.substr(first);

        if (line == "[identity]") {
            if (current)
                finish(*current, seen, out);
            current.emplace();
            current->line = line_no;
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ManifestError(line_no, "expected key=value or [identity]");
        if (!current)
            throw ManifestError(line_no, "field outside of an [identity] record");
        const std::string key(line.substr(0, eq));
        const std::string value(line.substr(eq + 1));
        IdentityRecord& r = current->record;
        if (key == "id") {
            r.id = value;
        } else if (key == "desc") {
            r.description = value;
        } else if (key == "ref") {
            r.ref = value;
        } else if (key == "quote") {
            r.quote = value;
        } else if (key == "lhs") {
            r.lhs = value;
            current->lhs_line = line_no;
        } else if (key == "rhs") {
            r.rhs = value;
            current->rhs_line = line_no;
        } else if (key == "order" || key == "mod") {
            BigInt v;
            if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos ||
                v.set_str(value, 10) != 0)
                throw ManifestError(line_no, key + " must be a non-negative integer");
            if (key == "order") {
                if (!v.fits_ulong_p())
                    throw ManifestError(line_no, "order too large");
                r.order = v.get_ui();
            } else {
                if (v < 2)
                    throw ManifestError(line_no, "mod must be at least 2");
                r.modulus = v;
            }
        } else {
            throw ManifestError(line_no, "unknown field '" + key + "'");
        }
    }
    if (current)
        finish(*current, seen, out);
    return out;
}

std::vector<IdentityRecord> load_manifest(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read manifest " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifest(buf.str());
}

std::string format_manifest(std::span<const IdentityRecord> records)
{
    std::ostringstream os;
    for (const auto& r : records) {
        os << "[identity]\n" << "id=" << r.id << '\n';
        if (!r.description.empty())
            os << "desc=" << r.description << '\n';
        if (!r.ref.empty())
            os << "ref=" << r.ref << '\n';
        if (!r.quote.empty())
            os << "quote=" << r.quote << '\n';
        os << "lhs=" << r.lhs << '\n' << "rhs=" << r.rhs << '\n' << "order=" << r.order << '\n';
        if (r.modulus)
            os << "mod=" << r.modulus->get_str() << '\n';
        os << '\n';
    }
    return os.str();
}

const std::vector<IdentityRecord>& bundled_manifest()
{
    static const std::vector<IdentityRecord> records = parse_manifest(bundled_manifest_text());
    return records;
}

} // namespace podium
