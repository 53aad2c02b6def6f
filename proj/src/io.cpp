#include <collatz/io.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace collatz {

using nlohmann::json;

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot open '" + path.string() + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw InvalidInput("failed writing '" + path.string() + "'");
}

// ---------------------------------------------------------------------------
// Level sets

namespace {

constexpr std::string_view kLevelMagic = "collatz-levelset v1 ";

bool is_canonical_decimal(std::string_view s) {
    if (s.empty() || (s.size() > 1 && s.front() == '0')) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

std::size_t parse_size_field(std::string_view field, std::string_view key, std::size_t line) {
    if (field.substr(0, key.size()) != key) throw ParseError("expected '" + std::string(key) + "'", line);
    field.remove_prefix(key.size());
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size() || !is_canonical_decimal(field))
        throw ParseError("bad value for '" + std::string(key) + "'", line);
    return v;
}

}  // namespace

std::string format_levelset(const LevelSet& level) {
    std::string out;
    out += kLevelMagic;
    out += "nu=" + std::to_string(level.nu) + " count=" + std::to_string(level.elements.size()) + "\n";
    for (const BigNat& n : level.elements) {
        out += n.str();
        out += '\n';
    }
    return out;
}

LevelSet parse_levelset(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    if (lines.empty()) throw ParseError("empty file", 1);

    std::string_view header = lines[0];
    if (header.substr(0, kLevelMagic.size()) != kLevelMagic)
        throw ParseError("missing 'collatz-levelset v1' header", 1);
    header.remove_prefix(kLevelMagic.size());
    const std::size_t space = header.find(' ');
    if (space == std::string_view::npos) throw ParseError("header needs nu= and count=", 1);
    LevelSet level;
    level.nu = parse_size_field(header.substr(0, space), "nu=", 1);
    const std::size_t count = parse_size_field(header.substr(space + 1), "count=", 1);

    level.elements.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (!is_canonical_decimal(lines[i]) || lines[i] == "0")
            throw ParseError("expected a positive decimal integer", i + 1);
        level.elements.push_back(BigNat::parse(lines[i]));
    }
    if (level.elements.size() != count)
        throw IntegrityError("header count " + std::to_string(count) + " but " +
                             std::to_string(level.elements.size()) + " elements");
    check_level_shape(level);
    return level;
}

void write_levelset(const LevelSet& level, const std::filesystem::path& path) {
    write_text_file(path, format_levelset(level));
}

LevelSet read_levelset(const std::filesystem::path& path) { return parse_levelset(read_text_file(path)); }

// ---------------------------------------------------------------------------
// Checkpoints

namespace {

constexpr std::string_view kCheckpointMagic = "collatz-scan-checkpoint";

std::string_view to_string(DomainKind k) { return k == DomainKind::integers ? "integers" : "levels"; }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw CheckpointError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) throw CheckpointError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

BigNat bignat_field(const json& j, const char* key) {
    const std::string s = string_field(j, key);
    if (!is_canonical_decimal(s)) throw CheckpointError(std::string("field '") + key + "' is not a decimal integer");
    return BigNat::parse(s);
}

std::uint64_t u64_field(const json& j, const char* key) {
    auto v = bignat_field(j, key).to_u64();
    if (!v) throw CheckpointError(std::string("field '") + key + "' exceeds 64 bits");
    return *v;
}

std::uint64_t count_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_unsigned()) throw CheckpointError(std::string("field '") + key + "' must be an unsigned integer");
    return v.get<std::uint64_t>();
}

}  // namespace

json ratio_to_json(const ExactRatio& r) { return {{"num", r.num().str()}, {"den", r.den().str()}}; }

ExactRatio ratio_from_json(const json& j) {
    const BigNat num = bignat_field(j, "num");
    const BigNat den = bignat_field(j, "den");
    if (den.is_zero()) throw CheckpointError("zero denominator");
    ExactRatio r(num, den);
    if (r.num() != num) throw CheckpointError("ratio " + num.str() + "/" + den.str() + " is not reduced");
    return r;
}

json checkpoint_to_json(const ScanCheckpoint& cp) {
    json j;
    j["format"] = kCheckpointMagic;
    j["format_version"] = cp.format_version;
    j["domain"] = {{"kind", to_string(cp.domain.kind)},
                   {"lo", std::to_string(cp.domain.lo)},
                   {"hi", std::to_string(cp.domain.hi)}};
    json modes = json::array();
    for (SteadinessMode m : cp.modes) modes.push_back(to_string(m));
    j["modes"] = modes;
    j["cap"] = cp.cap;
    j["cursor"] = cp.cursor ? json(std::to_string(*cp.cursor)) : json(nullptr);
    j["processed_count"] = cp.processed_count;
    json skipped = json::array();
    for (const BigNat& n : cp.skipped_cap_exceeded) skipped.push_back(n.str());
    j["skipped_cap_exceeded"] = skipped;
    json minima = json::array();
    for (const ScanMinimum& m : cp.minima) {
        minima.push_back({{"mode", to_string(m.value.mode)},
                          {"exact", ratio_to_json(m.value.exact)},
                          {"argmin", m.argmin.str()},
                          {"log2_approx", m.value.log2_approx},
                          {"value_approx", m.value.exact.to_double()}});
    }
    j["minima"] = minima;
    return j;
}

ScanCheckpoint checkpoint_from_json(const json& j) {
    try {
        if (string_field(j, "format") != kCheckpointMagic) throw CheckpointError("not a scan checkpoint");
        const json& version = field(j, "format_version");
        if (!version.is_number_integer() || version.get<int>() != kCheckpointFormatVersion)
            throw CheckpointError("unsupported checkpoint format version " + version.dump());

        ScanCheckpoint cp;
        const json& domain = field(j, "domain");
        const std::string kind = string_field(domain, "kind");
        if (kind == "integers")
            cp.domain.kind = DomainKind::integers;
        else if (kind == "levels")
            cp.domain.kind = DomainKind::levels;
        else
            throw CheckpointError("unknown domain kind '" + kind + "'");
        cp.domain.lo = u64_field(domain, "lo");
        cp.domain.hi = u64_field(domain, "hi");
        if (cp.domain.hi < cp.domain.lo) throw CheckpointError("checkpoint domain is empty");

        const json& modes = field(j, "modes");
        if (!modes.is_array() || modes.empty()) throw CheckpointError("'modes' must be a non-empty array");
        for (const json& m : modes) {
            if (!m.is_string()) throw CheckpointError("mode must be a string");
            try {
                cp.modes.push_back(parse_steadiness_mode(m.get<std::string>()));
            } catch (const InvalidInput& e) {
                throw CheckpointError(e.what());
            }
        }
        if (cp.modes != modes_of(ModeSelection::literal) && cp.modes != modes_of(ModeSelection::telescoping) &&
            cp.modes != modes_of(ModeSelection::both))
            throw CheckpointError("unsupported mode list");

        cp.cap = count_field(j, "cap");
        if (cp.cap == 0) throw CheckpointError("cap must be >= 1");

        const json& cursor = field(j, "cursor");
        if (!cursor.is_null()) {
            cp.cursor = u64_field(j, "cursor");
            if (*cp.cursor < cp.domain.lo || *cp.cursor > cp.domain.hi)
                throw CheckpointError("cursor outside the checkpoint domain");
        }
        cp.processed_count = count_field(j, "processed_count");
        const std::uint64_t expected = cp.cursor ? *cp.cursor - cp.domain.lo + 1 : 0;
        if (cp.processed_count != expected) throw CheckpointError("processed_count does not match cursor");

        const json& skipped = field(j, "skipped_cap_exceeded");
        if (!skipped.is_array()) throw CheckpointError("'skipped_cap_exceeded' must be an array");
        for (const json& s : skipped) {
            if (!s.is_string() || !is_canonical_decimal(s.get<std::string>()))
                throw CheckpointError("skipped entry is not a decimal string");
            cp.skipped_cap_exceeded.push_back(BigNat::parse(s.get<std::string>()));
        }

        const json& minima = field(j, "minima");
        if (!minima.is_array()) throw CheckpointError("'minima' must be an array");
        for (const json& m : minima) {
            SteadinessMode mode;
            try {
                mode = parse_steadiness_mode(string_field(m, "mode"));
            } catch (const InvalidInput& e) {
                throw CheckpointError(e.what());
            }
            if (std::find(cp.modes.begin(), cp.modes.end(), mode) == cp.modes.end() || cp.minimum(mode))
                throw CheckpointError("unexpected or duplicate minimum for mode " + std::string(to_string(mode)));
            ExactRatio exact = ratio_from_json(field(m, "exact"));
            if (exact.is_zero() || exact > ExactRatio::one())
                throw CheckpointError("steadiness minimum outside (0, 1]");
            cp.minima.push_back({SteadinessValue::from_exact(mode, std::move(exact)), bignat_field(m, "argmin")});
        }
        return cp;
    } catch (const json::exception& e) {
        throw CheckpointError(std::string("malformed checkpoint: ") + e.what());
    }
}

void write_checkpoint(const ScanCheckpoint& cp, const std::filesystem::path& path) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    write_text_file(tmp, checkpoint_to_json(cp).dump(2) + "\n");
    std::filesystem::rename(tmp, path);
}

ScanCheckpoint read_checkpoint(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CheckpointError(std::string("checkpoint is not valid JSON: ") + e.what());
    }
    return checkpoint_from_json(j);
}

// ---------------------------------------------------------------------------
// Reports

std::string format_report(const ReportDocument& doc) {
    json j;
    j["schema_version"] = doc.schema_version;
    j["command"] = doc.command;
    j["results"] = doc.results;
    j["timing"] = {{"elapsed_ms_approx", doc.elapsed_ms}};
    j["warnings"] = doc.warnings;
    return j.dump(2) + "\n";
}

ReportDocument parse_report(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t byte = e.byte;
        std::size_t line = 1;
        for (std::size_t i = 0; i < byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw ParseError(e.what(), line);
    }
    try {
        ReportDocument doc;
        doc.schema_version = j.at("schema_version").get<int>();
        if (doc.schema_version != kReportSchemaVersion)
            throw ParseError("unsupported report schema version " + std::to_string(doc.schema_version), 1);
        doc.command = j.at("command");
        doc.results = j.at("results");
        doc.elapsed_ms = j.at("timing").at("elapsed_ms_approx").get<double>();
        doc.warnings = j.at("warnings").get<std::vector<std::string>>();
        return doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what(), 1);
    }
}

}  // namespace collatz
