#include "vilenkin/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace vilenkin {
namespace {

using json = nlohmann::ordered_json;

json number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double read_number(const json& j, const char* what) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return INFINITY;
        if (s == "-inf") return -INFINITY;
        if (s == "nan") return NAN;
    }
    fail(ErrorKind::io, std::string("expected a number for ") + what);
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::io, std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) fail(ErrorKind::io, std::string("missing field \"") + key + "\"");
    return obj.at(key);
}

json radices(const GroupSpec& g) {
    json m = json::array();
    for (int k = 0; k < g.levels(); ++k) m.push_back(g.radix(k));
    return m;
}

GroupSpec group_from(const json& m) {
    if (!m.is_array() || m.empty()) fail(ErrorKind::io, "\"m\" must be a nonempty array of radices");
    std::vector<int> r;
    for (const auto& v : m) {
        if (!v.is_number_integer()) fail(ErrorKind::io, "radices must be integers");
        r.push_back(v.get<int>());
    }
    return make_group(r, static_cast<int>(r.size()));
}

json grid_json(const GridFunction& f) {
    json values = json::array();
    for (const auto& z : f.values()) values.push_back(json::array({number(z.real()), number(z.imag())}));
    return json{{"m", radices(f.group())}, {"resolution", f.resolution()}, {"values", std::move(values)}};
}

GridFunction grid_from(const json& j, const GroupSpec* expect = nullptr) {
    const auto g = group_from(field(j, "m"));
    if (expect && !(g == *expect)) fail(ErrorKind::shape, "martingale entries disagree on the group");
    const auto& res = field(j, "resolution");
    if (!res.is_number_integer()) fail(ErrorKind::io, "\"resolution\" must be an integer");
    const int N = res.get<int>();
    if (N < 0 || N > g.levels()) fail(ErrorKind::range, "resolution outside 0..levels");
    const auto& vals = field(j, "values");
    if (!vals.is_array() || vals.size() != g.block(N))
        fail(ErrorKind::shape, "\"values\" must hold M_N = " + std::to_string(g.block(N)) + " entries");
    std::vector<Complex> v;
    v.reserve(vals.size());
    for (const auto& z : vals) {
        if (!z.is_array() || z.size() != 2) fail(ErrorKind::io, "values are [re, im] pairs");
        v.emplace_back(read_number(z[0], "re"), read_number(z[1], "im"));
    }
    return GridFunction(g, N, std::move(v));
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? "," : "") + csv_cell(cells[i]);
    return line + "\n";
}

RecordKind kind_from(const std::string& s) {
    if (s == "check") return RecordKind::check;
    if (s == "report") return RecordKind::report;
    if (s == "trend") return RecordKind::trend;
    fail(ErrorKind::io, "unknown record kind: " + s);
}

} // namespace

std::string grid_to_json(const GridFunction& f) { return grid_json(f).dump(); }

GridFunction grid_from_json(std::string_view text) { return grid_from(parse(text)); }

std::string martingale_to_json(const StepMartingale& mart) {
    json entries = json::array();
    for (const auto& e : mart.entries()) entries.push_back(grid_json(e));
    return json{{"m", radices(mart.group())}, {"levels", mart.levels()}, {"entries", std::move(entries)}}.dump();
}

StepMartingale martingale_from_json(std::string_view text) {
    const auto j = parse(text);
    const auto g = group_from(field(j, "m"));
    const auto& lv = field(j, "levels");
    const auto& es = field(j, "entries");
    if (!lv.is_array() || !es.is_array() || lv.size() != es.size() || es.empty())
        fail(ErrorKind::shape, "\"levels\" and \"entries\" must be nonempty arrays of equal length");
    std::vector<int> levels;
    std::vector<GridFunction> entries;
    for (std::size_t i = 0; i < lv.size(); ++i) {
        if (!lv[i].is_number_integer()) fail(ErrorKind::io, "levels must be integers");
        levels.push_back(lv[i].get<int>());
        entries.push_back(grid_from(es[i], &g));
    }
    return StepMartingale(g, std::move(levels), std::move(entries));
}

std::string records_to_json(std::span<const VerificationRecord> records) {
    json arr = json::array();
    for (const auto& r : records) {
        json params = json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        arr.push_back(json{{"suite", r.suite},
                           {"claim", r.claim},
                           {"params", std::move(params)},
                           {"value", number(r.value)},
                           {"bound", number(r.bound)},
                           {"margin", number(r.margin)},
                           {"pass", r.pass},
                           {"tolerance", number(r.tolerance)},
                           {"kind", std::string(to_string(r.kind))},
                           {"note", r.note}});
    }
    return arr.dump(1);
}

std::vector<VerificationRecord> records_from_json(std::string_view text) {
    const auto arr = parse(text);
    if (!arr.is_array()) fail(ErrorKind::io, "a report is a JSON array");
    std::vector<VerificationRecord> out;
    for (const auto& j : arr) {
        VerificationRecord r;
        r.suite = field(j, "suite").get<std::string>();
        r.claim = field(j, "claim").get<std::string>();
        for (const auto& [k, v] : field(j, "params").items()) r.params.emplace_back(k, v.get<std::string>());
        r.value = read_number(field(j, "value"), "value");
        r.bound = read_number(field(j, "bound"), "bound");
        r.margin = read_number(field(j, "margin"), "margin");
        r.pass = field(j, "pass").get<bool>();
        r.tolerance = read_number(field(j, "tolerance"), "tolerance");
        r.kind = kind_from(field(j, "kind").get<std::string>());
        r.note = j.value("note", "");
        out.push_back(std::move(r));
    }
    return out;
}

std::string records_to_csv(std::span<const VerificationRecord> records) {
    Table t;
    t.header = {"suite", "claim", "params", "value", "bound", "margin", "pass", "tolerance", "kind", "note"};
    for (const auto& r : records) {
        std::string params;
        for (const auto& [k, v] : r.params) params += (params.empty() ? "" : ";") + k + "=" + v;
        t.rows.push_back({r.suite, r.claim, params, format_number(r.value), format_number(r.bound),
                          format_number(r.margin), r.pass ? "true" : "false", format_number(r.tolerance),
                          std::string(to_string(r.kind)), r.note});
    }
    return to_csv(t);
}

std::string to_csv(const Table& t) {
    std::string out = csv_line(t.header);
    for (const auto& row : t.rows) out += csv_line(row);
    return out;
}

std::string to_json(const Table& t) {
    json arr = json::array();
    for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < t.header.size() && i < row.size(); ++i) {
            const auto& s = row[i];
            const char* end = s.data() + s.size();
            long long iv = 0;
            double v = 0.0;
            if (const auto r = std::from_chars(s.data(), end, iv); !s.empty() && r.ec == std::errc() && r.ptr == end)
                obj[t.header[i]] = iv;
            else if (const auto r2 = std::from_chars(s.data(), end, v); !s.empty() && r2.ec == std::errc() && r2.ptr == end)
                obj[t.header[i]] = number(v);
            else if (s == "inf" || s == "-inf" || s == "nan") obj[t.header[i]] = s;
            else if (s == "true" || s == "false") obj[t.header[i]] = s == "true";
            else obj[t.header[i]] = s;
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(1);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text(const std::string& path, std::string_view text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::io, "cannot write " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    if (!out) fail(ErrorKind::io, "write failed: " + path);
}

} // namespace vilenkin
