#include "genus2/golden.hpp"

#include "genus2/expr.hpp"
#include "genus2/family.hpp"
#include "genus2/moduli.hpp"
#include "genus2/period.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef GENUS2_GOLDEN_DIR
#define GENUS2_GOLDEN_DIR "golden"
#endif

namespace genus2 {

namespace fs = std::filesystem;

VarTablePtr golden_table(const std::string& name) {
    if (name == "t") return t_table();
    if (name == "frame") return frame_table();
    if (name == "period") return period_table();
    if (name == "sextic") {
        static const VarTablePtr v = HyperellipticFamily::sextic().vars();
        return v;
    }
    if (name == "aux") {
        static const VarTablePtr v =
            make_table({"t2", "t3", "t4", "t5", "sm2", "sm4", "sm6"}, {4, 6, 8, 10, 2, 4, 6});
        return v;
    }
    if (name == "local") {
        static const VarTablePtr v = make_table({"t"});
        return v;
    }
    if (name == "hatted") {
        static const VarTablePtr v = make_table({"E2", "E4", "E6", "chi10", "chi12"}, {2, 4, 6, 10, 12});
        return v;
    }
    if (name == "none") {
        static const VarTablePtr v = make_table({});
        return v;
    }
    throw ParseError("unknown golden variable table '" + name + "'");
}

namespace {

std::map<std::string, RatFunc> table_defs(const std::string& table) {
    if (table == "frame") return {{"delta", RatFunc(delta_poly())}};
    return {};
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw GoldenMissing("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

const GoldenItem& GoldenEntry::item(const std::string& name) const {
    auto it = items.find(name);
    if (it == items.end()) throw GoldenMissing("golden entry " + id + " has no item " + name);
    return it->second;
}

Json GoldenEntry::to_json() const {
    Json its = Json::object();
    for (const auto& [name, it] : items) {
        Json j = {{"kind", it.kind}, {"vars", it.table}};
        if (it.kind == "ratfunc") j["value"] = genus2::to_json(it.value);
        else if (it.kind == "matrix") j["value"] = genus2::to_json(it.matrix);
        else j["value"] = it.text;
        its[name] = std::move(j);
    }
    return {{"id", id}, {"anchor", anchor}, {"notes", notes}, {"items", std::move(its)}};
}

GoldenEntry GoldenEntry::from_json(const Json& j) {
    GoldenEntry e;
    e.id = j.at("id").get<std::string>();
    e.anchor = j.at("anchor").get<std::string>();
    e.notes = j.at("notes").get<std::vector<std::string>>();
    for (const auto& [name, v] : j.at("items").items()) {
        GoldenItem it;
        it.kind = v.at("kind").get<std::string>();
        it.table = v.at("vars").get<std::string>();
        if (it.kind == "ratfunc") it.value = ratfunc_from_json(v.at("value"));
        else if (it.kind == "matrix") it.matrix = rfmatrix_from_json(v.at("value"));
        else if (it.kind == "text") it.text = v.at("value").get<std::vector<std::string>>();
        else throw ParseError("unknown golden item kind " + it.kind);
        e.items.emplace(name, std::move(it));
    }
    return e;
}

GoldenEntry parse_transcription(std::string_view text, const std::string& id) {
    GoldenEntry e;
    e.id = id;
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }
    std::string table = "none";
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError(id + ".txt line " + std::to_string(i + 1) + ": " + msg);
    };
    while (i < lines.size()) {
        std::string line = trim(lines[i]);
        if (line.empty()) {
            ++i;
            continue;
        }
        if (line[0] == '#') {
            std::string c = trim(line.substr(1));
            if (e.anchor.empty()) e.anchor = c;
            else e.notes.push_back(c);
            ++i;
            continue;
        }
        std::istringstream hdr(line);
        std::string tag;
        hdr >> tag;
        if (tag == "@vars") {
            hdr >> table;
            golden_table(table);
            ++i;
            continue;
        }
        if (tag != "@item") fail("expected @vars or @item");
        std::string name, kind;
        hdr >> name >> kind;
        GoldenItem it;
        it.kind = kind;
        it.table = table;
        ++i;
        std::vector<std::string> body;
        while (i < lines.size() && trim(lines[i]).rfind('@', 0) != 0) {
            std::string b = trim(lines[i]);
            if (!b.empty() && b[0] == '#') {
                e.notes.push_back(trim(b.substr(1)));
            } else if (!b.empty()) {
                body.push_back(b);
            }
            ++i;
        }
        auto vt = golden_table(table);
        auto defs = table_defs(table);
        try {
            if (kind == "ratfunc") {
                std::string joined;
                for (auto& b : body) joined += b + " ";
                it.value = parse_expr(joined, vt, defs);
            } else if (kind == "matrix") {
                std::size_t r = 0, c = 0;
                if (!(hdr >> r >> c)) fail("matrix item without dimensions");
                if (body.size() != r) fail("matrix " + name + " has " + std::to_string(body.size()) + " rows");
                RFMatrix m(r, c, vt);
                for (std::size_t a = 0; a < r; ++a) {
                    auto cells = split(body[a], '&');
                    if (cells.size() != c) fail("row " + std::to_string(a + 1) + " of " + name + " has wrong width");
                    for (std::size_t b = 0; b < c; ++b) m(a, b) = parse_expr(cells[b], vt, defs);
                }
                it.matrix = std::move(m);
            } else if (kind == "text") {
                it.text = body;
            } else {
                fail("unknown item kind " + kind);
            }
        } catch (const ParseError& err) {
            throw ParseError(id + "/" + name + ": " + err.what());
        }
        if (!e.items.emplace(name, std::move(it)).second) fail("duplicate item " + name);
    }
    return e;
}

GoldenStore::GoldenStore(fs::path dir) : dir_(std::move(dir)) {}

fs::path GoldenStore::default_dir() {
    if (const char* env = std::getenv("GENUS2_GOLDEN_DIR"); env && *env) return env;
    return GENUS2_GOLDEN_DIR;
}

bool GoldenStore::has(const std::string& id) const { return fs::exists(path(id)); }

std::vector<std::string> GoldenStore::ids() const {
    std::vector<std::string> out;
    if (!fs::is_directory(dir_)) return out;
    for (const auto& de : fs::directory_iterator(dir_))
        if (de.path().extension() == ".json") out.push_back(de.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

GoldenEntry GoldenStore::load(const std::string& id) const {
    if (!has(id)) throw GoldenMissing("missing golden file " + path(id).string());
    Json j;
    try {
        j = Json::parse(read_file(path(id)));
    } catch (const Json::parse_error& err) {
        throw ParseError(path(id).string() + ": " + err.what());
    }
    return GoldenEntry::from_json(j);
}

void GoldenStore::save(const GoldenEntry& e) const {
    fs::create_directories(dir_);
    std::ofstream out(path(e.id), std::ios::binary);
    out << canonical_dump(e.to_json());
}

std::vector<std::string> GoldenStore::rebuild() const {
    std::vector<std::string> done;
    fs::path src = dir_ / "transcribed";
    if (!fs::is_directory(src)) throw GoldenMissing("no transcriptions under " + src.string());
    std::vector<fs::path> files;
    for (const auto& de : fs::directory_iterator(src))
        if (de.path().extension() == ".txt") files.push_back(de.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        auto id = f.stem().string();
        save(parse_transcription(read_file(f), id));
        done.push_back(id);
    }
    return done;
}

bool GoldenStore::roundtrip(const std::string& id) const {
    return canonical_dump(load(id).to_json()) == read_file(path(id));
}

}  // namespace genus2
