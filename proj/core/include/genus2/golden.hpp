#pragma once

#include "genus2/serialize.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace genus2 {

struct GoldenMissing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Named variable tables the transcriptions refer to: t, frame, aux, period,
// sextic, local, hatted, none. "frame" also knows delta = s11 s22 - s12 s21.
VarTablePtr golden_table(const std::string& name);

struct GoldenItem {
    std::string kind;  // ratfunc, matrix, text
    std::string table;
    RatFunc value;
    RFMatrix matrix;
    std::vector<std::string> text;
};

struct GoldenEntry {
    std::string id;
    std::string anchor;
    std::vector<std::string> notes;
    std::map<std::string, GoldenItem> items;

    const GoldenItem& item(const std::string& name) const;
    const RatFunc& ratfunc(const std::string& name) const { return item(name).value; }
    const RFMatrix& matrix(const std::string& name) const { return item(name).matrix; }
    const std::vector<std::string>& text(const std::string& name) const { return item(name).text; }

    Json to_json() const;
    static GoldenEntry from_json(const Json& j);
};

// Reads the line format of golden/transcribed/*.txt:
//   # anchor (first comment), later comments kept as notes
//   @vars <table>
//   @item <name> ratfunc | matrix <rows> <cols> | text
// followed by the item's lines; matrix cells are separated by '&'.
GoldenEntry parse_transcription(std::string_view text, const std::string& id);

class GoldenStore {
public:
    explicit GoldenStore(std::filesystem::path dir = default_dir());
    // $GENUS2_GOLDEN_DIR or the source tree's golden/.
    static std::filesystem::path default_dir();

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path(const std::string& id) const { return dir_ / (id + ".json"); }
    bool has(const std::string& id) const;
    std::vector<std::string> ids() const;
    GoldenEntry load(const std::string& id) const;  // throws GoldenMissing
    void save(const GoldenEntry& e) const;

    // transcribed/<id>.txt -> <id>.json for every transcription.
    std::vector<std::string> rebuild() const;
    // load + dump reproduces the file byte for byte.
    bool roundtrip(const std::string& id) const;

private:
    std::filesystem::path dir_;
};

}  // namespace genus2
