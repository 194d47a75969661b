#pragma once

#include "genus2/family.hpp"
#include "genus2/golden.hpp"
#include "genus2/report.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace genus2 {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckConfig {
    std::vector<std::string> only;  // group names ("vf") or check ids; empty runs everything
    unsigned seed = 1;
    std::filesystem::path golden_dir = GoldenStore::default_dir();
    std::filesystem::path cache_dir;  // empty: no connection cache
    int order = -1;                   // Laurent truncation for the cup product, -1 = automatic

    // {"only": [...], "seed": 1, "golden_dir": "...", "cache_dir": "...", "order": 12}.
    // Relative paths are taken relative to the file. $GENUS2_CACHE_DIR overrides cache_dir.
    static CheckConfig from_file(const std::filesystem::path& p);
    static CheckConfig from_json(const Json& j, const std::filesystem::path& base = {});
};

struct Outcome {
    bool ok = false;
    std::string detail;
    std::optional<Json> residual;
};

class CheckContext {
public:
    CheckContext(const CheckConfig& cfg) : cfg_(cfg), store_(cfg.golden_dir) {}
    const CheckConfig& config() const { return cfg_; }
    const GoldenStore& store() const { return store_; }
    const GoldenEntry& golden(const std::string& id) const;  // cached, throws GoldenMissing

private:
    const CheckConfig& cfg_;
    GoldenStore store_;
    mutable std::vector<GoldenEntry> loaded_;
};

struct CheckSpec {
    std::string id;     // "<group>.<name>"
    std::string group;
    int criterion = 0;  // acceptance criterion the check belongs to
    std::string anchor;
    std::vector<std::string> golden;  // golden files read by the check
    std::function<Outcome(const CheckContext&)> run;
};

// Dependency order: algebra, gm, cup, vf, moduli, igusa, resnikoff, monodromy.
const std::vector<CheckSpec>& check_registry();
const std::vector<std::string>& check_groups();
bool selected(const CheckSpec& c, const std::vector<std::string>& only);
// Throws ConfigError for an --only entry naming no group or check.
void validate_selection(const std::vector<std::string>& only);

VerificationReport run_check(const CheckSpec& c, const CheckContext& ctx);
std::vector<VerificationReport> run_all(const CheckConfig& cfg,
                                        const std::function<void(const VerificationReport&)>& on_done = {});
// 0 when everything passed, 1 otherwise (skipped counts as failure).
int exit_code(const std::vector<VerificationReport>& reports);

// Quintic connection, read from or written to cache_dir/<family hash>.json.
ConnectionMatrix cached_connection(const HyperellipticFamily& fam, const std::filesystem::path& cache_dir);

}  // namespace genus2
