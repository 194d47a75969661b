// genus2: command line driver for the verification suite.
//
//   genus2 gm --family quintic --out latex
//   genus2 vf --k 2
//   genus2 verify-all --only monodromy --seed 7
//
// exit codes: 0 all pass, 1 a check failed or was skipped, 2 bad configuration.

#include "genus2/catalog.hpp"
#include "genus2/checks.hpp"
#include "genus2/cup.hpp"
#include "genus2/igusa.hpp"
#include "genus2/monodromy.hpp"
#include "genus2/vector_fields.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace genus2;

namespace {

struct Options {
    std::string out = "json";
    std::vector<std::string> only;
    unsigned seed = 1;
    std::string cache_dir;
    std::string golden_dir;
    std::string config;
    std::string family = "quintic";
    bool timings = false;
    bool text = false;
    int k = 1;
    std::string point;
};

CheckConfig make_config(const Options& o, const CLI::App& app) {
    CheckConfig c = o.config.empty() ? CheckConfig{} : CheckConfig::from_file(o.config);
    // command line wins over the file
    if (app.count("--only")) c.only = o.only;
    if (app.count("--seed")) c.seed = o.seed;
    if (!o.golden_dir.empty()) c.golden_dir = o.golden_dir;
    if (!o.cache_dir.empty()) c.cache_dir = o.cache_dir;
    if (const char* env = std::getenv("GENUS2_CACHE_DIR"); env && *env) c.cache_dir = env;
    validate_selection(c.only);
    return c;
}

HyperellipticFamily family_of(const std::string& name) {
    if (name == "quintic") return HyperellipticFamily::quintic();
    if (name == "sextic") return HyperellipticFamily::sextic();
    throw ConfigError("unknown family '" + name + "' (quintic or sextic)");
}

// Runs the selected checks, prints them and returns the exit code.
int verify(CheckConfig cfg, const std::vector<std::string>& ids, const Options& o) {
    if (!ids.empty() && cfg.only.empty()) cfg.only = ids;
    validate_selection(cfg.only);
    Format fmt = o.text ? Format::json : parse_format(o.out);
    auto reports = run_all(cfg, [&](const VerificationReport& r) {
        if (r.status == Status::skipped) std::cerr << "warning: " << r.id << " skipped: " << r.detail << "\n";
        if (o.text) {
            std::cout << to_string(r.status) << "  " << r.id;
            if (o.timings) std::cout << "  (" << std::llround(r.elapsed_ms) << " ms)";
            if (!r.detail.empty()) std::cout << "  " << r.detail;
            std::cout << "\n" << std::flush;
        }
    });
    if (!o.text) std::cout << emit(reports, fmt, o.timings);
    return exit_code(reports);
}

void print_named(const std::vector<std::pair<std::string, RFMatrix>>& ms, Format fmt) {
    if (fmt == Format::json) {
        Json j = Json::object();
        for (const auto& [n, m] : ms) j[n] = to_json(m);
        std::cout << canonical_dump(j);
        return;
    }
    for (const auto& [n, m] : ms) std::cout << n << " = " << latex(m) << "\n\n";
}

std::vector<Rational> parse_point(const std::string& s, std::size_t n) {
    std::vector<Rational> p;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',' || c == ' ') {
            if (cur.empty()) continue;
            try {
                Rational q(cur);
                q.canonicalize();
                p.push_back(q);
            } catch (const std::invalid_argument&) {
                throw ConfigError("not a rational number: '" + cur + "'");
            }
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (p.size() != n) throw ConfigError("expected " + std::to_string(n) + " rationals t2,t3,t4,t5");
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss-Manin connection, modular vector fields and monodromy for genus 2 curves"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    app.add_option("--config", o.config, "JSON config: only, seed, golden_dir, cache_dir, order");
    app.add_option("--only", o.only, "groups or check ids to run")->delimiter(',');
    app.add_option("--seed", o.seed, "seed for randomised checks");
    app.add_option("--cache-dir", o.cache_dir, "cache for the Gauss-Manin connection ($GENUS2_CACHE_DIR)");
    app.add_option("--golden-dir", o.golden_dir, "golden data directory");
    auto out_opt = [&](CLI::App* a) {
        a->add_option("--out", o.out, "json or latex")->check(CLI::IsMember({"json", "latex"}));
    };

    auto* gm = app.add_subcommand("gm", "Gauss-Manin matrices B_m");
    gm->add_option("--family", o.family, "quintic");
    out_opt(gm);

    auto* cup = app.add_subcommand("cup", "cup product matrix Omega");
    cup->add_option("--family", o.family, "quintic or sextic");
    out_opt(cup);

    auto* vf = app.add_subcommand("vf", "modular vector fields");
    vf->add_option("--k", o.k, "field index")->check(CLI::Range(1, 3));
    out_opt(vf);
    auto* vf_app = vf->add_subcommand("verify-appendix", "compare R_1..R_3 with the golden data");
    auto* vf_tan = vf->add_subcommand("tangency", "tangency of R_k to F = 0 and Delta = 0");

    auto* mod = app.add_subcommand("moduli", "frame coordinates");
    mod->require_subcommand(1);
    auto* mod_gen = mod->add_subcommand("generators", "the 153 coordinate functions");
    out_opt(mod_gen);
    auto* mod_per = mod->add_subcommand("period-check", "period relations and the period frame");

    auto* ig = app.add_subcommand("igusa", "Igusa invariants");
    ig->require_subcommand(1);
    auto* ig_eval = ig->add_subcommand("eval", "values of A..E at a point");
    ig_eval->add_option("--t", o.point, "t2,t3,t4,t5")->required();
    auto* ig_ver = ig->add_subcommand("verify", "explicit, transvectant and discriminant checks");

    auto* res = app.add_subcommand("resnikoff", "Resnikoff differential identities");
    res->require_subcommand(1);
    auto* res_ver = res->add_subcommand("verify", "check the five identities");

    auto* mono = app.add_subcommand("monodromy", "monodromy group");
    mono->require_subcommand(1);
    auto* mono_ver = mono->add_subcommand("verify", "generators and relations");
    auto* mono_idx = mono->add_subcommand("index", "mod 2 image and cosets");

    auto* all = app.add_subcommand("verify-all", "run every check in dependency order");
    out_opt(all);
    all->add_flag("--text", o.text, "one line per check instead of a report");
    all->add_flag("--timings", o.timings, "include elapsed_ms (reports are then not reproducible)");

    auto* gold = app.add_subcommand("golden", "golden data maintenance");
    gold->require_subcommand(1);
    auto* gold_rb = gold->add_subcommand("rebuild", "regenerate golden/*.json from golden/transcribed");
    auto* gold_ck = gold->add_subcommand("check", "verify golden files are canonical");

    for (auto* s : {vf_app, vf_tan, mod_per, ig_ver, res_ver, mono_ver, mono_idx}) {
        out_opt(s);
        s->add_flag("--text", o.text, "one line per check");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        CheckConfig cfg = make_config(o, app);
        Format fmt = parse_format(o.out);

        if (*gm) {
            if (o.family != "quintic") throw ConfigError("the connection is only implemented for the quintic family");
            auto fam = family_of(o.family);
            ConnectionMatrix c = cfg.cache_dir.empty() ? gauss_manin(fam) : cached_connection(fam, cfg.cache_dir);
            std::vector<std::pair<std::string, RFMatrix>> ms;
            for (const auto& [m, b] : c.b) ms.emplace_back("B_{" + std::to_string(m) + "}", b);
            print_named(ms, fmt);
            return 0;
        }
        if (*cup) {
            if (o.family != "quintic") throw ConfigError("the cup matrix is implemented for the quintic family; the sextic only enters through its residues");
            print_named({{"\\Omega", cup_matrix(family_of(o.family), cfg.order)}}, fmt);
            return 0;
        }
        if (*vf) {
            if (*vf_app) return verify(cfg, {"vf.fields"}, o);
            if (*vf_tan) return verify(cfg, {"vf.tangency"}, o);
            const auto& f = ModularFields::instance().field(o.k);
            auto vt = frame_table();
            if (fmt == Format::json) {
                Json j = Json::object();
                for (std::size_t i = 0; i < vt->size(); ++i) j[vt->name(i)] = to_json(f[i]);
                std::cout << canonical_dump(j);
            } else {
                std::cout << "{\\sf R}_{" << o.k << "} =\n";
                for (std::size_t i = 0; i < vt->size(); ++i) {
                    if (f[i].is_zero()) continue;
                    std::string n = vt->name(i);
                    std::cout << "  \\left(" << latex(f[i]) << "\\right)\\frac{\\partial}{\\partial " << n[0] << "_{"
                              << n.substr(1) << "}}\n";
                }
            }
            return 0;
        }
        if (*mod) {
            if (*mod_per) return verify(cfg, {"moduli.period-relations", "moduli.period-frame"}, o);
            GeneratorCatalog cat = enumerate_generators();
            Json a = Json::array();
            for (const auto& e : cat.entries)
                a.push_back({{"name", e.name}, {"family", e.family}, {"exponents", e.exponents},
                             {"delta_power", e.delta_power}});
            std::cout << canonical_dump({{"generators", a}, {"removed", cat.removed}});
            return 0;
        }
        if (*ig) {
            if (*ig_ver) return verify(cfg, {"igusa"}, o);
            auto p = parse_point(o.point, 4);
            InvariantSet x = igusa_explicit();
            Json j = Json::object();
            for (std::size_t i = 0; i < 5; ++i) j[kInvariantNames[i]] = x[i].evaluate(p).get_str();
            std::cout << canonical_dump(j);
            return 0;
        }
        if (*res) return verify(cfg, {"resnikoff"}, o);
        if (*mono) {
            if (*mono_ver) return verify(cfg, {"monodromy.generators", "monodromy.abcd5", "monodromy.relations"}, o);
            return verify(cfg, {"monodromy.mod2", "monodromy.cosets"}, o);
        }
        if (*all) return verify(cfg, {}, o);
        if (*gold) {
            GoldenStore store(cfg.golden_dir);
            if (*gold_rb) {
                for (const auto& id : store.rebuild()) std::cout << "wrote " << store.path(id).string() << "\n";
                return 0;
            }
            int rc = 0;
            for (const auto& id : store.ids()) {
                bool ok = store.roundtrip(id);
                std::cout << (ok ? "ok    " : "DIRTY ") << id << "\n";
                if (!ok) rc = 1;
            }
            return rc;
        }
    } catch (const ConfigError& e) {
        std::cerr << "genus2: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "genus2: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "genus2: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
