#include <omp.h>

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "cdr/abelian.hpp"
#include "cdr/checks.hpp"
#include "cdr/elliptic.hpp"
#include "cdr/io.hpp"
#include "cdr/monodromy.hpp"
#include "cdr/pixton.hpp"

using namespace cdr;

namespace {

enum Exit : int {
    ok = 0,
    verification_failed = 1,
    usage_error = 2,
    invalid_config = 3,
    math_error = 4,
    resource_error = 5,
    internal_error = 6,
};

const char *exit_codes_help =
    "Exit codes:\n"
    "  0  success\n"
    "  1  a verification suite reported a failure\n"
    "  2  usage error (bad flags or unsupported format)\n"
    "  3  invalid configuration (leg data, delta, genus)\n"
    "  4  mathematical invariant violated\n"
    "  5  enumeration cap exceeded\n"
    "  6  internal error\n";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int g = 1;
    int n = 2;
    int d = 1;
    long delta = 1;
    int q = 1;
    std::vector<long> a;
    int trunc = -1;
    std::string format = "json";
    long cap = 1L << 16;
    std::uint64_t seed = 1;
    int jobs = 0;
    int core = -1;
};

void add_common(CLI::App *app, Config &c) {
    app->add_option("--g", c.g, "genus (maximal genus for invariants and verify)")->capture_default_str();
    app->add_option("--n", c.n, "number of legs")->capture_default_str();
    app->add_option("--d", c.d, "curve class degree (maximal degree for invariants)")->capture_default_str();
    app->add_option("--delta", c.delta, "torsion level")->capture_default_str();
    app->add_option("--q", c.q, "half the rank of the torsion group of the target")->capture_default_str();
    app->add_option("--a", c.a, "leg weights, e.g. 2,-2")->delimiter(',');
    app->add_option("--trunc", c.trunc, "truncation degree (default: genus)");
    app->add_option("--format", c.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app->add_option("--cap", c.cap, "enumeration cap")->capture_default_str();
    app->add_option("--seed", c.seed, "seed for randomized suites")->capture_default_str();
    app->add_option("--jobs", c.jobs, "OpenMP threads (0: runtime default)")->capture_default_str();
}

void require_format(const Config &c, std::initializer_list<const char *> allowed) {
    for (const char *f : allowed)
        if (c.format == f) return;
    throw UsageError("format '" + c.format + "' is not available for this command");
}

json params_json(const Config &c) {
    return {{"g", c.g}, {"n", c.n}, {"d", c.d}, {"delta", c.delta}, {"q", c.q}, {"a", c.a}, {"trunc", c.trunc}, {"cap", c.cap}};
}

Subgroup pick_core(const Config &c, const TorsionAmbient &amb) {
    auto subs = enumerate_subgroups(amb, c.cap);
    if (c.core < 0 || c.core >= static_cast<int>(subs.size()))
        throw UsageError("--core must index one of the " + std::to_string(subs.size()) + " subgroups");
    return subs[c.core];
}

std::vector<Subgroup> cores(const Config &c, const TorsionAmbient &amb) {
    if (c.core >= 0) return {pick_core(c, amb)};
    return enumerate_subgroups(amb, c.cap);
}

int cmd_enumerate(const std::string &kind, const Config &c) {
    require_format(c, {"json", "text"});
    TorsionAmbient amb{c.delta, 2 * c.q};
    json items = json::array();
    std::ostringstream text;
    if (kind == "graphs") {
        for (const auto &g : enumerate_graphs(c.g, c.n, c.d)) {
            items.push_back({{"graph", to_json(g)}, {"key", canonicalize(g).key}, {"aut", automorphism_count(g)}});
            text << canonicalize(g).key << "  |Aut|=" << automorphism_count(g) << '\n';
        }
    } else if (kind == "subgroups") {
        for (const auto &h : enumerate_subgroups(amb, c.cap)) {
            items.push_back({{"rows", to_json(h)}, {"order", h.order()}});
            text << h.to_string() << "  order " << h.order() << '\n';
        }
    } else {
        auto graphs = enumerate_graphs(c.g, c.n, c.d);
        for (const auto &k : cores(c, amb))
            for (const auto &mg : enumerate_strata(graphs, amb, k, nullptr, c.cap)) {
                auto cm = canonicalize(mg);
                if (kind == "monodromy") {
                    json j = to_json(mg);
                    j["core"] = to_json(k);
                    j["key"] = cm.key;
                    items.push_back(j);
                    text << cm.key << '\n';
                } else {
                    for (const auto &cls : enumerate_corr0_cones(mg)) {
                        items.push_back({{"monodromy_graph", to_json(mg)}, {"core", to_json(k)}, {"class", cls.coords}});
                        text << cm.key << "  class";
                        for (long x : cls.coords) text << ' ' << x;
                        text << '\n';
                    }
                }
            }
    }
    if (c.format == "json") {
        std::cout << envelope("enumerate " + kind, params_json(c), {{"count", items.size()}, {"items", items}}).dump(2) << '\n';
    } else {
        std::cout << text.str() << items.size() << " items\n";
    }
    return ok;
}

int cmd_dr(const Config &c) {
    require_format(c, {"json", "text"});
    if (c.a.empty()) throw ConfigError("--a is required");
    std::optional<int> trunc;
    if (c.trunc >= 0) trunc = c.trunc;
    std::optional<Subgroup> only;
    if (c.core >= 0) only = pick_core(c, TorsionAmbient{c.delta, 2 * c.q});
    auto cls = correlated_dr(c.g, c.a, c.d, c.delta, c.q, trunc, only, c.cap);
    bool glued = true;
    for (const auto &p : cls.parts) glued = glued && p.gluing.ok;
    if (c.format == "json") {
        json r = to_json(cls);
        r["gluing"] = glued;
        std::cout << envelope("dr", params_json(c), r).dump(2) << '\n';
    } else {
        std::cout << "prefactor " << cls.prefactor.to_string() << '\n';
        for (const auto &p : cls.parts) {
            std::cout << "core " << p.fan.k.to_string() << "  gluing " << (p.gluing.ok ? "ok" : "FAILED") << '\n';
            for (const auto &cc : p.cones) std::cout << "  " << cc.key << "  |Aut|=" << cc.aut << "  " << cc.cls.to_string() << '\n';
        }
    }
    return glued ? ok : verification_failed;
}

int cmd_invariants(const Config &c) {
    if (c.a.empty()) throw ConfigError("--a is required");
    auto rows = invariant_rows(c.a, c.delta, c.g, c.d);
    if (c.format == "csv") {
        write_csv(std::cout, rows);
    } else if (c.format == "json") {
        json items = json::array();
        for (const auto &r : rows) items.push_back(to_json(r));
        std::cout << envelope("invariants", params_json(c), items).dump(2) << '\n';
    } else {
        for (const auto &r : rows)
            std::cout << "g=" << r.g << " d=" << r.d << " N=" << to_string(r.N) << " N0=" << to_string(r.N0) << "  [" << r.source
                      << "]\n";
    }
    return ok;
}

int cmd_verify(const std::string &suite, const Config &c) {
    std::vector<SuiteReport> reports;
    auto want = [&](const char *s) { return suite == s || suite == "all"; };
    if (want("weil")) reports.push_back(verify_weil());
    if (want("moebius")) reports.push_back(verify_moebius({2, 3, 4, 6}, c.seed));
    if (want("weightings")) reports.push_back(verify_weightings(20, c.seed));
    if (want("gluing")) reports.push_back(verify_gluing_suite(c.g, {c.delta}, c.trunc >= 0 ? c.trunc : 2));
    if (want("elliptic")) {
        reports.push_back(verify_elliptic());
        reports.push_back(verify_graph_sum());
    }
    if (want("qseries")) reports.push_back(verify_qseries());
    if (want("strata")) reports.push_back(verify_strata(c.g, c.delta));
    if (want("tropical")) reports.push_back(verify_tropical(c.seed));
    bool all_ok = true;
    json out = json::array();
    if (c.format == "csv") std::cout << "suite,check,ok,cases,first_failure\n";
    for (const auto &r : reports) {
        all_ok = all_ok && r.ok();
        json checks = json::array();
        for (const auto &ch : r.checks) {
            checks.push_back({{"name", ch.name}, {"ok", ch.ok}, {"cases", ch.cases}, {"failures", ch.failures}});
            if (c.format == "csv")
                std::cout << r.suite << ",\"" << ch.name << "\"," << (ch.ok ? "pass" : "fail") << ',' << ch.cases << ",\""
                          << (ch.failures.empty() ? "" : ch.failures.front()) << "\"\n";
            if (c.format == "text") {
                std::cout << (ch.ok ? "PASS " : "FAIL ") << r.suite << ": " << ch.name << " (" << ch.cases << " cases)\n";
                for (const auto &f : ch.failures) std::cout << "    " << f << '\n';
            }
        }
        out.push_back({{"suite", r.suite}, {"ok", r.ok()}, {"checks", checks}});
    }
    if (c.format == "json") std::cout << envelope("verify " + suite, params_json(c), out).dump(2) << '\n';
    return all_ok ? ok : verification_failed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Correlated double ramification cycles: enumeration, Pixton-type formulas and invariants of elliptic targets"};
    app.footer(exit_codes_help);
    app.set_config("--config", "", "TOML-style configuration file");
    app.require_subcommand(1);
    Config c;
    std::string enum_kind, suite;

    auto *en = app.add_subcommand("enumerate", "list graphs, subgroups, monodromy graphs or corr0 cones");
    en->add_option("kind", enum_kind, "graphs, subgroups, monodromy or cones")
        ->required()
        ->check(CLI::IsMember({"graphs", "subgroups", "monodromy", "cones"}));
    en->add_option("--core", c.core, "index of the core K in subgroup order (default: all)");
    add_common(en, c);

    auto *dr = app.add_subcommand("dr", "correlated DR class as piecewise polynomials, with the gluing verdict");
    dr->add_option("--core", c.core, "index of the core K in subgroup order (default: all)");
    add_common(dr, c);

    auto *inv = app.add_subcommand("invariants", "point and lambda invariants of an elliptic target from every source");
    add_common(inv, c);

    auto *ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "weil, moebius, weightings, gluing, elliptic, qseries, strata, tropical or all")
        ->required()
        ->check(CLI::IsMember({"weil", "moebius", "weightings", "gluing", "elliptic", "qseries", "strata", "tropical", "all"}));
    add_common(ver, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return usage_error;
    }
    if (c.jobs > 0) omp_set_num_threads(c.jobs);
    try {
        if (*en) return cmd_enumerate(enum_kind, c);
        if (*dr) return cmd_dr(c);
        if (*inv) return cmd_invariants(c);
        if (*ver) return cmd_verify(suite, c);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const ConfigError &e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return invalid_config;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return invalid_config;
    } catch (const MathError &e) {
        std::cerr << "invariant violated: " << e.what() << '\n';
        return math_error;
    } catch (const ResourceError &e) {
        std::cerr << "resource cap exceeded: " << e.what() << '\n';
        return resource_error;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return internal_error;
    }
    return internal_error;
}
