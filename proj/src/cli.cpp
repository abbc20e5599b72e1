#include "rectwalk/cli.hpp"

#include "rectwalk/analysis.hpp"
#include "rectwalk/error.hpp"
#include "rectwalk/factor.hpp"
#include "rectwalk/geometry.hpp"
#include "rectwalk/parallel.hpp"
#include "rectwalk/paving.hpp"
#include "rectwalk/walk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <variant>

namespace rectwalk::cli {

namespace {

constexpr int kEnumerationCap = 12;
constexpr int kDpCap = 50;

class UsageError : public Error {
public:
    using Error::Error;
};

struct Config {
    std::optional<int> n;
    std::optional<int> n_max;
    std::optional<std::string> cls;
    std::optional<std::string> walk;
    std::optional<std::string> walk_file;
    std::optional<std::string> pattern_file;
    std::optional<std::string> factor;
    int q = 1;
    std::optional<int> L;
    std::optional<int> L0;
    std::optional<std::string> format;
    std::optional<std::string> out_path;
    int threads = 1;
    bool force = false;
    std::string suite;
    std::string input;
};

using Pattern = std::variant<FactorPattern, GeomPattern>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string trim(std::string text) {
    const auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
    text.erase(text.begin(), std::find_if(text.begin(), text.end(), not_space));
    text.erase(std::find_if(text.rbegin(), text.rend(), not_space).base(), text.end());
    return text;
}

WalkClass walk_class(const Config& cfg, WalkClass fallback) {
    if (!cfg.cls) return fallback;
    auto cls = walk_class_from_string(*cfg.cls);
    if (!cls) throw UsageError("--class: unknown class '" + *cfg.cls + "'");
    return *cls;
}

std::string format_of(const Config& cfg, std::initializer_list<std::string_view> allowed) {
    const std::string f = cfg.format.value_or(std::string(*allowed.begin()));
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
        throw UsageError("--format: '" + f + "' is not supported by this subcommand");
    }
    return f;
}

int upper_n(const Config& cfg) {
    if (cfg.n_max) return *cfg.n_max;
    if (cfg.n) return *cfg.n;
    throw UsageError("--n-max (or --n) is required");
}

void check_cap(int n, int cap, const Config& cfg, const char* what) {
    if (n < 0) throw UsageError("--n/--n-max must be nonnegative");
    if (n > cap && !cfg.force) {
        throw CapExceeded(std::string(what) + " with n = " + std::to_string(n) + " exceeds the cap " +
                          std::to_string(cap) + "; pass --force to run anyway");
    }
}

Walk load_walk(const Config& cfg) {
    if (cfg.walk && cfg.walk_file) throw UsageError("--walk and --walk-file are mutually exclusive");
    if (cfg.walk) return parse_walk(*cfg.walk);
    if (cfg.walk_file) return parse_walk(trim(read_file(*cfg.walk_file)));
    throw UsageError("--walk or --walk-file is required");
}

std::optional<Pattern> load_pattern(const Config& cfg) {
    if (cfg.factor && cfg.pattern_file) throw UsageError("--factor and --pattern-file are mutually exclusive");
    if (cfg.factor) return Pattern(FactorPattern(parse_walk(*cfg.factor)));
    if (!cfg.pattern_file) return std::nullopt;
    const std::string text = trim(read_file(*cfg.pattern_file));
    if (!text.empty() && text.front() == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("--pattern-file: ") + e.what());
        }
        return Pattern(pattern_from_json(doc));
    }
    return Pattern(FactorPattern(parse_walk(text)));
}

FactorPattern require_factor(const Config& cfg) {
    auto p = load_pattern(cfg);
    if (!p) throw UsageError("--factor or --pattern-file is required");
    if (!std::holds_alternative<FactorPattern>(*p)) throw UsageError("--pattern-file: a walk pattern is required");
    return std::get<FactorPattern>(*p);
}

// ---------------------------------------------------------------------------
// Subcommands

void write_value_table(std::ostream& os, const std::string& format, const std::vector<std::pair<int, BigInt>>& rows,
                       const nlohmann::json& meta) {
    if (format == "json") {
        nlohmann::json doc = meta;
        doc["values"] = nlohmann::json::array();
        for (const auto& [n, v] : rows) doc["values"].push_back({{"n", n}, {"value", v.str()}});
        os << doc.dump(2) << '\n';
        return;
    }
    if (format == "csv") os << "n,value\n";
    for (const auto& [n, v] : rows) os << n << (format == "csv" ? "," : " ") << v << '\n';
}

void cmd_count(const Config& cfg, std::ostream& os) {
    const WalkClass cls = walk_class(cfg, WalkClass::lhqe);
    const int n_max = upper_n(cfg);
    check_cap(n_max, kDpCap, cfg, "count");
    const std::string format = format_of(cfg, {"csv", "json", "text"});
    const auto pattern = load_pattern(cfg);
    if (pattern && !std::holds_alternative<FactorPattern>(*pattern)) {
        throw UsageError("count: geometric patterns belong to avoid-count");
    }
    const FactorPattern* factor = pattern ? &std::get<FactorPattern>(*pattern) : nullptr;
    const auto values = count_sequence(n_max, cls, factor);
    std::vector<std::pair<int, BigInt>> rows;
    for (int n = 0; n <= n_max; ++n) rows.emplace_back(n, values[static_cast<std::size_t>(n)]);
    nlohmann::json meta{{"class", std::string(to_string(cls))}};
    meta["pattern"] = factor ? nlohmann::json(format_walk(factor->walk())) : nlohmann::json(nullptr);
    write_value_table(os, format, rows, meta);
}

void cmd_enumerate(const Config& cfg, std::ostream& os) {
    const WalkClass cls = walk_class(cfg, WalkClass::lhqe);
    if (!cfg.n) throw UsageError("--n is required");
    check_cap(*cfg.n, kEnumerationCap, cfg, "enumerate");
    const std::string format = format_of(cfg, {"text", "json"});
    if (format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for_each_walk(*cfg.n, cls, [&](const Walk& w) { doc.push_back(format_walk(w)); });
        os << doc.dump(2) << '\n';
        return;
    }
    for_each_walk(*cfg.n, cls, [&](const Walk& w) { os << w << '\n'; });
}

void write_proportions(std::ostream& os, const std::string& format, const std::vector<ProportionRow>& rows) {
    if (format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& r : rows) {
            doc.push_back({{"n", r.n},
                           {"avoiders", r.avoiders.str()},
                           {"total", r.total.str()},
                           {"ratio", to_string(r.ratio)},
                           {"decimal", to_decimal(r.ratio, 12)}});
        }
        os << doc.dump(2) << '\n';
        return;
    }
    if (format == "csv") os << "n,avoiders,total,ratio\n";
    const char* sep = format == "csv" ? "," : " ";
    for (const auto& r : rows) os << r.n << sep << r.avoiders << sep << r.total << sep << to_string(r.ratio) << '\n';
}

void cmd_avoid_count(const Config& cfg, std::ostream& os) {
    const auto pattern = load_pattern(cfg);
    if (!pattern) throw UsageError("--factor or --pattern-file is required");
    const int n_max = upper_n(cfg);
    const std::string format = format_of(cfg, {"csv", "json", "text"});
    if (const auto* geom = std::get_if<GeomPattern>(&*pattern)) {
        if (cfg.cls && walk_class(cfg, WalkClass::lhqe) != WalkClass::lhqe) {
            throw UsageError("--class: geometric avoidance is counted over lhqe");
        }
        check_cap(n_max, kEnumerationCap, cfg, "avoid-count");
        AvoidCountOptions options;
        options.cap = std::max(n_max, kEnumerationCap);
        options.threads = cfg.threads;
        write_proportions(os, format, proportion_report(n_max, *geom, options));
        return;
    }
    const auto& factor = std::get<FactorPattern>(*pattern);
    const WalkClass cls = walk_class(cfg, WalkClass::lhqwadm);
    check_cap(n_max, kDpCap, cfg, "avoid-count");
    const auto values = count_sequence(n_max, cls, &factor);
    std::vector<std::pair<int, BigInt>> rows;
    for (int n = 0; n <= n_max; ++n) rows.emplace_back(n, values[static_cast<std::size_t>(n)]);
    write_value_table(os, format, rows,
                      {{"class", std::string(to_string(cls))}, {"pattern", format_walk(factor.walk())}});
}

void cmd_pave(const Config& cfg, std::ostream& os) {
    const Walk walk = load_walk(cfg);
    if (!is_excursion(walk)) throw UsageError("--walk: not an excursion");
    const std::string format = format_of(cfg, {"text", "svg", "json"});
    const Rectangulation r = pave(walk);
    if (format == "svg") {
        os << render_svg(r);
    } else if (format == "json") {
        os << to_json(r).dump(2) << '\n';
    } else {
        os << render_ascii(r);
    }
}

void cmd_procedure(const Config& cfg, std::ostream& os) {
    if (cfg.input.empty()) throw UsageError("procedure: a rectangulation JSON file is required");
    const std::string format = format_of(cfg, {"text", "json"});
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(cfg.input));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("rectangulation JSON: ") + e.what());
    }
    const Walk walk = procedure(rectangulation_from_json(doc));
    if (format == "json") {
        os << nlohmann::json{{"walk", format_walk(walk)}}.dump(2) << '\n';
    } else {
        os << walk << '\n';
    }
}

void cmd_insert(const Config& cfg, std::ostream& os) {
    const Walk walk = load_walk(cfg);
    const FactorPattern pattern = require_factor(cfg);
    if (cfg.q < 0) throw UsageError("--q must be nonnegative");
    if (!is_admissible(walk)) throw UsageError("--walk: not an admissible walk");
    const std::string format = format_of(cfg, {"text", "json"});
    const auto set = insertion_set(walk, pattern, cfg.q);
    if (format == "json") {
        nlohmann::json doc{{"walk", format_walk(walk)},
                           {"pattern", format_walk(pattern.walk())},
                           {"q", cfg.q},
                           {"expected", binomial(static_cast<long long>(walk.size()) + cfg.q, cfg.q).str()},
                           {"count", set.size()}};
        doc["walks"] = nlohmann::json::array();
        for (const Walk& w : set) doc["walks"].push_back(format_walk(w));
        os << doc.dump(2) << '\n';
        return;
    }
    for (const Walk& w : set) os << w << '\n';
}

void cmd_bounds(const Config& cfg, std::ostream& os) {
    if (!cfg.L) throw UsageError("--L is required");
    const int L = *cfg.L;
    const int L0 = cfg.L0.value_or(3 * L);
    if (L < 1 || L0 < 1) throw UsageError("--L and --L0 must be positive");
    const std::string format = format_of(cfg, {"text", "csv", "json"});
    const BoundReport report = bounds(L, L0);
    const std::vector<std::pair<std::string, Rational>> rows{{"main_bound", report.main_bound},
                                                             {"refined_bound", report.refined_bound},
                                                             {"radius", report.radius},
                                                             {"inverse_radius", 1 / report.radius}};
    std::ostringstream alpha;
    alpha << std::fixed << std::setprecision(12) << alpha_exponent();
    if (format == "json") {
        nlohmann::json doc{{"L", L}, {"L0", L0}, {"Lambda", to_string(kLambda)}, {"alpha", alpha.str()}};
        for (const auto& [name, value] : rows) doc[name] = {{"exact", to_string(value)}, {"decimal", to_decimal(value, 12)}};
        os << doc.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        os << "quantity,exact,decimal\n";
        for (const auto& [name, value] : rows) os << name << ',' << to_string(value) << ',' << to_decimal(value, 12) << '\n';
        return;
    }
    os << "L " << L << "\nL0 " << L0 << "\nLambda " << to_string(kLambda) << "\nalpha " << alpha.str() << '\n';
    for (const auto& [name, value] : rows) os << name << ' ' << to_decimal(value, 12) << ' ' << to_string(value) << '\n';
}

int cmd_verify(const Config& cfg, std::ostream& os) {
    SuiteOptions options;
    options.n = cfg.n.value_or(6);
    options.n_max = cfg.n_max.value_or(14);
    options.threads = cfg.threads;
    options.factor = cfg.factor;
    check_cap(options.n, kEnumerationCap, cfg, "verify");
    check_cap(options.n_max, kDpCap, cfg, "verify");
    std::vector<std::string> names;
    if (cfg.suite == "all") {
        names = suite_names();
    } else if (std::find(suite_names().begin(), suite_names().end(), cfg.suite) != suite_names().end()) {
        names = {cfg.suite};
    } else {
        throw UsageError("verify: unknown suite '" + cfg.suite + "'");
    }
    const std::string format = format_of(cfg, {"text", "json"});
    bool all_passed = true;
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& name : names) {
        const SuiteResult result = run_suite(name, options);
        all_passed = all_passed && result.passed;
        if (format == "json") {
            doc.push_back({{"suite", result.name}, {"passed", result.passed}, {"detail", result.detail}});
        } else {
            os << result.name << ": " << (result.passed ? "PASS" : "FAIL") << " (" << result.detail << ")\n";
        }
    }
    if (format == "json") os << doc.dump(2) << '\n';
    return all_passed ? kSuccess : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// Suites

std::vector<FactorPattern> stock_factors(const SuiteOptions& options) {
    if (options.factor) return {FactorPattern(parse_walk(*options.factor))};
    return {FactorPattern(parse_walk("0,0,r")), FactorPattern(parse_walk("0,0,g")),
            FactorPattern(parse_walk("0,0,b;1,0,w"))};
}

// Runs check(E) over LHQE(n) in parallel and returns the first failure in
// enumeration order.
template <class Check>
std::optional<std::string> first_failure(int n, int threads, Check&& check) {
    const auto prefixes = enumeration_prefixes(n, WalkClass::lhqe, 3);
    std::vector<std::optional<std::string>> failures(prefixes.size());
    parallel_for(prefixes.size(), threads, [&](std::size_t i) {
        for_each_walk_extending(prefixes[i], n, WalkClass::lhqe, [&](const Walk& e) {
            if (!failures[i]) failures[i] = check(e);
        });
    });
    for (auto& f : failures) {
        if (f) return f;
    }
    return std::nullopt;
}

SuiteResult suite_roundtrip(const SuiteOptions& options) {
    std::uint64_t checked = 0;
    for (int n = 1; n <= options.n; ++n) {
        auto failure = first_failure(n, options.threads, [](const Walk& e) -> std::optional<std::string> {
            try {
                const Walk back = procedure(pave(e));
                if (back != e) return "procedure(pave(" + format_walk(e) + ")) = " + format_walk(back);
            } catch (const Error& ex) {
                return format_walk(e) + ": " + ex.what();
            }
            return std::nullopt;
        });
        if (failure) return {"roundtrip", false, *failure};
        checked += count_walks(n, WalkClass::lhqe);
    }
    return {"roundtrip", true, std::to_string(checked) + " excursions, n <= " + std::to_string(options.n)};
}

// Invariant of strong equivalence used to bucket candidates.
std::vector<std::array<int, 5>> signature(const SegmentConfig& c) {
    std::vector<std::array<int, 5>> sig;
    for (std::size_t i = 0; i < c.size(); ++i) {
        int neg = 0, pos = 0;
        for (const auto& contact : c.contacts(i)) (contact.side == Side::negative ? neg : pos)++;
        const auto lo = c.host(i, End::lo);
        const auto hi = c.host(i, End::hi);
        sig.push_back({static_cast<int>(c.orientation(i)), neg, pos, lo && c.is_frame(*lo) ? 1 : 0,
                       hi && c.is_frame(*hi) ? 1 : 0});
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

SuiteResult suite_distinctness(const SuiteOptions& options) {
    std::uint64_t checked = 0;
    for (int n = 1; n <= options.n; ++n) {
        const auto walks = enumerate_walks(n, WalkClass::lhqe);
        std::vector<SegmentConfig> configs(walks.size());
        parallel_for(walks.size(), options.threads, [&](std::size_t i) { configs[i] = seg(pave(walks[i])); });
        std::map<std::vector<std::array<int, 5>>, std::vector<std::size_t>> buckets;
        for (std::size_t i = 0; i < configs.size(); ++i) buckets[signature(configs[i])].push_back(i);
        for (const auto& [sig, members] : buckets) {
            for (std::size_t a = 0; a < members.size(); ++a) {
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    if (strong_equivalent(configs[members[a]], configs[members[b]])) {
                        return {"distinctness", false,
                                "pave(" + format_walk(walks[members[a]]) + ") ~ pave(" + format_walk(walks[members[b]]) +
                                    ")"};
                    }
                }
            }
        }
        checked += walks.size();
    }
    return {"distinctness", true, std::to_string(checked) + " pavements pairwise inequivalent"};
}

SuiteResult suite_insertion(const SuiteOptions& options) {
    std::uint64_t sets = 0;
    for (const FactorPattern& pattern : stock_factors(options)) {
        const std::string p = format_walk(pattern.walk());
        for (int q = 1; q <= 2; ++q) {
            std::map<Walk, Walk> owner;
            for (int m = 0; m <= options.n; ++m) {
                for (const Walk& w : enumerate_walks(m, WalkClass::lhqwadm)) {
                    if (!avoids(w, pattern)) continue;
                    const std::string where = "W=" + format_walk(w) + " P=" + p + " q=" + std::to_string(q);
                    std::vector<Walk> set;
                    try {
                        set = insertion_set(w, pattern, q);
                    } catch (const Error& ex) {
                        return {"insertion", false, where + ": " + ex.what()};
                    }
                    if (BigInt(set.size()) != binomial(m + q, q)) {
                        return {"insertion", false, where + ": |S| = " + std::to_string(set.size())};
                    }
                    for (const Walk& s : set) {
                        if (!is_admissible(s)) return {"insertion", false, where + ": not admissible " + format_walk(s)};
                        if (remove_copies(s, pattern, q) != w) {
                            return {"insertion", false, where + ": removal fails on " + format_walk(s)};
                        }
                        auto [it, fresh] = owner.emplace(s, w);
                        if (!fresh) {
                            return {"insertion", false,
                                    where + ": shares " + format_walk(s) + " with W'=" + format_walk(it->second)};
                        }
                    }
                    ++sets;
                }
            }
        }
    }
    return {"insertion", true, std::to_string(sets) + " sets S(W,q), q <= 2"};
}

SuiteResult suite_inequality(const SuiteOptions& options) {
    std::vector<FactorPattern> patterns = stock_factors(options);
    if (!options.factor) {
        const Walk sample = parse_walk("0,0,b;1,0,g;1,1,r;1,0,r;1,1,r;1,0,w;0,0,w");
        patterns.push_back(extend_overlap_free(FactorPattern(star(sample)), 6));
    }
    for (const FactorPattern& pattern : patterns) {
        const auto report = verify_insertion_inequality(options.n_max, pattern);
        for (const auto& row : report.rows) {
            if (!row.holds) {
                return {"inequality", false,
                        "P=" + format_walk(pattern.walk()) + " n=" + std::to_string(row.n) + ": " + row.lhs.str() +
                            " < " + row.rhs.str()};
            }
        }
    }
    return {"inequality", true,
            std::to_string(patterns.size()) + " patterns, n <= " + std::to_string(options.n_max)};
}

SuiteResult suite_proportion(const SuiteOptions& options) {
    AvoidCountOptions avoid;
    avoid.cap = std::max(options.n, kEnumerationCap);
    avoid.threads = options.threads;
    for (const auto& row : proportion_report(options.n, horizontal_bar_pattern(), avoid)) {
        if (row.ratio != Rational(1, row.total)) {
            return {"proportion", false, "horizontal bar n=" + std::to_string(row.n) + ": " + to_string(row.ratio)};
        }
    }
    const auto rows = proportion_report(options.n, t_shape_pattern(), avoid);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].ratio > rows[i - 1].ratio) {
            return {"proportion", false,
                    "t-shape ratio rises at n=" + std::to_string(rows[i].n) + ": " + to_string(rows[i].ratio)};
        }
    }
    return {"proportion", true, "n <= " + std::to_string(options.n)};
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"roundtrip", "distinctness", "insertion", "inequality", "proportion"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "roundtrip") return suite_roundtrip(options);
    if (name == "distinctness") return suite_distinctness(options);
    if (name == "insertion") return suite_insertion(options);
    if (name == "inequality") return suite_inequality(options);
    if (name == "proportion") return suite_proportion(options);
    throw DomainError("unknown suite '" + name + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Leftmost history quadrant walks and strong rectangulations", "rectwalk"};
    app.require_subcommand(1);
    Config cfg;

    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "Length"); };
    auto add_n_max = [&](CLI::App* sub) { sub->add_option("--n-max", cfg.n_max, "Largest length"); };
    auto add_class = [&](CLI::App* sub) {
        sub->add_option("--class", cfg.cls, "Walk class")->check(CLI::IsMember({"hqw", "lhqw", "lhqwadm", "lhqe"}));
    };
    auto add_walk = [&](CLI::App* sub) {
        sub->add_option("--walk", cfg.walk, "Walk in text form");
        sub->add_option("--walk-file", cfg.walk_file, "File holding a walk");
    };
    auto add_pattern = [&](CLI::App* sub) {
        sub->add_option("--factor", cfg.factor, "Walk factor pattern in text form");
        sub->add_option("--pattern-file", cfg.pattern_file, "Walk factor (text) or geometric pattern (JSON)");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json", "text", "svg"}));
        sub->add_option("--out", cfg.out_path, "Write output to this file");
        sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--force", cfg.force, "Lift the size caps");
    };

    auto* count = app.add_subcommand("count", "Class sizes by dynamic programming");
    add_n(count), add_n_max(count), add_class(count), add_pattern(count), add_common(count);
    auto* enumerate = app.add_subcommand("enumerate", "List the walks of a class");
    add_n(enumerate), add_class(enumerate), add_common(enumerate);
    auto* avoid = app.add_subcommand("avoid-count", "Count walks or rectangulations avoiding a pattern");
    add_n(avoid), add_n_max(avoid), add_class(avoid), add_pattern(avoid), add_common(avoid);
    auto* pave_cmd = app.add_subcommand("pave", "Draw the rectangulation of an excursion");
    add_walk(pave_cmd), add_common(pave_cmd);
    auto* procedure_cmd = app.add_subcommand("procedure", "Read the excursion of a rectangulation");
    procedure_cmd->add_option("file", cfg.input, "Rectangulation JSON")->required();
    add_common(procedure_cmd);
    auto* insert = app.add_subcommand("insert", "List S(W, q)");
    add_walk(insert), add_pattern(insert), add_common(insert);
    insert->add_option("--q", cfg.q, "Number of inserted copies");
    auto* bounds_cmd = app.add_subcommand("bounds", "Exact growth bounds");
    bounds_cmd->add_option("--L", cfg.L, "Pattern size");
    bounds_cmd->add_option("--L0", cfg.L0, "Extended factor length (default 3L)");
    add_common(bounds_cmd);
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", cfg.suite, "roundtrip | distinctness | insertion | inequality | proportion | all")
        ->required();
    add_n(verify), add_n_max(verify), add_common(verify);
    verify->add_option("--factor", cfg.factor, "Walk factor replacing the stock patterns");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
        return kUsageError;
    }

    std::ostringstream buffer;
    int code = kSuccess;
    try {
        if (count->parsed()) cmd_count(cfg, buffer);
        if (enumerate->parsed()) cmd_enumerate(cfg, buffer);
        if (avoid->parsed()) cmd_avoid_count(cfg, buffer);
        if (pave_cmd->parsed()) cmd_pave(cfg, buffer);
        if (procedure_cmd->parsed()) cmd_procedure(cfg, buffer);
        if (insert->parsed()) cmd_insert(cfg, buffer);
        if (bounds_cmd->parsed()) cmd_bounds(cfg, buffer);
        if (verify->parsed()) code = cmd_verify(cfg, buffer);
    } catch (const InvariantError& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    if (cfg.out_path) {
        std::ofstream file(*cfg.out_path, std::ios::binary);
        if (!file) {
            err << "usage error: --out: cannot write '" << *cfg.out_path << "'\n";
            return kUsageError;
        }
        file << buffer.str();
    } else {
        out << buffer.str();
    }
    return code;
}

}  // namespace rectwalk::cli
