#include "fanlike/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fanlike/automorphism.hpp"
#include "fanlike/catalog.hpp"
#include "fanlike/error.hpp"
#include "fanlike/io.hpp"

namespace fanlike::cli {

namespace {

constexpr std::size_t kMaxViolationsShown = 20;

struct Style {
    bool color = false;
    std::string pass() const { return color ? "\033[32mPASS\033[0m" : "PASS"; }
    std::string fail() const { return color ? "\033[31mFAIL\033[0m" : "FAIL"; }
    std::string verdict(bool ok) const { return ok ? pass() : fail(); }
};

unsigned default_threads() {
    unsigned t = std::thread::hardware_concurrency();
    return t == 0 ? 1 : t;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string vector_str(const std::vector<BigInt>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].str();
    }
    return out + ")";
}

// "3=1,*,-1" pins column 3; '*' leaves an entry free.
void add_pin(std::vector<std::vector<std::optional<long long>>>& pins, int m, int n, const std::string& spec) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) fail(ErrorCode::ParseError, "pin '" + spec + "' needs COL=v1,...,vn");
    int col = 0;
    try {
        col = std::stoi(spec.substr(0, eq));
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "pin '" + spec + "': bad column");
    }
    if (col < 1 || col > m) fail(ErrorCode::ParseError, "pin '" + spec + "': column out of range");
    std::vector<std::optional<long long>> entries;
    std::stringstream ss(spec.substr(eq + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "*") {
            entries.emplace_back();
            continue;
        }
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            entries.emplace_back(v);
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "pin '" + spec + "': bad entry '" + tok + "'");
        }
    }
    if (static_cast<int>(entries.size()) != n) {
        fail(ErrorCode::ParseError, "pin '" + spec + "' needs " + std::to_string(n) + " entries");
    }
    if (pins.empty()) pins.assign(static_cast<std::size_t>(m), {});
    pins[static_cast<std::size_t>(col) - 1] = std::move(entries);
}

SearchMode parse_mode(const std::string& s) {
    if (s == "characteristic") return SearchMode::Characteristic;
    if (s == "positive") return SearchMode::Positive;
    if (s == "fan") return SearchMode::FanGiving;
    fail(ErrorCode::ParseError, "unknown mode '" + s + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
    Style style{color};
    CLI::App app{"Characteristic maps and fans over PL spheres"};
    app.name("fanlike");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string complex_arg, matrix_arg, face_arg, mode_arg = "fan", only_format = "json";
    std::string a_arg, b_arg, facet_a, facet_b, glue_arg, id_arg;
    std::vector<std::string> only_ids, pin_args;
    int bound = 1;
    int verify_bound = 2;
    int search_bound = -1;
    int vertex = 0;
    unsigned threads = default_threads();
    std::uint64_t budget = 1'000'000'000ULL;
    bool json_out = false, want_positive = false, want_fan = false, want_projective = false, dedup = false;
    bool no_search = false;

    auto* verify = app.add_subcommand("verify-catalog", "Run the per-entry battery over the catalog");
    verify->add_option("--bound", verify_bound, "Template sweep bound")->check(CLI::Range(0, 6));
    verify->add_option("--search-bound", search_bound, "Search bound for the minimally non-fanlike entries (default: --bound)")
        ->check(CLI::Range(0, 4));
    verify->add_option("--only", only_ids, "Restrict to these ids");
    verify->add_flag("--no-search", no_search, "Skip the bounded searches");
    verify->add_flag("--json", json_out);
    verify->add_option("--threads", threads)->check(CLI::Range(1U, 1024U));

    auto* check = app.add_subcommand("check", "Test a characteristic map");
    check->add_option("--complex", complex_arg, "Catalog id or CPLX file")->required();
    check->add_option("--matrix", matrix_arg, "Matrix file, or rows separated by ';'")->required();
    check->add_flag("--positive", want_positive);
    check->add_flag("--fan", want_fan);
    check->add_flag("--projective", want_projective);
    check->add_flag("--json", json_out);

    auto* search = app.add_subcommand("search", "Bounded search for characteristic maps");
    search->add_option("--complex", complex_arg)->required();
    search->add_option("--bound", bound)->check(CLI::Range(0, 20));
    search->add_option("--mode", mode_arg, "characteristic, positive or fan");
    search->add_option("--pin", pin_args, "COL=v1,...,vn with * for free entries");
    search->add_flag("--dedup", dedup, "One map per fan-isomorphism class");
    search->add_option("--budget", budget, "Node budget");
    search->add_option("--threads", threads)->check(CLI::Range(1U, 1024U));
    search->add_flag("--json", json_out);

    auto* classify_cmd = app.add_subcommand("classify", "Bad-link test, then a bounded fan search");
    classify_cmd->add_option("--complex", complex_arg)->required();
    classify_cmd->add_option("--bound", bound)->check(CLI::Range(0, 20));
    classify_cmd->add_option("--threads", threads)->check(CLI::Range(1U, 1024U));
    classify_cmd->add_flag("--json", json_out);

    auto* props = app.add_subcommand("props", "Basic invariants");
    props->add_option("--complex", complex_arg)->required();
    props->add_flag("--json", json_out);

    auto* aut = app.add_subcommand("aut", "Automorphism group");
    aut->add_option("--complex", complex_arg)->required();
    aut->add_flag("--json", json_out);

    auto* wedge_cmd = app.add_subcommand("wedge", "Wedge at a vertex");
    wedge_cmd->add_option("--complex", complex_arg)->required();
    wedge_cmd->add_option("--vertex", vertex)->required();

    auto* link_cmd = app.add_subcommand("link", "Link of a face");
    link_cmd->add_option("--complex", complex_arg)->required();
    link_cmd->add_option("--face", face_arg)->required();

    auto* sum = app.add_subcommand("sum", "Connected sum along two facets");
    sum->add_option("--a", a_arg)->required();
    sum->add_option("--b", b_arg)->required();
    sum->add_option("--facet-a", facet_a)->required();
    sum->add_option("--facet-b", facet_b)->required();
    sum->add_option("--glue", glue_arg, "Vertices of facet-a matched to facet-b's, comma separated");

    auto* project_cmd = app.add_subcommand("project", "Projection of a map to a link");
    project_cmd->add_option("--complex", complex_arg)->required();
    project_cmd->add_option("--matrix", matrix_arg)->required();
    project_cmd->add_option("--face", face_arg)->required();

    auto* batyrev = app.add_subcommand("batyrev", "Minimal non-face count against (p-1)(p+2)/2");
    batyrev->add_option("--complex", complex_arg)->required();

    auto* export_cmd = app.add_subcommand("export", "Print catalog entries");
    export_cmd->add_option("--id", id_arg, "Entry id; all entries when omitted");
    export_cmd->add_option("--format", only_format, "json or cplx")->check(CLI::IsMember({"json", "cplx"}));

    auto* tables = app.add_subcommand("tables", "Reference tables stored with the catalog");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) {
            std::vector<const CatalogEntry*> entries;
            for (const auto& e : load_catalog()) {
                if (only_ids.empty() || std::find(only_ids.begin(), only_ids.end(), e.id) != only_ids.end()) {
                    entries.push_back(&e);
                }
            }
            for (const auto& id : only_ids) {
                if (!find_entry(id)) fail(ErrorCode::ParseError, "unknown catalog id '" + id + "'");
            }
            VerifyOptions opts;
            opts.bound = verify_bound;
            opts.search_bound = search_bound < 0 ? verify_bound : search_bound;
            opts.run_searches = !no_search;
            std::vector<EntryReport> reports(entries.size());
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (std::size_t i = next++; i < entries.size(); i = next++) {
                    reports[i] = verify_entry(*entries[i], opts);
                }
            };
            unsigned pool = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, entries.size())));
            std::vector<std::thread> workers;
            for (unsigned t = 1; t < pool; ++t) workers.emplace_back(worker);
            worker();
            for (auto& t : workers) t.join();
            std::size_t failed = 0;
            if (json_out) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : reports) arr.push_back(to_json(r));
                out << arr.dump(2) << "\n";
            }
            for (const auto& r : reports) {
                if (!r.passed()) ++failed;
                if (json_out) continue;
                out << style.verdict(r.passed()) << " " << r.id << " (" << static_cast<long long>(r.time_ms) << " ms)";
                for (const auto& c : r.checks) {
                    out << " " << c.name << "=" << (c.pass ? "ok" : "FAILED");
                }
                out << "\n";
                for (const auto& c : r.checks) {
                    if (!c.pass) out << "    " << c.name << ": " << c.detail << "\n";
                }
            }
            if (!json_out) {
                out << (reports.size() - failed) << "/" << reports.size() << " entries pass\n";
            }
            return failed == 0 ? 0 : 1;
        }

        if (check->parsed()) {
            PLSphere k = load_complex(complex_arg);
            IntMatrix lambda = load_matrix(matrix_arg);
            if (lambda.rows() != k.n() || lambda.cols() != k.m()) {
                fail(ErrorCode::ShapeMismatch, "matrix is " + std::to_string(lambda.rows()) + "x" +
                                                   std::to_string(lambda.cols()) + ", the complex needs " +
                                                   std::to_string(k.n()) + "x" + std::to_string(k.m()));
            }
            nlohmann::json j;
            bool ok = true;
            bool characteristic = is_characteristic(k, lambda);
            j["characteristic"] = characteristic;
            if (!json_out) out << "characteristic: " << style.verdict(characteristic) << "\n";
            if (!characteristic) {
                for (Face f : k.facets()) {
                    BigInt d = facet_det(lambda, f);
                    if (d != 1 && d != -1) {
                        if (!json_out) out << "  det" << to_braced(f) << " = " << d.str() << "\n";
                        j["bad_facet"] = to_braced(f);
                        break;
                    }
                }
                if (json_out) out << j.dump(2) << "\n";
                return 1;
            }
            if (want_positive) {
                bool pos = is_positive(k, lambda);
                ok = ok && pos;
                j["positive"] = pos;
                if (!json_out) out << "positive: " << style.verdict(pos) << "\n";
            }
            bool fan = true;
            if (want_fan || want_projective) {
                auto violations = fan_violations(k, lambda, kMaxViolationsShown);
                fan = violations.empty();
                if (want_fan) ok = ok && fan;
                j["fan"] = fan;
                nlohmann::json vj = nlohmann::json::array();
                if (want_fan && !json_out) out << "fan: " << style.verdict(fan) << "\n";
                for (const auto& v : violations) {
                    std::string support = "(";
                    for (std::size_t i = 0; i < v.support.size(); ++i) {
                        support += (i ? "," : "") + std::to_string(v.support[i]);
                    }
                    support += ")";
                    if (want_fan && !json_out) {
                        out << "  violation " << to_braced(v.sigma1) << " " << to_braced(v.sigma2) << " support "
                            << support << " witness " << vector_str(v.witness) << "\n";
                    }
                    vj.push_back({{"sigma1", to_braced(v.sigma1)},
                                  {"sigma2", to_braced(v.sigma2)},
                                  {"support", v.support},
                                  {"witness", vector_str(v.witness)}});
                }
                j["violations"] = vj;
            }
            if (want_projective) {
                if (!fan) {
                    if (!json_out) out << "projective: " << style.fail() << " (not fan-giving)\n";
                    j["projective"] = false;
                    ok = false;
                } else {
                    bool proj = is_projective(k, lambda);
                    ok = ok && proj;
                    j["projective"] = proj;
                    if (!json_out) out << "projective: " << style.verdict(proj) << "\n";
                }
            }
            if (json_out) out << j.dump(2) << "\n";
            return ok ? 0 : 1;
        }

        if (search->parsed()) {
            PLSphere k = load_complex(complex_arg);
            SearchConfig cfg;
            cfg.bound = bound;
            cfg.mode = parse_mode(mode_arg);
            cfg.threads = threads;
            cfg.node_budget = budget;
            cfg.dedup = dedup;
            for (const auto& p : pin_args) add_pin(cfg.pins, k.m(), k.n(), p);
            SearchResult res = search_char_maps(k, cfg);
            if (json_out) {
                nlohmann::json maps = nlohmann::json::array();
                for (const auto& m : res.maps) maps.push_back(to_json(m));
                out << nlohmann::json{{"mode", to_string(cfg.mode)},
                                      {"bound", bound},
                                      {"count", res.maps.size()},
                                      {"maps", maps},
                                      {"nodes", res.stats.nodes},
                                      {"time_ms", res.stats.time_ms}}
                           .dump(2)
                    << "\n";
            } else {
                out << "mode=" << to_string(cfg.mode) << " bound=" << bound << " count=" << res.maps.size()
                    << " nodes=" << res.stats.nodes << "\n";
                for (const auto& m : res.maps) out << "\n" << to_string(m);
            }
            return 0;
        }

        if (classify_cmd->parsed()) {
            PLSphere k = load_complex(complex_arg);
            Verdict v = classify(k, l_seeds(), bound, threads);
            if (json_out) {
                out << to_json(v).dump(2) << "\n";
            } else {
                out << "status=" << to_string(v.status) << " bound=" << v.bound << "\n";
                if (v.bad_link) out << "bad-link " << to_braced(v.bad_link->face) << " " << v.bad_link->seed_id << "\n";
                if (!v.catalog_match.empty()) out << "isomorphic-to " << v.catalog_match << "\n";
                if (!v.witnesses.empty()) out << "\n" << to_string(v.witnesses.front());
            }
            return 0;
        }

        if (props->parsed()) {
            PLSphere k = load_complex(complex_arg);
            int nd = neighborly_degree(k);
            bool flag = is_flag(k);
            bool seed = is_seed(k);
            if (json_out) {
                out << nlohmann::json{{"n", k.n()},
                                      {"m", k.m()},
                                      {"picard", k.picard()},
                                      {"nonfaces", count_min_nonfaces(k)},
                                      {"neighborly", nd},
                                      {"flag", flag},
                                      {"seed", seed}}
                           .dump(2)
                    << "\n";
            } else {
                out << "n=" << k.n() << "\nm=" << k.m() << "\npicard=" << k.picard()
                    << "\n|M|=" << count_min_nonfaces(k) << "\nneighborly=" << nd << "\nflag=" << bool_str(flag)
                    << "\nseed=" << bool_str(seed) << "\n";
            }
            return 0;
        }

        if (aut->parsed()) {
            PLSphere k = load_complex(complex_arg);
            AutGroup g = automorphisms(k);
            if (json_out) {
                out << nlohmann::json{{"order", g.order()}, {"elements", g.elements}}.dump() << "\n";
            } else {
                out << "order=" << g.order() << "\n";
                for (const auto& p : g.elements) out << to_string(p) << "\n";
            }
            return 0;
        }

        if (wedge_cmd->parsed()) {
            out << print_cplx(wedge(load_complex(complex_arg), vertex));
            return 0;
        }

        if (link_cmd->parsed()) {
            PLSphere k = load_complex(complex_arg);
            Link l = link(k, parse_face(face_arg));
            out << "# labels:";
            for (int v : l.labels) out << " " << v;
            out << "\n" << print_cplx(l.complex);
            return 0;
        }

        if (sum->parsed()) {
            PLSphere k1 = load_complex(a_arg);
            PLSphere k2 = load_complex(b_arg);
            Face s1 = parse_face(facet_a);
            Face s2 = parse_face(facet_b);
            std::vector<int> glue;
            if (glue_arg.empty()) {
                glue = s1.vertices();
            } else {
                std::stringstream ss(glue_arg);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    try {
                        glue.push_back(std::stoi(tok));
                    } catch (const std::exception&) {
                        fail(ErrorCode::ParseError, "bad glue entry '" + tok + "'");
                    }
                }
            }
            out << print_cplx(connected_sum(k1, k2, s1, s2, glue));
            return 0;
        }

        if (project_cmd->parsed()) {
            PLSphere k = load_complex(complex_arg);
            IntMatrix lambda = load_matrix(matrix_arg);
            Projection p = project(k, lambda, parse_face(face_arg));
            out << "# labels:";
            for (int v : p.link.labels) out << " " << v;
            out << "\n" << print_cplx(p.link.complex) << to_string(p.map);
            return 0;
        }

        if (batyrev->parsed()) {
            BatyrevCounts c = batyrev_counts(load_complex(complex_arg));
            out << "|M|=" << c.nonfaces << " picard=" << c.picard << " (p-1)(p+2)/2=" << c.rhs
                << " exceeds=" << bool_str(c.nonfaces > c.rhs) << "\n";
            return 0;
        }

        if (export_cmd->parsed()) {
            std::vector<const CatalogEntry*> entries;
            if (id_arg.empty()) {
                for (const auto& e : load_catalog()) entries.push_back(&e);
            } else {
                const CatalogEntry* e = find_entry(id_arg);
                if (!e) fail(ErrorCode::ParseError, "unknown catalog id '" + id_arg + "'");
                entries.push_back(e);
            }
            if (only_format == "cplx") {
                for (const auto* e : entries) {
                    if (entries.size() > 1) out << "# " << e->id << "\n";
                    out << export_cplx(*e);
                }
            } else if (entries.size() == 1 && !id_arg.empty()) {
                out << to_json(*entries.front()).dump(2) << "\n";
            } else {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto* e : entries) arr.push_back(to_json(*e));
                out << arr.dump(2) << "\n";
            }
            return 0;
        }

        if (tables->parsed()) {
            out << "max |M| over fanlike spheres, by p (rows) and n = 2..8, overall\n";
            for (const auto& row : nonface_bound_table()) {
                out << "p=" << row.p;
                for (const auto& v : row.by_n) out << "\t" << v;
                out << "\t" << row.overall << "\n";
            }
            out << "seeds admitting a characteristic map, by p and n = 1..11, total\n";
            for (const auto& row : seed_count_table()) {
                out << "p=" << row.p;
                for (int v : row.by_n) out << "\t" << v;
                out << "\t" << row.total << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    const char* no_color = std::getenv("NO_COLOR");
    bool color = isatty(STDOUT_FILENO) && (no_color == nullptr || no_color[0] == '\0');
    try {
        return run(args, std::cout, std::cerr, color);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace fanlike::cli
