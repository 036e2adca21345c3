// Command-line surface for the quiver calculus library: codimension,
// rectangle tables, coefficient expansions, factor sequences, Schubert
// specializations, and the randomized invariant harness.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "quiver/quiver.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitSuiteFailure = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json rectangles_json(const quiver::RankConditions& r) {
    json out = json::array();
    for (int j = 1; j <= r.n(); ++j)
        for (int i = 0; i < j; ++i) {
            quiver::Rectangle rc = r.rect(i, j);
            out.push_back({{"i", i}, {"j", j}, {"width", rc.width}, {"height", rc.height}});
        }
    return out;
}

void print_rectangles(std::ostream& os, const quiver::RankConditions& r) {
    os << "rectangles:\n";
    for (int d = 1; d <= r.n(); ++d)
        for (int i = 0; i + d <= r.n(); ++i) {
            quiver::Rectangle rc = r.rect(i, i + d);
            os << "  (" << i << "," << i + d << "): " << rc.width << "x" << rc.height
               << "\n";
        }
}

json terms_json(const quiver::QuiverPolynomial& p) {
    json terms = json::array();
    for (const auto& [lam, c] : p.terms()) {
        json parts = json::array();
        for (const quiver::Partition& part : lam) parts.push_back(part.parts());
        terms.push_back({{"coeff", c.to_string()}, {"partitions", parts}});
    }
    return terms;
}

json monomials_json(const quiver::MultiPolynomial& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) {
        json x = json::array(), y = json::array();
        for (int k = 0; k < p.nx(); ++k) x.push_back(e[k]);
        for (int k = 0; k < p.ny(); ++k) y.push_back(e[p.nx() + k]);
        out.push_back({{"coeff", c.to_string()}, {"x", x}, {"y", y}});
    }
    return out;
}

// Loads and validates rank conditions; on failure prints the verdict and
// exits nonzero with the offending indices.
quiver::RankConditions load_conditions(const std::string& path, bool structured) {
    quiver::RankConditions r = quiver::RankConditions::parse(read_file(path));
    if (auto v = r.validate()) {
        if (structured) {
            json out{{"valid", false},
                     {"violation",
                      {{"i", v->i}, {"j", v->j}, {"constraint", v->what}}}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "valid: no\n";
            std::cout << "violation: (" << v->i << "," << v->j << ") " << v->what
                      << "\n";
        }
        std::exit(kExitInvalid);
    }
    return r;
}

int cmd_codim(const std::string& path, bool structured) {
    quiver::RankConditions r = load_conditions(path, structured);
    if (structured) {
        std::cout << json{{"valid", true}, {"n", r.n()}, {"codim", r.codim()}}.dump(2)
                  << "\n";
    } else {
        std::cout << "valid: yes\ncodim: " << r.codim() << "\n";
    }
    return kExitOk;
}

int cmd_rectangles(const std::string& path, bool structured) {
    quiver::RankConditions r = load_conditions(path, structured);
    if (structured) {
        std::cout << json{{"valid", true},
                          {"codim", r.codim()},
                          {"rectangles", rectangles_json(r)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "valid: yes\ncodim: " << r.codim() << "\n";
        print_rectangles(std::cout, r);
    }
    return kExitOk;
}

int cmd_coefficients(const std::string& path, bool structured) {
    quiver::RankConditions r = load_conditions(path, structured);
    quiver::QuiverPolynomial p = quiver::coefficients(r);
    if (structured) {
        std::cout << json{{"valid", true},
                          {"codim", r.codim()},
                          {"rectangles", rectangles_json(r)},
                          {"terms", terms_json(p)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "valid: yes\ncodim: " << r.codim() << "\n";
        print_rectangles(std::cout, r);
        std::cout << "coefficients:\n" << p.to_string();
    }
    return kExitOk;
}

int cmd_factor_sequences(const std::string& path, bool shapes, bool structured) {
    quiver::RankConditions r = load_conditions(path, structured);
    quiver::TableauArray arr = quiver::standard_array(r);
    auto seqs = quiver::factor_sequences(arr);
    auto counts = quiver::shape_counts(seqs);
    if (structured) {
        json jc = json::array();
        for (const auto& [lam, c] : counts) {
            json parts = json::array();
            for (const quiver::Partition& part : lam) parts.push_back(part.parts());
            jc.push_back({{"count", c}, {"partitions", parts}});
        }
        json out{{"valid", true}, {"sequences", static_cast<long long>(seqs.size())},
                 {"counts", jc}};
        if (shapes) {
            json js = json::array();
            for (const auto& s : seqs) {
                json seq = json::array();
                for (const quiver::Tableau& t : s) seq.push_back(t.rows());
                js.push_back(seq);
            }
            out["factor_sequences"] = js;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "valid: yes\nsequences: " << seqs.size() << "\ncounts:\n";
        for (const auto& [lam, c] : counts)
            std::cout << c << " " << quiver::tuple_to_string(lam) << "\n";
        if (shapes) {
            std::cout << "listing:\n";
            bool first = true;
            for (const auto& s : seqs) {
                if (!first) std::cout << "\n";
                first = false;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    std::cout << "T" << i + 1 << ":\n" << s[i].to_string();
                }
            }
        }
    }
    return kExitOk;
}

int cmd_schubert(const std::string& perm, const std::string& mode, bool structured) {
    quiver::Permutation w = quiver::Permutation::parse(perm);
    const int m = w.size() - 1;
    if (m < 1) throw std::invalid_argument("permutation must have at least 2 values");
    quiver::QuiverPolynomial p =
        quiver::coefficients(quiver::rank_conditions_from(w, m));
    if (mode == "universal") {
        if (structured) {
            std::cout << json{{"permutation", w.to_string()},
                              {"mode", mode},
                              {"terms", terms_json(p)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << p.to_string();
        }
        return kExitOk;
    }
    quiver::MultiPolynomial s = mode == "double" ? quiver::specialize_double(p, m)
                                                 : quiver::specialize_single(p, m);
    if (structured) {
        std::cout << json{{"permutation", w.to_string()},
                          {"mode", mode},
                          {"monomials", monomials_json(s)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << s.to_string();
    }
    return kExitOk;
}

int cmd_verify(const quiver::VerifyConfig& cfg, bool structured) {
    auto results = quiver::run_verify(cfg);
    bool ok = true;
    if (structured) {
        json suites = json::array();
        for (const auto& s : results) {
            ok = ok && s.fail == 0;
            suites.push_back({{"name", s.name},
                              {"pass", s.pass},
                              {"fail", s.fail},
                              {"failures", s.failures}});
        }
        std::cout << json{{"seed", cfg.seed},
                          {"trials", cfg.trials},
                          {"max_n", cfg.max_n},
                          {"max_entry", cfg.max_entry},
                          {"ok", ok},
                          {"suites", suites}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "seed: " << cfg.seed << "\ntrials: " << cfg.trials << "\n";
        for (const auto& s : results) {
            ok = ok && s.fail == 0;
            std::cout << "suite " << s.name << ": " << s.pass << "/"
                      << (s.pass + s.fail) << " pass\n";
            for (const auto& f : s.failures) std::cout << "  failure: " << f << "\n";
        }
        std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degeneracy-locus coefficient calculator for type-A quivers"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    std::string file;
    auto* codim = app.add_subcommand("codim", "Expected codimension of a rank-conditions file");
    codim->add_option("file", file, "rank-conditions file")->required();

    auto* rects = app.add_subcommand("rectangles", "Rectangle array of a rank-conditions file");
    rects->add_option("file", file, "rank-conditions file")->required();

    auto* coeffs = app.add_subcommand("coefficients",
                                      "Coefficient expansion of a rank-conditions file");
    coeffs->add_option("file", file, "rank-conditions file")->required();

    bool shapes = false;
    auto* facs = app.add_subcommand("factor-sequences",
                                    "Factor sequences of the standard tableau array");
    facs->add_option("file", file, "rank-conditions file")->required();
    facs->add_flag("--shapes", shapes, "List the sequences themselves");

    std::string perm;
    bool single = false, dble = false, universal = false;
    auto* schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
    schubert->add_option("permutation", perm,
                         "one-line notation, digits or comma-separated")
        ->required();
    auto* opt_single = schubert->add_flag("--single", single, "ordinary Schubert polynomial");
    auto* opt_double = schubert->add_flag("--double", dble, "double Schubert polynomial");
    auto* opt_universal =
        schubert->add_flag("--universal", universal, "universal coefficient expansion");
    opt_single->excludes(opt_double)->excludes(opt_universal);
    opt_double->excludes(opt_universal);

    quiver::VerifyConfig cfg;
    auto* verify = app.add_subcommand("verify", "Randomized invariant harness");
    verify->add_option("--trials", cfg.trials, "instances per randomized suite")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--max-n", cfg.max_n, "largest number of maps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--max-entry", cfg.max_entry, "largest bundle rank")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--seed", cfg.seed, "master seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;  // help/version exit 0
    }
    const bool structured = format == "structured";

    try {
        if (codim->parsed()) return cmd_codim(file, structured);
        if (rects->parsed()) return cmd_rectangles(file, structured);
        if (coeffs->parsed()) return cmd_coefficients(file, structured);
        if (facs->parsed()) return cmd_factor_sequences(file, shapes, structured);
        if (schubert->parsed()) {
            std::string mode = universal ? "universal" : (dble ? "double" : "single");
            if (!single && !dble && !universal)
                throw std::invalid_argument(
                    "schubert: one of --single, --double, --universal is required");
            return cmd_schubert(perm, mode, structured);
        }
        if (verify->parsed()) return cmd_verify(cfg, structured);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitSuiteFailure;
    }
    return kExitInvalid;
}
