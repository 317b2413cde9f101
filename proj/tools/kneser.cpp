#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kneser/hecke.hpp"
#include "kneser/neighbor.hpp"
#include "kneser/verify.hpp"
#include "kneser/weight_enum.hpp"

namespace fs = std::filesystem;
using namespace kneser;

namespace {

constexpr const char* output_env = "KNESER_OUTPUT_DIR";

struct Config {
    std::string type;
    std::vector<int> lengths;
    int k = 1;
    int threads = 1;
    std::uint64_t budget = default_tuple_budget;
    std::string out;
    bool verify_mass = false;
    std::string seed_file;
    bool orbits = false;
    int max_length = 0;
    int genus = 1;
    int m_max = 10;
    std::size_t class_index = 0;
    bool cross_check = false;
    bool perturb = false;
    std::string matrix_file;
    std::uint64_t rng_seed = 1;
    bool quiet = false;
};

fs::path output_root(const Config& cfg) {
    if (!cfg.out.empty()) return cfg.out;
    if (const char* env = std::getenv(output_env); env && *env) return env;
    return "kneser-out";
}

// "qE:q=3" -> "qE_q3"; used for directory names.
std::string slug(const TypeSpec& t) {
    std::string s;
    for (char c : t.label()) {
        if (c == ':') s += '_';
        else if (c != '=') s += c;
    }
    return s;
}

fs::path data_dir(const Config& cfg, const TypeSpec& t, int length) {
    return output_root(cfg) / (slug(t) + "-N" + std::to_string(length));
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
}

int default_cap(const TypeSpec& t) { return t.q() == 2 ? 24 : 12; }

void check_cap(const Config& cfg, const TypeSpec& t, int length) {
    int cap = cfg.max_length > 0 ? cfg.max_length : default_cap(t);
    if (length > cap) {
        throw std::invalid_argument("length " + std::to_string(length) + " exceeds the cap " + std::to_string(cap) +
                                    " for " + t.label() + "; raise it with --max-length");
    }
}

// Generator rows, one per line; symbols separated by whitespace, or written as
// consecutive digits when q <= 10. Blank lines and lines starting with # are ignored.
Code read_seed(const fs::path& p, const TypeSpec& t, int length) {
    std::istringstream in(read_file(p));
    std::string line;
    Matrix rows;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        Vector row;
        if (line.find_first_of(" \t", first) == std::string::npos && t.q() <= 10) {
            for (char c : line)
                if (c >= '0' && c <= '9') row.push_back(static_cast<Symbol>(c - '0'));
        } else {
            std::istringstream ls(line);
            int v;
            while (ls >> v) row.push_back(static_cast<Symbol>(v));
            if (!ls.eof()) throw std::invalid_argument("seed file: unreadable symbol in \"" + line + "\"");
        }
        for (Symbol s : row)
            if (s >= t.q()) throw std::invalid_argument("seed file: symbol outside GF(" + std::to_string(t.q()) + ")");
        if (static_cast<int>(row.size()) != length)
            throw std::invalid_argument("seed file: row of length " + std::to_string(row.size()) + ", expected " +
                                        std::to_string(length));
        rows.push_back(std::move(row));
    }
    return rref(t.field(), length, rows);
}

ClassDatabase load_database(const Config& cfg, const TypeSpec& t, int length) {
    fs::path p = data_dir(cfg, t, length) / "classes.json";
    if (!fs::exists(p)) throw std::runtime_error(p.string() + " not found; run classify first");
    ClassDatabase db = database_from_json(read_file(p));
    if (!(db.type == t) || db.length != length) throw std::runtime_error(p.string() + " describes another data set");
    return db;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

int cmd_classify(const Config& cfg) {
    TypeSpec t = TypeSpec::parse(cfg.type);
    int status = 0;
    for (int length : cfg.lengths) {
        t.check_length(length);
        check_cap(cfg, t, length);
        std::optional<Code> seed;
        if (!cfg.seed_file.empty()) seed = read_seed(cfg.seed_file, t, length);
        ClassifyOptions opts;
        opts.threads = cfg.threads;
        opts.use_automorphisms = cfg.orbits;
        if (!cfg.quiet) {
            opts.progress = [](std::size_t done, std::size_t known) {
                std::cerr << "\r  processed " << done << " of " << known << " classes" << std::flush;
            };
        }
        auto start = std::chrono::steady_clock::now();
        ClassDatabase db = classify(t, length, seed, opts);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!cfg.quiet) std::cerr << "\n";
        fs::path p = data_dir(cfg, t, length) / "classes.json";
        write_file(p, to_json(db));

        std::cout << t.label() << " N=" << length << ": " << db.classes.size()
                  << (db.classes.size() == 1 ? " class (" : " classes (") << std::fixed << std::setprecision(1) << secs
                  << " s)\n";
        std::cout << "  aut orders:";
        for (const auto& cl : db.classes) std::cout << " " << cl.aut_order;
        std::cout << "\n  mass sum N!/|Aut(C)| = " << db.mass() << "\n";
        if (cfg.verify_mass) {
            if (length > 10) {
                std::cout << "  mass check skipped: exhaustive count is limited to N <= 10\n";
            } else {
                BigInt members = count_members(t, length);
                bool ok = members == db.mass();
                std::cout << "  exhaustive count " << members << (ok ? " matches" : " DIFFERS") << "\n";
                if (!ok) status = 1;
            }
        }
        std::cout << "  wrote " << p.string() << "\n";
    }
    return status;
}

int cmd_spectrum(const Config& cfg) {
    TypeSpec t = TypeSpec::parse(cfg.type);
    int status = 0;
    for (int length : cfg.lengths) {
        ClassDatabase db = load_database(cfg, t, length);
        HeckeMatrix tm = hecke_matrix(db);
        fs::path dir = data_dir(cfg, t, length);
        write_file(dir / "hecke.json", to_json(tm));

        const int n = db.dimension();
        Rational a0 = alpha(0, t, n);
        bool adjoint = check_self_adjoint(tm, db).empty();
        bool columns = boost::multiprecision::denominator(a0) == 1 &&
                       column_sum_violations(tm, boost::multiprecision::numerator(a0)).empty();
        Spectrum s = spectrum(tm, db);
        write_file(dir / "spectrum.json", to_json(s, db));
        bool ok = adjoint && columns && s.complete && s.mass_vector_ok && s.orthogonal;

        std::cout << t.label() << " N=" << length << ": " << db.classes.size()
                  << (db.classes.size() == 1 ? " class\n" : " classes\n");
        std::cout << "  Y_m dims: " << join(s.table_row()) << "\n";
        std::cout << "  eigenvalues:";
        for (const auto& es : s.spaces) std::cout << " " << to_string(es.eigenvalue);
        std::cout << "\n  self-adjoint " << (adjoint ? "ok" : "FAILED") << ", column sums "
                  << (columns ? "ok" : "FAILED") << ", complete " << (s.complete ? "ok" : "FAILED")
                  << ", mass vector " << (s.mass_vector_ok ? "ok" : "FAILED") << ", orthogonal "
                  << (s.orthogonal ? "ok" : "FAILED") << "\n";
        if (!s.collisions.empty()) std::cout << "  note: coinciding eigenvalues were merged\n";

        if (cfg.k > 1) {
            HeckeMatrix tk = hecke_matrix(db, cfg.k);
            write_file(dir / ("hecke_k" + std::to_string(cfg.k) + ".json"), to_json(tk));
            auto rel = polynomial_relation(tk, tm);
            std::cout << "  T_" << cfg.k << " as a polynomial in T: ";
            if (!rel) {
                std::cout << "none\n";
            } else {
                for (std::size_t i = 0; i < rel->size(); ++i) std::cout << (i ? ", " : "") << to_string((*rel)[i]);
                std::cout << " (coefficients of T^0, T^1, ...)\n";
            }
        }
        if (!ok) status = 1;
    }
    return status;
}

int cmd_molien(const Config& cfg) {
    TypeSpec t = TypeSpec::parse(cfg.type);
    int status = 0;
    std::cout << "N";
    for (int m = 1; m <= cfg.m_max; ++m) std::cout << "\tm=" << m;
    std::cout << "\n";
    for (int length : cfg.lengths) {
        fs::path p = data_dir(cfg, t, length) / "spectrum.json";
        if (!fs::exists(p)) throw std::runtime_error(p.string() + " not found; run spectrum first");
        auto j = nlohmann::json::parse(read_file(p));
        auto dims = j.at("dims").get<std::vector<std::size_t>>();
        std::vector<std::size_t> a;
        std::size_t acc = 0;
        for (int m = 0; m <= cfg.m_max; ++m) {
            if (m < static_cast<int>(dims.size())) acc += dims[m];
            a.push_back(acc);
        }
        std::cout << length;
        for (int m = 1; m <= cfg.m_max; ++m) std::cout << "\t" << a[m];
        std::cout << "\n";
        if (cfg.cross_check) {
            ClassDatabase db = load_database(cfg, t, length);
            int genus = std::min(cfg.genus, cfg.m_max);
            try {
                auto fd = filtration_dims(db, genus, cfg.budget);
                bool ok = true;
                for (int m = 0; m <= genus; ++m) ok = ok && fd[m] == a[m];
                std::cout << "  weight enumerator spans up to genus " << genus << ": " << join(fd)
                          << (ok ? " (agree)" : " (DISAGREE)") << "\n";
                if (!ok) status = 1;
            } catch (const std::length_error& e) {
                std::cout << "  cross-check skipped: " << e.what() << "\n";
            }
        }
    }
    return status;
}

int cmd_cwe(const Config& cfg) {
    TypeSpec t = TypeSpec::parse(cfg.type);
    for (int length : cfg.lengths) {
        Code c = [&] {
            if (!cfg.seed_file.empty()) return read_seed(cfg.seed_file, t, length);
            ClassDatabase db = load_database(cfg, t, length);
            if (cfg.class_index >= db.classes.size())
                throw std::invalid_argument("class index " + std::to_string(cfg.class_index) + " out of range");
            return db.classes[cfg.class_index].representative;
        }();
        SparseWE w = cwe(c, cfg.genus, cfg.budget);
        if (cfg.genus <= 2) std::cout << to_string(w) << "\n";
        else std::cout << w.terms.size() << " monomials, " << w.total() << " tuples\n";
        if (!cfg.out.empty() || std::getenv(output_env)) {
            fs::path p = data_dir(cfg, t, length) /
                         ("cwe_class" + std::to_string(cfg.class_index) + "_m" + std::to_string(cfg.genus) + ".json");
            if (!cfg.seed_file.empty()) p = data_dir(cfg, t, length) / ("cwe_seed_m" + std::to_string(cfg.genus) + ".json");
            write_file(p, to_json(w));
            std::cout << "wrote " << p.string() << "\n";
        }
    }
    return 0;
}

int cmd_verify(const Config& cfg) {
    std::vector<std::pair<std::string, int>> grid;
    if (cfg.type.empty()) {
        if (!cfg.lengths.empty()) throw std::invalid_argument("--length needs --type");
        grid = default_verify_grid();
    } else {
        if (cfg.lengths.empty()) throw std::invalid_argument("--type needs --length");
        for (int n : cfg.lengths) grid.emplace_back(cfg.type, n);
    }
    VerifyOptions vo;
    vo.budget = cfg.budget;
    vo.seed = cfg.rng_seed;
    if (!cfg.matrix_file.empty()) vo.matrix_override = hecke_matrix_from_json(read_file(cfg.matrix_file));

    bool all_ok = true;
    bool header = false;
    for (const auto& [name, length] : grid) {
        TypeSpec t = TypeSpec::parse(name);
        t.check_length(length);
        check_cap(cfg, t, length);
        ClassifyOptions co;
        co.threads = cfg.threads;
        co.use_automorphisms = cfg.orbits;
        ClassDatabase db = classify(t, length, std::nullopt, co);
        VerifyOptions local = vo;
        if (cfg.perturb) {
            HeckeMatrix tm = hecke_matrix(db);
            std::size_t col = tm.size() > 1 ? 1 : 0;
            tm.entries[0][col] += 1;
            local.matrix_override = tm;
        }
        DataSetReport r = verify_data_set(db, local);
        if (!header) {
            std::cout << std::left << std::setw(16) << "data set" << std::setw(9) << "classes";
            for (const auto& c : r.checks) std::cout << std::setw(c.name.size() + 2) << c.name;
            std::cout << "\n";
            header = true;
        }
        std::cout << std::left << std::setw(16) << (r.label + " N=" + std::to_string(r.length)) << std::setw(9)
                  << r.classes;
        for (const auto& c : r.checks) std::cout << std::setw(c.name.size() + 2) << to_string(c.status);
        std::cout << "\n";
        for (const auto& c : r.checks)
            if (c.status == CheckStatus::fail) std::cout << "  " << c.name << " failed: " << c.detail << "\n";
        all_ok = all_ok && r.ok();
    }
    std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classify self-dual codes by Kneser neighbors and verify the Hecke spectrum"};
    app.set_version_flag("--version", std::string(KNESER_VERSION));
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub, bool type_required) {
        auto* opt = sub->add_option("--type,-t", cfg.type, "2eI, 2eII, qE:q=3, qE1:q=3, qEI:q=4, qH:q=4, qH1:q=4, ...");
        if (type_required) opt->required();
        sub->add_option("--out,-o", cfg.out, std::string("Output directory (default $") + output_env + " or ./kneser-out)");
        sub->add_option("--max-length", cfg.max_length, "Override the length cap (24 binary, 12 otherwise)");
        sub->add_flag("--quiet,-q", cfg.quiet, "No progress output");
    };

    auto* classify_cmd = app.add_subcommand("classify", "Classify a type at the given lengths and write classes.json");
    add_common(classify_cmd, true);
    classify_cmd->add_option("--length,-n", cfg.lengths, "Code length(s)")->required();
    classify_cmd->add_option("--threads,-j", cfg.threads, "Worker threads")->check(CLI::Range(1, 256));
    classify_cmd->add_option("--seed-file", cfg.seed_file, "Starting code: one generator row per line");
    classify_cmd->add_flag("--verify-mass", cfg.verify_mass, "Compare the mass with an exhaustive count (N <= 10)");
    classify_cmd->add_flag("--orbits", cfg.orbits, "Process one neighbor per automorphism orbit");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Build T from classes.json, check it and write spectrum.json");
    add_common(spectrum_cmd, true);
    spectrum_cmd->add_option("--length,-n", cfg.lengths, "Code length(s)")->required();
    spectrum_cmd->add_option("--k", cfg.k, "Also build T_k and look for T_k as a polynomial in T")
        ->check(CLI::Range(1, 64));

    auto* molien_cmd = app.add_subcommand("molien", "Print a_N(m) from spectrum.json");
    add_common(molien_cmd, true);
    molien_cmd->add_option("--length,-n", cfg.lengths, "Code length(s)")->required();
    molien_cmd->add_option("--m-max", cfg.m_max, "Largest genus to print")->check(CLI::Range(1, 64));
    molien_cmd->add_flag("--cross-check", cfg.cross_check, "Recompute low genera from weight enumerators");
    molien_cmd->add_option("--genus", cfg.genus, "Largest genus for the cross-check")->check(CLI::Range(0, 16));
    molien_cmd->add_option("--budget", cfg.budget, "Tuple enumeration budget");

    auto* cwe_cmd = app.add_subcommand("cwe", "Complete weight enumerator of a class representative or a seed file");
    add_common(cwe_cmd, true);
    cwe_cmd->add_option("--length,-n", cfg.lengths, "Code length")->required()->expected(1);
    cwe_cmd->add_option("--genus,-m", cfg.genus, "Genus")->check(CLI::Range(0, 16));
    cwe_cmd->add_option("--class", cfg.class_index, "Class index in classes.json");
    cwe_cmd->add_option("--seed-file", cfg.seed_file, "Read the code from a generator file instead");
    cwe_cmd->add_option("--budget", cfg.budget, "Tuple enumeration budget");

    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite and print a pass/fail matrix");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--length,-n", cfg.lengths, "Code length(s); needs --type");
    verify_cmd->add_option("--threads,-j", cfg.threads, "Worker threads")->check(CLI::Range(1, 256));
    verify_cmd->add_option("--budget", cfg.budget, "Tuple enumeration budget");
    verify_cmd->add_option("--seed", cfg.rng_seed, "Random seed for sampled checks");
    verify_cmd->add_option("--matrix-file", cfg.matrix_file, "Use this hecke.json instead of the computed operator");
    verify_cmd->add_flag("--perturb", cfg.perturb, "Add 1 to one entry of T (negative control)");
    verify_cmd->add_flag("--orbits", cfg.orbits, "Classify with automorphism orbits");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*classify_cmd) return cmd_classify(cfg);
        if (*spectrum_cmd) return cmd_spectrum(cfg);
        if (*molien_cmd) return cmd_molien(cfg);
        if (*cwe_cmd) return cmd_cwe(cfg);
        if (*verify_cmd) return cmd_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
