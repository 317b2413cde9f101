#include "kneser/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace kneser {

bool DataSetReport::ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skipped: return "-";
    }
    return "?";
}

std::vector<std::pair<std::string, int>> default_verify_grid() {
    std::vector<std::pair<std::string, int>> grid;
    for (int n = 2; n <= 16; n += 2) grid.emplace_back("2eI", n);
    grid.emplace_back("2eII", 8);
    grid.emplace_back("2eII", 16);
    for (int n : {4, 8, 12}) grid.emplace_back("qE:q=3", n);
    grid.emplace_back("qE1:q=3", 12);
    for (int n : {2, 4, 6}) grid.emplace_back("qH:q=4", n);
    for (int n : {2, 4, 6}) grid.emplace_back("qH1:q=4", n);
    for (int n : {2, 4, 6}) grid.emplace_back("qEI:q=4", n);
    for (int n : {2, 4, 6}) grid.emplace_back("qE:q=5", n);
    return grid;
}

namespace {

CheckResult result(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

CheckResult skipped(std::string name, std::string why) { return {std::move(name), CheckStatus::skipped, std::move(why)}; }

bool within_budget(int q, int k, int m, std::uint64_t budget) {
    long double total = 1;
    for (int i = 0; i < k * m; ++i) total *= q;
    return total <= static_cast<long double>(budget);
}

Permutation random_permutation(std::mt19937_64& rng, int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

DataSetReport verify_data_set(const ClassDatabase& db, const VerifyOptions& options) {
    DataSetReport r;
    r.label = db.type.label();
    r.length = db.length;
    r.classes = db.classes.size();
    const int n = db.dimension();
    const int q = db.type.q();
    std::mt19937_64 rng(options.seed);

    if (!db.complete) {
        r.checks.push_back(result("complete", false, "database is incomplete"));
        return r;
    }
    const HeckeMatrix t = options.matrix_override ? *options.matrix_override : hecke_matrix(db);
    if (t.size() != db.classes.size()) {
        r.checks.push_back(result("matrix_size", false, "operator size differs from the class count"));
        return r;
    }

    auto violations = check_self_adjoint(t, db);
    {
        std::ostringstream detail;
        for (const auto& v : violations) detail << "(" << v.row << "," << v.column << ") ";
        r.checks.push_back(result("self_adjoint", violations.empty(), detail.str()));
    }
    Rational a0 = alpha(0, db.type, n);
    auto bad_columns = column_sum_violations(t, boost::multiprecision::numerator(a0));
    r.checks.push_back(result("column_sums", bad_columns.empty() && boost::multiprecision::denominator(a0) == 1,
                              bad_columns.empty() ? "" : std::to_string(bad_columns.size()) + " columns"));

    Spectrum s = spectrum(t, db);
    r.table_row = s.table_row();
    r.checks.push_back(result("spectrum_complete", s.complete,
                              "sum of dims " + std::to_string(std::accumulate(s.dims.begin(), s.dims.end(), std::size_t{0}))));
    r.checks.push_back(result("mass_vector", s.mass_vector_ok));
    r.checks.push_back(result("orthogonal", s.orthogonal));

    if (db.length <= options.condition_star_max_length && options.condition_star_samples > 0) {
        bool ok = true;
        std::size_t drawn = 0;
        for (int m = 1; m <= std::min(2, n); ++m) {
            auto rep = sample_condition_star(db, m, options.condition_star_samples, rng);
            ok = ok && rep.failures.empty();
            drawn += rep.samples.size();
        }
        r.checks.push_back(result("condition_star", ok, std::to_string(drawn) + " tuples"));
    } else {
        r.checks.push_back(skipped("condition_star", "length above the sampling limit"));
    }

    if (db.length <= options.phi_max_length) {
        int genus = db.length <= 12 ? options.phi_genus_short : options.phi_genus_long;
        while (genus > 0 && !within_budget(q, n, genus, options.budget)) --genus;
        if (genus == 0) {
            r.checks.push_back(skipped("phi", "tuple budget"));
            r.checks.push_back(skipped("invariance", "tuple budget"));
        } else {
            bool phi_ok = true;
            bool inv_ok = true;
            for (const auto& cl : db.classes) {
                const Code& c = cl.representative;
                Code moved = c.permuted(random_permutation(rng, db.length));
                SparseWE lower = cwe(c, 0, options.budget);
                for (int m = 1; m <= genus; ++m) {
                    SparseWE w = cwe(c, m, options.budget);
                    phi_ok = phi_ok && phi(w, q) == lower;
                    inv_ok = inv_ok && cwe(moved, m, options.budget) == w;
                    lower = std::move(w);
                }
            }
            r.checks.push_back(result("phi", phi_ok, "genus <= " + std::to_string(genus)));
            r.checks.push_back(result("invariance", inv_ok, "genus <= " + std::to_string(genus)));
        }
    } else {
        r.checks.push_back(skipped("phi", "length above the limit"));
        r.checks.push_back(skipped("invariance", "length above the limit"));
    }

    if (db.length <= options.filtration_max_length) {
        int genus = std::min(options.filtration_max_genus, n);
        while (genus > 0 && !within_budget(q, n, genus, options.budget)) --genus;
        auto dims = filtration_dims(db, genus, options.budget);
        bool ok = true;
        for (int m = 0; m <= genus; ++m) ok = ok && dims[m] - (m ? dims[m - 1] : 0) == s.dims[m];
        r.checks.push_back(result("filtration", ok, "genus <= " + std::to_string(genus)));
    } else {
        r.checks.push_back(skipped("filtration", "length above the limit"));
    }

    if (db.length <= options.mass_count_max_length) {
        BigInt members = count_members(db.type, db.length);
        r.checks.push_back(result("mass_count", members == db.mass(), members.str() + " codes"));
    } else {
        r.checks.push_back(skipped("mass_count", "length above the limit"));
    }
    return r;
}

}  // namespace kneser
