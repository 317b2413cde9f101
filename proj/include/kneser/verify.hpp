#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kneser/hecke.hpp"
#include "kneser/neighbor.hpp"
#include "kneser/weight_enum.hpp"

namespace kneser {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;
};

struct VerifyOptions {
    std::size_t condition_star_samples = 50;
    int condition_star_max_length = 12;
    /// Genus for the Phi / invariance checks: up to 3 for N <= 12, 2 for N <= 16,
    /// always limited by the tuple budget.
    int phi_genus_short = 3;
    int phi_genus_long = 2;
    int phi_max_length = 16;
    int filtration_max_genus = 2;
    int filtration_max_length = 16;
    /// Exhaustive member count against the class masses up to this length.
    int mass_count_max_length = 10;
    std::uint64_t budget = default_tuple_budget;
    std::uint64_t seed = 1;
    /// Used in place of the operator built from the database (negative controls).
    std::optional<HeckeMatrix> matrix_override;
};

struct DataSetReport {
    std::string label;
    int length = 0;
    std::size_t classes = 0;
    std::vector<CheckResult> checks;
    std::vector<std::size_t> table_row;

    bool ok() const;
};

/// Runs every invariant that fits the options on a complete class database.
DataSetReport verify_data_set(const ClassDatabase& db, const VerifyOptions& options = {});

/// The (type, length) pairs checked by default: every type at small lengths.
std::vector<std::pair<std::string, int>> default_verify_grid();

std::string to_string(CheckStatus s);

}  // namespace kneser
