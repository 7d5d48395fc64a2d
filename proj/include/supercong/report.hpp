#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supercong/rational.hpp"
#include "json.hpp"

namespace supercong {

enum class Status { Verified, Vacuous, Failed };

std::string_view to_string(Status s) noexcept;
Status status_from_string(std::string_view s);

/// Outcome of one theorem instance at one prime.
///
/// Invariant: status == Failed iff hypothesis_holds && !conclusion_holds;
/// Vacuous iff the hypothesis fails. finalize() establishes it.
struct CheckReport {
    std::string theorem;
    std::string variant;  // family tag or sub-case, empty when the theorem has none
    std::uint64_t p = 0;
    unsigned e = 0;
    std::vector<std::pair<std::string, Rational>> params;
    bool hypothesis_holds = false;
    bool conclusion_holds = false;
    std::vector<std::pair<std::string, std::uint64_t>> residues;
    Status status = Status::Vacuous;
    std::vector<std::string> notes;

    CheckReport& finalize() {
        status = !hypothesis_holds ? Status::Vacuous : (conclusion_holds ? Status::Verified : Status::Failed);
        return *this;
    }

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Deterministic order: (p, theorem, variant, params by value).
bool report_less(const CheckReport& x, const CheckReport& y);

nlohmann::ordered_json to_json(const CheckReport& r);
/// Inverse of to_json; throws Error{ParseError} on schema violations,
/// including a status that contradicts the two booleans.
CheckReport report_from_json(const nlohmann::ordered_json& j);

std::string csv_header();
/// Flat projection: params and residues become "k=v;k=v" cells.
std::string to_csv_row(const CheckReport& r);

}  // namespace supercong
