#include "supercong/report.hpp"

#include <algorithm>
#include <tuple>
#include <type_traits>

#include "supercong/errors.hpp"

namespace supercong {

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::Verified: return "verified";
        case Status::Vacuous: return "vacuous";
        case Status::Failed: return "FAILED";
    }
    return "unknown";
}

Status status_from_string(std::string_view s) {
    if (s == "verified") return Status::Verified;
    if (s == "vacuous") return Status::Vacuous;
    if (s == "FAILED") return Status::Failed;
    throw Error(ErrorKind::ParseError, "unknown status '" + std::string(s) + "'");
}

bool report_less(const CheckReport& x, const CheckReport& y) {
    if (std::tie(x.p, x.theorem, x.variant, x.e) != std::tie(y.p, y.theorem, y.variant, y.e)) {
        return std::tie(x.p, x.theorem, x.variant, x.e) < std::tie(y.p, y.theorem, y.variant, y.e);
    }
    return std::lexicographical_compare(x.params.begin(), x.params.end(), y.params.begin(), y.params.end());
}

nlohmann::ordered_json to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["theorem"] = r.theorem;
    j["variant"] = r.variant;
    j["p"] = r.p;
    j["e"] = r.e;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.params) params[name] = value.to_string();
    j["params"] = std::move(params);
    j["hypothesis_holds"] = r.hypothesis_holds;
    j["conclusion_holds"] = r.conclusion_holds;
    nlohmann::ordered_json residues = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.residues) residues[name] = value;
    j["residues"] = std::move(residues);
    j["status"] = to_string(r.status);
    j["notes"] = r.notes;
    return j;
}

CheckReport report_from_json(const nlohmann::ordered_json& j) {
    try {
        CheckReport r;
        r.theorem = j.at("theorem").get<std::string>();
        r.variant = j.at("variant").get<std::string>();
        r.p = j.at("p").get<std::uint64_t>();
        r.e = j.at("e").get<unsigned>();
        for (const auto& [name, value] : j.at("params").items()) {
            r.params.emplace_back(name, Rational::parse(value.get<std::string>()));
        }
        r.hypothesis_holds = j.at("hypothesis_holds").get<bool>();
        r.conclusion_holds = j.at("conclusion_holds").get<bool>();
        for (const auto& [name, value] : j.at("residues").items()) {
            r.residues.emplace_back(name, value.get<std::uint64_t>());
        }
        r.status = status_from_string(j.at("status").get<std::string>());
        r.notes = j.at("notes").get<std::vector<std::string>>();
        const Status stated = r.status;
        if (r.finalize().status != stated) throw Error(ErrorKind::ParseError, "status contradicts hypothesis/conclusion flags");
        return r;
    } catch (const nlohmann::ordered_json::exception& ex) {
        throw Error(ErrorKind::ParseError, ex.what());
    }
}

std::string csv_header() {
    return "theorem,variant,p,e,params,hypothesis_holds,conclusion_holds,residues,status,notes";
}

std::string to_csv_row(const CheckReport& r) {
    auto join = [](const auto& pairs) {
        std::string out;
        for (const auto& [name, value] : pairs) {
            if (!out.empty()) out += ';';
            out += name + "=";
            if constexpr (std::is_same_v<std::decay_t<decltype(value)>, Rational>) out += value.to_string();
            else out += std::to_string(value);
        }
        return out;
    };
    std::string notes;
    for (const auto& n : r.notes) {
        if (!notes.empty()) notes += ';';
        notes += n;
    }
    // Notes are free text; quote them and double any embedded quotes.
    std::string quoted = "\"";
    for (char c : notes) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return r.theorem + "," + r.variant + "," + std::to_string(r.p) + "," + std::to_string(r.e) + "," + join(r.params) +
           "," + (r.hypothesis_holds ? "true" : "false") + "," + (r.conclusion_holds ? "true" : "false") + "," +
           join(r.residues) + "," + std::string(to_string(r.status)) + "," + quoted;
}

}  // namespace supercong
