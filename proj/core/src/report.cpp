#include "qeuler/report.hpp"

#include <sstream>

#include "json.hpp"
#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string Report::to_text() const {
    std::ostringstream out;
    out << "subject: " << subject << "\n";
    out << "description: " << description << "\n";
    out << "dimension: " << dimension << "\n";
    out << "basis:";
    for (const auto& b : basis) out << " " << b;
    out << "\n";
    out << "omega: " << omega << "\n";
    if (omega_unit) {
        out << "omega is a unit: " << yes_no(*omega_unit);
        if (omega_certificate) out << " (" << *omega_certificate << ")";
        out << "\n";
    }
    if (specialized_at) out << "specialized at: q = " << *specialized_at << "\n";
    if (semisimple_omega) out << "semisimple (characteristic element test): " << yes_no(*semisimple_omega) << "\n";
    if (semisimple_trace) out << "semisimple (trace form test): " << yes_no(*semisimple_trace) << "\n";
    if (witness) out << "witness: " << *witness << "\n";
    if (hessian) out << "hessian class: " << *hessian << "\n";
    if (epsilon) out << "epsilon: " << *epsilon << "\n";
    if (paper_sign) out << "reference sign (-1)^C(n,2): " << *paper_sign << "\n";
    for (const auto& [key, value] : extras) out << key << ": " << value << "\n";
    if (!timings_ms.empty()) {
        out << "timings:";
        bool first = true;
        for (const auto& [phase, ms] : timings_ms) {
            out << (first ? " " : ", ") << phase << " " << ms << " ms";
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

std::string Report::to_json_text() const {
    nlohmann::ordered_json j;
    j["subject"] = subject;
    j["description"] = description;
    j["dimension"] = dimension;
    j["basis"] = basis;
    j["omega"] = omega;
    if (omega_unit) j["omega_unit"] = *omega_unit;
    if (omega_certificate) j["omega_certificate"] = *omega_certificate;
    if (specialized_at) j["specialized_at"] = *specialized_at;
    if (semisimple_omega) j["semisimple_omega"] = *semisimple_omega;
    if (semisimple_trace) j["semisimple_trace"] = *semisimple_trace;
    if (witness) j["witness"] = *witness;
    if (hessian) j["hessian"] = *hessian;
    if (epsilon) j["epsilon"] = *epsilon;
    if (paper_sign) j["paper_sign"] = *paper_sign;
    if (!extras.empty()) {
        nlohmann::ordered_json e = nlohmann::ordered_json::object();
        for (const auto& [key, value] : extras) e[key] = value;
        j["extras"] = std::move(e);
    }
    if (!timings_ms.empty()) {
        nlohmann::ordered_json t = nlohmann::ordered_json::object();
        for (const auto& [phase, ms] : timings_ms) t[phase] = ms;
        j["timings_ms"] = std::move(t);
    }
    return j.dump(2) + "\n";
}

Report Report::from_json_text(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("invalid report JSON: ") + e.what());
    }
    Report r;
    try {
        r.subject = j.at("subject").get<std::string>();
        r.description = j.at("description").get<std::string>();
        r.dimension = j.at("dimension").get<long>();
        r.basis = j.at("basis").get<std::vector<std::string>>();
        r.omega = j.at("omega").get<std::string>();
        if (j.contains("omega_unit")) r.omega_unit = j["omega_unit"].get<bool>();
        if (j.contains("omega_certificate")) r.omega_certificate = j["omega_certificate"].get<std::string>();
        if (j.contains("specialized_at")) r.specialized_at = j["specialized_at"].get<std::string>();
        if (j.contains("semisimple_omega")) r.semisimple_omega = j["semisimple_omega"].get<bool>();
        if (j.contains("semisimple_trace")) r.semisimple_trace = j["semisimple_trace"].get<bool>();
        if (j.contains("witness")) r.witness = j["witness"].get<std::string>();
        if (j.contains("hessian")) r.hessian = j["hessian"].get<std::string>();
        if (j.contains("epsilon")) r.epsilon = j["epsilon"].get<std::string>();
        if (j.contains("paper_sign")) r.paper_sign = j["paper_sign"].get<int>();
        if (j.contains("extras")) {
            for (auto it = j["extras"].begin(); it != j["extras"].end(); ++it)
                r.extras.emplace_back(it.key(), it.value().get<std::string>());
        }
        if (j.contains("timings_ms")) {
            for (auto it = j["timings_ms"].begin(); it != j["timings_ms"].end(); ++it)
                r.timings_ms.emplace_back(it.key(), it.value().get<long>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("report JSON has a malformed field: ") + e.what());
    }
    return r;
}

}  // namespace qeuler
