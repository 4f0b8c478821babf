#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qeuler {

// Machine- and human-readable result of one CLI computation. All polynomial
// fields hold canonical printed form (re-parseable by the input grammar);
// optional fields are absent when the phase that fills them did not run.
struct Report {
    std::string subject;  // grassmannian | hypersurface | custom
    std::string description;
    long dimension = 0;
    std::vector<std::string> basis;
    std::string omega;
    std::optional<bool> omega_unit;
    std::optional<std::string> omega_certificate;
    std::optional<bool> semisimple_omega;
    std::optional<bool> semisimple_trace;
    std::optional<std::string> witness;
    std::optional<std::string> hessian;
    std::optional<std::string> epsilon;
    std::optional<int> paper_sign;
    std::optional<std::string> specialized_at;
    std::vector<std::pair<std::string, std::string>> extras;
    std::vector<std::pair<std::string, long>> timings_ms;

    std::string to_text() const;
    std::string to_json_text() const;
    static Report from_json_text(const std::string& text);

    bool operator==(const Report&) const = default;
};

}  // namespace qeuler
