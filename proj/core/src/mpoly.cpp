#include "qeuler/mpoly.hpp"

#include <cctype>
#include <set>

namespace qeuler {

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char ch : s)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    return true;
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names,
                                           std::optional<std::vector<int>> weights) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!is_identifier(n)) throw ValidationError("invalid variable name: '" + n + "'");
        if (!seen.insert(n).second) throw ValidationError("duplicate variable name: '" + n + "'");
    }
    if (weights) {
        if (weights->size() != names.size())
            throw ValidationError("weight count does not match variable count");
        for (int w : *weights)
            if (w <= 0 || w % 2 != 0)
                throw ValidationError("variable weights must be positive even integers");
    }
    auto vs = std::make_shared<VarSet>();
    vs->names_ = std::move(names);
    vs->weights_ = std::move(weights);
    return vs;
}

const std::vector<int>& VarSet::weights() const {
    if (!weights_) throw ValidationError("variable set has no declared weights");
    return *weights_;
}

std::optional<std::size_t> VarSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

MPoly<RatFnQ> promote_q(const MPoly<Rational>& p, const std::string& q_name) {
    auto qi = p.vars()->index_of(q_name);
    if (!qi) throw ValidationError("variable '" + q_name + "' not present; cannot promote");
    std::vector<std::string> names;
    std::optional<std::vector<int>> weights;
    if (p.vars()->has_weights()) weights.emplace();
    for (std::size_t i = 0; i < p.vars()->size(); ++i) {
        if (i == *qi) continue;
        names.push_back(p.vars()->name(i));
        if (weights) weights->push_back(p.vars()->weights()[i]);
    }
    VarSetPtr target = VarSet::make(std::move(names), std::move(weights));
    MPoly<RatFnQ> out(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial reduced;
        reduced.reserve(m.size() - 1);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != *qi) reduced.push_back(m[i]);
        out += MPoly<RatFnQ>::monomial_term(target, std::move(reduced),
                                            RatFnQ(PolyQ::monomial(c, m[*qi])));
    }
    return out;
}

MPoly<Rational> demote_q(const MPoly<RatFnQ>& p, const std::string& q_name,
                         std::optional<std::vector<int>> weights_with_q) {
    if (p.vars()->index_of(q_name))
        throw ValidationError("variable '" + q_name + "' already present; cannot demote");
    std::vector<std::string> names = p.vars()->names();
    names.push_back(q_name);
    VarSetPtr target = VarSet::make(std::move(names), std::move(weights_with_q));
    MPoly<Rational> out(target);
    for (const auto& [m, c] : p.terms()) {
        if (!c.den().is_one()) {
            if (c.is_laurent())
                throw ValidationError("coefficient " + c.to_string() +
                                      " is Laurent but not polynomial in q; cannot demote");
            throw ValidationError("coefficient " + c.to_string() +
                                  " has a non-q denominator; cannot demote");
        }
        for (int e = 0; e <= c.num().degree(); ++e) {
            Rational coeff = c.num().coeff(e);
            if (coeff.is_zero()) continue;
            Monomial extended(m);
            extended.push_back(e);
            out += MPoly<Rational>::monomial_term(target, std::move(extended), std::move(coeff));
        }
    }
    return out;
}

}  // namespace qeuler
