#include "qeuler/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qeuler/errors.hpp"
#include "qeuler/linalg.hpp"
#include "qeuler/mpoly.hpp"
#include "qeuler/parser.hpp"

namespace qeuler {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Presentation parse_presentation_text(const std::string& text) {
    Presentation p;
    bool saw_ground = false;
    bool in_generators = false;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        auto at = [&] { return "line " + std::to_string(line_no) + ": "; };
        auto starts = [&](const char* kw) { return line.rfind(kw, 0) == 0; };
        auto rest = [&](const char* kw) { return trim(line.substr(std::string(kw).size())); };
        if (starts("vars:")) {
            p.var_names = split_ws(rest("vars:"));
            if (p.var_names.empty())
                throw ValidationError(at() + "vars: needs at least one variable name");
            in_generators = false;
        } else if (starts("weights:")) {
            std::vector<int> w;
            for (const auto& t : split_ws(rest("weights:"))) {
                try {
                    std::size_t used = 0;
                    int value = std::stoi(t, &used);
                    if (used != t.size()) throw std::invalid_argument(t);
                    w.push_back(value);
                } catch (const std::exception&) {
                    throw ValidationError(at() + "weight '" + t + "' is not an integer");
                }
            }
            if (w.empty()) throw ValidationError(at() + "weights: needs at least one integer");
            p.weights = std::move(w);
            in_generators = false;
        } else if (starts("ground:")) {
            std::string g = rest("ground:");
            if (g == "Q")
                p.ground_lambda = false;
            else if (g == "Lambda")
                p.ground_lambda = true;
            else
                throw ValidationError(at() + "ground must be Q or Lambda, got '" + g + "'");
            saw_ground = true;
            in_generators = false;
        } else if (starts("generators:")) {
            if (!rest("generators:").empty())
                throw ValidationError(at() + "generators are listed one per line after 'generators:'");
            in_generators = true;
        } else if (starts("functional:")) {
            std::string f = rest("functional:");
            if (f == "auto") {
                p.functional_kind = Presentation::FunctionalKind::automatic;
            } else {
                auto toks = split_ws(f);
                if (toks.empty())
                    throw ValidationError(at() + "functional: expects 'auto' or rational values");
                for (const auto& t : toks) p.functional_values.push_back(Rational::from_string(t));
                p.functional_kind = Presentation::FunctionalKind::values;
            }
            in_generators = false;
        } else if (in_generators) {
            p.generator_text.push_back(line);
        } else {
            throw ValidationError(at() + "unexpected content '" + line + "'");
        }
    }
    if (p.var_names.empty()) throw ValidationError("presentation must declare 'vars:'");
    if (!saw_ground) throw ValidationError("presentation must declare 'ground: Q' or 'ground: Lambda'");
    if (p.weights && p.weights->size() != p.var_names.size())
        throw ValidationError("weights count (" + std::to_string(p.weights->size()) +
                              ") does not match vars count (" + std::to_string(p.var_names.size()) +
                              ")");
    if (p.generator_text.empty())
        throw ValidationError("presentation must list at least one generator");
    return p;
}

Presentation read_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open presentation file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation_text(buf.str());
}

AlgebraPtr<Rational> build_presented_algebra_rational(const Presentation& p) {
    if (p.ground_lambda)
        throw ValidationError("presentation ground is Lambda; build it over Q(q) instead");
    VarSetPtr vars = VarSet::make(p.var_names, p.weights);
    std::vector<MPoly<Rational>> gens;
    gens.reserve(p.generator_text.size());
    for (const auto& g : p.generator_text) gens.push_back(parse_poly(g, vars));
    return Algebra<Rational>::quotient(vars, gens);
}

AlgebraPtr<RatFnQ> build_presented_algebra_laurent(const Presentation& p) {
    if (!p.ground_lambda)
        throw ValidationError("presentation ground is Q; build it over Q instead");
    if (std::find(p.var_names.begin(), p.var_names.end(), "q") == p.var_names.end())
        throw ValidationError("ground Lambda requires a variable named q among vars:");
    if (p.var_names.size() < 2)
        throw ValidationError("ground Lambda needs at least one variable besides q");
    VarSetPtr vars = VarSet::make(p.var_names, p.weights);
    std::vector<MPoly<RatFnQ>> gens;
    gens.reserve(p.generator_text.size());
    for (const auto& g : p.generator_text) gens.push_back(promote_q(parse_poly(g, vars)));
    return Algebra<RatFnQ>::quotient(gens.front().vars(), gens);
}

std::vector<Rational> read_functional_file(const std::string& path, std::size_t expected) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open functional file: " + path);
    std::vector<Rational> vals;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            std::string discard;
            std::getline(in, discard);
            continue;
        }
        vals.push_back(Rational::from_string(tok));
    }
    if (vals.size() != expected)
        throw ValidationError("functional file has " + std::to_string(vals.size()) +
                              " values but the algebra dimension is " + std::to_string(expected));
    return vals;
}

}  // namespace qeuler
