#include "jetforge/problem.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace jetforge {

AmbientIdeal ProblemFile::to_ideal() const {
    AmbientIdeal ideal;
    ideal.field = field;
    ideal.ambient_dim = static_cast<int>(vars.size());
    ParseContext ctx = parse_context();
    for (const auto& text : generator_texts) {
        Poly g = parse_poly(text, ctx);
        if (translate) {
            std::map<JetVar, Poly> shift;
            for (int j = 1; j <= ideal.ambient_dim; ++j) {
                Rational a = field.normalize((*translate)[j - 1]);
                if (a == 0) continue;
                shift.emplace(JetVar{0, j},
                              Poly::variable(field, JetVar{0, j}) + Poly::constant(field, a));
            }
            g = g.substitute(shift);
        }
        if (!g.is_zero()) ideal.generators.push_back(g);
    }
    ideal.validate();
    return ideal;
}

ProblemFile read_problem_file(std::istream& in) {
    ProblemFile pf;
    bool field_seen = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword) || keyword[0] == '#') continue;
        if (keyword == "field") {
            std::string kind;
            if (!(ls >> kind)) throw ProblemFileError("missing field kind", lineno);
            if (kind == "Q") {
                pf.field = FieldSpec::rationals();
            } else if (kind == "Fp") {
                long long p;
                if (!(ls >> p)) throw ProblemFileError("missing prime modulus", lineno);
                try {
                    pf.field = FieldSpec::prime_field(p);
                } catch (const std::invalid_argument& e) {
                    throw ProblemFileError(e.what(), lineno);
                }
            } else {
                throw ProblemFileError("unknown field '" + kind + "'", lineno);
            }
            field_seen = true;
        } else if (keyword == "vars") {
            if (!field_seen)
                throw ProblemFileError("'field' must come before 'vars'", lineno);
            std::string name;
            while (ls >> name) {
                if (std::find(pf.vars.begin(), pf.vars.end(), name) != pf.vars.end())
                    throw ProblemFileError("duplicate variable '" + name + "'", lineno);
                pf.vars.push_back(name);
            }
            if (pf.vars.empty()) throw ProblemFileError("empty vars line", lineno);
        } else if (keyword == "gen") {
            if (pf.vars.empty())
                throw ProblemFileError("'vars' must come before 'gen'", lineno);
            std::string rest;
            std::getline(ls, rest);
            if (rest.find_first_not_of(" \t") == std::string::npos)
                throw ProblemFileError("empty generator", lineno);
            try {
                parse_poly(rest, pf.parse_context());
            } catch (const ParseError& e) {
                throw ProblemFileError(e.what(), lineno);
            }
            pf.generator_texts.push_back(rest);
        } else if (keyword == "reduced") {
            pf.reduced = true;
        } else if (keyword == "translate") {
            std::vector<Rational> v;
            std::string tok;
            while (ls >> tok) {
                try {
                    v.push_back(Rational(tok));
                } catch (const std::exception&) {
                    throw ProblemFileError("bad translation entry '" + tok + "'", lineno);
                }
            }
            if (v.size() != pf.vars.size())
                throw ProblemFileError("translation vector length differs from vars", lineno);
            pf.translate = std::move(v);
        } else {
            throw ProblemFileError("unknown keyword '" + keyword + "'", lineno);
        }
    }
    if (!field_seen) throw ProblemFileError("missing 'field' declaration", 0);
    return pf;
}

ProblemFile read_problem_file_path(const std::string& path) {
    if (path == "-") return read_problem_file(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_problem_file(in);
}

nlohmann::ordered_json poly_to_json(const Poly& p) {
    // Grevlex-descending term order, matching to_string.
    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    for (const auto& t : p.terms()) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto* a, const auto* b) { return grevlex_less(b->first, a->first); });
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto* t : sorted) {
        nlohmann::ordered_json mono = nlohmann::ordered_json::array();
        for (const auto& [v, e] : t->first.exponents())
            mono.push_back({{"level", v.level}, {"index", v.index}, {"exp", e}});
        terms.push_back({{"coeff", coeff_to_string(t->second)}, {"monomial", mono}});
    }
    return terms;
}

Poly poly_from_json(const nlohmann::ordered_json& j, const FieldSpec& field) {
    Poly p = Poly::zero(field);
    for (const auto& term : j) {
        Rational c = coeff_from_string(term.at("coeff").get<std::string>(), field);
        Monomial::Map exps;
        for (const auto& entry : term.at("monomial"))
            exps[JetVar{entry.at("level").get<int>(), entry.at("index").get<int>()}] =
                entry.at("exp").get<int>();
        p += Poly::term(field, c, Monomial(std::move(exps)));
    }
    return p;
}

nlohmann::ordered_json jet_ideal_to_json(const JetIdeal& jets) {
    nlohmann::ordered_json out;
    out["field"] = jets.base.field.to_string();
    out["ambient_dim"] = jets.base.ambient_dim;
    out["m"] = jets.m;
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const auto& g : jets.generators)
        gens.push_back({{"source_generator", g.source_generator},
                        {"level", g.level},
                        {"poly", poly_to_json(g.poly)}});
    out["generators"] = gens;
    return out;
}

} // namespace jetforge
