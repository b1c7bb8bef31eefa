#include "qcohom/ideal_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qcohom/errors.hpp"

namespace qcohom::io {

namespace {

using json = nlohmann::ordered_json;

const json &member(const json &obj, const char *key) {
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(std::string("missing key '") + key + "'");
    return obj.at(key);
}

const std::string &as_string(const json &j, const char *what) {
    if (!j.is_string())
        throw ParseError(std::string(what) + " must be a string");
    return j.get_ref<const std::string &>();
}

CoeffField parse_field(const json &f) {
    const auto &mode = as_string(member(f, "mode"), "field mode");
    if (mode == "q-generic")
        return CoeffField::generic();
    if (mode != "q-rational")
        throw ParseError("unknown field mode '" + mode + "'");
    try {
        return CoeffField::specialized(Rational::parse(as_string(member(f, "q"), "q")));
    } catch (const DivisionByZero &e) {
        throw ParseError(e.what());
    }
}

template <Field F>
F parse_coeff(const std::string &s);

template <>
Rational parse_coeff<Rational>(const std::string &s) {
    return Rational::parse(s);
}

template <>
RatFunc parse_coeff<RatFunc>(const std::string &s) {
    return RatFunc::parse(s);
}

template <Field F>
std::vector<MultiPoly<F>> parse_polys(const json &polys, const RingPtr &ring) {
    if (!polys.is_array())
        throw ParseError("'polynomials' must be an array");
    std::vector<MultiPoly<F>> out;
    for (const auto &p : polys) {
        if (!p.is_array())
            throw ParseError("a polynomial must be an array of terms");
        std::vector<typename MultiPoly<F>::Term> terms;
        for (const auto &t : p) {
            if (!t.is_array() || t.size() != 2)
                throw ParseError("a term must be [coefficient, exponents]");
            F c;
            try {
                c = parse_coeff<F>(as_string(t[0], "coefficient"));
            } catch (const DivisionByZero &e) {
                throw ParseError(e.what());
            }
            const auto &ex = t[1];
            if (!ex.is_array() || ex.size() != ring->nvars())
                throw ParseError("exponent vector must have " + std::to_string(ring->nvars()) + " entries");
            std::vector<Exponent> e;
            for (const auto &x : ex) {
                if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > 1'000'000)
                    throw ParseError("exponents must be nonnegative integers");
                e.push_back(static_cast<Exponent>(x.get<long long>()));
            }
            terms.push_back({Monomial(e), c});
        }
        out.push_back(MultiPoly<F>::from_terms(ring, std::move(terms)));
    }
    return out;
}

std::string coeff_string(const Rational &c) {
    return c.numerator().get_str() + "/" + c.denominator().get_str();
}

std::string coeff_string(const RatFunc &c) { return c.to_string(); }

template <Field F>
json encode(const MultiPoly<F> &p) {
    json terms = json::array();
    for (const auto &t : p.terms()) {
        json ex = json::array();
        for (Exponent e : t.mono.exponents())
            ex.push_back(e);
        terms.push_back(json::array({coeff_string(t.coeff), ex}));
    }
    return terms;
}

json encode_field(const CoeffField &f) {
    if (f.is_generic())
        return json{{"mode", "q-generic"}};
    return json{{"mode", "q-rational"}, {"q", coeff_string(f.q_value())}};
}

} // namespace

ParsedIdeal parse_ideal_json(std::string_view text, const MonomialOrder &order) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    const auto &vars_j = member(doc, "variables");
    if (!vars_j.is_array())
        throw ParseError("'variables' must be an array");
    std::vector<std::string> vars;
    for (const auto &v : vars_j)
        vars.push_back(as_string(v, "variable name"));
    const CoeffField field = parse_field(member(doc, "field"));
    RingPtr ring;
    try {
        ring = PolyRing::make(vars, order, field);
    } catch (const InconsistentInput &e) {
        throw ParseError(e.what());
    }
    const auto &polys = member(doc, "polynomials");
    if (field.is_generic())
        return {ring, Ideal<RatFunc>(ring, parse_polys<RatFunc>(polys, ring))};
    return {ring, Ideal<Rational>(ring, parse_polys<Rational>(polys, ring))};
}

ParsedIdeal read_ideal_file(const std::string &path, const MonomialOrder &order) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ideal_json(buf.str(), order);
}

MonomialOrder parse_order(const std::string &name) {
    if (name == "lex")
        return MonomialOrder::lex();
    if (name == "grevlex")
        return MonomialOrder::grevlex();
    throw ConfigError("unknown monomial order '" + name + "'");
}

std::string groebner_json(const ParsedIdeal &input) {
    return std::visit(
        [&](const auto &ideal) {
            const auto gb = ideal.gb();
            json doc;
            doc["variables"] = input.ring->vars();
            doc["field"] = encode_field(input.ring->field());
            doc["order"] = input.ring->order().to_string();
            json basis = json::array();
            for (const auto &g : gb->basis())
                basis.push_back(encode(g));
            doc["basis"] = std::move(basis);
            const auto sm = standard_monomials(*gb);
            doc["quotient_dim"] = sm ? json(sm->size()) : json(nullptr);
            return doc.dump(2) + "\n";
        },
        input.ideal);
}

} // namespace qcohom::io
