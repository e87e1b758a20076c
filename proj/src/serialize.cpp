#include "kbal/serialize.hpp"

#include "kbal/errors.hpp"

namespace kbal {

Json exponents_to_json(const Exponents& e) {
    Json j = Json::object();
    for (int s = 0; s < kSlots; ++s)
        if (e[s] != 0) j[slot_name(s)] = e[s];
    return j;
}

Exponents exponents_from_json(const Json& j, const Alphabet& alphabet) {
    if (!j.is_object()) throw DomainError("exponents must be an object");
    Exponents e{};
    for (const auto& [name, value] : j.items()) {
        auto slot = slot_from_name(name);
        if (!slot || !alphabet.admits_slot(*slot)) throw DomainError("variable '" + name + "' outside the session alphabet");
        if (!value.is_number_integer()) throw DomainError("exponent of '" + name + "' must be a doubled integer");
        e[*slot] = value.get<int32_t>();
    }
    return e;
}

Json to_json(const Monomial& m) {
    return Json{{"coeff", m.coeff().get_str()}, {"exponents", exponents_to_json(m.exps())}};
}

Json to_json(const WeightCharacter& w) {
    Json terms = Json::array();
    for (const auto& [e, mult] : w.terms()) terms.push_back(Json{{"monomial", exponents_to_json(e)}, {"mult", mult}});
    return Json{{"terms", terms}};
}

Json to_json(const FactoredRational& f) {
    Json factors = Json::array();
    for (const auto& x : f.factors())
        factors.push_back(Json{{"binomial", Json{{"coeff", x.cm.coeff().get_str()}, {"monomial", exponents_to_json(x.cm.exps())}}},
                               {"exp", x.exp}});
    return Json{{"unit", to_json(f.unit())}, {"factors", factors}};
}

Json to_json(const ExpandedRational& e) {
    return Json{{"numerator", e.numerator.to_string()}, {"denominator", e.denominator.to_string()}};
}

Monomial monomial_from_json(const Json& j, const Alphabet& alphabet) {
    if (!j.is_object() || !j.contains("coeff") || !j.contains("exponents")) throw DomainError("monomial needs coeff and exponents");
    return Monomial(parse_rational(j.at("coeff").get<std::string>()), exponents_from_json(j.at("exponents"), alphabet));
}

WeightCharacter weight_character_from_json(const Json& j, const Alphabet& alphabet) {
    WeightCharacter w;
    for (const auto& t : j.at("terms"))
        w.add(Monomial(Rational(1), exponents_from_json(t.at("monomial"), alphabet)), t.at("mult").get<int>());
    return w;
}

FactoredRational factored_from_json(const Json& j, const Alphabet& alphabet) {
    FactoredRational f(monomial_from_json(j.at("unit"), alphabet));
    for (const auto& x : j.at("factors")) {
        const Json& b = x.at("binomial");
        Monomial cm(parse_rational(b.at("coeff").get<std::string>()), exponents_from_json(b.at("monomial"), alphabet));
        int e = x.at("exp").get<int>();
        if (e == 0) throw DomainError("factor exponent must be nonzero");
        f.multiply_binomial(cm, e);
    }
    return f;
}

}  // namespace kbal
