#include "acolen/literal.hpp"

#include "json.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace acolen {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

parse_error::parse_error(const std::string& msg, size_t pos)
    : input_error(msg + " at position " + std::to_string(pos)), position(pos) {}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
};

Int parse_number(Cursor& c, const char* what) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw parse_error(std::string("expected ") + what, start);
    return std::stoll(c.s.substr(start, c.i - start));
}

// term := 'x' index ('^' exponent)?
void parse_term(Cursor& c, std::map<Int, Int>& exps) {
    c.skip_ws();
    if (c.done() || c.peek() != 'x') throw parse_error("expected variable 'x<k>'", c.i);
    ++c.i;
    Int var = parse_number(c, "variable index");
    if (var < 1) throw parse_error("variable index must be >= 1", c.i);
    Int e = 1;
    c.skip_ws();
    if (!c.done() && c.peek() == '^') {
        ++c.i;
        e = parse_number(c, "exponent");
    }
    exps[var] += e;
}

std::map<Int, Int> parse_monomial(Cursor& c) {
    std::map<Int, Int> exps;
    c.skip_ws();
    if (!c.done() && c.peek() == '1') {
        ++c.i;
        c.skip_ws();
        if (!c.done() && c.peek() != ',') throw parse_error("unexpected character after '1'", c.i);
        return exps;
    }
    parse_term(c, exps);
    for (;;) {
        c.skip_ws();
        if (c.done() || c.peek() == ',') return exps;
        if (c.peek() == '*') {
            ++c.i;
            parse_term(c, exps);
        } else if (c.peek() == 'x') {
            parse_term(c, exps);
        } else {
            throw parse_error("unexpected character in monomial", c.i);
        }
    }
}

}  // namespace

MonomialIdeal parse_ideal_literal(const std::string& text, int d) {
    Cursor c{text};
    c.skip_ws();
    if (c.done()) throw parse_error("empty ideal literal", 0);
    if (c.peek() == '0') {
        ++c.i;
        c.skip_ws();
        if (!c.done()) throw parse_error("unexpected character after '0'", c.i);
        if (d < 1) throw parse_error("the zero ideal needs an explicit dimension", 0);
        return MonomialIdeal::zero(d);
    }
    std::vector<std::map<Int, Int>> monomials;
    monomials.push_back(parse_monomial(c));
    for (;;) {
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != ',') throw parse_error("expected ','", c.i);
        ++c.i;
        monomials.push_back(parse_monomial(c));
    }
    Int max_var = d;
    for (const auto& m : monomials)
        for (const auto& [var, e] : m) max_var = std::max(max_var, var);
    if (max_var < 1) throw parse_error("cannot infer dimension from the literal", 0);
    if (d > 0 && max_var > d) throw parse_error("variable index exceeds --d", 0);
    std::vector<Exponents> gens;
    for (const auto& m : monomials) {
        Exponents u(static_cast<size_t>(max_var), 0);
        for (const auto& [var, e] : m) u[static_cast<size_t>(var - 1)] = e;
        gens.push_back(std::move(u));
    }
    return MonomialIdeal::normalize(std::move(gens), static_cast<int>(max_var));
}

std::string monomial_to_string(const Exponents& u) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (any) os << "*";
        os << "x" << (i + 1);
        if (u[i] > 1) os << "^" << u[i];
        any = true;
    }
    return any ? os.str() : "1";
}

std::string ideal_to_literal(const MonomialIdeal& I) {
    if (I.is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < I.gens().size(); ++i) {
        if (i) os << ", ";
        os << monomial_to_string(I.gens()[i]);
    }
    return os.str();
}

std::string ideal_to_json(const MonomialIdeal& I) {
    ordered j;
    j["d"] = I.dim();
    j["gens"] = json::array();
    for (const auto& g : I.gens()) j["gens"].push_back(g);
    if (I.char_p()) j["p"] = *I.char_p();
    return j.dump();
}

namespace {

MonomialIdeal ideal_from_json_obj(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("gens"))
        throw input_error("ideal JSON needs {\"d\": ..., \"gens\": [...]}");
    int d = j.at("d").get<int>();
    std::vector<Exponents> gens;
    for (const auto& g : j.at("gens")) gens.push_back(g.get<Exponents>());
    std::optional<Int> p;
    if (j.contains("p")) p = j.at("p").get<Int>();
    return MonomialIdeal::normalize(std::move(gens), d, p);
}

FamilySpec family_from_json_obj(const json& j);

FamilySpec family_child(const json& j, const char* key) {
    if (!j.contains(key)) throw input_error(std::string("family JSON needs \"") + key + "\"");
    return family_from_json_obj(j.at(key));
}

FamilySpec family_from_json_obj(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw input_error("family JSON needs \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    IndexKind idx = IndexKind::natural;
    if (j.contains("index")) {
        std::string s = j.at("index").get<std::string>();
        if (s == "natural")
            idx = IndexKind::natural;
        else if (s == "p-power")
            idx = IndexKind::p_power;
        else
            throw input_error("family index must be \"natural\" or \"p-power\"");
    }
    Int p = j.contains("p") ? j.at("p").get<Int>() : 0;
    auto finish = [&](FamilySpec s) {
        if (idx == IndexKind::p_power) {
            if (p == 0) p = s.p;
            if (!is_prime(p)) throw input_error("p-power family needs a prime \"p\"");
            s.index = IndexKind::p_power;
            s.p = p;
        }
        return s;
    };
    if (kind == "powers") return finish(FamilySpec::powers_of(ideal_from_json_obj(j.at("ideal"))));
    if (kind == "bracket") {
        if (!is_prime(p)) throw input_error("bracket family needs a prime \"p\"");
        return FamilySpec::bracket_of(ideal_from_json_obj(j.at("ideal")), p);
    }
    if (kind == "generalized_bracket") {
        if (!is_prime(p)) throw input_error("generalized_bracket needs a prime \"p\"");
        return finish(FamilySpec::generalized_bracket_of(ideal_from_json_obj(j.at("ideal")), p));
    }
    if (kind == "floor_power") {
        if (!j.contains("alpha")) throw input_error("floor_power needs \"alpha\"");
        BigRat alpha = j.at("alpha").is_string() ? parse_rational(j.at("alpha").get<std::string>())
                                                 : BigRat(j.at("alpha").get<Int>());
        return finish(FamilySpec::floor_power_of(ideal_from_json_obj(j.at("ideal")), alpha));
    }
    if (kind == "colon_of") {
        if (!j.contains("j")) throw input_error("colon_of needs \"j\"");
        return FamilySpec::colon_family(family_child(j, "base"), ideal_from_json_obj(j.at("j")));
    }
    if (kind == "closure_of") return FamilySpec::closure_family(family_child(j, "base"));
    if (kind == "product_of")
        return FamilySpec::product_family(family_child(j, "base"), family_child(j, "other"));
    if (kind == "sum_of")
        return FamilySpec::sum_family(family_child(j, "base"), family_child(j, "other"));
    if (kind == "intersect_of")
        return FamilySpec::intersect_family(family_child(j, "base"), family_child(j, "other"));
    if (kind == "explicit") {
        if (!j.contains("list")) throw input_error("explicit family needs \"list\"");
        std::vector<MonomialIdeal> list;
        for (const auto& item : j.at("list")) list.push_back(ideal_from_json_obj(item));
        return FamilySpec::explicit_family(std::move(list), idx, p);
    }
    throw input_error("unknown family kind \"" + kind + "\"");
}

ordered family_to_json_obj(const FamilySpec& s) {
    ordered j;
    j["index"] = s.index == IndexKind::natural ? "natural" : "p-power";
    if (s.p) j["p"] = s.p;
    auto ideal_obj = [](const MonomialIdeal& I) { return ordered::parse(ideal_to_json(I)); };
    switch (s.kind) {
        case FamilyKind::powers:
            j["kind"] = "powers";
            j["ideal"] = ideal_obj(s.ideal);
            break;
        case FamilyKind::bracket:
            j["kind"] = "bracket";
            j["ideal"] = ideal_obj(s.ideal);
            break;
        case FamilyKind::generalized_bracket:
            j["kind"] = "generalized_bracket";
            j["ideal"] = ideal_obj(s.ideal);
            break;
        case FamilyKind::floor_power:
            j["kind"] = "floor_power";
            j["ideal"] = ideal_obj(s.ideal);
            j["alpha"] = numerator(s.alpha).str() + "/" + denominator(s.alpha).str();
            break;
        case FamilyKind::colon_of:
            j["kind"] = "colon_of";
            j["base"] = family_to_json_obj(*s.base);
            j["j"] = ideal_obj(s.colon_j);
            break;
        case FamilyKind::closure_of:
            j["kind"] = "closure_of";
            j["base"] = family_to_json_obj(*s.base);
            break;
        case FamilyKind::product_of:
        case FamilyKind::sum_of:
        case FamilyKind::intersect_of:
            j["kind"] = s.kind == FamilyKind::product_of
                            ? "product_of"
                            : (s.kind == FamilyKind::sum_of ? "sum_of" : "intersect_of");
            j["base"] = family_to_json_obj(*s.base);
            j["other"] = family_to_json_obj(*s.other);
            break;
        case FamilyKind::explicit_list: {
            j["kind"] = "explicit";
            j["list"] = ordered::array();
            for (const auto& I : s.list) j["list"].push_back(ordered::parse(ideal_to_json(I)));
            break;
        }
        case FamilyKind::custom:
            throw input_error("custom families have no JSON form");
    }
    return j;
}

}  // namespace

MonomialIdeal ideal_from_json(const std::string& json_text) {
    try {
        return ideal_from_json_obj(json::parse(json_text));
    } catch (const json::exception& e) {
        throw input_error(std::string("bad ideal JSON: ") + e.what());
    }
}

FamilySpec family_from_json(const std::string& json_text) {
    try {
        return family_from_json_obj(json::parse(json_text));
    } catch (const json::exception& e) {
        throw input_error(std::string("bad family JSON: ") + e.what());
    }
}

std::string family_to_json(const FamilySpec& spec) { return family_to_json_obj(spec).dump(); }

std::string slurp_arg(const std::string& arg) {
    std::string trimmed = arg;
    size_t start = trimmed.find_first_not_of(" \t\n");
    if (start != std::string::npos && trimmed[start] == '{') return trimmed;
    std::ifstream in(arg);
    if (!in) throw input_error("cannot open file: " + arg);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

BigRat parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw input_error("rational with zero denominator: " + text);
        return BigRat(num, den);
    } catch (const std::exception&) {
        throw input_error("bad rational literal: " + text);
    }
}

}  // namespace acolen
