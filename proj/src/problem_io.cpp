#include "idealgb/problem_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "idealgb/errors.hpp"
#include "idealgb/parse.hpp"

namespace idealgb {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& message, std::size_t position = 1) {
    throw ParseError(message, position);
}

bool valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
        return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    fail(where + ": expected an integer or a \"p/q\" string");
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string()) fail(where + ": expected an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

MonomialOrdering ordering_from_json(const json& j,
                                    const std::vector<std::string>& variables) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        fail("ordering: expected {\"kind\": ..., \"variable_priority\": ...}");
    OrderKind kind;
    try {
        kind = order_kind_from_string(j["kind"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(std::string("ordering: ") + e.what());
    }

    std::vector<int> priority;
    if (j.contains("variable_priority")) {
        std::vector<std::string> names =
            string_list(j["variable_priority"], "ordering.variable_priority");
        if (names.size() != variables.size())
            fail("ordering.variable_priority must list every variable");
        for (const std::string& name : names) {
            auto it = std::find(variables.begin(), variables.end(), name);
            if (it == variables.end())
                fail("ordering.variable_priority: unknown variable \"" + name +
                     "\"");
            priority.push_back(
                static_cast<int>(std::distance(variables.begin(), it)));
        }
    } else {
        for (std::size_t i = 0; i < variables.size(); ++i)
            priority.push_back(static_cast<int>(i));
    }
    try {
        return MonomialOrdering(kind, std::move(priority));
    } catch (const std::invalid_argument& e) {
        fail(std::string("ordering: ") + e.what());
    }
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Map the byte offset to a line/column pair for the message.
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("invalid JSON at line " + std::to_string(line) +
                             ", column " + std::to_string(column),
                         e.byte ? e.byte : 1);
    }
}

std::vector<std::string> variables_from_json(const json& doc) {
    if (!doc.is_object()) fail("problem file must be a JSON object");
    if (!doc.contains("variables")) fail("missing \"variables\"");
    std::vector<std::string> variables =
        string_list(doc["variables"], "variables");
    if (variables.empty()) fail("variables: need at least one variable");
    for (const std::string& v : variables)
        if (!valid_identifier(v))
            fail("variables: \"" + v + "\" is not a valid identifier");
    for (std::size_t i = 0; i < variables.size(); ++i)
        for (std::size_t j = i + 1; j < variables.size(); ++j)
            if (variables[i] == variables[j])
                fail("variables: duplicate name \"" + variables[i] + "\"");
    return variables;
}

}  // namespace

ParsedProblem parse_problem_json(const std::string& text) {
    json doc = parse_document(text);
    std::vector<std::string> variables = variables_from_json(doc);
    const int d = static_cast<int>(variables.size());

    if (!doc.contains("ordering")) fail("missing \"ordering\"");
    MonomialOrdering ordering = ordering_from_json(doc["ordering"], variables);

    if (!doc.contains("conditions") || !doc["conditions"].is_array())
        fail("missing \"conditions\" array");

    std::vector<ConditionSpace> conditions;
    std::size_t index = 0;
    for (const auto& cj : doc["conditions"]) {
        ++index;
        const std::string where = "conditions[" + std::to_string(index) + "]";
        if (!cj.is_object() || !cj.contains("point"))
            fail(where + ": expected {\"point\": [...], ...}");
        if (!cj["point"].is_array() ||
            cj["point"].size() != static_cast<std::size_t>(d))
            fail(where + ".point: expected " + std::to_string(d) +
                 " coordinates");
        Point point;
        for (const auto& coord : cj["point"])
            point.coordinates.push_back(
                rational_from_json(coord, where + ".point"));

        std::vector<Polynomial> generators;
        if (cj.contains("functionals")) {
            std::vector<std::string> texts =
                string_list(cj["functionals"], where + ".functionals");
            if (texts.empty()) fail(where + ".functionals: empty list");
            for (const std::string& t : texts)
                generators.push_back(parse_polynomial(t, variables));
        } else {
            generators.push_back(Polynomial::constant(d, Rational(1)));
        }
        conditions.push_back(ConditionSpace{std::move(point), std::move(generators)});
    }

    return ParsedProblem{std::move(variables),
                         InterpolationProblem{d, std::move(ordering),
                                              std::move(conditions)}};
}

ParsedProblem load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot read \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_json(buffer.str());
}

namespace {

std::string ordering_display(const MonomialOrdering& ord,
                             const std::vector<std::string>& variables) {
    std::string out = to_string(ord.kind()) + "(";
    const auto& priority = ord.variable_priority();
    for (std::size_t i = 0; i < priority.size(); ++i) {
        if (i) out += " > ";
        out += variables[static_cast<size_t>(priority[i])];
    }
    return out + ")";
}

std::string monomial_list(const std::vector<ExponentVector>& monomials,
                          const std::vector<std::string>& variables) {
    std::string out;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (i) out += ", ";
        out += print_monomial(monomials[i], variables);
    }
    return out;
}

std::string certificate_summary(const Certificate& cert) {
    std::ostringstream out;
    out << "s-pairs " << cert.spairs_checked << " checked, "
        << (cert.all_spairs_reduce_to_zero ? "all reduce to zero"
                                           : "NONZERO REMAINDER")
        << "; structure " << (cert.structure_ok ? "ok" : "BROKEN")
        << "; functionals " << cert.vanishing_checked << " checked, "
        << (cert.all_functionals_vanish ? "all annihilate" : "NONZERO VALUE");
    if (cert.oracle_match.has_value())
        out << "; oracle " << (*cert.oracle_match ? "match" : "MISMATCH");
    out << " => " << (cert.certified() ? "CERTIFIED" : "NOT CERTIFIED");
    return out.str();
}

}  // namespace

std::string result_to_text(const std::vector<std::string>& variables,
                           const GroebnerResult& result) {
    std::ostringstream out;
    out << "variables: ";
    for (std::size_t i = 0; i < variables.size(); ++i)
        out << (i ? ", " : "") << variables[i];
    out << "\nordering: " << ordering_display(result.ordering, variables);
    out << "\nquotient basis (" << result.quotient_basis.size() << "): "
        << monomial_list(
               sorted_monomials(result.quotient_basis.monomials,
                                result.ordering),
               variables);
    out << "\nleading monomials (" << result.leading_monomials.size()
        << "): " << monomial_list(result.leading_monomials, variables);
    out << "\ngroebner basis:\n";
    for (const Polynomial& g : result.basis)
        out << "  " << print_polynomial(g, result.ordering, variables) << "\n";
    if (result.certificate)
        out << "certificate: " << certificate_summary(*result.certificate)
            << "\n";
    else
        out << "certificate: skipped\n";
    return out.str();
}

std::string result_to_json(const std::vector<std::string>& variables,
                           const GroebnerResult& result) {
    json doc;
    doc["variables"] = variables;
    json priority = json::array();
    for (int v : result.ordering.variable_priority())
        priority.push_back(variables[static_cast<size_t>(v)]);
    doc["ordering"] = {{"kind", to_string(result.ordering.kind())},
                       {"variable_priority", priority}};

    json qb = json::array();
    for (const ExponentVector& m :
         sorted_monomials(result.quotient_basis.monomials, result.ordering))
        qb.push_back(print_monomial(m, variables));
    doc["quotient_basis"] = qb;

    json lms = json::array();
    for (const ExponentVector& m : result.leading_monomials)
        lms.push_back(print_monomial(m, variables));
    doc["leading_monomials"] = lms;

    json basis = json::array();
    for (const Polynomial& g : result.basis)
        basis.push_back(print_polynomial(g, result.ordering, variables));
    doc["basis"] = basis;

    if (result.certificate) {
        const Certificate& cert = *result.certificate;
        json cj = {{"structure_ok", cert.structure_ok},
                   {"spairs_checked", cert.spairs_checked},
                   {"all_spairs_reduce_to_zero", cert.all_spairs_reduce_to_zero},
                   {"vanishing_checked", cert.vanishing_checked},
                   {"all_functionals_vanish", cert.all_functionals_vanish},
                   {"certified", cert.certified()}};
        if (cert.oracle_match.has_value())
            cj["oracle_match"] = *cert.oracle_match;
        doc["certificate"] = cj;
    } else {
        doc["certificate"] = nullptr;
    }
    return doc.dump(2) + "\n";
}

LoadedResult parse_result_json(const std::string& text) {
    json doc = parse_document(text);
    std::vector<std::string> variables = variables_from_json(doc);
    if (!doc.contains("ordering")) fail("missing \"ordering\"");
    MonomialOrdering ordering = ordering_from_json(doc["ordering"], variables);

    auto monomial_of = [&](const std::string& s, const std::string& where) {
        Polynomial p = parse_polynomial(s, variables);
        if (p.term_count() != 1 ||
            p.terms().begin()->second != Rational(1))
            fail(where + ": \"" + s + "\" is not a monomial");
        return p.terms().begin()->first;
    };

    if (!doc.contains("quotient_basis") || !doc.contains("leading_monomials") ||
        !doc.contains("basis"))
        fail("missing result fields");

    GroebnerResult result{ordering, LowerSet{}, {}, {}, std::nullopt};
    for (const std::string& s :
         string_list(doc["quotient_basis"], "quotient_basis"))
        result.quotient_basis.monomials.insert(monomial_of(s, "quotient_basis"));
    for (const std::string& s :
         string_list(doc["leading_monomials"], "leading_monomials"))
        result.leading_monomials.push_back(monomial_of(s, "leading_monomials"));
    for (const std::string& s : string_list(doc["basis"], "basis"))
        result.basis.push_back(parse_polynomial(s, variables));

    if (result.basis.size() != result.leading_monomials.size())
        fail("basis and leading_monomials disagree in length");
    return LoadedResult{std::move(variables), std::move(result)};
}

}  // namespace idealgb
