#include "actsets/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace actsets {

namespace {

using nlohmann::ordered_json;

Rational number_from(const ordered_json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_float())
        throw ValidationError(where + ": non-integral JSON numbers are inexact; "
                                      "quote the value (\"1/3\", \"0.25\")");
    throw ValidationError(where + ": expected a rational literal");
}

std::vector<Rational> vector_from(const ordered_json& v, int dimension, const std::string& where) {
    if (!v.is_array())
        throw ValidationError(where + ": expected an array of rationals");
    if (static_cast<int>(v.size()) != dimension)
        throw ValidationError(where + ": has " + std::to_string(v.size()) +
                              " coordinates, expected " + std::to_string(dimension));
    std::vector<Rational> out;
    out.reserve(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out.push_back(number_from(v[i], where + " coordinate #" + std::to_string(i + 1)));
    return out;
}

struct CommandSpec {
    const char* name;
    int arity;
    // d: decision maker, i: info structure, a: act literal or singleton maker
    const char* kinds;
};

constexpr CommandSpec kCommands[] = {
    {"voi", 2, "di"},        {"relvoi", 3, "dii"},    {"fuse", 2, "dd"},
    {"union", 2, "dd"},      {"stardiff", 2, "dd"},   {"compare", 2, "dd"},
    {"normalfan", 1, "d"},   {"check-dioid", 0, ""},  {"flex-union", 2, "dd"},
    {"flex-little", 2, "da"},
};

const CommandSpec* find_command(const std::string& name) {
    for (const auto& c : kCommands)
        if (name == c.name) return &c;
    return nullptr;
}

}  // namespace

const ActSet* Scenario::find_decision_maker(const std::string& name) const {
    for (const auto& [n, dm] : decision_makers)
        if (n == name) return &dm;
    return nullptr;
}

const InfoStructure* Scenario::find_info_structure(const std::string& name) const {
    for (const auto& [n, q] : info_structures)
        if (n == name) return &q;
    return nullptr;
}

Scenario parse_scenario(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("scenario: top level must be an object");

    if (!doc.contains("states") || !doc["states"].is_array() || doc["states"].empty())
        throw ValidationError("states: expected a nonempty array of labels");
    std::vector<std::string> labels;
    for (const auto& s : doc["states"]) {
        if (!s.is_string()) throw ValidationError("states: labels must be strings");
        labels.push_back(s.get<std::string>());
    }
    StateSpace space(std::move(labels));
    const int k = space.dimension();

    Scenario scenario{space, {}, {}, {}};

    if (doc.contains("decision_makers")) {
        if (!doc["decision_makers"].is_object())
            throw ValidationError("decision_makers: expected an object of name -> act list");
        for (const auto& [name, acts] : doc["decision_makers"].items()) {
            const std::string where = "decision maker '" + name + "'";
            if (!acts.is_array() || acts.empty())
                throw ValidationError(where + ": expected a nonempty array of acts");
            std::vector<UtilityAct> list;
            for (size_t i = 0; i < acts.size(); ++i)
                list.push_back(UtilityAct(
                    space, vector_from(acts[i], k, where + " act #" + std::to_string(i + 1))));
            try {
                scenario.decision_makers.emplace_back(name,
                                                      ActSet::canonicalize(space, std::move(list)));
            } catch (const DegenerateInput& e) {
                throw ValidationError(where + ": " + e.what());
            }
        }
    }

    if (doc.contains("info_structures")) {
        if (!doc["info_structures"].is_object())
            throw ValidationError("info_structures: expected an object of name -> signal list");
        for (const auto& [name, sigs] : doc["info_structures"].items()) {
            const std::string where = "info structure '" + name + "'";
            if (!sigs.is_array() || sigs.empty())
                throw ValidationError(where + ": expected a nonempty array of signals");
            std::vector<Signal> signals;
            for (size_t i = 0; i < sigs.size(); ++i) {
                const auto& s = sigs[i];
                const std::string swhere = where + " signal #" + std::to_string(i + 1);
                if (!s.is_object() || !s.contains("weight") || !s.contains("posterior"))
                    throw ValidationError(swhere + ": expected {weight, posterior}");
                Rational w = number_from(s["weight"], swhere + " weight");
                std::vector<Rational> post = vector_from(s["posterior"], k, swhere + " posterior");
                try {
                    signals.push_back(Signal{std::move(w), Belief(space, std::move(post))});
                } catch (const DegenerateInput& e) {
                    throw ValidationError(swhere + ": " + e.what());
                }
            }
            try {
                scenario.info_structures.emplace_back(name,
                                                      InfoStructure(space, std::move(signals)));
            } catch (const DegenerateInput& e) {
                throw ValidationError(where + ": " + e.what());
            }
        }
    }

    if (doc.contains("queries")) {
        if (!doc["queries"].is_array())
            throw ValidationError("queries: expected an array of command argument lists");
        for (size_t i = 0; i < doc["queries"].size(); ++i) {
            const auto& q = doc["queries"][i];
            const std::string where = "query #" + std::to_string(i + 1);
            if (!q.is_array() || q.empty())
                throw ValidationError(where + ": expected a nonempty array of strings");
            std::vector<std::string> args;
            for (const auto& a : q) {
                if (!a.is_string()) throw ValidationError(where + ": arguments must be strings");
                args.push_back(a.get<std::string>());
            }
            const CommandSpec* spec = find_command(args[0]);
            if (!spec) throw ValidationError(where + ": unknown command '" + args[0] + "'");
            if (static_cast<int>(args.size()) - 1 != spec->arity)
                throw ValidationError(where + ": '" + args[0] + "' takes " +
                                      std::to_string(spec->arity) + " arguments");
            for (int a = 0; a < spec->arity; ++a) {
                const char kind = spec->kinds[a];
                const std::string& name = args[static_cast<size_t>(a) + 1];
                if (kind == 'd' && !scenario.find_decision_maker(name))
                    throw ValidationError(where + ": unknown decision maker '" + name + "'");
                if (kind == 'i' && !scenario.find_info_structure(name))
                    throw ValidationError(where + ": unknown info structure '" + name + "'");
                if (kind == 'a' && !scenario.find_decision_maker(name)) {
                    // act literal "8,-8"; validated by parsing
                    std::istringstream is(name);
                    std::string part;
                    int parts = 0;
                    bool bad = false;
                    while (std::getline(is, part, ',')) {
                        try {
                            parse_rational(part);
                        } catch (const ParseError&) {
                            bad = true;
                        }
                        ++parts;
                    }
                    if (bad || parts != k)
                        throw ValidationError(where + ": '" + name +
                                              "' is neither a decision maker nor an act literal with " +
                                              std::to_string(k) + " coordinates");
                }
            }
            scenario.queries.push_back(std::move(args));
        }
    }
    return scenario;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace actsets
