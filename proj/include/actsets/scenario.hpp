#pragma once

#include <string>
#include <utility>
#include <vector>

#include "actsets/act_set.hpp"
#include "actsets/information.hpp"

namespace actsets {

/// Parsed scenario file: a state space, named decision makers (generator
/// lists), named information structures, and an optional ordered query list.
/// Every name referenced by a query is defined and every vector matches the
/// space dimension; rational literals are converted exactly.
struct Scenario {
    StateSpace states;
    std::vector<std::pair<std::string, ActSet>> decision_makers;
    std::vector<std::pair<std::string, InfoStructure>> info_structures;
    std::vector<std::vector<std::string>> queries;

    const ActSet* find_decision_maker(const std::string& name) const;
    const InfoStructure* find_info_structure(const std::string& name) const;
};

/// Throws ParseError (position-annotated) on malformed JSON and
/// ValidationError (naming the field) on schema violations.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

}  // namespace actsets
