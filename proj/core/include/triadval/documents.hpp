#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "triadval/engine.hpp"
#include "triadval/inputs.hpp"
#include "triadval/representation.hpp"
#include "triadval/simulation.hpp"
#include "triadval/universe.hpp"
#include "triadval/validate.hpp"

namespace triadval::doc {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Representation stacks. Serialization is canonical: object keys sorted,
// arrays ordered by id, two-space indent, trailing newline. parse(serialize(x))
// round-trips byte-identically.
std::string serialize_stack(const RepresentationStack& stack);
RepresentationStack parse_stack(const std::string& text);

// Universe documents: size plus the member indices of each oracle set and
// the loss-kind assignments.
std::string serialize_universe(const space::FiniteUniverse& u);
space::FiniteUniverse parse_universe(const std::string& text);

engine::GoalDocument parse_goal(const std::string& text);
engine::TransformationCatalog parse_catalog(const std::string& text);
std::vector<QualityCriterion> parse_criteria(const std::string& text);
engine::EngineConfig parse_config(const std::string& text);
space::Scenario parse_scenario(const std::string& text);

std::string serialize_outcome(const engine::EngineOutcome& outcome);

/// Census document: per-area counts, oracle-set sizes and (when the universe
/// is non-empty) the cond1 verdict at the given tolerance.
std::string serialize_census(const space::FiniteUniverse& u, const space::Census& c,
                             const space::Cond1Verdict* cond1);

struct DocumentViolations {
    std::string label;
    std::vector<Violation> violations;
};
std::string serialize_violations(const std::vector<DocumentViolations>& docs);

/// Line-delimited lineage records, stable field order, one per line.
std::string lineage_lines(const std::vector<LineageRecord>& records);

std::string read_file(const std::string& path);   // throws ParseError when unreadable
void write_file(const std::string& path, const std::string& content);

} // namespace triadval::doc
