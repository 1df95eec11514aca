#include "triadval/representation.hpp"

#include <sstream>
#include <stdexcept>

namespace triadval {

const char* to_string(RepStatus v) {
    switch (v) {
    case RepStatus::Candidate: return "candidate";
    case RepStatus::SelfConsistent: return "self_consistent";
    }
    return "?";
}

RepStatus rep_status_from_string(const std::string& s) {
    if (s == "candidate") return RepStatus::Candidate;
    if (s == "self_consistent") return RepStatus::SelfConsistent;
    throw std::invalid_argument("unknown representation status: '" + s + "'");
}

bool Representation::contains_id(const ElementId& id) const {
    return model.count(id) || constraints.count(id) || assumptions.count(id) ||
           assumption_monitors.count(id) || constraint_monitors.count(id) ||
           strategies.count(id) || arguments.count(id) || criteria.count(id) ||
           evidence_items.count(id);
}

const EvidenceArgument* Representation::argument_for(const ElementId& target) const {
    for (const auto& [id, arg] : arguments) {
        if (arg.target == target) return &arg;
    }
    return nullptr;
}

std::set<ElementId> Representation::attached_evidence() const {
    std::set<ElementId> attached;
    for (const auto& [id, arg] : arguments) {
        attached.insert(arg.evidence.begin(), arg.evidence.end());
    }
    return attached;
}

namespace {

void append_id_list(std::ostream& os, const std::vector<std::string>& ids) {
    os << '[';
    bool first = true;
    for (const auto& id : ids) {
        if (!first) os << ',';
        os << id;
        first = false;
    }
    os << ']';
}

} // namespace

std::string LineageRecord::line() const {
    std::ostringstream os;
    os << "level=" << level << " algo=" << algorithm << " rule=" << rule << " sources=";
    append_id_list(os, sources);
    os << " produced=";
    append_id_list(os, produced);
    os << " outcome=" << outcome << " note=" << note;
    return os.str();
}

const Representation& RepresentationStack::top() const {
    if (levels.empty()) {
        throw std::out_of_range("representation stack is empty");
    }
    return levels.back();
}

bool RepresentationStack::contains_id(const ElementId& id) const {
    for (const auto& rep : levels) {
        if (rep.contains_id(id)) return true;
    }
    return false;
}

} // namespace triadval
