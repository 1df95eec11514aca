#pragma once

#include <compare>
#include <iosfwd>
#include <string>

namespace triadval {

/// Identifier of any element of a representation, written "namespace/local".
/// Ids are stable: a transformed element always gets a new id, lineage is
/// recorded separately.
struct ElementId {
    std::string ns;
    std::string local;

    ElementId() = default;
    ElementId(std::string ns_, std::string local_);

    /// Parses "namespace/local"; throws std::invalid_argument on malformed input.
    static ElementId parse(const std::string& text);

    std::string str() const { return ns + "/" + local; }
    bool empty() const { return ns.empty() && local.empty(); }

    auto operator<=>(const ElementId&) const = default;
};

std::ostream& operator<<(std::ostream& os, const ElementId& id);

} // namespace triadval
