#include "triadval/element_id.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace triadval {

ElementId::ElementId(std::string ns_, std::string local_)
    : ns(std::move(ns_)), local(std::move(local_)) {
    if (ns.empty() || local.empty()) {
        throw std::invalid_argument("element id parts must be non-empty: '" + ns + "/" + local +
                                    "'");
    }
    if (ns.find('/') != std::string::npos) {
        throw std::invalid_argument("element id namespace must not contain '/': " + ns);
    }
}

ElementId ElementId::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        throw std::invalid_argument("element id must be 'namespace/local': " + text);
    }
    return ElementId(text.substr(0, slash), text.substr(slash + 1));
}

std::ostream& operator<<(std::ostream& os, const ElementId& id) { return os << id.str(); }

} // namespace triadval
