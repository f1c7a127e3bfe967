#pragma once

#include <string>

#include "revccs/confstruct.hpp"
#include "revccs/encoding.hpp"
#include "revccs/equivalences.hpp"

namespace revccs {

// {"events":[{"id":"e0","label":"a"}],"configurations":[[],["e0"]]}
std::string to_json(const ConfStruct& c);
ConfStruct confstruct_from_json(const std::string& text);

// Hasse diagram, bottom-up, covering edges labelled by the added event.
std::string to_dot(const ConfStruct& c);
std::string to_text(const ConfStruct& c);

// {"origin": <structure>, "current": [ids]}
std::string to_json(const Address& a);

// {"related", "failing_stratum", "witness", "context"}
std::string to_json(const EquivalenceVerdict& v);

}  // namespace revccs
