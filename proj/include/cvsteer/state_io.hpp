#ifndef CVSTEER_STATE_IO_HPP
#define CVSTEER_STATE_IO_HPP

#include <iosfwd>
#include <string>

#include "cvsteer/fock.hpp"

namespace cvsteer {

// State file schema (schema_version 1):
//   {"schema_version": 1, "modes": M, "dims": [d0, ...],
//    "kind": "pure" | "density", "data": ...}
// Pure data is a flat list of [re, im] pairs in row-major mode order
// (mode 0 slowest); density data is a list of rows of [re, im] pairs.
// The ordering is normative.

MultiModeState load_state(std::istream& in, const std::string& source_name = "<stream>");
MultiModeState load_state_file(const std::string& path);

void save_state(std::ostream& out, const MultiModeState& state);
void save_state_file(const std::string& path, const MultiModeState& state);

}  // namespace cvsteer

#endif
