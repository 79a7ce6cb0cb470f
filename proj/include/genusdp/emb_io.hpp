#pragma once

#include <iosfwd>
#include <string>

#include "genusdp/embedded_graph.hpp"

namespace genusdp {

// Text format for embedded graphs:
//
//   emb <vertices> <edges>
//   v <id>: <edge ids in cyclic order>
//   e <id> <u> <v> <+|->
//
// Everything is 0-based. A loop lists its edge id twice in the rotation line;
// the first occurrence is taken as the edge's first end. Tokens may be
// separated by any amount of whitespace and blank lines are ignored. Parse
// errors carry 1-based line numbers and throw InputError.
EmbeddedGraph read_emb(std::istream& in);
EmbeddedGraph read_emb_file(const std::string& path);

void write_emb(std::ostream& out, const EmbeddedGraph& g);
std::string to_emb(const EmbeddedGraph& g);
void write_emb_file(const std::string& path, const EmbeddedGraph& g);

}  // namespace genusdp
