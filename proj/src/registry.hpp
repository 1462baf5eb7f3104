#pragma once

#include <string>
#include <vector>

#include "hopf.hpp"
#include "ograph.hpp"

namespace hd {

// Builtin groups: Z1..Z8, S3, D4, Q8.
std::vector<std::string> builtin_group_names();
GroupTable builtin_group(const std::string& name);

// Builtin algebras: Q<group> = the group algebra, F<group> = its dual (the
// function algebra). A bare group name is shorthand for the Q form.
std::vector<std::string> builtin_algebra_names();
HopfAlgebra builtin_algebra(const std::string& name, unsigned long mod = 0);

// Graph specs: "lens:p", "sum(spec,spec)", otherwise a file path.
OGraph resolve_graph(const std::string& spec);

// Algebra specs: "builtin:NAME", a bare builtin name, otherwise a JSON file
// path. mod applies to builtins only (files carry their own field).
HopfAlgebra resolve_algebra(const std::string& spec, unsigned long mod = 0);

std::string read_file(const std::string& path);

} // namespace hd
