#pragma once

#include "treebraid/plane_tree.hpp"

#include <string>

namespace treebraid {

// JSON tree documents: {"root": <id>, "children": {"<id>": [<ids>...]}}.
// Child array order is the plane embedding.
TreeInput parse_tree_json(const std::string& text);

// Reads a tree from a file path, or serves the builtin named "tmin".
// Throws parse_error on unreadable files or malformed documents.
TreeInput load_tree_input(const std::string& source);
PlaneTree load_tree(const std::string& source);

// Serializes in canonical numbering; parsing the output reproduces the tree.
std::string tree_to_json(const PlaneTree& tree);

} // namespace treebraid
