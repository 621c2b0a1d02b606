#include "treebraid/tree_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace treebraid {

TreeInput parse_tree_json(const std::string& text) {
	nlohmann::json doc;
	try {
		doc = nlohmann::json::parse(text);
	} catch (const nlohmann::json::exception& e) {
		fail(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
	}
	if (!doc.is_object() || !doc.contains("root") || !doc.contains("children"))
		fail(ErrorCode::parse_error, "tree document needs \"root\" and \"children\"");
	TreeInput input;
	try {
		input.root = doc.at("root").get<int>();
		for (const auto& [key, value] : doc.at("children").items()) {
			size_t used = 0;
			int vertex = std::stoi(key, &used);
			if (used != key.size()) fail(ErrorCode::parse_error, "children key is not an integer");
			input.children[vertex] = value.get<std::vector<int>>();
		}
	} catch (const nlohmann::json::exception& e) {
		fail(ErrorCode::parse_error, std::string("bad tree document: ") + e.what());
	} catch (const std::logic_error&) {
		fail(ErrorCode::parse_error, "children key is not an integer");
	}
	return input;
}

TreeInput load_tree_input(const std::string& source) {
	if (source == "tmin") {
		PlaneTree t_min = PlaneTree::canonical_t_min();
		TreeInput input;
		input.root = 0;
		for (int v = 0; v < t_min.vertex_count(); ++v)
			if (!t_min.children(v).empty()) input.children[v] = t_min.children(v);
		return input;
	}
	std::ifstream in(source);
	if (!in) fail(ErrorCode::parse_error, "cannot open tree file: " + source);
	std::ostringstream text;
	text << in.rdbuf();
	return parse_tree_json(text.str());
}

PlaneTree load_tree(const std::string& source) {
	return PlaneTree::from_input(load_tree_input(source));
}

std::string tree_to_json(const PlaneTree& tree) {
	nlohmann::ordered_json doc;
	doc["root"] = 0;
	nlohmann::ordered_json children = nlohmann::ordered_json::object();
	for (int v = 0; v < tree.vertex_count(); ++v)
		if (!tree.children(v).empty()) children[std::to_string(v)] = tree.children(v);
	doc["children"] = std::move(children);
	return doc.dump();
}

} // namespace treebraid
