#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "treebraid/cup.hpp"
#include "treebraid/homology.hpp"
#include "treebraid/morse.hpp"
#include "treebraid/raag.hpp"
#include "treebraid/tree_io.hpp"

namespace treebraid::cli {

namespace {

using nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
	switch (code) {
	case ErrorCode::resource_bound:
		return 4;
	case ErrorCode::morse_boundary_nonzero:
	case ErrorCode::not_a_cocycle:
	case ErrorCode::stabilization_guard_exceeded:
	case ErrorCode::filler_collision:
	case ErrorCode::internal_check_failed:
		return 3;
	default:
		return 2;
	}
}

struct CommonOptions {
	std::string tree_source = "tmin";
	int strands = 0;
	std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOptions& opt, const std::vector<std::string>& formats) {
	cmd->add_option("--tree", opt.tree_source, "Tree file (JSON) or the builtin name 'tmin'");
	cmd->add_option("--n", opt.strands, "Number of strands")->required()->check(CLI::PositiveNumber);
	cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(formats));
}

template <typename T>
std::string tuple_text(const std::vector<T>& values) {
	std::string s = "(";
	for (size_t i = 0; i < values.size(); ++i) {
		if (i)
			s += ", ";
		s += std::to_string(values[i]);
	}
	return s + ")";
}

std::vector<int> set_bits(const DualBasisVector& v) {
	std::vector<int> idx;
	for (size_t i = 0; i < v.bits.size(); ++i)
		if (v.bits[i])
			idx.push_back(static_cast<int>(i));
	return idx;
}

std::string join_bits(const std::vector<int>& idx, const char* sep) {
	std::string s;
	for (size_t i = 0; i < idx.size(); ++i) {
		if (i)
			s += sep;
		s += std::to_string(idx[i]);
	}
	return s;
}

int run_betti(const CommonOptions& common, bool oracle, long long max_cells, std::ostream& out,
              std::ostream& err) {
	PlaneTree tree = load_tree(common.tree_source);
	std::vector<int> betti = betti_numbers(tree, common.strands);
	HomologyReport report;
	bool agrees = true;
	if (oracle) {
		HomologyOptions options;
		options.max_cells_per_dim = max_cells;
		report = oracle_homology(tree, common.strands, options);
		agrees = betti.size() == report.betti_mod2.size();
		for (size_t i = 0; agrees && i < betti.size(); ++i)
			agrees = static_cast<long long>(betti[i]) == report.betti_mod2[i];
	}
	if (common.format == "json") {
		ordered_json doc;
		doc["tree"] = common.tree_source;
		doc["vertices"] = tree.vertex_count();
		doc["strands"] = common.strands;
		doc["betti"] = betti;
		if (oracle) {
			doc["oracle"] = ordered_json{{"cell_counts", report.cell_counts},
			                             {"betti_mod2", report.betti_mod2},
			                             {"agrees", agrees}};
		}
		out << doc.dump(2) << "\n";
	} else if (common.format == "csv") {
		out << (oracle ? "dim,betti,oracle_mod2\n" : "dim,betti\n");
		for (size_t i = 0; i < betti.size(); ++i) {
			out << i << "," << betti[i];
			if (oracle)
				out << "," << (i < report.betti_mod2.size() ? report.betti_mod2[i] : -1);
			out << "\n";
		}
	} else {
		out << "tree: " << common.tree_source << " (" << tree.vertex_count() << " vertices)\n";
		out << "strands: " << common.strands << "\n";
		out << "betti: " << tuple_text(betti) << "\n";
		if (oracle) {
			out << "oracle mod-2 betti: " << tuple_text(report.betti_mod2) << "\n";
			out << "oracle: " << (agrees ? "agrees" : "DISAGREES") << "\n";
		}
	}
	if (oracle && !agrees) {
		err << "betti: matching result and boundary-rank oracle disagree\n";
		return 3;
	}
	return 0;
}

int run_classify(const CommonOptions& common, const std::string& cell_text, std::ostream& out) {
	PlaneTree tree = load_tree(common.tree_source);
	Cell cell = parse_cell(tree, cell_text);
	if (cell.size() != common.strands)
		fail(ErrorCode::invalid_argument, "cell has " + std::to_string(cell.size()) +
		                                      " members but --n is " + std::to_string(common.strands));
	CellStatus status = classify(tree, cell);
	bool matched = status != CellStatus::critical;
	Cell partner;
	const char* direction = nullptr;
	if (status == CellStatus::redundant) {
		partner = match_up(tree, cell);
		direction = "up";
	} else if (status == CellStatus::collapsible) {
		partner = match_down(tree, cell);
		direction = "down";
	}
	if (common.format == "json") {
		ordered_json doc;
		doc["cell"] = format_cell(cell);
		doc["dim"] = cell.dim();
		doc["status"] = cell_status_name(status);
		doc["partner"] = matched ? ordered_json(format_cell(partner)) : ordered_json(nullptr);
		doc["direction"] = direction ? ordered_json(direction) : ordered_json(nullptr);
		out << doc.dump(2) << "\n";
	} else {
		out << "cell: " << format_cell(cell) << "\n";
		out << "dim: " << cell.dim() << "\n";
		out << "status: " << cell_status_name(status) << "\n";
		if (matched)
			out << "partner (" << direction << "): " << format_cell(partner) << "\n";
	}
	return 0;
}

int run_cup_table(const CommonOptions& common, std::ostream& out) {
	PlaneTree tree = load_tree(common.tree_source);
	CupContext context(tree, common.strands);
	RingTable table = ring_table(context);
	if (common.format == "json") {
		ordered_json doc;
		doc["tree"] = common.tree_source;
		doc["strands"] = common.strands;
		ordered_json b1 = ordered_json::array(), b2 = ordered_json::array();
		for (const Cell& c : table.basis1)
			b1.push_back(format_cell(c));
		for (const Cell& c : table.basis2)
			b2.push_back(format_cell(c));
		doc["basis1"] = std::move(b1);
		doc["basis2"] = std::move(b2);
		ordered_json prods = ordered_json::array();
		for (const auto& [key, value] : table.products)
			prods.push_back(ordered_json{{"i", key.first}, {"j", key.second}, {"value", set_bits(value)}});
		doc["products"] = std::move(prods);
		doc["pairing_rank"] = table.pairing_rank;
		doc["radical_dim"] = table.radical_dim;
		out << doc.dump(2) << "\n";
	} else if (common.format == "csv") {
		out << "i,j,value\n";
		for (const auto& [key, value] : table.products)
			out << key.first << "," << key.second << "," << join_bits(set_bits(value), "+") << "\n";
	} else if (common.format == "dot") {
		std::vector<char> used(table.basis1.size(), 0);
		for (const auto& [key, value] : table.products)
			used[key.first] = used[key.second] = 1;
		out << "graph cup_products {\n";
		out << "\tnode [shape=box];\n";
		for (size_t i = 0; i < table.basis1.size(); ++i)
			if (used[i])
				out << "\t\"" << format_cell(table.basis1[i]) << "\";\n";
		for (const auto& [key, value] : table.products) {
			std::string label;
			for (int b : set_bits(value)) {
				if (!label.empty())
					label += " + ";
				label += format_cell(table.basis2[b]);
			}
			out << "\t\"" << format_cell(table.basis1[key.first]) << "\" -- \""
			    << format_cell(table.basis1[key.second]) << "\" [label=\"" << label << "\"];\n";
		}
		out << "}\n";
	} else {
		out << "basis dim 1 (" << table.basis1.size() << " cells):\n";
		for (size_t i = 0; i < table.basis1.size(); ++i)
			out << "  [" << i << "] " << format_cell(table.basis1[i]) << "\n";
		out << "basis dim 2 (" << table.basis2.size() << " cells):\n";
		for (size_t i = 0; i < table.basis2.size(); ++i)
			out << "  [" << i << "] " << format_cell(table.basis2[i]) << "\n";
		out << "nonzero products (i < j): " << table.products.size() << "\n";
		for (const auto& [key, value] : table.products) {
			out << "  [" << key.first << "] * [" << key.second << "] =";
			for (int b : set_bits(value))
				out << " [" << b << "]";
			out << "\n";
		}
		out << "pairing rank: " << table.pairing_rank << "\n";
		out << "radical dimension: " << table.radical_dim << "\n";
	}
	return 0;
}

int run_raag(const CommonOptions& common, bool witness, std::ostream& out) {
	PlaneTree tree = load_tree(common.tree_source);
	RaagVerdict verdict = raag_status(tree, common.strands);
	std::optional<NonFlagWitness> found;
	bool witness_applicable = witness && !verdict.is_raag;
	if (witness_applicable) {
		CupContext context(tree, common.strands);
		RingTable table = ring_table(context);
		found = non_flag_witness(context, table);
	}
	if (common.format == "json") {
		ordered_json doc;
		doc["tree"] = common.tree_source;
		doc["strands"] = common.strands;
		doc["raag"] = verdict.is_raag;
		doc["reason"] = raag_reason_name(verdict.reason);
		if (witness) {
			if (found) {
				ordered_json cells = ordered_json::array();
				for (const Cell& c : found->cells)
					cells.push_back(format_cell(c));
				doc["witness"] = ordered_json{{"triangle", found->triangle}, {"cells", std::move(cells)},
				                              {"note", found->note}};
			} else {
				doc["witness"] = nullptr;
			}
		}
		out << doc.dump(2) << "\n";
	} else {
		out << "raag: " << (verdict.is_raag ? "yes" : "no") << "\n";
		out << "reason: " << raag_reason_name(verdict.reason) << "\n";
		if (witness) {
			if (found) {
				out << "diagnostic witness (triangle of nonzero pairwise products):\n";
				for (const Cell& c : found->cells)
					out << "  " << format_cell(c) << "\n";
				out << "note: " << found->note << "\n";
			} else if (!witness_applicable) {
				out << "witness: not applicable\n";
			} else {
				out << "witness: none found\n";
			}
		}
	}
	return 0;
}

int run_oracle(const CommonOptions& common, bool smith, long long max_cells, std::ostream& out) {
	PlaneTree tree = load_tree(common.tree_source);
	HomologyOptions options;
	options.max_cells_per_dim = max_cells;
	options.smith = smith;
	HomologyReport report = oracle_homology(tree, common.strands, options);
	if (common.format == "json") {
		ordered_json doc;
		doc["tree"] = common.tree_source;
		doc["strands"] = report.strands;
		doc["cell_counts"] = report.cell_counts;
		doc["boundary_ranks"] = report.boundary_ranks;
		doc["betti_mod2"] = report.betti_mod2;
		if (report.smith_computed) {
			doc["betti_integer"] = report.betti_integer;
			ordered_json smith_doc = ordered_json::array();
			for (const SmithSummary& s : report.smith)
				smith_doc.push_back(ordered_json{{"boundary_dim", s.boundary_dim},
				                                 {"rank", s.rank},
				                                 {"nonunit_divisors", s.nonunit_divisors}});
			doc["smith"] = std::move(smith_doc);
			doc["torsion_free"] = report.torsion_free;
		}
		out << doc.dump(2) << "\n";
	} else if (common.format == "csv") {
		out << (report.smith_computed ? "dim,cells,boundary_rank,betti_mod2,betti_integer\n"
		                              : "dim,cells,boundary_rank,betti_mod2\n");
		for (size_t i = 0; i < report.cell_counts.size(); ++i) {
			out << i << "," << report.cell_counts[i] << "," << report.boundary_ranks[i] << ","
			    << report.betti_mod2[i];
			if (report.smith_computed)
				out << "," << report.betti_integer[i];
			out << "\n";
		}
	} else {
		out << "strands: " << report.strands << "\n";
		for (size_t i = 0; i < report.cell_counts.size(); ++i)
			out << "dim " << i << ": cells " << report.cell_counts[i] << ", boundary rank "
			    << report.boundary_ranks[i] << ", betti_mod2 " << report.betti_mod2[i] << "\n";
		if (report.smith_computed) {
			out << "integer betti: " << tuple_text(report.betti_integer) << "\n";
			for (const SmithSummary& s : report.smith) {
				out << "smith of boundary from dim " << s.boundary_dim << ": rank " << s.rank
				    << ", nonunit divisors:";
				if (s.nonunit_divisors.empty())
					out << " none";
				for (long long d : s.nonunit_divisors)
					out << " " << d;
				out << "\n";
			}
			out << "torsion-free: " << (report.torsion_free ? "yes" : "no") << "\n";
		}
	}
	return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"Homology and cohomology rings of configuration spaces of trees"};
	app.require_subcommand(1);

	CommonOptions betti_common;
	bool betti_oracle = false;
	long long betti_max_cells = 200000;
	CLI::App* betti_cmd = app.add_subcommand("betti", "Betti numbers from the discrete Morse matching");
	add_common(betti_cmd, betti_common, {"text", "json", "csv"});
	betti_cmd->add_flag("--oracle", betti_oracle, "Cross-check against boundary-matrix ranks");
	betti_cmd->add_option("--max-cells", betti_max_cells, "Oracle cell budget per dimension")
	    ->check(CLI::PositiveNumber);

	CommonOptions classify_common;
	std::string cell_text;
	CLI::App* classify_cmd =
	    app.add_subcommand("classify", "Matching status of one cell, with its partner");
	add_common(classify_cmd, classify_common, {"text", "json"});
	classify_cmd->add_option("cell", cell_text, "Cell in text form, e.g. \"{v4, e7, v8, v9}\"")
	    ->required();

	CommonOptions cup_common;
	CLI::App* cup_cmd =
	    app.add_subcommand("cup-table", "Products of dual critical 1-cells in mod-2 cohomology");
	add_common(cup_cmd, cup_common, {"text", "json", "csv", "dot"});

	CommonOptions raag_common;
	bool raag_witness = false;
	CLI::App* raag_cmd =
	    app.add_subcommand("raag", "Is the tree braid group right-angled Artin?");
	add_common(raag_cmd, raag_common, {"text", "json"});
	raag_cmd->add_flag("--witness", raag_witness,
	                   "Also search the product graph for a non-flag triangle (diagnostic)");

	CommonOptions oracle_common;
	bool oracle_smith = false;
	long long oracle_max_cells = 200000;
	CLI::App* oracle_cmd =
	    app.add_subcommand("oracle", "Brute-force homology from boundary-matrix ranks");
	add_common(oracle_cmd, oracle_common, {"text", "json", "csv"});
	oracle_cmd->add_flag("--smith", oracle_smith, "Also compute integral elementary divisors");
	oracle_cmd->add_option("--max-cells", oracle_max_cells, "Cell budget per dimension")
	    ->check(CLI::PositiveNumber);

	std::vector<const char*> argv;
	argv.push_back("treebraid");
	for (const std::string& a : args)
		argv.push_back(a.c_str());

	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e, out, err);
		return code == 0 ? 0 : 2;
	}

	try {
		if (betti_cmd->parsed())
			return run_betti(betti_common, betti_oracle, betti_max_cells, out, err);
		if (classify_cmd->parsed())
			return run_classify(classify_common, cell_text, out);
		if (cup_cmd->parsed())
			return run_cup_table(cup_common, out);
		if (raag_cmd->parsed())
			return run_raag(raag_common, raag_witness, out);
		if (oracle_cmd->parsed())
			return run_oracle(oracle_common, oracle_smith, oracle_max_cells, out);
	} catch (const Error& e) {
		err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
		return exit_code_for(e.code());
	} catch (const std::exception& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	}
	err << "no subcommand selected\n";
	return 2;
}

} // namespace treebraid::cli
