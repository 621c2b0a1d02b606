#pragma once

#include <stdexcept>
#include <string>

namespace treebraid {

// Every library failure mode has a stable code so callers (and the CLI exit
// mapping) can react without parsing message text.
enum class ErrorCode {
	not_a_tree,
	root_degree_invalid,
	same_vertex,
	too_few_vertices,
	not_sufficiently_subdivided,
	zero_dimensional,
	dimension_mismatch,
	not_an_edge_of_cell,
	vertex_not_in_cell,
	edge_not_in_cell,
	wrong_status,
	stabilization_guard_exceeded,
	morse_boundary_nonzero,
	not_a_cocycle,
	duplicate_class,
	mixed_dimensions,
	host_linear,
	host_too_small,
	filler_collision,
	parse_error,
	resource_bound,
	invalid_argument,
	internal_check_failed,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
	Error(ErrorCode code, const std::string& what)
	    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

	ErrorCode code() const noexcept { return code_; }

private:
	ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Internal consistency assertion: used where the theory guarantees a
// property and a violation means a bug, not bad input.
inline void check_internal(bool ok, const char* what) {
	if (!ok) fail(ErrorCode::internal_check_failed, what);
}

} // namespace treebraid
