#include "treebraid/errors.hpp"

namespace treebraid {

const char* error_code_name(ErrorCode code) {
	switch (code) {
	case ErrorCode::not_a_tree: return "NotATree";
	case ErrorCode::root_degree_invalid: return "RootDegreeInvalid";
	case ErrorCode::same_vertex: return "SameVertex";
	case ErrorCode::too_few_vertices: return "TooFewVertices";
	case ErrorCode::not_sufficiently_subdivided: return "NotSufficientlySubdivided";
	case ErrorCode::zero_dimensional: return "ZeroDimensional";
	case ErrorCode::dimension_mismatch: return "DimensionMismatch";
	case ErrorCode::not_an_edge_of_cell: return "NotAnEdgeOfCell";
	case ErrorCode::vertex_not_in_cell: return "VertexNotInCell";
	case ErrorCode::edge_not_in_cell: return "EdgeNotInCell";
	case ErrorCode::wrong_status: return "WrongStatus";
	case ErrorCode::stabilization_guard_exceeded: return "StabilizationGuardExceeded";
	case ErrorCode::morse_boundary_nonzero: return "MorseBoundaryNonzero";
	case ErrorCode::not_a_cocycle: return "NotACocycle";
	case ErrorCode::duplicate_class: return "DuplicateClass";
	case ErrorCode::mixed_dimensions: return "MixedDimensions";
	case ErrorCode::host_linear: return "HostLinear";
	case ErrorCode::host_too_small: return "HostTooSmall";
	case ErrorCode::filler_collision: return "FillerCollision";
	case ErrorCode::parse_error: return "ParseError";
	case ErrorCode::resource_bound: return "ResourceBound";
	case ErrorCode::invalid_argument: return "InvalidArgument";
	case ErrorCode::internal_check_failed: return "InternalCheckFailed";
	}
	return "UnknownError";
}

} // namespace treebraid
