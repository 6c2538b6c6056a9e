#ifndef MOMILP_ERRORS_HPP
#define MOMILP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace momilp {

/// Malformed arguments to a library operation (dimension mismatches etc).
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Problem-file syntax or validation failure; carries a 1-based line number
/// (0 when the error is not tied to a specific line).
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what : what),
          line(line_) {}
};

/// A precondition of the solve pipeline is violated (unbounded objective
/// image, non-pointed polyhedron, phase invariant failure).
struct PipelineError : std::runtime_error {
    explicit PipelineError(const std::string& what) : std::runtime_error(what) {}
};

/// Configured enumeration limit exceeded (slice count, grid size, carving budget).
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested slice has no feasible continuous completion.
struct SliceInfeasibleError : std::runtime_error {
    explicit SliceInfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// Two carved pieces mark each other as dominated; indicates a carving bug upstream.
struct MutualDominanceError : std::runtime_error {
    explicit MutualDominanceError(const std::string& what) : std::runtime_error(what) {}
};

/// Output format does not support the objective count.
struct UnsupportedDimensionError : std::runtime_error {
    explicit UnsupportedDimensionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace momilp

#endif
