#ifndef MBD_ERRORS_HPP
#define MBD_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mbd {

/// Graph or move argument outside its domain.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Requested construction would exceed the vertex-set bit width.
struct CapacityExceeded : std::length_error {
    using std::length_error::length_error;
};

struct NoSuchEdge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Move-generation or move-application on a position that already has a winner.
struct DecidedPosition : std::logic_error {
    using std::logic_error::logic_error;
};

struct IllegalMove : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A configured search budget (nodes, table entries, wall clock) ran out.
struct ResourceLimit : std::runtime_error {
    std::uint64_t nodes_explored;
    explicit ResourceLimit(const std::string& what, std::uint64_t nodes = 0)
        : std::runtime_error(what), nodes_explored(nodes) {}
};

/// Certificate requested for a player the solver proved to be losing.
struct NotAWinner : std::logic_error {
    using std::logic_error::logic_error;
};

/// Strategy certificate lacks an entry for a reachable position.
struct IncompleteCertificate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidCertificate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// product_decomposition called on a factor without a nontrivial path cover.
struct NoCover : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfDomain : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace mbd

#endif
