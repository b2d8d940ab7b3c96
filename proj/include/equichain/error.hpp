#ifndef EQUICHAIN_ERROR_HPP
#define EQUICHAIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace equichain {

// Failure classes surfaced by the library. CLI maps parse_error to exit
// code 2 and out_of_range to exit code 3; everything else is a usage error.
enum class Errc {
    invalid_tree,
    invalid_leaf,
    degenerate_quartet,
    too_few_leaves,
    not_planar,
    too_small,
    arity_mismatch,
    instance_mismatch,
    ring_mismatch,
    zero_polynomial,
    bad_renaming,
    not_homogeneous,
    out_of_range,
    no_ordering,
    not_monomial,
    not_concrete,
    not_a_chain,
    no_such_functor,
    parse_error,
    invalid_argument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace equichain

#endif
