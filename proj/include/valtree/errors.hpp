#ifndef VALTREE_ERRORS_HPP
#define VALTREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace valtree {

// Base class for all library errors. Subclasses mirror the failure modes of
// the individual operations so callers can catch what they can recover from.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A designated-root computation ran out of p-adic precision. Retryable with
// a higher bound.
struct precision_exhausted : error {
    explicit precision_exhausted(const std::string& msg) : error(msg) {}
};

// v̄(a−b) is not computable for this pair of centers in the supported
// fragment of the closure metric.
struct unsupported_center_pair : error {
    explicit unsupported_center_pair(const std::string& msg) : error(msg) {}
};

// The bounded residue-class search for a critical radius hit its cap.
// Carries the best certified lower bound found so far (as a string, since
// the caller usually just reports it).
struct search_bound_exceeded : error {
    std::string best_lower_bound;
    search_bound_exceeded(const std::string& msg, std::string best)
        : error(msg), best_lower_bound(std::move(best)) {}
};

struct value_not_above : error {
    explicit value_not_above(const std::string& msg) : error(msg) {}
};

struct not_eps_maximal : error {
    explicit not_eps_maximal(const std::string& msg) : error(msg) {}
};

// The randomized multiplicativity validator rejected an augmentation
// candidate: the polynomial is almost surely not a key polynomial.
struct validation_failed : error {
    explicit validation_failed(const std::string& msg) : error(msg) {}
};

struct gamma_not_above_family : error {
    explicit gamma_not_above_family(const std::string& msg) : error(msg) {}
};

struct unstable_witness_missing : error {
    explicit unstable_witness_missing(const std::string& msg) : error(msg) {}
};

struct not_abstract_kp : error {
    explicit not_abstract_kp(const std::string& msg) : error(msg) {}
};

struct not_comparable : error {
    explicit not_comparable(const std::string& msg) : error(msg) {}
};

struct no_factor_matches : error {
    explicit no_factor_matches(const std::string& msg) : error(msg) {}
};

struct not_squarefree : error {
    explicit not_squarefree(const std::string& msg) : error(msg) {}
};

// Input is syntactically or semantically invalid (bad parse, non-monic
// divisor, composite base, missing certificate, ...).
struct invalid_input : error {
    explicit invalid_input(const std::string& msg) : error(msg) {}
};

}  // namespace valtree

#endif
