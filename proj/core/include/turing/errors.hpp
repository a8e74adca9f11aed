#pragma once

#include <stdexcept>
#include <string>

namespace turing {

// Bad inputs: arguments outside the proven parameter ranges, malformed
// lattices, family mismatches. Maps to CLI exit code 2.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// A requested tolerance cannot be met at the configured cutoffs, or an
// iterative scheme failed to settle. Maps to CLI exit code 3.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Zero-count certification could not be completed: a Gram block violates
// Rosser's rule, the Rosser run is too short, a sign was indeterminate, or a
// consistency cross-check failed. Maps to CLI exit code 4.
class certification_error : public std::runtime_error {
public:
    enum class kind {
        rosser_violation,
        insufficient_blocks,
        misaligned_run,
        indeterminate_sign,
        count_mismatch,
    };

    certification_error(kind k, const std::string& what, long block_index = -1)
        : std::runtime_error(what), kind_(k), block_index_(block_index) {}

    kind failure_kind() const noexcept { return kind_; }
    // Start index of the offending Gram block, or -1 if not block-specific.
    long block_index() const noexcept { return block_index_; }

private:
    kind kind_;
    long block_index_;
};

// Report emission failed (unwritable path, closed stream). Maps to CLI exit
// code 5.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace turing
