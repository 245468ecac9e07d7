#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace latcode {

// Shape mismatches between operands (ragged rows, different ambient dimension).
class shape_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured budget (enumeration size, search size) would be exceeded.
// The message names the limit and how to override it.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Cover input contains a cycle, so it does not describe a poset.
class not_a_poset_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The poset is valid but some pair lacks a unique least upper bound or
// greatest lower bound; carries the offending pair.
class not_a_lattice_error : public std::invalid_argument {
public:
    not_a_lattice_error(std::string msg, int x, int y)
        : std::invalid_argument(std::move(msg)), pair_{x, y} {}
    std::pair<int, int> pair() const { return pair_; }

private:
    std::pair<int, int> pair_;
};

// An operation was called outside its stated precondition.
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two methods that must agree (an identity scan and a forbidden-sublattice
// search, or a criterion and its oracle) disagreed: an internal bug trap.
class consistency_fault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A code operand that is not a member of the code.
class membership_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Vectors expected to be linearly independent are not.
class rank_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Block structure is not a partition of the expected index set.
class partition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace latcode
