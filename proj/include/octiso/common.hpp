/** @file common.hpp
 *  Shared error types for exact-arithmetic failures and contract violations.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace octiso {

/// Requested inverse of a non-unit; carries the offending element (for matrices, the determinant).
struct not_invertible : std::runtime_error {
    std::string element;
    explicit not_invertible(std::string det)
        : std::runtime_error("not invertible, determinant/element = " + det), element(std::move(det)) {}
};

/// Inconsistent system, or a search that provably exhausted its space.
struct no_solution : std::runtime_error {
    no_solution() : std::runtime_error("no solution") {}
    explicit no_solution(const std::string& what) : std::runtime_error("no solution: " + what) {}
};

/// Malformed ring spec, scalar literal, or serialized object.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

/// Caller violated a documented precondition.
struct precondition_error : std::logic_error {
    explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw precondition_error(what);
}

} // namespace octiso
