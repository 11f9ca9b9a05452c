#pragma once

#include <string>

#include "wreathlab/budget.hpp"
#include "wreathlab/group.hpp"

namespace wreathlab {

/// Parse error with a 0-based position into the input string.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

/// Group-expression mini-language:
///   expr    := factor ('*' factor)*                 direct product
///   factor  := atom | wr | '(' expr ')'
///   wr      := 'wr' '(' expr (',' expr)* ';' ('desc'|'asc') ')'
///   atom    := 'E' | 'C'<n> (n>=2) | 'D'<n> (n>=2, order 2n) | 'Q8' | 'S3' | 'A4'
/// Whitespace is ignored everywhere. 'C1' is rejected: the trivial group is
/// the atom 'E'.
GroupPtr parse_group_expression(const std::string& text, const Budget& budget = default_budget());

}  // namespace wreathlab
