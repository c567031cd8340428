#pragma once

#include <string_view>

#include "macdual/polynomial.hpp"

namespace macdual {

/// Parses `+ - * ^`, parentheses, integers and rational literals (`3/2`).
/// Identifiers must be ring variables (or their upper-case dual names when
/// `notation` is Dual). Errors are thrown as ErrorKind::Parse with
/// "line:column" positions; `line` is the position of `text` in its file.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text,
                            Polynomial::Notation notation = Polynomial::Notation::Ring,
                            std::size_t line = 1);

}  // namespace macdual
