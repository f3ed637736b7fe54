#pragma once

#include <memory>
#include <string_view>

#include "redalg/coset.hpp"

namespace redalg::cli {

/// Expression grammar over one context:
///
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/' | '<>') unary)*
///   unary   := '-' unary | atom ('^' integer)?
///   atom    := integer | variable | generator | '(' sum ')'
///
/// Generators are letter names such as E[1,0], bF[0,1], bH[2], x[1], d[3].
/// Variables are the Cartan variable names of the algebra (h1, h2, ...).
/// `*` multiplies in the smash product, `/` divides by a Cartan
/// coefficient and `<>` is the diamond product of coset representatives.
/// Whitespace is insignificant. Errors throw ParseError with a byte offset.
Element parse_element(std::string_view text, const std::shared_ptr<const Context>& ctx);

/// The coset of the parsed element.
CosetElement parse_coset(std::string_view text, const std::shared_ptr<const Context>& ctx);

}  // namespace redalg::cli
