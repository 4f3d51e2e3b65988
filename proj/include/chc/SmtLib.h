#pragma once

#include "chc/Sort.h"
#include "chc/Term.h"

#include <string>

namespace chc::smtlib {

/// Quotes a symbol with |...| when it is not a simple SMT-LIB symbol.
std::string quoteSymbol(const std::string& name);

std::string printSort(Sort s);

/// SMT-LIB v2 concrete syntax. Integer negation prints as (- 1), bit-vector
/// literals as #x.../#b..., rationals as decimals or (/ a b).
std::string printTerm(Term t);

} // namespace chc::smtlib
