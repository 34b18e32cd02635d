#pragma once

#include "hm/syntax/term.hpp"

#include <set>
#include <string>

namespace hm::syntax::detail {

std::set<std::string> free_var_set(const TermPtr& t);
void free_syms(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out);
// Exact structural identity, bound names included.
bool identical(const TermPtr& s, const TermPtr& t);
// Whether an Iter node counted by `binder` occurs free in t.
bool counts_over(const TermPtr& t, const std::string& binder);
// nf(f̲^count x̲ x̲₁ … x̲_k) for an Iter node.
TermPtr iterate(const Term& it, std::uint64_t count);

}  // namespace hm::syntax::detail
