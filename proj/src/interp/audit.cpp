#include "hm/interp/interp.hpp"

#include <algorithm>

namespace hm::interp {

namespace {

using syntax::Context;
using syntax::Path;
using syntax::PathStep;
using syntax::TermKind;
using syntax::TermPtr;

struct Auditor {
    DegreeAudit& report;

    // Returns the execution number of t; checks every App node against its interpretation.
    unsigned go(const Context& ctx, const TermPtr& t, Path& at) {
        switch (t->kind) {
            case TermKind::Lam: {
                Context inner = ctx;
                inner.emplace_back(t->name, t->ty);
                at.push_back({PathStep::Body});
                unsigned e = go(inner, t->a, at);
                at.pop_back();
                return e;
            }
            case TermKind::App: {
                at.push_back({PathStep::Fn});
                unsigned f = go(ctx, t->a, at);
                at.back() = {PathStep::Arg};
                unsigned x = go(ctx, t->b, at);
                at.pop_back();
                unsigned e = std::max(f, x) + 1;
                ++report.app_nodes;
                unsigned mu = interp_term(ctx, t).strat->game()->mu();
                if (mu != e)
                    report.mismatches.push_back(syntax::to_string(at) + ": exec " + std::to_string(e) + " but degree " +
                                                std::to_string(mu));
                return e;
            }
            case TermKind::Case: {
                at.push_back({PathStep::Scrut});
                go(ctx, t->a, at);
                for (const auto& [k, m] : t->fam->overrides) {
                    at.back() = {PathStep::Override, k};
                    go(ctx, m, at);
                }
                at.pop_back();
                return 0;
            }
            default: return 0;
        }
    }
};

}  // namespace

DegreeAudit degree_audit(const Morphism& m, const syntax::TypedTerm& j) {
    DegreeAudit r;
    r.max_degree = m.strat->game()->mu();
    r.exec = j.exec;
    if (r.max_degree != r.exec)
        r.mismatches.push_back("root: exec " + std::to_string(r.exec) + " but degree " + std::to_string(r.max_degree));
    Path at;
    Auditor{r}.go(j.ctx, j.raw, at);
    r.ok = r.mismatches.empty();
    return r;
}

}  // namespace hm::interp
