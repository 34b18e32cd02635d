#include "hm/dcp/dcp.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <thread>

namespace hm::dcp {

using syntax::TermKind;
using syntax::TermPtr;
using syntax::TypedTerm;

StepReport check_step(const TypedTerm& j, const ProbeBounds& b, const interp::Options& o) {
    if (j.cls == syntax::TermClass::Value || j.exec == 0) throw DomainError("check_step: the term is already a value");
    StepReport r;
    r.before = j;
    r.after = syntax::op_step(j).term;
    r.bounds = b;
    Morphism m = interp::interp_term(j, o);
    Morphism n = interp::interp_term(r.after, o);
    r.hide_matches = strat_equiv(*hide_strategy(m.strat, 1, b.fuel), *n.strat, b);
    r.strictly_finer = strat_equiv(*m.strat, *n.strat, b);
    return r;
}

bool TraceReport::passed() const {
    if (!terminal.equal() || steps.size() != start.exec) return false;
    return std::all_of(steps.begin(), steps.end(), [](const StepReport& s) { return s.passed(); });
}

TraceReport verify_trace(const TypedTerm& j, const ProbeBounds& b, const interp::Options& o) {
    TraceReport r;
    r.start = j;
    TypedTerm cur = j;
    r.chain.push_back(play_chain(*interp::interp_term(cur, o).strat));
    while (cur.exec > 0) {
        r.steps.push_back(check_step(cur, b, o));
        cur = r.steps.back().after;
        r.chain.push_back(play_chain(*interp::interp_term(cur, o).strat));
    }
    Morphism m = interp::interp_term(j, o);
    r.terminal = strat_equiv(*hide_strategy(m.strat, Depth::omega(), b.fuel), *interp::interp_term(cur, o).strat, b);
    return r;
}

std::string play_chain(const Strategy& s, std::uint64_t input) {
    interp::Drive d = interp::drive(s, [input](const JSeq&, std::size_t) { return input; });
    std::vector<std::string> moves;
    for (const auto& c : interp::merged_cells(d.play)) {
        bool answer = c.move != question().base;
        if (answer && !moves.empty() && moves.back() == c.move) continue;
        moves.push_back(c.move);
    }
    std::string out;
    for (const auto& m : moves) out += (out.empty() ? "" : " ") + m;
    return out;
}

unsigned type_height(const syntax::TyPtr& a) {
    if (a->is_nat()) return 0;
    return std::max(type_height(a->dom) + 1, type_height(a->cod));
}

namespace {

unsigned lam_height(const TermPtr& t) {
    unsigned h = 0;
    auto visit = [&h](const TermPtr& s) { h = std::max(h, lam_height(s)); };
    switch (t->kind) {
        case TermKind::Lam:
            h = type_height(t->ty) + 1;
            visit(t->a);
            break;
        case TermKind::App:
            visit(t->a);
            visit(t->b);
            break;
        case TermKind::Case:
            visit(t->a);
            for (const auto& [k, m] : t->fam->overrides) visit(m);
            visit(t->fam->body);
            break;
        case TermKind::Iter:
            visit(t->a);
            visit(t->b);
            for (const auto& x : t->args) visit(x);
            break;
        default: break;
    }
    return h;
}

}  // namespace

unsigned term_height(const TypedTerm& j) { return std::max(type_height(j.ty), lam_height(j.raw)); }

std::vector<CorpusItem> gen_corpus(std::uint64_t seed, std::size_t count, syntax::GenOptions opts) {
    syntax::TermGenerator gen(seed, opts);
    syntax::TyPtr n = syntax::nat_ty();
    const syntax::TyPtr types[3] = {n, syntax::arrow_ty(n, n), syntax::arrow_ty(n, syntax::arrow_ty(n, n))};
    std::vector<CorpusItem> out;
    for (std::size_t i = 0; i < count; ++i) {
        TypedTerm j = syntax::typecheck({}, gen.configuration({}, types[i % 3]));
        out.push_back({j, term_height(j)});
    }
    return out;
}

CorpusReport verify_corpus(std::uint64_t seed, std::size_t count, syntax::GenOptions opts, const ProbeBounds& b) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CorpusItem> items = gen_corpus(seed, count, opts);
    std::vector<TraceReport> traces(items.size());
    // Items are independent; workers take indices round-robin and results are merged by index.
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < items.size(); i += workers) traces[i] = verify_trace(items[i].term, b);
        }));
    for (auto& j : jobs) j.get();
    CorpusReport r;
    r.programs = items.size();
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (r.by_height.size() <= items[i].height) r.by_height.resize(items[i].height + 1);
        ++r.by_height[items[i].height];
        const TraceReport& t = traces[i];
        r.steps += t.steps.size();
        for (const auto& s : t.steps) {
            r.failed_steps += !s.passed();
            r.inconclusive += s.hide_matches.tag == EquivVerdict::Tag::Inconclusive ||
                              s.strictly_finer.tag == EquivVerdict::Tag::Inconclusive;
        }
        r.inconclusive += t.terminal.tag == EquivVerdict::Tag::Inconclusive;
        r.exec_mismatches += t.steps.size() != t.start.exec;
        if (!t.passed()) r.failures.push_back(t);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

nlohmann::json to_json(const StepReport& r) {
    return {{"before", syntax::print(r.before.raw)},
            {"after", syntax::print(r.after.raw)},
            {"exec_before", r.before.exec},
            {"hide_matches", to_json(r.hide_matches)},
            {"strictly_finer", to_json(r.strictly_finer)},
            {"bounds", to_json(r.bounds)},
            {"passed", r.passed()}};
}

nlohmann::json to_json(const TraceReport& r) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : r.steps) steps.push_back(to_json(s));
    return {{"start", syntax::print(r.start.raw)},
            {"exec", r.start.exec},
            {"steps", steps},
            {"terminal", to_json(r.terminal)},
            {"chain", r.chain},
            {"passed", r.passed()}};
}

nlohmann::json to_json(const CorpusReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& t : r.failures) failures.push_back(to_json(t));
    return {{"programs", r.programs},
            {"steps", r.steps},
            {"failed_steps", r.failed_steps},
            {"inconclusive", r.inconclusive},
            {"exec_mismatches", r.exec_mismatches},
            {"by_height", r.by_height},
            {"seconds", r.seconds},
            {"failures", failures},
            {"passed", r.passed()}};
}

}  // namespace hm::dcp
