#include "hm/cli/cli.hpp"

#include "hm/dcp/dcp.hpp"
#include "hm/games/validate.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hm::cli {

namespace {

using nlohmann::json;
using syntax::TypedTerm;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "table";
    std::string ctx_text;
    std::string probes;
    std::size_t max_play_len = 0;
    unsigned max_copy_index = 0;
    std::size_t fuel = 0;

    bool as_json() const { return format == "json"; }

    ProbeBounds bounds() const {
        ProbeBounds b;
        if (const char* env = std::getenv("HIDDENMOVES_BOUNDS")) {
            json j;
            try {
                j = json::parse(env);
            } catch (const json::exception& e) {
                throw CLI::ValidationError("HIDDENMOVES_BOUNDS", e.what());
            }
            try {
                b = bounds_from_json(j, b);
            } catch (const DomainError& e) {
                throw CLI::ValidationError("HIDDENMOVES_BOUNDS", e.what());
            }
        }
        if (!probes.empty()) b.numeral_probes = parse_probes(probes);
        if (max_play_len) b.max_play_len = max_play_len;
        if (max_copy_index) b.max_copy_index = max_copy_index;
        if (fuel) b.fuel = fuel;
        return b;
    }

    // "0..8" or "0,2,5".
    static std::vector<std::uint64_t> parse_probes(const std::string& s) {
        std::vector<std::uint64_t> out;
        try {
            auto dots = s.find("..");
            if (dots != std::string::npos) {
                std::uint64_t lo = std::stoull(s.substr(0, dots)), hi = std::stoull(s.substr(dots + 2));
                if (lo > hi) throw std::invalid_argument("empty range");
                for (std::uint64_t n = lo; n <= hi; ++n) out.push_back(n);
            } else {
                std::stringstream ss(s);
                std::string item;
                while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
            }
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("--probes", "expected a range a..b or a comma-separated list");
        }
        if (out.empty()) throw CLI::ValidationError("--probes", "no probes given");
        return out;
    }

    syntax::Context context() const {
        syntax::Context ctx;
        std::stringstream ss(ctx_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos) throw CLI::ValidationError("--ctx", "expected x:T entries");
            auto trim = [](std::string s) {
                s.erase(0, s.find_first_not_of(" \t"));
                s.erase(s.find_last_not_of(" \t") + 1);
                return s;
            };
            ctx.emplace_back(trim(item.substr(0, colon)), syntax::parse_ty(item.substr(colon + 1)));
        }
        return ctx;
    }
};

std::string read_term(const std::string& arg, std::istream& in) {
    if (arg != "-") return arg;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TypedTerm load(const Common& c, const std::string& text, std::istream& in) {
    syntax::Context ctx = c.context();
    return syntax::typecheck(ctx, syntax::parse(read_term(text, in), ctx));
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// --- commands -------------------------------------------------------------------------------

int cmd_check(const Common& c, const std::string& text, Streams& io) {
    TypedTerm j = load(c, text, io.in);
    if (c.as_json()) {
        emit(io.out, {{"term", syntax::print(j.raw)},
                      {"type", syntax::print_ty(j.ty)},
                      {"exec", j.exec},
                      {"class", syntax::to_string(j.cls)}});
    } else {
        io.out << "type  " << syntax::print_ty(j.ty) << "\nexec  " << j.exec << "\nclass " << syntax::to_string(j.cls)
               << '\n';
    }
    return 0;
}

int cmd_step(const Common& c, const std::string& text, int count, Streams& io) {
    TypedTerm j = load(c, text, io.in);
    json steps = json::array();
    auto show = [&](const TypedTerm& t) {
        if (c.as_json())
            steps.push_back({{"term", syntax::print(t.raw)}, {"exec", t.exec}});
        else
            io.out << "[" << t.exec << "] " << syntax::print(t.raw) << '\n';
    };
    show(j);
    for (int k = 0; (count < 0 || k < count) && j.exec > 0; ++k) {
        j = syntax::op_step(j).term;
        show(j);
    }
    if (c.as_json()) emit(io.out, {{"steps", steps}});
    return 0;
}

int cmd_nf(const Common& c, const std::string& text, Streams& io) {
    TypedTerm j = load(c, text, io.in);
    syntax::TermPtr v = syntax::normal_form(j.raw);
    if (c.as_json())
        emit(io.out, {{"value", syntax::print(v)}, {"type", syntax::print_ty(j.ty)}});
    else
        io.out << syntax::print(v) << '\n';
    return 0;
}

json plays_json(const PlaySet& ps) {
    json out = json::array();
    for (const auto& p : ps.plays) out.push_back(to_json(p));
    return out;
}

void print_plays(std::ostream& out, const PlaySet& ps) {
    for (const auto& p : ps.plays) out << (p.empty() ? "ε" : render(p)) << '\n';
    for (const auto& [p, why] : ps.inconclusive) out << "inconclusive at " << render(p) << ": " << why << '\n';
}

int cmd_eval(const Common& c, const std::string& text, Streams& io) {
    TypedTerm j = load(c, text, io.in);
    ProbeBounds b = c.bounds();
    Morphism m = interp::interp_term(j);
    auto r = evaluate_to_value(m, b.fuel);
    if (std::holds_alternative<Divergent>(r)) throw Failure("evaluation did not reach a value within the fuel");
    const Evaluated& e = std::get<Evaluated>(r);
    PlaySet ps = plays(*e.value.strat, b);
    if (c.as_json()) {
        emit(io.out, {{"hiding_steps", e.steps}, {"exec", j.exec}, {"plays", plays_json(ps)}});
    } else {
        io.out << "hiding steps " << e.steps << " (exec " << j.exec << ")\n";
        print_plays(io.out, ps);
    }
    return ps.inconclusive.empty() ? 0 : 1;
}

int cmd_interpret(const Common& c, const std::string& text, bool trace, bool raw, std::uint64_t ctx_answer,
                  const std::vector<std::uint64_t>& inputs, Streams& io) {
    TypedTerm j = load(c, text, io.in);
    Morphism m = interp::interp_term(j);
    interp::DegreeAudit a = interp::degree_audit(m, j);
    json out = {{"term", syntax::print(j.raw)},
                {"type", syntax::print_ty(j.ty)},
                {"exec", j.exec},
                {"max_degree", a.max_degree},
                {"audit_ok", a.ok},
                {"audit_mismatches", a.mismatches}};
    if (!c.as_json())
        io.out << "type " << syntax::print_ty(j.ty) << ", exec " << j.exec << ", max degree " << a.max_degree
               << (a.ok ? ", audit ok" : ", audit FAILED") << '\n';
    for (const auto& mm : a.mismatches) io.err << "audit: " << mm << '\n';
    if (trace) {
        auto oracle = [&](const JSeq& u, std::size_t q) -> std::optional<std::uint64_t> {
            std::string col = interp::column_of(u[q]);
            if (col.rfind("arg", 0) == 0) {
                std::size_t k = std::stoul(col.substr(3));
                return k <= inputs.size() ? inputs[k - 1] : 0;
            }
            return ctx_answer;
        };
        interp::Drive d = interp::drive(*m.strat, oracle, c.bounds().fuel);
        auto cells = interp::merged_cells(d.play);
        if (c.as_json()) {
            out["play"] = to_json(d.play);
            json cs = json::array();
            for (const auto& cell : cells) cs.push_back({{"column", cell.column}, {"move", cell.move}});
            out["cells"] = cs;
            out["answered"] = d.answered;
        } else {
            io.out << (raw ? render_table(*m.strat, d.play) : interp::render_columns(cells));
        }
    }
    if (c.as_json()) emit(io.out, out);
    return a.ok ? 0 : 1;
}

int cmd_plays(const Common& c, const std::string& text, const std::string& hide, Streams& io) {
    TypedTerm j = load(c, text, io.in);
    ProbeBounds b = c.bounds();
    StrategyPtr s = interp::interp_term(j).strat;
    if (!hide.empty()) {
        Depth d = hide == "omega" ? Depth::omega() : Depth(static_cast<unsigned>(std::stoul(hide)));
        s = hide_strategy(s, d, b.fuel);
    }
    PlaySet ps = plays(*s, b);
    if (c.as_json())
        emit(io.out, {{"plays", plays_json(ps)}, {"inconclusive", ps.inconclusive.size()}});
    else
        print_plays(io.out, ps);
    return ps.inconclusive.empty() ? 0 : 1;
}

// Interactive session: the human plays Opponent.
int cmd_play(const Common& c, const std::string& text, Streams& io) {
    TypedTerm j = load(c, text, io.in);
    ProbeBounds b = c.bounds();
    StrategyPtr s = interp::interp_term(j).strat;
    auto show = [&](const Entry& e) {
        std::string t = to_string(e.move);
        if (e.label.degree > 0) {
            t = "  " + t + "_" + std::to_string(e.label.degree);
            if (io.color) t = "\x1b[2m" + t + "\x1b[0m";
        }
        io.out << (e.label.owner == Owner::O ? "O " : "P ") << t;
        if (e.pointer) io.out << "  (→ " << *e.pointer << ")";
        io.out << '\n';
    };
    JSeq u;
    io.out << "type " << syntax::print_ty(j.ty) << "; enter a move, #k for menu item k, :hide d, :quit\n";
    std::string line;
    while (true) {
        std::vector<Entry> menu = opponent_probes(*s, u, b, false);
        if (menu.empty()) {
            io.out << "no Opponent moves within the bounds\n";
            return 0;
        }
        for (std::size_t k = 0; k < menu.size(); ++k) {
            io.out << "  #" << k << " " << to_string(menu[k].move);
            if (menu[k].pointer) io.out << " → " << *menu[k].pointer;
            io.out << '\n';
        }
        io.out << "> " << std::flush;
        if (!std::getline(io.in, line)) return 0;
        if (line == ":quit") return 0;
        if (line.rfind(":hide", 0) == 0) {
            std::string d = line.size() > 6 ? line.substr(6) : "1";
            unsigned depth = d == "omega" ? s->game()->mu() : static_cast<unsigned>(std::stoul(d));
            io.out << render(hide_jseq(u, depth)) << '\n';
            continue;
        }
        std::optional<std::size_t> pick;
        if (!line.empty() && line[0] == '#') {
            std::size_t k = std::stoul(line.substr(1));
            if (k < menu.size()) pick = k;
        } else {
            std::vector<std::size_t> hits;
            for (std::size_t k = 0; k < menu.size(); ++k)
                if (to_string(menu[k].move) == line) hits = {k};
            if (hits.empty())
                for (std::size_t k = 0; k < menu.size(); ++k)
                    if (menu[k].move.base == line) hits.push_back(k);
            if (hits.size() == 1) pick = hits[0];
        }
        if (!pick) {
            io.out << "not a legal move here (or ambiguous); choose from the menu\n";
            continue;
        }
        u.push_back(menu[*pick]);
        show(u.back());
        std::size_t before = u.size();
        RunOutcome r = run_to_reply(*s, u, b.fuel);
        for (std::size_t k = before; k < u.size(); ++k) show(u[k]);
        if (r != RunOutcome::Reply) {
            io.out << "Player has no reply\n";
            return r == RunOutcome::Undefined ? 0 : 1;
        }
        if (u.back().label.kind == Kind::A && u.back().pointer == std::size_t{0}) {
            io.out << "play complete\n";
            return 0;
        }
    }
}

int cmd_verify(const Common& c, const std::string& text, std::uint64_t seed, std::size_t count,
               const syntax::GenOptions& g, Streams& io) {
    ProbeBounds b = c.bounds();
    if (!text.empty()) {
        dcp::TraceReport r = dcp::verify_trace(load(c, text, io.in), b);
        if (c.as_json()) {
            emit(io.out, to_json(r));
        } else {
            for (std::size_t k = 0; k < r.steps.size(); ++k) {
                const auto& s = r.steps[k];
                io.out << "step " << k + 1 << ": " << syntax::print(s.before.raw) << "\n     → "
                       << syntax::print(s.after.raw) << "\n     hide " << to_string(s.hide_matches.tag) << ", finer "
                       << to_string(s.strictly_finer.tag) << (s.passed() ? "  PASS" : "  FAIL") << '\n';
            }
            io.out << "chain:";
            for (std::size_t k = 0; k < r.chain.size(); ++k) io.out << (k ? " ↦ " : " ") << r.chain[k];
            io.out << "\nterminal " << to_string(r.terminal.tag) << "\n" << (r.passed() ? "PASS" : "FAIL") << '\n';
        }
        return r.passed() ? 0 : 1;
    }
    dcp::CorpusReport r = dcp::verify_corpus(seed, count, g, b);
    if (c.as_json()) {
        json j = to_json(r);
        j.erase("seconds");
        emit(io.out, j);
    } else {
        io.out << r.programs << " programs, " << r.steps << " steps, " << r.failed_steps << " failed, "
               << r.inconclusive << " inconclusive, " << r.exec_mismatches << " exec mismatches\nby height:";
        for (std::size_t h = 0; h < r.by_height.size(); ++h) io.out << " " << h << ":" << r.by_height[h];
        io.out << '\n';
        for (const auto& t : r.failures) io.out << "FAIL " << syntax::print(t.start.raw) << '\n';
        io.out << (r.passed() ? "PASS" : "FAIL") << '\n';
    }
    return r.passed() ? 0 : 1;
}

int cmd_validate(const Common& c, const std::string& type, const std::string& game_file, const std::string& text,
                 std::size_t max_length, Streams& io) {
    GamePtr g;
    if (!game_file.empty()) {
        std::ifstream f(game_file);
        if (!f) throw Failure("cannot read " + game_file);
        g = game_from_json(json::parse(f));
    } else if (!type.empty()) {
        g = interp::interp_type(syntax::parse_ty(type));
    } else if (!text.empty()) {
        g = interp::interp_term(load(c, text, io.in)).strat->game();
    } else {
        throw CLI::ValidationError("validate-game", "give --type, --game or a term");
    }
    ProbeBounds b = c.bounds();
    PositionBounds pb{b.moves(), max_length};
    auto positions = enumerate_positions(*g, pb);
    GameDiagnostics d = validate_game(*g, positions, b.moves());
    if (c.as_json()) {
        json v = json::array();
        for (const auto& x : d.violations) v.push_back({{"axiom", x.axiom}, {"detail", x.detail}});
        emit(io.out, {{"positions", positions.size()}, {"probed", d.probed}, {"violations", v}, {"ok", d.ok()}});
    } else {
        io.out << positions.size() << " positions, " << d.probed << " probed\n";
        for (const auto& x : d.violations) io.out << x.axiom << ": " << x.detail << '\n';
        io.out << (d.ok() ? "PASS" : "FAIL") << '\n';
    }
    return d.ok() ? 0 : 1;
}

int cmd_laws(const Common& c, std::size_t samples, Streams& io) {
    auto all = default_law_samples();
    if (samples && samples < all.size()) all.resize(samples);
    auto reports = check_ccboc_laws(all, c.bounds());
    bool ok = true;
    json out = json::array();
    for (const auto& r : reports) {
        ok = ok && r.holds;
        if (c.as_json())
            out.push_back(to_json(r));
        else
            io.out << (r.holds ? "ok   " : "FAIL ") << r.law << (r.detail.empty() ? "" : "  " + r.detail) << '\n';
    }
    if (c.as_json()) emit(io.out, {{"samples", all.size()}, {"laws", out}, {"ok", ok}});
    return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io) {
    CLI::App app{"Dynamic game semantics: terms, plays, hiding and the dynamic correspondence", "hiddenmoves"};
    app.require_subcommand(1);
    Common c;
    auto common = [&c](CLI::App* sub) {
        sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--ctx", c.ctx_text, "Typing context, e.g. \"x:N, f:N=>N\"");
        sub->add_option("--probes", c.probes, "Numeral probes: a..b or a,b,c");
        sub->add_option("--max-play-len", c.max_play_len, "Bound on external play length")->check(CLI::PositiveNumber);
        sub->add_option("--max-copy-index", c.max_copy_index, "Bound on Opponent copy indices")
            ->check(CLI::PositiveNumber);
        sub->add_option("--fuel", c.fuel, "Internal steps between external moves")->check(CLI::PositiveNumber);
    };
    std::string term;
    auto with_term = [&](CLI::App* sub, bool required = true) {
        common(sub);
        auto* o = sub->add_option("term", term, "Term text, or - to read stdin");
        if (required) o->required();
    };

    auto* check = app.add_subcommand("check", "Typecheck; print type and execution number");
    with_term(check);
    int step_count = -1;
    auto* step = app.add_subcommand("step", "Apply the operational step, printing each configuration");
    with_term(step);
    step->add_option("-n", step_count, "Number of steps (default: to the value)");
    auto* nf = app.add_subcommand("nf", "Print the normal form");
    with_term(nf);
    auto* eval = app.add_subcommand("eval", "Interpret, hide to a value and print its plays");
    with_term(eval);
    bool trace = false, raw = false;
    std::uint64_t ctx_answer = 0;
    std::vector<std::uint64_t> inputs;
    auto* interpret = app.add_subcommand("interpret", "Interpret a term; audit degrees; --trace renders a play");
    with_term(interpret);
    interpret->add_flag("--trace", trace, "Drive one play and render it in columns");
    interpret->add_flag("--raw", raw, "Render with construction tags instead of semantic columns");
    interpret->add_option("--ctx-answer", ctx_answer, "Opponent's answer to context questions");
    interpret->add_option("--input", inputs, "Opponent's answers to argument questions, in argument order");
    std::string hide;
    auto* plays_cmd = app.add_subcommand("plays", "List the plays of the interpretation");
    with_term(plays_cmd);
    plays_cmd->add_option("--hide", hide, "Hide first: a degree or omega");
    auto* play = app.add_subcommand("play", "Interactive session against the interpretation");
    with_term(play);
    std::uint64_t seed = 1;
    std::size_t count = 100;
    syntax::GenOptions gen;
    auto* verify = app.add_subcommand("verify-dcp", "Check one hiding step per operational step");
    with_term(verify, false);
    verify->add_option("--seed", seed, "Corpus seed");
    verify->add_option("--count", count, "Corpus size")->check(CLI::PositiveNumber);
    verify->add_option("--max-size", gen.max_size, "Term size bound")->check(CLI::PositiveNumber);
    verify->add_option("--max-numeral", gen.max_numeral, "Largest numeral in generated terms");
    std::string type, game_file;
    std::size_t max_length = 4;
    auto* validate = app.add_subcommand("validate-game", "Check the game axioms on enumerated positions");
    with_term(validate, false);
    validate->add_option("--type", type, "Validate the game of a type");
    validate->add_option("--game", game_file, "Validate a game given as construction-tree JSON");
    validate->add_option("--max-length", max_length, "Position length bound")->check(CLI::PositiveNumber);
    std::size_t samples = 0;
    auto* laws = app.add_subcommand("laws", "Check the CCBoC laws on sample morphisms");
    common(laws);
    laws->add_option("--samples", samples, "Use the first n sample triples");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        io.out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        io.out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        io.err << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (*check) return cmd_check(c, term, io);
        if (*step) return cmd_step(c, term, step_count, io);
        if (*nf) return cmd_nf(c, term, io);
        if (*eval) return cmd_eval(c, term, io);
        if (*interpret) return cmd_interpret(c, term, trace, raw, ctx_answer, inputs, io);
        if (*plays_cmd) return cmd_plays(c, term, hide, io);
        if (*play) return cmd_play(c, term, io);
        if (*verify) return cmd_verify(c, term, seed, count, gen, io);
        if (*validate) return cmd_validate(c, type, game_file, term, max_length, io);
        if (*laws) return cmd_laws(c, samples, io);
    } catch (const CLI::ValidationError& e) {
        io.err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        if (c.as_json())
            emit(io.out, {{"error", e.what()}});
        io.err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace hm::cli
