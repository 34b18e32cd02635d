#include "hm/cli/cli.hpp"
#include "hm/dcp/dcp.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace hm;

namespace {

// Results cross the boundary as JSON text; the Python layer decodes them.
syntax::Context context(const std::vector<std::pair<std::string, std::string>>& ctx) {
    syntax::Context out;
    for (const auto& [x, t] : ctx) out.emplace_back(x, syntax::parse_ty(t));
    return out;
}

syntax::TypedTerm load(const std::string& term, const std::vector<std::pair<std::string, std::string>>& ctx) {
    syntax::Context c = context(ctx);
    return syntax::typecheck(c, syntax::parse(term, c));
}

ProbeBounds bounds(const std::string& j) { return j.empty() ? ProbeBounds{} : bounds_from_json(nlohmann::json::parse(j)); }

using Ctx = std::vector<std::pair<std::string, std::string>>;

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dynamic game semantics: terms, interpretation, hiding and the dynamic correspondence";

    py::register_exception<syntax::SyntaxError>(m, "TermSyntaxError", PyExc_ValueError);
    py::register_exception<syntax::TypeError>(m, "TermTypeError", PyExc_TypeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("check", [](const std::string& t, const Ctx& ctx) {
        auto j = load(t, ctx);
        return nlohmann::json{{"term", syntax::print(j.raw)}, {"type", syntax::print_ty(j.ty)}, {"exec", j.exec},
                              {"class", syntax::to_string(j.cls)}}.dump();
    }, py::arg("term"), py::arg("ctx") = Ctx{});

    m.def("steps", [](const std::string& t, const Ctx& ctx) {
        auto j = load(t, ctx);
        std::vector<std::string> out{syntax::print(j.raw)};
        while (j.exec > 0) {
            j = syntax::op_step(j).term;
            out.push_back(syntax::print(j.raw));
        }
        return out;
    }, py::arg("term"), py::arg("ctx") = Ctx{});

    m.def("nf", [](const std::string& t, const Ctx& ctx) { return syntax::print(syntax::normal_form(load(t, ctx).raw)); },
          py::arg("term"), py::arg("ctx") = Ctx{});

    m.def("plays", [](const std::string& t, const Ctx& ctx, int hide, const std::string& b) {
        StrategyPtr s = interp::interp_term(load(t, ctx)).strat;
        ProbeBounds pb = bounds(b);
        if (hide != 0) s = hide_strategy(s, hide < 0 ? Depth::omega() : Depth(static_cast<unsigned>(hide)), pb.fuel);
        std::vector<std::string> out;
        for (const auto& p : plays(*s, pb).plays) out.push_back(render(p));
        return out;
    }, py::arg("term"), py::arg("ctx") = Ctx{}, py::arg("hide") = 0, py::arg("bounds") = "",
       "Rendered plays of the interpretation; hide < 0 hides at ω.");

    m.def("trace", [](const std::string& t, const Ctx& ctx, std::uint64_t ctx_answer, std::vector<std::uint64_t> inputs) {
        Morphism mm = interp::interp_term(load(t, ctx));
        auto d = interp::drive(*mm.strat, [&](const JSeq& u, std::size_t q) -> std::optional<std::uint64_t> {
            std::string col = interp::column_of(u[q]);
            if (col.rfind("arg", 0) == 0) {
                std::size_t k = std::stoul(col.substr(3));
                return k <= inputs.size() ? inputs[k - 1] : 0;
            }
            return ctx_answer;
        });
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& c : interp::merged_cells(d.play)) cells.push_back({c.column, c.move});
        return nlohmann::json{{"play", to_json(d.play)}, {"cells", cells}, {"answered", d.answered}}.dump();
    }, py::arg("term"), py::arg("ctx") = Ctx{}, py::arg("ctx_answer") = 0, py::arg("inputs") = std::vector<std::uint64_t>{});

    m.def("verify_trace", [](const std::string& t, const Ctx& ctx, const std::string& b) {
        return to_json(dcp::verify_trace(load(t, ctx), bounds(b))).dump();
    }, py::arg("term"), py::arg("ctx") = Ctx{}, py::arg("bounds") = "");

    m.def("verify_corpus", [](std::uint64_t seed, std::size_t count, unsigned max_size, std::uint64_t max_numeral) {
        py::gil_scoped_release release;
        return to_json(dcp::verify_corpus(seed, count, {max_size, max_numeral})).dump();
    }, py::arg("seed") = 1, py::arg("count") = 100, py::arg("max_size") = 8, py::arg("max_numeral") = 5);

    m.def("run_cli", [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = cli::run(args, {in, out, err, false});
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), py::arg("input") = "");
}
