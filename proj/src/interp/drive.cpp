#include "hm/interp/interp.hpp"

#include <algorithm>
#include <sstream>

namespace hm::interp {

Drive drive(const Strategy& s, const Oracle& oracle, std::size_t fuel, std::size_t max_external) {
    Drive d;
    GamePtr g = s.game();
    auto open = opponent_probes(s, {}, ProbeBounds{});
    if (open.size() != 1) throw DomainError("drive: the strategy's game has no unique opening question");
    d.play.push_back(open.front());
    for (std::size_t external = 1; external < max_external; external += 2) {
        d.outcome = run_to_reply(s, d.play, fuel);
        if (d.outcome != RunOutcome::Reply) return d;
        const Entry& reply = d.play.back();
        if (reply.label.kind == Kind::A) {
            d.answered = reply.pointer == std::size_t{0};
            if (d.answered) return d;
            d.outcome = RunOutcome::Broken;
            return d;
        }
        std::size_t q = d.play.size() - 1;
        auto n = oracle(d.play, q);
        if (!n) return d;
        MoveId a = reply.move;
        a.base = numeral(*n).base;
        d.play.push_back(make_entry(*g, std::move(a), q));
    }
    d.outcome = RunOutcome::Fuel;
    return d;
}

std::string column_of(const Entry& e) {
    if (e.label.degree > 0) return "N_" + std::to_string(e.label.degree);
    const auto& p = e.move.path;
    if (p.empty()) return "?";
    if (p[0].kind == TagKind::Left) return "ctx";
    // Result position of A₁ ⇒ … ⇒ A_k ⇒ N: k Right tags, argument j under j−1 Rights then Left.
    std::size_t k = 1;
    while (k < p.size() && p[k].kind == TagKind::Right) ++k;
    if (k < p.size() && p[k].kind == TagKind::Left) return "arg" + std::to_string(k);
    return "res";
}

std::vector<Cell> merged_cells(const JSeq& play) {
    std::vector<Cell> out;
    for (const Entry& e : play) {
        Cell c{column_of(e), e.move.base};
        if (out.empty() || out.back() != c) out.push_back(std::move(c));
    }
    return out;
}

std::string render_cells(const std::vector<Cell>& cells) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? " " : "") << cells[i].move << "@" << cells[i].column;
    return os.str();
}

std::string render_columns(const std::vector<Cell>& cells) {
    auto rank = [](const std::string& c) -> std::pair<int, int> {
        if (c == "ctx") return {0, 0};
        if (c.rfind("arg", 0) == 0) return {1, std::stoi(c.substr(3))};
        if (c.rfind("N_", 0) == 0) return {2, std::stoi(c.substr(2))};
        return {3, 0};
    };
    std::vector<std::string> cols;
    for (const auto& c : cells)
        if (std::find(cols.begin(), cols.end(), c.column) == cols.end()) cols.push_back(c.column);
    std::sort(cols.begin(), cols.end(), [&](const auto& a, const auto& b) { return rank(a) < rank(b); });
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    std::vector<std::pair<std::size_t, std::string>> rows;
    for (const auto& c : cells) {
        std::size_t at = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), c.column) - cols.begin());
        std::string text = c.move;
        if (c.column.rfind("N_", 0) == 0) text += c.column.substr(1);
        width[at] = std::max(width[at], text.size());
        rows.emplace_back(at, std::move(text));
    }
    auto line = [&](auto cell) {
        std::string out;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            std::string t = cell(k);
            out += t + std::string(width[k] - t.size() + 2, ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        return out + "\n";
    };
    std::string out = line([&](std::size_t k) { return cols[k]; });
    for (const auto& [at, text] : rows) out += line([&](std::size_t k) { return k == at ? text : std::string(); });
    return out;
}

}  // namespace hm::interp
