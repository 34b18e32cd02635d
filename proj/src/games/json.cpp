#include "hm/games/game.hpp"

namespace hm {

namespace {

GamePtr child(const nlohmann::json& j, std::size_t k) {
    const auto& cs = j.at("children");
    if (!cs.is_array() || cs.size() <= k) throw DomainError("game json: missing child");
    return game_from_json(cs[k]);
}

}  // namespace

GamePtr game_from_json(const nlohmann::json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "terminal") return terminal();
    if (kind == "nat") return nat();
    if (kind == "empty") return empty_game();
    if (kind == "flat") {
        FlatAnswers a;
        a.naturals = j.value("naturals", false);
        for (const auto& t : j.value("tokens", nlohmann::json::array())) a.tokens.insert(t.get<std::string>());
        return flat(std::move(a));
    }
    if (kind == "tensor") return tensor(child(j, 0), child(j, 1));
    if (kind == "lollipop") return lollipop(child(j, 0), child(j, 1));
    if (kind == "with") return with(child(j, 0), child(j, 1));
    if (kind == "power") return power(child(j, 0));
    if (kind == "bang") return bang(child(j, 0));
    if (kind == "pairing") return pairing(child(j, 0), child(j, 1));
    if (kind == "dagger") return dagger(child(j, 0));
    if (kind == "concat") return concat(child(j, 0), child(j, 1));
    if (kind == "curry") return curry(child(j, 0));
    if (kind == "uncurry") return uncurry(child(j, 0));
    if (kind == "hide") {
        const auto& d = j.at("depth");
        Depth depth = d.is_string() && d.get<std::string>() == "omega" ? Depth::omega()
                                                                        : Depth(d.get<unsigned>());
        return hide_game(child(j, 0), depth);
    }
    throw DomainError("game json: unknown kind " + kind);
}

}  // namespace hm
