#include "hm/core/jseq.hpp"

#include <algorithm>

namespace hm {

namespace {

bool survives(const Label& l, unsigned d) { return l.degree == 0 || l.degree > d; }

}  // namespace

Completeness completeness(const JSeq& s, Depth d, unsigned mu) {
    return {d, is_complete(s, d.resolve(mu))};
}

bool is_complete(const JSeq& s, unsigned d) { return s.empty() || survives(s.back().label, d); }

std::size_t external_justifier(const JSeq& s, std::size_t i, unsigned d) {
    if (i >= s.size() || !s[i].pointer) throw DomainError("external_justifier: entry is initial");
    std::size_t j = *s[i].pointer;
    while (!survives(s[j].label, d)) {
        if (!s[j].pointer)
            throw StructuralError("external_justifier: pointer chain exhausted at entry " +
                                  std::to_string(j));
        j = *s[j].pointer;
    }
    return j;
}

JSeq hide_jseq(const JSeq& s, unsigned d) {
    if (d == 0) return s;
    JSeq out;
    std::vector<std::size_t> renumber(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Entry& e = s[i];
        if (!survives(e.label, d)) continue;
        Entry h = e;
        h.label.degree = monus(e.label.degree, d);
        if (e.pointer) h.pointer = renumber[external_justifier(s, i, d)];
        renumber[i] = out.size();
        out.push_back(std::move(h));
    }
    return out;
}

JSeq truncate_hide(const JSeq& s, unsigned d) {
    JSeq h = hide_jseq(s, d);
    if (!is_complete(s, d) && !h.empty()) h.pop_back();
    return h;
}

JSeq delete_entry(const JSeq& s, std::size_t i) {
    if (i >= s.size()) throw DomainError("delete_entry: index out of range");
    JSeq out;
    out.reserve(s.size() - 1);
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k == i) continue;
        Entry e = s[k];
        if (e.pointer) {
            std::size_t p = *e.pointer;
            if (p == i) {
                e.pointer = s[i].pointer;
                if (!e.pointer) throw StructuralError("delete_entry: deleted an initial justifier");
                p = *e.pointer;
            }
            e.pointer = p > i ? p - 1 : p;
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<std::size_t> p_view_indices(const JSeq& s, std::size_t len) {
    std::vector<std::size_t> out;
    std::size_t idx = std::min(len, s.size());
    while (idx > 0) {
        const Entry& e = s[idx - 1];
        out.push_back(idx - 1);
        if (e.label.owner == Owner::P) {
            --idx;
        } else if (!e.pointer) {
            break;
        } else {
            out.push_back(*e.pointer);
            idx = *e.pointer;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> o_view_indices(const JSeq& s, std::size_t len) {
    std::vector<std::size_t> out;
    std::size_t idx = std::min(len, s.size());
    while (idx > 0) {
        const Entry& e = s[idx - 1];
        out.push_back(idx - 1);
        if (e.label.owner == Owner::O || !e.pointer) {
            --idx;
        } else {
            out.push_back(*e.pointer);
            idx = *e.pointer;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

JSeq subsequence(const JSeq& s, const std::vector<std::size_t>& indices) {
    std::vector<std::optional<std::size_t>> renumber(s.size());
    JSeq out;
    out.reserve(indices.size());
    for (std::size_t k : indices) {
        Entry e = s[k];
        if (e.pointer) e.pointer = renumber[*e.pointer];
        renumber[k] = out.size();
        out.push_back(std::move(e));
    }
    return out;
}

JSeq p_view(const JSeq& s) { return subsequence(s, p_view_indices(s, s.size())); }
JSeq o_view(const JSeq& s) { return subsequence(s, o_view_indices(s, s.size())); }

JSeq prefix(const JSeq& s, std::size_t len) {
    return JSeq(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(std::min(len, s.size())));
}

nlohmann::json to_json(const JSeq& s) {
    auto arr = nlohmann::json::array();
    for (const auto& e : s) {
        nlohmann::json path = nlohmann::json::array();
        for (const auto& t : e.move.path) path.push_back(to_string(t));
        arr.push_back({
            {"base", e.move.base},
            {"path", path},
            {"owner", e.label.owner == Owner::O ? "O" : "P"},
            {"kind", e.label.kind == Kind::Q ? "Q" : "A"},
            {"degree", e.label.degree},
            {"pointer", e.pointer ? nlohmann::json(*e.pointer) : nlohmann::json(nullptr)},
        });
    }
    return arr;
}

JSeq jseq_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DomainError("jseq: expected a JSON array");
    JSeq out;
    for (const auto& item : j) {
        Entry e;
        e.move.base = item.at("base").get<std::string>();
        for (const auto& t : item.at("path")) {
            auto tag = parse_tag(t.get<std::string>());
            if (!tag) throw DomainError("jseq: bad tag " + t.get<std::string>());
            e.move.path.push_back(*tag);
        }
        const auto owner = item.at("owner").get<std::string>();
        const auto kind = item.at("kind").get<std::string>();
        if ((owner != "O" && owner != "P") || (kind != "Q" && kind != "A"))
            throw DomainError("jseq: bad owner/kind");
        e.label.owner = owner == "O" ? Owner::O : Owner::P;
        e.label.kind = kind == "Q" ? Kind::Q : Kind::A;
        e.label.degree = item.at("degree").get<unsigned>();
        const auto& p = item.at("pointer");
        if (!p.is_null()) {
            auto v = p.get<std::size_t>();
            if (v >= out.size()) throw DomainError("jseq: pointer does not point back");
            e.pointer = v;
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::string render(const JSeq& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += to_string(s[i].move);
        if (s[i].label.degree) out += "_" + std::to_string(s[i].label.degree);
        if (s[i].pointer) out += ">" + std::to_string(*s[i].pointer);
    }
    return out;
}

}  // namespace hm
