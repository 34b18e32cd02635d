#include "hm/core/move.hpp"

#include <boost/multiprecision/integer.hpp>

#include <charconv>

namespace hm {

namespace {

const char* tag_name(TagKind k) {
    switch (k) {
        case TagKind::Left: return "L";
        case TagKind::Right: return "R";
        case TagKind::Copy: return "C";
        case TagKind::ConcatSide: return "S";
        case TagKind::BangIndex: return "!";
        case TagKind::Index: return "I";
        case TagKind::Part: return "P";
        case TagKind::Thread: return "T";
    }
    return "?";
}

bool indexed(TagKind k) { return k != TagKind::Left && k != TagKind::Right; }

}  // namespace

std::strong_ordering Tag::operator<=>(const Tag& o) const {
    if (auto c = kind <=> o.kind; c != 0) return c;
    if (index < o.index) return std::strong_ordering::less;
    if (o.index < index) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string to_string(const Tag& t) {
    std::string out = tag_name(t.kind);
    if (indexed(t.kind)) out += t.index.str();
    return out;
}

std::optional<Tag> parse_tag(const std::string& text) {
    if (text.empty()) return std::nullopt;
    static const std::pair<char, TagKind> table[] = {
        {'L', TagKind::Left},       {'R', TagKind::Right},     {'C', TagKind::Copy},
        {'S', TagKind::ConcatSide}, {'!', TagKind::BangIndex}, {'I', TagKind::Index},
        {'P', TagKind::Part},       {'T', TagKind::Thread},
    };
    for (const auto& [c, k] : table) {
        if (text[0] != c) continue;
        std::string rest = text.substr(1);
        if (!indexed(k)) {
            if (!rest.empty()) return std::nullopt;
            return Tag{k, 0};
        }
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        return Tag{k, CopyIndex(rest)};
    }
    return std::nullopt;
}

std::strong_ordering MoveId::operator<=>(const MoveId& o) const {
    if (auto c = base <=> o.base; c != 0) return c;
    return std::lexicographical_compare_three_way(path.begin(), path.end(), o.path.begin(),
                                                  o.path.end());
}

MoveId MoveId::tail() const {
    if (path.empty()) throw StructuralError("tail of an untagged move " + base);
    return MoveId{base, std::vector<Tag>(path.begin() + 1, path.end())};
}

MoveId MoveId::under(Tag t) const {
    MoveId out;
    out.base = base;
    out.path.reserve(path.size() + 1);
    out.path.push_back(std::move(t));
    out.path.insert(out.path.end(), path.begin(), path.end());
    return out;
}

std::string to_string(const MoveId& m) {
    std::string out;
    for (const auto& t : m.path) {
        out += to_string(t);
        out += '.';
    }
    return out + m.base;
}

MoveId question() { return MoveId{"q", {}}; }

MoveId numeral(std::uint64_t n) { return MoveId{std::to_string(n), {}}; }

std::optional<std::uint64_t> numeral_value(const MoveId& m) {
    const auto& b = m.base;
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(b.data(), b.data() + b.size(), v);
    if (ec != std::errc() || p != b.data() + b.size() || b.empty()) return std::nullopt;
    return v;
}

std::string to_string(const Label& l) {
    std::string out = l.owner == Owner::O ? "O" : "P";
    out += l.kind == Kind::Q ? "Q" : "A";
    return out + std::to_string(l.degree);
}

CopyIndex cantor_pair(const CopyIndex& i, const CopyIndex& j) {
    CopyIndex s = i + j;
    return s * (s + 1) / 2 + j;
}

std::pair<CopyIndex, CopyIndex> cantor_unpair(const CopyIndex& c) {
    // w = floor((sqrt(8c+1) - 1) / 2)
    CopyIndex w = (boost::multiprecision::sqrt(CopyIndex(8 * c + 1)) - 1) / 2;
    CopyIndex t = w * (w + 1) / 2;
    CopyIndex j = c - t;
    return {w - j, j};
}

}  // namespace hm
