#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hm {

// Copy indices grow by nested Cantor pairing, so they are unbounded.
using CopyIndex = boost::multiprecision::cpp_int;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TagKind : std::uint8_t {
    Left,
    Right,
    Copy,        // middle copy B^[1] / B^[2] of a concatenation
    ConcatSide,  // internal move of the first / second constituent of a concatenation
    BangIndex,   // thread of an exponential
    Index,       // component of a countable product
    Part,        // internal move of a pairing constituent
    Thread,      // internal move of a promotion thread
};

struct Tag {
    TagKind kind = TagKind::Left;
    CopyIndex index = 0;

    static Tag left() { return {TagKind::Left, 0}; }
    static Tag right() { return {TagKind::Right, 0}; }
    static Tag copy(int k) { return {TagKind::Copy, k}; }
    static Tag side(int k) { return {TagKind::ConcatSide, k}; }
    static Tag bang(CopyIndex i) { return {TagKind::BangIndex, std::move(i)}; }
    static Tag at(CopyIndex i) { return {TagKind::Index, std::move(i)}; }
    static Tag part(CopyIndex k) { return {TagKind::Part, std::move(k)}; }
    static Tag thread(CopyIndex i) { return {TagKind::Thread, std::move(i)}; }

    bool operator==(const Tag&) const = default;
    std::strong_ordering operator<=>(const Tag& o) const;
};

std::string to_string(const Tag& t);
std::optional<Tag> parse_tag(const std::string& text);

// A move: a base symbol under a path of construction tags, outermost tag first.
struct MoveId {
    std::string base;
    std::vector<Tag> path;

    bool operator==(const MoveId&) const = default;
    std::strong_ordering operator<=>(const MoveId& o) const;

    bool starts_with(TagKind k) const { return !path.empty() && path.front().kind == k; }
    // The move with its outermost tag removed.
    MoveId tail() const;
    // The move with `t` prepended.
    MoveId under(Tag t) const;
    // Moves named by Left/Right are external names; anything else is internal bookkeeping.
    bool has_external_name() const {
        return path.empty() || starts_with(TagKind::Left) || starts_with(TagKind::Right);
    }
};

std::string to_string(const MoveId& m);

MoveId question();
MoveId numeral(std::uint64_t n);
std::optional<std::uint64_t> numeral_value(const MoveId& m);

enum class Owner : std::uint8_t { O, P };
enum class Kind : std::uint8_t { Q, A };

inline Owner flip(Owner o) { return o == Owner::O ? Owner::P : Owner::O; }

struct Label {
    Owner owner = Owner::O;
    Kind kind = Kind::Q;
    unsigned degree = 0;

    bool operator==(const Label&) const = default;
    auto operator<=>(const Label&) const = default;
};

std::string to_string(const Label& l);

inline unsigned monus(unsigned a, unsigned b) { return a > b ? a - b : 0; }

// A hiding depth d ∈ ℕ ∪ {ω}; ω resolves to the μ of the structure being hidden.
class Depth {
public:
    constexpr Depth(unsigned d) : value_(d) {}  // NOLINT(google-explicit-constructor)
    static constexpr Depth omega() { return Depth(kOmega, 0); }

    constexpr bool is_omega() const { return value_ == kOmega; }
    constexpr unsigned resolve(unsigned mu) const { return is_omega() ? mu : value_; }
    std::string str() const { return is_omega() ? "omega" : std::to_string(value_); }
    bool operator==(const Depth&) const = default;

private:
    static constexpr unsigned kOmega = std::numeric_limits<unsigned>::max();
    constexpr Depth(unsigned v, int) : value_(v) {}
    unsigned value_;
};

// The Cantor pairing ℕ×ℕ → ℕ and its inverse.
CopyIndex cantor_pair(const CopyIndex& i, const CopyIndex& j);
std::pair<CopyIndex, CopyIndex> cantor_unpair(const CopyIndex& c);

}  // namespace hm
