#pragma once

#include "hm/syntax/reduce.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hm::syntax {

struct GenOptions {
    unsigned max_size = 8;  // node budget
    std::uint64_t max_numeral = 5;
};

// Well-typed terms by construction; all randomness flows from `rng`.
class TermGenerator {
public:
    TermGenerator(std::uint64_t seed, GenOptions opts = {});

    TyPtr type();
    // Any typable term; may use case-of-case and general scrutinees.
    TermPtr term(const Context& ctx, const TyPtr& ty);
    TermPtr value(const Context& ctx, const TyPtr& ty);
    // Applications of values.
    TermPtr configuration(const Context& ctx, const TyPtr& ty);
    std::mt19937_64& rng() { return rng_; }

private:
    struct Env {
        Context ctx;
        std::vector<std::string> binders;
    };
    TermPtr gen(Env& env, const TyPtr& ty, unsigned budget);
    TermPtr gen_value(Env& env, const TyPtr& ty, unsigned budget);
    TermPtr gen_config(Env& env, const TyPtr& ty, unsigned budget);
    FamilyPtr gen_family(Env& env, unsigned budget, bool values);
    TermPtr var_spine(Env& env, const TyPtr& ty, unsigned budget, bool values);
    std::string name(const char* base);
    unsigned pick(unsigned n);
    bool coin(double p);

    std::mt19937_64 rng_;
    GenOptions opts_;
    unsigned counter_ = 0;
};

struct MetatheoryReport {
    std::size_t terms = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures;  // property: witness
    bool ok() const { return failures.empty(); }
};

// Subject reduction, unique typing, rejoining of distinct reduction orders, nf-is-value,
// and op_step uniqueness with exec decrement, over `count` generated terms.
MetatheoryReport check_metatheory(std::size_t count, std::uint64_t seed, GenOptions opts = {});

}  // namespace hm::syntax
