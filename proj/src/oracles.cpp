#include "cra/oracles.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "cra/error.hpp"

namespace cra {

namespace {

struct Block {
    std::int64_t a = 0, b = 0;
};

std::vector<Block> blocks(std::string_view w) {
    std::vector<Block> out(1);
    for (char c : w) {
        if (c == 'a') ++out.back().a;
        else if (c == 'b') ++out.back().b;
        else if (c == '#') out.emplace_back();
        else throw Error(ErrorKind::Alphabet, std::string("letter '") + c + "' is not in {a,b,#}");
    }
    return out;
}

}  // namespace

std::int64_t ref_f1(std::string_view w) {
    std::int64_t best = 0, run = 0;
    for (char c : w) {
        if (c == 'b') {
            best = std::max(best, ++run);
        } else if (c == 'a') {
            run = 0;
        } else {
            throw Error(ErrorKind::Alphabet, std::string("letter '") + c + "' is not in {a,b}");
        }
    }
    return best;
}

std::int64_t ref_f2(std::string_view w) {
    std::int64_t total = 0;
    for (const auto& blk : blocks(w)) total += std::max(blk.a, blk.b);
    return total;
}

std::int64_t ref_fB(std::string_view w) {
    auto bs = blocks(w);
    std::int64_t all_a = 0;
    for (const auto& blk : bs) all_a += blk.a;
    std::int64_t best = all_a, later_a = 0;
    for (std::size_t j = bs.size(); j-- > 0;) {
        best = std::max(best, bs[j].b + later_a);
        later_a += bs[j].a;
    }
    return best;
}

std::int64_t ref_fB_rev(std::string_view w) {
    auto bs = blocks(w);
    std::int64_t all_a = 0;
    for (const auto& blk : bs) all_a += blk.a;
    std::int64_t best = all_a, earlier_a = 0;
    for (const auto& blk : bs) {
        best = std::max(best, earlier_a + blk.b);
        earlier_a += blk.a;
    }
    return best;
}

}  // namespace cra
