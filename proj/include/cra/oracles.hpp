#pragma once

#include <cstdint>
#include <string_view>

namespace cra {

// Direct scans over words; letters outside the alphabet raise Alphabet.

// Over {a,b}: length of the longest block of b's.
std::int64_t ref_f1(std::string_view w);
// Over {a,b,#}: sum over #-blocks of max(#a, #b).
std::int64_t ref_f2(std::string_view w);
// Over {a,b,#} with blocks w_0 # ... # w_k, n_i = #a and m_i = #b in w_i:
// max(sum_i n_i, max_j (m_j + sum_{i>j} n_i)).
std::int64_t ref_fB(std::string_view w);
// Mirror image: max(sum_i n_i, max_j (sum_{i<j} n_i + m_j)).
std::int64_t ref_fB_rev(std::string_view w);

}  // namespace cra
