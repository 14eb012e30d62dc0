#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace indist::detail {

/// 2 * (number of pairs (p, n) with p > n, plus half the ties), over sorted
/// inputs. Kept integral so that every route through it divides the same
/// integer by the same denominator.
std::uint64_t doubled_wins(std::span<const double> pos, std::span<const double> neg);

/// The same count split per negative: out[j] = 2 * |{p > neg[j]}| + |{p = neg[j]}|.
std::vector<std::uint64_t> doubled_wins_each(std::span<const double> pos, std::span<const double> neg);

}  // namespace indist::detail
