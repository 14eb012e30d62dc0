#pragma once

#include <doctest.h>

#include <initializer_list>
#include <vector>

#include "indist/data.hpp"
#include "indist/error.hpp"

namespace testutil {

/// Runs f and returns the code of the indist::Error it throws.
template <class F>
indist::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const indist::Error& e) {
    return e.code();
  }
  FAIL("expected an indist::Error");
  return indist::ErrorCode::InvalidArgument;
}

inline indist::ScoredDataset scored(std::vector<double> pos, std::vector<double> neg) {
  return indist::ScoredDataset(std::move(pos), std::move(neg));
}

inline std::vector<double> vec(std::span<const double> s) { return {s.begin(), s.end()}; }

// Worked examples.
inline indist::ScoredDataset t1() { return scored({2, 4}, {1, 3}); }
inline indist::ScoredDataset t2() { return scored({3, 4}, {1, 2}); }
inline indist::ScoredDataset anti() { return scored({1, 2}, {3, 4}); }

}  // namespace testutil
