#pragma once

#include <vector>

#include "lierig/error.hpp"
#include "lierig/root_system.hpp"

namespace testing {

inline lierig::RootSystem sys(char s, int rank) {
  return lierig::build_root_system({lierig::Series(s), rank});
}

inline std::vector<lierig::LieType> all_types(int max_rank) {
  std::vector<lierig::LieType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({lierig::Series::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({lierig::Series::B, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({lierig::Series::C, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({lierig::Series::D, r});
  return out;
}

template <class F>
lierig::Errc error_code(F&& f) {
  try {
    f();
  } catch (const lierig::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an error");
}

}  // namespace testing
