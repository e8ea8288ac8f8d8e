#pragma once

#include <initializer_list>
#include <vector>

#include "nestobetti/building_set.hpp"
#include "nestobetti/error.hpp"

namespace testing_helpers {

using nestobetti::BuildingSet;
using nestobetti::ElementSet;

inline ElementSet S(std::initializer_list<int> labels) {
  ElementSet s;
  for (int v : labels) s = s.with(v);
  return s;
}

/// Singletons of [n] plus the listed members.
inline BuildingSet make(int n, std::initializer_list<std::initializer_list<int>> members) {
  std::vector<ElementSet> family;
  for (int v = 1; v <= n; ++v) family.push_back(ElementSet::singleton(v));
  for (auto m : members) family.push_back(S(m));
  return BuildingSet::validate(family, ElementSet::interval(1, n));
}

/// The chordal non-graphical example on [4].
inline BuildingSet example4() { return make(4, {{1, 4}, {3, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 3, 4}}); }

template <typename F>
nestobetti::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const nestobetti::Error& e) {
    return e.code();
  }
  return static_cast<nestobetti::ErrorCode>(-1);
}

}  // namespace testing_helpers
