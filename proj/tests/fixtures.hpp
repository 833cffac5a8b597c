#pragma once

#include <doctest.h>

#include "netclust/error.hpp"
#include "netclust/network.hpp"
#include "netclust/representable.hpp"

// Asserts that `expr` throws a netclust::Error carrying the given code.
#define CHECK_ERROR_CODE(expr, expected)                              \
  do {                                                                \
    bool caught_ = false;                                             \
    try {                                                             \
      (void)(expr);                                                   \
    } catch (const netclust::Error& e_) {                             \
      caught_ = true;                                                 \
      CHECK_MESSAGE(e_.code() == netclust::ErrorCode::expected,       \
                    "wrong error code: ", e_.what());                 \
    }                                                                 \
    CHECK_MESSAGE(caught_, #expr " did not throw");                   \
  } while (0)

namespace fixtures {

// Three-node directed cycle: forward links 1, backward links 2.
inline netclust::Network cycle3() {
  return netclust::Network({"x1", "x2", "x3"}, netclust::Matrix::from_rows({
                                                   {0, 1, 2},
                                                   {2, 0, 1},
                                                   {1, 2, 0},
                                               }));
}

// Four-node directed cycle with shortcut weight 2 everywhere else.
inline netclust::Network cycle4() {
  return netclust::Network({"x1", "x2", "x3", "x4"}, netclust::Matrix::from_rows({
                                                         {0, 1, 2, 2},
                                                         {2, 0, 1, 2},
                                                         {2, 2, 0, 1},
                                                         {1, 2, 2, 0},
                                                     }));
}

inline netclust::Representer omega_r() { return netclust::cycle_representer(2, 1.0); }

inline netclust::Representer three_cycle_13() {
  return netclust::cycle_representer(3, 1.0, 3.0);
}

}  // namespace fixtures
