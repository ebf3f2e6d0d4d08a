#pragma once

#include "oracles.hpp"
#include "wedgelab/group.hpp"

namespace support {

/// Copies a library group's multiplication into an oracle table.
inline oracle::Table table_of(const wedgelab::Group& g) {
  return oracle::Table::from(static_cast<int>(g.order()), [&](int a, int b) {
    return static_cast<int>(g.mul(static_cast<wedgelab::Elem>(a), static_cast<wedgelab::Elem>(b)));
  });
}

}  // namespace support
