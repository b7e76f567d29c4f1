#pragma once

namespace torus::detail {

struct RawRow {
    int k12, k3;
    int v[8];
};

extern const RawRow kCatalog[120];
extern const int kRedK3[36];
extern const int kSpanK3[36];
extern const int kDimStart[8];

}  // namespace torus::detail
