#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ivc/product.hpp"

namespace ivc {

/// Bounds predicted by a theorem. Values are lower/upper bounds only;
/// nothing here claims tightness.
struct BoundReport {
    std::optional<ProductKind> kind;  // set for product theorems
    std::optional<long long> w_upper;
    std::optional<long long> W_lower;
    std::string source;
};

/// Theorem ids and their parameters:
///   t2  (cartesian)       wG WG wH WH
///   t3  (grid/cyl/torus)  delta              w = Delta
///   t4  C(m, 2n)          m n                W >= 3m + n - 2
///   t5  T(2m, 2n)         m n                W >= max(3m + n, 3n + m)
///   t6  Q_n               n                  W >= n(n + 1) / 2
///   t7  K_{2n}            n                  W >= 4n - 2 - p - q, n = p 2^q
///   t8  H^k_{2n}          n k                w = (2n - 1)k, W >= (4n - 2 - p - q)k
///   t12 (tensor)          w W r
///   t13 (strong tensor)   w W r
///   t14 (strong)          w W r
///   t16 (G[nK1])          w W n
///   t17 (lexicographic)   w W n r
/// Throws MissingParameter for absent keys, BadParameter for unknown ids or
/// values outside the theorem's hypotheses.
BoundReport bound_report(std::string_view theorem, const std::map<std::string, long long>& params);

std::vector<std::string> bound_theorems();

}  // namespace ivc
