#include "ivc/bounds.hpp"

#include <algorithm>

#include "ivc/error.hpp"

namespace ivc {

namespace {

class Params {
public:
    Params(std::string_view theorem, const std::map<std::string, long long>& values)
        : theorem_(theorem), values_(values) {}

    long long operator()(const std::string& key, long long at_least = 0) const {
        auto it = values_.find(key);
        if (it == values_.end()) {
            throw Error(ErrorCode::MissingParameter, theorem_ + " needs parameter '" + key + "'");
        }
        if (it->second < at_least) {
            throw Error(ErrorCode::BadParameter, theorem_ + ": " + key + " must be >= " +
                                                     std::to_string(at_least));
        }
        return it->second;
    }

private:
    std::string theorem_;
    const std::map<std::string, long long>& values_;
};

/// n = p * 2^q with p odd.
std::pair<long long, long long> odd_part(long long n) {
    long long q = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++q;
    }
    return {n, q};
}

}  // namespace

std::vector<std::string> bound_theorems() {
    return {"t2", "t3", "t4", "t5", "t6", "t7", "t8", "t12", "t13", "t14", "t16", "t17"};
}

BoundReport bound_report(std::string_view theorem, const std::map<std::string, long long>& values) {
    Params param(theorem, values);
    BoundReport b;
    b.source = std::string(theorem);

    if (theorem == "t2") {
        b.kind = ProductKind::cartesian;
        b.w_upper = param("wG", 1) + param("wH", 1);
        b.W_lower = param("WG", 1) + param("WH", 1);
    } else if (theorem == "t3") {
        b.w_upper = param("delta", 1);
    } else if (theorem == "t4") {
        long long m = param("m", 1), n = param("n", 2);
        b.W_lower = 3 * m + n - 2;
    } else if (theorem == "t5") {
        long long m = param("m", 2), n = param("n", 2);
        b.W_lower = std::max(3 * m + n, 3 * n + m);
    } else if (theorem == "t6") {
        long long n = param("n", 1);
        b.W_lower = n * (n + 1) / 2;
    } else if (theorem == "t7") {
        long long n = param("n", 1);
        auto [p, q] = odd_part(n);
        b.W_lower = 4 * n - 2 - p - q;
    } else if (theorem == "t8") {
        long long n = param("n", 1), k = param("k", 1);
        auto [p, q] = odd_part(n);
        b.w_upper = (2 * n - 1) * k;
        b.W_lower = (4 * n - 2 - p - q) * k;
    } else if (theorem == "t12" || theorem == "t13" || theorem == "t14") {
        long long w = param("w", 1), W = param("W", 1), r = param("r", 0);
        if (theorem == "t12") {
            b.kind = ProductKind::tensor;
            b.w_upper = w * r;
            b.W_lower = W * r;
        } else if (theorem == "t13") {
            b.kind = ProductKind::strong_tensor;
            b.w_upper = w * (r + 1);
            b.W_lower = W * (r + 1);
        } else {
            b.kind = ProductKind::strong;
            b.w_upper = w * (r + 1) + r;
            b.W_lower = W * (r + 1) + r;
        }
    } else if (theorem == "t16") {
        long long w = param("w", 1), W = param("W", 1), n = param("n", 1);
        b.kind = ProductKind::lexicographic;
        b.w_upper = w * n;
        b.W_lower = (W + 1) * n - 1;
    } else if (theorem == "t17") {
        long long w = param("w", 1), W = param("W", 1), n = param("n", 1), r = param("r", 0);
        b.kind = ProductKind::lexicographic;
        b.w_upper = w * n + r;
        b.W_lower = W * n + r;
    } else {
        throw Error(ErrorCode::BadParameter, "unknown theorem id '" + std::string(theorem) + "'");
    }
    return b;
}

}  // namespace ivc
