#include "ulp/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ulp {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(int n) const {
    if (length() > n)
        throw std::invalid_argument("partition " + to_string() + " has more than " +
                                    std::to_string(n) + " parts");
    std::vector<int> out(parts_);
    out.resize(static_cast<std::size_t>(n), 0);
    return out;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : p.parts())
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

namespace {

void partitions_rec(int remaining, int max_part, int slots, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (slots == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, slots - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int degree, int max_parts) {
    std::vector<Partition> out;
    if (degree < 0 || max_parts < 0) return out;
    std::vector<int> cur;
    partitions_rec(degree, degree, max_parts, cur, out);
    return out;
}

std::vector<Partition> generate_partitions(int degree_max, int max_parts) {
    if (degree_max < 0 || max_parts < 1)
        throw std::invalid_argument("generate_partitions needs degree_max >= 0 and max_parts >= 1");
    std::vector<Partition> out;
    for (int k = 0; k <= degree_max; ++k) {
        auto level = partitions_of(k, max_parts);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

namespace {

void require_same_degree(const Partition& a, const Partition& b, const char* what) {
    if (a.degree() != b.degree())
        throw std::invalid_argument(std::string(what) + ": degree mismatch between " +
                                    a.to_string() + " and " + b.to_string());
}

bool dominates_unchecked(const Partition& lambda, const Partition& mu) {
    int sl = 0, sm = 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int r = 0; r < len; ++r) {
        sl += lambda[static_cast<std::size_t>(r)];
        sm += mu[static_cast<std::size_t>(r)];
        if (sl < sm) return false;
    }
    return true;
}

// Memo for K(shape, content prefix). Shapes with the same content prefix
// recur heavily when Schur functions of many shapes are built.
class KostkaMemo {
public:
    std::int64_t get(const std::vector<int>& shape, const std::vector<int>& content) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = table_.find({shape, content}); it != table_.end()) return it->second;
        }
        const std::int64_t value = compute(shape, content);
        std::lock_guard lock(mutex_);
        table_.emplace(std::make_pair(shape, content), value);
        return value;
    }

private:
    // Peel off the cells holding the largest entry: they form a horizontal
    // strip of size content.back() whose removal leaves a smaller shape.
    std::int64_t compute(const std::vector<int>& shape, const std::vector<int>& content) {
        if (content.empty()) return shape.empty() ? 1 : 0;
        const int rows = static_cast<int>(shape.size());
        if (rows > static_cast<int>(content.size())) return 0;
        const int strip = content.back();
        std::vector<int> rest(content.begin(), content.end() - 1);
        std::int64_t total = 0;
        std::vector<int> inner(shape);
        // Enumerate inner shapes nu with shape[i+1] <= nu[i] <= shape[i].
        auto rec = [&](auto&& self, int row, int left) -> void {
            if (row == rows) {
                if (left != 0) return;
                std::vector<int> trimmed(inner);
                while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                total += get(trimmed, rest);
                return;
            }
            const int lo = row + 1 < rows ? shape[static_cast<std::size_t>(row + 1)] : 0;
            const int hi = shape[static_cast<std::size_t>(row)];
            for (int v = hi; v >= lo; --v) {
                const int removed = hi - v;
                if (removed > left) break;
                inner[static_cast<std::size_t>(row)] = v;
                self(self, row + 1, left - removed);
            }
            inner[static_cast<std::size_t>(row)] = hi;
        };
        rec(rec, 0, strip);
        return total;
    }

    std::mutex mutex_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> table_;
};

KostkaMemo& kostka_memo() {
    static KostkaMemo memo;
    return memo;
}

} // namespace

bool dominates(const Partition& lambda, const Partition& mu) {
    require_same_degree(lambda, mu, "dominates");
    return dominates_unchecked(lambda, mu);
}

std::int64_t kostka(const Partition& lambda, const Partition& mu) {
    require_same_degree(lambda, mu, "kostka");
    if (!dominates_unchecked(lambda, mu)) return 0;
    if (lambda == mu) return 1;
    std::vector<int> shape(lambda.parts().begin(), lambda.parts().end());
    std::vector<int> content(mu.parts().begin(), mu.parts().end());
    return kostka_memo().get(shape, content);
}

} // namespace ulp
