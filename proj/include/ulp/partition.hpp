#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ulp {

/// Integer partition: weakly decreasing nonnegative parts, trailing zeros stripped.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    int degree() const { return degree_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Part i, zero past the length.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    // Parts padded with zeros to n entries. Requires length() <= n.
    std::vector<int> padded(int n) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// Every partition of degree <= degree_max with at most max_parts parts,
/// ordered by degree, then by decreasing lexicographic order of parts.
std::vector<Partition> generate_partitions(int degree_max, int max_parts);

/// Partitions of exactly `degree` with at most max_parts parts, same ordering.
std::vector<Partition> partitions_of(int degree, int max_parts);

/// Dominance order. Throws std::invalid_argument on degree mismatch.
bool dominates(const Partition& lambda, const Partition& mu);

/// Number of semistandard Young tableaux of shape lambda and content mu.
/// Throws std::invalid_argument on degree mismatch.
std::int64_t kostka(const Partition& lambda, const Partition& mu);

} // namespace ulp
