#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace coha {

// Weakly decreasing sequence of positive integers. Zero parts are never
// stored, so two partitions are equal iff their part vectors are equal.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }
    // Largest part, 0 for the empty partition.
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    // i-th part (0-based, largest first); 0 beyond the length.
    int part(int i) const noexcept { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Strictly increasing sequence of non-negative generator labels
// k_1 < ... < k_d naming the wedge monomial phi_{k_1} ^ ... ^ phi_{k_d}.
class WedgeIndex {
public:
    WedgeIndex() = default;
    WedgeIndex(std::initializer_list<int> indices);
    explicit WedgeIndex(std::vector<int> indices);

    const std::vector<int>& indices() const noexcept { return indices_; }
    int degree() const noexcept { return static_cast<int>(indices_.size()); }
    bool contains(int generator) const noexcept;
    // 1-based position of a generator, 0 when absent.
    int position(int generator) const noexcept;
    int max_entry() const noexcept { return indices_.empty() ? -1 : indices_.back(); }

    // Bit i set iff phi_i is a factor. Requires all entries < 64.
    std::uint64_t mask() const;
    static WedgeIndex from_mask(std::uint64_t mask);

    friend bool operator==(const WedgeIndex&, const WedgeIndex&) = default;
    // Degree first, then lexicographic.
    friend std::strong_ordering operator<=>(const WedgeIndex& a, const WedgeIndex& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.indices_ <=> b.indices_;
    }

private:
    std::vector<int> indices_;
};

// d rows inside an ambient n: the d x (n-d) rectangle.
struct BoxShape {
    int d = 0;
    int n = 0;

    BoxShape() = default;
    BoxShape(int rows, int ambient);
    int columns() const noexcept { return n - d; }

    friend bool operator==(const BoxShape&, const BoxShape&) = default;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const WedgeIndex& k);
std::string to_string(const Partition& p);
std::string to_string(const WedgeIndex& k);

// lambda_i = k_i - i + 1 (1-based, k_1 smallest), zero parts dropped.
Partition index_to_partition(const WedgeIndex& k);

// Inverse of index_to_partition at a declared degree d.
// Throws std::invalid_argument if length(lambda) > d.
WedgeIndex partition_to_index(const Partition& lambda, int d);

Partition transpose(const Partition& lambda);

bool fits_box(const Partition& lambda, const BoxShape& box);

// Index of the transposed partition re-encoded at degree n - d.
// The sets {k_i} and {n-1-k'_j} partition {0,...,n-1}.
// Throws std::invalid_argument if some k_i >= n.
WedgeIndex transpose_index(const WedgeIndex& k, int n);

// All partitions fitting the box, in increasing (lexicographic) order.
std::vector<Partition> box_partitions(const BoxShape& box);

// All degree-d indices with entries in [0, n), lexicographic order.
std::vector<WedgeIndex> indices_of_degree(int n, int d);

// The 2^n basis indices of the exterior algebra on n generators, ordered
// by degree then lexicographically.
std::vector<WedgeIndex> all_indices(int n);

}  // namespace coha
