#include "coha/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coha {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

WedgeIndex::WedgeIndex(std::initializer_list<int> indices) : WedgeIndex(std::vector<int>(indices)) {}

WedgeIndex::WedgeIndex(std::vector<int> indices) : indices_(std::move(indices)) {
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 0) throw std::invalid_argument("wedge index entries must be non-negative");
        if (i > 0 && indices_[i] <= indices_[i - 1]) throw std::invalid_argument("wedge index must be strictly increasing");
    }
}

bool WedgeIndex::contains(int generator) const noexcept {
    return std::binary_search(indices_.begin(), indices_.end(), generator);
}

int WedgeIndex::position(int generator) const noexcept {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), generator);
    if (it == indices_.end() || *it != generator) return 0;
    return static_cast<int>(it - indices_.begin()) + 1;
}

std::uint64_t WedgeIndex::mask() const {
    std::uint64_t m = 0;
    for (int k : indices_) {
        if (k >= 64) throw std::out_of_range("wedge index entry too large for a bit mask");
        m |= std::uint64_t{1} << k;
    }
    return m;
}

WedgeIndex WedgeIndex::from_mask(std::uint64_t mask) {
    std::vector<int> out;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return WedgeIndex(std::move(out));
}

BoxShape::BoxShape(int rows, int ambient) : d(rows), n(ambient) {
    if (rows < 0 || rows > ambient) throw std::invalid_argument("box shape requires 0 <= d <= n");
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (int i = 0; i < p.length(); ++i) os << (i ? "," : "") << p.part(i);
    return os << ')';
}

std::ostream& operator<<(std::ostream& os, const WedgeIndex& k) {
    os << '[';
    for (int i = 0; i < k.degree(); ++i) os << (i ? "," : "") << k.indices()[static_cast<std::size_t>(i)];
    return os << ']';
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

std::string to_string(const WedgeIndex& k) {
    std::ostringstream os;
    os << k;
    return os.str();
}

Partition index_to_partition(const WedgeIndex& k) {
    const auto& ks = k.indices();
    std::vector<int> parts;
    parts.reserve(ks.size());
    for (int i = static_cast<int>(ks.size()) - 1; i >= 0; --i) parts.push_back(ks[static_cast<std::size_t>(i)] - i);
    return Partition(std::move(parts));
}

WedgeIndex partition_to_index(const Partition& lambda, int d) {
    if (lambda.length() > d) throw std::invalid_argument("partition " + to_string(lambda) + " longer than degree " + std::to_string(d));
    std::vector<int> ks(static_cast<std::size_t>(d));
    // ks[i] pairs with the (i+1)-th smallest part, i.e. part(d-1-i).
    for (int i = 0; i < d; ++i) ks[static_cast<std::size_t>(i)] = lambda.part(d - 1 - i) + i;
    return WedgeIndex(std::move(ks));
}

Partition transpose(const Partition& lambda) {
    std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

bool fits_box(const Partition& lambda, const BoxShape& box) {
    return lambda.length() <= box.d && lambda.largest() <= box.columns();
}

WedgeIndex transpose_index(const WedgeIndex& k, int n) {
    if (k.max_entry() >= n) throw std::invalid_argument("index " + to_string(k) + " has an entry >= n = " + std::to_string(n));
    return partition_to_index(transpose(index_to_partition(k)), n - k.degree());
}

namespace {

void box_partitions_rec(int rows_left, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    out.emplace_back(cur);
    if (rows_left == 0) return;
    for (int p = 1; p <= max_part; ++p) {
        cur.push_back(p);
        box_partitions_rec(rows_left - 1, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> box_partitions(const BoxShape& box) {
    std::vector<Partition> out;
    std::vector<int> cur;
    box_partitions_rec(box.d, box.columns(), cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WedgeIndex> indices_of_degree(int n, int d) {
    std::vector<WedgeIndex> out;
    if (d < 0 || d > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(d));
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.emplace_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - d + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<WedgeIndex> all_indices(int n) {
    std::vector<WedgeIndex> out;
    for (int d = 0; d <= n; ++d) {
        auto part = indices_of_degree(n, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace coha
