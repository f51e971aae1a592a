#ifndef CHROMATICA_PARTITION_HPP
#define CHROMATICA_PARTITION_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace chromatica {

// An integer partition: a weakly decreasing sequence of positive parts.
// Immutable after construction; the plain constructor rejects unsorted
// input so caller bugs surface instead of being silently repaired.
class Partition {
public:
    Partition() = default; // the empty partition of 0

    // parts must be weakly decreasing and positive; throws std::invalid_argument otherwise.
    explicit Partition(std::vector<int> parts);

    // Sorts (descending) and validates positivity.
    static Partition from_unsorted(std::vector<int> parts);

    // Accepts "3,2,1^3" (caret = repeat count) and "" for the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const { return sum_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; } // 0-based
    // Part value treating indices past the end as 0.
    int part_or_zero(int i) const {
        return i < length() ? parts_[static_cast<size_t>(i)] : 0;
    }

    Partition conjugate() const;

    // part value -> multiplicity, largest part first.
    std::map<int, int, std::greater<int>> multiplicities() const;

    std::string to_string() const;          // "3,2,1,1,1"
    std::string to_compact_string() const;  // "3,2,1^3"

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// Canonical total order: descending lexicographic, so for fixed n the
// partition (n) comes first and (1^n) last. All serialized term lists
// follow this order.
struct DescLex {
    bool operator()(const Partition& a, const Partition& b) const {
        return a.parts() > b.parts();
    }
};

// All partitions of n in canonical (descending lexicographic) order.
std::vector<Partition> partitions_of(int n);

// Partitions of n with every part <= max_part, same order.
std::vector<Partition> partitions_of_max(int n, int max_part);

} // namespace chromatica

#endif
