#include "chromatica/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chromatica {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        size_t caret = item.find('^');
        int value = 0, repeat = 1;
        try {
            if (caret == std::string::npos) {
                value = std::stoi(item);
            } else {
                value = std::stoi(item.substr(0, caret));
                repeat = std::stoi(item.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse partition item '" + item + "'");
        }
        if (repeat < 0)
            throw std::invalid_argument("negative repeat in partition item '" + item + "'");
        for (int r = 0; r < repeat; ++r)
            parts.push_back(value);
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (!parts_.empty())
        out.reserve(static_cast<size_t>(parts_[0]));
    for (int i = 1; !parts_.empty() && i <= parts_[0]; ++i) {
        int count = 0;
        for (int p : parts_)
            if (p >= i)
                ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::map<int, int, std::greater<int>> Partition::multiplicities() const {
    std::map<int, int, std::greater<int>> m;
    for (int p : parts_)
        ++m[p];
    return m;
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::string Partition::to_compact_string() const {
    std::string s;
    size_t i = 0;
    while (i < parts_.size()) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        if (!s.empty())
            s += ',';
        s += std::to_string(parts_[i]);
        if (j - i > 1)
            s += '^' + std::to_string(j - i);
        i = j;
    }
    return s;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& stack,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        stack.push_back(k);
        gen_partitions(remaining - k, k, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    return partitions_of_max(n, n);
}

std::vector<Partition> partitions_of_max(int n, int max_part) {
    if (n < 0)
        throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> stack;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    if (max_part < 1)
        return out;
    gen_partitions(n, max_part, stack, out);
    return out;
}

} // namespace chromatica
