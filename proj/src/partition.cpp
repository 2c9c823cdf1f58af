#include "sl2calc/partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace sl2calc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) fail(Errc::internal, "partition part must be >= 1, got " + std::to_string(p));
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  long long sum = std::accumulate(parts_.begin(), parts_.end(), 0LL);
  if (sum > std::numeric_limits<int>::max())
    fail(Errc::internal, "partition total out of range");
  total_ = static_cast<int>(sum);
}

int Partition::count(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < parts_.size();) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    out.emplace_back(parts_[i], static_cast<int>(j - i));
    i = j;
  }
  return out;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition normalize(const std::vector<int>& seq, int n) {
  if (n < 0) fail(Errc::internal, "normalization target must be >= 0");
  std::vector<int> parts;
  long long positive_sum = 0;
  for (int s : seq) {
    if (s > 0) {
      parts.push_back(s);
      positive_sum += s;
    }
  }
  if (positive_sum > n) {
    fail(Errc::overflow, "positive entries sum to " + std::to_string(positive_sum) +
                             " > target total " + std::to_string(n));
  }
  parts.insert(parts.end(), static_cast<size_t>(n - positive_sum), 1);
  return Partition(std::move(parts));
}

Partition shift(const Partition& p, int k, int n) {
  std::vector<int> shifted;
  shifted.reserve(p.parts().size());
  for (int part : p.parts()) shifted.push_back(part - k);
  return normalize(shifted, n);
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  // Largest part chosen first, so the output order is descending lexicographic.
  std::function<void(int, int)> gen = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      gen(remaining - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) gen(n, n == 0 ? 1 : n);
  return out;
}

}  // namespace sl2calc
