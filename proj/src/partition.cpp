#include "quivmod/partition.hpp"

#include <charconv>

namespace quivmod {

Partition::Partition(const MultMap& multiplicities) {
  for (const auto& [size, count] : multiplicities) {
    if (size < 1 || count < 1) throw DomainError("partition parts and multiplicities must be positive");
    mult_[size] = count;
    total_ += size * count;
    parts_ += count;
  }
}

Partition::Partition(std::initializer_list<std::pair<int, int>> size_count_pairs) {
  for (const auto& [size, count] : size_count_pairs) {
    if (size < 1 || count < 1) throw DomainError("partition parts and multiplicities must be positive");
    mult_[size] += count;
    total_ += size * count;
    parts_ += count;
  }
}

Partition Partition::trivial(int n) {
  if (n < 1) throw DomainError("partition of a non-positive integer");
  return Partition{{1, n}};
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(parts_));
  for (const auto& [size, count] : mult_)
    for (int i = 0; i < count; ++i) out.push_back(size);
  return out;
}

std::string Partition::to_string() const {
  std::string s;
  for (const auto& [size, count] : mult_) {
    if (!s.empty()) s += ",";
    s += std::to_string(size) + "^" + std::to_string(count);
  }
  return s;
}

namespace {

int parse_positive_int(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1)
    throw DomainError(std::string("bad ") + what + " in partition text: '" + std::string(text) + "'");
  return value;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  if (text.empty()) throw DomainError("empty partition text");
  MultMap mult;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view block =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::size_t caret = block.find('^');
    int size, count;
    if (caret == std::string_view::npos) {
      size = parse_positive_int(block, "part size");
      count = 1;
    } else {
      size = parse_positive_int(block.substr(0, caret), "part size");
      count = parse_positive_int(block.substr(caret + 1), "multiplicity");
    }
    if (mult.count(size)) throw DomainError("repeated part size in partition text");
    mult[size] = count;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(mult);
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (n == 0) {
    Partition::MultMap mult;
    for (int p : prefix) mult[p] += 1;
    out.push_back(Partition(mult));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    gen_partitions(n - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 1) throw DomainError("partitions(n) requires n >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  gen_partitions(n, n, prefix, out);
  return out;
}

std::vector<PartitionPair> partition_pairs(int a, int b) {
  std::vector<PartitionPair> out;
  for (const Partition& pa : partitions(a))
    for (const Partition& pb : partitions(b)) out.push_back({pa, pb});
  return out;
}

}  // namespace quivmod
