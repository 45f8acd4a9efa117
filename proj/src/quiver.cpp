#include "quivmod/quiver.hpp"

#include <charconv>

namespace quivmod {

DimensionVector::DimensionVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw DomainError("dimension vector entries must be nonnegative");
}

DimensionVector::DimensionVector(std::initializer_list<int> entries)
    : DimensionVector(std::vector<int>(entries)) {}

bool DimensionVector::is_zero() const {
  for (int e : entries_)
    if (e != 0) return false;
  return true;
}

bool DimensionVector::componentwise_leq(const DimensionVector& o) const {
  if (size() != o.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (entries_[i] > o.entries_[i]) return false;
  return true;
}

DimensionVector& DimensionVector::operator+=(const DimensionVector& o) {
  if (size() != o.size()) throw DomainError("dimension vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

DimensionVector& DimensionVector::operator-=(const DimensionVector& o) {
  if (size() != o.size()) throw DomainError("dimension vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    entries_[i] -= o.entries_[i];
    if (entries_[i] < 0) throw DomainError("dimension vector subtraction went negative");
  }
  return *this;
}

std::string DimensionVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s;
}

DimensionVector DimensionVector::parse(std::string_view text) {
  std::vector<int> entries;
  std::size_t start = 0;
  if (text.empty()) throw DomainError("empty dimension vector text");
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view tok =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
      throw DomainError("bad dimension vector text: '" + std::string(text) + "'");
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DimensionVector(std::move(entries));
}

Quiver Quiver::kronecker(std::int64_t m) {
  if (m < 1) throw DomainError("Kronecker quiver requires m >= 1");
  Quiver q;
  q.vertices_ = {{0, 1, VertexSide::source}, {1, 1, VertexSide::sink}};
  q.arrows_.assign(2, std::vector<std::int64_t>(2, 0));
  q.arrows_[0][1] = m;
  q.descriptor_ = "K[m=" + std::to_string(m) + "]";
  return q;
}

Quiver Quiver::bipartite(const Partition& src, const Partition& snk, std::int64_t m) {
  if (m < 1) throw DomainError("bipartite quiver requires m >= 1");
  if (src.empty() || snk.empty()) throw DomainError("bipartite quiver requires nonempty partitions");
  Quiver q;
  int id = 0;
  for (const auto& [weight, count] : src.multiplicities())
    for (int i = 0; i < count; ++i) q.vertices_.push_back({id++, weight, VertexSide::source});
  const std::size_t n_src = q.vertices_.size();
  for (const auto& [weight, count] : snk.multiplicities())
    for (int i = 0; i < count; ++i) q.vertices_.push_back({id++, weight, VertexSide::sink});
  const std::size_t n = q.vertices_.size();

  q.arrows_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n_src; ++i)
    for (std::size_t j = n_src; j < n; ++j)
      q.arrows_[i][j] = m * q.vertices_[i].weight * q.vertices_[j].weight;

  q.descriptor_ = "BIP[m=" + std::to_string(m) + ";src=" + src.to_string() +
                  ";snk=" + snk.to_string() + "]";
  return q;
}

namespace {

std::int64_t parse_m_field(std::string_view field) {
  if (field.substr(0, 2) != "m=") throw UsageError("descriptor missing m= field");
  std::int64_t m = 0;
  auto body = field.substr(2);
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), m);
  if (ec != std::errc{} || ptr != body.data() + body.size() || m < 1)
    throw UsageError("bad arrow multiplicity in descriptor: '" + std::string(field) + "'");
  return m;
}

}  // namespace

Quiver Quiver::from_descriptor(std::string_view descriptor) {
  try {
    if (descriptor.starts_with("K[") && descriptor.ends_with("]")) {
      return kronecker(parse_m_field(descriptor.substr(2, descriptor.size() - 3)));
    }
    if (descriptor.starts_with("BIP[") && descriptor.ends_with("]")) {
      std::string_view body = descriptor.substr(4, descriptor.size() - 5);
      std::vector<std::string_view> fields;
      std::size_t start = 0;
      while (start <= body.size()) {
        std::size_t semi = body.find(';', start);
        fields.push_back(body.substr(
            start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
      }
      if (fields.size() != 3 || fields[1].substr(0, 4) != "src=" || fields[2].substr(0, 4) != "snk=")
        throw UsageError("bad bipartite descriptor: '" + std::string(descriptor) + "'");
      return bipartite(Partition::parse(fields[1].substr(4)), Partition::parse(fields[2].substr(4)),
                       parse_m_field(fields[0]));
    }
  } catch (const DomainError& e) {
    throw UsageError(std::string("bad quiver descriptor: ") + e.what());
  }
  throw UsageError("unrecognized quiver descriptor: '" + std::string(descriptor) +
                   "' (expected K[m=N] or BIP[m=N;src=...;snk=...])");
}

std::int64_t euler_form(const Quiver& q, const DimensionVector& d, const DimensionVector& e) {
  const std::size_t n = q.vertex_count();
  if (d.size() != n || e.size() != n) throw DomainError("dimension vector length mismatch");
  std::int64_t value = 0;
  for (std::size_t v = 0; v < n; ++v) value += static_cast<std::int64_t>(d[v]) * e[v];
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t mult = q.arrow_count(i, j);
      if (mult) value -= mult * d[i] * e[j];
    }
  }
  return value;
}

std::int64_t symplectic_form(const Quiver& q, const DimensionVector& d, const DimensionVector& e) {
  return euler_form(q, e, d) - euler_form(q, d, e);
}

bool is_admissible(const Quiver& q, const DimensionVector& d,
                   std::span<const DimensionVector> decomposition) {
  DimensionVector prefix = DimensionVector::zeros(d.size());
  for (const DimensionVector& part : decomposition) {
    if (part.is_zero() || !part.componentwise_leq(d))
      throw DomainError("decomposition parts must be nonzero and componentwise <= d");
    prefix += part;
  }
  if (!(prefix == d)) return false;
  prefix = DimensionVector::zeros(d.size());
  for (std::size_t i = 0; i + 1 < decomposition.size(); ++i) {
    prefix += decomposition[i];
    if (symplectic_form(q, prefix, d) <= 0) return false;
  }
  return true;
}

}  // namespace quivmod
