#include "shadowlab/vertex_subset.hpp"

#include "shadowlab/errors.hpp"

namespace shadowlab {

namespace {

void check_label(Vertex v) {
  if (v < 1 || v > kMaxVertices) {
    throw Error(ErrorKind::Range, "vertex label " + std::to_string(v) + " outside 1.." +
                                      std::to_string(kMaxVertices));
  }
}

}  // namespace

VertexSubset::VertexSubset(std::initializer_list<Vertex> vertices)
    : VertexSubset(from_vertices(std::span<const Vertex>(vertices.begin(), vertices.size()))) {}

VertexSubset VertexSubset::from_vertices(std::span<const Vertex> vertices) {
  Mask bits = 0;
  for (Vertex v : vertices) {
    check_label(v);
    if (bits & vertex_bit(v)) {
      throw Error(ErrorKind::InvalidInput, "duplicate vertex " + std::to_string(v));
    }
    bits |= vertex_bit(v);
  }
  return from_mask(bits);
}

VertexSubset VertexSubset::interval(Vertex first, Vertex last) {
  if (last < first) return {};
  check_label(first);
  check_label(last);
  return from_mask(prefix_mask(last) & ~prefix_mask(first - 1));
}

VertexSubset VertexSubset::with(Vertex v) const {
  check_label(v);
  return from_mask(bits_ | vertex_bit(v));
}

VertexSubset VertexSubset::without(Vertex v) const {
  check_label(v);
  return from_mask(bits_ & ~vertex_bit(v));
}

std::vector<Vertex> VertexSubset::vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::string VertexSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace shadowlab
