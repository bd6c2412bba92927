#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quivermag {

// Raised for structurally invalid quivers and relations. Parser errors carry
// a 1-based source position; programmatic construction leaves it at 0.
class QuiverError : public std::runtime_error {
 public:
  explicit QuiverError(const std::string& message, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

struct Arrow {
  std::string label;
  std::size_t source;
  std::size_t target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Vertices are kept in declaration order; every matrix in the library is
// indexed in this order.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }

  std::optional<std::size_t> vertex_index(const std::string& id) const;
  std::optional<std::size_t> arrow_index(const std::string& label) const;

  // Arrow indices leaving vertex v, in declaration order.
  const std::vector<std::size_t>& arrows_from(std::size_t v) const { return outgoing_[v]; }
  const std::vector<std::size_t>& arrows_into(std::size_t v) const { return incoming_[v]; }

  // |Q(i, j)|
  std::size_t arrow_count(std::size_t i, std::size_t j) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::size_t>> outgoing_;
  std::vector<std::vector<std::size_t>> incoming_;
};

// A path stored in traversal order: arrows.front() is traversed first. The
// empty path at vertex i is the idempotent e_i. In composition notation the
// path (a, b) is written b*a.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }

  friend bool operator==(const Path&, const Path&) = default;
};

Path idempotent(std::size_t vertex);

// Throws QuiverError if consecutive arrows do not compose.
Path make_path(const Quiver& quiver, std::size_t source, std::vector<std::size_t> arrows);

// "e_<vertex>" for idempotents, otherwise labels in composition order, e.g. "b*a".
std::string format_path(const Quiver& quiver, const Path& path);

bool contains_factor(const std::vector<std::size_t>& word, const std::vector<std::size_t>& factor);

// A quiver with monomial (zero) relations. Construction validates every
// relation and normalizes the set: duplicates and relations that contain
// another relation as a contiguous factor are dropped, first occurrences kept.
class BoundQuiver {
 public:
  BoundQuiver() = default;
  explicit BoundQuiver(Quiver quiver, std::vector<Path> relations = {});

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Path>& relations() const { return relations_; }

  friend bool operator==(const BoundQuiver&, const BoundQuiver&) = default;

 private:
  Quiver quiver_;
  std::vector<Path> relations_;
};

std::vector<Path> normalize_relations(std::vector<Path> relations);

}  // namespace quivermag
