#include "quivermag/quiver.hpp"

#include <algorithm>
#include <unordered_set>

namespace quivermag {

namespace {

std::string with_position(const std::string& message, std::size_t line, std::size_t column) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

}  // namespace

QuiverError::QuiverError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(with_position(message, line, column)),
      message_(message),
      line_(line),
      column_(column) {}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  if (vertices_.empty()) throw QuiverError("quiver has no vertices");
  std::unordered_set<std::string> seen;
  for (const auto& v : vertices_) {
    if (v.empty()) throw QuiverError("empty vertex id");
    if (!seen.insert(v).second) throw QuiverError("duplicate vertex '" + v + "'");
  }
  seen.clear();
  outgoing_.resize(vertices_.size());
  incoming_.resize(vertices_.size());
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    const Arrow& a = arrows_[k];
    if (a.label.empty()) throw QuiverError("empty arrow label");
    if (!seen.insert(a.label).second) throw QuiverError("duplicate arrow label '" + a.label + "'");
    if (a.source >= vertices_.size() || a.target >= vertices_.size()) {
      throw QuiverError("arrow '" + a.label + "' has an endpoint outside the vertex set");
    }
    outgoing_[a.source].push_back(k);
    incoming_[a.target].push_back(k);
  }
}

std::optional<std::size_t> Quiver::vertex_index(const std::string& id) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& label) const {
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].label == label) return k;
  return std::nullopt;
}

std::size_t Quiver::arrow_count(std::size_t i, std::size_t j) const {
  return static_cast<std::size_t>(std::count_if(outgoing_[i].begin(), outgoing_[i].end(),
                                                [&](std::size_t a) { return arrows_[a].target == j; }));
}

Path idempotent(std::size_t vertex) { return Path{vertex, vertex, {}}; }

Path make_path(const Quiver& quiver, std::size_t source, std::vector<std::size_t> arrows) {
  if (source >= quiver.num_vertices()) throw QuiverError("path source outside the vertex set");
  std::size_t at = source;
  for (std::size_t a : arrows) {
    if (a >= quiver.num_arrows()) throw QuiverError("path uses an unknown arrow");
    const Arrow& arrow = quiver.arrows()[a];
    if (arrow.source != at) {
      throw QuiverError("arrow '" + arrow.label + "' starts at '" + quiver.vertices()[arrow.source] +
                        "' but the path is at '" + quiver.vertices()[at] + "'");
    }
    at = arrow.target;
  }
  return Path{source, at, std::move(arrows)};
}

std::string format_path(const Quiver& quiver, const Path& path) {
  if (path.arrows.empty()) return "e_" + quiver.vertices()[path.source];
  std::string out;
  for (auto it = path.arrows.rbegin(); it != path.arrows.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += quiver.arrows()[*it].label;
  }
  return out;
}

bool contains_factor(const std::vector<std::size_t>& word, const std::vector<std::size_t>& factor) {
  return std::search(word.begin(), word.end(), factor.begin(), factor.end()) != word.end();
}

std::vector<Path> normalize_relations(std::vector<Path> relations) {
  std::vector<Path> unique;
  for (auto& r : relations) {
    if (std::find(unique.begin(), unique.end(), r) == unique.end()) unique.push_back(std::move(r));
  }
  std::vector<Path> kept;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < unique.size() && !redundant; ++j) {
      redundant = i != j && contains_factor(unique[i].arrows, unique[j].arrows);
    }
    if (!redundant) kept.push_back(unique[i]);
  }
  return kept;
}

BoundQuiver::BoundQuiver(Quiver quiver, std::vector<Path> relations) : quiver_(std::move(quiver)) {
  for (const Path& r : relations) {
    const Path checked = make_path(quiver_, r.source, r.arrows);
    if (checked.target != r.target) throw QuiverError("relation target does not match its arrows");
    if (r.length() < 2) {
      throw QuiverError("relation '" + format_path(quiver_, r) + "' has length " +
                        std::to_string(r.length()) + "; relations need at least two arrows");
    }
  }
  relations_ = normalize_relations(std::move(relations));
}

}  // namespace quivermag
