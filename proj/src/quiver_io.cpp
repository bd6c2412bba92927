#include "quivermag/quiver_io.hpp"

#include <cctype>
#include <unordered_map>

namespace quivermag {

namespace {

enum class TokenKind { identifier, lbrace, rbrace, colon, semicolon, comma, star, arrow, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::identifier: return "identifier";
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::colon: return "':'";
    case TokenKind::semicolon: return "';'";
    case TokenKind::comma: return "','";
    case TokenKind::star: return "'*'";
    case TokenKind::arrow: return "'->'";
    case TokenKind::end: return "end of input";
  }
  return "token";
}

bool is_id_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (is_id_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_id_char(text[j])) ++j;
      tokens.push_back({TokenKind::identifier, std::string(text.substr(i, j - i)), line, column});
      advance(j - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      tokens.push_back({TokenKind::arrow, "->", line, column});
      advance(2);
    } else {
      TokenKind kind;
      switch (c) {
        case '{': kind = TokenKind::lbrace; break;
        case '}': kind = TokenKind::rbrace; break;
        case ':': kind = TokenKind::colon; break;
        case ';': kind = TokenKind::semicolon; break;
        case ',': kind = TokenKind::comma; break;
        case '*': kind = TokenKind::star; break;
        default:
          throw QuiverError(std::string("unexpected character '") + c + "'", line, column);
      }
      tokens.push_back({kind, std::string(1, c), line, column});
      advance(1);
    }
  }
  tokens.push_back({TokenKind::end, "", line, column});
  return tokens;
}

struct ArrowDecl {
  Token label, source, target;
};

// A relation as written, composition order (leftmost acts last).
using RelationDecl = std::vector<Token>;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  BoundQuiver parse() {
    const Token& head = expect(TokenKind::identifier, "'quiver'");
    if (head.text != "quiver") error(head, "expected 'quiver', found '" + head.text + "'");
    expect(TokenKind::lbrace, "'{'");
    do {
      section();
    } while (peek().kind != TokenKind::rbrace);
    expect(TokenKind::rbrace, "'}'");
    expect(TokenKind::end, "end of input");
    return build();
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  const Token& expect(TokenKind kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind) {
      error(t, "expected " + what + ", found " +
                   (t.kind == TokenKind::identifier ? "'" + t.text + "'" : std::string(describe(t.kind))));
    }
    ++pos_;
    return t;
  }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] static void error(const Token& at, const std::string& message) {
    throw QuiverError(message, at.line, at.column);
  }

  bool arrow_ahead() const {
    return peek(0).kind == TokenKind::identifier && peek(1).kind == TokenKind::colon &&
           peek(2).kind == TokenKind::identifier && peek(3).kind == TokenKind::arrow;
  }

  void section() {
    const Token& keyword = expect(TokenKind::identifier, "section keyword");
    expect(TokenKind::colon, "':'");
    if (keyword.text == "vertices") {
      do {
        vertices_.push_back(expect(TokenKind::identifier, "vertex id"));
      } while (peek().kind == TokenKind::identifier);
      expect(TokenKind::semicolon, "';'");
    } else if (keyword.text == "arrows") {
      do {
        ArrowDecl decl;
        decl.label = expect(TokenKind::identifier, "arrow label");
        expect(TokenKind::colon, "':'");
        decl.source = expect(TokenKind::identifier, "source vertex");
        expect(TokenKind::arrow, "'->'");
        decl.target = expect(TokenKind::identifier, "target vertex");
        expect(TokenKind::semicolon, "';'");
        arrows_.push_back(std::move(decl));
      } while (arrow_ahead());
    } else if (keyword.text == "relations") {
      do {
        RelationDecl rel{expect(TokenKind::identifier, "arrow label")};
        do {
          expect(TokenKind::star, "'*'");
          rel.push_back(expect(TokenKind::identifier, "arrow label"));
        } while (peek().kind == TokenKind::star);
        relations_.push_back(std::move(rel));
      } while (accept(TokenKind::comma));
      expect(TokenKind::semicolon, "';'");
    } else {
      error(keyword, "unknown section '" + keyword.text + "' (expected vertices, arrows or relations)");
    }
  }

  BoundQuiver build() const {
    if (vertices_.empty()) error(peek(), "quiver declares no vertices");
    std::unordered_map<std::string, std::size_t> vertex_ids;
    std::vector<std::string> names;
    for (const Token& v : vertices_) {
      if (!vertex_ids.emplace(v.text, names.size()).second) error(v, "duplicate vertex '" + v.text + "'");
      names.push_back(v.text);
    }
    auto vertex = [&](const Token& t) {
      const auto it = vertex_ids.find(t.text);
      if (it == vertex_ids.end()) error(t, "unknown vertex " + t.text);
      return it->second;
    };

    std::unordered_map<std::string, std::size_t> arrow_ids;
    std::vector<Arrow> arrows;
    for (const ArrowDecl& d : arrows_) {
      if (!arrow_ids.emplace(d.label.text, arrows.size()).second) {
        error(d.label, "duplicate arrow label '" + d.label.text + "'");
      }
      arrows.push_back(Arrow{d.label.text, vertex(d.source), vertex(d.target)});
    }
    Quiver quiver(std::move(names), arrows);

    std::vector<Path> relations;
    for (const RelationDecl& rel : relations_) {
      std::vector<std::size_t> traversal;
      for (auto it = rel.rbegin(); it != rel.rend(); ++it) {
        const auto found = arrow_ids.find(it->text);
        if (found == arrow_ids.end()) error(*it, "unknown arrow '" + it->text + "' in relation");
        traversal.push_back(found->second);
      }
      // rel.back() is traversed first; check each junction in traversal order.
      for (std::size_t k = 0; k + 1 < traversal.size(); ++k) {
        const Arrow& first = arrows[traversal[k]];
        const Arrow& then = arrows[traversal[k + 1]];
        if (first.target != then.source) {
          const Token& at = rel[rel.size() - 2 - k];
          error(at, "relation is not composable: '" + then.label + "' starts at '" +
                        quiver.vertices()[then.source] + "' but '" + first.label + "' ends at '" +
                        quiver.vertices()[first.target] + "'");
        }
      }
      const std::size_t source = arrows[traversal.front()].source;
      relations.push_back(make_path(quiver, source, std::move(traversal)));
    }
    return BoundQuiver(std::move(quiver), std::move(relations));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Token> vertices_;
  std::vector<ArrowDecl> arrows_;
  std::vector<RelationDecl> relations_;
};

std::string relation_text(const Quiver& q, const Path& r) { return format_path(q, r); }

}  // namespace

BoundQuiver parse_quiver(std::string_view text) { return Parser(tokenize(text)).parse(); }

nlohmann::ordered_json quiver_to_json(const BoundQuiver& bq) {
  const Quiver& q = bq.quiver();
  nlohmann::ordered_json doc;
  doc["vertices"] = q.vertices();
  doc["arrows"] = nlohmann::ordered_json::array();
  for (const Arrow& a : q.arrows()) {
    doc["arrows"].push_back({{"label", a.label},
                             {"source", q.vertices()[a.source]},
                             {"target", q.vertices()[a.target]}});
  }
  doc["relations"] = nlohmann::ordered_json::array();
  for (const Path& r : bq.relations()) {
    auto labels = nlohmann::ordered_json::array();
    for (std::size_t a : r.arrows) labels.push_back(q.arrows()[a].label);
    doc["relations"].push_back(std::move(labels));
  }
  return doc;
}

BoundQuiver quiver_from_json(const nlohmann::json& doc) {
  try {
    std::vector<std::string> vertices;
    for (const auto& v : doc.at("vertices")) {
      vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    if (vertices.empty()) throw QuiverError("quiver declares no vertices");
    auto vertex = [&](const std::string& id) {
      for (std::size_t k = 0; k < vertices.size(); ++k)
        if (vertices[k] == id) return k;
      throw QuiverError("unknown vertex " + id);
    };
    auto id_of = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    std::vector<Arrow> arrows;
    if (doc.contains("arrows")) {
      for (const auto& a : doc.at("arrows")) {
        arrows.push_back(Arrow{a.at("label").get<std::string>(), vertex(id_of(a.at("source"))),
                               vertex(id_of(a.at("target")))});
      }
    }
    Quiver quiver(std::move(vertices), std::move(arrows));
    std::vector<Path> relations;
    if (doc.contains("relations")) {
      for (const auto& rel : doc.at("relations")) {
        std::vector<std::size_t> traversal;
        for (const auto& label : rel) {
          const auto a = quiver.arrow_index(label.get<std::string>());
          if (!a) throw QuiverError("unknown arrow '" + label.get<std::string>() + "' in relation");
          traversal.push_back(*a);
        }
        if (traversal.empty()) throw QuiverError("empty relation");
        const std::size_t source = quiver.arrows()[traversal.front()].source;
        relations.push_back(make_path(quiver, source, std::move(traversal)));
      }
    }
    return BoundQuiver(std::move(quiver), std::move(relations));
  } catch (const nlohmann::json::exception& e) {
    throw QuiverError(std::string("malformed quiver JSON: ") + e.what());
  }
}

std::string serialize_quiver(const BoundQuiver& bq, QuiverFormat format) {
  if (format == QuiverFormat::json) return quiver_to_json(bq).dump(2) + "\n";

  const Quiver& q = bq.quiver();
  std::string out = "quiver {\n  vertices:";
  for (const auto& v : q.vertices()) out += " " + v;
  out += ";\n";
  if (q.num_arrows() > 0) {
    out += "  arrows:";
    for (const Arrow& a : q.arrows()) {
      out += " " + a.label + ": " + q.vertices()[a.source] + " -> " + q.vertices()[a.target] + ";";
    }
    out += "\n";
  }
  if (!bq.relations().empty()) {
    out += "  relations: ";
    for (std::size_t k = 0; k < bq.relations().size(); ++k) {
      if (k) out += ", ";
      out += relation_text(q, bq.relations()[k]);
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

BoundQuiver load_quiver(std::string_view content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && content[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
      throw QuiverError(std::string("malformed quiver JSON: ") + e.what());
    }
    return quiver_from_json(doc);
  }
  return parse_quiver(content);
}

}  // namespace quivermag
