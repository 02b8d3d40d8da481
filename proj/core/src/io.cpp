#include "treechild/io.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "treechild/isomorphism.hpp"

namespace treechild {

ParseError::ParseError(std::size_t offset, std::size_t line, std::size_t column, std::string message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      offset_(offset),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

namespace {

std::string with_position(const std::string& message, const std::optional<TextPosition>& at) {
  if (!at) return message;
  return "line " + std::to_string(at->line) + ", column " + std::to_string(at->column) + ": " + message;
}

}  // namespace

SemanticError::SemanticError(std::string message, ValidationReport report, std::optional<TextPosition> position)
    : std::runtime_error(with_position(message, position)),
      report_(std::move(report)),
      position_(position),
      message_(std::move(message)) {}

namespace {

bool is_reserved(char c) {
  switch (c) {
    case '(': case ')': case ',': case ';': case ':':
    case '[': case ']': case '\'': case '#':
      return true;
    default:
      return static_cast<unsigned char>(c) <= 0x20 || c == 0x7f;
  }
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  void skip_space() {
    while (!at_end() && static_cast<unsigned char>(text_[pos_]) <= 0x20) ++pos_;
  }

  std::string_view token() {
    std::size_t start = pos_;
    while (!at_end() && !is_reserved(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    TextPosition at = position_of(offset);
    throw ParseError(offset, at.line, at.column, message);
  }

  TextPosition position_of(std::size_t offset) const {
    TextPosition at{offset, 1, 1};
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++at.line;
        at.column = 1;
      } else {
        ++at.column;
      }
    }
    return at;
  }

  std::string describe_here() const {
    if (at_end()) return "end of input";
    return std::string("'") + text_[pos_] + "'";
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct ParsedNode {
  std::vector<std::size_t> children;
  std::string name;
  std::string hybrid;
  std::size_t offset = 0;
  bool has_parens = false;
};

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : cur_(text) {}

  RootedNetwork parse() {
    cur_.skip_space();
    std::size_t root = subtree();
    cur_.skip_space();
    if (cur_.peek() != ';') cur_.fail("expected ',' ')' or ';' but found " + cur_.describe_here());
    cur_.advance();
    cur_.skip_space();
    if (!cur_.at_end()) cur_.fail("unexpected text after ';'");
    return assemble(root);
  }

 private:
  std::size_t subtree() {
    cur_.skip_space();
    ParsedNode node;
    node.offset = cur_.pos();
    if (cur_.peek() == '(') {
      node.has_parens = true;
      cur_.advance();
      while (true) {
        node.children.push_back(subtree());
        cur_.skip_space();
        if (cur_.peek() == ',') {
          cur_.advance();
          continue;
        }
        if (cur_.peek() == ')') {
          cur_.advance();
          break;
        }
        cur_.fail("expected ',' or ')' but found " + cur_.describe_here());
      }
      cur_.skip_space();
      std::size_t name_at = cur_.pos();
      if (!cur_.token().empty()) cur_.fail_at(name_at, "internal node labels are not supported");
    } else {
      node.name = std::string(cur_.token());
    }
    if (cur_.peek() == '#') {
      cur_.advance();
      std::size_t tag_at = cur_.pos();
      node.hybrid = std::string(cur_.token());
      if (node.hybrid.empty()) cur_.fail_at(tag_at, "expected a hybrid tag after '#'");
    }
    if (!node.has_parens && node.name.empty() && node.hybrid.empty())
      cur_.fail("expected '(', a leaf label or a hybrid tag but found " + cur_.describe_here());
    cur_.skip_space();
    if (cur_.peek() == ':') cur_.fail("branch lengths are not supported");
    if (cur_.peek() == '[') cur_.fail("comments are not supported");
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  RootedNetwork assemble(std::size_t root) {
    // Resolve hybrid tags: the occurrence with content defines the vertex,
    // the bare one is a reference to it.
    std::map<std::string, std::vector<std::size_t>> occurrences;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (!nodes_[i].hybrid.empty()) occurrences[nodes_[i].hybrid].push_back(i);

    std::vector<std::size_t> canonical(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) canonical[i] = i;
    std::set<std::size_t> references;
    for (const auto& [tag, where] : occurrences) {
      if (where.size() != 2)
        throw SemanticError("hybrid tag #" + tag + " appears " + std::to_string(where.size()) +
                                " times; expected exactly 2",
                            {}, cur_.position_of(nodes_[where[0]].offset));
      auto has_content = [&](std::size_t i) { return nodes_[i].has_parens || !nodes_[i].name.empty(); };
      // Nodes are numbered in post-order, so compare offsets for textual order.
      std::size_t first = nodes_[where[0]].offset < nodes_[where[1]].offset ? where[0] : where[1];
      std::size_t second = first == where[0] ? where[1] : where[0];
      if (has_content(first) && has_content(second))
        throw SemanticError("hybrid tag #" + tag + " is defined twice", {}, cur_.position_of(nodes_[second].offset));
      std::size_t def = has_content(second) ? second : first;
      std::size_t ref = def == first ? second : first;
      canonical[ref] = def;
      references.insert(ref);
    }

    RawDigraph raw;
    std::vector<VertexId> vertex(nodes_.size(), kNoVertex);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (!references.count(i)) vertex[i] = static_cast<VertexId>(raw.vertex_count++);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (references.count(i)) continue;
      for (std::size_t c : nodes_[i].children) raw.arcs.emplace_back(vertex[i], vertex[canonical[c]]);
      if (!nodes_[i].name.empty()) {
        if (!seen.insert(nodes_[i].name).second)
          throw SemanticError("duplicate leaf label '" + nodes_[i].name + "'", {}, cur_.position_of(nodes_[i].offset));
        raw.labels[vertex[i]] = nodes_[i].name;
      }
    }
    if (references.count(root))
      throw SemanticError("the root cannot be a hybrid reference", {}, cur_.position_of(nodes_[root].offset));
    ValidationReport report = validate_rooted(raw);
    if (!report.ok()) {
      // Point at the first vertex named by the report, if any.
      std::optional<TextPosition> at;
      for (const auto& violation : report.violations) {
        if (violation.vertices.empty()) continue;
        for (std::size_t i = 0; i < nodes_.size() && !at; ++i)
          if (vertex[i] == violation.vertices.front()) at = cur_.position_of(nodes_[i].offset);
        if (at) break;
      }
      throw SemanticError("invalid network: " + report.summary(), report, at);
    }
    return RootedNetwork::from_raw(raw);
  }

  Cursor cur_;
  std::vector<ParsedNode> nodes_;
};

std::vector<std::pair<std::size_t, std::string_view>> split_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(start, line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

struct Token {
  std::size_t column;
  std::string_view text;
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
  while (i < line.size()) {
    while (i < line.size() && space(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !space(line[i])) ++i;
    tokens.push_back({start, line.substr(start, i - start)});
  }
  return tokens;
}

std::map<VertexId, std::string> min_descendant_labels(const RootedNetwork& net) {
  std::map<VertexId, std::string> memo;
  std::function<const std::string&(VertexId)> visit = [&](VertexId v) -> const std::string& {
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    std::string best;
    if (const std::string* l = net.label_of(v)) best = *l;
    for (VertexId c : net.children(v)) {
      const std::string& sub = visit(c);
      if (best.empty() || sub < best) best = sub;
    }
    return memo.emplace(v, std::move(best)).first->second;
  };
  for (VertexId v : net.vertex_ids()) visit(v);
  return memo;
}

}  // namespace

// ----------------------------------------------------------------- rooted

RootedNetwork parse_rooted(std::string_view text) { return NewickParser(text).parse(); }

std::vector<RootedNetwork> parse_rooted_document(std::string_view text) {
  std::vector<RootedNetwork> out;
  for (auto [offset, line] : split_lines(text)) {
    if (split_tokens(line).empty()) continue;
    try {
      out.push_back(parse_rooted(line));
    } catch (const ParseError& e) {
      // Re-anchor the position to the whole document.
      std::size_t line_no = 1;
      for (std::size_t i = 0; i < offset; ++i)
        if (text[i] == '\n') ++line_no;
      throw ParseError(offset + e.offset(), line_no, e.column(), e.message());
    } catch (const SemanticError& e) {
      if (!e.position()) throw;
      std::size_t line_no = 1;
      for (std::size_t i = 0; i < offset; ++i)
        if (text[i] == '\n') ++line_no;
      throw SemanticError(e.message(), e.report(),
                          TextPosition{offset + e.position()->offset, line_no, e.position()->column});
    }
  }
  return out;
}

std::string serialize_rooted(const RootedNetwork& net) {
  if (net.is_single_vertex()) return *net.label_of(net.root()) + ";";

  CanonicalForm form = canonical_form(net);
  std::map<VertexId, std::size_t> rank;
  for (std::size_t i = 0; i < form.order.size(); ++i) rank[form.order[i]] = i;
  auto min_label = min_descendant_labels(net);

  std::map<VertexId, int> hybrid_tag;
  int next_tag = 1;
  std::string out;
  std::function<void(VertexId)> emit = [&](VertexId v) {
    if (const std::string* l = net.label_of(v)) {
      out += *l;
      return;
    }
    const bool reticulation = net.is_reticulation(v);
    if (reticulation) {
      auto it = hybrid_tag.find(v);
      if (it != hybrid_tag.end()) {
        out += "#H" + std::to_string(it->second);
        return;
      }
      hybrid_tag[v] = next_tag++;
    }
    std::vector<VertexId> kids(net.children(v).begin(), net.children(v).end());
    std::sort(kids.begin(), kids.end(), [&](VertexId a, VertexId b) {
      return std::tie(min_label[a], rank[a]) < std::tie(min_label[b], rank[b]);
    });
    out += '(';
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i) out += ',';
      emit(kids[i]);
    }
    out += ')';
    if (reticulation) out += "#H" + std::to_string(hybrid_tag[v]);
  };
  emit(net.root());
  return out + ";";
}

// --------------------------------------------------------------- unrooted

UnrootedNetwork parse_unrooted(std::string_view text) {
  auto lines = split_lines(text);
  RawGraph raw;
  std::map<std::string, VertexId, std::less<>> ids;
  std::vector<std::string> names;
  std::vector<TextPosition> first_seen;
  bool header = false;
  auto vertex_for = [&](std::size_t line_index, const auto& token) {
    auto it = ids.find(token.text);
    if (it != ids.end()) return it->second;
    auto id = static_cast<VertexId>(names.size());
    ids.emplace(std::string(token.text), id);
    names.emplace_back(token.text);
    first_seen.push_back({lines[line_index].first + token.column, line_index + 1, token.column + 1});
    return id;
  };
  auto fail = [&](std::size_t line_index, std::size_t column, const std::string& message) {
    throw ParseError(lines[line_index].first + column, line_index + 1, column + 1, message);
  };

  for (std::size_t li = 0; li < lines.size(); ++li) {
    auto tokens = split_tokens(lines[li].second);
    if (tokens.empty()) continue;
    if (!header) {
      if (tokens.size() != 1 || tokens[0].text != "unrooted")
        fail(li, tokens[0].column, "expected header line 'unrooted'");
      header = true;
      continue;
    }
    if (tokens.size() > 2) fail(li, tokens[2].column, "expected at most two tokens per line");
    VertexId u = vertex_for(li, tokens[0]);
    if (tokens.size() == 2) raw.edges.emplace_back(u, vertex_for(li, tokens[1]));
  }
  if (!header) throw ParseError(text.size(), 1, 1, "expected header line 'unrooted'");

  raw.vertex_count = names.size();
  std::vector<std::size_t> degree(names.size(), 0);
  for (auto [u, v] : raw.edges) {
    ++degree[u];
    ++degree[v];
  }
  for (VertexId v = 0; v < names.size(); ++v)
    if (degree[v] <= 1) raw.labels[v] = names[v];
  ValidationReport report = validate_unrooted(raw);
  if (!report.ok()) {
    std::optional<TextPosition> at;
    for (const auto& violation : report.violations)
      if (!violation.vertices.empty() && violation.vertices.front() < first_seen.size()) {
        at = first_seen[violation.vertices.front()];
        break;
      }
    throw SemanticError("invalid network: " + report.summary(), report, at);
  }
  return UnrootedNetwork::from_raw(raw);
}

std::string serialize_unrooted(const UnrootedNetwork& net) {
  std::string out = "unrooted\n";
  if (net.is_single_vertex()) return out + net.leaves().entries()[0].first + "\n";

  // Internal vertices are named by canonical position behind a prefix no
  // leaf label starts with.
  std::string prefix = "_";
  auto clashes = [&] {
    return std::any_of(net.leaves().entries().begin(), net.leaves().entries().end(),
                       [&](const auto& e) { return e.first.rfind(prefix, 0) == 0; });
  };
  while (clashes()) prefix += '_';

  CanonicalForm form = canonical_form(net);
  std::map<VertexId, std::string> name;
  std::size_t internal = 0;
  for (VertexId v : form.order) {
    if (const std::string* l = net.label_of(v))
      name[v] = *l;
    else
      name[v] = prefix + std::to_string(++internal);
  }
  std::vector<std::pair<std::string, std::string>> lines;
  for (auto [u, v] : net.edges()) {
    const std::string& a = name[u];
    const std::string& b = name[v];
    lines.push_back(a < b ? std::pair{a, b} : std::pair{b, a});
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [a, b] : lines) out += a + " " + b + "\n";
  return out;
}

// --------------------------------------------------------------- sequence

CherryPickingSequence parse_sequence(std::string_view text) {
  auto lines = split_lines(text);
  CherryPickingSequence seq;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    auto [offset, line] = lines[li];
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    auto fail = [&](std::size_t column, const std::string& message) {
      throw ParseError(offset + column, li + 1, column + 1, message);
    };
    if (tokens.size() != 3)
      fail(tokens[std::min<std::size_t>(tokens.size() - 1, 3)].column,
           "expected '<C|R> x y', found " + std::to_string(tokens.size()) + " tokens");
    ReductionKind kind = ReductionKind::Cherry;
    if (tokens[0].text == "C")
      kind = ReductionKind::Cherry;
    else if (tokens[0].text == "R")
      kind = ReductionKind::ReticulatedCherry;
    else
      fail(tokens[0].column, "unknown tag '" + std::string(tokens[0].text) + "'; expected C or R");
    for (std::size_t t = 1; t < 3; ++t)
      if (!is_valid_label(tokens[t].text))
        fail(tokens[t].column, "invalid leaf label '" + std::string(tokens[t].text) + "'");
    if (tokens[1].text == tokens[2].text) fail(tokens[2].column, "both coordinates name the same leaf");
    seq.push_back({kind, std::string(tokens[1].text), std::string(tokens[2].text)});
  }
  return seq;
}

std::string serialize_sequence(const CherryPickingSequence& seq) {
  std::string out;
  for (const auto& r : seq) out += (r.is_cherry() ? "C " : "R ") + r.x + " " + r.y + "\n";
  return out;
}

}  // namespace treechild
