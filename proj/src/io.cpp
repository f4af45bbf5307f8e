#include "pathlen/io.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pathlen::io {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_col_at(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::uint32_t check_value_range(unsigned long long value, std::size_t line,
                                std::size_t col) {
  if (value > MAX_DOCUMENT_VALUE) {
    throw ParseError(line, col,
                     "value " + std::to_string(value) + " exceeds the 2^20 cap");
  }
  return static_cast<std::uint32_t>(value);
}

LengthSeq parse_sequence_text(std::string_view text) {
  std::vector<std::uint32_t> values;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < n) {
    const char c = text[i];
    if (c == '#') {
      while (i < n && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      advance(1);
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(line, col, std::string("unexpected character '") + c +
                                      "', expected a non-negative integer");
    }
    const std::size_t tok_line = line, tok_col = col;
    unsigned long long value = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + static_cast<unsigned long long>(text[i] - '0');
      if (value > MAX_DOCUMENT_VALUE) {
        // Keep consuming digits so the error names the whole token.
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) advance(1);
        throw ParseError(tok_line, tok_col, "value exceeds the 2^20 cap");
      }
      advance(1);
    }
    values.push_back(static_cast<std::uint32_t>(value));
  }
  if (values.empty()) {
    throw ParseError(line, col, "empty input, a sequence needs n >= 1 values");
  }
  return LengthSeq(std::move(values));
}

LengthSeq parse_sequence_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col_at(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, col, "invalid JSON");
  }
  if (!doc.is_object() || !doc.contains("lengths")) {
    throw ParseError("JSON sequence document needs a \"lengths\" key");
  }
  const json& arr = doc["lengths"];
  if (!arr.is_array() || arr.empty()) {
    throw ParseError("\"lengths\" must be a non-empty array of integers");
  }
  std::vector<std::uint32_t> values;
  values.reserve(arr.size());
  for (const json& item : arr) {
    if (!item.is_number_unsigned()) {
      throw ParseError("\"lengths\" entries must be non-negative integers");
    }
    values.push_back(check_value_range(item.get<unsigned long long>(), 1, 1));
  }
  return LengthSeq(std::move(values));
}

}  // namespace

LengthSeq parse_sequence(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_sequence_json(text);
    break;
  }
  return parse_sequence_text(text);
}

std::string format_sequence(const LengthSeq& seq) {
  std::string out;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(seq.values()[k]);
  }
  return out;
}

BinTree parse_tree_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col_at(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, col, "invalid JSON");
  }

  // Iterative postorder build; leaves are visited left-to-right, so their
  // declared indices must come out as 1, 2, ..., n.
  struct Frame {
    const json* node;
    int stage;
  };
  std::vector<Frame> work{{&doc, 0}};
  std::vector<BinTree> built;
  std::size_t next_leaf = 1;
  while (!work.empty()) {
    Frame& f = work.back();
    const json& node = *f.node;
    if (f.stage == 0) {
      if (!node.is_object()) {
        throw ParseError("tree nodes must be JSON objects");
      }
      if (node.contains("leaf")) {
        if (node.size() != 1 || !node["leaf"].is_number_unsigned()) {
          throw ParseError("a leaf node is exactly {\"leaf\": k} with k >= 1");
        }
        if (node["leaf"].get<unsigned long long>() != next_leaf) {
          throw ParseError("leaf indices must read 1..n left to right; leaf " +
                           std::to_string(next_leaf) + " is labelled " +
                           node["leaf"].dump());
        }
        ++next_leaf;
        built.push_back(BinTree::leaf());
        work.pop_back();
        continue;
      }
      if (!node.contains("left") || !node.contains("right") || node.size() != 2) {
        throw ParseError(
            "an internal node is exactly {\"left\": ..., \"right\": ...}");
      }
      f.stage = 1;
      work.push_back(Frame{&node["left"], 0});
    } else if (f.stage == 1) {
      f.stage = 2;
      work.push_back(Frame{&node["right"], 0});
    } else {
      BinTree right = std::move(built.back());
      built.pop_back();
      BinTree left = std::move(built.back());
      built.pop_back();
      built.push_back(BinTree::internal(std::move(left), std::move(right)));
      work.pop_back();
    }
  }
  return std::move(built.front());
}

std::string tree_to_json(const BinTree& tree) {
  // Emit text directly, leaf indices regenerated left to right.
  struct Frame {
    const BinTree* node;
    int stage;
  };
  std::string out;
  std::size_t next_leaf = 1;
  std::vector<Frame> work{{&tree, 0}};
  while (!work.empty()) {
    Frame& f = work.back();
    if (f.node->is_leaf()) {
      out += "{\"leaf\":" + std::to_string(next_leaf++) + "}";
      work.pop_back();
      continue;
    }
    if (f.stage == 0) {
      out += "{\"left\":";
      f.stage = 1;
      work.push_back(Frame{&f.node->left(), 0});
    } else if (f.stage == 1) {
      out += ",\"right\":";
      f.stage = 2;
      work.push_back(Frame{&f.node->right(), 0});
    } else {
      out += "}";
      work.pop_back();
    }
  }
  return out;
}

std::string tree_to_dot(const BinTree& tree) {
  struct Frame {
    const BinTree* node;
    std::string id;  // codeword bitstring, "ε" for the root
    int stage;
  };
  std::string out = "digraph code {\n";
  std::size_t next_leaf = 1;
  std::vector<Frame> work{{&tree, "ε", 0}};
  while (!work.empty()) {
    Frame& f = work.back();
    if (f.node->is_leaf()) {
      out += "  \"" + f.id + "\" [shape=box label=\"v" + std::to_string(next_leaf++) +
             "\"];\n";
      work.pop_back();
      continue;
    }
    const std::string prefix = f.id == "ε" ? "" : f.id;
    if (f.stage == 0) {
      f.stage = 1;
      out += "  \"" + f.id + "\" -> \"" + prefix + "0\" [label=0];\n";
      work.push_back(Frame{&f.node->left(), prefix + "0", 0});
    } else if (f.stage == 1) {
      f.stage = 2;
      out += "  \"" + f.id + "\" -> \"" + prefix + "1\" [label=1];\n";
      work.push_back(Frame{&f.node->right(), prefix + "1", 0});
    } else {
      work.pop_back();
    }
  }
  out += "}\n";
  return out;
}

namespace {

std::string island_line(const IslandNode& node) {
  return to_string(node.seg) + " min=" + std::to_string(node.seg_min) +
         " m=" + std::to_string(node.m) + " K=" + node.kraft.str() +
         " scaled=" + node.kraft.scaled_pow2(node.m).str();
}

}  // namespace

std::string island_tree_to_text(const IslandTree& tree) {
  const IslandForest& forest = tree.forest();
  struct Frame {
    std::size_t idx;
    std::size_t depth;
  };
  std::string out;
  std::vector<Frame> work{{tree.root_index(), 0}};
  while (!work.empty()) {
    Frame f = work.back();
    work.pop_back();
    const IslandNode& node = forest.node(f.idx);
    out += std::string(2 * f.depth, ' ') + island_line(node) + "\n";
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      work.push_back(Frame{*it, f.depth + 1});
    }
  }
  return out;
}

std::string island_tree_to_dot(const IslandTree& tree) {
  const IslandForest& forest = tree.forest();
  std::string out = "digraph islands {\n";
  std::vector<std::size_t> work{tree.root_index()};
  while (!work.empty()) {
    const std::size_t idx = work.back();
    work.pop_back();
    const IslandNode& node = forest.node(idx);
    out += "  \"" + to_string(node.seg) + "\" [label=\"" + island_line(node) + "\"];\n";
    for (std::size_t child : node.children) {
      out += "  \"" + to_string(node.seg) + "\" -> \"" +
             to_string(forest.node(child).seg) + "\";\n";
    }
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      work.push_back(*it);
    }
  }
  out += "}\n";
  return out;
}

std::string validation_report(const LengthSeq& seq, const Verdict& verdict) {
  std::string out;
  IslandForest forest(seq);
  for (const IslandNode& node : forest.nodes()) {
    out += "island " + to_string(node.seg) + ": m=" + std::to_string(node.m) +
           " K=" + node.kraft.str() +
           " scaled=" + node.kraft.scaled_pow2(node.m).str() + "\n";
  }
  out += verdict.valid ? "valid\n" : "invalid: " + verdict.describe() + "\n";
  return out;
}

}  // namespace pathlen::io
