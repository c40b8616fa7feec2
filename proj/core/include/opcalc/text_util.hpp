#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace opcalc {

std::string trim(std::string_view s);
/// Splits on `sep` at nesting depth 0 with respect to (), [], {} and <>.
std::vector<std::string> split(std::string_view s, char sep);
/// Requires s = open + body + close (after trimming) and returns body.
std::string strip_brackets(std::string_view s, char open, char close);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
/// Wraps s in braces if it contains whitespace, so it reads back as one decoration token.
std::string brace_if_spaced(const std::string& s);

/// Parsed form of the tree grammar
///   node  := 'l' k | '(' 'v' attr* label node* ')' attr*
///   attr  := ':' key '=' value
///   label := '{' text '}' | token
struct TextNode {
    bool is_leaf = false;
    std::size_t leaf = 0;
    std::string label;
    std::map<std::string, std::string> attrs;
    std::vector<TextNode> children;
};

/// Throws std::invalid_argument("at position N: ...") on syntax errors.
TextNode parse_tree_text(std::string_view text);

}  // namespace opcalc
