#include "opcalc/text_util.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace opcalc {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(' || c == '[' || c == '{' || c == '<') ++depth;
        if (c == ')' || c == ']' || c == '}' || c == '>') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

std::string strip_brackets(std::string_view s, char open, char close) {
    const auto t = trim(s);
    if (t.size() < 2 || t.front() != open || t.back() != close)
        throw std::invalid_argument("expected '" + std::string(1, open) + "...'" + std::string(1, close) +
                                    "' in '" + t + "'");
    return t.substr(1, t.size() - 2);
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string brace_if_spaced(const std::string& s) {
    const bool spaced = std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
    return spaced ? "{" + s + "}" : s;
}

namespace {

class TreeTextParser {
public:
    explicit TreeTextParser(std::string_view s) : s_(s) {}

    TextNode document() {
        TextNode n = node();
        skip();
        if (pos_ != s_.size()) fail("trailing characters");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("at position " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void attrs(TextNode& n) {
        while (pos_ < s_.size() && s_[pos_] == ':') {
            ++pos_;
            const auto eq = s_.find('=', pos_);
            if (eq == std::string_view::npos) fail("attribute without '='");
            std::string key(s_.substr(pos_, eq - pos_));
            if (key.empty()) fail("empty attribute name");
            pos_ = eq + 1;
            const auto start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' ||
                                        s_[pos_] == '-' || s_[pos_] == '+'))
                ++pos_;
            if (pos_ == start) fail("empty value for attribute '" + key + "'");
            n.attrs[key] = std::string(s_.substr(start, pos_ - start));
        }
    }

    std::string label() {
        skip();
        if (pos_ >= s_.size()) fail("expected a vertex label");
        if (s_[pos_] == '{') {
            int depth = 0;
            const auto start = pos_;
            for (; pos_ < s_.size(); ++pos_) {
                if (s_[pos_] == '{') ++depth;
                if (s_[pos_] == '}' && --depth == 0) break;
            }
            if (pos_ >= s_.size()) fail("unbalanced '{'");
            ++pos_;
            return std::string(s_.substr(start + 1, pos_ - start - 2));
        }
        int depth = 0;
        const auto start = pos_;
        for (; pos_ < s_.size(); ++pos_) {
            const char c = s_[pos_];
            if (depth == 0 && (std::isspace(static_cast<unsigned char>(c)) || c == ')')) break;
            if (c == '(' || c == '[' || c == '<' || c == '{') ++depth;
            if (c == ')' || c == ']' || c == '>' || c == '}') --depth;
        }
        if (pos_ == start) fail("expected a vertex label");
        return std::string(s_.substr(start, pos_ - start));
    }

    TextNode node() {
        skip();
        TextNode n;
        if (pos_ < s_.size() && s_[pos_] == 'l') {
            ++pos_;
            const auto start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) fail("leaf needs a number");
            n.is_leaf = true;
            n.leaf = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (n.leaf == 0) fail("leaves are numbered from 1");
            return n;
        }
        expect('(');
        if (pos_ >= s_.size() || s_[pos_] != 'v') fail("expected 'v'");
        ++pos_;
        attrs(n);
        n.label = label();
        while (!peek(')')) {
            if (pos_ >= s_.size()) fail("unterminated vertex");
            n.children.push_back(node());
        }
        ++pos_;
        attrs(n);
        if (n.children.empty()) fail("vertex without inputs");
        return n;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

TextNode parse_tree_text(std::string_view text) { return TreeTextParser(text).document(); }

}  // namespace opcalc
