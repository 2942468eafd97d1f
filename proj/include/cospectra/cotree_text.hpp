#pragma once

#include "cospectra/cotree.hpp"
#include "cospectra/errors.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cospectra {

// Cotree text grammar (whitespace-insensitive, '#' comments to end of line):
//   cotree := leaf | node
//   node   := ("J" | "U") "(" item ("," item)* ")"
//   item   := cotree | INT "*" leaf
//   leaf   := IDENT | "_"
// "k*leaf" is shorthand for k copies of that leaf. "J" / "U" are node tags
// only when directly followed by "("; otherwise they read as leaf names.
// The parser returns the tree exactly as written; callers normalize.

namespace detail {

class CotreeScanner {
public:
    explicit CotreeScanner(std::string_view text) : text_(text) {}

    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++pos_;
            } else if (c == '\n') {
                ++pos_;
                ++line_;
                line_start_ = pos_;
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_blank();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void advance() { ++pos_; }
    std::size_t position() const { return pos_; }

    std::string_view take_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::uint64_t take_int() {
        std::uint64_t v = 0;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (1ull << 32)) error_at(start, "leaf repeat count too large");
            ++pos_;
        }
        return v;
    }

    [[noreturn]] void error(const std::string& message) const { error_at(pos_, message); }

    [[noreturn]] void error_at(std::size_t at, const std::string& message) const {
        throw ParseError(line_, at - line_start_ + 1, message);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t line_start_ = 0;
};

} // namespace detail

inline Cotree parse_cotree(std::string_view text) {
    detail::CotreeScanner sc(text);
    if (sc.eof()) sc.error("empty input (expected a cotree)");

    Cotree t;
    std::vector<std::uint32_t> open; // stack of unfinished interior nodes

    auto add_leaf = [&](std::string_view label) {
        if (t.leaves.size() >= (1u << 31)) sc.error("too many leaves");
        auto idx = static_cast<std::uint32_t>(t.leaves.size());
        t.leaves.push_back(Cotree::Leaf{
            open.empty() ? Cotree::npos : open.back(),
            label == "_" ? std::string{} : std::string(label)});
        if (!open.empty()) t.nodes[open.back()].children.push_back(leaf_ref(idx));
    };
    auto open_node = [&](NodeKind kind) {
        auto idx = static_cast<std::uint32_t>(t.nodes.size());
        t.nodes.push_back(Cotree::Interior{kind, open.empty() ? Cotree::npos : open.back(), {}});
        if (!open.empty()) t.nodes[open.back()].children.push_back(node_ref(idx));
        open.push_back(idx);
    };

    // Parses one leaf / node-opening / k*leaf item; returns true if it opened
    // a node (whose children still need to be read).
    auto parse_item_head = [&]() {
        sc.skip_blank();
        char c = sc.peek();
        if (c == '\0') sc.error("unexpected end of input (expected item)");
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t at = sc.position();
            std::uint64_t k = sc.take_int();
            if (k == 0) sc.error_at(at, "leaf repeat count must be at least 1");
            sc.skip_blank();
            if (sc.peek() != '*') sc.error("expected '*' after repeat count");
            sc.advance();
            sc.skip_blank();
            char l = sc.peek();
            if (!(std::isalpha(static_cast<unsigned char>(l)) || l == '_'))
                sc.error("expected leaf after '*'");
            std::string_view label = sc.take_ident();
            for (std::uint64_t i = 0; i < k; ++i) add_leaf(label);
            return false;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string_view word = sc.take_ident();
            if ((word == "J" || word == "U")) {
                sc.skip_blank();
                if (sc.peek() == '(') {
                    sc.advance();
                    open_node(word == "J" ? NodeKind::Join : NodeKind::Union);
                    return true;
                }
            }
            add_leaf(word);
            return false;
        }
        sc.error(std::string("unexpected character '") + c + "'");
    };

    parse_item_head(); // the top-level cotree
    while (!open.empty()) {
        sc.skip_blank();
        char c = sc.peek();
        if (c == ')') {
            if (t.nodes[open.back()].children.empty()) sc.error("empty node");
            sc.advance();
            open.pop_back();
            continue;
        }
        if (c == ',') {
            if (t.nodes[open.back()].children.empty()) sc.error("expected item before ','");
            sc.advance();
            parse_item_head();
            continue;
        }
        if (t.nodes[open.back()].children.empty()) {
            parse_item_head();
            continue;
        }
        if (c == '\0') sc.error("unexpected end of input (unclosed node)");
        sc.error(std::string("expected ',' or ')', got '") + c + "'");
    }
    if (!sc.eof()) sc.error("trailing input after cotree");

    // A lone "k*leaf" at top level has no node to hang the leaves on.
    if (t.nodes.empty() && t.leaves.size() != 1)
        throw ParseError(1, 1, "top-level repeated leaf needs an enclosing node");
    t.root = t.nodes.empty() ? leaf_ref(0) : node_ref(0);
    validate(t);
    return t;
}

// Serializes a cotree in the grammar above. Runs of two or more consecutive
// unlabeled leaf children compress to "k*_". Output re-parses to an
// identical tree (and identical serialization).
inline std::string format_cotree(const Cotree& t) {
    if (t.root.is_leaf) {
        const std::string& label = t.leaves[t.root.index].label;
        return label.empty() ? "_" : label;
    }

    std::string out;
    out.reserve(t.leaves.size() * 2 + t.nodes.size() * 3);
    struct Frame {
        std::uint32_t node;
        std::size_t pos;
    };
    std::vector<Frame> stack;

    auto open_node = [&](std::uint32_t idx) {
        out += kind_letter(t.nodes[idx].kind);
        out += '(';
        stack.push_back(Frame{idx, 0});
    };
    open_node(0);
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& children = t.nodes[f.node].children;
        if (f.pos == children.size()) {
            out += ')';
            stack.pop_back();
            continue;
        }
        if (f.pos > 0) out += ',';
        ChildRef c = children[f.pos];
        if (!c.is_leaf) {
            ++f.pos;
            open_node(c.index);
            continue;
        }
        if (t.leaves[c.index].label.empty()) {
            std::size_t run = 1;
            while (f.pos + run < children.size() && children[f.pos + run].is_leaf &&
                   t.leaves[children[f.pos + run].index].label.empty())
                ++run;
            if (run >= 2) {
                out += std::to_string(run);
                out += "*_";
            } else {
                out += '_';
            }
            f.pos += run;
        } else {
            out += t.leaves[c.index].label;
            ++f.pos;
        }
    }
    return out;
}

enum class InputFormat { CotreeText, EdgeList };

// A file whose first significant character is a digit is an edge list
// ("n m" header); anything else reads as cotree text.
inline InputFormat detect_format(std::string_view text) {
    detail::CotreeScanner sc(text);
    sc.skip_blank();
    return std::isdigit(static_cast<unsigned char>(sc.peek())) ? InputFormat::EdgeList
                                                               : InputFormat::CotreeText;
}

} // namespace cospectra
