// expression.hpp -- tiny constructor grammar for graphs on the command line:
//
//   expr := path(n) | cycle(n) | complete(n) | kbip(a,b) | kbip_mm(n)
//         | ttree(k) | pendant_path(e) | caterpillar(e)
//         | join(expr, expr, ...) | prod(expr, expr)
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fallcol/families.hpp"
#include "fallcol/graph.hpp"

namespace fallcol {

struct ExpressionError : std::runtime_error {
    std::size_t position;
    ExpressionError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    Graph parse() {
        Graph g = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ExpressionError("trailing input", pos_);
        return g;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ExpressionError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    std::string parse_name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) throw ExpressionError("expected a constructor name", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ExpressionError("expected an integer", start);
        long long value = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            value = value * 10 + (text_[i] - '0');
            if (value > 1000000) throw ExpressionError("integer too large", start);
        }
        return static_cast<int>(value);
    }

    Graph parse_expr() {
        std::size_t name_pos = pos_;
        std::string name = parse_name();
        expect('(');
        Graph g = dispatch(name, name_pos);
        expect(')');
        return g;
    }

    Graph dispatch(const std::string& name, std::size_t name_pos) {
        try {
            if (name == "path") return path(parse_int());
            if (name == "cycle") return cycle(parse_int());
            if (name == "complete") return complete(parse_int());
            if (name == "kbip") {
                int a = parse_int();
                expect(',');
                return complete_bipartite(a, parse_int());
            }
            if (name == "kbip_mm") return complete_bipartite_minus_matching(parse_int());
            if (name == "ttree") return t_tree(parse_int());
            if (name == "pendant_path") return pendant_path(parse_int());
            if (name == "caterpillar") return caterpillar(parse_int());
            if (name == "join") {
                std::vector<Graph> parts;
                parts.push_back(parse_expr());
                while (peek_is(',')) {
                    expect(',');
                    parts.push_back(parse_expr());
                }
                return join(parts);
            }
            if (name == "prod") {
                Graph a = parse_expr();
                expect(',');
                Graph b = parse_expr();
                return cartesian_product(a, b);
            }
        } catch (const std::invalid_argument& e) {
            throw ExpressionError(std::string("invalid parameters: ") + e.what(), name_pos);
        }
        throw ExpressionError("unknown constructor '" + name + "'", name_pos);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Graph parse_expression(std::string_view text) {
    return detail::ExpressionParser(text).parse();
}

}  // namespace fallcol
