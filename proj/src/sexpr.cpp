#include "cpath/sexpr.hpp"

#include <cctype>

#include "cpath/error.hpp"

namespace cpath::sexpr {

std::string_view Node::head() const {
    if (kind != Kind::List || items.empty() || !items.front().isAtom()) return {};
    return items.front().atom;
}

namespace {

class Reader {
   public:
    explicit Reader(std::string_view text) : text_(text) {}

    bool atEnd() {
        skipSpace();
        return pos_ >= text_.size();
    }

    Node next() {
        skipSpace();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(' || c == '[') return readList(c == '(' ? ')' : ']');
        if (c == ')' || c == ']') fail(std::string("unexpected '") + c + "'");
        return readAtom();
    }

   private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, column_);
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skipSpace() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    Node readList(char close) {
        Node node;
        node.kind = close == ')' ? Node::Kind::List : Node::Kind::Bracket;
        node.line = line_;
        node.column = column_;
        advance();
        for (;;) {
            skipSpace();
            if (pos_ >= text_.size())
                throw ParseError(std::string("unterminated list, expected '") + close + "'",
                                 node.line, node.column);
            char c = text_[pos_];
            if (c == close) {
                advance();
                return node;
            }
            if (c == ')' || c == ']') fail(std::string("mismatched '") + c + "'");
            node.items.push_back(next());
        }
    }

    Node readAtom() {
        Node node;
        node.line = line_;
        node.column = column_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
                c == '[' || c == ']' || c == ';')
                break;
            node.atom += c;
            advance();
        }
        return node;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

}  // namespace

Node read(std::string_view text) {
    Reader reader(text);
    Node node = reader.next();
    if (!reader.atEnd()) {
        Node extra = reader.next();
        throw ParseError("trailing input after expression", extra.line, extra.column);
    }
    return node;
}

std::vector<Node> readAll(std::string_view text) {
    Reader reader(text);
    std::vector<Node> out;
    while (!reader.atEnd()) out.push_back(reader.next());
    return out;
}

}  // namespace cpath::sexpr
