#include "vext/parser.hpp"

#include <cctype>
#include <utility>

#include "vext/errors.hpp"

namespace vext {

namespace {

struct Token {
    enum class Type { Number, Ident, Op, LParen, RParen, LBracket, RBracket,
                      LBrace, RBrace, Comma, Semi, End };
    Type type = Type::End;
    std::string text;
    Rat value;
    int col = 1;
};

std::string token_desc(const Token& t) {
    if (t.type == Token::Type::End) return "end of line";
    return "'" + t.text + "'";
}

class Lexer {
public:
    Lexer(const std::string& text, int line) : text_(text), line_(line) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] == '#') break;
            out.push_back(next());
        }
        Token end;
        end.type = Token::Type::End;
        end.col = static_cast<int>(pos_) + 1;
        out.push_back(end);
        return out;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(int col, const std::string& msg) const {
        throw SyntaxError(line_, col, msg);
    }

    Token next() {
        const int col = static_cast<int>(pos_) + 1;
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return number(col);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident(col);
        ++pos_;
        Token t;
        t.col = col;
        switch (c) {
            case '(': t.type = Token::Type::LParen; t.text = "("; return t;
            case ')': t.type = Token::Type::RParen; t.text = ")"; return t;
            case '[': t.type = Token::Type::LBracket; t.text = "["; return t;
            case ']': t.type = Token::Type::RBracket; t.text = "]"; return t;
            case '{': t.type = Token::Type::LBrace; t.text = "{"; return t;
            case '}': t.type = Token::Type::RBrace; t.text = "}"; return t;
            case ',': t.type = Token::Type::Comma; t.text = ","; return t;
            case ';': t.type = Token::Type::Semi; t.text = ";"; return t;
            case '+': case '-': case '*': case '/': case '^':
                t.type = Token::Type::Op; t.text = std::string(1, c); return t;
            case '<': case '>':
                t.type = Token::Type::Op;
                t.text = std::string(1, c);
                if (pos_ < text_.size() && text_[pos_] == '=') { t.text += '='; ++pos_; }
                return t;
            case '=':
                t.type = Token::Type::Op;
                t.text = "=";
                if (pos_ < text_.size() && text_[pos_] == '=') { t.text = "=="; ++pos_; }
                return t;
            case '!':
                if (pos_ < text_.size() && text_[pos_] == '=') {
                    ++pos_;
                    t.type = Token::Type::Op;
                    t.text = "!=";
                    return t;
                }
                fail(col, "unexpected '!'; expected '!='");
            default:
                fail(col, std::string("unexpected character '") + c + "'");
        }
    }

    Token number(int col) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail(static_cast<int>(pos_) + 1, "expected digits after decimal point");
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        Token t;
        t.type = Token::Type::Number;
        t.text = text_.substr(start, pos_ - start);
        t.col = col;
        std::optional<Rat> v = rat_from_string(t.text);
        if (!v) fail(col, "malformed number '" + t.text + "'");
        t.value = *v;
        return t;
    }

    Token ident(int col) {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        Token t;
        t.type = Token::Type::Ident;
        t.text = text_.substr(start, pos_ - start);
        t.col = col;
        // The numeric standard-part operator reads as a single name.
        if (t.text == "st" && pos_ < text_.size() && text_[pos_] == '~') {
            ++pos_;
            t.text = "st~";
        }
        return t;
    }

    const std::string& text_;
    int line_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, int line) : tokens_(std::move(tokens)), line_(line) {}

    AstPtr statement() {
        if (peek().type == Token::Type::End) return nullptr;
        AstPtr node;
        if (peek().type == Token::Type::Ident && peek(1).type == Token::Type::Op &&
            peek(1).text == "=") {
            Token target = take();
            Token eq = take();
            AstPtr value = comparison();
            auto a = std::make_shared<Ast>();
            a->kind = Ast::Kind::Assign;
            a->name = target.text;
            a->kids.push_back(std::move(value));
            a->line = line_;
            a->col = eq.col;
            node = a;
        } else {
            node = comparison();
        }
        expect_end();
        return node;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        if (i >= tokens_.size()) i = tokens_.size() - 1;
        return tokens_[i];
    }

    Token take() { return tokens_[pos_ >= tokens_.size() - 1 ? pos_ : pos_++]; }

    [[noreturn]] void fail(const Token& at, const std::string& expected) const {
        throw SyntaxError(line_, at.col, "expected " + expected + ", found " + token_desc(at));
    }

    void expect_end() const {
        if (peek().type != Token::Type::End) fail(peek(), "end of line");
    }

    bool at_op(const char* text) const {
        return peek().type == Token::Type::Op && peek().text == text;
    }

    bool at_comparison() const {
        if (peek().type != Token::Type::Op) return false;
        const std::string& s = peek().text;
        return s == "<" || s == "<=" || s == "==" || s == "!=" || s == ">=" || s == ">";
    }

    AstPtr comparison() {
        AstPtr left = additive();
        if (!at_comparison()) return left;
        Token op = take();
        AstPtr right = additive();
        if (at_comparison())
            fail(peek(), "a single comparison (chained comparisons are ambiguous)");
        auto a = std::make_shared<Ast>();
        a->kind = Ast::Kind::Compare;
        a->name = op.text;
        a->kids = {std::move(left), std::move(right)};
        a->line = line_;
        a->col = op.col;
        return a;
    }

    AstPtr additive() {
        AstPtr left = multiplicative();
        while (at_op("+") || at_op("-")) {
            Token op = take();
            AstPtr right = multiplicative();
            left = binary(op, std::move(left), std::move(right));
        }
        return left;
    }

    AstPtr multiplicative() {
        AstPtr left = unary();
        while (at_op("*") || at_op("/")) {
            Token op = take();
            AstPtr right = unary();
            left = binary(op, std::move(left), std::move(right));
        }
        return left;
    }

    AstPtr unary() {
        if (at_op("-")) {
            Token op = take();
            AstPtr inner = unary();
            auto a = std::make_shared<Ast>();
            a->kind = Ast::Kind::Neg;
            a->name = "-";
            a->kids.push_back(std::move(inner));
            a->line = line_;
            a->col = op.col;
            return a;
        }
        return power();
    }

    AstPtr power() {
        AstPtr base = atom();
        if (!at_op("^")) return base;
        Token op = take();
        if (peek().type != Token::Type::Number || !is_integer(peek().value))
            fail(peek(), "a nonnegative integer exponent");
        Token exp = take();
        auto k = std::make_shared<Ast>();
        k->kind = Ast::Kind::Number;
        k->number = exp.value;
        k->line = line_;
        k->col = exp.col;
        auto a = std::make_shared<Ast>();
        a->kind = Ast::Kind::Binary;
        a->name = "^";
        a->kids = {std::move(base), std::move(k)};
        a->line = line_;
        a->col = op.col;
        if (at_op("^")) fail(peek(), "no further '^' (exponent chains need parentheses)");
        return a;
    }

    AstPtr binary(const Token& op, AstPtr left, AstPtr right) {
        auto a = std::make_shared<Ast>();
        a->kind = Ast::Kind::Binary;
        a->name = op.text;
        a->kids = {std::move(left), std::move(right)};
        a->line = line_;
        a->col = op.col;
        return a;
    }

    AstPtr atom() {
        const Token& t = peek();
        switch (t.type) {
            case Token::Type::Number: {
                Token num = take();
                auto a = std::make_shared<Ast>();
                a->kind = Ast::Kind::Number;
                a->number = num.value;
                a->line = line_;
                a->col = num.col;
                return a;
            }
            case Token::Type::LParen: {
                take();
                AstPtr inner = comparison();
                if (peek().type != Token::Type::RParen) fail(peek(), "')'");
                take();
                return inner;
            }
            case Token::Type::Ident: {
                Token id = take();
                if (id.text == "cyc") return cyc_literal(id);
                if (peek().type == Token::Type::LParen) return call(id);
                auto a = std::make_shared<Ast>();
                a->kind = Ast::Kind::Ident;
                a->name = id.text;
                a->line = line_;
                a->col = id.col;
                return a;
            }
            default:
                fail(t, "a number, name, 'cyc[...]', '(' or '-'");
        }
    }

    // cyc[a, b] and cyc{a; b} denote the same value; ',' and ';' both separate
    // items so canonical output feeds back in.
    AstPtr cyc_literal(const Token& id) {
        bool brace;
        if (peek().type == Token::Type::LBracket) brace = false;
        else if (peek().type == Token::Type::LBrace) brace = true;
        else fail(peek(), "'[' or '{' after 'cyc'");
        take();
        auto a = std::make_shared<Ast>();
        a->kind = Ast::Kind::Cyc;
        a->name = id.text;
        a->line = line_;
        a->col = id.col;
        const Token::Type close = brace ? Token::Type::RBrace : Token::Type::RBracket;
        const char* close_text = brace ? "'}'" : "']'";
        while (true) {
            a->kids.push_back(comparison());
            if (peek().type == Token::Type::Comma || peek().type == Token::Type::Semi) {
                take();
                continue;
            }
            if (peek().type == close) {
                take();
                break;
            }
            fail(peek(), std::string("',', ';' or ") + close_text);
        }
        return a;
    }

    AstPtr call(const Token& id) {
        take();  // '('
        auto a = std::make_shared<Ast>();
        a->kind = Ast::Kind::Call;
        a->name = id.text;
        a->line = line_;
        a->col = id.col;
        if (peek().type == Token::Type::RParen) {
            take();
            return a;
        }
        while (true) {
            a->kids.push_back(comparison());
            if (peek().type == Token::Type::Comma) {
                take();
                continue;
            }
            if (peek().type == Token::Type::RParen) {
                take();
                break;
            }
            fail(peek(), "',' or ')'");
        }
        return a;
    }

    std::vector<Token> tokens_;
    int line_;
    std::size_t pos_ = 0;
};

}  // namespace

AstPtr parse_line(const std::string& text, int line_no) {
    Lexer lexer(text, line_no);
    Parser parser(lexer.run(), line_no);
    return parser.statement();
}

}  // namespace vext
