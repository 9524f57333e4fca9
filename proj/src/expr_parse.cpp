#include <cctype>

#include "cra/error.hpp"
#include "cra/expr.hpp"

namespace cra {

namespace {

class Parser {
public:
    Parser(std::string_view text, Semiring sr, const LookupFn& lookup, int line, int column)
        : text_(text), sr_(sr), lookup_(lookup), line0_(line), col0_(column) {}

    Expr run() {
        Expr e = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg, std::size_t at = std::string::npos, ErrorKind k = ErrorKind::Syntax) {
        if (at == std::string::npos) at = pos_;
        int line = line0_, col = col0_;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(k, line, col, msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr expr() {
        std::vector<Expr> terms{term()};
        while (eat('+')) terms.push_back(term());
        return Expr::op(ExprKind::Add, std::move(terms));
    }

    Expr term() {
        std::vector<Expr> fs{factor()};
        while (eat('*')) fs.push_back(factor());
        return Expr::op(ExprKind::Mul, std::move(fs));
    }

    Expr constant(std::size_t start) {
        std::string_view tok = text_.substr(start, pos_ - start);
        try {
            return Expr::constant(parse_value(tok, sr_));
        } catch (const Error& e) {
            fail(e.what(), start, ErrorKind::Semantic);
        }
    }

    Expr factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected an operand");
        std::size_t start = pos_;
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            if (c == '-' || c == '+') {
                if (text_.substr(pos_, 4) == "-inf" || text_.substr(pos_, 4) == "+inf") {
                    pos_ += 4;
                    return constant(start);
                }
                if (c == '+') fail("expected an operand");
                ++pos_;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("expected digits after '-'");
            }
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return constant(start);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
                ++pos_;
            std::string_view id = text_.substr(start, pos_ - start);
            if (id == "ZERO" || id == "ONE") return constant(start);
            try {
                return Expr::var(lookup_(id));
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                fail(e.what(), start, ErrorKind::Semantic);
            }
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    Semiring sr_;
    const LookupFn& lookup_;
    int line0_, col0_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, Semiring sr, const LookupFn& lookup, int line, int column) {
    return Parser(text, sr, lookup, line, column).run();
}

}  // namespace cra
