#include "wreathlab/expr.hpp"

#include <cctype>
#include <vector>

#include "wreathlab/catalog.hpp"
#include "wreathlab/wreath.hpp"

namespace wreathlab {

namespace {

class Parser {
public:
    Parser(const std::string& text, const Budget& budget) : text_(text), budget_(budget) {}

    GroupPtr parse() {
        GroupPtr g = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return g;
    }

private:
    const std::string& text_;
    const Budget& budget_;
    std::size_t pos_ = 0;

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

    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    bool peek_word(const char* w) {
        skip_ws();
        std::size_t i = 0;
        while (w[i] && pos_ + i < text_.size() && text_[pos_ + i] == w[i]) ++i;
        return w[i] == '\0';
    }

    std::uint64_t number() {
        skip_ws();
        const std::size_t start = pos_;
        std::uint64_t n = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            n = n * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (n > 1'000'000) throw ParseError("number too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected a number", pos_);
        return n;
    }

    GroupPtr expr() {
        GroupPtr g = factor();
        while (eat('*')) g = direct_product(g, factor());
        return g;
    }

    GroupPtr factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        if (eat('(')) {
            GroupPtr g = expr();
            expect(')');
            return g;
        }
        if (peek_word("wr") && pos_ + 2 < text_.size() &&
            !std::isalnum(static_cast<unsigned char>(text_[pos_ + 2])))
            return wreath();
        return atom();
    }

    GroupPtr wreath() {
        const std::size_t start = pos_;
        pos_ += 2;  // 'wr'
        expect('(');
        std::vector<GroupPtr> factors{expr()};
        std::string canon = "wr(" + factors.back()->label();
        while (eat(',')) {
            factors.push_back(expr());
            canon += "," + factors.back()->label();
        }
        expect(';');
        Bracketing b;
        if (peek_word("desc")) {
            pos_ += 4;
            b = Bracketing::descending;
            canon += ";desc)";
        } else if (peek_word("asc")) {
            pos_ += 3;
            b = Bracketing::ascending;
            canon += ";asc)";
        } else {
            throw ParseError("expected 'desc' or 'asc'", pos_);
        }
        expect(')');
        GroupPtr g = iterated_regular_wreath(factors, b, budget_);
        if (factors.size() == 1) return g;
        (void)start;
        return FiniteGroup::generated(g->degree(), g->generators(), canon, budget_);
    }

    GroupPtr atom() {
        skip_ws();
        const std::size_t start = pos_;
        const char c = text_[pos_];
        if (c == 'E') {
            ++pos_;
            return trivial_group(budget_);
        }
        if (c == 'C' || c == 'D') {
            ++pos_;
            std::uint64_t n = number();
            if (c == 'C') {
                if (n < 2)
                    throw ParseError("cyclic atoms start at C2; the trivial group is 'E'", start);
                return cyclic(n, budget_);
            }
            if (n < 2) throw ParseError("dihedral atoms start at D2", start);
            return dihedral(n, budget_);
        }
        if (peek_word("Q8")) {
            pos_ += 2;
            return quaternion8(budget_);
        }
        if (peek_word("S3")) {
            pos_ += 2;
            return symmetric3(budget_);
        }
        if (peek_word("A4")) {
            pos_ += 2;
            return alternating4(budget_);
        }
        throw ParseError("unknown atom", start);
    }
};

}  // namespace

GroupPtr parse_group_expression(const std::string& text, const Budget& budget) {
    return Parser(text, budget).parse();
}

}  // namespace wreathlab
