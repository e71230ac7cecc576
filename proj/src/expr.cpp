#include "ringlab/expr.hpp"

#include <cctype>
#include <limits>

#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RingExpr parse() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("empty ring expression", pos_);
        RingExpr e = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return e;
    }

private:
    RingExpr expr() {
        RingExpr left = term();
        while (true) {
            skip_space();
            if (pos_ < text_.size() && std::tolower(static_cast<unsigned char>(text_[pos_])) == 'x') {
                ++pos_;
                RingExpr right = term();
                RingExpr prod;
                prod.kind = RingExpr::Kind::Product;
                prod.args = {std::move(left), std::move(right)};
                left = std::move(prod);
            } else {
                return left;
            }
        }
    }

    RingExpr term() {
        skip_space();
        const std::size_t start = pos_;
        std::string word;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            word += static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_++])));
        RingExpr e;
        if (word == "z") {
            e.kind = RingExpr::Kind::Zn;
            e.n = integer();
        } else if (word == "m" || word == "t" || word == "s") {
            e.kind = word == "m" ? RingExpr::Kind::Matrix
                     : word == "t" ? RingExpr::Kind::UpperTriangular
                                   : RingExpr::Kind::SkewTriangular;
            e.n = integer();
            expect('(');
            e.args.push_back(expr());
            expect(')');
        } else if (word == "ex" && pos_ + 1 < text_.size() && text_.substr(pos_, 2) == "22") {
            pos_ += 2;
            e.kind = RingExpr::Kind::Ex22;
            expect('(');
            e.n = integer();
            expect(')');
        } else if (word == "corner") {
            e.kind = RingExpr::Kind::Corner;
            expect('(');
            e.args.push_back(expr());
            expect(',');
            e.n = integer();
            expect(')');
        } else {
            throw ParseError(word.empty() ? "expected a ring constructor" : "unknown constructor '" + word + "'", start);
        }
        return e;
    }

    unsigned integer() {
        skip_space();
        const std::size_t start = pos_;
        unsigned long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(text_[pos_++] - '0');
            if (v > std::numeric_limits<unsigned>::max()) throw ParseError("integer too large", start);
        }
        if (pos_ == start) throw ParseError("expected an integer", start);
        return static_cast<unsigned>(v);
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RingExpr parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const RingExpr& e) {
    switch (e.kind) {
        case RingExpr::Kind::Zn: return "Z" + std::to_string(e.n);
        case RingExpr::Kind::Matrix: return "M" + std::to_string(e.n) + "(" + to_string(e.args[0]) + ")";
        case RingExpr::Kind::UpperTriangular: return "T" + std::to_string(e.n) + "(" + to_string(e.args[0]) + ")";
        case RingExpr::Kind::SkewTriangular: return "S" + std::to_string(e.n) + "(" + to_string(e.args[0]) + ")";
        case RingExpr::Kind::Ex22: return "ex22(" + std::to_string(e.n) + ")";
        case RingExpr::Kind::Product: return to_string(e.args[0]) + " x " + to_string(e.args[1]);
        case RingExpr::Kind::Corner: return "corner(" + to_string(e.args[0]) + "," + std::to_string(e.n) + ")";
    }
    return {};
}

RingPtr RingCache::evaluate(const RingExpr& e) {
    const std::string key = to_string(e);
    if (auto it = built_.find(key); it != built_.end()) return it->second;
    RingPtr ring;
    switch (e.kind) {
        case RingExpr::Kind::Zn: ring = make_zn(e.n, cap_); break;
        case RingExpr::Kind::Matrix: ring = make_matrix(evaluate(e.args[0]), e.n, cap_); break;
        case RingExpr::Kind::UpperTriangular: ring = make_upper_triangular(evaluate(e.args[0]), e.n, cap_); break;
        case RingExpr::Kind::SkewTriangular: ring = make_skew_triangular(evaluate(e.args[0]), e.n, cap_); break;
        case RingExpr::Kind::Ex22: ring = make_ex22(e.n, cap_); break;
        case RingExpr::Kind::Product: ring = make_product(evaluate(e.args[0]), evaluate(e.args[1]), cap_); break;
        case RingExpr::Kind::Corner: {
            auto base = evaluate(e.args[0]);
            if (e.n >= base->size())
                throw ContractError("corner element " + std::to_string(e.n) + " is not a handle of " + base->id());
            ring = make_corner(base, static_cast<Elem>(e.n));
            break;
        }
    }
    built_.emplace(key, ring);
    return ring;
}

}  // namespace ringlab
