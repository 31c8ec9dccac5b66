#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "itconn/errors.hpp"

namespace itconn {

// Recursive-descent parser for expressions such as "(t^2+1)/(t^3+t)" or
// "1 + t*d1_t^2". Ctx supplies the target ring:
//   T constant(int64_t), T variable(std::string_view), T divide(T, T),
//   T power(T, int64_t)
template <class T, class Ctx>
class ExprParser {
public:
    ExprParser(std::string_view src, Ctx& ctx) : s_(src), ctx_(ctx) {}

    T parse() {
        T v = sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("cannot parse '" + std::string(s_) + "' at offset " +
                         std::to_string(pos_) + ": " + why);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    int64_t integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 17) fail("integer too large");
        int64_t v = std::stoll(std::string(s_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }
    T sum() {
        T acc = eat('-') ? ctx_.constant(0) - product() : product();
        for (;;) {
            if (eat('+')) acc = acc + product();
            else if (eat('-')) acc = acc - product();
            else return acc;
        }
    }
    T product() {
        T acc = power();
        for (;;) {
            if (eat('*')) acc = acc * power();
            else if (eat('/')) acc = ctx_.divide(acc, power());
            else return acc;
        }
    }
    T power() {
        T base = atom();
        if (eat('^')) {
            if (eat('(')) {
                int64_t e = integer();
                if (!eat(')')) fail("expected ')'");
                return ctx_.power(base, e);
            }
            return ctx_.power(base, integer());
        }
        return base;
    }
    T atom() {
        skip_ws();
        if (eat('(')) {
            T v = sum();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return ctx_.constant(integer());
        if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return ctx_.variable(s_.substr(start, pos_ - start));
        }
        fail("expected a number, variable or '('");
    }

    std::string_view s_;
    Ctx& ctx_;
    std::size_t pos_ = 0;
};

template <class T, class Ctx>
T parse_expression(std::string_view src, Ctx& ctx) {
    return ExprParser<T, Ctx>(src, ctx).parse();
}

class RatFunc;
class MPoly;
RatFunc parse_ratfunc(std::string_view src, uint32_t p, std::string_view var = "t");
MPoly parse_mpoly(std::string_view src, uint32_t p, std::size_t nvars);

}  // namespace itconn
