#include "itconn/parse.hpp"

#include "itconn/mpoly.hpp"
#include "itconn/ratfunc.hpp"

namespace itconn {
namespace {

struct RatCtx {
    uint32_t p;
    std::string_view var;
    RatFunc constant(int64_t c) const { return RatFunc::constant(p, c); }
    RatFunc variable(std::string_view name) const {
        if (name != var) throw InputError("unknown variable '" + std::string(name) + "'");
        return RatFunc::t(p);
    }
    RatFunc divide(const RatFunc& a, const RatFunc& b) const {
        if (b.is_zero()) throw InputError("division by zero in expression");
        return a / b;
    }
    RatFunc power(const RatFunc& a, int64_t e) const {
        if (e < 0 && a.is_zero()) throw InputError("negative power of zero");
        return a.pow(e);
    }
};

struct MPolyCtx {
    uint32_t p;
    std::size_t m;
    std::vector<std::string> names = default_var_names(m);
    MPoly constant(int64_t c) const { return MPoly::constant(p, m, c); }
    MPoly variable(std::string_view name) const {
        for (std::size_t j = 0; j < m; ++j)
            if (names[j] == name) return MPoly::var(p, m, j);
        throw InputError("unknown variable '" + std::string(name) + "'");
    }
    MPoly divide(const MPoly& a, const MPoly& b) const {
        if (!b.is_constant() || b.is_zero())
            throw InputError("polynomial expressions may only divide by nonzero constants");
        return a * b.inverse();
    }
    MPoly power(const MPoly& a, int64_t e) const {
        if (e < 0) throw InputError("negative exponent in polynomial expression");
        return a.pow(static_cast<uint64_t>(e));
    }
};

}  // namespace

RatFunc parse_ratfunc(std::string_view src, uint32_t p, std::string_view var) {
    RatCtx ctx{p, var};
    return parse_expression<RatFunc>(src, ctx);
}

MPoly parse_mpoly(std::string_view src, uint32_t p, std::size_t nvars) {
    MPolyCtx ctx{p, nvars};
    return parse_expression<MPoly>(src, ctx);
}

}  // namespace itconn
