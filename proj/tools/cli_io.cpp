#include "cli_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "itconn/fp.hpp"
#include "itconn/parse.hpp"

namespace itconn::cli {

using cga::Element;

Json load_json(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open " + path);
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

uint32_t read_prime(const Json& j) {
    const Json& v = field(j, "p");
    if (!v.is_number_unsigned()) throw InputError("'p' must be a prime");
    const uint64_t p = v.get<uint64_t>();
    if (p < 2 || p >= (1u << 15) || !is_prime(static_cast<uint32_t>(p))) throw InputError("'p' must be a prime below 2^15");
    return static_cast<uint32_t>(p);
}

unsigned read_unsigned(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() || v.get<uint64_t>() > 4096)
        throw InputError(std::string("'") + key + "' must be a small non-negative integer");
    return v.get<unsigned>();
}

std::vector<uint32_t> read_digits(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) throw InputError(std::string("'") + key + "' must be an array of digits");
    std::vector<uint32_t> out;
    for (const auto& d : v) {
        if (!d.is_number_unsigned()) throw InputError(std::string("'") + key + "' must hold non-negative digits");
        out.push_back(d.get<uint32_t>());
    }
    return out;
}

RatFunc read_ratfunc(const Json& j, uint32_t p) {
    if (j.is_number_integer()) return RatFunc::constant(p, j.get<int64_t>());
    if (!j.is_string()) throw InputError("expected a rational function as a string");
    return parse_ratfunc(j.get<std::string>(), p, "t");
}

idmod::RMat read_matrix(const Json& j, uint32_t p, std::size_t n) {
    if (!j.is_array() || j.size() != n) throw InputError("expected an " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    idmod::RMat m(n, n, RatFunc(p));
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n) throw InputError("matrix row " + std::to_string(i) + " has the wrong length");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = read_ratfunc(j[i][k], p);
    }
    return m;
}

std::vector<idmod::RMat> read_matrices(const Json& j, const char* key, uint32_t p, std::size_t n) {
    const Json& v = field(j, key);
    if (!v.is_array()) throw InputError(std::string("'") + key + "' must be an array of matrices");
    std::vector<idmod::RMat> out;
    for (const auto& m : v) out.push_back(read_matrix(m, p, n));
    return out;
}

Json render_matrix(const idmod::RMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        rows.push_back(row);
    }
    return rows;
}

namespace {

struct NamedMPolyCtx {
    uint32_t p;
    std::vector<std::string> names;
    MPoly constant(int64_t c) const { return MPoly::constant(p, names.size(), c); }
    MPoly variable(std::string_view name) const {
        for (std::size_t j = 0; j < names.size(); ++j)
            if (names[j] == name) return MPoly::var(p, names.size(), j);
        throw InputError("unknown variable '" + std::string(name) + "'");
    }
    MPoly divide(const MPoly& a, const MPoly& b) const {
        if (!b.is_constant() || b.is_zero()) throw InputError("polynomial expressions may only divide by nonzero constants");
        return a * b.inverse();
    }
    MPoly power(const MPoly& a, int64_t e) const {
        if (e < 0) throw InputError("negative exponent in polynomial expression");
        return a.pow(static_cast<uint64_t>(e));
    }
};

struct ExtParseCtx {
    ExtCtxPtr ext;
    ExtElem constant(int64_t c) const { return ExtElem::from_base(ext, RatFunc::constant(ext->p, c)); }
    ExtElem variable(std::string_view name) const {
        if (name == "t") return ExtElem::from_base(ext, RatFunc::t(ext->p));
        if (name == "y") return ExtElem::y(ext);
        throw InputError("unknown variable '" + std::string(name) + "' (extension domains use t and y)");
    }
    ExtElem divide(const ExtElem& a, const ExtElem& b) const {
        if (b.is_zero()) throw InputError("division by zero in expression");
        return a * b.inverse();
    }
    ExtElem power(const ExtElem& a, int64_t e) const {
        ExtElem r = constant(1), b = e >= 0 ? a : divide(constant(1), a);
        for (uint64_t k = static_cast<uint64_t>(e >= 0 ? e : -e); k; k >>= 1) {
            if (k & 1) r *= b;
            b *= b;
        }
        return r;
    }
};

template <class C, class Parse>
Element<C> coefficient_series(const Json& img, const cga::DescPtr& d, const C& like, Parse parse) {
    if (!img.is_array()) throw InputError("an image must be an array of T-coefficients");
    if (img.size() > d->N + 1u) throw InputError("an image has more coefficients than the truncation order allows");
    Element<C> e(d, like);
    for (std::size_t k = 0; k < img.size(); ++k) {
        if (!img[k].is_string() && !img[k].is_number_integer()) throw InputError("coefficients must be strings");
        const std::string src = img[k].is_string() ? img[k].get<std::string>() : std::to_string(img[k].get<int64_t>());
        e.add_term({static_cast<uint8_t>(k)}, parse(src));
    }
    return e;
}

std::vector<std::string> read_vars(const Json& domain, std::size_t default_count) {
    if (!domain.contains("vars")) return default_var_names(default_count);
    std::vector<std::string> v;
    for (const auto& s : domain.at("vars")) {
        if (!s.is_string()) throw InputError("'vars' must hold variable names");
        v.push_back(s.get<std::string>());
    }
    if (v.empty()) throw InputError("'vars' must not be empty");
    return v;
}

}  // namespace

hderiv::IterativityReport check_iterative_document(const Json& j, unsigned N_override, std::string& domain_out) {
    const uint32_t p = read_prime(j);
    const unsigned N = N_override ? N_override : read_unsigned(j, "N");
    if (N < 1 || N > 255) throw InputError("'N' must lie in [1, 255]");
    const Json& domain = field(j, "domain");
    const Json& images = field(j, "images");
    if (!images.is_array()) throw InputError("'images' must be an array");
    const std::string kind = field(domain, "kind").get<std::string>();
    domain_out = kind;

    if (kind == "polynomial") {
        const auto vars = read_vars(domain, images.size());
        const std::size_t m = vars.size();
        auto d = cga::power_series(vars, N);
        NamedMPolyCtx ctx{p, vars};
        auto with_T = vars;
        with_T.push_back("T");
        NamedMPolyCtx tctx{p, with_T};
        std::vector<Element<MPoly>> imgs;
        for (const auto& img : images) {
            if (img.is_string()) {
                // one expression in the variables and T
                const MPoly full = parse_expression<MPoly>(img.get<std::string>(), tctx);
                Element<MPoly> e(d, MPoly(p, m));
                for (const auto& [ex, c] : full.terms()) {
                    if (ex[m] > N) continue;
                    MPoly coef(p, m);
                    coef.add_term(Exponent(ex.begin(), ex.begin() + static_cast<long>(m)), c);
                    e.add_term({static_cast<uint8_t>(ex[m])}, coef);
                }
                imgs.push_back(e);
            } else {
                imgs.push_back(coefficient_series<MPoly>(img, d, MPoly(p, m), [&](const std::string& s) {
                    return parse_expression<MPoly>(s, ctx);
                }));
            }
        }
        return hderiv::is_iterative(hderiv::HigherDerivation<MPoly>(hderiv::DomainKind::Polynomial, d, imgs));
    }
    if (kind == "rational") {
        const auto vars = read_vars(domain, 1);
        if (vars.size() != 1) throw InputError("rational domains have one variable");
        auto d = cga::power_series(vars, N);
        std::vector<Element<RatFunc>> imgs;
        for (const auto& img : images)
            imgs.push_back(coefficient_series<RatFunc>(img, d, RatFunc(p), [&](const std::string& s) {
                return parse_ratfunc(s, p, vars[0]);
            }));
        return hderiv::is_iterative(hderiv::HigherDerivation<RatFunc>(hderiv::DomainKind::Rational, d, imgs));
    }
    if (kind == "extension") {
        const Json& mp = field(domain, "minpoly");
        if (!mp.is_string()) throw InputError("'minpoly' must be a polynomial in X");
        const auto ext = parse_extension(mp.get<std::string>(), p);
        auto d = cga::power_series({"t", "y"}, N);
        ExtParseCtx ctx{ext};
        const ExtElem like = ExtElem::from_base(ext, RatFunc(p));
        std::vector<Element<ExtElem>> imgs;
        for (const auto& img : images)
            imgs.push_back(coefficient_series<ExtElem>(img, d, like, [&](const std::string& s) {
                return parse_expression<ExtElem>(s, ctx);
            }));
        return hderiv::is_iterative(hderiv::HigherDerivation<ExtElem>(hderiv::DomainKind::Extension, d, imgs));
    }
    throw InputError("domain kind must be polynomial, rational or extension");
}

}  // namespace itconn::cli
