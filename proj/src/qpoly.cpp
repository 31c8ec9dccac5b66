#include "itconn/qpoly.hpp"

#include "itconn/errors.hpp"

namespace itconn {

QPoly::QPoly(std::vector<mpq_class> c) : c_(std::move(c)) {
    for (auto& v : c_) v.canonicalize();
    trim();
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    if (b.c_.size() > r.c_.size()) r.c_.resize(b.c_.size(), 0);
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(v));
}

QPoly QPoly::scaled(const mpq_class& s) const {
    QPoly r = *this;
    for (auto& v : r.c_) v *= s;
    r.trim();
    return r;
}

QPoly QPoly::inverse() const {
    if (c_.size() != 1) throw NotInvertible("polynomial over Q is not a unit");
    return constant(1 / c_[0]);
}

QPoly QPoly::derivative() const {
    std::vector<mpq_class> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<long>(i));
    return QPoly(std::move(v));
}

std::string QPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const mpq_class& c = c_[k];
        if (c == 0) continue;
        std::string cs = c.get_str();
        if (!s.empty()) s += (c < 0) ? "" : "+";
        if (k == 0) {
            s += cs;
            continue;
        }
        if (c == -1) s += "-";
        else if (c != 1) s += (c.get_den() == 1 ? cs : "(" + cs + ")") + "*";
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

}  // namespace itconn
