#include "itconn/cga.hpp"

namespace itconn::cga {

DescPtr power_series(std::vector<std::string> base_vars, unsigned N, std::string var) {
    auto d = std::make_shared<Descriptor>();
    d->kind = Kind::PowerSeries;
    d->base_vars = std::move(base_vars);
    d->symbols = {Symbol{std::move(var), 1}};
    d->N = N;
    return d;
}

DescPtr trivial(std::vector<std::string> base_vars) {
    auto d = std::make_shared<Descriptor>();
    d->kind = Kind::Trivial;
    d->base_vars = std::move(base_vars);
    return d;
}

DescPtr tensor(const DescPtr& a, const DescPtr& b) {
    if (a->base_vars != b->base_vars) throw DescriptorMismatch("tensor over different base rings");
    auto d = std::make_shared<Descriptor>();
    d->kind = Kind::Tensor;
    d->base_vars = a->base_vars;
    d->symbols = a->symbols;
    for (auto s : b->symbols) {
        s.name += "'";
        d->symbols.push_back(std::move(s));
    }
    d->N = std::max(a->N, b->N);
    return d;
}

}  // namespace itconn::cga
