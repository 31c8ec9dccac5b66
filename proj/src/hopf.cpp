#include "itconn/hopf.hpp"

#include <functional>

#include "itconn/errors.hpp"
#include "itconn/fp.hpp"

namespace itconn::hopf {

namespace {

uint32_t addm(uint32_t a, uint32_t b, uint32_t p) { return (a + b) % p; }
uint32_t mulm(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>(uint64_t(a) * b % p);
}

FpVec zero_vec(std::size_t n) { return FpVec(n, 0); }

// Multiplication in h (x) h on coordinates indexed a * dim + b.
FpVec multiply2(const HopfAlgebra& h, const FpVec& x, const FpVec& y) {
    const std::size_t d = h.dim;
    FpVec out(d * d, 0);
    for (std::size_t i = 0; i < d * d; ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < d * d; ++j) {
            if (!y[j]) continue;
            const uint32_t c = mulm(x[i], y[j], h.p);
            const FpVec& l = h.mult[(i / d) * d + j / d];
            const FpVec& r = h.mult[(i % d) * d + j % d];
            for (std::size_t a = 0; a < d; ++a) {
                if (!l[a]) continue;
                const uint32_t ca = mulm(c, l[a], h.p);
                for (std::size_t b = 0; b < d; ++b)
                    if (r[b]) out[a * d + b] = addm(out[a * d + b], mulm(ca, r[b], h.p), h.p);
            }
        }
    }
    return out;
}

FpVec apply_linear(const std::vector<FpVec>& images, const FpVec& v, std::size_t out_dim, uint32_t p) {
    FpVec out(out_dim, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i]) continue;
        for (std::size_t j = 0; j < out_dim; ++j)
            if (images[i][j]) out[j] = addm(out[j], mulm(v[i], images[i][j], p), p);
    }
    return out;
}

HopfAlgebra verified(HopfAlgebra h) {
    if (!check_axioms(h).all()) throw InputError("structure constants do not define a commutative Hopf algebra");
    return h;
}

}  // namespace

FpVec HopfAlgebra::basis(std::size_t i) const {
    FpVec v(dim, 0);
    v.at(i) = 1;
    return v;
}

FpVec HopfAlgebra::multiply(const FpVec& a, const FpVec& b) const {
    FpVec out(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (!b[j]) continue;
            const uint32_t c = mulm(a[i], b[j], p);
            const FpVec& m = mult[i * dim + j];
            for (std::size_t k = 0; k < dim; ++k)
                if (m[k]) out[k] = addm(out[k], mulm(c, m[k], p), p);
        }
    }
    return out;
}

FpVec HopfAlgebra::power(const FpVec& a, uint64_t e) const {
    FpVec r = unit, b = a;
    while (e) {
        if (e & 1) r = multiply(r, b);
        e >>= 1;
        if (e) b = multiply(b, b);
    }
    return r;
}

std::string HopfAlgebra::render(const FpVec& v) const {
    std::string out;
    for (std::size_t i = 0; i < dim; ++i) {
        if (!v[i]) continue;
        if (!out.empty()) out += " + ";
        if (v[i] != 1 || names[i] == "1") out += std::to_string(v[i]);
        if (names[i] != "1") out += (v[i] != 1 ? "*" : "") + names[i];
    }
    return out.empty() ? "0" : out;
}

HopfAxioms check_axioms(const HopfAlgebra& h) {
    HopfAxioms ax;
    const std::size_t d = h.dim;
    const uint32_t p = h.p;
    if (h.mult.size() != d * d || h.comult.size() != d || h.counit.size() != d ||
        h.antipode.size() != d || h.unit.size() != d)
        return ax;
    auto b = [&](std::size_t i) { return h.basis(i); };

    ax.associative = ax.commutative = ax.unital = true;
    for (std::size_t i = 0; i < d; ++i) {
        if (h.multiply(h.unit, b(i)) != b(i)) ax.unital = false;
        for (std::size_t j = 0; j < d; ++j) {
            if (h.mult[i * d + j] != h.mult[j * d + i]) ax.commutative = false;
            for (std::size_t k = 0; k < d; ++k)
                if (h.multiply(h.multiply(b(i), b(j)), b(k)) != h.multiply(b(i), h.multiply(b(j), b(k))))
                    ax.associative = false;
        }
    }

    // (Delta (x) id) Delta = (id (x) Delta) Delta, compared in h^{(x)3}.
    ax.coassociative = ax.counital = true;
    for (std::size_t i = 0; i < d; ++i) {
        FpVec left(d * d * d, 0), right(d * d * d, 0);
        const FpVec& D = h.comult[i];
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t c = 0; c < d; ++c) {
                const uint32_t w = D[a * d + c];
                if (!w) continue;
                for (std::size_t u = 0; u < d * d; ++u) {
                    if (const uint32_t x = h.comult[a][u])
                        left[u * d + c] = addm(left[u * d + c], mulm(w, x, p), p);
                    if (const uint32_t x = h.comult[c][u])
                        right[a * d * d + u] = addm(right[a * d * d + u], mulm(w, x, p), p);
                }
            }
        if (left != right) ax.coassociative = false;
        FpVec l1(d, 0), r1(d, 0);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t c = 0; c < d; ++c) {
                const uint32_t w = D[a * d + c];
                if (!w) continue;
                r1[a] = addm(r1[a], mulm(w, h.counit[c], p), p);
                l1[c] = addm(l1[c], mulm(w, h.counit[a], p), p);
            }
        if (l1 != b(i) || r1 != b(i)) ax.counital = false;
    }

    // Delta and counit are algebra maps.
    ax.bialgebra = true;
    FpVec unit2(d * d, 0);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t c = 0; c < d; ++c) unit2[a * d + c] = mulm(h.unit[a], h.unit[c], p);
    if (apply_linear(h.comult, h.unit, d * d, p) != unit2) ax.bialgebra = false;
    auto eps = [&](const FpVec& v) {
        uint32_t s = 0;
        for (std::size_t k = 0; k < d; ++k) s = addm(s, mulm(v[k], h.counit[k], p), p);
        return s;
    };
    if (eps(h.unit) != 1) ax.bialgebra = false;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const FpVec prod = h.mult[i * d + j];
            if (apply_linear(h.comult, prod, d * d, p) != multiply2(h, h.comult[i], h.comult[j]))
                ax.bialgebra = false;
            if (eps(prod) != mulm(h.counit[i], h.counit[j], p)) ax.bialgebra = false;
        }

    // m (S (x) id) Delta = unit * counit
    ax.antipode = true;
    for (std::size_t i = 0; i < d; ++i) {
        FpVec acc(d, 0), acc2(d, 0);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t c = 0; c < d; ++c) {
                const uint32_t w = h.comult[i][a * d + c];
                if (!w) continue;
                const FpVec t1 = h.multiply(h.antipode[a], b(c));
                const FpVec t2 = h.multiply(b(a), h.antipode[c]);
                for (std::size_t k = 0; k < d; ++k) {
                    acc[k] = addm(acc[k], mulm(w, t1[k], p), p);
                    acc2[k] = addm(acc2[k], mulm(w, t2[k], p), p);
                }
            }
        FpVec expect(d, 0);
        for (std::size_t k = 0; k < d; ++k) expect[k] = mulm(h.unit[k], h.counit[i], p);
        if (acc != expect || acc2 != expect) ax.antipode = false;
    }
    return ax;
}

HopfAlgebra mu(uint32_t p, std::size_t k, const std::string& var) {
    if (k == 0) throw InputError("mu_k needs k >= 1");
    HopfAlgebra h;
    h.p = p;
    h.dim = k;
    for (std::size_t i = 0; i < k; ++i)
        h.names.push_back(i == 0 ? "1" : i == 1 ? var : var + "^" + std::to_string(i));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) h.mult.push_back(h.basis((i + j) % k));
    for (std::size_t i = 0; i < k; ++i) {
        FpVec D(k * k, 0);
        D[i * k + i] = 1;
        h.comult.push_back(D);
        h.antipode.push_back(h.basis((k - i) % k));
    }
    h.counit.assign(k, 1);
    h.unit = h.basis(0);
    return verified(std::move(h));
}

HopfAlgebra alpha(uint32_t p, const std::string& var) {
    HopfAlgebra h;
    h.p = p;
    h.dim = p;
    for (std::size_t i = 0; i < p; ++i)
        h.names.push_back(i == 0 ? "1" : i == 1 ? var : var + "^" + std::to_string(i));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) h.mult.push_back(i + j < p ? h.basis(i + j) : zero_vec(p));
    for (std::size_t i = 0; i < p; ++i) {
        FpVec D(p * p, 0);
        for (std::size_t a = 0; a <= i; ++a) D[a * p + (i - a)] = binomial_mod_p(i, a, p);
        h.comult.push_back(D);
        FpVec S(p, 0);
        S[i] = (i % 2 == 0) ? 1 : p - 1;
        h.antipode.push_back(S);
    }
    h.counit = h.basis(0);
    h.unit = h.basis(0);
    return verified(std::move(h));
}

HopfAlgebra trivial_group(uint32_t p) { return mu(p, 1); }

HopfAlgebra product(const HopfAlgebra& a, const HopfAlgebra& b) {
    if (a.p != b.p) throw InputError("Hopf algebras over different primes");
    const uint32_t p = a.p;
    const std::size_t da = a.dim, db = b.dim, d = da * db;
    auto idx = [db](std::size_t i, std::size_t j) { return i * db + j; };
    auto tens = [&](const FpVec& x, const FpVec& y) {
        FpVec out(d, 0);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < db; ++j) out[idx(i, j)] = mulm(x[i], y[j], p);
        return out;
    };
    HopfAlgebra h;
    h.p = p;
    h.dim = d;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            const std::string &x = a.names[i], &y = b.names[j];
            h.names.push_back(x == "1" ? y : y == "1" ? x : x + "*" + y);
        }
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
            h.mult.push_back(tens(a.mult[(u / db) * da + v / db], b.mult[(u % db) * db + v % db]));
    for (std::size_t u = 0; u < d; ++u) {
        const std::size_t i = u / db, j = u % db;
        FpVec D(d * d, 0);
        for (std::size_t a1 = 0; a1 < da; ++a1)
            for (std::size_t a2 = 0; a2 < da; ++a2) {
                const uint32_t wa = a.comult[i][a1 * da + a2];
                if (!wa) continue;
                for (std::size_t b1 = 0; b1 < db; ++b1)
                    for (std::size_t b2 = 0; b2 < db; ++b2)
                        if (const uint32_t wb = b.comult[j][b1 * db + b2])
                            D[idx(a1, b1) * d + idx(a2, b2)] = mulm(wa, wb, p);
            }
        h.comult.push_back(D);
        h.counit.push_back(mulm(a.counit[i], b.counit[j], p));
        h.antipode.push_back(tens(a.antipode[i], b.antipode[j]));
    }
    h.unit = tens(a.unit, b.unit);
    return verified(std::move(h));
}

Subspace span(uint32_t p, std::size_t ambient, const std::vector<FpVec>& vectors) {
    FpMatrix m(p, 0, ambient);
    for (const auto& v : vectors) {
        if (v.size() != ambient) throw InputError("vector has the wrong length");
        m.append_row(v);
    }
    const auto piv = m.rref();
    Subspace s{p, ambient, {}};
    for (std::size_t i = 0; i < piv.size(); ++i) s.basis.emplace_back(m.row(i), m.row(i) + ambient);
    return s;
}

bool Subspace::contains(const FpVec& v) const {
    std::vector<FpVec> all = basis;
    all.push_back(v);
    return span(p, ambient, all).dim() == dim();
}

Subspace ideal(const HopfAlgebra& h, const std::vector<FpVec>& generators) {
    std::vector<FpVec> vs;
    for (const auto& g : generators)
        for (std::size_t i = 0; i < h.dim; ++i) vs.push_back(h.multiply(g, h.basis(i)));
    return span(h.p, h.dim, vs);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    // v in a and b  <=>  Q_a v = 0 and Q_b v = 0
    const FpMatrix qa = annihilator(a), qb = annihilator(b);
    FpMatrix q(a.p, 0, a.ambient);
    for (std::size_t i = 0; i < qa.rows(); ++i) q.append_row(FpVec(qa.row(i), qa.row(i) + a.ambient));
    for (std::size_t i = 0; i < qb.rows(); ++i) q.append_row(FpVec(qb.row(i), qb.row(i) + b.ambient));
    if (q.rows() == 0) return a;
    return span(a.p, a.ambient, q.kernel());
}

bool is_ideal(const HopfAlgebra& h, const Subspace& s) {
    for (const auto& v : s.basis)
        for (std::size_t i = 0; i < h.dim; ++i)
            if (!s.contains(h.multiply(v, h.basis(i)))) return false;
    return true;
}

bool is_hopf_ideal(const HopfAlgebra& h, const Subspace& s) {
    if (!is_ideal(h, s)) return false;
    const std::size_t d = h.dim;
    const FpMatrix q = annihilator(s);
    for (const auto& v : s.basis) {
        uint32_t e = 0;
        for (std::size_t k = 0; k < d; ++k) e = addm(e, mulm(v[k], h.counit[k], h.p), h.p);
        if (e) return false;
        if (!s.contains(apply_linear(h.antipode, v, d, h.p))) return false;
        // Delta(v) in I (x) H + H (x) I: its image in H/I (x) H/I vanishes.
        const FpVec D = apply_linear(h.comult, v, d * d, h.p);
        for (std::size_t r1 = 0; r1 < q.rows(); ++r1)
            for (std::size_t r2 = 0; r2 < q.rows(); ++r2) {
                uint32_t acc = 0;
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = 0; b < d; ++b)
                        if (D[a * d + b])
                            acc = addm(acc, mulm(D[a * d + b], mulm(q(r1, a), q(r2, b), h.p), h.p), h.p);
                if (acc) return false;
            }
    }
    return true;
}

FpMatrix annihilator(const Subspace& s) {
    FpMatrix b(s.p, 0, s.ambient);
    for (const auto& v : s.basis) b.append_row(v);
    std::vector<FpVec> ker;
    if (s.basis.empty()) {
        for (std::size_t i = 0; i < s.ambient; ++i) {
            FpVec e(s.ambient, 0);
            e[i] = 1;
            ker.push_back(e);
        }
    } else {
        ker = b.kernel();
    }
    FpMatrix q(s.p, 0, s.ambient);
    for (const auto& k : ker) q.append_row(k);
    return q;
}

std::vector<Subspace> all_ideals(const HopfAlgebra& h) {
    const std::size_t d = h.dim;
    uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total *= h.p;
        if (total > 4096) throw InputError("ideal enumeration is limited to tiny algebras");
    }
    // Every subspace is the span of some set of vectors; grow spans greedily
    // from each vector and keep distinct ideals.
    std::vector<FpVec> vecs;
    for (uint64_t code = 0; code < total; ++code) {
        FpVec v(d, 0);
        uint64_t c = code;
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = static_cast<uint32_t>(c % h.p);
            c /= h.p;
        }
        vecs.push_back(v);
    }
    std::vector<Subspace> found{span(h.p, d, {})};
    for (std::size_t frontier = 0; frontier < found.size(); ++frontier) {
        const Subspace cur = found[frontier];
        for (const auto& v : vecs) {
            if (cur.contains(v)) continue;
            std::vector<FpVec> gens = cur.basis;
            gens.push_back(v);
            Subspace next = ideal(h, gens);
            bool seen = false;
            for (const auto& f : found) seen = seen || f == next;
            if (!seen) found.push_back(next);
        }
    }
    return found;
}

FpMatrix frobenius_matrix(const HopfAlgebra& h) {
    FpMatrix m(h.p, h.dim, h.dim);
    for (std::size_t i = 0; i < h.dim; ++i) {
        const FpVec v = h.power(h.basis(i), h.p);
        for (std::size_t j = 0; j < h.dim; ++j) m(j, i) = v[j];
    }
    return m;
}

Subspace nilradical(const HopfAlgebra& h) {
    const FpMatrix f = frobenius_matrix(h);
    FpMatrix it = f;
    uint64_t pe = h.p;
    while (pe < h.dim) {
        it = f * it;
        pe *= h.p;
    }
    return span(h.p, h.dim, it.kernel());
}

bool is_reduced(const HopfAlgebra& h) { return frobenius_matrix(h).rank() == h.dim; }

}  // namespace itconn::hopf
