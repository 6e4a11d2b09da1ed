#include "hcm/ipoly.hpp"

#include <bit>
#include <unordered_map>

#include "hcm/errors.hpp"

namespace hcm {

mpz_class IndependencePolynomial::total_sets() const {
    mpz_class s = 0;
    for (const auto& c : coeffs) s += c;
    return s;
}

namespace {

using Poly = std::vector<mpz_class>;

Poly convolve(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// a + x*b
Poly add_shifted(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size() + 1));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + 1] += b[i];
    return r;
}

class PolyEngine {
public:
    PolyEngine(std::vector<std::uint64_t> adj, std::size_t budget)
        : adj_(std::move(adj)), budget_(budget) {}

    Poly run(std::uint64_t mask) { return poly(mask); }

private:
    std::vector<std::uint64_t> adj_;
    std::size_t budget_;
    std::unordered_map<std::uint64_t, Poly> memo_;

    std::uint64_t component_of(std::uint64_t mask, int seed_vertex) const {
        std::uint64_t comp = std::uint64_t{1} << seed_vertex;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t grown = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                grown |= adj_[v] & mask;
            }
            frontier = grown & ~comp;
            comp |= grown;
        }
        return comp;
    }

    Poly poly(std::uint64_t mask) {
        if (mask == 0) return {mpz_class(1)};
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

        Poly result;
        std::uint64_t comp = component_of(mask, std::countr_zero(mask));
        if (comp != mask) {
            result = poly(comp);
            std::uint64_t rest = mask & ~comp;
            while (rest) {
                std::uint64_t c = component_of(rest, std::countr_zero(rest));
                result = convolve(result, poly(c));
                rest &= ~c;
            }
        } else if (std::popcount(mask) == 1) {
            result = {mpz_class(1), mpz_class(1)};
        } else {
            // pivot on a maximum-degree vertex of the component
            int pivot = -1, best = -1;
            std::uint64_t scan = mask;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                int d = std::popcount(adj_[v] & mask);
                if (d > best) {
                    best = d;
                    pivot = v;
                }
            }
            std::uint64_t closed = adj_[pivot] | (std::uint64_t{1} << pivot);
            result = add_shifted(poly(mask & ~(std::uint64_t{1} << pivot)), poly(mask & ~closed));
        }
        if (memo_.size() >= budget_)
            throw cap_error("independence polynomial memo budget exhausted");
        memo_.emplace(mask, result);
        return result;
    }
};

}  // namespace

IndependencePolynomial independence_polynomial(const Graph& g, const IpolyOptions& opt) {
    const int n = g.vertex_count();
    if (n > opt.vertex_cap || n > 64)
        throw cap_error("independence polynomial capped at n <= " +
                        std::to_string(std::min(opt.vertex_cap, 64)) +
                        "; use evaluation or sampling paths for larger graphs");
    if (n == 0) return {{mpz_class(1)}};
    PolyEngine engine(g.adjacency_masks(), opt.memo_budget);
    std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return {engine.run(full)};
}

double evaluate_Z(const IndependencePolynomial& p, double lambda) {
    double z = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) z = z * lambda + it->get_d();
    return z;
}

double evaluate_Zprime(const IndependencePolynomial& p, double lambda) {
    double z = 0;
    for (std::size_t i = p.coeffs.size(); i-- > 1;)
        z = z * lambda + static_cast<double>(i) * p.coeffs[i].get_d();
    return z;
}

mpq_class evaluate_Z_exact(const IndependencePolynomial& p, const mpq_class& lambda) {
    mpq_class z = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) z = z * lambda + mpq_class(*it);
    return z;
}

mpq_class evaluate_Zprime_exact(const IndependencePolynomial& p, const mpq_class& lambda) {
    mpq_class z = 0;
    for (std::size_t i = p.coeffs.size(); i-- > 1;)
        z = z * lambda + mpq_class(p.coeffs[i]) * static_cast<long>(i);
    return z;
}

double occupancy_fraction(const Graph& g, double lambda, const IpolyOptions& opt) {
    if (g.vertex_count() < 1) throw regime_error("occupancy fraction requires a non-empty graph");
    auto p = independence_polynomial(g, opt);
    return lambda * evaluate_Zprime(p, lambda) / (evaluate_Z(p, lambda) * g.vertex_count());
}

mpq_class occupancy_fraction_exact(const Graph& g, const mpq_class& lambda,
                                   const IpolyOptions& opt) {
    if (g.vertex_count() < 1) throw regime_error("occupancy fraction requires a non-empty graph");
    auto p = independence_polynomial(g, opt);
    mpq_class r = lambda * evaluate_Zprime_exact(p, lambda) /
                  (evaluate_Z_exact(p, lambda) * g.vertex_count());
    r.canonicalize();
    return r;
}

}  // namespace hcm
