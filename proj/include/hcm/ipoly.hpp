#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "hcm/graph.hpp"

namespace hcm {

// Exact independence polynomial: coeffs[i] counts the independent sets of
// size i, so coeffs[0] = 1 and the length is alpha(G)+1.
struct IndependencePolynomial {
    std::vector<mpz_class> coeffs;

    int alpha() const { return static_cast<int>(coeffs.size()) - 1; }
    mpz_class total_sets() const;
};

struct IpolyOptions {
    int vertex_cap = 40;
    std::size_t memo_budget = std::size_t{1} << 22;
};

// Vertex-removal recursion Z_G = Z_{G-v} + x * Z_{G-N[v]} lifted to
// coefficients, memoized on residual-set bitmasks and split over connected
// components (polynomials of components multiply). Pivots on a maximum-degree
// vertex. Throws cap_error beyond the vertex cap or memo budget.
IndependencePolynomial independence_polynomial(const Graph& g, const IpolyOptions& opt = {});

double evaluate_Z(const IndependencePolynomial& p, double lambda);
double evaluate_Zprime(const IndependencePolynomial& p, double lambda);
mpq_class evaluate_Z_exact(const IndependencePolynomial& p, const mpq_class& lambda);
mpq_class evaluate_Zprime_exact(const IndependencePolynomial& p, const mpq_class& lambda);

// lambda Z'/(Z n); requires n >= 1.
double occupancy_fraction(const Graph& g, double lambda, const IpolyOptions& opt = {});
mpq_class occupancy_fraction_exact(const Graph& g, const mpq_class& lambda,
                                   const IpolyOptions& opt = {});

}  // namespace hcm
