#pragma once

#include <limits>
#include <string>

namespace hcm {

// Local sparsity hypotheses the bound formulas are parameterised by.
struct SparsitySetting {
    enum class Kind { TriangleFree, CkFree, TriangleCount, PathCount, HallRatio, Clique };
    Kind kind = Kind::TriangleFree;
    int k = 3;        // forbidden cycle length / path parameter
    double t = 0.5;   // triangle or path copy count
    double rho = 1;   // local Hall ratio
    int omega = 3;    // forbidden clique size

    static SparsitySetting triangle_free();
    static SparsitySetting ck_free(int k);
    static SparsitySetting triangle_count(double t);
    static SparsitySetting path_count(int k, double t);
    static SparsitySetting hall_ratio(double rho);
    static SparsitySetting clique(int omega);

    void validate() const;
    // neighbourhood average-degree exponent: 0, k-3, sqrt(2t), k-3+sqrt(2t)
    double mad_exponent() const;
    std::string name() const;
};

struct BoundResult {
    double value = 0;
    double maximizer = std::numeric_limits<double>::quiet_NaN();
    std::string formula;
    bool o1_set_to_one = false;
};

// Occupancy-fraction lower bound: maximised over x in (0, lambda] by a grid
// scan plus golden-section refinement (1e-10 bracket width). The clique
// setting is a closed two-arm formula with its 1-o(1) factor pinned to 1,
// which the result records.
BoundResult occupancy_lower_bound(const SparsitySetting& setting, int Delta, double lambda);

enum class BudgetMode { Fractional, List };

struct BudgetParams {
    double deg = 0;      // deg(u)
    double delta0 = 0;   // minimum-degree scale constant
    int Delta = 0;       // maximum degree (list mode)
    double eps = 0;      // the (1+eps) factor
    BudgetMode mode = BudgetMode::Fractional;
};

// The colouring budget display for the setting, evaluated literally; list
// mode inserts the log(Delta) factors exactly as the displays do. Throws
// regime_error when a log argument is not > 1.
double chromatic_budget(const SparsitySetting& setting, const BudgetParams& p);

// List-size threshold beta*(lambda/(1+lambda))*ell/(1 - sqrt(7 log Delta / ell))
// + gamma*deg; requires ell > 7 log Delta and Delta >= 64.
double list_size_requirement(double beta, double gamma, double deg, double lambda, double ell,
                             int Delta);

}  // namespace hcm
