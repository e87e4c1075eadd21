#ifndef MBD_BOUNDS_HPP
#define MBD_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mbd/graph.hpp"
#include "mbd/solver.hpp"
#include "mbd/strategies.hpp"
#include "mbd/values.hpp"

namespace mbd {

/// Exact domination number by branch and bound over the first undominated
/// vertex. Throws ResourceLimit past the node budget.
int domination_number(const Graph& g, std::uint64_t budget = 500'000'000ULL);

/// gamma(P3 x Pn) = floor((3n+4)/4), n >= 1.
int grid_gamma_formula(int n);

/// 0 when 3|n, -1 when n = 1 (mod 3), +1 when n = 2 (mod 3); n >= 2.
int sigma(int n);

/// [floor((3n+4)/4), (4n+sigma(n))/3] for gmb(P3 x Pn), n >= 2. The upper
/// endpoint is asserted to divide exactly.
Interval grid_gmb_interval(int n);

/// ([1, ceil(n/2)], [1, floor(n/2)]) — valid whenever the respective value
/// is finite.
std::pair<Interval, Interval> trivial_bounds(const Graph& g);

/// o(K_{m,n}): D when m = n = 1 or both sides >= 2, else N.
Outcome bipartite_outcome_formula(int m, int n);

/// o(K_{1,m} x K_{1,n}) for n >= m >= 2: D / N / S by the star-product
/// classification. Throws OutOfDomain below m = 2.
Outcome star_product_outcome_formula(int m, int n);

/// (gsmb, gsmb') of K_{1,m} x K_{1,n} for m >= n >= 3.
std::pair<MoveCount, MoveCount> star_product_values_formula(int m, int n);

/// (gmb, gsmb') of P3 x K_{1,n} = (n+2, n+2) for n >= 3.
std::pair<MoveCount, MoveCount> p3_star_values_formula(int n);

// ---- paper-results registry -------------------------------------------------

enum class Quantity { outcome, gmb, gmb_prime, gsmb, gsmb_prime, gamma, bound_interval };

enum class Feasibility { exact_desk_scale, bounded_depth, out_of_scope };

/// One concrete checkable value from the source results.
struct PaperClaim {
    std::string id;
    std::string graph_spec;  // generator expression
    Quantity quantity;
    // expected value: an outcome, or a count, or an interval
    Outcome expected_outcome = Outcome::D;
    MoveCount expected_count;
    Interval expected_interval{MoveCount::finite(0), MoveCount::infinity()};
    Feasibility feasibility = Feasibility::exact_desk_scale;
    std::string citation;
    int depth_cap = 0;  // for bounded-depth claims
};

enum class ClaimStatus { pass, fail, skipped };

struct ClaimResult {
    PaperClaim claim;
    ClaimStatus status;
    std::string computed;
    std::uint64_t nodes = 0;
    std::int64_t millis = 0;
};

/// Every concrete value and bound the results registry tracks.
std::vector<PaperClaim> paper_registry();

/// Runs each claim whose id contains `filter` (empty = all) through the
/// solver or formulas. Claims marked out-of-scope, or whose budget runs out,
/// are reported skipped.
std::vector<ClaimResult> verify_claims(const std::string& filter = "",
                                       const SolveOptions& opts = {});

std::string format_claim_line(const ClaimResult& r);

}  // namespace mbd

#endif
