#pragma once

#include "setvi/game.hpp"
#include "setvi/gridworld.hpp"
#include "setvi/intervals.hpp"
#include "setvi/mdp.hpp"
#include "setvi/set_bellman.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace setvi {

/// Problem files are plain text, one statement per line, `#` to end of line
/// is a comment and `:` counts as whitespace. The first statement selects
/// the kind:
///
///   problem mdp
///     states N / actions N / discount G
///     transition s a : p0 ... p{S-1}        one column per state-action pair
///     cost s : c0 ... c{A-1}                nominal costs (optional)
///     cost-lower s : ... / cost-upper s :   cost interval (optional)
///
///   problem grid
///     rows R / cols C / p-main P / p-side P / discount G
///     cost-range lo hi / seed N             costs drawn uniformly per seed
///
///   problem game
///     base: either rows/cols/p-main/p-side or states/actions/transition
///     gamma1 G / gamma2 G / seed N
///     cost s : ...        or  cost-range lo hi          (player costs)
///     coupling s : ...    or  coupling-range lo hi      (policy coupling)
///
/// Generated game matrices use sub-seeds derived from the file seed
/// (stream 0 for costs, stream 1 for coupling), so a single seed pins the
/// whole instance.
enum class ProblemKind { mdp, grid, game };

/// Parse or validation failure, carrying one message per problem found;
/// syntax messages name the offending line.
class ProblemError : public std::runtime_error {
public:
    enum class Category { syntax, validation };

    ProblemError(Category category, std::vector<std::string> details);

    Category category() const { return category_; }
    const std::vector<std::string>& details() const { return details_; }

private:
    Category category_;
    std::vector<std::string> details_;
};

struct ParseOptions {
    /// Rescale near-stochastic transition columns (within 1e-6 of 1) instead
    /// of rejecting them. Never applied silently; callers opt in.
    bool renormalize = false;
};

/// A parsed, validated problem declaration. Random matrices (grid costs,
/// generated game costs/coupling) are materialized on demand so a seed
/// override can regenerate them.
struct ProblemFile {
    ProblemKind kind = ProblemKind::mdp;

    // mdp kind
    std::optional<Mdp> mdp;  ///< nominal cost is zero when only an interval was given
    bool has_nominal_cost = false;
    std::optional<IntervalCost> cost_interval;

    // grid declaration (grid kind, or game kind on a grid)
    std::optional<GridSpec> grid;
    double discount = 0.9;
    std::pair<double, double> cost_range{0.0, 1.0};

    // game kind
    std::optional<Mdp> game_base;  ///< explicit base (cost field unused)
    std::optional<Matrix> explicit_nominal;
    std::optional<Matrix> explicit_coupling;
    std::pair<double, double> coupling_range{0.0, 0.1};
    double gamma1 = 0.7;
    double gamma2 = 0.7;

    std::uint64_t seed = 0;

    /// Concrete MDP for the solve pipeline (mdp kind with nominal costs, or
    /// grid kind). Throws std::invalid_argument for other declarations.
    Mdp build_mdp(std::optional<std::uint64_t> seed_override = {}) const;

    /// Cost-interval family for the set-solve/verify pipelines (mdp kind
    /// with a cost interval, or the player-1 interval of a game).
    MdpFamily build_family(std::optional<std::uint64_t> seed_override = {}) const;

    /// Materialized game (game kind only).
    GameSpec build_game(std::optional<std::uint64_t> seed_override = {}) const;
};

/// Parses and validates a problem document. Throws ProblemError with one
/// entry per syntax error (with line numbers) or per violated invariant.
ProblemFile parse_problem(const std::string& text, const ParseOptions& options = {});

/// Canonical text form of a declaration; parsing it back yields an
/// identical problem (matrices are printed with 17 significant digits).
std::string emit_problem(const ProblemFile& problem);

}  // namespace setvi
