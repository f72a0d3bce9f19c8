#include "setvi/problem.hpp"

#include "setvi/rng.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace setvi {

namespace {

std::string join(const std::vector<std::string>& details) {
    std::string out = "problem file rejected:";
    for (const auto& d : details) {
        out += "\n  - ";
        out += d;
    }
    return out;
}

struct RowStatement {
    int line = 0;
    int index = 0;
    std::vector<double> values;
};

struct ColumnStatement {
    int line = 0;
    int state = 0;
    int action = 0;
    std::vector<double> values;
};

struct ScalarStatement {
    int line = 0;
    std::vector<double> values;
};

struct RawDocument {
    std::string kind;
    int kind_line = 0;
    std::map<std::string, ScalarStatement> scalars;
    std::optional<std::uint64_t> seed;  // parsed exactly, not through double
    std::vector<ColumnStatement> transition;
    std::map<std::string, std::vector<RowStatement>> rows;  // cost, cost-lower, ...
};

const std::set<std::string> kScalarKeys = {
    "states", "actions", "discount", "rows",   "cols",       "p-main",
    "p-side", "gamma1",  "gamma2",   "cost-range", "coupling-range"};

const std::set<std::string> kRowKeys = {"cost", "cost-lower", "cost-upper", "coupling"};

// Keys each problem kind accepts.
const std::map<std::string, std::set<std::string>> kAllowedKeys = {
    {"mdp",
     {"states", "actions", "discount", "transition", "cost", "cost-lower", "cost-upper"}},
    {"grid", {"rows", "cols", "p-main", "p-side", "discount", "cost-range", "seed"}},
    {"game", {"rows", "cols", "p-main", "p-side", "gamma1", "gamma2", "cost-range",
              "coupling-range", "seed", "states", "actions", "transition", "cost",
              "coupling"}},
};

bool parse_double(const std::string& token, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(token, &used);
        return used == token.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_int(const std::string& token, int& out) {
    try {
        std::size_t used = 0;
        out = std::stoi(token, &used);
        return used == token.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_u64(const std::string& token, std::uint64_t& out) {
    try {
        std::size_t used = 0;
        out = std::stoull(token, &used);
        return used == token.size() && token.find('-') == std::string::npos;
    } catch (const std::exception&) {
        return false;
    }
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

/// Tokenizes a raw line: comments stripped, ':' treated as whitespace.
std::vector<std::string> tokenize(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ':', ' ');
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

RawDocument scan(const std::string& text, std::vector<std::string>& errors) {
    RawDocument doc;
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    auto fail = [&](int line, const std::string& message) {
        std::ostringstream msg;
        msg << "line " << line << ": " << message;
        errors.push_back(msg.str());
    };

    while (std::getline(stream, raw)) {
        ++line_no;
        const auto tokens = tokenize(raw);
        if (tokens.empty()) continue;
        const std::string& key = tokens[0];

        if (key == "problem") {
            if (!doc.kind.empty()) {
                fail(line_no, "duplicate 'problem' statement");
                continue;
            }
            if (tokens.size() != 2 ||
                (tokens[1] != "mdp" && tokens[1] != "grid" && tokens[1] != "game")) {
                fail(line_no, "expected 'problem mdp|grid|game'");
                continue;
            }
            doc.kind = tokens[1];
            doc.kind_line = line_no;
            continue;
        }
        if (doc.kind.empty()) {
            fail(line_no, "statement before the 'problem' declaration");
            continue;
        }
        const auto& allowed = kAllowedKeys.at(doc.kind);
        if (!allowed.contains(key)) {
            fail(line_no, "key '" + key + "' not allowed for problem kind '" + doc.kind + "'");
            continue;
        }

        if (key == "seed") {
            if (doc.seed) {
                fail(line_no, "duplicate 'seed'");
                continue;
            }
            std::uint64_t value = 0;
            if (tokens.size() != 2 || !parse_u64(tokens[1], value)) {
                fail(line_no, "'seed' expects one non-negative integer");
                continue;
            }
            doc.seed = value;
            continue;
        }

        if (kScalarKeys.contains(key)) {
            const std::size_t arity = (key == "cost-range" || key == "coupling-range") ? 2 : 1;
            if (tokens.size() != 1 + arity) {
                std::ostringstream msg;
                msg << "'" << key << "' expects " << arity << " value(s), got "
                    << tokens.size() - 1;
                fail(line_no, msg.str());
                continue;
            }
            if (doc.scalars.contains(key)) {
                fail(line_no, "duplicate '" + key + "'");
                continue;
            }
            ScalarStatement scalar{line_no, {}};
            bool ok = true;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                double value = 0.0;
                if (!parse_double(tokens[i], value)) {
                    fail(line_no, "'" + key + "': '" + tokens[i] + "' is not a number");
                    ok = false;
                    break;
                }
                scalar.values.push_back(value);
            }
            if (ok) doc.scalars.emplace(key, std::move(scalar));
            continue;
        }

        if (key == "transition") {
            if (tokens.size() < 4) {
                fail(line_no, "'transition' expects: transition s a : p0 p1 ...");
                continue;
            }
            ColumnStatement column;
            column.line = line_no;
            if (!parse_int(tokens[1], column.state) || !parse_int(tokens[2], column.action)) {
                fail(line_no, "'transition': state/action indices must be integers");
                continue;
            }
            bool ok = true;
            for (std::size_t i = 3; i < tokens.size(); ++i) {
                double value = 0.0;
                if (!parse_double(tokens[i], value)) {
                    fail(line_no, "'transition': '" + tokens[i] + "' is not a number");
                    ok = false;
                    break;
                }
                column.values.push_back(value);
            }
            if (ok) doc.transition.push_back(std::move(column));
            continue;
        }

        if (kRowKeys.contains(key)) {
            if (tokens.size() < 3) {
                fail(line_no, "'" + key + "' expects: " + key + " s : c0 c1 ...");
                continue;
            }
            RowStatement row;
            row.line = line_no;
            if (!parse_int(tokens[1], row.index)) {
                fail(line_no, "'" + key + "': state index must be an integer");
                continue;
            }
            bool ok = true;
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                double value = 0.0;
                if (!parse_double(tokens[i], value)) {
                    fail(line_no, "'" + key + "': '" + tokens[i] + "' is not a number");
                    ok = false;
                    break;
                }
                row.values.push_back(value);
            }
            if (ok) doc.rows[key].push_back(std::move(row));
            continue;
        }

        fail(line_no, "unknown key '" + key + "'");
    }
    if (doc.kind.empty() && errors.empty()) {
        errors.push_back("missing 'problem mdp|grid|game' declaration");
    }
    return doc;
}

class Assembler {
public:
    Assembler(const RawDocument& doc, const ParseOptions& options)
        : doc_(doc), options_(options) {}

    ProblemFile assemble() {
        ProblemFile problem;
        if (doc_.kind == "mdp") {
            problem.kind = ProblemKind::mdp;
            assemble_mdp(problem);
        } else if (doc_.kind == "grid") {
            problem.kind = ProblemKind::grid;
            assemble_grid(problem);
        } else {
            problem.kind = ProblemKind::game;
            assemble_game(problem);
        }
        if (!errors_.empty()) {
            throw ProblemError(ProblemError::Category::validation, std::move(errors_));
        }
        return problem;
    }

private:
    const RawDocument& doc_;
    const ParseOptions& options_;
    std::vector<std::string> errors_;

    void fail(const std::string& message) { errors_.push_back(message); }
    void fail_at(int line, const std::string& message) {
        std::ostringstream msg;
        msg << "line " << line << ": " << message;
        errors_.push_back(msg.str());
    }

    std::optional<double> scalar(const std::string& key) const {
        auto it = doc_.scalars.find(key);
        if (it == doc_.scalars.end()) return std::nullopt;
        return it->second.values[0];
    }

    std::optional<int> positive_int(const std::string& key) {
        const auto value = scalar(key);
        if (!value) return std::nullopt;
        const double v = *value;
        if (v != std::floor(v) || v <= 0 || v > 1e6) {
            fail_at(doc_.scalars.at(key).line, "'" + key + "' must be a positive integer");
            return std::nullopt;
        }
        return static_cast<int>(v);
    }

    std::uint64_t read_seed() const { return doc_.seed.value_or(0); }

    std::optional<std::pair<double, double>> read_range(const std::string& key) {
        auto it = doc_.scalars.find(key);
        if (it == doc_.scalars.end()) return std::nullopt;
        const double lo = it->second.values[0];
        const double hi = it->second.values[1];
        if (lo > hi) {
            fail_at(it->second.line, "'" + key + "': lower bound exceeds upper bound");
            return std::nullopt;
        }
        return std::make_pair(lo, hi);
    }

    /// Assembles an S x A matrix from per-state rows, reporting missing,
    /// duplicate and wrongly sized rows with line context.
    std::optional<Matrix> rows_to_matrix(const std::string& key, int states, int actions) {
        auto it = doc_.rows.find(key);
        if (it == doc_.rows.end() || it->second.empty()) return std::nullopt;
        Matrix matrix = Matrix::Zero(states, actions);
        std::vector<bool> seen(static_cast<std::size_t>(states), false);
        bool ok = true;
        for (const auto& row : it->second) {
            if (row.index < 0 || row.index >= states) {
                fail_at(row.line, "'" + key + "': state index out of range");
                ok = false;
                continue;
            }
            if (seen[static_cast<std::size_t>(row.index)]) {
                fail_at(row.line, "'" + key + "': duplicate row for state " +
                                      std::to_string(row.index));
                ok = false;
                continue;
            }
            seen[static_cast<std::size_t>(row.index)] = true;
            if (static_cast<int>(row.values.size()) != actions) {
                std::ostringstream msg;
                msg << "'" << key << "': expected " << actions << " values, got "
                    << row.values.size();
                fail_at(row.line, msg.str());
                ok = false;
                continue;
            }
            for (int a = 0; a < actions; ++a) matrix(row.index, a) = row.values[a];
        }
        for (int s = 0; s < states; ++s) {
            if (!seen[static_cast<std::size_t>(s)]) {
                fail("'" + key + "': missing row for state " + std::to_string(s));
                ok = false;
            }
        }
        if (!ok) return std::nullopt;
        return matrix;
    }

    /// Assembles the transition kernel from per-column statements and checks
    /// stochasticity columnwise so errors carry their source line.
    std::optional<Matrix> assemble_transition(int states, int actions) {
        if (doc_.transition.empty()) {
            fail("missing 'transition' columns");
            return std::nullopt;
        }
        Matrix transition = Matrix::Zero(states, states * actions);
        std::vector<bool> seen(static_cast<std::size_t>(states) * actions, false);
        bool ok = true;
        for (const auto& column : doc_.transition) {
            if (column.state < 0 || column.state >= states || column.action < 0 ||
                column.action >= actions) {
                fail_at(column.line, "'transition': state-action indices out of range");
                ok = false;
                continue;
            }
            const int index = column.state * actions + column.action;
            if (seen[static_cast<std::size_t>(index)]) {
                std::ostringstream msg;
                msg << "'transition': duplicate column (" << column.state << ","
                    << column.action << ")";
                fail_at(column.line, msg.str());
                ok = false;
                continue;
            }
            seen[static_cast<std::size_t>(index)] = true;
            if (static_cast<int>(column.values.size()) != states) {
                std::ostringstream msg;
                msg << "'transition': expected " << states << " probabilities, got "
                    << column.values.size();
                fail_at(column.line, msg.str());
                ok = false;
                continue;
            }
            double sum = 0.0;
            bool negative = false;
            for (int sp = 0; sp < states; ++sp) {
                transition(sp, index) = column.values[sp];
                sum += column.values[sp];
                if (column.values[sp] < 0.0) negative = true;
            }
            if (negative) {
                std::ostringstream msg;
                msg << "'transition': column (" << column.state << "," << column.action
                    << ") has a negative entry";
                fail_at(column.line, msg.str());
                ok = false;
                continue;
            }
            if (std::abs(sum - 1.0) > kStochasticTol) {
                if (options_.renormalize && std::abs(sum - 1.0) <= 1e-6 && sum > 0.0) {
                    transition.col(index) /= sum;
                } else {
                    std::ostringstream msg;
                    msg << "column (" << column.state << "," << column.action
                        << ") not stochastic: sums to " << fmt(sum);
                    fail_at(column.line, msg.str());
                    ok = false;
                }
            }
        }
        for (int s = 0; s < states && ok; ++s) {
            for (int a = 0; a < actions; ++a) {
                if (!seen[static_cast<std::size_t>(s * actions + a)]) {
                    std::ostringstream msg;
                    msg << "'transition': missing column (" << s << "," << a << ")";
                    fail(msg.str());
                    ok = false;
                }
            }
        }
        if (!ok) return std::nullopt;
        return transition;
    }

    void require_discount(double value, const char* key) {
        if (!(value > 0.0 && value < 1.0)) {
            fail(std::string("'") + key + "' out of range (0,1): got " + fmt(value));
        }
    }

    void assemble_mdp(ProblemFile& problem) {
        const auto states = positive_int("states");
        const auto actions = positive_int("actions");
        if (!scalar("states")) fail("missing 'states'");
        if (!scalar("actions")) fail("missing 'actions'");
        const auto discount_opt = scalar("discount");
        if (!discount_opt) {
            fail("missing 'discount'");
        } else {
            require_discount(*discount_opt, "discount");
        }
        if (!doc_.transition.empty() && (!states || !actions)) return;
        if (!states || !actions) {
            fail("missing 'transition' columns");
            return;
        }
        const double discount = discount_opt.value_or(0.5);

        const auto transition = assemble_transition(*states, *actions);
        const auto nominal = rows_to_matrix("cost", *states, *actions);
        const auto lower = rows_to_matrix("cost-lower", *states, *actions);
        const auto upper = rows_to_matrix("cost-upper", *states, *actions);

        if (doc_.rows.contains("cost-lower") != doc_.rows.contains("cost-upper")) {
            fail("'cost-lower' and 'cost-upper' must be given together");
        }
        if (!nominal && !lower) {
            fail("declare 'cost' rows, 'cost-lower'/'cost-upper' rows, or both");
        }
        if (!transition || !errors_.empty()) return;

        Mdp mdp;
        mdp.num_states = *states;
        mdp.num_actions = *actions;
        mdp.transition = *transition;
        mdp.cost = nominal ? *nominal : Matrix::Zero(*states, *actions);
        mdp.discount = discount;

        if (lower && upper) {
            for (int s = 0; s < *states; ++s) {
                for (int a = 0; a < *actions; ++a) {
                    if ((*lower)(s, a) > (*upper)(s, a)) {
                        std::ostringstream msg;
                        msg << "cost interval at (" << s << "," << a
                            << ") has lower > upper";
                        fail(msg.str());
                    }
                }
            }
            if (!errors_.empty()) return;
            problem.cost_interval = IntervalCost(*lower, *upper);
        }

        for (const auto& violation : validate_mdp(mdp)) fail(violation);
        if (!errors_.empty()) return;

        problem.mdp = std::move(mdp);
        problem.has_nominal_cost = nominal.has_value();
        problem.discount = discount;
        problem.seed = read_seed();
    }

    std::optional<GridSpec> assemble_grid_spec() {
        const auto rows = positive_int("rows");
        const auto cols = positive_int("cols");
        if (!scalar("rows")) fail("missing 'rows'");
        if (!scalar("cols")) fail("missing 'cols'");
        if (!rows || !cols) return std::nullopt;
        GridSpec spec;
        spec.rows = *rows;
        spec.cols = *cols;
        if (const auto p = scalar("p-main")) spec.p_main = *p;
        if (const auto p = scalar("p-side")) spec.p_side = *p;
        spec.seed = read_seed();
        for (const auto& violation : validate_grid(spec)) fail(violation);
        return spec;
    }

    void assemble_grid(ProblemFile& problem) {
        const auto spec = assemble_grid_spec();
        if (const auto d = scalar("discount")) {
            problem.discount = *d;
            require_discount(*d, "discount");
        }
        if (const auto range = read_range("cost-range")) problem.cost_range = *range;
        if (!spec || !errors_.empty()) return;
        problem.grid = *spec;
        problem.seed = spec->seed;
    }

    void assemble_game(ProblemFile& problem) {
        const bool grid_base = doc_.scalars.contains("rows") || doc_.scalars.contains("cols");
        const bool explicit_base =
            doc_.scalars.contains("states") || !doc_.transition.empty();
        if (grid_base && explicit_base) {
            fail("game base must be either a grid (rows/cols) or explicit "
                 "(states/actions/transition), not both");
            return;
        }
        if (!grid_base && !explicit_base) {
            fail("game needs a base: rows/cols for a grid, or states/actions/transition");
            return;
        }

        if (const auto g = scalar("gamma1")) {
            problem.gamma1 = *g;
            require_discount(*g, "gamma1");
        }
        if (const auto g = scalar("gamma2")) {
            problem.gamma2 = *g;
            require_discount(*g, "gamma2");
        }
        if (const auto range = read_range("cost-range")) problem.cost_range = *range;
        if (const auto range = read_range("coupling-range")) problem.coupling_range = *range;
        if (problem.coupling_range.first < 0.0) {
            fail("'coupling-range' must be non-negative");
        }
        problem.seed = read_seed();

        int states = 0;
        int actions = 0;
        if (grid_base) {
            const auto spec = assemble_grid_spec();
            if (!spec || !errors_.empty()) return;
            problem.grid = *spec;
            states = spec->rows * spec->cols;
            actions = kGridActions;
        } else {
            const auto states_opt = positive_int("states");
            const auto actions_opt = positive_int("actions");
            if (!scalar("states")) fail("missing 'states'");
            if (!scalar("actions")) fail("missing 'actions'");
            if (!states_opt || !actions_opt) return;
            states = *states_opt;
            actions = *actions_opt;
            const auto transition = assemble_transition(states, actions);
            if (!transition || !errors_.empty()) return;
            Mdp base;
            base.num_states = states;
            base.num_actions = actions;
            base.transition = *transition;
            base.cost = Matrix::Zero(states, actions);
            base.discount = problem.gamma1;
            problem.game_base = std::move(base);
        }

        if (const auto nominal = rows_to_matrix("cost", states, actions)) {
            if (!nominal->allFinite()) fail("'cost' has a non-finite entry");
            problem.explicit_nominal = *nominal;
        }
        if (const auto coupling = rows_to_matrix("coupling", states, actions)) {
            if ((coupling->array() < 0.0).any()) fail("'coupling' has a negative entry");
            problem.explicit_coupling = *coupling;
        }
    }
};

}  // namespace

ProblemError::ProblemError(Category category, std::vector<std::string> details)
    : std::runtime_error(join(details)), category_(category), details_(std::move(details)) {}

ProblemFile parse_problem(const std::string& text, const ParseOptions& options) {
    std::vector<std::string> syntax_errors;
    const RawDocument doc = scan(text, syntax_errors);
    if (!syntax_errors.empty()) {
        throw ProblemError(ProblemError::Category::syntax, std::move(syntax_errors));
    }
    return Assembler(doc, options).assemble();
}

Mdp ProblemFile::build_mdp(std::optional<std::uint64_t> seed_override) const {
    switch (kind) {
        case ProblemKind::mdp:
            if (!has_nominal_cost) {
                throw std::invalid_argument(
                    "problem declares only a cost interval; solve needs 'cost' rows");
            }
            return *mdp;
        case ProblemKind::grid: {
            GridSpec spec = *grid;
            spec.seed = seed_override.value_or(spec.seed);
            return make_grid_mdp(spec, discount, cost_range.first, cost_range.second);
        }
        case ProblemKind::game:
            throw std::invalid_argument("game problems are run with the game command");
    }
    throw std::logic_error("unreachable");
}

MdpFamily ProblemFile::build_family(std::optional<std::uint64_t> seed_override) const {
    switch (kind) {
        case ProblemKind::mdp: {
            if (!cost_interval) {
                throw std::invalid_argument(
                    "problem declares no cost interval; add 'cost-lower'/'cost-upper' rows");
            }
            return MdpFamily{*mdp, *cost_interval};
        }
        case ProblemKind::game: {
            const GameSpec spec = build_game(seed_override);
            Mdp base = spec.base;
            base.cost = spec.nominal_cost;
            base.discount = spec.gamma1;
            return MdpFamily{std::move(base), derive_cost_intervals(spec).first};
        }
        case ProblemKind::grid:
            throw std::invalid_argument(
                "grid problems declare no cost interval; set-solve needs an mdp or game "
                "problem");
    }
    throw std::logic_error("unreachable");
}

GameSpec ProblemFile::build_game(std::optional<std::uint64_t> seed_override) const {
    if (kind != ProblemKind::game) {
        throw std::invalid_argument("not a game problem");
    }
    const std::uint64_t master = seed_override.value_or(seed);

    GameSpec spec;
    if (grid) {
        GridSpec grid_spec = *grid;
        grid_spec.seed = master;
        spec.base.num_states = grid_spec.rows * grid_spec.cols;
        spec.base.num_actions = kGridActions;
        spec.base.transition = build_grid_transition(grid_spec);
    } else {
        spec.base = *game_base;
    }
    spec.base.cost = Matrix::Zero(spec.base.num_states, spec.base.num_actions);
    spec.gamma1 = gamma1;
    spec.gamma2 = gamma2;
    spec.base.discount = gamma1;

    spec.nominal_cost = explicit_nominal
                            ? *explicit_nominal
                            : random_cost_matrix(spec.base.num_states, spec.base.num_actions,
                                                 cost_range.first, cost_range.second,
                                                 derive_seed(master, 0));
    spec.coupling = explicit_coupling
                        ? *explicit_coupling
                        : random_cost_matrix(spec.base.num_states, spec.base.num_actions,
                                             coupling_range.first, coupling_range.second,
                                             derive_seed(master, 1));
    return spec;
}

std::string emit_problem(const ProblemFile& problem) {
    std::ostringstream out;
    switch (problem.kind) {
        case ProblemKind::mdp: {
            const Mdp& mdp = *problem.mdp;
            out << "problem mdp\n";
            out << "states " << mdp.num_states << "\n";
            out << "actions " << mdp.num_actions << "\n";
            out << "discount " << fmt(mdp.discount) << "\n";
            for (int s = 0; s < mdp.num_states; ++s) {
                for (int a = 0; a < mdp.num_actions; ++a) {
                    out << "transition " << s << " " << a << " :";
                    for (int sp = 0; sp < mdp.num_states; ++sp) {
                        out << " " << fmt(mdp.transition(sp, mdp.column(s, a)));
                    }
                    out << "\n";
                }
            }
            auto write_rows = [&](const char* key, const Matrix& matrix) {
                for (int s = 0; s < matrix.rows(); ++s) {
                    out << key << " " << s << " :";
                    for (int a = 0; a < matrix.cols(); ++a) out << " " << fmt(matrix(s, a));
                    out << "\n";
                }
            };
            if (problem.has_nominal_cost) write_rows("cost", mdp.cost);
            if (problem.cost_interval) {
                write_rows("cost-lower", problem.cost_interval->lower);
                write_rows("cost-upper", problem.cost_interval->upper);
            }
            break;
        }
        case ProblemKind::grid: {
            const GridSpec& grid = *problem.grid;
            out << "problem grid\n";
            out << "rows " << grid.rows << "\n";
            out << "cols " << grid.cols << "\n";
            out << "p-main " << fmt(grid.p_main) << "\n";
            out << "p-side " << fmt(grid.p_side) << "\n";
            out << "discount " << fmt(problem.discount) << "\n";
            out << "cost-range " << fmt(problem.cost_range.first) << " "
                << fmt(problem.cost_range.second) << "\n";
            out << "seed " << problem.seed << "\n";
            break;
        }
        case ProblemKind::game: {
            out << "problem game\n";
            if (problem.grid) {
                out << "rows " << problem.grid->rows << "\n";
                out << "cols " << problem.grid->cols << "\n";
                out << "p-main " << fmt(problem.grid->p_main) << "\n";
                out << "p-side " << fmt(problem.grid->p_side) << "\n";
            } else {
                const Mdp& base = *problem.game_base;
                out << "states " << base.num_states << "\n";
                out << "actions " << base.num_actions << "\n";
                for (int s = 0; s < base.num_states; ++s) {
                    for (int a = 0; a < base.num_actions; ++a) {
                        out << "transition " << s << " " << a << " :";
                        for (int sp = 0; sp < base.num_states; ++sp) {
                            out << " " << fmt(base.transition(sp, base.column(s, a)));
                        }
                        out << "\n";
                    }
                }
            }
            out << "gamma1 " << fmt(problem.gamma1) << "\n";
            out << "gamma2 " << fmt(problem.gamma2) << "\n";
            if (problem.explicit_nominal) {
                for (int s = 0; s < problem.explicit_nominal->rows(); ++s) {
                    out << "cost " << s << " :";
                    for (int a = 0; a < problem.explicit_nominal->cols(); ++a) {
                        out << " " << fmt((*problem.explicit_nominal)(s, a));
                    }
                    out << "\n";
                }
            } else {
                out << "cost-range " << fmt(problem.cost_range.first) << " "
                    << fmt(problem.cost_range.second) << "\n";
            }
            if (problem.explicit_coupling) {
                for (int s = 0; s < problem.explicit_coupling->rows(); ++s) {
                    out << "coupling " << s << " :";
                    for (int a = 0; a < problem.explicit_coupling->cols(); ++a) {
                        out << " " << fmt((*problem.explicit_coupling)(s, a));
                    }
                    out << "\n";
                }
            } else {
                out << "coupling-range " << fmt(problem.coupling_range.first) << " "
                    << fmt(problem.coupling_range.second) << "\n";
            }
            out << "seed " << problem.seed << "\n";
            break;
        }
    }
    return out.str();
}

}  // namespace setvi
