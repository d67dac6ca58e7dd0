#include "uavplan/astar.hpp"

#include "uavplan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>

namespace uavplan {

double StepCost::cell_units() const {
    return static_cast<double>(ortho) + static_cast<double>(diag) * std::numbers::sqrt2;
}

int StepCost::compare(const StepCost& a, const StepCost& b) {
    // sign of (da + db*sqrt(2)) with da, db integers; da^2 vs 2*db^2 settles
    // the mixed-sign cases exactly.
    const std::int64_t da = a.ortho - b.ortho;
    const std::int64_t db = a.diag - b.diag;
    if (da == 0 && db == 0) return 0;
    if (da >= 0 && db >= 0) return 1;
    if (da <= 0 && db <= 0) return -1;
    const std::int64_t da2 = da * da;
    const std::int64_t db2 = 2 * db * db;
    if (da > 0) return da2 > db2 ? 1 : -1; // db < 0
    return db2 > da2 ? 1 : -1;             // da < 0, db > 0
}

double heuristic(CellIndex a, CellIndex b) {
    return octile_steps(a, b).cell_units();
}

StepCost octile_steps(CellIndex a, CellIndex b) {
    const std::int64_t di = std::abs(static_cast<std::int64_t>(a.i) - b.i);
    const std::int64_t dj = std::abs(static_cast<std::int64_t>(a.j) - b.j);
    const std::int64_t hi = std::max(di, dj);
    const std::int64_t lo = std::min(di, dj);
    return StepCost{hi - lo, lo};
}

namespace {

struct OpenEntry {
    StepCost f;
    StepCost g;
    CellIndex cell;
};

// Max-heap comparator; "less" means popped later. Pop order: lowest f,
// then largest g, then lowest (i,j).
struct EntryLater {
    bool operator()(const OpenEntry& a, const OpenEntry& b) const {
        const int cf = StepCost::compare(a.f, b.f);
        if (cf != 0) return cf > 0;
        const int cg = StepCost::compare(a.g, b.g);
        if (cg != 0) return cg < 0;
        return CellIndex{a.cell.i, a.cell.j} > CellIndex{b.cell.i, b.cell.j};
    }
};

constexpr int kDi[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
constexpr int kDj[8] = {-1, 0, 1, -1, 1, -1, 0, 1};

std::string cell_str(CellIndex c) {
    return "(" + std::to_string(c.i) + ", " + std::to_string(c.j) + ")";
}

} // namespace

SearchResult astar(const OccupancyGrid& grid, CellIndex start, CellIndex goal) {
    if (!is_traversable(grid, start)) {
        throw ValidationError("astar start cell " + cell_str(start) + " is blocked or out of range");
    }
    if (!is_traversable(grid, goal)) {
        throw ValidationError("astar goal cell " + cell_str(goal) + " is blocked or out of range");
    }

    const int rows = grid.rows();
    const int cols = grid.cols();
    const std::size_t n = static_cast<std::size_t>(rows) * cols;

    SearchResult result;
    result.stats.grid_vertices = static_cast<std::int64_t>(n);
    result.stats.grid_edges_bound = 8 * result.stats.grid_vertices;

    std::vector<StepCost> g(n);
    std::vector<std::int32_t> parent(n, -1);
    std::vector<std::uint8_t> state(n, 0); // 0 unseen, 1 open, 2 closed

    auto id_of = [cols](CellIndex c) { return static_cast<std::size_t>(c.i) * cols + c.j; };

    std::priority_queue<OpenEntry, std::vector<OpenEntry>, EntryLater> open;
    const std::size_t start_id = id_of(start);
    g[start_id] = StepCost{};
    state[start_id] = 1;
    open.push(OpenEntry{octile_steps(start, goal), StepCost{}, start});

    bool found = false;
    while (!open.empty()) {
        const OpenEntry top = open.top();
        open.pop();
        const std::size_t uid = id_of(top.cell);
        if (state[uid] == 2 || !(top.g == g[uid])) continue; // stale entry
        state[uid] = 2;
        ++result.stats.expanded_nodes;

        if (top.cell == goal) {
            found = true;
            break;
        }

        for (int k = 0; k < 8; ++k) {
            const CellIndex next{top.cell.i + kDi[k], top.cell.j + kDj[k]};
            if (!is_traversable(grid, next)) continue;
            const bool diagonal = kDi[k] != 0 && kDj[k] != 0;
            if (diagonal) {
                if (!is_traversable(grid, CellIndex{top.cell.i + kDi[k], top.cell.j}) ||
                    !is_traversable(grid, CellIndex{top.cell.i, top.cell.j + kDj[k]})) {
                    continue; // no corner cutting
                }
            }
            ++result.stats.generated_edges;
            const std::size_t vid = id_of(next);
            if (state[vid] == 2) continue;
            const StepCost tentative =
                top.g + (diagonal ? StepCost{0, 1} : StepCost{1, 0});
            if (state[vid] == 1 && StepCost::compare(g[vid], tentative) <= 0) continue;
            g[vid] = tentative;
            parent[vid] = static_cast<std::int32_t>(uid);
            state[vid] = 1;
            open.push(OpenEntry{tentative + octile_steps(next, goal), tentative, next});
        }
    }

    if (!found) return result;

    CellPath path;
    path.steps = g[id_of(goal)];
    path.cost = path.steps.cell_units();
    for (std::int64_t v = static_cast<std::int64_t>(id_of(goal)); v >= 0;
         v = parent[static_cast<std::size_t>(v)]) {
        path.cells.push_back(CellIndex{static_cast<int>(v / cols), static_cast<int>(v % cols)});
        if (static_cast<std::size_t>(v) == start_id) break;
    }
    std::reverse(path.cells.begin(), path.cells.end());
    result.path = std::move(path);
    return result;
}

std::vector<CellIndex> prune_collinear(const CellPath& path) {
    const auto& cells = path.cells;
    if (cells.size() <= 2) return cells;
    std::vector<CellIndex> pruned;
    pruned.reserve(cells.size());
    pruned.push_back(cells.front());
    for (std::size_t k = 1; k + 1 < cells.size(); ++k) {
        const int in_i = cells[k].i - cells[k - 1].i;
        const int in_j = cells[k].j - cells[k - 1].j;
        const int out_i = cells[k + 1].i - cells[k].i;
        const int out_j = cells[k + 1].j - cells[k].j;
        if (in_i != out_i || in_j != out_j) pruned.push_back(cells[k]);
    }
    pruned.push_back(cells.back());
    return pruned;
}

} // namespace uavplan
