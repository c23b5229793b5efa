#include "wfam/search.hpp"

#include <chrono>

#include "wfam/binomial.hpp"
#include "wfam/detail/witness_tracker.hpp"

namespace wfam {

std::string to_string(search_mode mode) {
  return mode == search_mode::exhaustive ? "exhaustive" : "bnb";
}

void search_problem::validate() const {
  params.validate();
  if (node_limit < 1) fail(errc::usage, "node_limit must be at least 1");
  if (mode == search_mode::exhaustive && binomial(params.n, params.d + 1) > 25)
    fail(errc::usage, "exhaustive mode requires C(n,d+1) <= 25, got " +
                          std::to_string(binomial(params.n, params.d + 1)));
}

namespace {

// Shared bookkeeping for the two DFS variants.
struct search_state {
  std::uint64_t nodes = 0;
  std::uint64_t node_limit = 0;
  bool limited = false;
  bool early_stop = false;
  std::optional<std::uint64_t> target;
  std::uint64_t best = 0;
  std::vector<element_set> best_members;

  // True when the search must unwind.
  bool tick() {
    if (limited || early_stop) return true;
    if (++nodes > node_limit) {
      limited = true;
      return true;
    }
    return false;
  }

  void offer(const std::vector<element_set>& members) {
    if (members.size() > best) {
      best = members.size();
      best_members = members;
      if (target && best >= *target) early_stop = true;
    }
  }
};

struct exhaustive_search {
  const std::vector<element_set>& universe;
  int s;
  ground_params params;
  search_state& state;
  std::vector<element_set> chosen;

  void run() {
    chosen.clear();
    dfs(0);
  }

  void dfs(std::size_t i) {
    if (state.tick()) return;
    state.offer(chosen);  // `chosen` was verified before descending
    if (i == universe.size()) return;
    chosen.push_back(universe[i]);
    set_family partial;
    partial.params = params;
    partial.members = chosen;  // appended in canonical order, so already sorted
    if (verify_s_witness(partial, s).ok()) dfs(i + 1);
    chosen.pop_back();
    if (state.limited || state.early_stop) return;
    dfs(i + 1);
  }
};

struct bnb_search {
  const std::vector<element_set>& universe;
  const std::vector<std::vector<element_set>>& cand_table;
  search_state& state;
  detail::witness_tracker tracker;

  bnb_search(const std::vector<element_set>& u,
             const std::vector<std::vector<element_set>>& table, int s, search_state& st)
      : universe(u), cand_table(table), state(st), tracker(s) {}

  void run() {
    // Symmetry breaking: some maximum family contains the colex-least
    // candidate after relabeling, so fix it at the root.
    tracker.add(universe[0], &cand_table[0]);
    if (!tracker.feasible())
      fail(errc::internal, "single-member family must always be feasible");
    state.offer(tracker.members());
    dfs(1);
  }

  void dfs(std::size_t i) {
    if (state.tick()) return;
    if (tracker.size() + (universe.size() - i) <= state.best) return;  // bound prune
    if (i == universe.size()) return;
    std::size_t mark = tracker.checkpoint();
    tracker.add(universe[i], &cand_table[i]);
    if (tracker.feasible()) {
      state.offer(tracker.members());
      dfs(i + 1);
    }
    tracker.rollback(mark);
    if (state.limited || state.early_stop) return;
    dfs(i + 1);
  }
};

}  // namespace

search_result max_s_witness(const search_problem& problem) {
  problem.validate();
  const ground_params& params = problem.params;
  const int s = params.s;

  std::vector<element_set> universe = k_subsets(params.ground(), params.d + 1);
  if (universe.empty()) fail(errc::internal, "empty candidate universe");
  if (binomial(params.d + 1, s) > 64)
    fail(errc::usage, "search supports at most 64 witness candidates per member; C(d+1,s) = " +
                          std::to_string(binomial(params.d + 1, s)));

  search_state state;
  state.node_limit = problem.node_limit;
  state.target = problem.target;

  if (problem.mode == search_mode::exhaustive) {
    exhaustive_search search{universe, s, params, state, {}};
    search.run();
  } else {
    std::vector<std::vector<element_set>> cand_table;
    cand_table.reserve(universe.size());
    for (const element_set& f : universe) cand_table.push_back(k_subsets(f, s));
    bnb_search search(universe, cand_table, s, state);
    search.run();
  }

  search_result result;
  result.best_size = state.best;
  result.nodes_explored = state.nodes;
  result.complete = !state.limited && !state.early_stop;
  result.certificate.family.params = params;
  result.certificate.family.members = canonical_members(std::move(state.best_members));
  verify_result verified = verify_s_witness(result.certificate.family, s);
  if (!verified.ok())
    fail(errc::internal, "search certificate fails verification");
  result.certificate.witnesses = *std::move(verified.assignment);
  return result;
}

std::vector<sweep_row> sweep(const std::vector<ground_params>& grid, search_mode mode,
                             std::uint64_t node_limit) {
  std::vector<sweep_row> rows;
  rows.reserve(grid.size());
  for (const ground_params& cell : grid) {
    sweep_row row;
    row.params = cell;
    row.mode = mode;
    auto start = std::chrono::steady_clock::now();
    try {
      row.bound_nm1_d = binomial(cell.n - 1, cell.d);
      search_problem problem;
      problem.params = cell;
      problem.mode = mode;
      problem.node_limit = node_limit;
      search_result r = max_s_witness(problem);
      row.best_size = r.best_size;
      row.complete = r.complete;
      row.nodes = r.nodes_explored;
    } catch (const error& e) {
      row.error = e.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace wfam
