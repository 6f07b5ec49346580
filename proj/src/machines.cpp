#include "permlab/machines.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <unordered_set>

#include "permlab/numeric.hpp"
#include "permlab/symmetric_group.hpp"

namespace permlab {

namespace {

// Buffer slot states: kFresh (never used), kSpent (filled and emptied) or a
// held value > 0.
constexpr int kFresh = 0;
constexpr int kSpent = -1;

struct Config {
  std::size_t next_input = 0;
  int next_required = 1;
  std::vector<int> stack;                 // back() is the top
  std::array<std::deque<int>, 2> queues;  // front() exits first
  std::vector<int> slots;

  std::string key(MachineKind machine) const {
    std::string k;
    k.push_back(static_cast<char>(next_input));
    k.push_back(static_cast<char>(next_required));
    if (machine == MachineKind::Stack) {
      k.append(stack.begin(), stack.end());
    } else {
      std::array<std::string, 2> q;
      for (int i = 0; i < 2; ++i) q[i].assign(queues[i].begin(), queues[i].end());
      if (q[1] < q[0]) std::swap(q[0], q[1]);
      k += q[0];
      k.push_back('|');
      k += q[1];
    }
    k.push_back('#');
    std::vector<int> s = slots;
    std::sort(s.begin(), s.end());
    for (int v : s) k.push_back(static_cast<char>(v + 1));
    return k;
  }
};

class Sorter {
public:
  Sorter(const Permutation& perm, MachineKind machine, unsigned buffers)
      : input_(perm.values().begin(), perm.values().end()), machine_(machine), n_(static_cast<int>(perm.size())) {
    config_.slots.assign(buffers, kFresh);
  }

  bool run() { return dfs(); }
  const std::vector<Move>& trail() const { return trail_; }

private:
  bool dfs() {
    if (config_.next_required > n_) return true;
    const auto key = config_.key(machine_);
    if (failed_.count(key)) return false;

    for (const auto& move : candidate_moves()) {
      Config saved = config_;
      apply(move);
      trail_.push_back(move);
      if (dfs()) return true;
      trail_.pop_back();
      config_ = std::move(saved);
    }
    failed_.insert(key);
    return false;
  }

  std::vector<Move> candidate_moves() const {
    std::vector<Move> moves;
    const int want = config_.next_required;
    if (machine_ == MachineKind::Stack) {
      if (!config_.stack.empty() && config_.stack.back() == want) moves.push_back({MoveKind::Pop});
    } else {
      if (!config_.queues[0].empty() && config_.queues[0].front() == want) moves.push_back({MoveKind::Deq1});
      if (!config_.queues[1].empty() && config_.queues[1].front() == want) moves.push_back({MoveKind::Deq2});
    }
    for (std::size_t s = 0; s < config_.slots.size(); ++s) {
      if (config_.slots[s] == want) moves.push_back({MoveKind::BufOut, static_cast<unsigned>(s + 1)});
    }
    if (config_.next_input < input_.size()) {
      if (machine_ == MachineKind::Stack) {
        moves.push_back({MoveKind::Push});
      } else {
        moves.push_back({MoveKind::Enq1});
        moves.push_back({MoveKind::Enq2});
      }
      // Fresh slots are interchangeable; offer only the first.
      for (std::size_t s = 0; s < config_.slots.size(); ++s) {
        if (config_.slots[s] == kFresh) {
          moves.push_back({MoveKind::BufIn, static_cast<unsigned>(s + 1)});
          break;
        }
      }
    }
    return moves;
  }

  void apply(const Move& m) {
    auto& c = config_;
    switch (m.kind) {
    case MoveKind::Push: c.stack.push_back(input_[c.next_input++]); break;
    case MoveKind::Enq1: c.queues[0].push_back(input_[c.next_input++]); break;
    case MoveKind::Enq2: c.queues[1].push_back(input_[c.next_input++]); break;
    case MoveKind::BufIn: c.slots[m.slot - 1] = input_[c.next_input++]; break;
    case MoveKind::Pop:
      c.stack.pop_back();
      ++c.next_required;
      break;
    case MoveKind::Deq1:
      c.queues[0].pop_front();
      ++c.next_required;
      break;
    case MoveKind::Deq2:
      c.queues[1].pop_front();
      ++c.next_required;
      break;
    case MoveKind::BufOut:
      c.slots[m.slot - 1] = kSpent;
      ++c.next_required;
      break;
    }
  }

  std::vector<int> input_;
  MachineKind machine_;
  int n_;
  Config config_;
  std::vector<Move> trail_;
  std::unordered_set<std::string> failed_;
};

void check_guards(std::size_t n, unsigned buffers) {
  if (buffers > kMaxBuffers) {
    throw cap_exceeded("at most " + std::to_string(kMaxBuffers) + " buffers are supported");
  }
  if (n > kMaxSortLength) {
    throw cap_exceeded("machine simulation supports n <= " + std::to_string(kMaxSortLength));
  }
}

} // namespace

const char* to_string(MachineKind kind) {
  return kind == MachineKind::Stack ? "stack" : "queues2";
}

std::optional<MachineKind> parse_machine_kind(std::string_view name) {
  if (name == "stack") return MachineKind::Stack;
  if (name == "queues2") return MachineKind::TwoParallelQueues;
  return std::nullopt;
}

std::string Move::to_string() const {
  switch (kind) {
  case MoveKind::Push: return "PUSH";
  case MoveKind::Pop: return "POP";
  case MoveKind::Enq1: return "ENQ1";
  case MoveKind::Enq2: return "ENQ2";
  case MoveKind::Deq1: return "DEQ1";
  case MoveKind::Deq2: return "DEQ2";
  case MoveKind::BufIn: return "BUF_IN " + std::to_string(slot);
  case MoveKind::BufOut: return "BUF_OUT " + std::to_string(slot);
  }
  return "?";
}

SortOutcome sort_with_machine(const Permutation& perm, MachineKind machine, unsigned buffers) {
  check_guards(perm.size(), buffers);
  Sorter sorter(perm, machine, buffers);
  SortOutcome out;
  out.sortable = sorter.run();
  if (out.sortable) out.witness = sorter.trail();
  return out;
}

bool sortable(const Permutation& perm, MachineKind machine, unsigned buffers) {
  return sort_with_machine(perm, machine, buffers).sortable;
}

bool replay_sort(const Permutation& perm, MachineKind machine, unsigned buffers, const std::vector<Move>& moves) {
  const auto in = perm.values();
  std::size_t next_input = 0;
  int next_required = 1;
  std::vector<int> stack;
  std::array<std::deque<int>, 2> queues;
  std::vector<int> slots(buffers, kFresh);

  const auto take = [&](int& out) {
    if (next_input >= in.size()) return false;
    out = in[next_input++];
    return true;
  };
  for (const auto& m : moves) {
    int v = 0;
    const bool is_stack = machine == MachineKind::Stack;
    switch (m.kind) {
    case MoveKind::Push:
      if (!is_stack || !take(v)) return false;
      stack.push_back(v);
      break;
    case MoveKind::Enq1:
    case MoveKind::Enq2:
      if (is_stack || !take(v)) return false;
      queues[m.kind == MoveKind::Enq2].push_back(v);
      break;
    case MoveKind::BufIn:
      if (m.slot < 1 || m.slot > buffers || slots[m.slot - 1] != kFresh || !take(v)) return false;
      slots[m.slot - 1] = v;
      break;
    case MoveKind::Pop:
      if (!is_stack || stack.empty() || stack.back() != next_required) return false;
      stack.pop_back();
      ++next_required;
      break;
    case MoveKind::Deq1:
    case MoveKind::Deq2: {
      if (is_stack) return false;
      auto& q = queues[m.kind == MoveKind::Deq2];
      if (q.empty() || q.front() != next_required) return false;
      q.pop_front();
      ++next_required;
      break;
    }
    case MoveKind::BufOut:
      if (m.slot < 1 || m.slot > buffers || slots[m.slot - 1] != next_required) return false;
      slots[m.slot - 1] = kSpent;
      ++next_required;
      break;
    }
  }
  return next_required == static_cast<int>(in.size()) + 1;
}

std::uint64_t sortability_class_count(MachineKind machine, unsigned buffers, unsigned n, unsigned jobs) {
  if (n > kMaxClassSweepLength) {
    throw cap_exceeded("sortability class sweeps support n <= " + std::to_string(kMaxClassSweepLength));
  }
  check_guards(n, buffers);
  return count_permutations(n, jobs, [&](const Permutation& p) { return sortable(p, machine, buffers); });
}

std::vector<Permutation> sortability_class(MachineKind machine, unsigned buffers, unsigned n, unsigned jobs) {
  if (n > kMaxClassSweepLength) {
    throw cap_exceeded("sortability class sweeps support n <= " + std::to_string(kMaxClassSweepLength));
  }
  check_guards(n, buffers);
  return collect_permutations(n, jobs, [&](const Permutation& p) { return sortable(p, machine, buffers); });
}

} // namespace permlab
