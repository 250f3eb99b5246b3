// Copyright 2026 The ofal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ofal/offline.hpp"

#include "ofal/error.hpp"

#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace ofal {

OptimalState::OptimalState(Instance inst) : instance(std::move(inst)), usage(instance.size(), 0) {}

bool OptimalState::has_free_server() const
{
    for (ServerIndex s = 0; s < instance.size(); ++s)
        if (usage[s] < instance.capacity(s))
            return true;
    return false;
}

Matching OptimalState::matching() const
{
    Matching m;
    m.pairs.reserve(assignment.size());
    for (RequestIndex i = 0; i < assignment.size(); ++i)
        m.pairs.push_back(Pair{i, assignment[i]});
    return m;
}

namespace {

struct Predecessor {
    ServerIndex server;     // server the displaced request leaves
    RequestIndex request;   // the displaced request
};

}  // namespace

AugmentationResult extend_optimal(OptimalState state, const Rational& request)
{
    const Instance& inst = state.instance;
    const std::size_t k = inst.size();
    if (!state.has_free_server())
        throw NoFreeServerError();

    // Moving a resident r from u to v changes the cost by |r - v| - |r - u|,
    // which is non-increasing in r when v > u and non-decreasing when v < u.
    // So only the rightmost (v > u) or leftmost (v < u) resident of u can
    // give the cheapest arc. Position ties go to the lower request index.
    std::vector<std::optional<RequestIndex>> leftmost(k), rightmost(k);
    for (RequestIndex j = 0; j < state.assignment.size(); ++j) {
        const ServerIndex u = state.assignment[j];
        const Rational& r = state.requests[j];
        if (!leftmost[u] || r < state.requests[*leftmost[u]])
            leftmost[u] = j;
        if (!rightmost[u] || r > state.requests[*rightmost[u]])
            rightmost[u] = j;
    }

    // dist[s]: cheapest cost of placing the new request so that server s has
    // absorbed one extra unit, bumping residents along the way.
    std::vector<Rational> dist(k);
    std::vector<std::optional<Predecessor>> pred(k);
    for (ServerIndex s = 0; s < k; ++s)
        dist[s] = abs_diff(request, inst.position(s));

    // FIFO label-correcting search. M is optimal, so the residual graph has
    // no negative cycle and no server is dequeued more than k times.
    std::deque<ServerIndex> queue;
    std::vector<bool> queued(k, false);
    std::vector<std::size_t> dequeued(k, 0);
    for (ServerIndex s = 0; s < k; ++s)
        if (leftmost[s]) {
            queue.push_back(s);
            queued[s] = true;
        }
    while (!queue.empty()) {
        const ServerIndex from = queue.front();
        queue.pop_front();
        queued[from] = false;
        if (++dequeued[from] > k)
            throw std::logic_error("negative residual cycle: stored matching is not optimal");
        for (ServerIndex to = 0; to < k; ++to) {
            if (to == from)
                continue;
            const RequestIndex j = to > from ? *rightmost[from] : *leftmost[from];
            const Rational& r = state.requests[j];
            Rational candidate = dist[from] + abs_diff(r, inst.position(to)) - abs_diff(r, inst.position(from));
            if (candidate < dist[to]) {
                dist[to] = std::move(candidate);
                pred[to] = Predecessor{from, j};
                if (!queued[to] && leftmost[to]) {
                    queue.push_back(to);
                    queued[to] = true;
                }
            }
        }
    }

    std::optional<ServerIndex> end;
    for (ServerIndex s = 0; s < k && !end; ++s)
        if (state.usage[s] < inst.capacity(s) && inst.position(s) == request) {
            end = s;
            dist[s] = 0;
            pred[s].reset();
        }
    if (!end) {
        for (ServerIndex s = 0; s < k; ++s) {
            if (state.usage[s] >= inst.capacity(s))
                continue;
            if (!end || dist[s] < dist[*end])
                end = s;
        }
    }

    AugmentationResult result{std::move(state), *end, dist[*end], *end, {}};
    OptimalState& next = result.state;
    ServerIndex at = *end;
    while (pred[at]) {
        const Predecessor p = *pred[at];
        result.moves.push_back(Reassignment{p.request, p.server, at});
        next.assignment[p.request] = at;
        at = p.server;
    }
    result.placed = at;
    next.requests.push_back(request);
    next.assignment.push_back(at);
    ++next.usage[*end];
    next.cost += result.delta;
    return result;
}

std::string format_augmentation(const AugmentationResult& result)
{
    const auto& st = result.state;
    std::ostringstream out;
    out << "extend r" << st.requests.size() << '=' << format_rational(st.requests.back()) << " place s"
        << result.placed + 1;
    // moves are recorded from the saturated end backwards; print in path order
    for (auto it = result.moves.rbegin(); it != result.moves.rend(); ++it)
        out << " move r" << it->request + 1 << ":s" << it->from + 1 << "->s" << it->to + 1;
    out << " saturate s" << result.saturated + 1 << " delta " << format_rational(result.delta) << " cost "
        << format_rational(st.cost);
    return out.str();
}

namespace {

class Enumerator {
public:
    Enumerator(const Instance& inst, const RequestSequence& seq)
        : inst_(inst), seq_(seq), load_(inst.size(), 0), current_(seq.size())
    {
    }

    void run() { descend(0, Rational(0)); }

    std::optional<Rational> best_cost;
    std::vector<ServerIndex> best;

private:
    // Servers are tried in ascending order, so the first optimum reached is
    // lexicographically smallest; anything later must be strictly cheaper.
    void descend(RequestIndex i, const Rational& partial)
    {
        if (best_cost && partial >= *best_cost)
            return;
        if (i == seq_.size()) {
            best_cost = partial;
            best = current_;
            return;
        }
        for (ServerIndex s = 0; s < inst_.size(); ++s) {
            if (load_[s] == inst_.capacity(s))
                continue;
            ++load_[s];
            current_[i] = s;
            descend(i + 1, partial + abs_diff(seq_[i], inst_.position(s)));
            --load_[s];
        }
    }

    const Instance& inst_;
    const RequestSequence& seq_;
    std::vector<int> load_;
    std::vector<ServerIndex> current_;
};

}  // namespace

OptimalAssignment brute_force_optimal(const Instance& instance, const RequestSequence& sequence, std::size_t limit)
{
    if (sequence.size() > limit)
        throw EnumerationLimitError("brute force refuses " + std::to_string(sequence.size()) +
                                    " requests (limit " + std::to_string(limit) + ")");
    if (sequence.size() > instance.total_capacity())
        throw InfeasibleError("infeasible: " + std::to_string(sequence.size()) + " requests exceed total capacity " +
                              std::to_string(instance.total_capacity()));

    Enumerator e(instance, sequence);
    e.run();
    OptimalAssignment out{*e.best_cost, {}};
    for (RequestIndex i = 0; i < e.best.size(); ++i)
        out.matching.pairs.push_back(Pair{i, e.best[i]});
    return out;
}

OptimalAssignment solve_optimal(const Instance& instance, const RequestSequence& sequence,
                                std::vector<std::string>* log)
{
    if (sequence.size() > instance.total_capacity())
        throw InfeasibleError("infeasible: " + std::to_string(sequence.size()) + " requests exceed total capacity " +
                              std::to_string(instance.total_capacity()));
    OptimalState state(instance);
    for (const Rational& r : sequence.requests) {
        AugmentationResult step = extend_optimal(std::move(state), r);
        if (log)
            log->push_back(format_augmentation(step));
        state = std::move(step.state);
    }
    return OptimalAssignment{state.cost, state.matching()};
}

}  // namespace ofal
