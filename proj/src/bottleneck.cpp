#include "persistdist/bottleneck.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>
#include <thread>

namespace persistdist {

namespace {

unsigned effective_threads(std::size_t tasks) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("PERSISTDIST_THREADS")) {
        const long cap = std::atol(env);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    if (tasks < hw) hw = static_cast<unsigned>(tasks);
    return hw;
}

// Hopcroft-Karp maximum matching; vertices are 0-based, adj is the left
// adjacency list.
class BipartiteMatcher {
public:
    BipartiteMatcher(std::size_t left, std::size_t right, std::vector<std::vector<int>> adj)
        : n_left_(left), n_right_(right), adj_(std::move(adj)),
          match_left_(left, -1), match_right_(right, -1) {}

    std::size_t solve() {
        std::size_t matched = 0;
        while (bfs()) {
            for (std::size_t u = 0; u < n_left_; ++u)
                if (match_left_[u] == -1 && dfs(static_cast<int>(u))) ++matched;
        }
        return matched;
    }

    const std::vector<int>& left_matches() const { return match_left_; }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();

    bool bfs() {
        std::queue<int> q;
        dist_.assign(n_left_, kInf);
        for (std::size_t u = 0; u < n_left_; ++u) {
            if (match_left_[u] == -1) {
                dist_[u] = 0;
                q.push(static_cast<int>(u));
            }
        }
        bool reachable_free = false;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj_[u]) {
                const int w = match_right_[v];
                if (w == -1) {
                    reachable_free = true;
                } else if (dist_[w] == kInf) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(int u) {
        for (int v : adj_[u]) {
            const int w = match_right_[v];
            if (w == -1 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        dist_[u] = kInf;
        return false;
    }

    std::size_t n_left_, n_right_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_left_, match_right_;
    std::vector<int> dist_;
};

// Augmented graph: left = real M_i plus one dummy per N_j, right = real N_j
// plus one dummy per M_i.  M_i can take its own dummy iff τ(M_i) <= δ,
// dummies pair with dummies freely.
std::vector<std::vector<int>> augmented_adjacency(const DistanceMatrix& mx,
                                                  const ExtendedScalar& delta) {
    const std::size_t m = mx.rows, n = mx.cols;
    std::vector<std::vector<int>> adj(m + n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (mx.at(i, j) <= delta) adj[i].push_back(static_cast<int>(j));
        if (mx.row_triv[i] <= delta) adj[i].push_back(static_cast<int>(n + i));
    }
    for (std::size_t j = 0; j < n; ++j) {
        auto& dummy = adj[m + j];
        if (mx.col_triv[j] <= delta) dummy.push_back(static_cast<int>(j));
        for (std::size_t i = 0; i < m; ++i) dummy.push_back(static_cast<int>(n + i));
    }
    return adj;
}

std::vector<ExtendedScalar> matching_candidates(const DistanceMatrix& mx) {
    std::vector<Rational> vals;
    vals.emplace_back(0);
    auto add = [&vals](const ExtendedScalar& v) {
        if (v.is_finite()) vals.push_back(v.value());
    };
    for (const auto& e : mx.entries) add(e);
    for (const auto& t : mx.row_triv) add(t);
    for (const auto& t : mx.col_triv) add(t);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<ExtendedScalar> out;
    out.reserve(vals.size());
    for (auto& v : vals) out.emplace_back(std::move(v));
    return out;
}

}  // namespace

DistanceMatrix pairwise_matrix(const IntervalModule& ms, const IntervalModule& ns) {
    DistanceMatrix mx;
    mx.rows = ms.summands.size();
    mx.cols = ns.summands.size();
    mx.entries.assign(mx.rows * mx.cols, ExtendedScalar(0));
    mx.row_triv.reserve(mx.rows);
    mx.col_triv.reserve(mx.cols);
    for (const auto& s : ms.summands) mx.row_triv.push_back(trivial_threshold(s));
    for (const auto& s : ns.summands) mx.col_triv.push_back(trivial_threshold(s));

    const std::size_t total = mx.rows * mx.cols;
    const unsigned threads = total == 0 ? 1 : effective_threads(total);
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k)
            mx.entries[k] =
                interleaving_distance(ms.summands[k / mx.cols], ns.summands[k % mx.cols]);
    };
    if (threads <= 1) {
        worker(0, total);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (total + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(total, begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return mx;
}

bool delta_matched(const DistanceMatrix& matrix, const ExtendedScalar& delta) {
    if (delta < ExtendedScalar(0)) return false;
    if (delta.is_pos_inf()) return true;
    const std::size_t size = matrix.rows + matrix.cols;
    BipartiteMatcher matcher(size, size, augmented_adjacency(matrix, delta));
    return matcher.solve() == size;
}

static ExtendedScalar bottleneck_from_matrix(const DistanceMatrix& mx) {
    const auto candidates = matching_candidates(mx);
    std::size_t lo = 0, hi = candidates.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (delta_matched(mx, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    if (lo == candidates.size()) return ExtendedScalar::pos_inf();
    return candidates[lo];
}

ExtendedScalar bottleneck_distance(const IntervalModule& ms, const IntervalModule& ns) {
    return bottleneck_from_matrix(pairwise_matrix(ms, ns));
}

BottleneckResult bottleneck_with_matching(const IntervalModule& ms, const IntervalModule& ns) {
    const DistanceMatrix mx = pairwise_matrix(ms, ns);
    BottleneckResult res{bottleneck_from_matrix(mx), {}, {}, {}};

    const std::size_t m = mx.rows, n = mx.cols;
    if (res.distance.is_pos_inf()) {
        // no finite matching threshold; report everything unmatched
        for (std::size_t i = 0; i < m; ++i) res.unmatched_left.push_back(i);
        for (std::size_t j = 0; j < n; ++j) res.unmatched_right.push_back(j);
        return res;
    }
    const std::size_t size = m + n;
    BipartiteMatcher matcher(size, size, augmented_adjacency(mx, res.distance));
    matcher.solve();
    const auto& match = matcher.left_matches();
    std::vector<bool> right_matched(n, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (match[i] >= 0 && static_cast<std::size_t>(match[i]) < n) {
            res.matching.emplace_back(i, static_cast<std::size_t>(match[i]));
            right_matched[match[i]] = true;
        } else {
            res.unmatched_left.push_back(i);
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!right_matched[j]) res.unmatched_right.push_back(j);
    return res;
}

}  // namespace persistdist
