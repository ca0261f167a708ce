#include "galvin/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>
#include <vector>

#include "galvin/chromatic.hpp"
#include "galvin/errors.hpp"
#include "galvin/orientation.hpp"

namespace galvin {

namespace {

// A triangle of g as an edge triple plus the endpoint each edge pair shares.
// Parallel classes meeting pairwise in three distinct vertices contribute one
// entry per edge combination.
struct TriangleEdges {
    std::array<EdgeId, 3> e;
    std::array<VertexId, 3> shared;  // shared[0]: e0&e1, [1]: e1&e2, [2]: e0&e2
};

constexpr std::uint64_t kProgressInterval = std::uint64_t{1} << 20;

class Engine {
public:
    Engine(const MultiGraph& g, int k, std::uint64_t budget, int jobs,
           const SearchProgressFn& progress)
        : g_(g), k_(k), budget_(budget), jobs_(std::max(jobs, 1)), progress_(progress) {
        n_ = g.vertex_count();
        m_ = g.edge_count();
        for (EdgeId e = 0; e < m_; ++e) ends_.push_back({g.edge(e).a, g.edge(e).b});
        for (VertexId v = 0; v < n_; ++v) incident_.push_back(g.incident(v));
        incidences_ = line_incidences(g);
        collect_triangles();
    }

    SearchOutcome run() {
        if (k_ < 0) throw PreconditionError("k may not be negative");
        if (n_ > 31) throw ScaleLimitError("search refuses more than 31 vertices");
        if (k_ > 62) throw ScaleLimitError("search refuses more than 62 colours");

        SearchOutcome out;
        if (m_ == 0) {
            out.status = SearchStatus::Found;
            Witness w;
            w.k = k_;
            w.colouring.k = k_;
            w.partition.side.assign(n_, Side::D);
            out.witness = std::move(w);
            return out;
        }

        std::vector<std::thread> pool;
        for (int id = 1; id < jobs_; ++id) pool.emplace_back([this, id] { worker(id); });
        worker(0);
        for (std::thread& t : pool) t.join();

        out.examined_colourings = colourings_.load();
        out.examined_partitions = partitions_.load();
        if (best_index_.load() >= 0) {
            out.status = SearchStatus::Found;
            out.witness = best_;
        } else if (exhausted_.load()) {
            out.status = SearchStatus::BudgetExhausted;
        } else {
            out.status = SearchStatus::Refuted;
        }
        return out;
    }

private:
    const MultiGraph& g_;
    const int k_;
    const std::uint64_t budget_;
    const int jobs_;
    const SearchProgressFn& progress_;
    int n_ = 0, m_ = 0;
    std::vector<std::array<VertexId, 2>> ends_;
    std::vector<std::vector<EdgeId>> incident_;
    std::vector<LineIncidence> incidences_;
    std::vector<TriangleEdges> triangles_;

    std::atomic<std::uint64_t> steps_{0};
    std::atomic<std::uint64_t> colourings_{0};
    std::atomic<std::uint64_t> partitions_{0};
    std::atomic<long long> best_index_{-1};
    std::atomic<bool> exhausted_{false};
    std::mutex best_mutex_;
    std::mutex progress_mutex_;
    Witness best_;

    void collect_triangles() {
        for (VertexId u = 0; u < n_; ++u)
            for (VertexId v = u + 1; v < n_; ++v) {
                if (!g_.adjacent(u, v)) continue;
                for (VertexId w = v + 1; w < n_; ++w) {
                    if (!g_.adjacent(u, w) || !g_.adjacent(v, w)) continue;
                    for (EdgeId e1 : g_.parallel_class(u, v))
                        for (EdgeId e2 : g_.parallel_class(u, w))
                            for (EdgeId e3 : g_.parallel_class(v, w))
                                triangles_.push_back({{e1, e2, e3}, {u, w, v}});
                }
            }
    }

    // A candidate at this canonical index is still worth deciding: nothing
    // exhausted the budget and no witness with a smaller index exists.  Every
    // index below the final winner is therefore examined in full, which is
    // what makes the least-index guarantee hold at any jobs count.
    bool live(long long index) const {
        if (exhausted_.load(std::memory_order_relaxed)) return false;
        const long long best = best_index_.load(std::memory_order_relaxed);
        return best < 0 || index < best;
    }

    // One unit per candidate surviving the outdegree filter plus the cycle
    // search expansions it spends; enumeration overhead is free.
    bool charge(std::uint64_t amount) {
        const std::uint64_t before = steps_.fetch_add(amount, std::memory_order_relaxed);
        if (before + amount > budget_) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    void report_progress(std::uint64_t& local_colourings, std::uint64_t& local_partitions,
                         std::uint64_t& since, long long index) {
        colourings_.fetch_add(local_colourings, std::memory_order_relaxed);
        partitions_.fetch_add(local_partitions, std::memory_order_relaxed);
        local_colourings = 0;
        local_partitions = 0;
        since = 0;
        if (!progress_) return;
        SearchProgress snap;
        snap.colourings = colourings_.load(std::memory_order_relaxed);
        snap.partitions = partitions_.load(std::memory_order_relaxed);
        snap.steps = steps_.load(std::memory_order_relaxed);
        snap.index = index;
        std::lock_guard<std::mutex> lock(progress_mutex_);
        progress_(snap);
    }

    void worker(int id) {
        std::vector<std::uint64_t> used(n_, 0);
        std::vector<int> cls(m_, 0);
        long long index = -1;
        bool done = false;
        std::uint64_t local_colourings = 0, local_partitions = 0, since_report = 0;

        auto recurse = [&](auto&& self, int e, int maxc) -> void {
            if (done) return;
            if (e == m_) {
                ++index;
                if (index % jobs_ != id) return;
                if (!live(index)) {
                    done = true;
                    return;
                }
                process_colouring(cls, maxc, index, local_colourings, local_partitions,
                                  since_report);
                return;
            }
            const VertexId a = ends_[e][0], b = ends_[e][1];
            const int limit = std::min(k_, maxc + 1);
            for (int c = 1; c <= limit && !done; ++c) {
                const std::uint64_t bit = std::uint64_t{1} << c;
                if ((used[a] | used[b]) & bit) continue;
                used[a] |= bit;
                used[b] |= bit;
                cls[e] = c;
                self(self, e + 1, std::max(maxc, c));
                used[a] &= ~bit;
                used[b] &= ~bit;
            }
        };
        recurse(recurse, 0, 0);
        colourings_.fetch_add(local_colourings, std::memory_order_relaxed);
        partitions_.fetch_add(local_partitions, std::memory_order_relaxed);
    }

    void process_colouring(const std::vector<int>& cls, int width, long long index,
                           std::uint64_t& local_colourings, std::uint64_t& local_partitions,
                           std::uint64_t& since_report) {
        std::vector<int> order(width);
        std::iota(order.begin(), order.end(), 1);
        std::vector<int> val(m_);
        std::vector<int> lo(2 * m_), hi(2 * m_);
        const std::uint32_t sweeps = std::uint32_t{1} << (n_ - 1);

        do {
            if (!live(index)) return;
            for (EdgeId e = 0; e < m_; ++e) val[e] = order[cls[e] - 1];
            ++local_colourings;

            for (VertexId v = 0; v < n_; ++v)
                for (EdgeId e : incident_[v]) {
                    int below = 0, above = 0;
                    for (EdgeId f : incident_[v]) {
                        if (f == e) continue;
                        (val[f] < val[e] ? below : above)++;
                    }
                    const int slot = 2 * e + (ends_[e][0] == v ? 0 : 1);
                    lo[slot] = below;
                    hi[slot] = above;
                }

            // Prescreen for this value order: if some edge breaks the
            // outdegree bound under its endpoints' best-case sides (vertex 0
            // is pinned to D), no partition can survive, so the whole sweep
            // is decided at once.
            bool hopeless = false;
            for (EdgeId e = 0; e < m_ && !hopeless; ++e) {
                const int ba =
                    ends_[e][0] == 0 ? lo[2 * e] : std::min(lo[2 * e], hi[2 * e]);
                const int bb = ends_[e][1] == 0 ? lo[2 * e + 1]
                                                : std::min(lo[2 * e + 1], hi[2 * e + 1]);
                if (ba + bb > k_ - 1) hopeless = true;
            }
            if (hopeless) {
                local_partitions += sweeps;
                since_report += sweeps;
                if (since_report >= kProgressInterval)
                    report_progress(local_colourings, local_partitions, since_report, index);
                continue;
            }

            for (std::uint32_t q = 0; q < sweeps; ++q) {
                ++local_partitions;
                if (++since_report >= kProgressInterval)
                    report_progress(local_colourings, local_partitions, since_report, index);
                if (!live(index)) return;
                if (!outdegree_ok(q, lo, hi)) continue;
                if (!charge(1)) return;
                if (!triangles_ok(q, val)) continue;
                if (!cycles_ok(q, val)) continue;
                report_found(index, q, val);
                return;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }

    int side_of(std::uint32_t q, VertexId v) const {
        return v == 0 ? 0 : static_cast<int>((q >> (v - 1)) & 1);
    }

    bool outdegree_ok(std::uint32_t q, const std::vector<int>& lo,
                      const std::vector<int>& hi) const {
        for (EdgeId e = 0; e < m_; ++e) {
            const int oa = side_of(q, ends_[e][0]) == 0 ? lo[2 * e] : hi[2 * e];
            const int ob = side_of(q, ends_[e][1]) == 0 ? lo[2 * e + 1] : hi[2 * e + 1];
            if (oa + ob > k_ - 1) return false;
        }
        return true;
    }

    // Rejects exactly the candidates whose orientation has a directed
    // triangle on three edges meeting in three distinct vertices.  Such a
    // triple is chordless and pseudochord-free in the line graph, so it is a
    // genuine kernel-less clique; rejecting on it keeps Refuted sound.
    bool triangles_ok(std::uint32_t q, const std::vector<int>& val) const {
        for (const TriangleEdges& t : triangles_) {
            std::array<int, 3> p{0, 1, 2};
            std::sort(p.begin(), p.end(),
                      [&](int i, int j) { return val[t.e[i]] < val[t.e[j]]; });
            auto shared = [&](int i, int j) {
                if (i > j) std::swap(i, j);
                return i == 0 ? (j == 1 ? t.shared[0] : t.shared[2]) : t.shared[1];
            };
            const bool up01 = side_of(q, shared(p[0], p[1])) == 1;   // lowest -> middle
            const bool up12 = side_of(q, shared(p[1], p[2])) == 1;   // middle -> highest
            const bool down20 = side_of(q, shared(p[0], p[2])) == 0;  // highest -> lowest
            if ((up01 && up12 && down20) || (!up01 && !up12 && !down20)) return false;
        }
        return true;
    }

    bool cycles_ok(std::uint32_t q, const std::vector<int>& val) {
        GalvinOrientation o;
        o.node_count = m_;
        o.k = k_;
        o.outdegree.assign(m_, 0);
        o.arcs.reserve(incidences_.size());
        for (const LineIncidence& inc : incidences_) {
            EdgeId low = inc.e, high = inc.f;
            if (val[low] > val[high]) std::swap(low, high);
            Arc a;
            a.witness = inc.shared;
            if (side_of(q, inc.shared) == 0) {
                a.from = high;
                a.to = low;
            } else {
                a.from = low;
                a.to = high;
            }
            o.outdegree[a.from] += 1;
            o.arcs.push_back(a);
        }
        const std::uint64_t spent = steps_.load(std::memory_order_relaxed);
        const std::uint64_t room = budget_ > spent ? budget_ - spent : 1;
        OddCycleReport report = check_odd_cycles(o, room, true);
        if (report.steps > 0 && !charge(report.steps)) return false;
        if (report.budget_exhausted) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        return report.bad_cycles.empty();
    }

    void report_found(long long index, std::uint32_t q, const std::vector<int>& val) {
        Witness w;
        w.k = k_;
        w.colouring.k = k_;
        w.colouring.colour.assign(val.begin(), val.end());
        w.partition.side.assign(n_, Side::U);
        for (VertexId v = 0; v < n_; ++v)
            if (side_of(q, v) == 0) w.partition.side[v] = Side::D;

        PropernessReport full = verify_proper(g_, w.partition, w.colouring, k_);
        if (!full.verdict)
            throw InvariantError("candidate passed the fast checks but failed verify_proper");

        std::lock_guard<std::mutex> lock(best_mutex_);
        const long long best = best_index_.load(std::memory_order_acquire);
        if (best < 0 || index < best) {
            best_ = std::move(w);
            best_index_.store(index, std::memory_order_release);
        }
    }
};

}  // namespace

SearchOutcome search_proper(const MultiGraph& g, int k, std::uint64_t budget, int jobs,
                            const SearchProgressFn& progress) {
    return Engine(g, k, budget, jobs, progress).run();
}

MinKOutcome min_k(const MultiGraph& g, int k_max, std::uint64_t budget, int jobs,
                  const SearchProgressFn& progress) {
    MinKOutcome out;
    out.first_k = chromatic_index(g).chromatic_index;
    if (k_max < out.first_k) throw PreconditionError("k_max is below the chromatic index");
    for (int k = out.first_k; k <= k_max; ++k) {
        SearchOutcome level = search_proper(g, k, budget, jobs, progress);
        out.examined_colourings += level.examined_colourings;
        out.examined_partitions += level.examined_partitions;
        out.k = k;
        if (level.status == SearchStatus::Found) {
            out.status = SearchStatus::Found;
            out.witness = std::move(level.witness);
            return out;
        }
        if (level.status == SearchStatus::BudgetExhausted) {
            out.status = SearchStatus::BudgetExhausted;
            return out;
        }
    }
    out.status = SearchStatus::Refuted;
    out.k = k_max;
    return out;
}

SearchOutcome refute_delta_witness(const MultiGraph& g, std::uint64_t budget, int jobs,
                                   const SearchProgressFn& progress) {
    if (!g.is_simple()) throw PreconditionError("graph must be simple");
    return search_proper(g, g.max_degree(), budget, jobs, progress);
}

}  // namespace galvin
