#include "qcut/scheduler.hpp"

#include "qcut/error.hpp"
#include "qcut/rng.hpp"
#include "qcut/statevector.hpp"
#include "qcut/worker.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace qcut {

namespace {

bool needs_midmeas(const VariantJob& job) {
    return std::any_of(job.circuit.gates().begin(), job.circuit.gates().end(),
                       [](const Gate& g) { return is_measurement(g.kind); });
}

struct EffectiveBackend {
    BackendDescriptor desc;
    int max_qubits = 0;        // descriptor clamped by advertised capabilities
    bool supports_midmeas = true;
};

bool fits(const EffectiveBackend& b, int width, bool midmeas) {
    return width <= b.max_qubits && (!midmeas || b.supports_midmeas);
}

struct PendingJob {
    const VariantJob* job;
    int width;
    bool midmeas;
    std::size_t order;  // submission index, for FIFO and tie-breaks
};

/// Synchronized pending set; slots pull the best job they can run.
class JobPool {
public:
    JobPool(std::vector<PendingJob> jobs, SchedulePolicy policy) : jobs_(std::move(jobs)) {
        if (policy == SchedulePolicy::LargestFirst) {
            std::stable_sort(jobs_.begin(), jobs_.end(), [](const PendingJob& a, const PendingJob& b) {
                return a.width > b.width;
            });
        }
    }

    /// Pops the first pending job the backend can run; returns false when no
    /// pending job fits (now or ever: the set only shrinks).
    bool take(const EffectiveBackend& b, PendingJob& out) {
        std::lock_guard lock(mutex_);
        if (aborted_) return false;
        for (std::size_t i = 0; i < jobs_.size(); ++i) {
            if (fits(b, jobs_[i].width, jobs_[i].midmeas)) {
                out = jobs_[i];
                jobs_.erase(jobs_.begin() + static_cast<std::ptrdiff_t>(i));
                return true;
            }
        }
        return false;
    }

    void abort() {
        std::lock_guard lock(mutex_);
        aborted_ = true;
    }

private:
    std::mutex mutex_;
    std::vector<PendingJob> jobs_;
    bool aborted_ = false;
};

class ResultSink {
public:
    void put(VariantResult r) {
        std::lock_guard lock(mutex_);
        const auto [it, fresh] = results_.emplace(r.job_id, std::move(r));
        if (!fresh) throw Error("duplicate result for job " + it->first);
    }

    std::map<std::string, VariantResult> take() { return std::move(results_); }

private:
    std::mutex mutex_;
    std::map<std::string, VariantResult> results_;
};

VariantResult run_local(const VariantJob& job, const EffectiveBackend& b) {
    const auto start = std::chrono::steady_clock::now();
    if (b.desc.latency_ms > 0) {
        std::this_thread::sleep_for(std::chrono::milliseconds(b.desc.latency_ms));
    }
    VariantResult r;
    r.job_id = job.job_id;
    r.value = estimate_signed_expectation({job.circuit, job.observable, job.shots, job.seed});
    r.backend_id = b.desc.id;
    r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return r;
}

} // namespace

ExecutionReport submit(const std::vector<VariantJob>& jobs,
                       const std::vector<BackendDescriptor>& backends,
                       SchedulePolicy policy) {
    if (backends.empty()) throw ConfigError("submit needs at least one backend");
    for (const BackendDescriptor& b : backends) b.validate();

    // Connect remotes first so routing sees advertised capabilities. One
    // connection per slot keeps remote jobs independent.
    struct Slot {
        int backend = 0;
        std::unique_ptr<RemoteConnection> conn;  // null for local slots
    };
    std::vector<EffectiveBackend> effective;
    std::vector<Slot> slots;
    for (std::size_t bi = 0; bi < backends.size(); ++bi) {
        const BackendDescriptor& desc = backends[bi];
        EffectiveBackend eff{desc, desc.max_qubits, desc.supports_midmeas};
        if (desc.kind == BackendKind::RemoteSim) {
            for (int s = 0; s < desc.parallelism; ++s) {
                Slot slot;
                slot.backend = static_cast<int>(bi);
                slot.conn = std::make_unique<RemoteConnection>(desc.endpoint);
                if (s == 0) {
                    const CapabilitiesFrame& caps = slot.conn->capabilities();
                    eff.max_qubits = std::min(eff.max_qubits, caps.max_qubits);
                    eff.supports_midmeas = eff.supports_midmeas && caps.supports_midmeas;
                }
                slots.push_back(std::move(slot));
            }
        } else {
            for (int s = 0; s < desc.parallelism; ++s) {
                slots.push_back({static_cast<int>(bi), nullptr});
            }
        }
        effective.push_back(std::move(eff));
    }

    // Route check before anything executes.
    std::vector<PendingJob> pending;
    pending.reserve(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        PendingJob p{&jobs[i], jobs[i].circuit.n_qubits(), needs_midmeas(jobs[i]), i};
        const bool routable = std::any_of(effective.begin(), effective.end(),
                                          [&](const EffectiveBackend& b) {
                                              return fits(b, p.width, p.midmeas);
                                          });
        if (!routable) {
            throw ExecutionError("unroutable job " + jobs[i].job_id + ": width " +
                                 std::to_string(p.width) +
                                 (p.midmeas ? " with mid-circuit measurement" : "") +
                                 " fits no backend");
        }
        pending.push_back(p);
    }

    JobPool pool(std::move(pending), policy);
    ResultSink sink;
    std::vector<BackendStats> stats(backends.size());
    for (std::size_t bi = 0; bi < backends.size(); ++bi) stats[bi].id = backends[bi].id;
    std::mutex stats_mutex;

    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    const auto start = std::chrono::steady_clock::now();
    std::vector<std::thread> threads;
    threads.reserve(slots.size());
    for (Slot& slot : slots) {
        threads.emplace_back([&, slot_ptr = &slot] {
            const EffectiveBackend& eff = effective[static_cast<std::size_t>(slot_ptr->backend)];
            PendingJob p{nullptr, 0, false, 0};
            while (!failed && pool.take(eff, p)) {
                try {
                    VariantResult r;
                    if (slot_ptr->conn) {
                        const auto t0 = std::chrono::steady_clock::now();
                        int attempts = 0;
                        while (true) {
                            try {
                                r = slot_ptr->conn->run(*p.job);
                                break;
                            } catch (const ExecutionError&) {
                                if (++attempts > 2) throw;
                                // Reconnect and retry (two retries per job).
                                slot_ptr->conn =
                                    std::make_unique<RemoteConnection>(eff.desc.endpoint);
                            }
                        }
                        r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - t0)
                                        .count();
                        r.backend_id = eff.desc.id;
                    } else {
                        r = run_local(*p.job, eff);
                    }
                    {
                        std::lock_guard lock(stats_mutex);
                        BackendStats& bs = stats[static_cast<std::size_t>(slot_ptr->backend)];
                        ++bs.jobs;
                        bs.busy_ms += r.wall_ms;
                    }
                    sink.put(std::move(r));
                } catch (const std::exception& e) {
                    {
                        std::lock_guard lock(failure_mutex);
                        if (failure.empty()) {
                            failure = "job " + p.job->job_id + " failed: " + e.what();
                        }
                    }
                    failed = true;
                    pool.abort();
                    return;
                }
            }
        });
    }
    for (std::thread& t : threads) t.join();

    if (failed) throw ExecutionError(failure);

    ExecutionReport report;
    report.results = sink.take();
    report.backend_stats = std::move(stats);
    report.makespan_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    report.job_count = static_cast<int>(jobs.size());
    if (static_cast<int>(report.results.size()) != report.job_count) {
        throw ExecutionError("result accounting mismatch: " +
                             std::to_string(report.results.size()) + " results for " +
                             std::to_string(report.job_count) + " jobs");
    }
    return report;
}

} // namespace qcut
