#pragma once

#include "qcut/cutting.hpp"
#include "qcut/protocol.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace qcut {

/// Blocking line-framed TCP stream (RAII over a connected socket).
class TcpStream {
public:
    explicit TcpStream(int fd) : fd_(fd) {}
    ~TcpStream();
    TcpStream(const TcpStream&) = delete;
    TcpStream& operator=(const TcpStream&) = delete;

    /// Reads up to the next newline. Returns false on orderly close.
    bool read_line(std::string& line);
    void write_line(const std::string& line);

private:
    int fd_ = -1;
    std::string buffer_;
};

/// Connects to "host:port". Throws ExecutionError on failure.
std::unique_ptr<TcpStream> tcp_connect(const std::string& endpoint);

struct WorkerConfig {
    std::string worker_id = "worker";
    int max_qubits = kMaxSimQubits;
    bool supports_midmeas = true;
};

/// Simulation agent: listens for job frames and answers result frames on the
/// embedded simulator. One thread per connection.
class WorkerServer {
public:
    /// Binds immediately (port 0 picks an ephemeral port); serving starts
    /// with start().
    WorkerServer(int port, WorkerConfig config);
    ~WorkerServer();

    int port() const { return port_; }
    void start();
    void stop();

private:
    void accept_loop();
    void serve_connection(int fd);

    WorkerConfig config_;
    int listen_fd_ = -1;
    int port_ = 0;
    std::atomic<bool> running_{false};
    std::thread accept_thread_;
    std::vector<std::thread> connections_;
    std::mutex conn_mutex_;
    std::set<int> active_fds_;  // shut down on stop() so recv unblocks
};

/// Foreground service loop: binds, serves, never returns.
[[noreturn]] void serve_worker(int port, const WorkerConfig& config);

/// Default listen port: QCUT_WORKER_PORT or 7733.
int default_worker_port();

/// Client side of the worker protocol: one connection, hello handshake on
/// construction, synchronous job execution.
class RemoteConnection {
public:
    explicit RemoteConnection(std::string endpoint);

    const CapabilitiesFrame& capabilities() const { return capabilities_; }

    /// Runs one job remotely. Throws ExecutionError on connection loss or an
    /// error frame.
    VariantResult run(const VariantJob& job);

private:
    std::string endpoint_;
    std::unique_ptr<TcpStream> stream_;
    CapabilitiesFrame capabilities_;
};

} // namespace qcut
