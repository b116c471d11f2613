#include "qcut/worker.hpp"

#include "qcut/error.hpp"
#include "qcut/statevector.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <cstring>

namespace qcut {

TcpStream::~TcpStream() {
    if (fd_ >= 0) ::close(fd_);
}

bool TcpStream::read_line(std::string& line) {
    while (true) {
        const std::size_t pos = buffer_.find('\n');
        if (pos != std::string::npos) {
            line = buffer_.substr(0, pos);
            buffer_.erase(0, pos + 1);
            return true;
        }
        char chunk[4096];
        const ssize_t n = ::recv(fd_, chunk, sizeof chunk, 0);
        if (n == 0) return false;
        if (n < 0) {
            throw ExecutionError(std::string("socket read failed: ") + std::strerror(errno));
        }
        buffer_.append(chunk, static_cast<std::size_t>(n));
    }
}

void TcpStream::write_line(const std::string& line) {
    std::string framed = line;
    framed.push_back('\n');
    std::size_t sent = 0;
    while (sent < framed.size()) {
        const ssize_t n = ::send(fd_, framed.data() + sent, framed.size() - sent, MSG_NOSIGNAL);
        if (n <= 0) {
            throw ExecutionError(std::string("socket write failed: ") + std::strerror(errno));
        }
        sent += static_cast<std::size_t>(n);
    }
}

namespace {

std::pair<std::string, int> split_endpoint(const std::string& endpoint) {
    const std::size_t colon = endpoint.rfind(':');
    if (colon == std::string::npos) {
        throw ConfigError("endpoint must look like host:port, got '" + endpoint + "'");
    }
    const std::string host = endpoint.substr(0, colon);
    int port = 0;
    try {
        port = std::stoi(endpoint.substr(colon + 1));
    } catch (const std::exception&) {
        throw ConfigError("bad port in endpoint '" + endpoint + "'");
    }
    return {host.empty() ? "127.0.0.1" : host, port};
}

} // namespace

std::unique_ptr<TcpStream> tcp_connect(const std::string& endpoint) {
    const auto [host, port] = split_endpoint(endpoint);
    addrinfo hints{};
    hints.ai_family = AF_INET;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* info = nullptr;
    const std::string port_str = std::to_string(port);
    if (::getaddrinfo(host.c_str(), port_str.c_str(), &hints, &info) != 0 || !info) {
        throw ExecutionError("cannot resolve endpoint '" + endpoint + "'");
    }
    int fd = -1;
    for (addrinfo* p = info; p; p = p->ai_next) {
        fd = ::socket(p->ai_family, p->ai_socktype, p->ai_protocol);
        if (fd < 0) continue;
        if (::connect(fd, p->ai_addr, p->ai_addrlen) == 0) break;
        ::close(fd);
        fd = -1;
    }
    ::freeaddrinfo(info);
    if (fd < 0) {
        throw ExecutionError("cannot connect to '" + endpoint + "'");
    }
    return std::make_unique<TcpStream>(fd);
}

WorkerServer::WorkerServer(int port, WorkerConfig config) : config_(std::move(config)) {
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd_ < 0) throw ExecutionError("cannot create listen socket");
    const int yes = 1;
    ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);

    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = htons(static_cast<std::uint16_t>(port));
    if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
        ::close(listen_fd_);
        listen_fd_ = -1;
        throw ExecutionError("cannot bind worker port " + std::to_string(port) + ": " +
                             std::strerror(errno));
    }
    socklen_t len = sizeof addr;
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
    if (::listen(listen_fd_, 16) != 0) {
        ::close(listen_fd_);
        listen_fd_ = -1;
        throw ExecutionError("cannot listen on worker port");
    }
}

WorkerServer::~WorkerServer() { stop(); }

void WorkerServer::start() {
    if (running_.exchange(true)) return;
    accept_thread_ = std::thread([this] { accept_loop(); });
}

void WorkerServer::stop() {
    if (!running_.exchange(false)) {
        if (listen_fd_ >= 0) {
            ::close(listen_fd_);
            listen_fd_ = -1;
        }
        return;
    }
    ::shutdown(listen_fd_, SHUT_RDWR);
    ::close(listen_fd_);
    listen_fd_ = -1;
    if (accept_thread_.joinable()) accept_thread_.join();
    for (std::thread& t : connections_) {
        if (t.joinable()) t.join();
    }
    connections_.clear();
}

void WorkerServer::accept_loop() {
    while (running_) {
        const int fd = ::accept(listen_fd_, nullptr, nullptr);
        if (fd < 0) {
            if (!running_) break;
            continue;
        }
        connections_.emplace_back([this, fd] { serve_connection(fd); });
    }
}

void WorkerServer::serve_connection(int fd) {
    TcpStream stream(fd);
    std::string line;
    while (true) {
        try {
            if (!stream.read_line(line)) return;
        } catch (const ExecutionError&) {
            return;  // peer vanished; nothing to answer
        }
        try {
            Frame frame;
            try {
                frame = decode_frame(line);
            } catch (const ConfigError& e) {
                stream.write_line(encode_error({"", "bad_request", e.what()}));
                continue;
            }
            switch (frame.type) {
                case Frame::Type::Hello: {
                    stream.write_line(encode_capabilities(
                        {config_.max_qubits, config_.supports_midmeas, config_.worker_id}));
                    break;
                }
                case Frame::Type::Job: {
                    const JobFrame& job = frame.job;
                    if (job.circuit.n_qubits() > config_.max_qubits) {
                        stream.write_line(encode_error(
                            {job.id, "capacity_exceeded",
                             "job width " + std::to_string(job.circuit.n_qubits()) +
                                 " over advertised max " + std::to_string(config_.max_qubits)}));
                        break;
                    }
                    const bool needs_midmeas = std::any_of(
                        job.circuit.gates().begin(), job.circuit.gates().end(),
                        [](const Gate& g) { return is_measurement(g.kind); });
                    if (needs_midmeas && !config_.supports_midmeas) {
                        stream.write_line(encode_error(
                            {job.id, "midmeas_unsupported",
                             "worker does not support mid-circuit measurement"}));
                        break;
                    }
                    const auto start = std::chrono::steady_clock::now();
                    try {
                        const double value = estimate_signed_expectation(
                            {job.circuit, job.observable, job.shots, job.seed});
                        const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - start)
                                              .count();
                        stream.write_line(encode_result({job.id, value, wall}));
                    } catch (const std::exception& e) {
                        stream.write_line(encode_error({job.id, "simulation_failed", e.what()}));
                    }
                    break;
                }
                default:
                    stream.write_line(
                        encode_error({"", "bad_request", "unexpected frame type"}));
            }
        } catch (const ExecutionError&) {
            return;  // write failed, connection is gone
        }
    }
}

void serve_worker(int port, const WorkerConfig& config) {
    WorkerServer server(port, config);
    server.start();
    while (true) {
        std::this_thread::sleep_for(std::chrono::hours(1));
    }
}

int default_worker_port() {
    if (const char* env = std::getenv("QCUT_WORKER_PORT")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw ConfigError(std::string("bad QCUT_WORKER_PORT value '") + env + "'");
        }
    }
    return 7733;
}

RemoteConnection::RemoteConnection(std::string endpoint) : endpoint_(std::move(endpoint)) {
    stream_ = tcp_connect(endpoint_);
    stream_->write_line(encode_hello());
    std::string line;
    if (!stream_->read_line(line)) {
        throw ExecutionError("worker at '" + endpoint_ + "' closed during handshake");
    }
    const Frame frame = decode_frame(line);
    if (frame.type != Frame::Type::Capabilities) {
        throw ExecutionError("worker at '" + endpoint_ + "' answered hello with wrong frame");
    }
    capabilities_ = frame.capabilities;
}

VariantResult RemoteConnection::run(const VariantJob& job) {
    JobFrame f;
    f.id = job.job_id;
    f.circuit = job.circuit;
    f.observable = job.observable;
    f.shots = job.shots;
    f.seed = job.seed;
    stream_->write_line(encode_job(f));
    std::string line;
    if (!stream_->read_line(line)) {
        throw ExecutionError("connection to '" + endpoint_ + "' lost while awaiting result");
    }
    const Frame frame = decode_frame(line);
    if (frame.type == Frame::Type::Error) {
        throw ExecutionError("worker error for job " + job.job_id + ": " + frame.error.code +
                             " (" + frame.error.message + ")");
    }
    if (frame.type != Frame::Type::Result || frame.result.id != job.job_id) {
        throw ExecutionError("unexpected frame while awaiting result of " + job.job_id);
    }
    VariantResult r;
    r.job_id = frame.result.id;
    r.value = frame.result.value;
    r.wall_ms = frame.result.wall_ms;
    return r;
}

} // namespace qcut
