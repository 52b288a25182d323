#include "pseudo3d/executor.hpp"

#include <algorithm>

namespace p3s {

Executor::Executor(int threads) {
    if (threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw > 0 ? static_cast<int>(hw) : 1;
    }
    workers_ = threads;
    threads_.reserve(workers_ - 1);
    for (int i = 0; i < workers_ - 1; ++i)
        threads_.emplace_back([this] { worker_loop(); });
}

Executor::~Executor() {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        stopping_ = true;
    }
    work_cv_.notify_all();
    for (auto& t : threads_) t.join();
}

void Executor::run_chunks(Job& job, std::mutex& m, std::condition_variable& done_cv) {
    for (;;) {
        int chunk;
        {
            std::lock_guard<std::mutex> lock(m);
            if (job.next_chunk >= job.chunks) return;
            chunk = job.next_chunk++;
        }
        // Contiguous split of [0, count) into `chunks` near-equal ranges.
        const std::int64_t begin = job.count * chunk / job.chunks;
        const std::int64_t end = job.count * (chunk + 1) / job.chunks;
        (*job.body)(begin, end);
        {
            std::lock_guard<std::mutex> lock(m);
            if (++job.done_chunks == job.chunks) {
                done_cv.notify_all();
                return;
            }
        }
    }
}

void Executor::worker_loop() {
    std::uint64_t seen_epoch = 0;
    for (;;) {
        {
            std::unique_lock<std::mutex> lock(mutex_);
            work_cv_.wait(lock, [&] { return stopping_ || epoch_ != seen_epoch; });
            if (stopping_) return;
            seen_epoch = epoch_;
        }
        run_chunks(job_, mutex_, done_cv_);
    }
}

void Executor::parallel_for(std::int64_t count,
                            const std::function<void(std::int64_t, std::int64_t)>& body) {
    if (count <= 0) return;
    if (workers_ == 1 || count == 1) {
        body(0, count);
        return;
    }
    {
        std::lock_guard<std::mutex> lock(mutex_);
        job_.body = &body;
        job_.count = count;
        job_.chunks = static_cast<int>(std::min<std::int64_t>(workers_, count));
        job_.next_chunk = 0;
        job_.done_chunks = 0;
        ++epoch_;
    }
    work_cv_.notify_all();
    run_chunks(job_, mutex_, done_cv_);
    std::unique_lock<std::mutex> lock(mutex_);
    done_cv_.wait(lock, [&] { return job_.done_chunks == job_.chunks; });
    job_.body = nullptr;
}

}  // namespace p3s
