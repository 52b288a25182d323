#ifndef PSEUDO3D_EXECUTOR_HPP
#define PSEUDO3D_EXECUTOR_HPP

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace p3s {

// Fixed-size worker pool running order-independent maps over disjoint index
// ranges. Every kernel dispatched through parallel_for writes only its own
// range and reads only immutable inputs, so output bytes do not depend on
// the worker count or on scheduling.
class Executor {
public:
    // threads <= 0 selects std::thread::hardware_concurrency().
    explicit Executor(int threads = 0);
    ~Executor();

    Executor(const Executor&) = delete;
    Executor& operator=(const Executor&) = delete;

    int workers() const { return workers_; }

    // Invokes body(begin, end) over contiguous subranges that exactly cover
    // [0, count). The calling thread participates. Blocks until all
    // subranges complete. Not reentrant.
    void parallel_for(std::int64_t count, const std::function<void(std::int64_t, std::int64_t)>& body);

private:
    struct Job {
        const std::function<void(std::int64_t, std::int64_t)>* body = nullptr;
        std::int64_t count = 0;
        int chunks = 0;
        int next_chunk = 0;
        int done_chunks = 0;
    };

    void worker_loop();
    static void run_chunks(Job& job, std::mutex& m, std::condition_variable& done_cv);

    int workers_ = 1;
    std::vector<std::thread> threads_;
    std::mutex mutex_;
    std::condition_variable work_cv_;
    std::condition_variable done_cv_;
    Job job_;
    std::uint64_t epoch_ = 0;
    bool stopping_ = false;
};

}  // namespace p3s

#endif
