#include "edd/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace edd {

namespace {

int hardware_default() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

std::atomic<int> g_max_threads{0};  // 0 = hardware default

}  // namespace

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() {
  int n = g_max_threads.load();
  if (n <= 0) n = hardware_default();
  return std::max(1, n);
}

int plan_workers(std::size_t n_items, std::size_t min_items_per_worker) {
  if (min_items_per_worker == 0) min_items_per_worker = 1;
  std::size_t by_size = n_items / min_items_per_worker;
  std::size_t cap = static_cast<std::size_t>(max_threads());
  return static_cast<int>(std::max<std::size_t>(1, std::min(by_size, cap)));
}

void run_workers(int n_workers, const std::function<void(int)>& body) {
  if (n_workers <= 1) {
    body(0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(n_workers));
  std::exception_ptr first_error;
  std::atomic_flag error_claimed = ATOMIC_FLAG_INIT;
  for (int w = 0; w < n_workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        if (!error_claimed.test_and_set()) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace edd
