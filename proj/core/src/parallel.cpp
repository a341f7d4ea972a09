#include "liecg/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "liecg/sparse.hpp"

namespace liecg {

namespace {
std::atomic<int> g_threads{1};
std::atomic<int> g_pivot{0};
}  // namespace

PivotRule pivot_rule() { return g_pivot.load() == 0 ? PivotRule::SmallestBitSize : PivotRule::FirstIndex; }
void set_pivot_rule(PivotRule r) { g_pivot.store(r == PivotRule::SmallestBitSize ? 0 : 1); }

void set_threads(int n) { g_threads.store(std::max(1, n)); }
int threads() { return g_threads.load(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads()), n);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t bad = n;
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (i < bad) { bad = i; err = std::current_exception(); }
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace liecg
