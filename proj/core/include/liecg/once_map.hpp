#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "liecg/errors.hpp"

namespace liecg {

// Thread-safe memo table; each value is built once, outside the table lock, so builders
// may recurse into other keys.
template <class K, class V>
class OnceMap {
 public:
  template <class Make>
  const V& get(const K& k, Make&& make) {
    Cell* c;
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto& p = cells_[k];
      if (!p) p = std::make_unique<Cell>();
      c = p.get();
    }
    std::call_once(c->once, [&] { c->value = std::make_unique<V>(make()); });
    return *c->value;
  }

 private:
  struct Cell {
    std::once_flag once;
    std::unique_ptr<V> value;
  };
  std::mutex mu_;
  std::map<K, std::unique_ptr<Cell>> cells_;
};

}  // namespace liecg
