#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace hartree::detail {
namespace {

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int dim, std::size_t n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_tuple(dim, n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    std::size_t total = 1;
    std::vector<int> dims(static_cast<std::size_t>(dim), static_cast<int>(n));
    for (int i = 0; i < dim; ++i) total *= n;
    // FFTW_ESTIMATE never touches the buffer and yields the same plan on every
    // run, so results are bit-reproducible.
    fftw_complex* scratch = fftw_alloc_complex(total);
    fftw_plan plan = fftw_plan_dft(dim, dims.data(), scratch, scratch, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, std::size_t, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

void fft_inplace(const Grid& grid, std::span<complex> data, FftDirection dir) {
  fftw_plan plan = plan_cache().get(grid.dim(), grid.n(), static_cast<int>(dir));
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, ptr, ptr);
}

void apply_checkerboard(const Grid& grid, std::span<complex> data) noexcept {
  const std::size_t n = grid.n();
  const std::size_t total = grid.size();
  // Parity of the flat index along the last axis alternates every sample;
  // the parity of higher axes flips once per row.
  for (std::size_t row = 0; row < total / n; ++row) {
    std::size_t parity = 0;
    for (std::size_t r = row; r > 0; r /= n) parity += r % n;
    std::size_t start = (parity & 1u) ? 0 : 1;
    complex* base = data.data() + row * n;
    for (std::size_t j = start; j < n; j += 2) base[j] = -base[j];
  }
}

}  // namespace hartree::detail
