#include <atomic>
#include <cstdlib>

#include "radda/kernels.hpp"

namespace radda::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(RADDA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* initial_table() {
  const auto tables = available_kernels();
  if (const char* env = std::getenv("RADDA_KERNELS"))
    if (const KernelTable* t = find_kernels(env)) return t;
  return tables.back();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> tables{&scalar_kernels()};
#if defined(RADDA_HAVE_AVX2)
  if (cpu_has_avx2()) tables.push_back(&detail::avx2_kernels());
#endif
  return tables;
}

const KernelTable* find_kernels(std::string_view name) {
  for (const KernelTable* t : available_kernels())
    if (name == t->name) return t;
  return nullptr;
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_acquire); }

bool select(std::string_view name) {
  const KernelTable* t = find_kernels(name);
  if (t == nullptr) return false;
  current().store(t, std::memory_order_release);
  return true;
}

}  // namespace radda::kernels
