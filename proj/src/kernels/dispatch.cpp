#include "uwu/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace uwu::kernels {

const KernelTable* avx2_table_impl();  // defined in avx2.cpp

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* detect() {
    const char* env = std::getenv("UWU_KERNELS");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_table();
        if (std::strcmp(env, "avx2") == 0 && avx2_table() != nullptr) return avx2_table();
        return &scalar_table();
    }
    if (const KernelTable* t = avx2_table()) return t;
    return &scalar_table();
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

const KernelTable* avx2_table() {
    return cpu_has_avx2_fma() ? avx2_table_impl() : nullptr;
}

const KernelTable& active() {
    const KernelTable* t = g_active.load(std::memory_order_acquire);
    if (t == nullptr) {
        t = detect();
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

void force(const KernelTable& table) { g_active.store(&table, std::memory_order_release); }

void reset_auto() { g_active.store(nullptr, std::memory_order_release); }

}  // namespace uwu::kernels
