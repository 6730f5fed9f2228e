#include <cstdlib>
#include <string_view>

#include "mhdb/simd/kernels.hpp"

namespace mhdb::simd {

#if defined(MHDB_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif

const KernelTable* kernels_for(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return &scalar_kernels();
    case Isa::avx2:
#if defined(MHDB_HAVE_AVX2)
        if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &avx2_kernels();
#endif
        return nullptr;
    }
    return nullptr;
}

const KernelTable& active() {
    static const KernelTable& chosen = [&]() -> const KernelTable& {
        const char* forced = std::getenv("MHDB_SIMD");
        if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_kernels();
        if (const KernelTable* t = kernels_for(Isa::avx2)) return *t;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace mhdb::simd
