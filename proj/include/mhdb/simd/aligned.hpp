#pragma once

#include <complex>
#include <cstddef>
#include <new>
#include <vector>

namespace mhdb {

/// Allocator returning storage aligned for 256-bit vector loads and FFTW.
template <class T, std::size_t Alignment = 64>
struct AlignedAllocator {
    using value_type = T;

    template <class U>
    struct rebind {
        using other = AlignedAllocator<U, Alignment>;
    };

    AlignedAllocator() noexcept = default;
    template <class U>
    AlignedAllocator(const AlignedAllocator<U, Alignment>&) noexcept {}

    T* allocate(std::size_t n) {
        return static_cast<T*>(::operator new(n * sizeof(T), std::align_val_t{Alignment}));
    }
    void deallocate(T* p, std::size_t) noexcept {
        ::operator delete(p, std::align_val_t{Alignment});
    }

    template <class U>
    bool operator==(const AlignedAllocator<U, Alignment>&) const noexcept { return true; }
};

template <class T>
using AlignedVector = std::vector<T, AlignedAllocator<T>>;

using Complex = std::complex<double>;

}  // namespace mhdb
