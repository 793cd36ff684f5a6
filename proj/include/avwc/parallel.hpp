#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace avwc {

/// Runs body(i) for every i in [0, count), optionally across OpenMP threads.
/// Each index must write only to its own output slot and draw randomness only
/// from its own substream; under that contract the parallel path produces
/// bit-identical results to the serial one, which the tests assert.
template <typename Body>
void for_each_index(std::size_t count, bool parallel, Body&& body) {
#ifdef _OPENMP
    if (parallel && count > 1) {
        std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(avwc_for_each_index_error)
                {
                    if (!first_error) first_error = std::current_exception();
                }
            }
        }
        if (first_error) std::rethrow_exception(first_error);
        return;
    }
#else
    (void)parallel;
#endif
    for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace avwc
