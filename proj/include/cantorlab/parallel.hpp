#pragma once

#include <exception>

namespace cantorlab {

/// body(i) for i in [0, count) across the OpenMP team. The first exception
/// thrown by any iteration is rethrown on the calling thread.
template <class F>
void parallel_for(long count, F&& body) {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical(cantorlab_parallel_error)
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace cantorlab
