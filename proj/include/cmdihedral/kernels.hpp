#pragma once

// Data-parallel kernels.  Each has a serial twin with identical output that
// the tests and benchmarks compare against.

#include "cmdihedral/charmod.hpp"

#include <cstdint>
#include <exception>
#include <vector>

namespace cmdihedral {

/// Worker count from CM_DIHEDRAL_THREADS (positive integer), default 1.
int configured_threads();

namespace detail {

/// Runs body(i) for i in [begin, end) on up to `threads` OpenMP threads.  The
/// exception thrown at the smallest index, if any, is rethrown afterwards.
template <class Body>
void parallel_for(std::int64_t begin, std::int64_t end, int threads, Body const & body)
{
    std::exception_ptr error;
    std::int64_t error_index = end;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads > 0 ? threads : 1)
    for (std::int64_t i = begin; i < end; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical(cmdihedral_parallel_for)
            {
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
    }
    if (error)
        std::rethrow_exception(error);
}

}  // namespace detail

/// Truncated product of two power series, coefficients 0..prec.
std::vector<Integer> series_mul(std::vector<Integer> const & a, std::vector<Integer> const & b, std::size_t prec,
                                int threads);
std::vector<Integer> series_mul_serial(std::vector<Integer> const & a, std::vector<Integer> const & b,
                                       std::size_t prec);

/// c_n = sum of delta_H over ideals of norm n coprime to the conductor, 0 <= n <= prec (c_0 = 0).
std::vector<ValueElem> theta_coefficients(HeckeChar const & chi, std::size_t prec, int threads);
std::vector<ValueElem> theta_coefficients_serial(HeckeChar const & chi, std::size_t prec);

std::vector<FiniteField::elem> reduce_coefficients(std::vector<ValueElem> const & c, ReductionMap const & m,
                                                   int threads);
std::vector<FiniteField::elem> reduce_coefficients_serial(std::vector<ValueElem> const & c, ReductionMap const & m);

}  // namespace cmdihedral
