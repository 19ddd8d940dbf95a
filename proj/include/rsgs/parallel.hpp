#ifndef RSGS_PARALLEL_HPP
#define RSGS_PARALLEL_HPP

namespace rsgs {

// Batch kernels (composition checking, closure products, elimination) come
// in two lanes: a serial reference and an OpenMP one.  Results are required
// to match exactly; arithmetic is exact, so there is no reordering drift.
enum class Execution {
    serial,
    parallel,
};

}  // namespace rsgs

#endif  // RSGS_PARALLEL_HPP
