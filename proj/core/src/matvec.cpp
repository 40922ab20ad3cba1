// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <detci/matvec.hpp>

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>

#include <detci/slater_condon.hpp>

namespace detci {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Visits the union of two disjoint ascending runs in ascending order.
template <class F>
inline void for_each_union(std::span<const std::uint32_t> s, std::span<const std::uint32_t> d,
                           F&& f) {
    std::size_t i = 0, j = 0;
    while (i < s.size() && j < d.size()) f(s[i] < d[j] ? s[i++] : d[j++]);
    while (i < s.size()) f(s[i++]);
    while (j < d.size()) f(d[j++]);
}

inline const std::uint64_t* det_ptr(const Basis& basis, std::size_t ia, std::size_t ib,
                                    std::uint64_t* buf) {
    if (basis.has_cache()) return basis.cached_determinant(ia * basis.n_beta() + ib);
    interleave_words(basis.alpha_strings[ia].words.data(), basis.beta_strings[ib].words.data(),
                     basis.channel_packing, buf, basis.det_packing);
    return buf;
}

// A contiguous slice of one task's long dimension (ia for alpha and mixed
// tasks, ib for beta tasks).  Slices never overlap in output elements, so
// scheduling is free to reorder them.
struct WorkItem {
    const Task* task;
    std::size_t lo, hi;
};

std::vector<const Task*> ordered_by_group(const DecompositionPlan& plan, TaskKind kind) {
    std::vector<const Task*> of_kind;
    for (const Task& task : plan.tasks)
        if (task.kind == kind) of_kind.push_back(&task);
    std::vector<const Task*> ordered;
    ordered.reserve(of_kind.size());
    for (int g = 0; g < plan.t; ++g)
        for (std::size_t k = static_cast<std::size_t>(g); k < of_kind.size();
             k += static_cast<std::size_t>(plan.t))
            ordered.push_back(of_kind[k]);
    return ordered;
}

std::vector<WorkItem> make_items(const DecompositionPlan& plan, TaskKind kind,
                                 std::size_t n_alpha, std::size_t n_beta, int workers) {
    std::vector<WorkItem> items;
    for (const Task* task : ordered_by_group(plan, kind)) {
        std::size_t begin = 0, end = 0;
        switch (kind) {
            case TaskKind::AlphaExcite: begin = 0; end = n_alpha; break;
            case TaskKind::BetaExcite: begin = 0; end = n_beta; break;
            case TaskKind::Mixed:
                begin = plan.alpha_block_start[static_cast<std::size_t>(task->alpha_block)];
                end = plan.alpha_block_start[static_cast<std::size_t>(task->alpha_block) + 1];
                break;
        }
        const std::size_t extent = end - begin;
        const std::size_t chunk =
            std::max<std::size_t>(1, extent / (4 * static_cast<std::size_t>(workers)));
        for (std::size_t lo = begin; lo < end; lo += chunk)
            items.push_back({task, lo, std::min(lo + chunk, end)});
    }
    return items;
}

template <class Kernel>
void run_items(const std::vector<WorkItem>& items, int workers, Kernel&& kernel) {
    #pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(items.size()); ++k)
        kernel(items[static_cast<std::size_t>(k)]);
}

} // namespace

DecompositionPlan plan_decomposition(int a, int b, int t, int r, const Basis& basis) {
    if (r != 1)
        throw UnsupportedError("plan_decomposition: row-communicator distribution (r = " +
                               std::to_string(r) + ") is not supported, use r = 1");
    const std::size_t na = basis.n_alpha();
    const std::size_t nb = basis.n_beta();
    if (a < 1 || static_cast<std::size_t>(a) > na)
        throw InputError("plan_decomposition: a must be in [1, n_alpha]");
    if (b < 1 || static_cast<std::size_t>(b) > nb)
        throw InputError("plan_decomposition: b must be in [1, n_beta]");
    if (t < 1) throw InputError("plan_decomposition: t must be positive");

    DecompositionPlan plan;
    plan.a = a;
    plan.b = b;
    plan.t = t;
    plan.r = r;
    plan.alpha_block_start.resize(static_cast<std::size_t>(a) + 1);
    for (int i = 0; i <= a; ++i)
        plan.alpha_block_start[static_cast<std::size_t>(i)] =
            na * static_cast<std::size_t>(i) / static_cast<std::size_t>(a);
    plan.beta_block_start.resize(static_cast<std::size_t>(b) + 1);
    for (int i = 0; i <= b; ++i)
        plan.beta_block_start[static_cast<std::size_t>(i)] =
            nb * static_cast<std::size_t>(i) / static_cast<std::size_t>(b);

    plan.tasks.reserve(static_cast<std::size_t>(a) * b + a + b);
    for (int jb = 0; jb < b; ++jb) plan.tasks.push_back({TaskKind::AlphaExcite, -1, jb});
    for (int ja = 0; ja < a; ++ja) plan.tasks.push_back({TaskKind::BetaExcite, ja, -1});
    for (int ja = 0; ja < a; ++ja)
        for (int jb = 0; jb < b; ++jb) plan.tasks.push_back({TaskKind::Mixed, ja, jb});
    return plan;
}

void matvec(const Basis& basis, const DecompositionPlan& plan, std::span<const double> x,
            std::span<double> y, int workers, MatvecTimings* timings) {
    const std::size_t dim = basis.dimension();
    if (x.size() != dim || y.size() != dim)
        throw InputError("matvec: vector length " + std::to_string(x.size()) +
                         " does not match basis dimension " + std::to_string(dim));

    const int nthreads = resolve_workers(workers);
    const std::size_t na = basis.n_alpha();
    const std::size_t nb = basis.n_beta();
    const std::size_t det_words = static_cast<std::size_t>(basis.det_packing.nwords);
    const IntegralTable& table = basis.integrals;
    const DirectExchange& jk = basis.jk;
    const PackingConfig& cfg = basis.det_packing;

    // Per-loop-type partial outputs; every element of each partial is written
    // by exactly one work item, and the final combine runs in a fixed order.
    std::vector<double> part_alpha(dim), part_beta(dim), part_mixed(dim);

    auto t0 = std::chrono::steady_clock::now();
    run_items(make_items(plan, TaskKind::AlphaExcite, na, nb, nthreads), nthreads,
              [&](const WorkItem& item) {
                  const std::size_t bs =
                      plan.beta_block_start[static_cast<std::size_t>(item.task->beta_block)];
                  const std::size_t be =
                      plan.beta_block_start[static_cast<std::size_t>(item.task->beta_block) + 1];
                  std::vector<std::uint64_t> bra_buf(det_words), ket_buf(det_words);
                  for (std::size_t ia = item.lo; ia < item.hi; ++ia) {
                      const auto singles = basis.singles_a.neighbors(ia);
                      const auto doubles = basis.doubles_a.neighbors(ia);
                      for (std::size_t ib = bs; ib < be; ++ib) {
                          const std::uint64_t* bra = det_ptr(basis, ia, ib, bra_buf.data());
                          double acc = 0.0;
                          for_each_union(singles, doubles, [&](std::uint32_t ja) {
                              const std::uint64_t* ket = det_ptr(basis, ja, ib, ket_buf.data());
                              acc += hij_words(bra, ket, cfg, table, jk) * x[ja * nb + ib];
                          });
                          part_alpha[ia * nb + ib] = acc;
                      }
                  }
              });
    MatvecTimings local;
    local.alpha_seconds = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    run_items(make_items(plan, TaskKind::BetaExcite, na, nb, nthreads), nthreads,
              [&](const WorkItem& item) {
                  const std::size_t as =
                      plan.alpha_block_start[static_cast<std::size_t>(item.task->alpha_block)];
                  const std::size_t ae =
                      plan.alpha_block_start[static_cast<std::size_t>(item.task->alpha_block) + 1];
                  std::vector<std::uint64_t> bra_buf(det_words), ket_buf(det_words);
                  for (std::size_t ib = item.lo; ib < item.hi; ++ib) {
                      const auto singles = basis.singles_b.neighbors(ib);
                      const auto doubles = basis.doubles_b.neighbors(ib);
                      for (std::size_t ia = as; ia < ae; ++ia) {
                          const std::uint64_t* bra = det_ptr(basis, ia, ib, bra_buf.data());
                          double acc = 0.0;
                          for_each_union(singles, doubles, [&](std::uint32_t jb) {
                              const std::uint64_t* ket = det_ptr(basis, ia, jb, ket_buf.data());
                              acc += hij_words(bra, ket, cfg, table, jk) * x[ia * nb + jb];
                          });
                          part_beta[ia * nb + ib] = acc;
                      }
                  }
              });
    local.beta_seconds = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    run_items(make_items(plan, TaskKind::Mixed, na, nb, nthreads), nthreads,
              [&](const WorkItem& item) {
                  const std::size_t bs =
                      plan.beta_block_start[static_cast<std::size_t>(item.task->beta_block)];
                  const std::size_t be =
                      plan.beta_block_start[static_cast<std::size_t>(item.task->beta_block) + 1];
                  std::vector<std::uint64_t> bra_buf(det_words), ket_buf(det_words);
                  for (std::size_t ia = item.lo; ia < item.hi; ++ia) {
                      const auto alpha_singles = basis.singles_a.neighbors(ia);
                      for (std::size_t ib = bs; ib < be; ++ib) {
                          const std::uint64_t* bra = det_ptr(basis, ia, ib, bra_buf.data());
                          const auto beta_singles = basis.singles_b.neighbors(ib);
                          double acc = 0.0;
                          for (const std::uint32_t ja : alpha_singles) {
                              const double* xrow = x.data() + ja * nb;
                              for (const std::uint32_t jb : beta_singles) {
                                  const std::uint64_t* ket =
                                      det_ptr(basis, ja, jb, ket_buf.data());
                                  acc += hij_words(bra, ket, cfg, table, jk) * xrow[jb];
                              }
                          }
                          part_mixed[ia * nb + ib] = acc;
                      }
                  }
              });
    local.mixed_seconds = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const std::vector<double>& diag = basis.diag;
    #pragma omp parallel for schedule(static) num_threads(nthreads)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(dim); ++i) {
        const std::size_t I = static_cast<std::size_t>(i);
        y[I] = diag[I] * x[I] + part_alpha[I] + part_beta[I] + part_mixed[I];
    }
    local.combine_seconds = seconds_since(t0);

    if (timings) *timings = local;
}

std::vector<double> matvec(const Basis& basis, const DecompositionPlan& plan,
                           std::span<const double> x, int workers) {
    std::vector<double> y(basis.dimension());
    matvec(basis, plan, x, y, workers);
    return y;
}

StoredMatrix build_stored_matrix(const Basis& basis, std::uint64_t memory_budget_bytes,
                                 int workers) {
    const std::size_t dim = basis.dimension();
    const std::size_t na = basis.n_alpha();
    const std::size_t nb = basis.n_beta();
    if (dim > std::numeric_limits<std::uint32_t>::max())
        throw CapacityError("stored matrix: dimension exceeds 32-bit column indexing");

    StoredMatrix m;
    m.dimension = dim;
    m.row_offset.assign(dim + 1, 0);
    for (std::size_t ia = 0; ia < na; ++ia) {
        const std::size_t alpha_terms = basis.singles_a.len[ia] + basis.doubles_a.len[ia];
        const std::size_t alpha_singles = basis.singles_a.len[ia];
        for (std::size_t ib = 0; ib < nb; ++ib) {
            const std::size_t beta_terms = basis.singles_b.len[ib] + basis.doubles_b.len[ib];
            m.row_offset[ia * nb + ib + 1] =
                1 + alpha_terms + beta_terms + alpha_singles * basis.singles_b.len[ib];
        }
    }
    for (std::size_t i = 0; i < dim; ++i) m.row_offset[i + 1] += m.row_offset[i];

    const std::size_t nnz = m.row_offset[dim];
    const std::uint64_t required =
        static_cast<std::uint64_t>(nnz) * (sizeof(double) + sizeof(std::uint32_t)) +
        static_cast<std::uint64_t>(dim + 1) * sizeof(std::size_t);
    if (required > memory_budget_bytes)
        throw CapacityError("stored matrix requires " + std::to_string(required) +
                            " bytes, budget is " + std::to_string(memory_budget_bytes) +
                            " bytes");

    m.col.resize(nnz);
    m.value.resize(nnz);

    const int nthreads = resolve_workers(workers);
    const std::size_t det_words = static_cast<std::size_t>(basis.det_packing.nwords);
    const PackingConfig& cfg = basis.det_packing;
    const IntegralTable& table = basis.integrals;
    const DirectExchange& jk = basis.jk;

    #pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads)
    for (std::ptrdiff_t ia_s = 0; ia_s < static_cast<std::ptrdiff_t>(na); ++ia_s) {
        const std::size_t ia = static_cast<std::size_t>(ia_s);
        std::vector<std::uint64_t> bra_buf(det_words), ket_buf(det_words);
        const auto alpha_singles = basis.singles_a.neighbors(ia);
        const auto alpha_doubles = basis.doubles_a.neighbors(ia);
        for (std::size_t ib = 0; ib < nb; ++ib) {
            const std::size_t I = ia * nb + ib;
            const std::uint64_t* bra = det_ptr(basis, ia, ib, bra_buf.data());
            std::size_t at = m.row_offset[I];

            m.col[at] = static_cast<std::uint32_t>(I);
            m.value[at] = basis.diag[I];
            ++at;
            for_each_union(alpha_singles, alpha_doubles, [&](std::uint32_t ja) {
                const std::uint64_t* ket = det_ptr(basis, ja, ib, ket_buf.data());
                m.col[at] = static_cast<std::uint32_t>(ja * nb + ib);
                m.value[at] = hij_words(bra, ket, cfg, table, jk);
                ++at;
            });
            const auto beta_singles = basis.singles_b.neighbors(ib);
            const auto beta_doubles = basis.doubles_b.neighbors(ib);
            for_each_union(beta_singles, beta_doubles, [&](std::uint32_t jb) {
                const std::uint64_t* ket = det_ptr(basis, ia, jb, ket_buf.data());
                m.col[at] = static_cast<std::uint32_t>(ia * nb + jb);
                m.value[at] = hij_words(bra, ket, cfg, table, jk);
                ++at;
            });
            for (const std::uint32_t ja : alpha_singles) {
                for (const std::uint32_t jb : beta_singles) {
                    const std::uint64_t* ket = det_ptr(basis, ja, jb, ket_buf.data());
                    m.col[at] = static_cast<std::uint32_t>(ja * nb + jb);
                    m.value[at] = hij_words(bra, ket, cfg, table, jk);
                    ++at;
                }
            }
        }
    }
    return m;
}

void stored_matvec(const StoredMatrix& m, std::span<const double> x, std::span<double> y,
                   int workers) {
    if (x.size() != m.dimension || y.size() != m.dimension)
        throw InputError("stored_matvec: vector length does not match matrix dimension");
    const int nthreads = resolve_workers(workers);
    #pragma omp parallel for schedule(static) num_threads(nthreads)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m.dimension); ++i) {
        const std::size_t I = static_cast<std::size_t>(i);
        double acc = 0.0;
        for (std::size_t at = m.row_offset[I]; at < m.row_offset[I + 1]; ++at)
            acc += m.value[at] * x[m.col[at]];
        y[I] = acc;
    }
}

} // namespace detci
