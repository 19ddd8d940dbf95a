#include "rsgs/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

#include <gmpxx.h>

#include "rsgs/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rsgs {

std::size_t count_good(std::size_t num_letters, std::size_t n) {
    assert(num_letters >= 1 && n >= 1);
    // T[d] = good words of length d; M[s] = multisets of good words with
    // total length s.  T[d] = k * M[d-1], and M is the Euler transform of T:
    //   s * M[s] = sum_{i=1..s} c[i] * M[s-i],  c[i] = sum_{d | i} d * T[d].
    std::vector<mpz_class> T(n + 1), M(n), c(n);
    mpz_class k(static_cast<unsigned long>(num_letters));
    if (n >= 1) T[1] = k;
    if (n >= 1) M[0] = 1;
    for (std::size_t s = 1; s < n; ++s) {
        // c[s] needs T up to s, which is already known (T[d] for d <= s).
        c[s] = 0;
        for (std::size_t d = 1; d <= s; ++d) {
            if (s % d == 0) c[s] += mpz_class(static_cast<unsigned long>(d)) * T[d];
        }
        mpz_class acc = 0;
        for (std::size_t i = 1; i <= s; ++i) {
            acc += c[i] * M[s - i];
        }
        assert(acc % s == 0);
        M[s] = acc / static_cast<unsigned long>(s);
        T[s + 1] = k * M[s];
    }
    if (!T[n].fits_ulong_p()) {
        throw ResourceBoundError("good-word count does not fit a machine word");
    }
    return static_cast<std::size_t>(T[n].get_ui());
}

namespace {

// Incremental exact row echelon keyed by leading good word.  Pivots are
// monic with pairwise distinct leading words, so membership and per-degree
// pivot counts read off directly.
class Echelon {
public:
    // Reduces p against the pivots; if a nonzero remainder survives it
    // becomes a new pivot and is returned.
    const Poly* insert(Poly p) {
        while (!p.is_zero()) {
            auto it = pivots_.find(p.leading());
            if (it == pivots_.end()) {
                Poly m = monic(p);
                auto [pos, added] = pivots_.emplace(m.leading(), std::move(m));
                assert(added);
                return &pos->second;
            }
            p -= p.leading_coefficient() * it->second;
        }
        return nullptr;
    }

    std::size_t pivot_count_at_degree(std::size_t degree) const {
        std::size_t count = 0;
        for (const auto& [lead, poly] : pivots_) {
            if (lead.length() == degree) ++count;
        }
        return count;
    }

private:
    std::map<GoodWord, Poly, GoodWordDescending> pivots_;
};

}  // namespace

DegreeTable quotient_dims(const Presentation& S, std::size_t max_degree,
                          Execution exec, std::size_t cap) {
    assert(max_degree >= 1);
    std::vector<GoodWord> words =
        max_degree > 1 ? enumerate_good(S.alphabet(), max_degree - 1, cap)
                       : std::vector<GoodWord>{};

    Echelon echelon;
    std::deque<Poly> worklist;
    for (const Poly& s : S.relations()) {
        if (s.degree() > max_degree) continue;
        if (const Poly* pivot = echelon.insert(s)) worklist.push_back(*pivot);
    }

    while (!worklist.empty()) {
        Poly p = std::move(worklist.front());
        worklist.pop_front();
        std::size_t lead_degree = p.degree();

        std::vector<const GoodWord*> usable;
        for (const GoodWord& w : words) {
            if (lead_degree + w.length() <= max_degree) usable.push_back(&w);
        }

        std::vector<Poly> products(2 * usable.size());
        auto compute = [&](std::size_t idx) {
            const GoodWord& w = *usable[idx / 2];
            Poly factor = Poly::monomial(w);
            products[idx] =
                idx % 2 == 0 ? multiply(p, factor) : multiply(factor, p);
        };
        if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
            for (std::size_t idx = 0; idx < products.size(); ++idx) {
                compute(idx);
            }
        } else {
            for (std::size_t idx = 0; idx < products.size(); ++idx) {
                compute(idx);
            }
        }

        for (Poly& q : products) {
            if (const Poly* pivot = echelon.insert(std::move(q))) {
                worklist.push_back(*pivot);
            }
        }
    }

    DegreeTable table;
    table.dims.resize(max_degree);
    for (std::size_t d = 1; d <= max_degree; ++d) {
        std::size_t full = count_good(S.alphabet().size(), d);
        std::size_t cut = echelon.pivot_count_at_degree(d);
        assert(cut <= full);
        table.dims[d - 1] = full - cut;
    }
    return table;
}

std::size_t rank(std::span<const Poly> vectors, std::size_t degree,
                 Execution exec) {
    // Coordinatize over the distinct words that occur (descending).
    std::map<GoodWord, std::size_t, GoodWordDescending> columns;
    for (const Poly& v : vectors) {
        for (const auto& [w, c] : v.terms()) {
            if (w.length() != degree) {
                throw InvalidInputError(
                    "rank() requires homogeneous vectors of the stated degree");
            }
            columns.emplace(w, 0);
        }
    }
    std::size_t ncols = 0;
    for (auto& [w, idx] : columns) idx = ncols++;

    std::vector<std::vector<Rational>> rows;
    rows.reserve(vectors.size());
    for (const Poly& v : vectors) {
        if (v.is_zero()) continue;
        std::vector<Rational> row(ncols, Rational(0));
        for (const auto& [w, c] : v.terms()) row[columns[w]] = c;
        rows.push_back(std::move(row));
    }

    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const std::vector<Rational>& prow = rows[r];
        const Rational& pval = prow[col];
        auto eliminate = [&](std::size_t i) {
            if (rows[i][col] == 0) return;
            Rational factor = rows[i][col] / pval;
            for (std::size_t c2 = col; c2 < ncols; ++c2) {
                rows[i][c2] -= factor * prow[c2];
            }
        };
        if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                eliminate(i);
            }
        } else {
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                eliminate(i);
            }
        }
        ++r;
    }
    return r;
}

}  // namespace rsgs
