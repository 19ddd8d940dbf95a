#include "rsgs/lie.hpp"

#include <string>

#include "rsgs/errors.hpp"

namespace rsgs {

LieAlgebra::LieAlgebra(Alphabet basis, const std::vector<Entry>& entries)
    : basis_(std::move(basis)) {
    std::size_t n = basis_.size();
    table_.assign(n * n * n, Rational(0));
    std::vector<bool> given(n * n, false);
    for (const Entry& e : entries) {
        if (e.i >= n || e.j >= n) {
            throw InvalidInputError("structure-constant index out of range");
        }
        given[e.i * n + e.j] = true;
        for (const auto& [m, value] : e.components) {
            if (m >= n) {
                throw InvalidInputError("structure-constant index out of range");
            }
            at(e.i, e.j, m) = value;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (given[i * n + j] && !given[j * n + i]) {
                for (std::size_t m = 0; m < n; ++m) {
                    at(j, i, m) = -constant(i, j, m);
                }
            }
        }
    }
}

Rational& LieAlgebra::at(std::size_t i, std::size_t j, std::size_t m) {
    std::size_t n = basis_.size();
    return table_[(i * n + j) * n + m];
}

const Rational& LieAlgebra::constant(std::size_t i, std::size_t j,
                                     std::size_t m) const {
    std::size_t n = basis_.size();
    return table_[(i * n + j) * n + m];
}

Poly LieAlgebra::bracket(std::size_t i, std::size_t j) const {
    Poly p;
    for (std::size_t m = 0; m < dimension(); ++m) {
        p.add_term(GoodWord(basis_.letter(m)), constant(i, j, m));
    }
    return p;
}

LieAlgebra LieAlgebra::scaled(const Rational& c) const {
    LieAlgebra copy = *this;
    for (Rational& v : copy.table_) v *= c;
    return copy;
}

std::vector<LieViolation> validate(const LieAlgebra& L) {
    std::size_t n = L.dimension();
    std::vector<LieViolation> violations;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            std::vector<Rational> defect(n, Rational(0));
            bool nonzero = false;
            for (std::size_t m = 0; m < n; ++m) {
                defect[m] = L.constant(i, j, m) + L.constant(j, i, m);
                if (i == j) defect[m] = L.constant(i, i, m);
                if (defect[m] != 0) nonzero = true;
            }
            if (nonzero) {
                violations.push_back(LieViolation{
                    LieViolation::Kind::antisymmetry, i, j, 0, std::move(defect)});
            }
        }
    }

    // Jacobi: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0,
    // evaluated through the table.
    auto bracket_of_bracket = [&](std::size_t i, std::size_t j, std::size_t k,
                                  std::vector<Rational>& acc) {
        for (std::size_t m = 0; m < n; ++m) {
            const Rational& c = L.constant(i, j, m);
            if (c == 0) continue;
            for (std::size_t p = 0; p < n; ++p) {
                acc[p] += c * L.constant(m, k, p);
            }
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = j; k < n; ++k) {
                std::vector<Rational> defect(n, Rational(0));
                bracket_of_bracket(i, j, k, defect);
                bracket_of_bracket(j, k, i, defect);
                bracket_of_bracket(k, i, j, defect);
                bool nonzero = false;
                for (const Rational& d : defect) {
                    if (d != 0) {
                        nonzero = true;
                        break;
                    }
                }
                if (nonzero) {
                    violations.push_back(LieViolation{LieViolation::Kind::jacobi,
                                                      i, j, k, std::move(defect)});
                }
            }
        }
    }
    return violations;
}

namespace {

void require_valid(const LieAlgebra& L) {
    auto violations = validate(L);
    if (!violations.empty()) {
        throw InvalidLieError("structure constants violate " +
                              std::to_string(violations.size()) +
                              " Lie axiom instance(s)");
    }
}

}  // namespace

Presentation enveloping_presentation(const LieAlgebra& L) {
    require_valid(L);
    std::vector<Poly> relations;
    for (std::size_t i = 0; i < L.dimension(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            GoodWord ei(L.basis().letter(i));
            GoodWord ej(L.basis().letter(j));
            Poly f = multiply(ei, ej) - multiply(ej, ei) - L.bracket(i, j);
            relations.push_back(std::move(f));
        }
    }
    return Presentation(L.basis(), std::move(relations));
}

TheoremReport verify_theorem(const LieAlgebra& L, Execution exec,
                             std::size_t cap) {
    Presentation S = enveloping_presentation(L);
    GsCheck check = is_gs(S, exec, cap);
    return TheoremReport{check.is_basis, std::move(check.reports)};
}

PbwReport pbw_basis(const LieAlgebra& L, std::size_t max_degree,
                    std::size_t cap) {
    Presentation S = enveloping_presentation(L);
    PbwReport report;
    report.basis = irr(S, max_degree, cap);
    report.per_degree.assign(max_degree, 0);
    for (const GoodWord& g : report.basis) {
        ++report.per_degree[g.length() - 1];
    }

    // Degree-one embedding: all letters present, with pairwise distinct
    // normal forms.
    bool ok = max_degree >= 1 && report.per_degree[0] == L.dimension();
    std::vector<Poly> letter_nfs;
    for (std::size_t i = 0; ok && i < L.dimension(); ++i) {
        Poly nf =
            reduce(Poly::monomial(GoodWord(L.basis().letter(i))), S).normal_form;
        for (const Poly& earlier : letter_nfs) {
            if (earlier == nf) {
                ok = false;
                break;
            }
        }
        letter_nfs.push_back(std::move(nf));
    }
    report.embedding_ok = ok;
    return report;
}

}  // namespace rsgs
