#include "rsgs/groebner.hpp"

#include <algorithm>
#include <cassert>

#include "rsgs/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rsgs {

namespace {

void collect_occurrences(const Word& host, const Word& pattern, Path& path,
                         const GoodWord& host_good,
                         std::vector<Occurrence>& out) {
    if (host == pattern) {
        out.push_back(Occurrence{host_good, path});
    }
    if (host.is_letter()) return;
    path.push_back(Direction::left);
    collect_occurrences(host.left(), pattern, path, host_good, out);
    path.back() = Direction::right;
    collect_occurrences(host.right(), pattern, path, host_good, out);
    path.pop_back();
}

const Word& subtree_at(const Word& root, const Path& path) {
    const Word* cur = &root;
    for (Direction d : path) {
        if (cur->is_letter()) {
            throw PatternMismatchError("occurrence path leaves the tree");
        }
        cur = d == Direction::left ? &cur->left() : &cur->right();
    }
    return *cur;
}

Word replace_at(const Word& root, const Path& path, std::size_t depth,
                const Word& replacement) {
    if (depth == path.size()) return replacement;
    if (path[depth] == Direction::left) {
        return Word::node(replace_at(root.left(), path, depth + 1, replacement),
                          root.right());
    }
    return Word::node(root.left(),
                      replace_at(root.right(), path, depth + 1, replacement));
}

bool contains_subtree(const Word& host, const Word& pattern) {
    if (host.length() < pattern.length()) return false;
    if (host == pattern) return true;
    if (host.is_letter()) return false;
    return contains_subtree(host.left(), pattern) ||
           contains_subtree(host.right(), pattern);
}

// First (relation, occurrence) match in the host, scanning positions in
// preorder and relations in index order at each position.
std::optional<std::pair<std::size_t, Occurrence>> find_first_reduction(
    const GoodWord& host, const std::vector<Word>& leading_trees) {
    struct Scanner {
        const std::vector<Word>& patterns;
        const GoodWord& host_good;
        Path path;
        std::optional<std::pair<std::size_t, Occurrence>> found;

        void scan(const Word& node) {
            if (found) return;
            for (std::size_t r = 0; r < patterns.size(); ++r) {
                if (node == patterns[r]) {
                    found = {r, Occurrence{host_good, path}};
                    return;
                }
            }
            if (node.is_letter()) return;
            path.push_back(Direction::left);
            scan(node.left());
            if (found) {
                path.pop_back();
                return;
            }
            path.back() = Direction::right;
            scan(node.right());
            path.pop_back();
        }
    };
    Scanner scanner{leading_trees, host, {}, {}};
    scanner.scan(tree_form(host));
    return scanner.found;
}

std::vector<Word> leading_trees_of(const Presentation& S) {
    std::vector<Word> trees;
    trees.reserve(S.size());
    for (const Poly& r : S.relations()) trees.push_back(tree_form(leading(r)));
    return trees;
}

}  // namespace

std::vector<Occurrence> occurrences(const GoodWord& host,
                                    const GoodWord& pattern) {
    std::vector<Occurrence> out;
    Path path;
    collect_occurrences(tree_form(host), tree_form(pattern), path, host, out);
    return out;
}

Poly substitute(const Occurrence& occ, const Poly& g) {
    Word host_tree = tree_form(occ.host);
    const Word& site = subtree_at(host_tree, occ.path);
    if (!(site == tree_form(leading(g)))) {
        throw PatternMismatchError(
            "subtree at occurrence does not match the relation's leading word");
    }
    assert(lc(g) == 1);
    Poly result;
    for (const auto& [w, c] : g.terms()) {
        Word replaced = replace_at(host_tree, occ.path, 0, tree_form(w));
        result += c * normalize(replaced);
    }
    return result;
}

ReduceResult reduce(const Poly& f, const Presentation& S) {
    std::vector<Word> leads = leading_trees_of(S);
    Poly work = f;
    Poly normal_form;
    std::vector<ReductionStep> steps;
    while (!work.is_zero()) {
        auto hit = find_first_reduction(work.leading(), leads);
        if (!hit) {
            normal_form.add_term(work.leading(), work.leading_coefficient());
            Poly head = Poly::monomial(work.leading(), work.leading_coefficient());
            work -= head;
            continue;
        }
        auto& [rel, occ] = *hit;
        Rational c = work.leading_coefficient();
        work -= c * substitute(occ, S.relations()[rel]);
        assert(work.is_zero() || compare(work.leading(), occ.host) < 0);
        steps.push_back(ReductionStep{rel, occ, c});
    }
    return ReduceResult{std::move(normal_form), std::move(steps)};
}

bool verify_reduction_certificate(const Poly& f, const ReduceResult& result,
                                  const Presentation& S) {
    Poly replayed;
    for (std::size_t i = 0; i < result.steps.size(); ++i) {
        const ReductionStep& step = result.steps[i];
        if (step.relation >= S.size()) return false;
        replayed +=
            step.coefficient * substitute(step.occurrence, S.relations()[step.relation]);
        if (i > 0 &&
            compare(step.occurrence.host, result.steps[i - 1].occurrence.host) >=
                0) {
            return false;
        }
    }
    return f - result.normal_form == replayed;
}

std::vector<CompositionReport> inclusion_compositions(const Presentation& S,
                                                      std::size_t f_index,
                                                      std::size_t g_index) {
    const Poly& f = S.relations()[f_index];
    const Poly& g = S.relations()[g_index];
    std::vector<CompositionReport> reports;
    for (const Occurrence& occ : occurrences(leading(f), leading(g))) {
        if (f_index == g_index && occ.path.empty()) continue;
        CompositionReport report;
        report.kind = CompositionKind::inclusion;
        report.f_index = f_index;
        report.g_index = g_index;
        report.occurrence = occ;
        report.raw = f - substitute(occ, g);
        ReduceResult rr = reduce(report.raw, S);
        report.normal_form = std::move(rr.normal_form);
        report.steps = std::move(rr.steps);
        report.trivial = report.normal_form.is_zero();
        reports.push_back(std::move(report));
    }
    return reports;
}

std::vector<CompositionReport> rightmul_compositions(const Presentation& S,
                                                     std::size_t f_index,
                                                     std::size_t cap) {
    const Poly& f = S.relations()[f_index];
    const GoodWord& lead = leading(f);
    std::vector<CompositionReport> reports;
    if (lead.is_letter()) return reports;
    for (const GoodWord& w :
         good_below(lead.last_multiplier(), S.alphabet(), cap)) {
        CompositionReport report;
        report.kind = CompositionKind::right_multiplication;
        report.f_index = f_index;
        report.g_index = f_index;
        report.multiplier = w;
        report.raw = multiply(f, Poly::monomial(w));
        ReduceResult rr = reduce(report.raw, S);
        report.normal_form = std::move(rr.normal_form);
        report.steps = std::move(rr.steps);
        report.trivial = report.normal_form.is_zero();
        reports.push_back(std::move(report));
    }
    return reports;
}

namespace {

struct CompositionTask {
    CompositionKind kind;
    std::size_t f_index;
    std::size_t g_index;
    std::optional<Occurrence> occurrence;
    std::optional<GoodWord> multiplier;
};

CompositionReport run_task(const CompositionTask& task, const Presentation& S) {
    CompositionReport report;
    report.kind = task.kind;
    report.f_index = task.f_index;
    report.g_index = task.g_index;
    const Poly& f = S.relations()[task.f_index];
    if (task.kind == CompositionKind::inclusion) {
        report.occurrence = task.occurrence;
        report.raw = f - substitute(*task.occurrence, S.relations()[task.g_index]);
    } else {
        report.multiplier = task.multiplier;
        report.raw = multiply(f, Poly::monomial(*task.multiplier));
    }
    ReduceResult rr = reduce(report.raw, S);
    report.normal_form = std::move(rr.normal_form);
    report.steps = std::move(rr.steps);
    report.trivial = report.normal_form.is_zero();
    return report;
}

}  // namespace

std::vector<CompositionReport> all_compositions(const Presentation& S,
                                                Execution exec,
                                                std::size_t cap) {
    std::vector<CompositionTask> tasks;
    for (std::size_t i = 0; i < S.size(); ++i) {
        for (std::size_t j = 0; j < S.size(); ++j) {
            for (const Occurrence& occ :
                 occurrences(leading(S.relations()[i]), leading(S.relations()[j]))) {
                if (i == j && occ.path.empty()) continue;
                tasks.push_back(CompositionTask{CompositionKind::inclusion, i, j,
                                                occ, std::nullopt});
            }
        }
    }
    for (std::size_t i = 0; i < S.size(); ++i) {
        const GoodWord& lead = leading(S.relations()[i]);
        if (lead.is_letter()) continue;
        for (const GoodWord& w :
             good_below(lead.last_multiplier(), S.alphabet(), cap)) {
            tasks.push_back(CompositionTask{CompositionKind::right_multiplication,
                                            i, i, std::nullopt, w});
        }
    }

    std::vector<CompositionReport> reports(tasks.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t k = 0; k < tasks.size(); ++k) {
            reports[k] = run_task(tasks[k], S);
        }
    } else {
        for (std::size_t k = 0; k < tasks.size(); ++k) {
            reports[k] = run_task(tasks[k], S);
        }
    }
    return reports;
}

GsCheck is_gs(const Presentation& S, Execution exec, std::size_t cap) {
    GsCheck check;
    check.reports = all_compositions(S, exec, cap);
    check.is_basis = std::all_of(check.reports.begin(), check.reports.end(),
                                 [](const CompositionReport& r) { return r.trivial; });
    return check;
}

Presentation interreduce(const Presentation& S) {
    std::vector<Poly> rels = S.relations();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < rels.size(); ++i) {
            std::vector<Poly> others;
            others.reserve(rels.size() - 1);
            for (std::size_t j = 0; j < rels.size(); ++j) {
                if (j != i) others.push_back(rels[j]);
            }
            Poly nf = reduce(rels[i], Presentation(S.alphabet(), others)).normal_form;
            if (!(nf == rels[i])) {
                changed = true;
                if (nf.is_zero()) {
                    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(i));
                    --i;
                } else {
                    rels[i] = monic(nf);
                }
            }
        }
    }
    std::sort(rels.begin(), rels.end(), [](const Poly& a, const Poly& b) {
        return compare(leading(a), leading(b)) < 0;
    });
    return Presentation(S.alphabet(), std::move(rels));
}

CompletionResult complete(const Presentation& S, std::size_t max_degree,
                          Execution exec, std::size_t cap) {
    Presentation current = S.size() ? interreduce(S) : S;
    for (;;) {
        std::vector<CompositionReport> reports =
            all_compositions(current, exec, cap);
        const CompositionReport* best = nullptr;
        bool any_nontrivial = false;
        for (const CompositionReport& r : reports) {
            if (r.trivial) continue;
            any_nontrivial = true;
            if (r.normal_form.degree() > max_degree) continue;
            if (!best ||
                compare(leading(r.normal_form), leading(best->normal_form)) < 0) {
                best = &r;
            }
        }
        if (!any_nontrivial) {
            current.mark_gs_verified();
            return CompletionResult{std::move(current),
                                    CompletionStatus::complete};
        }
        if (!best) {
            return CompletionResult{std::move(current),
                                    CompletionStatus::bound_reached};
        }
        std::vector<Poly> rels = current.relations();
        rels.push_back(monic(best->normal_form));
        current = interreduce(Presentation(current.alphabet(), std::move(rels)));
    }
}

std::vector<GoodWord> irr(const Presentation& S, std::size_t max_degree,
                          std::size_t cap) {
    std::vector<Word> leads = leading_trees_of(S);
    std::vector<GoodWord> out;
    for (GoodWord& g : enumerate_good(S.alphabet(), max_degree, cap)) {
        Word tree = tree_form(g);
        bool reducible = std::any_of(leads.begin(), leads.end(),
                                     [&](const Word& lead) {
                                         return contains_subtree(tree, lead);
                                     });
        if (!reducible) out.push_back(std::move(g));
    }
    return out;
}

bool nf_equal(const Poly& f, const Poly& g, const Presentation& S) {
    if (!S.gs_verified()) {
        throw NotConfluentError(
            "nf_equal requires an established Gröbner-Shirshov basis");
    }
    return reduce(f - g, S).normal_form.is_zero();
}

}  // namespace rsgs
