#include "proglab/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "proglab/codim.hpp"
#include "proglab/errors.hpp"

namespace proglab {

ApFreeReport verify_ap_free(const GroupSpec& spec, const std::vector<GroupElement>& a) {
    std::set<GroupElement> elements;
    for (const auto& g : a) {
        check_element(spec, g);
        if (!elements.insert(g).second) {
            throw std::invalid_argument("verify_ap_free: duplicate element");
        }
    }
    const double pairs = static_cast<double>(a.size()) * static_cast<double>(a.size());
    if (pairs > 1e8) throw BudgetExceeded("verify_ap_free: pair scan beyond 1e8 probes");

    for (const auto& first : elements) {
        for (const auto& mid : elements) {
            if (first == mid) continue;
            const GroupElement last = add(spec, square(spec, mid), neg(spec, first));
            if (last == first || last == mid) continue;
            if (elements.count(last)) {
                return {false, std::array<GroupElement, 3>{first, mid, last}};
            }
        }
    }
    return {true, std::nullopt};
}

namespace {

struct TripleTable {
    int n = 0;
    std::vector<std::array<int, 3>> triples;            // sorted vertex triples
    std::vector<std::vector<std::array<int, 2>>> with;  // per vertex: the two partners
    std::vector<std::vector<int>> semitrivial;          // per vertex: conflicting partners

    explicit TripleTable(const GroupSpec& spec, bool forbid_semitrivial) {
        if (!index_fits(spec) || spec.order() > 4096) {
            throw std::invalid_argument("exact search: group too large");
        }
        n = spec.order().convert_to<int>();
        std::vector<GroupElement> elems;
        elems.reserve(n);
        for (int i = 0; i < n; ++i) elems.push_back(element_at(spec, std::uint64_t(i)));

        std::set<std::array<int, 3>> unique;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                // w completes (u, v, w) with v in the middle
                const GroupElement w = add(spec, square(spec, elems[v]), neg(spec, elems[u]));
                const int wi = static_cast<int>(element_index(spec, w));
                if (wi == u || wi == v) continue;
                std::array<int, 3> t{u, v, wi};
                std::sort(t.begin(), t.end());
                unique.insert(t);
            }
        }
        triples.assign(unique.begin(), unique.end());
        with.resize(n);
        for (const auto& t : triples) {
            with[t[0]].push_back({t[1], t[2]});
            with[t[1]].push_back({t[0], t[2]});
            with[t[2]].push_back({t[0], t[1]});
        }
        semitrivial.resize(n);
        if (forbid_semitrivial) {
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (square(spec, elems[u]) == square(spec, elems[v])) {
                        semitrivial[u].push_back(v);
                        semitrivial[v].push_back(u);
                    }
                }
            }
        }
    }
};

enum class Mark : std::uint8_t { free, chosen, excluded };

class ExactSearch {
public:
    ExactSearch(const TripleTable& table, const SearchBudget& budget)
        : table_(table),
          budget_(budget),
          mark_(table.n, Mark::free),
          start_(std::chrono::steady_clock::now()) {}

    void seed_best(const std::vector<int>& witness) {
        best_ = static_cast<int>(witness.size());
        best_witness_ = witness;
    }

    void run() {
        free_count_ = table_.n;
        dfs(0, 0);
        if (aborted_) {
            upper_ = std::max(upper_, best_);
        } else {
            upper_ = best_;
        }
    }

    int best() const { return best_; }
    int upper() const { return upper_; }
    bool aborted() const { return aborted_; }
    std::int64_t nodes() const { return nodes_; }
    const std::vector<int>& witness() const { return best_witness_; }

private:
    // Count of vertex-disjoint forbidden triples that are entirely free;
    // each such triple can contribute at most two vertices.
    int packing_discount(int cursor) {
        int packed = 0;
        used_.assign(static_cast<std::size_t>(table_.n), false);
        for (const auto& t : table_.triples) {
            if (t[0] < cursor) continue;
            bool ok = true;
            for (int v : t) {
                if (v < cursor || mark_[static_cast<std::size_t>(v)] != Mark::free ||
                    used_[static_cast<std::size_t>(v)]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (int v : t) used_[static_cast<std::size_t>(v)] = true;
            ++packed;
        }
        return packed;
    }

    bool out_of_budget() {
        if (nodes_ > budget_.max_nodes) return true;
        if ((nodes_ & 0xFFF) == 0) {
            const auto elapsed = std::chrono::duration<double>(
                                     std::chrono::steady_clock::now() - start_)
                                     .count();
            if (elapsed > budget_.time_limit_s) return true;
        }
        return false;
    }

    void dfs(int cursor, int chosen) {
        ++nodes_;
        if (aborted_ || out_of_budget()) {
            aborted_ = true;
            upper_ = std::max(upper_, chosen + free_count_);
            return;
        }
        while (cursor < table_.n && mark_[static_cast<std::size_t>(cursor)] != Mark::free) {
            ++cursor;
        }
        if (cursor == table_.n) {
            if (chosen > best_) {
                best_ = chosen;
                best_witness_ = current_;
            }
            return;
        }

        int bound = chosen + free_count_;
        if (bound <= best_) return;
        if (bound - best_ <= 4) {
            bound -= packing_discount(cursor);
            if (bound <= best_) return;
        }

        // Include the cursor vertex, propagating exclusions.
        const std::size_t trail_mark = trail_.size();
        mark_[static_cast<std::size_t>(cursor)] = Mark::chosen;
        --free_count_;
        current_.push_back(cursor);
        bool consistent = true;
        for (const auto& [p, q] : table_.with[static_cast<std::size_t>(cursor)]) {
            const Mark mp = mark_[static_cast<std::size_t>(p)];
            const Mark mq = mark_[static_cast<std::size_t>(q)];
            if (mp == Mark::chosen && mq == Mark::chosen) {
                consistent = false;  // cannot happen if propagation is sound
                break;
            }
            if (mp == Mark::chosen && mq == Mark::free) exclude(q);
            if (mq == Mark::chosen && mp == Mark::free) exclude(p);
        }
        if (consistent) {
            for (int p : table_.semitrivial[static_cast<std::size_t>(cursor)]) {
                if (mark_[static_cast<std::size_t>(p)] == Mark::free) exclude(p);
            }
            dfs(cursor + 1, chosen + 1);
        }
        current_.pop_back();
        mark_[static_cast<std::size_t>(cursor)] = Mark::free;
        ++free_count_;
        unwind(trail_mark);

        // Exclude it.
        mark_[static_cast<std::size_t>(cursor)] = Mark::excluded;
        --free_count_;
        dfs(cursor + 1, chosen);
        mark_[static_cast<std::size_t>(cursor)] = Mark::free;
        ++free_count_;
    }

    void exclude(int v) {
        mark_[static_cast<std::size_t>(v)] = Mark::excluded;
        --free_count_;
        trail_.push_back(v);
    }

    void unwind(std::size_t trail_mark) {
        while (trail_.size() > trail_mark) {
            mark_[static_cast<std::size_t>(trail_.back())] = Mark::free;
            ++free_count_;
            trail_.pop_back();
        }
    }

    const TripleTable& table_;
    SearchBudget budget_;
    std::vector<Mark> mark_;
    std::vector<bool> used_;
    std::vector<int> trail_;
    std::vector<int> current_;
    std::vector<int> best_witness_;
    int best_ = 0;
    int upper_ = 0;
    int free_count_ = 0;
    std::int64_t nodes_ = 0;
    bool aborted_ = false;
    std::chrono::steady_clock::time_point start_;
};

// Greedy insertion in the given order; returns vertex ids.
std::vector<int> greedy_pass(const TripleTable& table, const std::vector<int>& order) {
    std::vector<char> chosen(static_cast<std::size_t>(table.n), 0);
    std::vector<int> picked;
    for (int v : order) {
        bool ok = true;
        for (const auto& [p, q] : table.with[static_cast<std::size_t>(v)]) {
            if (chosen[static_cast<std::size_t>(p)] && chosen[static_cast<std::size_t>(q)]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (int p : table.semitrivial[static_cast<std::size_t>(v)]) {
                if (chosen[static_cast<std::size_t>(p)]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            chosen[static_cast<std::size_t>(v)] = 1;
            picked.push_back(v);
        }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

std::vector<GroupElement> to_elements(const GroupSpec& spec, const std::vector<int>& ids) {
    std::vector<GroupElement> out;
    out.reserve(ids.size());
    for (int id : ids) out.push_back(element_at(spec, static_cast<std::uint64_t>(id)));
    return out;
}

}  // namespace

R3Result r3_exact(const GroupSpec& spec, const SearchBudget& budget, bool forbid_semitrivial) {
    const TripleTable table(spec, forbid_semitrivial);

    std::vector<int> order(static_cast<std::size_t>(table.n));
    for (int i = 0; i < table.n; ++i) order[static_cast<std::size_t>(i)] = i;
    const std::vector<int> seed_witness = greedy_pass(table, order);

    ExactSearch search(table, budget);
    search.seed_best(seed_witness);
    search.run();

    R3Result result;
    result.size = search.best();
    result.witness = to_elements(spec, search.witness());
    result.exact = !search.aborted();
    result.upper = search.upper();
    result.nodes = search.nodes();
    if (!verify_ap_free(spec, result.witness).free) {
        throw SolverFailure("r3_exact: internal error, witness fails verification");
    }
    return result;
}

R3Result r3_greedy(const GroupSpec& spec, const SearchBudget& budget, bool forbid_semitrivial) {
    const TripleTable table(spec, forbid_semitrivial);
    if (budget.restarts < 1) throw std::invalid_argument("r3_greedy: need at least one restart");

    std::mt19937_64 rng(budget.seed);
    std::vector<int> order(static_cast<std::size_t>(table.n));
    for (int i = 0; i < table.n; ++i) order[static_cast<std::size_t>(i)] = i;

    std::vector<int> best;
    for (int restart = 0; restart < budget.restarts; ++restart) {
        if (restart > 0) {
            for (std::size_t i = order.size(); i > 1; --i) {
                std::swap(order[i - 1], order[static_cast<std::size_t>(rng() % i)]);
            }
        }
        std::vector<int> picked = greedy_pass(table, order);
        if (picked.size() > best.size()) best = std::move(picked);
    }

    R3Result result;
    result.size = static_cast<int>(best.size());
    result.witness = to_elements(spec, best);
    result.exact = false;
    result.upper = table.n;
    result.nodes = 0;
    if (!verify_ap_free(spec, result.witness).free) {
        throw SolverFailure("r3_greedy: internal error, witness fails verification");
    }
    return result;
}

ProductLemmaReport check_product_lemma(const GroupSpec& g1, const GroupSpec& g2,
                                       const SearchBudget& budget) {
    const R3Result r1 = r3_exact(g1, budget);
    const R3Result r2 = r3_exact(g2, budget);

    std::vector<std::uint32_t> moduli = g1.moduli();
    moduli.insert(moduli.end(), g2.moduli().begin(), g2.moduli().end());
    const GroupSpec product(std::move(moduli));
    const R3Result rp = r3_exact(product, budget);

    ProductLemmaReport report;
    report.lhs = rp.size;
    report.rhs = r1.size * r2.size;
    report.lhs_exact = rp.exact && r1.exact && r2.exact;

    std::vector<GroupElement> cross;
    cross.reserve(r1.witness.size() * r2.witness.size());
    for (const auto& a : r1.witness) {
        for (const auto& b : r2.witness) {
            std::vector<std::uint32_t> residues = a.residues;
            residues.insert(residues.end(), b.residues.begin(), b.residues.end());
            cross.emplace_back(std::move(residues));
        }
    }
    report.product_witness_ap_free = verify_ap_free(product, cross).free;

    // The verified cross witness certifies the inequality on its own even
    // when the product search stops at a budget.
    const int certified = report.product_witness_ap_free
                              ? std::max(rp.size, static_cast<int>(cross.size()))
                              : rp.size;
    report.holds = certified >= report.rhs;
    return report;
}

MainLemmaReport check_main_lemma(const GroupSpec& spec, const std::vector<GroupElement>& a,
                                 double rho) {
    MainLemmaReport report;
    if (!spec.is_two_group()) {
        throw std::invalid_argument("check_main_lemma: group must be an abelian 2-group");
    }

    // Subgroup of doubled elements: each factor's modulus halves.
    std::vector<std::uint32_t> h_moduli;
    h_moduli.reserve(spec.dim());
    for (auto m : spec.moduli()) h_moduli.push_back(m > 1 ? m / 2 : 1);

    DegreeCountQuery q;
    q.degrees_per_var = h_moduli;
    Rational deg_max = 0;
    for (auto m : h_moduli) deg_max += m - 1;

    q.cap = rational_from_double(rho) * deg_max;
    report.codim_x = count_monomials(q);
    report.codim_z = report.codim_x;
    q.cap = rational_from_double(1.0 - 2.0 * rho) * deg_max;
    report.codim_y = count_monomials(q);

    BigInt h_order = 1;
    for (auto m : h_moduli) h_order *= m;
    report.applicable = rho >= 0.25 && rho <= 0.5 && h_order >= 5 * report.codim_y;

    // Squares with their root counts.
    std::map<GroupElement, int> root_count;
    std::set<GroupElement> seen;
    for (const auto& g : a) {
        check_element(spec, g);
        if (!seen.insert(g).second) {
            throw std::invalid_argument("check_main_lemma: duplicate element");
        }
        ++root_count[square(spec, g)];
    }
    report.squares_size = BigInt(root_count.size());

    report.hypothesis_i = report.squares_size >= 5 * report.codim_y && !root_count.empty();
    report.hypothesis_ii = true;
    for (const auto& [sq, count] : root_count) {
        if (count != root_count.begin()->second) {
            report.hypothesis_ii = false;
            break;
        }
    }

    // Coset of the doubled subgroup: residues modulo 2 in each nontrivial factor.
    std::map<std::vector<std::uint32_t>, BigInt> coset_sizes;
    for (const auto& g : a) {
        std::vector<std::uint32_t> key(spec.dim());
        for (std::size_t i = 0; i < spec.dim(); ++i) {
            key[i] = spec.modulus(i) > 1 ? g.residues[i] % 2 : 0;
        }
        coset_sizes[key] += 1;
    }
    report.hypothesis_iii = true;
    const BigInt threshold = 5 * (report.codim_x + report.codim_z);
    for (const auto& [key, count] : coset_sizes) {
        if (4 * count <= threshold) {  // needs count > (5/4)(codim X + codim Z)
            report.hypothesis_iii = false;
            break;
        }
    }

    report.all_hypotheses =
        report.hypothesis_i && report.hypothesis_ii && report.hypothesis_iii;
    if (report.all_hypotheses) {
        report.conclusion_checked = !verify_ap_free(spec, a).free;
    }
    return report;
}

}  // namespace proglab
