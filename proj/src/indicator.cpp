#include "fszlab/indicator.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace fszlab {

namespace {

void parallel_for(int64_t jobs, int workers, const std::function<void(int64_t)>& body) {
    if (workers <= 1 || jobs <= 1) {
        for (int64_t i = 0; i < jobs; ++i) body(i);
        return;
    }
    int n_threads = static_cast<int>(std::min<int64_t>(workers, jobs));
    std::atomic<int64_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mx;
    for (int t = 0; t < n_threads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                int64_t i = next.fetch_add(1);
                if (i >= jobs) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mx);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

// Count pass for one u: counts[g] = |G_n(u, g)| over the whole enumeration.
void fill_counts(const Group& g, const Group::PowerData& pd, ElementId u,
                 std::vector<int64_t>& counts) {
    const int64_t order = g.order();
    counts.assign(static_cast<size_t>(order), 0);
    ElementId uinv = g.inverse(u);
    // bucket walk: for each value v, members a of the bucket have a^n = v;
    // a contributes when (a u^{-1})^n = v as well
    for (int64_t v = 0; v < order; ++v) {
        int32_t begin = pd.bucket_start[static_cast<size_t>(v)];
        int32_t end = pd.bucket_start[static_cast<size_t>(v) + 1];
        for (int32_t idx = begin; idx < end; ++idx) {
            int32_t a = pd.bucket_elems[static_cast<size_t>(idx)];
            ElementId au = g.multiply(ElementId(a), uinv);
            if (pd.pow[static_cast<size_t>(au.value())] == v) counts[static_cast<size_t>(v)]++;
        }
    }
}

int64_t find_block_exponent(const Group& g, ElementId leader, ElementId member, int64_t order_of_leader) {
    ElementId cur = leader;
    for (int64_t m = 1; m < order_of_leader || m == 1; ++m) {
        if (cur == member) return m;
        cur = g.multiply(cur, leader);
    }
    throw std::logic_error("power-class member not reachable from its leader");
}

// The per-degree counting test shared by is_fsz_n and is_fsz.
DegreeVerdict run_degree(const Group& g, int64_t n, const FszOptions& opts, int ambient_class) {
    if (n <= 0) throw std::invalid_argument("degree n must be positive");
    DegreeVerdict verdict;
    verdict.n = n;
    verdict.ambient_class = ambient_class;
    verdict.subgroup_order = g.order();
    verdict.method = DegreeMethod::Counted;

    auto pd = g.power_data(n);
    const PowerClassPartition& partition = g.rational_power_classes();
    const std::vector<ConjClass>& classes = g.conjugacy_classes();
    const std::vector<int64_t>& orders = g.element_orders();

    int64_t n_classes = static_cast<int64_t>(classes.size());
    std::vector<std::vector<FszWitness>> per_class(static_cast<size_t>(n_classes));
    std::atomic<bool> cancelled{false};
    // fail-fast must report the first witness in canonical class order, so it
    // runs sequentially
    int workers = opts.fail_fast ? 1 : opts.workers;

    auto run_class = [&](int64_t ci) {
        if (cancelled.load(std::memory_order_relaxed)) return;
        thread_local std::vector<int64_t> counts;
        const ConjClass& cls = classes[static_cast<size_t>(ci)];
        fill_counts(g, *pd, cls.representative, counts);
        std::vector<FszWitness>& found = per_class[static_cast<size_t>(ci)];
        for (const PowerClassBlock& block : partition.blocks) {
            if (block.members.size() < 2) continue;
            int64_t base = counts[static_cast<size_t>(block.leader.value())];
            for (const ElementId& x : block.members) {
                int64_t c = counts[static_cast<size_t>(x.value())];
                if (c == base) continue;
                // a mismatch implies some count in the block is nonzero, so
                // the block lies inside C(u)
                FszWitness w;
                w.u_class = static_cast<int>(ci);
                w.u_order = orders[static_cast<size_t>(cls.representative.value())];
                w.u_class_size = cls.size;
                w.g = block.leader;
                w.g_order = orders[static_cast<size_t>(block.leader.value())];
                w.g_m = x;
                w.m = find_block_exponent(g, block.leader, x, w.g_order);
                w.count_g = base;
                w.count_g_m = c;
                w.ambient_class = ambient_class;
                found.push_back(w);
                if (opts.fail_fast) {
                    cancelled.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        }
    };

    parallel_for(n_classes, workers, run_class);

    for (int64_t ci = 0; ci < n_classes; ++ci) {
        auto& ws = per_class[static_cast<size_t>(ci)];
        if (ws.empty()) continue;
        verdict.pass = false;
        verdict.witnesses.insert(verdict.witnesses.end(), ws.begin(), ws.end());
        if (opts.fail_fast) {
            // deterministic fail-fast output: only the first failing class
            verdict.witnesses.assign(1, ws.front());
            break;
        }
    }
    return verdict;
}

std::vector<int64_t> degrees_for(const Group& g, const FszOptions& opts) {
    if (opts.degrees) {
        std::set<int64_t> uniq(opts.degrees->begin(), opts.degrees->end());
        for (int64_t n : uniq)
            if (n <= 0) throw std::invalid_argument("degrees must be positive");
        return {uniq.begin(), uniq.end()};
    }
    return relevant_degrees(g, opts.degree_mode);
}

}  // namespace

int64_t count_gn(const Group& g, ElementId u, ElementId target, int64_t n) {
    if (n <= 0) throw std::invalid_argument("count_gn: n must be positive");
    if (!g.commute(u, target)) return 0;  // G_n(u, g) is empty off C(u)
    auto pd = g.power_data(n);
    ElementId uinv = g.inverse(u);
    int32_t v = target.value();
    int64_t count = 0;
    int32_t begin = pd->bucket_start[static_cast<size_t>(v)];
    int32_t end = pd->bucket_start[static_cast<size_t>(v) + 1];
    for (int32_t idx = begin; idx < end; ++idx) {
        int32_t a = pd->bucket_elems[static_cast<size_t>(idx)];
        ElementId au = g.multiply(ElementId(a), uinv);
        if (pd->pow[static_cast<size_t>(au.value())] == v) ++count;
    }
    return count;
}

ZetaTable zeta_table(const Group& g, ElementId u, int64_t n) {
    if (n <= 0) throw std::invalid_argument("zeta_table: n must be positive");
    ZetaTable table;
    table.u = u;
    table.n = n;
    auto pd = g.power_data(n);
    fill_counts(g, *pd, u, table.counts);
    table.support = g.centralizer(u);
    table.total = std::accumulate(table.counts.begin(), table.counts.end(), int64_t{0});
    return table;
}

std::vector<int64_t> relevant_degrees(const Group& g, DegreeMode mode) {
    int64_t e = g.exponent();
    std::vector<int64_t> divs = divisors_of(e);
    if (mode == DegreeMode::Full) return divs;
    std::vector<int64_t> out;
    for (int64_t d : divs) {
        if (d == 1 || d == 2 || d == 3 || d == 4 || d == 6) continue;  // automatic
        if (d == e) continue;  // zeta_e is |G| at the identity, 0 elsewhere
        out.push_back(d);
    }
    return out;
}

FszVerdict is_fsz_n(const Group& g, int64_t n, const FszOptions& opts) {
    FszVerdict verdict;
    verdict.group_name = g.name();
    verdict.order = g.order();
    verdict.exponent = g.exponent();
    verdict.plus_mode = false;
    verdict.degrees_tested = {n};
    DegreeVerdict dv = run_degree(g, n, opts, -1);
    verdict.pass = dv.pass;
    verdict.results.push_back(std::move(dv));
    return verdict;
}

FszVerdict is_fsz(const Group& g, bool plus, const FszOptions& opts) {
    FszVerdict verdict;
    verdict.group_name = g.name();
    verdict.order = g.order();
    verdict.exponent = g.exponent();
    verdict.plus_mode = plus;

    std::set<int64_t> degrees_seen;
    if (!plus) {
        for (int64_t n : degrees_for(g, opts)) {
            degrees_seen.insert(n);
            if (opts.use_order_certificate &&
                sufficient_by_orders(g, n) == OrderCertificate::CertifiedFszPlusN) {
                DegreeVerdict dv;
                dv.n = n;
                dv.pass = true;
                dv.method = DegreeMethod::OrderCertificate;
                dv.subgroup_order = g.order();
                verdict.results.push_back(std::move(dv));
                continue;
            }
            DegreeVerdict dv = run_degree(g, n, opts, -1);
            verdict.pass = verdict.pass && dv.pass;
            verdict.results.push_back(std::move(dv));
            if (!verdict.pass && opts.fail_fast) break;
        }
    } else {
        const std::vector<ConjClass>& classes = g.conjugacy_classes();
        for (size_t ci = 0; ci < classes.size(); ++ci) {
            if (classes[ci].representative == g.identity()) continue;
            const std::vector<ElementId>& cent = g.class_centralizer(static_cast<int>(ci));
            Group h = g.subgroup(cent, "C(" + g.element_repr(classes[ci].representative) + ") in " +
                                           g.name());
            for (int64_t n : degrees_for(h, opts)) {
                degrees_seen.insert(n);
                if (opts.use_order_certificate &&
                    sufficient_by_orders(h, n) == OrderCertificate::CertifiedFszPlusN) {
                    DegreeVerdict dv;
                    dv.n = n;
                    dv.pass = true;
                    dv.method = DegreeMethod::OrderCertificate;
                    dv.ambient_class = static_cast<int>(ci);
                    dv.subgroup_order = h.order();
                    verdict.results.push_back(std::move(dv));
                    continue;
                }
                DegreeVerdict dv = run_degree(h, n, opts, static_cast<int>(ci));
                verdict.pass = verdict.pass && dv.pass;
                verdict.results.push_back(std::move(dv));
                if (!verdict.pass && opts.fail_fast) break;
            }
            if (!verdict.pass && opts.fail_fast) break;
        }
    }
    verdict.degrees_tested.assign(degrees_seen.begin(), degrees_seen.end());
    return verdict;
}

OrderCertificate sufficient_by_orders(const Group& g, int64_t n) {
    if (n <= 0) throw std::invalid_argument("sufficient_by_orders: n must be positive");
    // o(a^n)/o(a^{n^2}) = gcd(o(a^n), n); distinct element orders suffice
    std::set<int64_t> distinct(g.element_orders().begin(), g.element_orders().end());
    for (int64_t o : distinct) {
        int64_t on = o / std::gcd(o, n);
        int64_t ratio = std::gcd(on, n);
        if (ratio != 1 && ratio != 2 && ratio != 3 && ratio != 4 && ratio != 6)
            return OrderCertificate::Inconclusive;
    }
    return OrderCertificate::CertifiedFszPlusN;
}

bool power_map_closure_check(const Group& g, ElementId u, int64_t n) {
    if (n <= 0) throw std::invalid_argument("power_map_closure_check: n must be positive");
    auto pd = g.power_data(n);
    ElementId uinv = g.inverse(u);
    int64_t order = g.order();
    std::vector<char> member(static_cast<size_t>(order), 0);
    for (int32_t a = 0; a < order; ++a) {
        ElementId au = g.multiply(ElementId(a), uinv);
        member[static_cast<size_t>(a)] =
            pd->pow[static_cast<size_t>(a)] == pd->pow[static_cast<size_t>(au.value())];
    }
    // closure under all coprime power maps == union of rational power blocks
    for (const PowerClassBlock& block : g.rational_power_classes().blocks) {
        bool first = member[static_cast<size_t>(block.members.front().value())];
        for (const ElementId& x : block.members)
            if (member[static_cast<size_t>(x.value())] != first) return false;
    }
    return true;
}

bool coprime_power_bijection_check(const Group& g, ElementId u, ElementId target, int64_t n, int64_t m) {
    if (n <= 0) throw std::invalid_argument("coprime_power_bijection_check: n must be positive");
    if (!g.commute(u, target)) throw std::invalid_argument("coprime_power_bijection_check: u and g must commute");
    int64_t mm = ((m % g.order()) + g.order()) % g.order();
    if (std::gcd(mm, g.order()) != 1)
        throw std::invalid_argument("coprime_power_bijection_check: m must be coprime to |G|");
    int64_t mn = ((m % n) + n) % n;
    bool plus_case = (mn == 1 % n);
    bool minus_case = (mn == ((n - 1) % n));
    if (!plus_case && !minus_case)
        throw std::invalid_argument("coprime_power_bijection_check: m must be congruent to +-1 mod n");

    auto pd = g.power_data(n);
    ElementId uinv = g.inverse(u);
    auto members_of = [&](ElementId tgt) {
        std::vector<int32_t> s;
        int32_t v = tgt.value();
        for (int32_t idx = pd->bucket_start[static_cast<size_t>(v)];
             idx < pd->bucket_start[static_cast<size_t>(v) + 1]; ++idx) {
            int32_t a = pd->bucket_elems[static_cast<size_t>(idx)];
            if (pd->pow[static_cast<size_t>(g.multiply(ElementId(a), uinv).value())] == v)
                s.push_back(a);
        }
        return s;
    };
    std::vector<int32_t> source = members_of(target);
    ElementId target_m = g.power(target, m);
    std::vector<int32_t> image_set = members_of(target_m);
    if (source.size() != image_set.size()) return false;

    std::vector<int32_t> mapped;
    mapped.reserve(source.size());
    for (int32_t a : source) {
        ElementId img;
        if (plus_case) {
            img = g.power(ElementId(a), m);
        } else {
            // compose the inversion bijection a -> u a^{-1} with the +1 case
            // power map at exponent -m (which is = 1 mod n)
            img = g.power(g.multiply(u, g.inverse(ElementId(a))), -m);
        }
        mapped.push_back(img.value());
    }
    std::sort(mapped.begin(), mapped.end());
    if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) return false;
    return mapped == image_set;
}

CycNum cyclic_restriction_indicator(const Group& g, ElementId u, ElementId target, int64_t n,
                                    int64_t j) {
    if (n <= 0) throw std::invalid_argument("cyclic_restriction_indicator: n must be positive");
    if (!g.commute(u, target))
        throw std::invalid_argument("cyclic_restriction_indicator: g must centralize u");
    int64_t o = g.element_order(target);
    j = ((j % o) + o) % o;
    auto pd = g.power_data(n);
    ElementId uinv = g.inverse(u);
    auto count_at = [&](ElementId tgt) {
        int64_t c = 0;
        int32_t v = tgt.value();
        for (int32_t idx = pd->bucket_start[static_cast<size_t>(v)];
             idx < pd->bucket_start[static_cast<size_t>(v) + 1]; ++idx) {
            int32_t a = pd->bucket_elems[static_cast<size_t>(idx)];
            if (pd->pow[static_cast<size_t>(g.multiply(ElementId(a), uinv).value())] == v) ++c;
        }
        return c;
    };
    // (1/o) sum_k zeta_n(g^k) zeta_o^{-jk}
    std::vector<int64_t> raw(static_cast<size_t>(o), 0);
    ElementId cur = g.identity();
    for (int64_t k = 0; k < o; ++k) {
        int64_t e = ((-j * k) % o + o) % o;
        raw[static_cast<size_t>(e)] += count_at(cur);
        cur = g.multiply(cur, target);
    }
    return CycNum::from_coeffs(o, std::move(raw), o);
}

// ---------------------------------------------------------------------------
// Abelian structure and indicators over abelian centralizers
// ---------------------------------------------------------------------------

namespace {

// Basis of an abelian p-group given as a sorted element list of an ambient
// group.  Splits off a maximal-order cyclic factor and recurses on the
// quotient (materialized as a Cayley table on coset representatives).
void p_group_basis(const Group& g, const std::vector<ElementId>& elements, int64_t /*p*/,
                   std::vector<ElementId>& basis_out, std::vector<int64_t>& orders_out) {
    if (elements.size() == 1) return;
    // maximal-order element
    ElementId a1 = elements.front();
    int64_t best = 1;
    for (const ElementId& x : elements) {
        int64_t o = g.element_order(x);
        if (o > best) {
            best = o;
            a1 = x;
        }
    }
    // cyclic subgroup <a1> and discrete logs within it
    std::map<int32_t, int64_t> dlog_a1;
    {
        ElementId cur = g.identity();
        for (int64_t t = 0; t < best; ++t) {
            dlog_a1[cur.value()] = t;
            cur = g.multiply(cur, a1);
        }
    }
    // cosets of <a1>
    std::map<int32_t, int32_t> coset_of;  // element -> coset id
    std::vector<ElementId> reps;
    for (const ElementId& x : elements) {
        if (coset_of.count(x.value())) continue;
        int32_t id = static_cast<int32_t>(reps.size());
        reps.push_back(x);
        ElementId cur = x;
        for (int64_t t = 0; t < best; ++t) {
            coset_of[cur.value()] = id;
            cur = g.multiply(cur, a1);
        }
    }
    int64_t qsize = static_cast<int64_t>(reps.size());
    if (qsize == 1) {
        basis_out.push_back(a1);
        orders_out.push_back(best);
        return;
    }
    std::vector<std::vector<int32_t>> table(static_cast<size_t>(qsize),
                                            std::vector<int32_t>(static_cast<size_t>(qsize)));
    for (int64_t i = 0; i < qsize; ++i)
        for (int64_t j = 0; j < qsize; ++j)
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                coset_of.at(g.multiply(reps[static_cast<size_t>(i)], reps[static_cast<size_t>(j)]).value());
    Group quotient = Group::from_cayley_table(table, "quotient");

    std::vector<ElementId> q_elements;
    for (int32_t i = 0; i < qsize; ++i) q_elements.push_back(ElementId(i));
    std::vector<ElementId> q_basis;
    std::vector<int64_t> q_orders;
    p_group_basis(quotient, q_elements, 0, q_basis, q_orders);

    basis_out.push_back(a1);
    orders_out.push_back(best);
    for (size_t i = 0; i < q_basis.size(); ++i) {
        // lift the quotient basis element and correct it so its order in the
        // full group equals its order in the quotient
        ElementId b = reps[static_cast<size_t>(q_basis[i].value())];
        int64_t f = q_orders[i];
        ElementId bf = g.power(b, f);
        int64_t t = dlog_a1.at(bf.value());  // b^f = a1^t, p^f | t
        if (t % f != 0 && t != 0)
            throw std::logic_error("abelian basis lift: unexpected discrete log");
        int64_t s = (t == 0) ? 0 : t / f;
        ElementId corrected = g.multiply(b, g.power(a1, -s));
        basis_out.push_back(corrected);
        orders_out.push_back(f);
    }
}

}  // namespace

AbelianBasis abelian_basis(const Group& g) {
    if (!g.is_abelian()) throw std::domain_error("abelian_basis: group is not abelian");
    AbelianBasis out;
    int64_t order = g.order();
    // primary decomposition
    std::vector<int64_t> primes;
    {
        int64_t n = order;
        for (int64_t p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                primes.push_back(p);
                while (n % p == 0) n /= p;
            }
        if (n > 1) primes.push_back(n);
    }
    for (int64_t p : primes) {
        std::vector<ElementId> sylow;
        for (int32_t x = 0; x < order; ++x) {
            int64_t o = g.element_order(ElementId(x));
            bool ppower = true;
            while (o > 1) {
                if (o % p != 0) {
                    ppower = false;
                    break;
                }
                o /= p;
            }
            if (ppower) sylow.push_back(ElementId(x));
        }
        p_group_basis(g, sylow, p, out.basis, out.orders);
    }
    // discrete logs: enumerate all products of basis powers
    size_t r = out.basis.size();
    out.dlog.assign(static_cast<size_t>(order), {});
    std::vector<int64_t> exps(r, 0);
    int64_t covered = 0;
    std::vector<char> seen(static_cast<size_t>(order), 0);
    for (;;) {
        ElementId e = g.identity();
        for (size_t i = 0; i < r; ++i) e = g.multiply(e, g.power(out.basis[i], exps[i]));
        if (seen[static_cast<size_t>(e.value())])
            throw std::logic_error("abelian basis is not independent");
        seen[static_cast<size_t>(e.value())] = 1;
        out.dlog[static_cast<size_t>(e.value())] = exps;
        ++covered;
        // mixed-radix increment
        size_t i = 0;
        for (; i < r; ++i) {
            if (++exps[i] < out.orders[i]) break;
            exps[i] = 0;
        }
        if (i == r) break;
    }
    if (covered != order) throw std::logic_error("abelian basis does not span the group");
    return out;
}

std::vector<LabeledIndicator> abelian_centralizer_indicators(const Group& g, ElementId u,
                                                             int64_t n) {
    if (n <= 0) throw std::invalid_argument("abelian_centralizer_indicators: n must be positive");
    std::vector<ElementId> cent = g.centralizer(u);
    Group c = g.subgroup(cent);
    if (!c.is_abelian())
        throw std::domain_error("abelian_centralizer_indicators: centralizer is not abelian");
    AbelianBasis basis = abelian_basis(c);
    size_t r = basis.basis.size();
    int64_t csize = c.order();
    int64_t cexp = c.exponent();

    // zeta_n over the parent group, read off at centralizer elements
    ZetaTable zeta = zeta_table(g, u, n);

    // eta_{j}(x) = zeta_cexp ^ (sum_i j_i * dlog_i(x) * cexp/m_i)
    std::vector<LabeledIndicator> out;
    std::vector<int64_t> j(r, 0);
    for (;;) {
        std::vector<int64_t> raw(static_cast<size_t>(std::max<int64_t>(cexp, 1)), 0);
        for (int32_t x = 0; x < csize; ++x) {
            int64_t cnt = zeta.count(cent[static_cast<size_t>(x)]);
            if (cnt == 0) continue;
            const std::vector<int64_t>& dl = basis.dlog[static_cast<size_t>(x)];
            int64_t e = 0;
            for (size_t i = 0; i < r; ++i)
                e = (e + j[i] * dl[i] % cexp * (cexp / basis.orders[i])) % cexp;
            raw[static_cast<size_t>(e)] += cnt;
        }
        LabeledIndicator li;
        li.value = CycNum::from_coeffs(std::max<int64_t>(cexp, 1), std::move(raw), csize);
        std::string label;
        for (size_t i = 0; i < r; ++i) {
            if (i) label += ",";
            label += std::to_string(j[i]);
        }
        li.eta_label = label.empty() ? "0" : label;
        out.push_back(std::move(li));
        size_t i = 0;
        for (; i < r; ++i) {
            if (++j[i] < basis.orders[i]) break;
            j[i] = 0;
        }
        if (i == r) break;
    }
    return out;
}

bool galois_transport_check(const Group& g, ElementId u, int64_t n) {
    if (n <= 0) throw std::invalid_argument("galois_transport_check: n must be positive");
    int64_t e = g.exponent();
    int64_t d = std::gcd(n, e);
    auto pn = g.power_data(n);
    auto pdv = g.power_data(d);
    ElementId uinv = g.inverse(u);
    for (int32_t a = 0; a < g.order(); ++a) {
        int32_t au = g.multiply(ElementId(a), uinv).value();
        bool in_n = pn->pow[static_cast<size_t>(a)] == pn->pow[static_cast<size_t>(au)];
        bool in_d = pdv->pow[static_cast<size_t>(a)] == pdv->pow[static_cast<size_t>(au)];
        if (in_n != in_d) return false;
    }
    // indicator transport where full abelian indicator lists are available
    Group c = g.subgroup(g.centralizer(u));
    if (!c.is_abelian()) return true;
    int64_t q = n / d;
    int64_t ed = e / d;
    std::vector<LabeledIndicator> nu_n = abelian_centralizer_indicators(g, u, n);
    std::vector<LabeledIndicator> nu_d = abelian_centralizer_indicators(g, u, d);
    if (nu_n.size() != nu_d.size()) return false;
    for (size_t i = 0; i < nu_d.size(); ++i) {
        const CycNum& vd = nu_d[i].value;
        // apply sigma: zeta -> zeta^q on Q(zeta_{e/d}); realize it on the
        // value's conductor with an exponent congruent to q mod e/d and
        // coprime to both moduli (exists because gcd(q, e/d) = 1)
        int64_t cond = vd.conductor();
        int64_t L = std::lcm(cond, ed);
        int64_t candidate = (ed == 1) ? 1 : ((q % ed) + ed) % ed;
        int64_t guard = 0;
        while (std::gcd(candidate, L) != 1) {
            candidate += ed;
            if (++guard > L) return false;  // unreachable for valid inputs
        }
        CycNum transported = vd.galois(candidate);
        if (!(transported == nu_n[i].value)) return false;
    }
    return true;
}

}  // namespace fszlab
