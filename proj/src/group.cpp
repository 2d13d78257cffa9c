#include "fszlab/group.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fszlab/cyclotomic.hpp"  // divisors_of

namespace fszlab {
namespace detail {

namespace {

uint64_t fnv1a(const void* data, size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    uint64_t h = 1469598103934665603ull;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

int64_t lcm64(int64_t a, int64_t b) { return std::lcm(a, b); }

}  // namespace

class GroupImpl : public std::enable_shared_from_this<GroupImpl> {
public:
    virtual ~GroupImpl() = default;

    int64_t order = 0;
    int32_t identity = 0;
    std::string name;
    std::vector<int32_t> generator_ids;

    virtual int32_t mul(int32_t a, int32_t b) const = 0;
    virtual int32_t inv(int32_t a) const = 0;
    virtual std::string backend_name() const = 0;
    virtual std::string element_repr(int32_t a) const;
    /// Order of an element when the backend can answer cheaply; 0 otherwise.
    virtual int64_t native_order(int32_t) const { return 0; }
    /// Exponent when the backend can answer without the full order table.
    virtual int64_t native_exponent() const { return 0; }

    void check_index(int32_t a) const {
        if (a < 0 || a >= order)
            throw std::invalid_argument("element index " + std::to_string(a) +
                                        " out of range for group of order " +
                                        std::to_string(order));
    }

    int32_t pow_elem(int32_t a, int64_t k) const {
        check_index(a);
        if (k < 0) {
            a = inv(a);
            if (k == INT64_MIN) throw std::invalid_argument("exponent out of range");
            k = -k;
        }
        int32_t acc = identity;
        int32_t base = a;
        while (k > 0) {
            if (k & 1) acc = mul(acc, base);
            k >>= 1;
            if (k) base = mul(base, base);
        }
        return acc;
    }

    // single order without building the full table (used by pc inverses)
    int64_t single_order(int32_t a) const {
        int64_t nat = native_order(a);
        if (nat > 0) return nat;
        for (int64_t d : divisors_of(order))
            if (pow_elem(a, d) == identity) return d;
        throw std::logic_error("element order not found (broken group law)");
    }

    // ---- lazily built shared tables -------------------------------------
    const std::vector<int64_t>& orders_table() const {
        std::lock_guard<std::mutex> lock(cache_mx_);
        ensure_orders_locked();
        return orders_;
    }

    int64_t exponent_value() const {
        {
            std::lock_guard<std::mutex> lock(cache_mx_);
            if (exponent_ > 0) return exponent_;
        }
        int64_t e = native_exponent();
        if (e == 0) {
            e = 1;
            for (int64_t o : orders_table()) e = lcm64(e, o);
        }
        std::lock_guard<std::mutex> lock(cache_mx_);
        exponent_ = e;
        return exponent_;
    }

    bool abelian() const {
        std::lock_guard<std::mutex> lock(cache_mx_);
        if (abelian_ == 0) {
            abelian_ = 1;
            for (int32_t g : generator_ids)
                for (int32_t h : generator_ids)
                    if (mul(g, h) != mul(h, g)) { abelian_ = -1; break; }
        }
        return abelian_ > 0;
    }

    const std::vector<ConjClass>& classes() const {
        std::lock_guard<std::mutex> lock(cache_mx_);
        if (classes_.empty()) compute_classes();
        return classes_;
    }

    int class_index_of(int32_t a) const {
        check_index(a);
        std::lock_guard<std::mutex> lock(cache_mx_);
        if (classes_.empty()) compute_classes();
        return class_of_[static_cast<size_t>(a)];
    }

    const std::vector<ElementId>& class_centralizer(int ci) const {
        const auto& cls = classes();
        if (ci < 0 || ci >= static_cast<int>(cls.size()))
            throw std::invalid_argument("class index out of range");
        std::lock_guard<std::mutex> lock(cache_mx_);
        auto it = class_centralizers_.find(ci);
        if (it == class_centralizers_.end()) {
            std::vector<ElementId> c = centralizer_of(cls[static_cast<size_t>(ci)].representative.value());
            it = class_centralizers_.emplace(ci, std::move(c)).first;
        }
        return it->second;
    }

    std::vector<ElementId> centralizer_of(int32_t u) const {
        check_index(u);
        std::vector<ElementId> out;
        for (int32_t x = 0; x < order; ++x)
            if (mul(x, u) == mul(u, x)) out.push_back(ElementId(x));
        return out;
    }

    const PowerClassPartition& power_partition() const {
        std::lock_guard<std::mutex> lock(cache_mx_);
        if (partition_.block_of.empty()) compute_partition();
        return partition_;
    }

    std::shared_ptr<const Group::PowerData> power_data(int64_t n) const {
        if (n <= 0) throw std::invalid_argument("power map degree must be positive");
        {
            std::lock_guard<std::mutex> lock(cache_mx_);
            for (auto& entry : power_cache_)
                if (entry->n == n) return entry;
        }
        auto data = std::make_shared<Group::PowerData>();
        data->n = n;
        data->pow.resize(static_cast<size_t>(order));
        for (int32_t a = 0; a < order; ++a)
            data->pow[static_cast<size_t>(a)] = pow_elem(a, n);
        // bucket CSR: elements grouped by n-th power
        data->bucket_start.assign(static_cast<size_t>(order) + 1, 0);
        for (int32_t v : data->pow) data->bucket_start[static_cast<size_t>(v) + 1]++;
        for (size_t i = 1; i < data->bucket_start.size(); ++i)
            data->bucket_start[i] += data->bucket_start[i - 1];
        data->bucket_elems.resize(static_cast<size_t>(order));
        std::vector<int32_t> cursor(data->bucket_start.begin(), data->bucket_start.end() - 1);
        for (int32_t a = 0; a < order; ++a)
            data->bucket_elems[static_cast<size_t>(cursor[static_cast<size_t>(data->pow[static_cast<size_t>(a)])]++)] = a;

        std::lock_guard<std::mutex> lock(cache_mx_);
        for (auto& entry : power_cache_)
            if (entry->n == n) return entry;
        if (power_cache_.size() >= 6) power_cache_.pop_front();
        power_cache_.push_back(data);
        return data;
    }

    std::vector<int32_t> close_under(std::vector<int32_t> gens) const {
        std::vector<char> seen(static_cast<size_t>(order), 0);
        std::deque<int32_t> queue;
        seen[static_cast<size_t>(identity)] = 1;
        queue.push_back(identity);
        std::vector<int32_t> result{identity};
        for (int32_t g : gens) {
            if (!seen[static_cast<size_t>(g)]) {
                seen[static_cast<size_t>(g)] = 1;
                queue.push_back(g);
                result.push_back(g);
            }
        }
        while (!queue.empty()) {
            int32_t x = queue.front();
            queue.pop_front();
            for (int32_t g : gens) {
                int32_t y = mul(x, g);
                if (!seen[static_cast<size_t>(y)]) {
                    seen[static_cast<size_t>(y)] = 1;
                    queue.push_back(y);
                    result.push_back(y);
                }
            }
        }
        std::sort(result.begin(), result.end());
        return result;
    }

private:
    void compute_classes() const {  // cache_mx_ held
        classes_.clear();
        class_of_.assign(static_cast<size_t>(order), -1);
        std::vector<int32_t> gen_invs;
        std::vector<int32_t> gens = generator_ids;
        if (gens.empty()) gens.push_back(identity);
        gen_invs.reserve(gens.size());
        for (int32_t g : gens) gen_invs.push_back(inv(g));
        for (int32_t i = 0; i < order; ++i) {
            if (class_of_[static_cast<size_t>(i)] >= 0) continue;
            int ci = static_cast<int>(classes_.size());
            std::deque<int32_t> queue{i};
            class_of_[static_cast<size_t>(i)] = ci;
            std::vector<ElementId> members{ElementId(i)};
            while (!queue.empty()) {
                int32_t x = queue.front();
                queue.pop_front();
                for (size_t k = 0; k < gens.size(); ++k) {
                    int32_t y = mul(mul(gen_invs[k], x), gens[k]);
                    if (class_of_[static_cast<size_t>(y)] < 0) {
                        class_of_[static_cast<size_t>(y)] = ci;
                        queue.push_back(y);
                        members.push_back(ElementId(y));
                    }
                }
            }
            std::sort(members.begin(), members.end());
            ConjClass cls;
            cls.representative = ElementId(i);
            cls.size = static_cast<int64_t>(members.size());
            cls.members = std::move(members);
            classes_.push_back(std::move(cls));
        }
    }

    void ensure_orders_locked() const {  // cache_mx_ held
        if (!orders_.empty()) return;
        orders_.resize(static_cast<size_t>(order));
        std::vector<int64_t> divs = divisors_of(order);
        for (int32_t a = 0; a < order; ++a) {
            int64_t nat = native_order(a);
            if (nat > 0) {
                orders_[static_cast<size_t>(a)] = nat;
                continue;
            }
            for (int64_t d : divs) {
                if (pow_elem(a, d) == identity) {
                    orders_[static_cast<size_t>(a)] = d;
                    break;
                }
            }
        }
    }

    void compute_partition() const {  // cache_mx_ held
        ensure_orders_locked();
        partition_.blocks.clear();
        partition_.block_of.assign(static_cast<size_t>(order), -1);
        for (int32_t i = 0; i < order; ++i) {
            if (partition_.block_of[static_cast<size_t>(i)] >= 0) continue;
            int bi = static_cast<int>(partition_.blocks.size());
            int64_t o = orders_[static_cast<size_t>(i)];
            std::vector<ElementId> members;
            if (o == 1) {
                partition_.block_of[static_cast<size_t>(i)] = bi;
                members.push_back(ElementId(i));
            } else {
                int32_t cur = i;  // cur = i^m
                for (int64_t m = 1; m < o; ++m) {
                    if (std::gcd(m, o) == 1) {
                        partition_.block_of[static_cast<size_t>(cur)] = bi;
                        members.push_back(ElementId(cur));
                    }
                    if (m + 1 < o) cur = mul(cur, i);
                }
            }
            std::sort(members.begin(), members.end());
            PowerClassBlock block;
            block.leader = ElementId(i);
            block.members = std::move(members);
            partition_.blocks.push_back(std::move(block));
        }
    }

    mutable std::mutex cache_mx_;
    mutable std::vector<int64_t> orders_;
    mutable int64_t exponent_ = 0;
    mutable int abelian_ = 0;
    mutable std::vector<ConjClass> classes_;
    mutable std::vector<int32_t> class_of_;
    mutable std::map<int, std::vector<ElementId>> class_centralizers_;
    mutable PowerClassPartition partition_;
    mutable std::deque<std::shared_ptr<const Group::PowerData>> power_cache_;
};

std::string GroupImpl::element_repr(int32_t a) const {
    return "x" + std::to_string(a);
}

// ---------------------------------------------------------------------------
// Permutation backend
// ---------------------------------------------------------------------------

class PermImpl final : public GroupImpl {
public:
    PermImpl(int degree, const std::vector<std::vector<int>>& gen_images, std::string nm) {
        if (degree < 0) throw std::invalid_argument("permutation degree must be nonnegative");
        if (degree > 65535) throw std::invalid_argument("permutation degree too large");
        name = std::move(nm);
        degree_ = degree;

        std::vector<std::vector<uint16_t>> gens;
        for (const auto& img : gen_images) {
            if (static_cast<int>(img.size()) != degree)
                throw std::invalid_argument("generator image list has wrong length");
            std::vector<char> seen(static_cast<size_t>(degree), 0);
            std::vector<uint16_t> g(static_cast<size_t>(degree));
            for (int i = 0; i < degree; ++i) {
                int v = img[static_cast<size_t>(i)];
                if (v < 0 || v >= degree || seen[static_cast<size_t>(v)])
                    throw std::invalid_argument("image list is not a permutation");
                seen[static_cast<size_t>(v)] = 1;
                g[static_cast<size_t>(i)] = static_cast<uint16_t>(v);
            }
            gens.push_back(std::move(g));
        }

        // breadth-first closure from the generators
        std::vector<uint16_t> ident(static_cast<size_t>(degree));
        for (int i = 0; i < degree; ++i) ident[static_cast<size_t>(i)] = static_cast<uint16_t>(i);
        std::vector<std::vector<uint16_t>> elems;
        std::unordered_map<uint64_t, std::vector<int32_t>> index;
        auto find_elem = [&](const std::vector<uint16_t>& v) -> int32_t {
            uint64_t h = fnv1a(v.data(), v.size() * sizeof(uint16_t));
            auto it = index.find(h);
            if (it == index.end()) return -1;
            for (int32_t id : it->second)
                if (elems[static_cast<size_t>(id)] == v) return id;
            return -1;
        };
        auto add_elem = [&](std::vector<uint16_t> v) -> int32_t {
            int32_t id = static_cast<int32_t>(elems.size());
            uint64_t h = fnv1a(v.data(), v.size() * sizeof(uint16_t));
            index[h].push_back(id);
            elems.push_back(std::move(v));
            return id;
        };
        add_elem(ident);
        std::deque<int32_t> queue{0};
        while (!queue.empty()) {
            int32_t x = queue.front();
            queue.pop_front();
            for (const auto& g : gens) {
                std::vector<uint16_t> y(static_cast<size_t>(degree));
                const auto& xv = elems[static_cast<size_t>(x)];
                for (int i = 0; i < degree; ++i)
                    y[static_cast<size_t>(i)] = g[xv[static_cast<size_t>(i)]];
                if (find_elem(y) < 0) {
                    if (static_cast<int64_t>(elems.size()) >= kOrderCap)
                        throw std::invalid_argument("group order exceeds the cap of " +
                                                    std::to_string(kOrderCap));
                    if (static_cast<int64_t>(elems.size() + 1) * degree > 40'000'000)
                        throw std::invalid_argument("permutation group too large to enumerate");
                    queue.push_back(add_elem(std::move(y)));
                }
            }
        }

        // canonical enumeration: lexicographic on image vectors
        std::sort(elems.begin(), elems.end());
        order = static_cast<int64_t>(elems.size());
        arena_.resize(static_cast<size_t>(order) * static_cast<size_t>(degree));
        index_.clear();
        for (int32_t i = 0; i < order; ++i) {
            std::memcpy(&arena_[static_cast<size_t>(i) * degree_], elems[static_cast<size_t>(i)].data(),
                        static_cast<size_t>(degree) * sizeof(uint16_t));
            index_[fnv1a(elems[static_cast<size_t>(i)].data(), static_cast<size_t>(degree) * sizeof(uint16_t))]
                .push_back(i);
        }
        identity = lookup(ident.data());
        for (const auto& g : gens) generator_ids.push_back(lookup(g.data()));
    }

    const uint16_t* images(int32_t a) const { return &arena_[static_cast<size_t>(a) * degree_]; }

    int32_t lookup(const uint16_t* v) const {
        uint64_t h = fnv1a(v, static_cast<size_t>(degree_) * sizeof(uint16_t));
        auto it = index_.find(h);
        if (it != index_.end()) {
            for (int32_t id : it->second)
                if (std::memcmp(images(id), v, static_cast<size_t>(degree_) * sizeof(uint16_t)) == 0)
                    return id;
        }
        throw std::logic_error("permutation not in group (closure broken)");
    }

    int32_t mul(int32_t a, int32_t b) const override {
        check_index(a);
        check_index(b);
        thread_local std::vector<uint16_t> scratch;
        scratch.resize(static_cast<size_t>(degree_));
        const uint16_t* av = images(a);
        const uint16_t* bv = images(b);
        for (int i = 0; i < degree_; ++i) scratch[static_cast<size_t>(i)] = bv[av[i]];
        return lookup(scratch.data());
    }

    int32_t inv(int32_t a) const override {
        check_index(a);
        thread_local std::vector<uint16_t> scratch;
        scratch.resize(static_cast<size_t>(degree_));
        const uint16_t* av = images(a);
        for (int i = 0; i < degree_; ++i) scratch[av[i]] = static_cast<uint16_t>(i);
        return lookup(scratch.data());
    }

    int64_t native_order(int32_t a) const override {
        const uint16_t* av = images(a);
        std::vector<char> seen(static_cast<size_t>(degree_), 0);
        int64_t e = 1;
        for (int i = 0; i < degree_; ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            int64_t len = 0;
            int j = i;
            while (!seen[static_cast<size_t>(j)]) {
                seen[static_cast<size_t>(j)] = 1;
                j = av[j];
                ++len;
            }
            e = lcm64(e, len);
        }
        return e;
    }

    std::string backend_name() const override { return "permutation"; }

    std::string element_repr(int32_t a) const override {
        const uint16_t* av = images(a);
        std::ostringstream out;
        std::vector<char> seen(static_cast<size_t>(degree_), 0);
        bool any = false;
        for (int i = 0; i < degree_; ++i) {
            if (seen[static_cast<size_t>(i)] || av[i] == i) continue;
            out << "(";
            int j = i;
            bool first = true;
            while (!seen[static_cast<size_t>(j)]) {
                seen[static_cast<size_t>(j)] = 1;
                if (!first) out << " ";
                out << (j + 1);
                first = false;
                j = av[j];
            }
            out << ")";
            any = true;
        }
        if (!any) return "()";
        return out.str();
    }

    int degree_ = 0;

private:
    std::vector<uint16_t> arena_;
    std::unordered_map<uint64_t, std::vector<int32_t>> index_;
};

// ---------------------------------------------------------------------------
// Polycyclic backend (collection from the left)
// ---------------------------------------------------------------------------

class PcImpl final : public GroupImpl {
public:
    struct Syl {
        int32_t g;   // generator index, 0-based
        int64_t e;   // exponent > 0
    };

    explicit PcImpl(const PcPresentation& pres, std::string nm) {
        name = std::move(nm);
        k_ = static_cast<int>(pres.relative_orders.size());
        if (k_ > 63) throw std::invalid_argument("too many pc generators");
        rel_orders_ = pres.relative_orders;
        int64_t total = 1;
        for (int64_t o : rel_orders_) {
            if (o < 2) throw std::invalid_argument("pc relative orders must be at least 2");
            total *= o;
            if (total > kOrderCap)
                throw std::invalid_argument("pc group order exceeds the cap of " +
                                            std::to_string(kOrderCap));
        }
        order = total;
        strides_.assign(static_cast<size_t>(k_), 1);
        for (int i = k_ - 2; i >= 0; --i)
            strides_[static_cast<size_t>(i)] =
                strides_[static_cast<size_t>(i + 1)] * rel_orders_[static_cast<size_t>(i + 1)];

        auto word_from_vec = [&](const std::vector<int64_t>& vec, int min_gen,
                                 const char* what) -> std::vector<Syl> {
            if (static_cast<int>(vec.size()) != k_)
                throw std::invalid_argument(std::string(what) + ": word has wrong length");
            std::vector<Syl> w;
            for (int i = 0; i < k_; ++i) {
                int64_t e = vec[static_cast<size_t>(i)];
                if (e == 0) continue;
                if (e < 0 || e >= rel_orders_[static_cast<size_t>(i)])
                    throw std::invalid_argument(std::string(what) +
                                                ": exponent out of range");
                if (i < min_gen)
                    throw std::invalid_argument(std::string(what) +
                                                ": word must involve only later generators");
                w.push_back(Syl{i, e});
            }
            return w;
        };

        power_words_.assign(static_cast<size_t>(k_), {});
        for (const auto& [i1, vec] : pres.power_words) {
            int i = i1 - 1;
            if (i < 0 || i >= k_) throw std::invalid_argument("power relation: bad generator index");
            power_words_[static_cast<size_t>(i)] = word_from_vec(vec, i + 1, "power relation");
        }
        comm_words_.assign(static_cast<size_t>(k_) * static_cast<size_t>(k_), {});
        comm_trivial_.assign(static_cast<size_t>(k_) * static_cast<size_t>(k_), 1);
        for (const auto& [ji, vec] : pres.comm_words) {
            int j = ji.first - 1, i = ji.second - 1;
            if (i < 0 || j <= i || j >= k_)
                throw std::invalid_argument("commutator relation: need j > i within range");
            auto w = word_from_vec(vec, i + 1, "commutator relation");
            if (!w.empty()) {
                comm_words_[static_cast<size_t>(j) * k_ + i] = std::move(w);
                comm_trivial_[static_cast<size_t>(j) * k_ + i] = 0;
            }
        }
        identity = 0;
        for (int i = 0; i < k_; ++i) generator_ids.push_back(gen_elem(i));
        check_consistency();
    }

    int32_t gen_elem(int i) const { return static_cast<int32_t>(strides_[static_cast<size_t>(i)]); }

    void decode(int32_t a, std::vector<int64_t>& out) const {
        out.assign(static_cast<size_t>(k_), 0);
        int64_t rest = a;
        for (int i = 0; i < k_; ++i) {
            out[static_cast<size_t>(i)] = rest / strides_[static_cast<size_t>(i)];
            rest %= strides_[static_cast<size_t>(i)];
        }
    }

    int32_t encode(const std::vector<int64_t>& vec) const {
        int64_t idx = 0;
        for (int i = 0; i < k_; ++i) idx += vec[static_cast<size_t>(i)] * strides_[static_cast<size_t>(i)];
        return static_cast<int32_t>(idx);
    }

    // Collection from the left: repeatedly remove the leftmost violation of
    // normal form (exponent overflow or an out-of-order adjacent pair).
    void collect(std::vector<Syl>& w) const {
        size_t steps = 0;
        for (;;) {
            if (++steps > 100'000'000)
                throw std::runtime_error("pc collection did not terminate");
            bool changed = false;
            for (size_t p = 0; p < w.size(); ++p) {
                int32_t g = w[p].g;
                int64_t e = w[p].e;
                if (e == 0) {
                    w.erase(w.begin() + static_cast<std::ptrdiff_t>(p));
                    changed = true;
                    break;
                }
                int64_t o = rel_orders_[static_cast<size_t>(g)];
                if (e >= o) {
                    int64_t q = e / o, r = e % o;
                    const auto& pw = power_words_[static_cast<size_t>(g)];
                    std::vector<Syl> ins;
                    for (int64_t t = 0; t < q; ++t)
                        ins.insert(ins.end(), pw.begin(), pw.end());
                    if (r == 0) {
                        w.erase(w.begin() + static_cast<std::ptrdiff_t>(p));
                        w.insert(w.begin() + static_cast<std::ptrdiff_t>(p), ins.begin(), ins.end());
                    } else {
                        w[p].e = r;
                        w.insert(w.begin() + static_cast<std::ptrdiff_t>(p) + 1, ins.begin(), ins.end());
                    }
                    changed = true;
                    break;
                }
                if (p + 1 < w.size()) {
                    int32_t h = w[p + 1].g;
                    int64_t f = w[p + 1].e;
                    if (h == g) {
                        w[p].e = e + f;
                        w.erase(w.begin() + static_cast<std::ptrdiff_t>(p) + 1);
                        changed = true;
                        break;
                    }
                    if (h < g) {
                        if (comm_trivial_[static_cast<size_t>(g) * k_ + h]) {
                            std::swap(w[p], w[p + 1]);
                        } else {
                            // g^e h^f -> g^{e-1} h g [g,h] h^{f-1}
                            const auto& c = comm_words_[static_cast<size_t>(g) * k_ + h];
                            std::vector<Syl> repl;
                            if (e > 1) repl.push_back(Syl{g, e - 1});
                            repl.push_back(Syl{h, 1});
                            repl.push_back(Syl{g, 1});
                            repl.insert(repl.end(), c.begin(), c.end());
                            if (f > 1) repl.push_back(Syl{h, f - 1});
                            w.erase(w.begin() + static_cast<std::ptrdiff_t>(p),
                                    w.begin() + static_cast<std::ptrdiff_t>(p) + 2);
                            w.insert(w.begin() + static_cast<std::ptrdiff_t>(p), repl.begin(), repl.end());
                        }
                        changed = true;
                        break;
                    }
                }
            }
            if (!changed) break;
        }
    }

    int32_t mul(int32_t a, int32_t b) const override {
        check_index(a);
        check_index(b);
        thread_local std::vector<int64_t> va, vb;
        thread_local std::vector<Syl> w;
        decode(a, va);
        decode(b, vb);
        w.clear();
        for (int i = 0; i < k_; ++i)
            if (va[static_cast<size_t>(i)]) w.push_back(Syl{i, va[static_cast<size_t>(i)]});
        for (int i = 0; i < k_; ++i)
            if (vb[static_cast<size_t>(i)]) w.push_back(Syl{i, vb[static_cast<size_t>(i)]});
        collect(w);
        thread_local std::vector<int64_t> res;
        res.assign(static_cast<size_t>(k_), 0);
        for (const Syl& s : w) res[static_cast<size_t>(s.g)] = s.e;
        return encode(res);
    }

    int32_t inv(int32_t a) const override {
        check_index(a);
        if (a == identity) return identity;
        return pow_elem(a, single_order(a) - 1);
    }

    std::string backend_name() const override { return "polycyclic"; }

    std::string element_repr(int32_t a) const override {
        std::vector<int64_t> v;
        decode(a, v);
        std::ostringstream out;
        bool any = false;
        for (int i = 0; i < k_; ++i) {
            if (v[static_cast<size_t>(i)] == 0) continue;
            if (any) out << "*";
            out << "g" << (i + 1);
            if (v[static_cast<size_t>(i)] > 1) out << "^" << v[static_cast<size_t>(i)];
            any = true;
        }
        if (!any) return "1";
        return out.str();
    }

    const std::vector<int64_t>& relative_orders() const { return rel_orders_; }
    const std::vector<Syl>& power_word(int i) const { return power_words_[static_cast<size_t>(i)]; }
    const std::vector<Syl>& comm_word(int j, int i) const {
        return comm_words_[static_cast<size_t>(j) * k_ + i];
    }
    int num_gens() const { return k_; }

private:
    void check_consistency() const {
        // Standard overlap checks; together they guarantee that the collected
        // normal forms define a group of order prod(o_i).
        auto fail = [](const char* what) {
            throw std::invalid_argument(std::string("inconsistent pc presentation (") + what + ")");
        };
        for (int a = 0; a < k_; ++a) {
            int32_t ga = gen_elem(a);
            int32_t pa = pow_elem(ga, rel_orders_[static_cast<size_t>(a)]);
            if (mul(pa, ga) != mul(ga, pa)) fail("power overlap");
        }
        for (int b = 0; b < k_; ++b) {
            for (int a = 0; a < b; ++a) {
                int32_t gb = gen_elem(b), ga = gen_elem(a);
                int32_t pb = pow_elem(gb, rel_orders_[static_cast<size_t>(b)]);
                int32_t pa = pow_elem(ga, rel_orders_[static_cast<size_t>(a)]);
                if (mul(pb, ga) != mul(pow_elem(gb, rel_orders_[static_cast<size_t>(b)] - 1), mul(gb, ga)))
                    fail("power-commutator overlap");
                if (mul(mul(gb, ga), pow_elem(ga, rel_orders_[static_cast<size_t>(a)] - 1)) != mul(gb, pa))
                    fail("commutator-power overlap");
            }
        }
        for (int a = 0; a < k_; ++a)
            for (int b = 0; b < a; ++b)
                for (int c = 0; c < b; ++c) {
                    int32_t ga = gen_elem(a), gb = gen_elem(b), gc = gen_elem(c);
                    if (mul(mul(ga, gb), gc) != mul(ga, mul(gb, gc))) fail("associativity overlap");
                }
    }

    int k_ = 0;
    std::vector<int64_t> rel_orders_;
    std::vector<int64_t> strides_;
    std::vector<std::vector<Syl>> power_words_;
    std::vector<std::vector<Syl>> comm_words_;
    std::vector<char> comm_trivial_;
};

// ---------------------------------------------------------------------------
// Cayley-table backend
// ---------------------------------------------------------------------------

class CayleyImpl final : public GroupImpl {
public:
    CayleyImpl(const std::vector<std::vector<int32_t>>& table, std::string nm) {
        name = std::move(nm);
        int64_t n = static_cast<int64_t>(table.size());
        if (n == 0) throw std::invalid_argument("empty Cayley table");
        if (n > kOrderCap) throw std::invalid_argument("Cayley table exceeds order cap");
        order = n;
        table_.resize(static_cast<size_t>(n * n));
        for (int64_t i = 0; i < n; ++i) {
            if (static_cast<int64_t>(table[static_cast<size_t>(i)].size()) != n)
                throw std::invalid_argument("Cayley table is not square");
            for (int64_t j = 0; j < n; ++j) {
                int32_t v = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (v < 0 || v >= n) throw std::invalid_argument("Cayley table entry out of range");
                table_[static_cast<size_t>(i * n + j)] = v;
            }
        }
        // latin square check
        for (int64_t i = 0; i < n; ++i) {
            std::vector<char> row(static_cast<size_t>(n), 0), col(static_cast<size_t>(n), 0);
            for (int64_t j = 0; j < n; ++j) {
                if (row[static_cast<size_t>(table_[static_cast<size_t>(i * n + j)])]++)
                    throw std::invalid_argument("Cayley table row is not a permutation");
                if (col[static_cast<size_t>(table_[static_cast<size_t>(j * n + i)])]++)
                    throw std::invalid_argument("Cayley table column is not a permutation");
            }
        }
        int32_t id = -1;
        for (int32_t e = 0; e < n && id < 0; ++e) {
            bool ok = true;
            for (int32_t a = 0; a < n && ok; ++a)
                ok = table_[static_cast<size_t>(static_cast<int64_t>(e) * n + a)] == a &&
                     table_[static_cast<size_t>(static_cast<int64_t>(a) * n + e)] == a;
            if (ok) id = e;
        }
        if (id < 0) throw std::invalid_argument("Cayley table has no identity");
        identity = id;
        inv_.assign(static_cast<size_t>(n), -1);
        for (int32_t a = 0; a < n; ++a) {
            for (int32_t b = 0; b < n; ++b) {
                if (mul(a, b) == identity && mul(b, a) == identity) {
                    inv_[static_cast<size_t>(a)] = b;
                    break;
                }
            }
            if (inv_[static_cast<size_t>(a)] < 0)
                throw std::invalid_argument("Cayley table element has no two-sided inverse");
        }
        // associativity spot checks (full check is cubic; random triples catch
        // garbage tables in practice)
        uint64_t state = 0x9e3779b97f4a7c15ull;
        auto rnd = [&]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return static_cast<int32_t>(state % static_cast<uint64_t>(n));
        };
        int trials = n <= 24 ? static_cast<int>(n * n) : 512;
        for (int t = 0; t < trials; ++t) {
            int32_t a = rnd(), b = rnd(), c = rnd();
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw std::invalid_argument("Cayley table is not associative");
        }
        // greedy small generating set
        std::vector<int32_t> gens;
        std::vector<int32_t> closed{identity};
        while (static_cast<int64_t>(closed.size()) < order) {
            int32_t next = -1;
            std::vector<char> in(static_cast<size_t>(order), 0);
            for (int32_t x : closed) in[static_cast<size_t>(x)] = 1;
            for (int32_t x = 0; x < order; ++x)
                if (!in[static_cast<size_t>(x)]) { next = x; break; }
            gens.push_back(next);
            closed = close_under(gens);
        }
        generator_ids = gens;
    }

    int32_t mul(int32_t a, int32_t b) const override {
        check_index(a);
        check_index(b);
        return table_[static_cast<size_t>(static_cast<int64_t>(a) * order + b)];
    }

    int32_t inv(int32_t a) const override {
        check_index(a);
        return inv_[static_cast<size_t>(a)];
    }

    std::string backend_name() const override { return "cayley-table"; }

private:
    std::vector<int32_t> table_;
    std::vector<int32_t> inv_;
};

// ---------------------------------------------------------------------------
// Direct-product backend
// ---------------------------------------------------------------------------

class ProductImpl final : public GroupImpl {
public:
    ProductImpl(Group a, Group b, std::string nm) : a_(std::move(a)), b_(std::move(b)) {
        name = std::move(nm);
        if (!a_.valid() || !b_.valid()) throw std::invalid_argument("invalid product factor");
        int64_t n;
        if (__builtin_mul_overflow(a_.order(), b_.order(), &n) || n > 10'000'000)
            throw std::invalid_argument("direct product too large to enumerate");
        order = n;
        identity = encode(a_.identity().value(), b_.identity().value());
        for (const ElementId& g : a_.generators())
            generator_ids.push_back(encode(g.value(), b_.identity().value()));
        for (const ElementId& g : b_.generators())
            generator_ids.push_back(encode(a_.identity().value(), g.value()));
    }

    int32_t encode(int32_t ia, int32_t ib) const {
        return static_cast<int32_t>(static_cast<int64_t>(ia) * b_.order() + ib);
    }
    std::pair<int32_t, int32_t> decode(int32_t x) const {
        return {static_cast<int32_t>(x / b_.order()), static_cast<int32_t>(x % b_.order())};
    }

    int32_t mul(int32_t x, int32_t y) const override {
        check_index(x);
        check_index(y);
        auto [xa, xb] = decode(x);
        auto [ya, yb] = decode(y);
        return encode(a_.multiply(ElementId(xa), ElementId(ya)).value(),
                      b_.multiply(ElementId(xb), ElementId(yb)).value());
    }

    int32_t inv(int32_t x) const override {
        check_index(x);
        auto [xa, xb] = decode(x);
        return encode(a_.inverse(ElementId(xa)).value(), b_.inverse(ElementId(xb)).value());
    }

    int64_t native_order(int32_t x) const override {
        auto [xa, xb] = decode(x);
        return lcm64(a_.element_order(ElementId(xa)), b_.element_order(ElementId(xb)));
    }

    int64_t native_exponent() const override { return lcm64(a_.exponent(), b_.exponent()); }

    std::string backend_name() const override { return "direct-product"; }

    std::string element_repr(int32_t x) const override {
        auto [xa, xb] = decode(x);
        return "(" + a_.element_repr(ElementId(xa)) + ", " + b_.element_repr(ElementId(xb)) + ")";
    }

    Group a_, b_;
};

// ---------------------------------------------------------------------------
// Induced-subgroup backend
// ---------------------------------------------------------------------------

class SubgroupImpl final : public GroupImpl {
public:
    SubgroupImpl(Group parent, std::vector<int32_t> members, std::vector<int32_t> gens,
                 std::string nm)
        : parent_(std::move(parent)), members_(std::move(members)) {
        name = std::move(nm);
        order = static_cast<int64_t>(members_.size());
        to_sub_.assign(static_cast<size_t>(parent_.order()), -1);
        for (int32_t i = 0; i < order; ++i)
            to_sub_[static_cast<size_t>(members_[static_cast<size_t>(i)])] = i;
        identity = to_sub_[static_cast<size_t>(parent_.identity().value())];
        for (int32_t g : gens) generator_ids.push_back(to_sub_[static_cast<size_t>(g)]);
        if (generator_ids.empty()) generator_ids.push_back(identity);
    }

    int32_t mul(int32_t a, int32_t b) const override {
        check_index(a);
        check_index(b);
        int32_t p = parent_.multiply(ElementId(members_[static_cast<size_t>(a)]),
                                     ElementId(members_[static_cast<size_t>(b)]))
                        .value();
        return to_sub_[static_cast<size_t>(p)];
    }

    int32_t inv(int32_t a) const override {
        check_index(a);
        int32_t p = parent_.inverse(ElementId(members_[static_cast<size_t>(a)])).value();
        return to_sub_[static_cast<size_t>(p)];
    }

    int64_t native_order(int32_t a) const override {
        return parent_.element_order(ElementId(members_[static_cast<size_t>(a)]));
    }

    std::string backend_name() const override { return "induced-subgroup"; }

    std::string element_repr(int32_t a) const override {
        return parent_.element_repr(ElementId(members_[static_cast<size_t>(a)]));
    }

    Group parent_;
    std::vector<int32_t> members_;
    std::vector<int32_t> to_sub_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Group facade
// ---------------------------------------------------------------------------

namespace {
const detail::GroupImpl& impl_of(const std::shared_ptr<const detail::GroupImpl>& p) {
    if (!p) throw std::logic_error("operation on an empty Group handle");
    return *p;
}
}  // namespace

#define FSZ_IMPL impl_of(impl_)

int64_t Group::order() const { return FSZ_IMPL.order; }
const std::string& Group::name() const { return FSZ_IMPL.name; }
std::string Group::backend() const { return FSZ_IMPL.backend_name(); }
ElementId Group::identity() const { return ElementId(FSZ_IMPL.identity); }

ElementId Group::multiply(ElementId a, ElementId b) const {
    return ElementId(FSZ_IMPL.mul(a.value(), b.value()));
}

ElementId Group::inverse(ElementId a) const { return ElementId(FSZ_IMPL.inv(a.value())); }

ElementId Group::power(ElementId a, int64_t k) const {
    return ElementId(FSZ_IMPL.pow_elem(a.value(), k));
}

ElementId Group::conjugate(ElementId x, ElementId by) const {
    const auto& g = FSZ_IMPL;
    return ElementId(g.mul(g.mul(g.inv(by.value()), x.value()), by.value()));
}

bool Group::commute(ElementId a, ElementId b) const {
    const auto& g = FSZ_IMPL;
    return g.mul(a.value(), b.value()) == g.mul(b.value(), a.value());
}

int64_t Group::element_order(ElementId a) const {
    FSZ_IMPL.check_index(a.value());
    return FSZ_IMPL.orders_table()[static_cast<size_t>(a.value())];
}

const std::vector<int64_t>& Group::element_orders() const { return FSZ_IMPL.orders_table(); }

int64_t Group::exponent() const { return FSZ_IMPL.exponent_value(); }

bool Group::is_abelian() const { return FSZ_IMPL.abelian(); }

std::vector<ElementId> Group::generators() const {
    const auto& raw = FSZ_IMPL.generator_ids;
    std::vector<ElementId> wrapped;
    wrapped.reserve(raw.size());
    for (int32_t g : raw) wrapped.push_back(ElementId(g));
    return wrapped;
}

std::string Group::element_repr(ElementId a) const {
    FSZ_IMPL.check_index(a.value());
    return FSZ_IMPL.element_repr(a.value());
}

const std::vector<ConjClass>& Group::conjugacy_classes() const { return FSZ_IMPL.classes(); }

int Group::class_of(ElementId a) const { return FSZ_IMPL.class_index_of(a.value()); }

const std::vector<ElementId>& Group::class_centralizer(int class_index) const {
    return FSZ_IMPL.class_centralizer(class_index);
}

std::vector<ElementId> Group::centralizer(std::span<const ElementId> s) const {
    if (s.empty()) throw std::invalid_argument("centralizer of an empty set");
    const auto& g = FSZ_IMPL;
    std::vector<ElementId> out;
    for (int32_t x = 0; x < g.order; ++x) {
        bool ok = true;
        for (const ElementId& u : s) {
            if (g.mul(x, u.value()) != g.mul(u.value(), x)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(ElementId(x));
    }
    return out;
}

std::vector<ElementId> Group::centralizer(ElementId u) const {
    return centralizer(std::span<const ElementId>(&u, 1));
}

std::vector<ElementId> Group::generated_subgroup(std::span<const ElementId> gens) const {
    const auto& g = FSZ_IMPL;
    std::vector<int32_t> raw;
    for (const ElementId& e : gens) {
        g.check_index(e.value());
        raw.push_back(e.value());
    }
    std::vector<int32_t> closed = g.close_under(std::move(raw));
    std::vector<ElementId> out;
    out.reserve(closed.size());
    for (int32_t x : closed) out.push_back(ElementId(x));
    return out;
}

Group Group::subgroup(std::vector<ElementId> members, std::string name) const {
    const auto& g = FSZ_IMPL;
    std::vector<int32_t> mem;
    mem.reserve(members.size());
    for (const ElementId& e : members) {
        g.check_index(e.value());
        mem.push_back(e.value());
    }
    std::sort(mem.begin(), mem.end());
    mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
    if (mem.empty()) throw std::invalid_argument("subgroup: empty subset");

    // incremental generating set, then verify the closure is exactly the set
    std::vector<int32_t> gens;
    std::vector<int32_t> closed = g.close_under({});
    std::vector<char> in_closed(static_cast<size_t>(g.order), 0);
    for (int32_t x : closed) in_closed[static_cast<size_t>(x)] = 1;
    for (int32_t m : mem) {
        if (!in_closed[static_cast<size_t>(m)]) {
            gens.push_back(m);
            closed = g.close_under(gens);
            std::fill(in_closed.begin(), in_closed.end(), 0);
            for (int32_t x : closed) in_closed[static_cast<size_t>(x)] = 1;
        }
    }
    if (closed != mem) {
        // closure contains identity; a set missing it or not closed fails here
        throw std::invalid_argument("subgroup: subset is not closed under the group law");
    }
    if (name.empty())
        name = "subgroup(order=" + std::to_string(mem.size()) + ") of " + g.name;
    auto impl = std::make_shared<detail::SubgroupImpl>(*this, std::move(mem), std::move(gens),
                                                       std::move(name));
    return Group(impl);
}

ElementId Group::subgroup_to_parent(ElementId a) const {
    auto* s = dynamic_cast<const detail::SubgroupImpl*>(impl_.get());
    if (!s) throw std::invalid_argument("not an induced subgroup");
    s->check_index(a.value());
    return ElementId(s->members_[static_cast<size_t>(a.value())]);
}

ElementId Group::parent_to_subgroup(ElementId parent_elt) const {
    auto* s = dynamic_cast<const detail::SubgroupImpl*>(impl_.get());
    if (!s) throw std::invalid_argument("not an induced subgroup");
    if (parent_elt.value() < 0 || parent_elt.value() >= static_cast<int32_t>(s->to_sub_.size()))
        throw std::invalid_argument("parent element out of range");
    int32_t idx = s->to_sub_[static_cast<size_t>(parent_elt.value())];
    if (idx < 0) throw std::invalid_argument("element does not belong to the subgroup");
    return ElementId(idx);
}

const PowerClassPartition& Group::rational_power_classes() const { return FSZ_IMPL.power_partition(); }

std::shared_ptr<const Group::PowerData> Group::power_data(int64_t n) const {
    return FSZ_IMPL.power_data(n);
}

Group Group::from_permutations(int degree, const std::vector<std::vector<int>>& gen_images,
                               std::string name) {
    return Group(std::make_shared<detail::PermImpl>(degree, gen_images, std::move(name)));
}

Group Group::from_cayley_table(const std::vector<std::vector<int32_t>>& table, std::string name) {
    return Group(std::make_shared<detail::CayleyImpl>(table, std::move(name)));
}

Group Group::from_pc_presentation(const PcPresentation& pres, std::string name) {
    return Group(std::make_shared<detail::PcImpl>(pres, std::move(name)));
}

Group Group::direct_product(const Group& a, const Group& b, std::string name) {
    if (name.empty()) name = a.name() + " x " + b.name();
    return Group(std::make_shared<detail::ProductImpl>(a, b, std::move(name)));
}

int Group::permutation_degree() const {
    auto* p = dynamic_cast<const detail::PermImpl*>(impl_.get());
    if (!p) throw std::invalid_argument("not a permutation group");
    return p->degree_;
}

int Group::permutation_image(ElementId a, int point) const {
    auto* p = dynamic_cast<const detail::PermImpl*>(impl_.get());
    if (!p) throw std::invalid_argument("not a permutation group");
    p->check_index(a.value());
    if (point < 0 || point >= p->degree_) throw std::invalid_argument("point out of range");
    return p->images(a.value())[point];
}

std::pair<ElementId, ElementId> Group::product_components(ElementId a) const {
    auto* p = dynamic_cast<const detail::ProductImpl*>(impl_.get());
    if (!p) throw std::invalid_argument("not a direct product");
    p->check_index(a.value());
    auto [x, y] = p->decode(a.value());
    return {ElementId(x), ElementId(y)};
}

ElementId Group::product_id(ElementId a, ElementId b) const {
    auto* p = dynamic_cast<const detail::ProductImpl*>(impl_.get());
    if (!p) throw std::invalid_argument("not a direct product");
    p->a_.impl_->check_index(a.value());
    p->b_.impl_->check_index(b.value());
    return ElementId(p->encode(a.value(), b.value()));
}

std::pair<Group, Group> Group::product_factors() const {
    auto* p = dynamic_cast<const detail::ProductImpl*>(impl_.get());
    if (!p) throw std::invalid_argument("not a direct product");
    return {p->a_, p->b_};
}

#undef FSZ_IMPL

}  // namespace fszlab
