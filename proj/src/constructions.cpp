#include "fszlab/constructions.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace fszlab {

namespace {

int64_t checked_order(int64_t v, const char* what) {
    if (v <= 0 || v > kOrderCap)
        throw std::invalid_argument(std::string(what) + ": resulting order " + std::to_string(v) +
                                    " outside the supported range [1, " + std::to_string(kOrderCap) + "]");
    return v;
}

int64_t ipow_capped(int64_t base, int64_t exp, int64_t cap) {
    int64_t r = 1;
    for (int64_t i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r) || r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

FamilySpec::Family family_from_name(const std::string& name) {
    if (name == "cyclic") return FamilySpec::Family::Cyclic;
    if (name == "abelian") return FamilySpec::Family::Abelian;
    if (name == "dihedral") return FamilySpec::Family::Dihedral;
    if (name == "symmetric") return FamilySpec::Family::Symmetric;
    if (name == "alternating") return FamilySpec::Family::Alternating;
    if (name == "heisenberg") return FamilySpec::Family::Heisenberg;
    if (name == "wreath-cyclic") return FamilySpec::Family::WreathCyclic;
    throw std::invalid_argument("unknown group family: " + name);
}

std::string family_name(FamilySpec::Family f) {
    switch (f) {
        case FamilySpec::Family::Cyclic: return "cyclic";
        case FamilySpec::Family::Abelian: return "abelian";
        case FamilySpec::Family::Dihedral: return "dihedral";
        case FamilySpec::Family::Symmetric: return "symmetric";
        case FamilySpec::Family::Alternating: return "alternating";
        case FamilySpec::Family::Heisenberg: return "heisenberg";
        case FamilySpec::Family::WreathCyclic: return "wreath-cyclic";
    }
    return "?";
}

Group build_family(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto need = [&](size_t n) {
        if (p.size() != n)
            throw std::invalid_argument(family_name(spec.family) + ": expected " + std::to_string(n) +
                                        " parameter(s), got " + std::to_string(p.size()));
    };
    switch (spec.family) {
        case FamilySpec::Family::Cyclic:
            need(1);
            return build_cyclic(p[0]);
        case FamilySpec::Family::Abelian:
            if (p.empty()) throw std::invalid_argument("abelian: needs at least one invariant factor");
            return build_abelian(p);
        case FamilySpec::Family::Dihedral:
            need(1);
            return build_dihedral(p[0]);
        case FamilySpec::Family::Symmetric:
            need(1);
            return build_symmetric(p[0]);
        case FamilySpec::Family::Alternating:
            need(1);
            return build_alternating(p[0]);
        case FamilySpec::Family::Heisenberg:
            need(1);
            return build_heisenberg(p[0]);
        case FamilySpec::Family::WreathCyclic:
            need(2);
            return build_wreath_cyclic(build_cyclic(p[0]), p[1]);
    }
    throw std::logic_error("unreachable family");
}

Group build_cyclic(int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclic: order must be positive");
    std::string name = "cyclic(" + std::to_string(n) + ")";
    if (n == 1) return Group::from_pc_presentation(PcPresentation{}, std::move(name));
    checked_order(n, "cyclic");
    PcPresentation pres;
    pres.relative_orders = {n};
    return Group::from_pc_presentation(pres, std::move(name));
}

Group build_abelian(const std::vector<int64_t>& invariant_factors) {
    std::string name = "abelian(";
    for (size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) name += ",";
        name += std::to_string(invariant_factors[i]);
    }
    name += ")";
    PcPresentation pres;
    int64_t total = 1;
    for (int64_t d : invariant_factors) {
        if (d < 1) throw std::invalid_argument("abelian: invariant factors must be positive");
        if (d == 1) continue;
        pres.relative_orders.push_back(d);
        total *= d;
        checked_order(total, "abelian");
    }
    return Group::from_pc_presentation(pres, std::move(name));
}

Group build_dihedral(int64_t n) {
    if (n < 1) throw std::invalid_argument("dihedral: parameter must be positive");
    checked_order(2 * n, "dihedral");
    std::string name = "dihedral(" + std::to_string(n) + ")";
    if (n <= 2) {
        PcPresentation pres;
        pres.relative_orders.assign(static_cast<size_t>(n), 2);
        return Group::from_pc_presentation(pres, std::move(name));
    }
    int deg = static_cast<int>(n);
    std::vector<int> rot(static_cast<size_t>(deg)), refl(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        rot[static_cast<size_t>(i)] = (i + 1) % deg;
        refl[static_cast<size_t>(i)] = (deg - i) % deg;
    }
    return Group::from_permutations(deg, {rot, refl}, std::move(name));
}

Group build_symmetric(int64_t n) {
    if (n < 1) throw std::invalid_argument("symmetric: parameter must be positive");
    std::string name = "symmetric(" + std::to_string(n) + ")";
    int64_t order = 1;
    for (int64_t i = 2; i <= n; ++i) order *= i;
    checked_order(order, "symmetric");
    if (n == 1) return Group::from_pc_presentation(PcPresentation{}, std::move(name));
    if (n == 2) {
        PcPresentation pres;
        pres.relative_orders = {2};
        return Group::from_pc_presentation(pres, std::move(name));
    }
    int deg = static_cast<int>(n);
    std::vector<int> swap01(static_cast<size_t>(deg)), cycle(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        swap01[static_cast<size_t>(i)] = i;
        cycle[static_cast<size_t>(i)] = (i + 1) % deg;
    }
    swap01[0] = 1;
    swap01[1] = 0;
    return Group::from_permutations(deg, {swap01, cycle}, std::move(name));
}

Group build_alternating(int64_t n) {
    if (n < 1) throw std::invalid_argument("alternating: parameter must be positive");
    std::string name = "alternating(" + std::to_string(n) + ")";
    int64_t order = 1;
    for (int64_t i = 2; i <= n; ++i) order *= i;
    if (n >= 2) order /= 2;
    checked_order(order, "alternating");
    if (n <= 2) return Group::from_pc_presentation(PcPresentation{}, std::move(name));
    int deg = static_cast<int>(n);
    std::vector<int> three(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) three[static_cast<size_t>(i)] = i;
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    if (n == 3) return Group::from_permutations(deg, {three}, std::move(name));
    std::vector<int> big(static_cast<size_t>(deg));
    if (n % 2 == 1) {
        for (int i = 0; i < deg; ++i) big[static_cast<size_t>(i)] = (i + 1) % deg;  // n-cycle, even perm
    } else {
        big[0] = 0;
        for (int i = 1; i < deg; ++i) big[static_cast<size_t>(i)] = i % (deg - 1) + 1;  // (n-1)-cycle
    }
    return Group::from_permutations(deg, {three, big}, std::move(name));
}

Group build_heisenberg(int64_t p) {
    if (p < 3) throw std::invalid_argument("heisenberg: needs an odd prime (p = 2 is dihedral(4))");
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("heisenberg: parameter must be prime");
    checked_order(p * p * p, "heisenberg");
    PcPresentation pres;
    pres.relative_orders = {p, p, p};
    pres.comm_words[{2, 1}] = {0, 0, 1};  // [g2, g1] = g3, g3 central
    return Group::from_pc_presentation(pres, "heisenberg(" + std::to_string(p) + ")");
}

Group build_wreath_cyclic(const Group& base, int64_t r) {
    if (r < 1) throw std::invalid_argument("wreath: r must be positive");
    int64_t b = base.order();
    int64_t total = ipow_capped(b, r, kOrderCap);
    if (total > kOrderCap || __builtin_mul_overflow(total, r, &total) || total > kOrderCap)
        throw std::invalid_argument("wreath: order exceeds the cap of " + std::to_string(kOrderCap));
    int64_t deg64 = b * r;
    if (deg64 > 65535) throw std::invalid_argument("wreath: permutation degree too large");
    int deg = static_cast<int>(deg64);
    std::vector<std::vector<int>> gens;
    // base generators acting regularly on block 0
    for (const ElementId& g : base.generators()) {
        std::vector<int> img(static_cast<size_t>(deg));
        for (int i = 0; i < deg; ++i) img[static_cast<size_t>(i)] = i;
        for (int32_t x = 0; x < b; ++x)
            img[static_cast<size_t>(x)] = base.multiply(ElementId(x), g).value();
        gens.push_back(std::move(img));
    }
    // block rotation
    std::vector<int> rot(static_cast<size_t>(deg));
    for (int blk = 0; blk < r; ++blk)
        for (int x = 0; x < b; ++x)
            rot[static_cast<size_t>(blk * b + x)] = static_cast<int>(((blk + 1) % r) * b + x);
    gens.push_back(std::move(rot));
    std::string name = base.name() + " wr cyclic(" + std::to_string(r) + ")";
    Group g = Group::from_permutations(deg, gens, std::move(name));
    if (g.order() != ipow_capped(b, r, kOrderCap) * r)
        throw std::logic_error("wreath construction produced a wrong order");
    return g;
}

Group build_wreath_cyclic(const FamilySpec& base, int64_t r) {
    return build_wreath_cyclic(build_family(base), r);
}

// ---------------------------------------------------------------------------
// GF(q) and PSL(2, q)
// ---------------------------------------------------------------------------

GaloisField::GaloisField(int64_t q) : q_(q) {
    struct FieldDef {
        int64_t q, p;
        int deg;
        std::array<int, 4> irred;  // coefficients c0..c3 of the monic irreducible
    };
    static const FieldDef defs[] = {
        {2, 2, 1, {0, 1, 0, 0}},  {3, 3, 1, {0, 1, 0, 0}},  {5, 5, 1, {0, 1, 0, 0}},
        {7, 7, 1, {0, 1, 0, 0}},  {11, 11, 1, {0, 1, 0, 0}}, {13, 13, 1, {0, 1, 0, 0}},
        {4, 2, 2, {1, 1, 1, 0}},   // x^2 + x + 1
        {9, 3, 2, {1, 0, 1, 0}},   // x^2 + 1
        {8, 2, 3, {1, 1, 0, 1}},   // x^3 + x + 1
    };
    const FieldDef* def = nullptr;
    for (const auto& d : defs)
        if (d.q == q) def = &d;
    if (!def) throw std::invalid_argument("GF(" + std::to_string(q) + ") is not supported");
    p_ = def->p;
    deg_ = def->deg;

    auto digits = [&](int32_t v) {
        std::array<int64_t, 3> c{0, 0, 0};
        for (int i = 0; i < deg_; ++i) {
            c[static_cast<size_t>(i)] = v % p_;
            v = static_cast<int32_t>(v / p_);
        }
        return c;
    };
    auto pack = [&](const std::array<int64_t, 3>& c) {
        int64_t v = 0;
        for (int i = deg_ - 1; i >= 0; --i) v = v * p_ + c[static_cast<size_t>(i)];
        return static_cast<int32_t>(v);
    };

    add_table_.resize(static_cast<size_t>(q * q));
    mul_table_.resize(static_cast<size_t>(q * q));
    for (int32_t a = 0; a < q; ++a) {
        for (int32_t b = 0; b < q; ++b) {
            auto ca = digits(a), cb = digits(b);
            std::array<int64_t, 3> sum{};
            for (int i = 0; i < deg_; ++i)
                sum[static_cast<size_t>(i)] = (ca[static_cast<size_t>(i)] + cb[static_cast<size_t>(i)]) % p_;
            add_table_[static_cast<size_t>(a * q + b)] = pack(sum);
            // polynomial product reduced by the irreducible
            std::array<int64_t, 5> prod{};
            for (int i = 0; i < deg_; ++i)
                for (int j = 0; j < deg_; ++j)
                    prod[static_cast<size_t>(i + j)] =
                        (prod[static_cast<size_t>(i + j)] + ca[static_cast<size_t>(i)] * cb[static_cast<size_t>(j)]) % p_;
            for (int i = 2 * deg_ - 2; i >= deg_; --i) {
                int64_t c = prod[static_cast<size_t>(i)];
                if (c == 0) continue;
                prod[static_cast<size_t>(i)] = 0;
                for (int j = 0; j < deg_; ++j) {
                    int64_t sub = (c * def->irred[static_cast<size_t>(j)]) % p_;
                    size_t pos = static_cast<size_t>(i - deg_ + j);
                    prod[pos] = ((prod[pos] - sub) % p_ + p_) % p_;
                }
            }
            std::array<int64_t, 3> res{prod[0], prod[1], prod[2]};
            mul_table_[static_cast<size_t>(a * q + b)] = pack(res);
        }
    }
    inv_table_.assign(static_cast<size_t>(q), -1);
    for (int32_t a = 1; a < q; ++a)
        for (int32_t b = 1; b < q; ++b)
            if (mul_table_[static_cast<size_t>(a * q + b)] == 1) {
                inv_table_[static_cast<size_t>(a)] = b;
                break;
            }
}

int32_t GaloisField::add(int32_t a, int32_t b) const {
    return add_table_[static_cast<size_t>(a * q_ + b)];
}

int32_t GaloisField::neg(int32_t a) const {
    for (int32_t b = 0; b < q_; ++b)
        if (add_table_[static_cast<size_t>(a * q_ + b)] == 0) return b;
    throw std::logic_error("GF: no negative");
}

int32_t GaloisField::mul(int32_t a, int32_t b) const {
    return mul_table_[static_cast<size_t>(a * q_ + b)];
}

int32_t GaloisField::inv(int32_t a) const {
    if (a == 0) throw std::invalid_argument("GF: inverse of zero");
    return inv_table_[static_cast<size_t>(a)];
}

Group build_psl2(int64_t q) {
    static const int64_t supported[] = {2, 3, 4, 5, 7, 8, 9, 11, 13};
    if (std::find(std::begin(supported), std::end(supported), q) == std::end(supported))
        throw std::invalid_argument("psl2: unsupported field size " + std::to_string(q));
    GaloisField gf(q);
    int deg = static_cast<int>(q) + 1;  // projective line: [x:1] for x in GF(q), plus [1:0]
    const int inf = static_cast<int>(q);

    auto act = [&](const std::array<int32_t, 4>& m) {
        // column action [x:y] -> [a x + b y : c x + d y], m = [[a,b],[c,d]]
        std::vector<int> img(static_cast<size_t>(deg));
        for (int pt = 0; pt < deg; ++pt) {
            int32_t x, y;
            if (pt == inf) {
                x = 1;
                y = 0;
            } else {
                x = pt;
                y = 1;
            }
            int32_t nx = gf.add(gf.mul(m[0], x), gf.mul(m[1], y));
            int32_t ny = gf.add(gf.mul(m[2], x), gf.mul(m[3], y));
            img[static_cast<size_t>(pt)] = (ny == 0) ? inf : gf.mul(nx, gf.inv(ny));
        }
        return img;
    };

    // transvections u(a) = [[1,a],[0,1]] and l(a) = [[1,0],[a,1]] for a
    // ranging over an additive generating set of GF(q): the powers
    // gamma^0..gamma^{deg-1} of the field generator
    int ext_degree = 0;
    for (int64_t qq = gf.size(); qq > 1; qq /= gf.characteristic()) ++ext_degree;
    std::vector<int32_t> basis;
    int32_t cur = 1;
    for (int i = 0; i < ext_degree; ++i) {
        basis.push_back(cur);
        cur = gf.mul(cur, gf.generator());
    }
    std::vector<std::vector<int>> gens;
    for (int32_t a : basis) {
        gens.push_back(act({1, a, 0, 1}));
        gens.push_back(act({1, 0, a, 1}));
    }
    Group g = Group::from_permutations(deg, gens, "psl2(" + std::to_string(q) + ")");
    int64_t expected = q * (q - 1) * (q + 1) / std::gcd<int64_t>(2, q - 1);
    if (g.order() != expected)
        throw std::logic_error("psl2 construction produced order " + std::to_string(g.order()) +
                               ", expected " + std::to_string(expected));
    return g;
}

// ---------------------------------------------------------------------------
// File formats
// ---------------------------------------------------------------------------

namespace {

struct Line {
    std::string text;
    int number;
};

std::vector<Line> read_meaningful_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        // trim
        size_t b = raw.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        size_t e = raw.find_last_not_of(" \t\r\n");
        lines.push_back({raw.substr(b, e - b + 1), number});
    }
    return lines;
}

std::vector<int64_t> parse_ints(const std::string& text, int line) {
    std::istringstream ss(text);
    std::vector<int64_t> out;
    std::string tok;
    while (ss >> tok) {
        try {
            size_t used = 0;
            int64_t v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("expected an integer, got '" + tok + "'", line);
        }
    }
    return out;
}

}  // namespace

Group parse_group(std::istream& in, const std::string& display_name) {
    std::vector<Line> lines = read_meaningful_lines(in);
    if (lines.empty()) throw parse_error("empty group file", 1);

    std::istringstream head(lines[0].text);
    std::string kind;
    head >> kind;

    if (kind == "perm") {
        int64_t degree;
        if (!(head >> degree) || degree < 0)
            throw parse_error("perm header needs a nonnegative degree", lines[0].number);
        std::string extra;
        if (head >> extra) throw parse_error("unexpected token after degree", lines[0].number);
        std::vector<std::vector<int>> gens;
        for (size_t li = 1; li < lines.size(); ++li) {
            std::vector<int64_t> vals = parse_ints(lines[li].text, lines[li].number);
            if (static_cast<int64_t>(vals.size()) != degree)
                throw parse_error("generator line must list exactly " + std::to_string(degree) +
                                      " images",
                                  lines[li].number);
            std::vector<int> img(static_cast<size_t>(degree));
            for (size_t i = 0; i < vals.size(); ++i) {
                if (vals[i] < 1 || vals[i] > degree)
                    throw parse_error("image out of range (points are 1-based)", lines[li].number);
                img[i] = static_cast<int>(vals[i] - 1);
            }
            // permutation-ness is re-validated by the constructor; do a local
            // check to report the line number
            std::vector<char> seen(static_cast<size_t>(degree), 0);
            for (int v : img) {
                if (seen[static_cast<size_t>(v)])
                    throw parse_error("image list is not a permutation", lines[li].number);
                seen[static_cast<size_t>(v)] = 1;
            }
            gens.push_back(std::move(img));
        }
        return Group::from_permutations(static_cast<int>(degree), gens, display_name);
    }

    if (kind == "pc") {
        int64_t k;
        if (!(head >> k) || k < 0) throw parse_error("pc header needs a generator count", lines[0].number);
        if (lines.size() < 2 && k > 0) throw parse_error("missing relative orders line", lines[0].number);
        PcPresentation pres;
        size_t next = 1;
        if (k > 0) {
            pres.relative_orders = parse_ints(lines[1].text, lines[1].number);
            if (static_cast<int64_t>(pres.relative_orders.size()) != k)
                throw parse_error("expected " + std::to_string(k) + " relative orders", lines[1].number);
            next = 2;
        }
        for (size_t li = next; li < lines.size(); ++li) {
            std::istringstream ls(lines[li].text);
            std::string tag;
            ls >> tag;
            auto read_indices = [&](int count) {
                std::vector<int64_t> idx;
                for (int c = 0; c < count; ++c) {
                    int64_t v;
                    if (!(ls >> v)) throw parse_error("missing generator index", lines[li].number);
                    if (v < 1 || v > k) throw parse_error("generator index out of range", lines[li].number);
                    idx.push_back(v);
                }
                std::string colon;
                if (!(ls >> colon) || colon != ":")
                    throw parse_error("expected ':' before the relation word", lines[li].number);
                return idx;
            };
            std::string rest;
            if (tag == "p") {
                auto idx = read_indices(1);
                std::getline(ls, rest);
                std::vector<int64_t> word = parse_ints(rest, lines[li].number);
                if (static_cast<int64_t>(word.size()) != k)
                    throw parse_error("relation word must have " + std::to_string(k) + " exponents",
                                      lines[li].number);
                if (pres.power_words.count(static_cast<int>(idx[0])))
                    throw parse_error("duplicate power relation", lines[li].number);
                pres.power_words[static_cast<int>(idx[0])] = std::move(word);
            } else if (tag == "c") {
                auto idx = read_indices(2);
                if (idx[0] <= idx[1])
                    throw parse_error("commutator relation needs j > i", lines[li].number);
                std::getline(ls, rest);
                std::vector<int64_t> word = parse_ints(rest, lines[li].number);
                if (static_cast<int64_t>(word.size()) != k)
                    throw parse_error("relation word must have " + std::to_string(k) + " exponents",
                                      lines[li].number);
                std::pair<int, int> key{static_cast<int>(idx[0]), static_cast<int>(idx[1])};
                if (pres.comm_words.count(key))
                    throw parse_error("duplicate commutator relation", lines[li].number);
                pres.comm_words[key] = std::move(word);
            } else {
                throw parse_error("unknown relation tag '" + tag + "' (expected 'p' or 'c')",
                                  lines[li].number);
            }
        }
        try {
            return Group::from_pc_presentation(pres, display_name);
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what(), lines[0].number);
        }
    }

    throw parse_error("unknown group format '" + kind + "' (expected 'perm' or 'pc')",
                      lines[0].number);
}

Group load_group(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group file: " + path);
    std::string name = path;
    auto slash = name.find_last_of("/\\");
    if (slash != std::string::npos) name = name.substr(slash + 1);
    return parse_group(in, name);
}

std::string dump_group(const Group& g) {
    std::ostringstream out;
    if (g.backend() == "permutation") {
        int deg = g.permutation_degree();
        out << "perm " << deg << "\n";
        for (const ElementId& gen : g.generators()) {
            for (int i = 0; i < deg; ++i) {
                if (i) out << " ";
                out << (g.permutation_image(gen, i) + 1);
            }
            out << "\n";
        }
        return out.str();
    }
    if (g.backend() == "polycyclic") {
        // reconstruct the presentation from generator arithmetic
        std::vector<ElementId> gens = g.generators();
        int k = static_cast<int>(gens.size());
        out << "pc " << k << "\n";
        std::vector<int64_t> rel(static_cast<size_t>(k));
        // relative order of g_i = order of g_i in the quotient; for consistent
        // presentations it is recoverable as the least r with g_i^r in
        // <g_{i+1}, ...>; here we use the simpler exact reconstruction from
        // the element encoding: index of g_i equals its stride.
        for (int i = 0; i < k; ++i) {
            int64_t stride_i = gens[static_cast<size_t>(i)].value();
            int64_t above = (i == 0) ? g.order() : gens[static_cast<size_t>(i - 1)].value();
            rel[static_cast<size_t>(i)] = above / stride_i;
        }
        for (int i = 0; i < k; ++i) {
            if (i) out << " ";
            out << rel[static_cast<size_t>(i)];
        }
        out << "\n";
        auto word_of = [&](ElementId e) {
            std::vector<int64_t> w(static_cast<size_t>(k), 0);
            int64_t rest = e.value();
            for (int i = 0; i < k; ++i) {
                int64_t stride_i = gens[static_cast<size_t>(i)].value();
                w[static_cast<size_t>(i)] = rest / stride_i;
                rest %= stride_i;
            }
            return w;
        };
        for (int i = 0; i < k; ++i) {
            ElementId p = g.power(gens[static_cast<size_t>(i)], rel[static_cast<size_t>(i)]);
            if (!g.is_identity(p)) {
                out << "p " << (i + 1) << " :";
                for (int64_t e : word_of(p)) out << " " << e;
                out << "\n";
            }
        }
        for (int j = 1; j < k; ++j) {
            for (int i = 0; i < j; ++i) {
                ElementId gj = gens[static_cast<size_t>(j)], gi = gens[static_cast<size_t>(i)];
                ElementId comm = g.multiply(g.multiply(g.inverse(gj), g.inverse(gi)),
                                            g.multiply(gj, gi));
                if (!g.is_identity(comm)) {
                    out << "c " << (j + 1) << " " << (i + 1) << " :";
                    for (int64_t e : word_of(comm)) out << " " << e;
                    out << "\n";
                }
            }
        }
        return out.str();
    }
    throw std::invalid_argument("dump_group: only permutation and pc groups can be dumped");
}

}  // namespace fszlab
