#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fszlab/cyclotomic.hpp"
#include "fszlab/group.hpp"

namespace fszlab {

/// For a fixed class representative u and degree n, the class function
/// zeta_n on C(u): g -> |G_n(u, g)| where
/// G_n(u, g) = { a in G : a^n = (a u^{-1})^n = g }.
/// counts is dense over the whole enumeration; it vanishes off C(u).
struct ZetaTable {
    ElementId u;
    int64_t n = 0;
    std::vector<int64_t> counts;       // indexed by element id
    std::vector<ElementId> support;    // the centralizer C(u), sorted
    int64_t total = 0;                 // |G_n(u)| = sum of counts

    int64_t count(ElementId g) const { return counts[static_cast<size_t>(g.value())]; }
};

/// |G_n(u, g)|.  Zero whenever u and g do not commute.
int64_t count_gn(const Group& g, ElementId u, ElementId target, int64_t n);

/// Full zeta_n table for one class representative, via the bucket algorithm
/// (one pass over the precomputed n-th power map).
ZetaTable zeta_table(const Group& g, ElementId u, int64_t n);

enum class DegreeMode { Full, Reduced };

/// Degrees n at which the counting criterion still needs checking:
/// Full   - every divisor of exponent(G);
/// Reduced- divisors of the exponent except {1,2,3,4,6} (automatic) and
///          except the exponent itself (zeta_e is supported on the identity).
std::vector<int64_t> relevant_degrees(const Group& g, DegreeMode mode);

/// One failed instance of the counting criterion |G_n(u,g)| = |G_n(u,g^m)|.
struct FszWitness {
    int u_class = -1;          // conjugacy class index of u
    int64_t u_order = 0;
    int64_t u_class_size = 0;
    ElementId g;               // leader of the violated power-class block
    int64_t g_order = 0;
    int64_t m = 0;             // exponent with mismatching count at g^m
    ElementId g_m;
    int64_t count_g = 0;
    int64_t count_g_m = 0;
    int ambient_class = -1;    // FSZ+ mode: class of h whose centralizer failed
};

enum class DegreeMethod { Counted, OrderCertificate };

/// Outcome of the counting test at one degree (for one group: the ambient
/// group in plain mode, a centralizer subgroup in plus mode).
struct DegreeVerdict {
    int64_t n = 0;
    bool pass = true;
    DegreeMethod method = DegreeMethod::Counted;
    std::vector<FszWitness> witnesses;
    int ambient_class = -1;    // plus mode: which centralizer this ran in
    int64_t subgroup_order = 0;
};

struct FszVerdict {
    std::string group_name;
    int64_t order = 0;
    int64_t exponent = 0;
    bool plus_mode = false;
    bool pass = true;
    std::vector<int64_t> degrees_tested;  // sorted union
    std::vector<DegreeVerdict> results;
};

struct FszOptions {
    bool fail_fast = false;
    int workers = 1;
    /// Apply the element-order sufficiency certificate before counting.
    bool use_order_certificate = false;
    DegreeMode degree_mode = DegreeMode::Reduced;
    /// Explicit degree list; overrides degree_mode when set.
    std::optional<std::vector<int64_t>> degrees;
};

/// Counting test at a single degree.
FszVerdict is_fsz_n(const Group& g, int64_t n, const FszOptions& opts = {});

/// plus = false: conjunction of is_fsz_n over the configured degrees.
/// plus = true : for every nonidentity class representative h, the plain test
/// on the centralizer subgroup C(h) over its own degrees.
FszVerdict is_fsz(const Group& g, bool plus, const FszOptions& opts = {});

enum class OrderCertificate { CertifiedFszPlusN, Inconclusive };

/// Sufficiency test: certified when o(a^n)/o(a^{n^2}) lies in {1,2,3,4,6}
/// for every element a (the ratio equals gcd(o(a^n), n)).  Never refutes.
OrderCertificate sufficient_by_orders(const Group& g, int64_t n);

/// True iff G_n(u) is closed under every power map a -> a^m with
/// gcd(m, |G|) = 1.
bool power_map_closure_check(const Group& g, ElementId u, int64_t n);

/// Verifies that a -> a^m (m = 1 mod n) or a -> (u a^{-1})^{-m} (m = -1 mod n)
/// maps G_n(u, g) bijectively onto G_n(u, g^m).  Preconditions: ug = gu,
/// gcd(m, |G|) = 1, m = +-1 mod n.
bool coprime_power_bijection_check(const Group& g, ElementId u, ElementId target, int64_t n, int64_t m);

/// Inner product <Res_{<g>} zeta_n, lambda_j> where lambda_j(g^k) =
/// zeta_{o(g)}^{jk}; exact value in Q(zeta_{o(g)}).  Requires g in C(u).
CycNum cyclic_restriction_indicator(const Group& g, ElementId u, ElementId target, int64_t n,
                                    int64_t j);

struct LabeledIndicator {
    std::string eta_label;  // exponents of the character on the cyclic basis
    CycNum value;
};

/// All indicators nu_n(chi_eta) for the irreducible (linear) characters eta
/// of an abelian centralizer C(u).  Throws std::domain_error when C(u) is
/// not abelian.
std::vector<LabeledIndicator> abelian_centralizer_indicators(const Group& g, ElementId u,
                                                             int64_t n);

/// Checks G_n(u) = G_d(u) for d = gcd(n, exponent) and, when C(u) is abelian,
/// that nu_n is the Galois transport (zeta -> zeta^{n/d}) of nu_d.
bool galois_transport_check(const Group& g, ElementId u, int64_t n);

/// Basis of an abelian group: independent generators with their orders and a
/// discrete-log table (exponent vectors for every element).
struct AbelianBasis {
    std::vector<ElementId> basis;
    std::vector<int64_t> orders;
    std::vector<std::vector<int64_t>> dlog;  // dlog[element][i] in [0, orders[i])
};

AbelianBasis abelian_basis(const Group& g);

}  // namespace fszlab
