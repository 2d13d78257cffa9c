#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fszlab/group.hpp"

namespace fszlab {

/// Raised by the group file parser; carries the offending line number.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Specification of a built-in group family.
struct FamilySpec {
    enum class Family { Cyclic, Abelian, Dihedral, Symmetric, Alternating, Heisenberg, WreathCyclic };
    Family family;
    std::vector<int64_t> params;
};

/// Parse "cyclic", "abelian", ... into a family tag; throws on unknown names.
FamilySpec::Family family_from_name(const std::string& name);
std::string family_name(FamilySpec::Family f);

Group build_family(const FamilySpec& spec);
Group build_cyclic(int64_t n);
Group build_abelian(const std::vector<int64_t>& invariant_factors);
Group build_dihedral(int64_t n);         // order 2n
Group build_symmetric(int64_t n);        // order n!
Group build_alternating(int64_t n);      // order n!/2
Group build_heisenberg(int64_t p);       // order p^3, exponent p (odd p only)

/// base wr Z_r as permutations on |base| * r points (base acting regularly on
/// each of r blocks, Z_r rotating the blocks); order |base|^r * r.
Group build_wreath_cyclic(const Group& base, int64_t r);
Group build_wreath_cyclic(const FamilySpec& base, int64_t r);

/// PSL(2, q) as the permutation action of SL_2(GF(q)) on the q+1 points of
/// the projective line.  Supported q: 2, 3, 4, 5, 7, 8, 9, 11, 13.
Group build_psl2(int64_t q);

/// Arithmetic in GF(q) for the small q that build_psl2 needs.  Elements are
/// indices 0..q-1 (polynomial coefficient vectors in base p for extension
/// fields, with a fixed irreducible polynomial per field).
class GaloisField {
public:
    explicit GaloisField(int64_t q);
    int64_t size() const { return q_; }
    int64_t characteristic() const { return p_; }
    int32_t zero() const { return 0; }
    int32_t one() const { return 1; }
    int32_t add(int32_t a, int32_t b) const;
    int32_t neg(int32_t a) const;
    int32_t mul(int32_t a, int32_t b) const;
    int32_t inv(int32_t a) const;  // throws on zero
    /// Image of the canonical field generator (x for extensions, 1 for
    /// prime fields).
    int32_t generator() const { return p_ == q_ ? 1 : static_cast<int32_t>(p_); }

private:
    int64_t q_, p_;
    int deg_;
    std::vector<int32_t> add_table_, mul_table_, inv_table_;
};

/// Load a group from the documented "perm"/"pc" file formats.
Group load_group(const std::string& path);
/// Same parser on a stream; `display_name` labels the resulting group.
Group parse_group(std::istream& in, const std::string& display_name);

/// Canonical re-dump of a permutation or pc group in the loadable format.
std::string dump_group(const Group& g);

}  // namespace fszlab
