#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scissors/bigint.hpp"

namespace scissors {

using Vec = std::vector<Int>;

/// Dense integer matrix. Vectors are rows and maps act on the right:
/// the image of x under f is x*f.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    void set_row(std::size_t i, const Vec& v);
    /// Appends a row; the first row of an empty 0x0 matrix fixes cols.
    void append_row(const Vec& v);
    void append_rows(const IntMatrix& m);
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row a += k * row b
    void add_row_multiple(std::size_t a, std::size_t b, const Int& k);
    /// col a += k * col b
    void add_col_multiple(std::size_t a, std::size_t b, const Int& k);

    IntMatrix transpose() const;
    bool is_zero() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// v * A.
Vec row_times(const Vec& v, const IntMatrix& a);
Vec vec_sub(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& v);
Vec unit_vec(std::size_t n, std::size_t i, const Int& c = 1);

/// Exact determinant of a square matrix (fraction-free elimination).
Int determinant(const IntMatrix& a);

/// Row Hermite normal form: basis rows have strictly increasing pivot
/// columns, positive pivots, and entries above each pivot in [0, pivot).
struct HNFResult {
    IntMatrix basis;
    std::vector<std::size_t> pivots;
    /// Unimodular U with U*A = [basis; 0]; empty unless requested.
    IntMatrix transform;

    std::size_t rank() const { return pivots.size(); }
    std::size_t cols() const { return basis.cols(); }
};

HNFResult hermite(const IntMatrix& a, bool with_transform = false);

/// Remainder of v modulo the lattice, with the subtracted coefficients.
Vec hnf_reduce(const HNFResult& h, Vec v, Vec* coeffs = nullptr);
bool in_lattice(const HNFResult& h, const Vec& v);
/// y with y*basis = v, if v lies in the lattice.
std::optional<Vec> solve_in_basis(const HNFResult& h, const Vec& v);
/// x with x*gens = v, if v lies in the row lattice of gens.
std::optional<Vec> express(const IntMatrix& gens, const Vec& v);

/// Left kernel basis {x : x*a = 0}, in HNF.
IntMatrix left_kernel(const IntMatrix& a);

struct SNFResult {
    /// d_1 | d_2 | ... on the diagonal, min(rows, cols) entries.
    std::vector<Int> invariant_factors;
    /// left * A * right = diag(invariant_factors); empty unless requested.
    IntMatrix left;
    IntMatrix right;
};

SNFResult snf(const IntMatrix& a, bool with_transforms = true);

/// Z^rank + torsion with the torsion invariant factors (all > 1) in
/// divisibility order.
struct Structure {
    std::size_t rank = 0;
    std::vector<Int> torsion;

    /// Torsion factors followed by rank zeros, e.g. [3, 0].
    std::vector<Int> factors() const;
    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    /// Product of torsion factors; 0 when rank > 0.
    Int order() const;
    std::string to_string() const;

    friend bool operator==(const Structure&, const Structure&) = default;
};

/// Invariant factor list to structure; ones are dropped, zeros counted.
Structure structure_from_factors(const std::vector<Int>& factors);
/// Structure after inverting 2.
Structure odd_part(const Structure& s);

/// Finitely presented abelian group Z^n / rows(relations), optionally with
/// commuting involutions acting on the right of generator vectors.
struct FPModule {
    std::vector<std::string> gen_labels;
    IntMatrix relations;
    std::vector<IntMatrix> action;

    std::size_t num_gens() const { return gen_labels.size(); }
    std::size_t num_involutions() const { return action.size(); }
    Vec zero() const { return Vec(num_gens()); }
    Vec gen(std::size_t i, const Int& c = 1) const { return unit_vec(num_gens(), i, c); }
    /// x * A_h where A_h is the product of the involutions in bitmask h.
    Vec act(const Vec& x, unsigned h) const;
    void add_relation(const Vec& r);
    /// Adds r * A_h for every group element h.
    void add_relation_orbit(const Vec& r);
};

/// Throws DescriptorError unless the involutions are square, square to 1,
/// commute, and preserve the relation lattice.
void validate_action(const FPModule& m);

Structure structure(const FPModule& m);

/// Precomputed HNF and SNF data for repeated element queries.
class ModuleSolver {
public:
    explicit ModuleSolver(const FPModule& m);

    const Structure& structure() const noexcept { return structure_; }
    const HNFResult& hnf() const noexcept { return hnf_; }

    /// Throws DescriptorError on length mismatch.
    bool is_zero(const Vec& v) const;
    bool equal(const Vec& a, const Vec& b) const;
    /// Order of the class of v; nullopt when infinite.
    std::optional<Int> order(const Vec& v) const;
    /// True when v maps to zero in M[1/2].
    bool is_zero_odd(const Vec& v) const;

private:
    void check_len(const Vec& v) const;

    std::size_t n_;
    HNFResult hnf_;
    IntMatrix right_;
    std::vector<Int> diag_;
    Structure structure_;
};

/// a - b in the relation lattice.
bool element_equal(const FPModule& m, const Vec& a, const Vec& b);

/// One term c * g^group * e_gen of a relation over Z[(Z/2)^k].
struct GRTerm {
    std::size_t gen;
    unsigned group;
    Int coeff;
};

/// Module over Z[(Z/2)^k] given by generators and group-ring relations.
struct GroupRingPresentation {
    std::size_t k = 0;
    std::vector<std::string> gen_labels;
    std::vector<std::vector<GRTerm>> relations;
};

/// Flattened generator (gen, h) sits at gen * 2^k + h.
inline std::size_t flat_index(std::size_t gen, unsigned h, std::size_t k) { return (gen << k) | h; }

/// Z-presentation on generators x group, relations closed under the group,
/// involution i acting by h -> h xor 2^i.
FPModule flatten(const GroupRingPresentation& m);

/// Quotient computed directly on the group-ring presentation with g_i -> signs[i].
FPModule specialize_character(const GroupRingPresentation& m, const std::vector<int>& signs);

/// M_chi: adds x*A_i - signs[i]*x for every generator x. Involution i then
/// acts on the quotient as signs[i].
FPModule character_quotient(const FPModule& m, const std::vector<int>& signs);

/// Which tensors are identified when forming the square of A.
enum class Sym2Quotient {
    Antisymmetric,  // A (x) A / <x(x)y + y(x)x>
    Symmetric,      // A (x) A / <x(x)y - y(x)x>
};

/// Generator index of e_i o e_j, i <= j < n.
std::size_t sym2_index(std::size_t i, std::size_t j, std::size_t n);

/// Square of an abelian group on generators e_i o e_j, i <= j.
FPModule sym2(const FPModule& a, Sym2Quotient kind = Sym2Quotient::Antisymmetric);

/// Throws IllDefinedMapError naming the first relation of m not sent into
/// the relation lattice of n.
void check_well_defined(const IntMatrix& f, const FPModule& m, const FPModule& n);
bool is_equivariant(const IntMatrix& f, const FPModule& m, const FPModule& n);

/// {x : x*f in rows(l)} as an HNF basis.
IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& l);

/// A presented module together with the vectors of the ambient module its
/// generators stand for.
struct Submodule {
    FPModule module;
    IntMatrix embedding;
};

/// Kernel of f: m -> n. Generators are labelled k0, k1, ...
Submodule map_kernel(const IntMatrix& f, const FPModule& m, const FPModule& n);

/// Submodule generated by the rows of gens (and their group translates
/// when close_under_action is set).
Submodule submodule(const FPModule& m, const IntMatrix& gens, bool close_under_action = true);

FPModule cokernel(const IntMatrix& f, const FPModule& m, const FPModule& n);

/// Involution counts must agree.
FPModule direct_sum(const FPModule& a, const FPModule& b);

/// Rows of f and g generate the same subgroup of m.
bool same_subgroup(const FPModule& m, const IntMatrix& f, const IntMatrix& g);

struct Verdict {
    bool injective = false;
    bool surjective = false;
    bool bijective() const { return injective && surjective; }
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct LocalGlobalReport {
    Verdict direct;
    Verdict via_characters;
    /// Per sign vector, indexed by bitmask (bit i set means sign -1).
    std::vector<Verdict> per_character;

    bool agree() const { return direct == via_characters; }
};

/// Injectivity and surjectivity of f after inverting 2, decided on f itself
/// and on every character quotient f_chi. Throws PreconditionError if f is
/// not equivariant.
LocalGlobalReport local_global_check(const IntMatrix& f, const FPModule& m, const FPModule& n);

}  // namespace scissors
