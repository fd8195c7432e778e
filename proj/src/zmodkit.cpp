#include "scissors/zmodkit.hpp"

#include <algorithm>
#include <sstream>

#include "scissors/errors.hpp"

namespace scissors {

// ---------------------------------------------------------------- matrices

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Vec IntMatrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw DescriptorError("row length mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

void IntMatrix::append_row(const Vec& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw DescriptorError("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

void IntMatrix::append_rows(const IntMatrix& m) {
    if (rows_ == 0 && cols_ == 0) cols_ = m.cols_;
    if (m.cols_ != cols_) throw DescriptorError("column count mismatch");
    data_.insert(data_.end(), m.data_.begin(), m.data_.end());
    rows_ += m.rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Int& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        const Int& x = (*this)(b, j);
        if (x != 0) (*this)(a, j) += k * x;
    }
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const Int& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const Int& x = (*this)(i, b);
        if (x != 0) (*this)(i, a) += k * x;
    }
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DescriptorError("matrix product dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
        }
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DescriptorError("matrix shape mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

Vec row_times(const Vec& v, const IntMatrix& a) {
    if (v.size() != a.rows()) throw DescriptorError("vector length does not match matrix rows");
    Vec out(a.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) out[j] += v[i] * a(i, j);
    }
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DescriptorError("vector length mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Vec unit_vec(std::size_t n, std::size_t i, const Int& c) {
    Vec v(n);
    v.at(i) = c;
    return v;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DescriptorError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    // Bareiss
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a(s, k) == 0) ++s;
            if (s == n) return 0;
            a.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------- Hermite

namespace {

void negate_row(IntMatrix& a, std::size_t i) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
}

IntMatrix first_rows(const IntMatrix& a, std::size_t r) {
    IntMatrix out(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    return out;
}

IntMatrix first_cols(const IntMatrix& a, std::size_t c) {
    IntMatrix out(a.rows(), c);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < c; ++j) out(i, j) = a(i, j);
    return out;
}

IntMatrix stack(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(0, a.cols());
    out.append_rows(a);
    out.append_rows(b);
    return out;
}

}  // namespace

HNFResult hermite(const IntMatrix& input, bool with_transform) {
    IntMatrix a = input;
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix u = with_transform ? IntMatrix::identity(m) : IntMatrix();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        bool found = false;
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (a(i, col) != 0 && (best == m || abs(a(i, col)) < abs(a(best, col)))) best = i;
            }
            if (best == m) break;
            found = true;
            a.swap_rows(r, best);
            if (with_transform) u.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a(i, col) == 0) continue;
                Int q = floor_div(a(i, col), a(r, col));
                a.add_row_multiple(i, r, -q);
                if (with_transform) u.add_row_multiple(i, r, -q);
                if (a(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!found) continue;
        if (a(r, col) < 0) {
            negate_row(a, r);
            if (with_transform) negate_row(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (a(i, col) == 0) continue;
            Int q = floor_div(a(i, col), a(r, col));
            a.add_row_multiple(i, r, -q);
            if (with_transform) u.add_row_multiple(i, r, -q);
        }
        pivots.push_back(col);
        ++r;
    }
    HNFResult h;
    h.basis = first_rows(a, r);
    h.pivots = std::move(pivots);
    h.transform = std::move(u);
    return h;
}

Vec hnf_reduce(const HNFResult& h, Vec v, Vec* coeffs) {
    if (v.size() != h.cols()) throw DescriptorError("vector length does not match lattice");
    if (coeffs) coeffs->assign(h.rank(), 0);
    for (std::size_t t = 0; t < h.rank(); ++t) {
        const std::size_t p = h.pivots[t];
        if (v[p] == 0) continue;
        Int q = floor_div(v[p], h.basis(t, p));
        for (std::size_t j = p; j < v.size(); ++j) {
            const Int& x = h.basis(t, j);
            if (x != 0) v[j] -= q * x;
        }
        if (coeffs) (*coeffs)[t] = q;
    }
    return v;
}

bool in_lattice(const HNFResult& h, const Vec& v) { return vec_is_zero(hnf_reduce(h, v)); }

std::optional<Vec> solve_in_basis(const HNFResult& h, const Vec& v) {
    Vec y;
    if (!vec_is_zero(hnf_reduce(h, v, &y))) return std::nullopt;
    return y;
}

std::optional<Vec> express(const IntMatrix& gens, const Vec& v) {
    HNFResult h = hermite(gens, true);
    auto y = solve_in_basis(h, v);
    if (!y) return std::nullopt;
    Vec x(gens.rows());
    for (std::size_t t = 0; t < y->size(); ++t) {
        if ((*y)[t] == 0) continue;
        for (std::size_t j = 0; j < x.size(); ++j) x[j] += (*y)[t] * h.transform(t, j);
    }
    return x;
}

IntMatrix left_kernel(const IntMatrix& a) {
    HNFResult h = hermite(a, true);
    IntMatrix k(0, a.rows());
    for (std::size_t i = h.rank(); i < a.rows(); ++i) k.append_row(h.transform.row(i));
    return hermite(k).basis;
}

// ---------------------------------------------------------------- Smith

SNFResult snf(const IntMatrix& input, bool with_transforms) {
    IntMatrix a = input;
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix left = with_transforms ? IntMatrix::identity(m) : IntMatrix();
    IntMatrix right = with_transforms ? IntMatrix::identity(n) : IntMatrix();
    auto row_add = [&](std::size_t i, std::size_t j, const Int& k) {
        a.add_row_multiple(i, j, k);
        if (with_transforms) left.add_row_multiple(i, j, k);
    };
    auto col_add = [&](std::size_t i, std::size_t j, const Int& k) {
        a.add_col_multiple(i, j, k);
        if (with_transforms) right.add_col_multiple(i, j, k);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        if (with_transforms) left.swap_rows(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        if (with_transforms) right.swap_cols(i, j);
    };

    const std::size_t d = std::min(m, n);
    for (std::size_t t = 0; t < d; ++t) {
        std::size_t bi = m, bj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a(i, j) != 0 && (bi == m || abs(a(i, j)) < abs(a(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == m) break;
        row_swap(t, bi);
        col_swap(t, bj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                row_add(i, t, -floor_div(a(i, t), a(t, t)));
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                col_add(j, t, -floor_div(a(t, j), a(t, t)));
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                // smallest leftover in row t or column t becomes the pivot
                std::size_t si = t, sj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (a(i, t) != 0 && abs(a(i, t)) < abs(a(si, sj))) {
                        si = i;
                        sj = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(t, j) != 0 && abs(a(t, j)) < abs(a(si, sj))) {
                        si = t;
                        sj = j;
                    }
                row_swap(t, si);
                col_swap(t, sj);
                continue;
            }
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!divides(a(t, t), a(i, j))) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            row_add(t, bad, 1);
        }
        if (a(t, t) < 0) {
            negate_row(a, t);
            if (with_transforms) negate_row(left, t);
        }
    }
    SNFResult out;
    for (std::size_t t = 0; t < d; ++t) out.invariant_factors.push_back(a(t, t));
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
}

// ---------------------------------------------------------------- structure

std::vector<Int> Structure::factors() const {
    std::vector<Int> out = torsion;
    out.insert(out.end(), rank, Int(0));
    return out;
}

Int Structure::order() const {
    if (rank > 0) return 0;
    Int o = 1;
    for (const auto& d : torsion) o *= d;
    return o;
}

std::string Structure::to_string() const {
    std::ostringstream os;
    os << "[";
    auto f = factors();
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? ", " : "") << scissors::to_string(f[i]);
    os << "]";
    return os.str();
}

Structure structure_from_factors(const std::vector<Int>& factors) {
    Structure s;
    for (const auto& d : factors) {
        Int a = abs(d);
        if (a == 0) {
            ++s.rank;
        } else if (a != 1) {
            s.torsion.push_back(a);
        }
    }
    std::sort(s.torsion.begin(), s.torsion.end());
    return s;
}

Structure odd_part(const Structure& s) {
    Structure o;
    o.rank = s.rank;
    for (const auto& d : s.torsion) {
        Int r = strip_two(d);
        if (r != 1) o.torsion.push_back(r);
    }
    return o;
}

// ---------------------------------------------------------------- modules

Vec FPModule::act(const Vec& x, unsigned h) const {
    Vec y = x;
    for (std::size_t i = 0; i < action.size(); ++i) {
        if (h & (1u << i)) y = row_times(y, action[i]);
    }
    return y;
}

void FPModule::add_relation(const Vec& r) {
    if (r.size() != num_gens()) throw DescriptorError("relation length does not match generators");
    if (relations.rows() == 0 && relations.cols() != num_gens()) relations = IntMatrix(0, num_gens());
    relations.append_row(r);
}

void FPModule::add_relation_orbit(const Vec& r) {
    for (unsigned h = 0; h < (1u << action.size()); ++h) add_relation(act(r, h));
}

void validate_action(const FPModule& m) {
    const std::size_t n = m.num_gens();
    const IntMatrix id = IntMatrix::identity(n);
    for (const auto& a : m.action) {
        if (a.rows() != n || a.cols() != n) throw DescriptorError("malformed action: wrong shape");
        if (!(a * a == id)) throw DescriptorError("malformed action: not an involution");
    }
    for (std::size_t i = 0; i < m.action.size(); ++i)
        for (std::size_t j = i + 1; j < m.action.size(); ++j)
            if (!(m.action[i] * m.action[j] == m.action[j] * m.action[i]))
                throw DescriptorError("malformed action: involutions do not commute");
    if (m.action.empty()) return;
    HNFResult h = hermite(m.relations);
    for (std::size_t r = 0; r < m.relations.rows(); ++r)
        for (const auto& a : m.action)
            if (!in_lattice(h, row_times(m.relations.row(r), a)))
                throw DescriptorError("malformed action: relations not preserved");
}

namespace {

IntMatrix relation_matrix(const FPModule& m) {
    if (m.relations.cols() == m.num_gens()) return m.relations;
    if (m.relations.rows() == 0) return IntMatrix(0, m.num_gens());
    throw DescriptorError("relation matrix width does not match generators");
}

}  // namespace

Structure structure(const FPModule& m) {
    HNFResult h = hermite(relation_matrix(m));
    SNFResult s = snf(h.basis, false);
    std::vector<Int> f = s.invariant_factors;
    f.resize(m.num_gens(), Int(0));
    return structure_from_factors(f);
}

ModuleSolver::ModuleSolver(const FPModule& m) : n_(m.num_gens()) {
    hnf_ = hermite(relation_matrix(m));
    SNFResult s = snf(hnf_.basis, true);
    right_ = std::move(s.right);
    diag_ = s.invariant_factors;
    diag_.resize(n_, Int(0));
    structure_ = structure_from_factors(diag_);
}

void ModuleSolver::check_len(const Vec& v) const {
    if (v.size() != n_) throw DescriptorError("element length does not match generators");
}

bool ModuleSolver::is_zero(const Vec& v) const {
    check_len(v);
    return in_lattice(hnf_, v);
}

bool ModuleSolver::equal(const Vec& a, const Vec& b) const {
    check_len(a);
    check_len(b);
    return is_zero(vec_sub(a, b));
}

std::optional<Int> ModuleSolver::order(const Vec& v) const {
    check_len(v);
    Vec y = row_times(v, right_);
    Int ord = 1;
    for (std::size_t i = 0; i < n_; ++i) {
        if (y[i] == 0) continue;
        if (diag_[i] == 0) return std::nullopt;
        Int o = diag_[i] / scissors::gcd(diag_[i], y[i]);
        mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), o.get_mpz_t());
    }
    return ord;
}

bool ModuleSolver::is_zero_odd(const Vec& v) const {
    auto o = order(v);
    return o && is_two_power(*o);
}

bool element_equal(const FPModule& m, const Vec& a, const Vec& b) {
    if (a.size() != m.num_gens() || b.size() != m.num_gens())
        throw DescriptorError("element length does not match generators");
    return in_lattice(hermite(relation_matrix(m)), vec_sub(a, b));
}

// ---------------------------------------------------------------- group rings

FPModule flatten(const GroupRingPresentation& g) {
    if (g.k > 16) throw CapacityError("too many involutions to flatten");
    const unsigned order = 1u << g.k;
    FPModule m;
    for (std::size_t j = 0; j < g.gen_labels.size(); ++j)
        for (unsigned h = 0; h < order; ++h) {
            std::string label = g.gen_labels[j];
            if (h != 0) label = "<" + std::to_string(h) + ">" + label;
            m.gen_labels.push_back(label);
        }
    const std::size_t n = m.num_gens();
    m.relations = IntMatrix(0, n);
    for (std::size_t i = 0; i < g.k; ++i) {
        IntMatrix a(n, n);
        for (std::size_t j = 0; j < g.gen_labels.size(); ++j)
            for (unsigned h = 0; h < order; ++h)
                a(flat_index(j, h, g.k), flat_index(j, h ^ (1u << i), g.k)) = 1;
        m.action.push_back(std::move(a));
    }
    for (const auto& rel : g.relations)
        for (unsigned s = 0; s < order; ++s) {
            Vec row(n);
            for (const auto& t : rel) {
                if (t.gen >= g.gen_labels.size() || t.group >= order)
                    throw DescriptorError("malformed group-ring term");
                row[flat_index(t.gen, t.group ^ s, g.k)] += t.coeff;
            }
            m.relations.append_row(row);
        }
    return m;
}

FPModule specialize_character(const GroupRingPresentation& g, const std::vector<int>& signs) {
    if (signs.size() != g.k) throw DescriptorError("one sign per involution expected");
    FPModule m;
    m.gen_labels = g.gen_labels;
    m.relations = IntMatrix(0, m.num_gens());
    for (const auto& rel : g.relations) {
        Vec row(m.num_gens());
        for (const auto& t : rel) {
            int s = 1;
            for (std::size_t i = 0; i < g.k; ++i)
                if (t.group & (1u << i)) s *= signs[i];
            row.at(t.gen) += s * t.coeff;
        }
        m.relations.append_row(row);
    }
    return m;
}

FPModule character_quotient(const FPModule& m, const std::vector<int>& signs) {
    if (signs.size() != m.num_involutions()) throw DescriptorError("one sign per involution expected");
    FPModule q = m;
    q.relations = relation_matrix(m);
    const std::size_t n = m.num_gens();
    for (std::size_t i = 0; i < signs.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec r = m.action[i].row(j);
            r[j] -= signs[i];
            if (!vec_is_zero(r)) q.relations.append_row(r);
        }
        IntMatrix s = IntMatrix::identity(n);
        if (signs[i] < 0)
            for (std::size_t j = 0; j < n; ++j) s(j, j) = -1;
        q.action[i] = std::move(s);
    }
    return q;
}

std::size_t sym2_index(std::size_t i, std::size_t j, std::size_t n) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
}

FPModule sym2(const FPModule& a, Sym2Quotient kind) {
    const std::size_t n = a.num_gens();
    FPModule s;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) s.gen_labels.push_back(a.gen_labels[i] + "o" + a.gen_labels[j]);
    const std::size_t g = s.num_gens();
    s.relations = IntMatrix(0, g);
    const bool anti = kind == Sym2Quotient::Antisymmetric;
    HNFResult h = hermite(relation_matrix(a));
    for (std::size_t r = 0; r < h.rank(); ++r)
        for (std::size_t k = 0; k < n; ++k) {
            Vec row(g);
            for (std::size_t j = 0; j < n; ++j) {
                const Int& c = h.basis(r, j);
                if (c == 0) continue;
                // e_j o e_k
                if (j <= k || !anti) {
                    row[sym2_index(j, k, n)] += c;
                } else {
                    row[sym2_index(k, j, n)] -= c;
                }
            }
            if (!vec_is_zero(row)) s.relations.append_row(row);
        }
    if (anti)
        for (std::size_t i = 0; i < n; ++i) s.relations.append_row(unit_vec(g, sym2_index(i, i, n), 2));
    return s;
}

// ---------------------------------------------------------------- maps

namespace {

void check_map_shape(const IntMatrix& f, const FPModule& m, const FPModule& n) {
    if (f.rows() != m.num_gens() || f.cols() != n.num_gens())
        throw DescriptorError("map matrix shape does not match source and target");
}

}  // namespace

void check_well_defined(const IntMatrix& f, const FPModule& m, const FPModule& n) {
    check_map_shape(f, m, n);
    HNFResult target = hermite(relation_matrix(n));
    IntMatrix rel = relation_matrix(m);
    for (std::size_t r = 0; r < rel.rows(); ++r) {
        if (!in_lattice(target, row_times(rel.row(r), f))) {
            throw IllDefinedMapError("relation " + std::to_string(r) + " is not sent to zero", r);
        }
    }
}

bool is_equivariant(const IntMatrix& f, const FPModule& m, const FPModule& n) {
    check_map_shape(f, m, n);
    if (m.num_involutions() != n.num_involutions()) return false;
    HNFResult target = hermite(relation_matrix(n));
    for (std::size_t i = 0; i < m.num_involutions(); ++i) {
        IntMatrix d = m.action[i] * f - f * n.action[i];
        for (std::size_t j = 0; j < d.rows(); ++j)
            if (!in_lattice(target, d.row(j))) return false;
    }
    return true;
}

IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& l) {
    HNFResult hl = hermite(l.rows() == 0 ? IntMatrix(0, f.cols()) : l);
    IntMatrix g = stack(f, hl.basis);
    IntMatrix k = left_kernel(g);
    return hermite(first_cols(k, f.rows())).basis;
}

Submodule map_kernel(const IntMatrix& f, const FPModule& m, const FPModule& n) {
    check_well_defined(f, m, n);
    IntMatrix k = preimage_lattice(f, relation_matrix(n));
    HNFResult hk = hermite(k);
    Submodule out;
    for (std::size_t i = 0; i < k.rows(); ++i) out.module.gen_labels.push_back("k" + std::to_string(i));
    out.module.relations = IntMatrix(0, k.rows());
    HNFResult hm = hermite(relation_matrix(m));
    for (std::size_t r = 0; r < hm.rank(); ++r) {
        auto y = solve_in_basis(hk, hm.basis.row(r));
        if (!y) throw std::logic_error("relation lattice not inside kernel lattice");
        out.module.relations.append_row(*y);
    }
    for (const auto& a : m.action) {
        IntMatrix act(k.rows(), k.rows());
        for (std::size_t i = 0; i < k.rows(); ++i) {
            auto y = solve_in_basis(hk, row_times(k.row(i), a));
            if (!y) throw PreconditionError("kernel is not stable under the action; map not equivariant");
            act.set_row(i, *y);
        }
        out.module.action.push_back(std::move(act));
    }
    out.embedding = std::move(k);
    return out;
}

Submodule submodule(const FPModule& m, const IntMatrix& gens, bool close_under_action) {
    if (gens.cols() != m.num_gens()) throw DescriptorError("generator length does not match module");
    IntMatrix v(0, m.num_gens());
    for (std::size_t i = 0; i < gens.rows(); ++i) {
        unsigned top = close_under_action ? (1u << m.num_involutions()) : 1u;
        for (unsigned h = 0; h < top; ++h) v.append_row(m.act(gens.row(i), h));
    }
    Submodule out;
    out.module.relations = preimage_lattice(v, relation_matrix(m));
    for (std::size_t i = 0; i < v.rows(); ++i) out.module.gen_labels.push_back("s" + std::to_string(i));
    if (out.module.relations.rows() == 0) out.module.relations = IntMatrix(0, v.rows());
    if (close_under_action && !m.action.empty()) {
        IntMatrix gl = stack(v, hermite(relation_matrix(m)).basis);
        for (const auto& a : m.action) {
            IntMatrix act(v.rows(), v.rows());
            for (std::size_t i = 0; i < v.rows(); ++i) {
                auto x = express(gl, row_times(v.row(i), a));
                if (!x) throw std::logic_error("translate left the generated submodule");
                x->resize(v.rows());
                act.set_row(i, *x);
            }
            out.module.action.push_back(std::move(act));
        }
    }
    out.embedding = std::move(v);
    return out;
}

FPModule cokernel(const IntMatrix& f, const FPModule& m, const FPModule& n) {
    check_map_shape(f, m, n);
    FPModule c = n;
    c.relations = stack(relation_matrix(n), f);
    return c;
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
    if (a.num_involutions() != b.num_involutions())
        throw DescriptorError("direct sum of modules over different group rings");
    const std::size_t na = a.num_gens(), nb = b.num_gens(), n = na + nb;
    FPModule s;
    s.gen_labels = a.gen_labels;
    s.gen_labels.insert(s.gen_labels.end(), b.gen_labels.begin(), b.gen_labels.end());
    s.relations = IntMatrix(0, n);
    IntMatrix ra = relation_matrix(a), rb = relation_matrix(b);
    for (std::size_t r = 0; r < ra.rows(); ++r) {
        Vec row = ra.row(r);
        row.resize(n);
        s.relations.append_row(row);
    }
    for (std::size_t r = 0; r < rb.rows(); ++r) {
        Vec row(na);
        Vec tail = rb.row(r);
        row.insert(row.end(), tail.begin(), tail.end());
        s.relations.append_row(row);
    }
    for (std::size_t i = 0; i < a.num_involutions(); ++i) {
        IntMatrix act(n, n);
        for (std::size_t x = 0; x < na; ++x)
            for (std::size_t y = 0; y < na; ++y) act(x, y) = a.action[i](x, y);
        for (std::size_t x = 0; x < nb; ++x)
            for (std::size_t y = 0; y < nb; ++y) act(na + x, na + y) = b.action[i](x, y);
        s.action.push_back(std::move(act));
    }
    return s;
}

bool same_subgroup(const FPModule& m, const IntMatrix& f, const IntMatrix& g) {
    IntMatrix rel = relation_matrix(m);
    HNFResult hf = hermite(stack(f, rel)), hg = hermite(stack(g, rel));
    for (std::size_t i = 0; i < f.rows(); ++i)
        if (!in_lattice(hg, f.row(i))) return false;
    for (std::size_t i = 0; i < g.rows(); ++i)
        if (!in_lattice(hf, g.row(i))) return false;
    return true;
}

namespace {

Verdict odd_verdict(const IntMatrix& f, const FPModule& m, const FPModule& n) {
    Verdict v;
    v.injective = odd_part(structure(map_kernel(f, m, n).module)).is_trivial();
    v.surjective = odd_part(structure(cokernel(f, m, n))).is_trivial();
    return v;
}

}  // namespace

LocalGlobalReport local_global_check(const IntMatrix& f, const FPModule& m, const FPModule& n) {
    check_well_defined(f, m, n);
    if (!is_equivariant(f, m, n)) throw PreconditionError("map is not equivariant");
    LocalGlobalReport rep;
    rep.direct = odd_verdict(f, m, n);
    rep.via_characters = {true, true};
    const std::size_t k = m.num_involutions();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> signs(k);
        for (std::size_t i = 0; i < k; ++i) signs[i] = (mask & (1u << i)) ? -1 : 1;
        Verdict v = odd_verdict(f, character_quotient(m, signs), character_quotient(n, signs));
        rep.per_character.push_back(v);
        rep.via_characters.injective = rep.via_characters.injective && v.injective;
        rep.via_characters.surjective = rep.via_characters.surjective && v.surjective;
    }
    return rep;
}

}  // namespace scissors
