#include "lpc/lie.hpp"

#include "lpc/poly_gcd.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <stdexcept>

namespace lpc {

std::string ClassicalTag::name() const {
    switch (type) {
        case ClassicalType::sl: return "sl" + std::to_string(size);
        case ClassicalType::so: return "so" + std::to_string(size);
        case ClassicalType::sp: return "sp" + std::to_string(size);
    }
    return {};
}

std::optional<ClassicalTag> parse_classical_name(const std::string& name) {
    static const std::regex re("^(sl|so|sp)([0-9]+)$");
    std::smatch m;
    if (!std::regex_match(name, m, re)) return std::nullopt;
    const auto size = static_cast<std::size_t>(std::stoul(m[2].str()));
    const std::string t = m[1].str();
    const ClassicalType type = t == "sl" ? ClassicalType::sl : t == "so" ? ClassicalType::so : ClassicalType::sp;
    return ClassicalTag{type, size};
}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels) : name_(std::move(name)), labels_(std::move(labels)) {
    static const std::regex ident("^[A-Za-z][A-Za-z0-9_]*$");
    if (labels_.size() > kMaxVariables) throw std::invalid_argument("LieAlgebra: dimension exceeds " + std::to_string(kMaxVariables));
    std::set<std::string> seen;
    for (const auto& s : labels_) {
        if (!std::regex_match(s, ident)) throw std::invalid_argument("LieAlgebra: bad basis label '" + s + "'");
        if (!seen.insert(s).second) throw std::invalid_argument("LieAlgebra: repeated basis label '" + s + "'");
    }
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const std::vector<Rational>& coords) {
    const std::size_t n = dimension();
    if (i >= n || j >= n) throw std::out_of_range("set_bracket: index out of range");
    if (i == j) throw std::invalid_argument("set_bracket: [x_i, x_i] is zero by antisymmetry");
    if (coords.size() != n) throw std::invalid_argument("set_bracket: coordinate length mismatch");
    const bool flip = i > j;
    std::vector<std::pair<std::size_t, Rational>> sparse;
    for (std::size_t k = 0; k < n; ++k)
        if (!coords[k].is_zero()) sparse.emplace_back(k, flip ? -coords[k] : coords[k]);
    const auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
    if (sparse.empty())
        c_.erase(key);
    else
        c_[key] = std::move(sparse);
}

std::vector<Rational> LieAlgebra::bracket(std::size_t i, std::size_t j) const {
    std::vector<Rational> out(dimension(), Rational(0));
    if (i == j) return out;
    const bool flip = i > j;
    auto it = c_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == c_.end()) return out;
    for (const auto& [k, v] : it->second) out[k] = flip ? -v : v;
    return out;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    const std::size_t n = dimension();
    std::vector<Rational> out(n, Rational(0));
    for (const auto& [key, vals] : c_) {
        const auto [i, j] = key;
        const Rational s = a[i] * b[j] - a[j] * b[i];
        if (s.is_zero()) continue;
        for (const auto& [k, v] : vals) out[k] += s * v;
    }
    return out;
}

MatrixCoordinates::MatrixCoordinates(const std::vector<RationalMatrix>& basis) : basis_(basis) {
    if (basis.empty()) throw std::invalid_argument("MatrixCoordinates: empty basis");
    const std::size_t rows = basis[0].rows(), cols = basis[0].cols();
    const std::size_t n = basis.size();
    RationalMatrix flat(n, rows * cols);
    for (std::size_t k = 0; k < n; ++k) {
        if (basis[k].rows() != rows || basis[k].cols() != cols) throw std::invalid_argument("MatrixCoordinates: shape mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) flat(k, r * cols + c) = basis[k](r, c);
    }
    RationalMatrix reduced = flat;
    const auto pivots = row_reduce(reduced);
    if (pivots.size() < n) throw std::invalid_argument("MatrixCoordinates: matrices are linearly dependent");
    RationalMatrix s(n, n);
    for (std::size_t p = 0; p < n; ++p) {
        positions_.emplace_back(pivots[p] / cols, pivots[p] % cols);
        for (std::size_t k = 0; k < n; ++k) s(p, k) = flat(k, pivots[p]);
    }
    inverse_ = *inverse(s);
}

std::optional<std::vector<Rational>> MatrixCoordinates::coordinates(const RationalMatrix& x) const {
    const std::size_t n = basis_.size();
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t p = 0; p < n; ++p) {
            const auto [r, c] = positions_[p];
            if (!inverse_(k, p).is_zero()) out[k] += inverse_(k, p) * x(r, c);
        }
    RationalMatrix check(x.rows(), x.cols());
    for (std::size_t k = 0; k < n; ++k)
        if (!out[k].is_zero()) check = check + out[k] * basis_[k];
    if (!(check == x)) return std::nullopt;
    return out;
}

LieAlgebra from_matrices(const std::string& name, const std::vector<std::string>& labels,
                         const std::vector<RationalMatrix>& mats) {
    if (labels.size() != mats.size()) throw std::invalid_argument("from_matrices: label count mismatch");
    LieAlgebra l(name, labels);
    const MatrixCoordinates coords(mats);
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
            auto c = coords.coordinates(commutator(mats[i], mats[j]));
            if (!c) throw std::invalid_argument("from_matrices: span not closed under [" + labels[i] + "," + labels[j] + "]");
            l.set_bracket(i, j, *c);
        }
    l.set_matrices(mats);
    return l;
}

JacobiResult jacobi_check(const LieAlgebra& l) {
    const std::size_t n = l.dimension();
    std::vector<std::vector<Rational>> unit(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) unit[i][i] = Rational(1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                auto a = l.bracket(l.bracket(i, j), unit[k]);
                const auto b = l.bracket(l.bracket(j, k), unit[i]);
                const auto c = l.bracket(l.bracket(k, i), unit[j]);
                bool zero = true;
                for (std::size_t m = 0; m < n; ++m)
                    if (!(a[m] + b[m] + c[m]).is_zero()) zero = false;
                if (!zero) return {false, std::array<std::size_t, 3>{i, j, k}};
            }
    return {};
}

MultiVector structure_bivector(const LieAlgebra& l) {
    const std::size_t n = l.dimension();
    MultiVector pi(n, 2);
    for (const auto& [key, vals] : l.structure()) {
        Polynomial p(n);
        for (const auto& [k, v] : vals) p += Polynomial::variable(n, k) * v;
        pi.add(IndexSet::of({key.first, key.second}), p);
    }
    return pi;
}

MultiVector lie_poisson_bivector(const LieAlgebra& l) {
    const auto j = jacobi_check(l);
    if (!j.ok) {
        const auto& t = *j.triple;
        throw std::invalid_argument("lie_poisson_bivector: Jacobi identity fails at (" + l.labels()[t[0]] + "," +
                                    l.labels()[t[1]] + "," + l.labels()[t[2]] + ")");
    }
    return structure_bivector(l);
}

LieAlgebra algebra_from_bivector(const std::string& name, const std::vector<std::string>& labels, const MultiVector& pi) {
    const std::size_t n = pi.ring_dimension();
    if (labels.size() != n) throw std::invalid_argument("algebra_from_bivector: label count mismatch");
    LieAlgebra l(name, labels);
    for (const auto& [ab, c] : pi.terms()) {
        std::vector<Rational> coords(n, Rational(0));
        for (const auto& [m, v] : c.terms()) {
            if (m.degree() != 1) throw std::invalid_argument("algebra_from_bivector: coefficient is not linear");
            coords[static_cast<std::size_t>(m.highest_variable())] = v;
        }
        const auto el = ab.elements();
        l.set_bracket(el[0], el[1], coords);
    }
    return l;
}

namespace {

RationalMatrix unit_matrix(std::size_t m, std::size_t i, std::size_t j) {
    RationalMatrix e(m, m);
    e(i, j) = Rational(1);
    return e;
}

RationalMatrix anti_diagonal(std::size_t m) {
    RationalMatrix j(m, m);
    for (std::size_t i = 0; i < m; ++i) j(i, m - 1 - i) = Rational(1);
    return j;
}

RationalMatrix symplectic_form(std::size_t m) {
    const std::size_t h = m / 2;
    RationalMatrix o(m, m);
    for (std::size_t i = 0; i < h; ++i) {
        o(i, m - 1 - i) = Rational(1);
        o(m - 1 - i, i) = Rational(-1);
    }
    return o;
}

std::vector<int> table_marks(ClassicalType type, std::size_t rank) {
    std::vector<int> marks(rank, 1);
    if (type == ClassicalType::sp) {
        for (std::size_t i = 0; i + 1 < rank; ++i) marks[i] = 2;
    } else if (type == ClassicalType::so) {
        // so(2l+1) and so(2l) share the (1,2,...,2) prefix; D_l ends with (1,1).
        return marks;  // filled by caller, which knows the parity
    }
    return marks;
}

std::vector<int> marks_for(ClassicalType type, std::size_t size, std::size_t rank) {
    if (type != ClassicalType::so) return table_marks(type, rank);
    std::vector<int> marks(rank, 2);
    marks[0] = 1;
    if (size % 2 == 0) {
        marks[rank - 1] = 1;
        if (rank >= 2) marks[rank - 2] = 1;
    }
    return marks;
}

struct RootVector {
    std::size_t row, col;
    RationalMatrix x;
    std::vector<Rational> root;  // as a functional on diagonal entries
};

}  // namespace

LieAlgebra build_classical(ClassicalType type, std::size_t size) {
    const ClassicalTag tag{type, size};
    std::size_t m = size;
    if (type == ClassicalType::sl && (size < 2 || size > 5)) throw std::invalid_argument("build_classical: sl(n) supported for 2 <= n <= 5");
    if (type == ClassicalType::so && (size < 3 || size > 8)) throw std::invalid_argument("build_classical: so(m) supported for 3 <= m <= 8");
    if (type == ClassicalType::sp && (size < 2 || size > 6 || size % 2 != 0))
        throw std::invalid_argument("build_classical: sp(2n) supported for 2n in {2,4,6}");

    std::optional<RationalMatrix> form;
    if (type == ClassicalType::so) form = anti_diagonal(m);
    if (type == ClassicalType::sp) form = symplectic_form(m);
    const std::optional<RationalMatrix> form_inv = form ? inverse(*form) : std::nullopt;
    auto project = [&](const RationalMatrix& y) {
        if (!form) return y;
        const RationalMatrix sigma = Rational(-1) * ((*form_inv) * y.transpose() * (*form));
        return y + sigma;
    };

    // Root vectors, one per root space, normalized to 1 at their generating position.
    std::vector<RootVector> roots;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            bool seen = false;
            for (const auto& r : roots)
                if (!r.x(i, j).is_zero()) seen = true;
            if (seen) continue;
            RationalMatrix x = project(unit_matrix(m, i, j));
            if (x(i, j).is_zero()) continue;
            x = x(i, j).inverse() * x;
            std::vector<Rational> root(m, Rational(0));
            root[i] += Rational(1);
            root[j] -= Rational(1);
            roots.push_back({i, j, std::move(x), std::move(root)});
        }
    std::vector<std::size_t> pos_idx, neg_idx;
    for (std::size_t r = 0; r < roots.size(); ++r) (roots[r].row < roots[r].col ? pos_idx : neg_idx).push_back(r);

    // The diagonal functional of a root vector is only defined modulo the relations satisfied
    // by diagonal elements of g; compare roots by their values on a basis of the diagonal part.
    std::vector<RationalMatrix> diag;
    if (type == ClassicalType::sl) {
        for (std::size_t i = 0; i + 1 < m; ++i) diag.push_back(unit_matrix(m, i, i) - unit_matrix(m, i + 1, i + 1));
    } else {
        for (std::size_t i = 0; i < m / 2; ++i) diag.push_back(unit_matrix(m, i, i) - unit_matrix(m, m - 1 - i, m - 1 - i));
    }
    const std::size_t rank_l = diag.size();
    auto on_diag = [&](const std::vector<Rational>& root) {
        std::vector<Rational> v;
        for (const auto& d : diag) {
            Rational s(0);
            for (std::size_t i = 0; i < m; ++i) s += root[i] * d(i, i);
            v.push_back(s);
        }
        return v;
    };
    std::vector<std::vector<Rational>> pos_vals;
    for (auto r : pos_idx) pos_vals.push_back(on_diag(roots[r].root));

    auto is_sum_of_two = [&](std::size_t a) {
        for (std::size_t b = 0; b < pos_vals.size(); ++b)
            for (std::size_t c = b; c < pos_vals.size(); ++c) {
                bool eq = true;
                for (std::size_t k = 0; k < rank_l; ++k)
                    if (!(pos_vals[b][k] + pos_vals[c][k] == pos_vals[a][k])) eq = false;
                if (eq) return true;
            }
        return false;
    };
    std::vector<std::size_t> simple;  // indices into pos_idx, in generating-position order
    for (std::size_t a = 0; a < pos_idx.size(); ++a)
        if (!is_sum_of_two(a)) simple.push_back(a);
    if (simple.size() != rank_l) throw std::logic_error("build_classical: simple root count mismatch");

    // Simple-root coordinates of every positive root.
    RationalMatrix sm(rank_l, rank_l);
    for (std::size_t s = 0; s < rank_l; ++s)
        for (std::size_t k = 0; k < rank_l; ++k) sm(k, s) = pos_vals[simple[s]][k];
    std::vector<std::vector<int>> coeff(pos_idx.size());
    std::vector<int> height(pos_idx.size(), 0);
    for (std::size_t a = 0; a < pos_idx.size(); ++a) {
        const auto sol = solve(sm, pos_vals[a]);
        if (!sol) throw std::logic_error("build_classical: root outside simple-root lattice");
        for (const auto& c : *sol) {
            if (!c.is_integer() || c.sign() < 0) throw std::logic_error("build_classical: non-positive root coordinates");
            coeff[a].push_back(static_cast<int>(c.numerator().get_si()));
            height[a] += coeff[a].back();
        }
    }
    std::vector<std::size_t> order(pos_idx.size());
    for (std::size_t a = 0; a < order.size(); ++a) order[a] = a;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (height[a] != height[b]) return height[a] < height[b];
        const auto& ra = roots[pos_idx[a]];
        const auto& rb = roots[pos_idx[b]];
        return std::make_pair(ra.row, ra.col) < std::make_pair(rb.row, rb.col);
    });

    // Negative partners, scaled so beta([e_beta, f_beta]) = 2.
    std::vector<RationalMatrix> e_mats, f_mats;
    for (auto a : order) {
        const RootVector& rp = roots[pos_idx[a]];
        const RootVector* rn = nullptr;
        for (auto b : neg_idx)
            if (!roots[b].x(rp.col, rp.row).is_zero()) rn = &roots[b];
        if (!rn) throw std::logic_error("build_classical: missing negative root vector");
        const RationalMatrix hh = commutator(rp.x, rn->x);
        Rational beta_h(0);
        for (std::size_t i = 0; i < m; ++i) beta_h += rp.root[i] * hh(i, i);
        if (beta_h.is_zero()) throw std::logic_error("build_classical: degenerate root pair");
        e_mats.push_back(rp.x);
        f_mats.push_back((Rational(2) / beta_h) * rn->x);
    }
    std::vector<std::size_t> simple_rank(rank_l);  // position of simple root s in `order`
    for (std::size_t s = 0; s < rank_l; ++s)
        simple_rank[s] = static_cast<std::size_t>(std::find(order.begin(), order.end(), simple[s]) - order.begin());
    std::vector<RationalMatrix> h_mats;
    for (std::size_t s = 0; s < rank_l; ++s) h_mats.push_back(commutator(e_mats[simple_rank[s]], f_mats[simple_rank[s]]));

    const std::size_t np = e_mats.size();
    std::vector<RationalMatrix> mats;
    std::vector<std::string> labels;
    const bool rank_one = rank_l == 1 && np == 1;
    for (std::size_t a = 0; a < np; ++a) {
        mats.push_back(e_mats[a]);
        labels.push_back(rank_one ? "e" : "e" + std::to_string(a + 1));
    }
    for (std::size_t s = 0; s < rank_l; ++s) {
        mats.push_back(h_mats[s]);
        labels.push_back(rank_one ? "h" : "h" + std::to_string(s + 1));
    }
    for (std::size_t a = 0; a < np; ++a) {
        mats.push_back(f_mats[a]);
        labels.push_back(rank_one ? "f" : "f" + std::to_string(a + 1));
    }
    LieAlgebra l = from_matrices(tag.name(), labels, mats);

    RootData rd;
    rd.rank = rank_l;
    for (std::size_t s = 0; s < rank_l; ++s) {
        rd.e.push_back(simple_rank[s]);
        rd.h.push_back(np + s);
        rd.f.push_back(np + rank_l + simple_rank[s]);
    }
    for (std::size_t a = 0; a < np; ++a) {
        rd.positive.push_back(a);
        rd.negative.push_back(np + rank_l + a);
    }
    for (std::size_t s = 0; s < rank_l; ++s) rd.cartan.push_back(np + s);
    int top = 0, top_count = 0;
    for (auto a : order) {
        if (height[a] > top) {
            top = height[a];
            top_count = 1;
        } else if (height[a] == top) {
            ++top_count;
        }
    }
    if (top_count == 1) {
        rd.highest = np - 1;
        const auto& c = coeff[order.back()];
        rd.marks.assign(c.begin(), c.end());
        if (rd.marks != marks_for(type, size, rank_l))
            throw std::logic_error("build_classical: computed highest root disagrees with the marks table");
    }
    l.set_root_data(std::move(rd));
    l.set_classical(tag);
    return l;
}

LieAlgebra build_classical(const std::string& name) {
    const auto tag = parse_classical_name(name);
    if (!tag) throw std::invalid_argument("unknown algebra '" + name + "'");
    return build_classical(tag->type, tag->size);
}

std::vector<std::string> builtin_names() {
    return {"sl2", "sl3", "sl4", "sl5", "so3", "so4", "so5", "so6", "so7", "so8", "sp2", "sp4", "sp6"};
}

ContractionWeights borel_decomposition(const LieAlgebra& l) {
    if (!l.root_data()) throw std::invalid_argument("borel_decomposition: algebra has no root data");
    std::vector<int> w(l.dimension(), 0);
    for (auto i : l.root_data()->negative) w[i] = 1;
    return ContractionWeights(std::move(w));
}

RationalMatrix ad_matrix(const LieAlgebra& l, const std::vector<Rational>& x) {
    const std::size_t n = l.dimension();
    RationalMatrix ad(n, n);
    std::vector<Rational> unit(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        unit[j] = Rational(1);
        const auto col = l.bracket(x, unit);
        for (std::size_t k = 0; k < n; ++k) ad(k, j) = col[k];
        unit[j] = Rational(0);
    }
    return ad;
}

RationalMatrix killing_form(const LieAlgebra& l) {
    const std::size_t n = l.dimension();
    std::vector<RationalMatrix> ads;
    std::vector<Rational> unit(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        unit[i] = Rational(1);
        ads.push_back(ad_matrix(l, unit));
        unit[i] = Rational(0);
    }
    RationalMatrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            k(i, j) = trace(ads[i] * ads[j]);
            k(j, i) = k(i, j);
        }
    return k;
}

std::size_t algebra_index(const LieAlgebra& l) {
    if (l.dimension() == 0) return 0;
    return l.dimension() - bivector_rank(structure_bivector(l));
}

LieAlgebra subalgebra(const LieAlgebra& l, const std::vector<std::vector<Rational>>& span, const std::string& name,
                      const std::vector<std::string>& labels) {
    const std::size_t n = l.dimension();
    const std::size_t d = span.size();
    if (labels.size() != d) throw std::invalid_argument("subalgebra: label count mismatch");
    RationalMatrix basis(n, d);
    for (std::size_t s = 0; s < d; ++s) {
        if (span[s].size() != n) throw std::invalid_argument("subalgebra: vector length mismatch");
        for (std::size_t k = 0; k < n; ++k) basis(k, s) = span[s][k];
    }
    if (rank(basis) != d) throw std::invalid_argument("subalgebra: spanning vectors are dependent");
    LieAlgebra sub(name, labels);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            const auto br = l.bracket(span[a], span[b]);
            const auto coords = solve(basis, br);
            if (!coords) throw std::invalid_argument("subalgebra: span not closed under the bracket");
            sub.set_bracket(a, b, *coords);
        }
    if (l.matrices()) {
        std::vector<RationalMatrix> mats;
        for (std::size_t s = 0; s < d; ++s) {
            const auto& m0 = (*l.matrices())[0];
            RationalMatrix acc(m0.rows(), m0.cols());
            for (std::size_t k = 0; k < n; ++k)
                if (!span[s][k].is_zero()) acc = acc + span[s][k] * (*l.matrices())[k];
            mats.push_back(std::move(acc));
        }
        sub.set_matrices(std::move(mats));
    }
    return sub;
}

LieAlgebra restrict_to_indices(const LieAlgebra& l, const std::vector<std::size_t>& indices, const std::string& name) {
    const std::size_t n = l.dimension();
    std::vector<std::vector<Rational>> span;
    std::vector<std::string> labels;
    for (auto i : indices) {
        std::vector<Rational> v(n, Rational(0));
        v.at(i) = Rational(1);
        span.push_back(std::move(v));
        labels.push_back(l.labels()[i]);
    }
    return subalgebra(l, span, name, labels);
}

std::vector<std::vector<Rational>> centralizer(const LieAlgebra& l, const std::vector<std::vector<Rational>>& space,
                                               const std::vector<std::vector<Rational>>& elements) {
    const std::size_t n = l.dimension();
    const std::size_t d = space.size();
    if (d == 0) return {};
    RationalMatrix sys(n * std::max<std::size_t>(elements.size(), 1), d);
    for (std::size_t e = 0; e < elements.size(); ++e)
        for (std::size_t s = 0; s < d; ++s) {
            const auto br = l.bracket(space[s], elements[e]);
            for (std::size_t k = 0; k < n; ++k) sys(e * n + k, s) = br[k];
        }
    std::vector<std::vector<Rational>> out;
    for (const auto& coeffs : null_space(sys)) {
        std::vector<Rational> v(n, Rational(0));
        for (std::size_t s = 0; s < d; ++s)
            for (std::size_t k = 0; k < n; ++k) v[k] += coeffs[s] * space[s][k];
        out.push_back(std::move(v));
    }
    return out;
}

LieAlgebra permute_basis(const LieAlgebra& l, const std::vector<std::size_t>& perm) {
    const std::size_t n = l.dimension();
    if (perm.size() != n) throw std::invalid_argument("permute_basis: permutation length mismatch");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t p = 0; p < n; ++p) {
        if (perm[p] >= n || inv[perm[p]] != n) throw std::invalid_argument("permute_basis: not a permutation");
        inv[perm[p]] = p;
    }
    std::vector<std::string> labels;
    for (auto p : perm) labels.push_back(l.labels()[p]);
    LieAlgebra out(l.name(), labels);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const auto old = l.bracket(perm[a], perm[b]);
            std::vector<Rational> coords(n, Rational(0));
            for (std::size_t k = 0; k < n; ++k) coords[inv[k]] = old[k];
            out.set_bracket(a, b, coords);
        }
    return out;
}

GradingCheck check_grading(const SymmetricPair& p) {
    const auto& l = p.algebra;
    std::vector<int> part(l.dimension(), -1);
    for (auto i : p.g0) part[i] = 0;
    for (auto i : p.g1) part[i] = 1;
    GradingCheck g{true, true, true};
    for (std::size_t i = 0; i < l.dimension(); ++i)
        for (std::size_t j = i + 1; j < l.dimension(); ++j) {
            const int expect = (part[i] + part[j]) % 2;
            const auto br = l.bracket(i, j);
            for (std::size_t k = 0; k < l.dimension(); ++k) {
                if (br[k].is_zero() || part[k] == expect) continue;
                bool& flag = part[i] + part[j] == 0 ? g.g00 : part[i] + part[j] == 1 ? g.g01 : g.g11;
                flag = false;
            }
        }
    if (p.g0.size() + p.g1.size() != l.dimension()) g = {false, false, false};
    return g;
}

CartanSubspaceCheck check_cartan_subspace(const SymmetricPair& p) {
    const auto& l = p.algebra;
    const std::size_t n = l.dimension();
    CartanSubspaceCheck out;
    out.abelian = true;
    for (std::size_t a = 0; a < p.cartan_subspace.size(); ++a)
        for (std::size_t b = a + 1; b < p.cartan_subspace.size(); ++b)
            for (const auto& v : l.bracket(p.cartan_subspace[a], p.cartan_subspace[b]))
                if (!v.is_zero()) out.abelian = false;
    // ad c is semisimple iff the squarefree part of its characteristic polynomial kills it
    out.semisimple = true;
    for (const auto& c : p.cartan_subspace) {
        const RationalMatrix ad = ad_matrix(l, c);
        const auto coeffs = characteristic_coefficients(ad);
        std::vector<Polynomial::Term> terms;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (!coeffs[k].is_zero()) terms.emplace_back(Monomial::variable(0, static_cast<unsigned>(k)), coeffs[k]);
        const Polynomial chi = Polynomial::from_terms(1, std::move(terms));
        const Polynomial g = multivariate_gcd(chi, partial_derivative(chi, 0));
        const Polynomial q = *divide_exact(chi, g);
        RationalMatrix acc(n, n);
        RationalMatrix power = identity_matrix(n);
        for (unsigned k = 0; k <= static_cast<unsigned>(q.degree()); ++k) {
            const Rational ck = q.coefficient(Monomial::variable(0, k));
            if (!ck.is_zero()) acc = acc + ck * power;
            power = power * ad;
        }
        if (!is_zero(acc)) out.semisimple = false;
    }
    std::vector<std::vector<Rational>> g1_space;
    for (auto i : p.g1) {
        std::vector<Rational> v(n, Rational(0));
        v[i] = Rational(1);
        g1_space.push_back(std::move(v));
    }
    out.maximal = centralizer(l, g1_space, p.cartan_subspace).size() == p.cartan_subspace.size();
    return out;
}

std::vector<std::string> symmetric_pair_ids() { return {"sl2/so2", "sp4/sp2+sp2", "so4/gl2", "sl4/sp4"}; }

namespace {

// Splits the basis by the eigenvalue of conjugation by a diagonal +-1 matrix.
void split_by_conjugation(SymmetricPair& p, const std::vector<int>& signs) {
    const auto& mats = *p.algebra.matrices();
    for (std::size_t k = 0; k < mats.size(); ++k) {
        int parity = 0;
        for (std::size_t i = 0; i < mats[k].rows(); ++i)
            for (std::size_t j = 0; j < mats[k].cols(); ++j) {
                if (mats[k](i, j).is_zero()) continue;
                const int s = signs[i] * signs[j];
                if (parity != 0 && parity != s) throw std::logic_error("symmetric_pair: basis vector is not homogeneous");
                parity = s;
            }
        (parity > 0 ? p.g0 : p.g1).push_back(k);
    }
}

std::vector<Rational> unit_vector(std::size_t n, std::size_t i) {
    std::vector<Rational> v(n, Rational(0));
    v[i] = Rational(1);
    return v;
}

void finish_pair(SymmetricPair& p) {
    const std::size_t n = p.algebra.dimension();
    std::vector<int> w(n, 0);
    for (auto i : p.g1) w[i] = 1;
    p.weights = ContractionWeights(std::move(w));
    std::vector<std::vector<Rational>> g0_space;
    for (auto i : p.g0) g0_space.push_back(unit_vector(n, i));
    p.levi = centralizer(p.algebra, g0_space, p.cartan_subspace);
    if (!check_grading(p).ok()) throw std::logic_error("symmetric_pair: grading violated for " + p.id);
    if (!check_cartan_subspace(p).ok()) throw std::logic_error("symmetric_pair: invalid Cartan subspace for " + p.id);
}

// e_beta + f_beta for the first positive root vector lying in g1.
std::vector<Rational> first_g1_root_sum(const SymmetricPair& p) {
    const auto& rd = *p.algebra.root_data();
    const std::size_t n = p.algebra.dimension();
    for (std::size_t a = 0; a < rd.positive.size(); ++a) {
        const std::size_t e = rd.positive[a];
        if (std::find(p.g1.begin(), p.g1.end(), e) == p.g1.end()) continue;
        auto v = unit_vector(n, e);
        v[rd.negative[a]] = Rational(1);
        return v;
    }
    throw std::logic_error("symmetric_pair: no root vector in g1");
}

}  // namespace

SymmetricPair symmetric_pair(const std::string& id) {
    SymmetricPair p;
    p.id = id;
    if (id == "sl2/so2" || id == "sp4/sp2+sp2" || id == "so4/gl2") {
        std::vector<int> signs;
        if (id == "sl2/so2") {
            p.algebra = build_classical(ClassicalType::sl, 2);
            signs = {1, -1};
        } else if (id == "sp4/sp2+sp2") {
            p.algebra = build_classical(ClassicalType::sp, 4);
            signs = {1, -1, -1, 1};
        } else {
            p.algebra = build_classical(ClassicalType::so, 4);
            signs = {1, 1, -1, -1};
        }
        split_by_conjugation(p, signs);
        p.cartan_subspace = {first_g1_root_sum(p)};
        finish_pair(p);
        return p;
    }
    if (id == "sl4/sp4") {
        // Fixed points of X -> -Omega^{-1} X^T Omega form sp4; the -1 eigenspace is g1.
        const LieAlgebra sp4 = build_classical(ClassicalType::sp, 4);
        const RationalMatrix omega = symplectic_form(4);
        RationalMatrix sys(17, 16);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) {
                const RationalMatrix x = unit_matrix(4, a, b);
                const RationalMatrix r = x.transpose() * omega - omega * x;
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j) sys(i * 4 + j, a * 4 + b) = r(i, j);
                if (a == b) sys(16, a * 4 + b) = Rational(1);
            }
        std::vector<RationalMatrix> mats = *sp4.matrices();
        std::vector<std::string> labels = sp4.labels();
        std::size_t k = 0;
        for (const auto& v : null_space(sys)) {
            RationalMatrix x(4, 4);
            for (std::size_t a = 0; a < 16; ++a) x(a / 4, a % 4) = v[a];
            mats.push_back(x);
            labels.push_back("p" + std::to_string(++k));
        }
        p.algebra = from_matrices("sl4", labels, mats);
        p.algebra.set_classical({ClassicalType::sl, 4});
        for (std::size_t i = 0; i < sp4.dimension(); ++i) p.g0.push_back(i);
        for (std::size_t i = sp4.dimension(); i < mats.size(); ++i) p.g1.push_back(i);
        RationalMatrix c(4, 4);
        c(0, 0) = Rational(1);
        c(1, 1) = Rational(-1);
        c(2, 2) = Rational(-1);
        c(3, 3) = Rational(1);
        p.cartan_subspace = {*MatrixCoordinates(mats).coordinates(c)};
        finish_pair(p);
        return p;
    }
    throw std::invalid_argument("unknown symmetric pair '" + id + "'");
}

}  // namespace lpc
