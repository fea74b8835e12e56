#pragma once

// Generalized and partial Cartan prolongation of graded nonpositive parts
// inside vect(m;N|n), plus regrading and the critical-coordinate scan.
//
// Degree k is the kernel of the bracket conditions
//   g_k = { D in W_k : [D, g_{-j}] in g_{k-j} for every negative degree j }.
// Two strategies compute that kernel:
//   * direct: unknowns are the ambient component coordinates of W_k;
//   * hom: unknowns are the values of phi_j = [D, .] on a basis of g_{-j}.
//     Candidate maps are pruned by the Leibniz compatibility equations and
//     realized back to fields by integrating along the constant leads of
//     the negative basis; cap violations and bracket residues are removed
//     by one final small kernel. This keeps the linear algebra at the size
//     of the algebra rather than of the ambient component, which is what
//     makes the 15- and 20-indeterminate runs feasible.

#include <functional>
#include <map>
#include <unordered_map>

#include "vfield.hpp"

namespace mlie {

template <class F>
using BracketFn = std::function<VField<F>(const VField<F>&, const VField<F>&)>;

template <class F>
BracketFn<F> standard_bracket() {
    return [](const VField<F>& a, const VField<F>& b) { return vf_bracket(a, b); };
}

// ---------------------------------------------------------------------------

template <class F>
struct GradedPiece {
    DegreeComponent comp;
    Echelon<F> ech; // rows over comp coordinates

    std::vector<VField<F>> basis_fields() const {
        std::vector<VField<F>> out;
        out.reserve(ech.rank());
        for (auto& r : ech.rows()) out.push_back(comp.template field<F>(r));
        return out;
    }
};

template <class F>
class GradedSubspace {
  public:
    GradedSubspace() = default;
    explicit GradedSubspace(const SuperDomain* dom) : dom_(dom) {}

    const SuperDomain& domain() const { return *dom_; }
    bool has(int k) const { return pieces_.count(k) != 0; }
    size_t dim(int k) const {
        auto it = pieces_.find(k);
        return it == pieces_.end() ? 0 : it->second.ech.rank();
    }
    const GradedPiece<F>& piece(int k) const { return pieces_.at(k); }
    const std::map<int, GradedPiece<F>>& pieces() const { return pieces_; }

    int min_degree() const { return pieces_.empty() ? 0 : pieces_.begin()->first; }
    int max_degree() const { return pieces_.empty() ? 0 : pieces_.rbegin()->first; }

    size_t total_dim() const {
        size_t s = 0;
        for (auto& [k, p] : pieces_) s += p.ech.rank();
        return s;
    }

    std::pair<size_t, size_t> sdim(int k) const {
        auto it = pieces_.find(k);
        std::pair<size_t, size_t> s{0, 0};
        if (it == pieces_.end()) return s;
        for (size_t r = 0; r < it->second.ech.rank(); ++r) {
            if (it->second.comp.parity_of(it->second.ech.pivots()[r]) == 0) ++s.first;
            else ++s.second;
        }
        return s;
    }

    GradedPiece<F>& ensure(int k) {
        auto it = pieces_.find(k);
        if (it == pieces_.end()) {
            GradedPiece<F> p;
            p.comp = DegreeComponent(*dom_, k);
            p.ech = Echelon<F>(p.comp.dim());
            it = pieces_.emplace(k, std::move(p)).first;
        }
        return it->second;
    }

    void set_piece(int k, GradedPiece<F> p) { pieces_.insert_or_assign(k, std::move(p)); }

    void add_field(int k, const VField<F>& v) {
        auto& p = ensure(k);
        p.ech.add_row(p.comp.template coords<F>(v));
    }

    std::vector<VField<F>> fields(int k) const {
        auto it = pieces_.find(k);
        if (it == pieces_.end()) return {};
        return it->second.basis_fields();
    }

  private:
    const SuperDomain* dom_ = nullptr;
    std::map<int, GradedPiece<F>> pieces_;
};

// ---------------------------------------------------------------------------

template <class F>
struct NonpositivePart {
    const SuperDomain* dom = nullptr;
    BracketFn<F> bracket;                        // defaults to vf_bracket
    bool div_free_ambient = false;               // prolong inside Ker Div (deforms of svect)
    std::map<int, std::vector<VField<F>>> parts; // degree <= 0 -> spanning fields

    NonpositivePart() = default;
    explicit NonpositivePart(const SuperDomain& d) : dom(&d), bracket(standard_bracket<F>()) {}

    void add(int degree, VField<F> v) {
        if (degree > 0) throw std::invalid_argument("nonpositive part: positive degree");
        auto dg = v.degree();
        if (!dg || *dg != degree) throw std::invalid_argument("nonpositive part: field degree mismatch");
        parts[degree].push_back(std::move(v));
    }

    int depth() const { return parts.empty() ? 0 : -parts.begin()->first; }
    bool has_zero_part() const { return parts.count(0) != 0; }
};

struct ProlongOptions {
    int max_degree = 12;        // hard ceiling on computed positive degrees
    bool from_negative = false; // compute g_0 as the stabilizer of the negative part
    size_t direct_limit = 3000; // ambient size up to which the direct solver runs
    int force_method = 0;       // 0 auto, 1 direct, 2 hom (differential tests)
    bool only_j1 = false;       // enforce only the [D, g_{-1}] condition (differential tests)
    // stop as soon as a computed dimension differs from this reference
    // (used by the critical-coordinate scan)
    const std::map<int, size_t>* stop_on_difference = nullptr;
};

template <class F>
struct ProlongResult {
    GradedSubspace<F> g;
    bool stabilized = false; // trailing `depth` consecutive degrees were zero
    bool differed = false;   // a dimension differed from stop_on_difference
    int top_degree = 0;

    size_t dim(int k) const { return g.dim(k); }
    std::pair<size_t, size_t> sdim(int k) const { return g.sdim(k); }
    size_t total_dim() const { return g.total_dim(); }
};

namespace detail {

template <class F>
struct NegBasisElement {
    VField<F> field;
    int degree = -1;
    size_t lead = 0; // coefficient 1 at d_lead, no other constant coefficient
    int parity = 0;
};

// Reduce the provided negative spans to bases whose constant coefficients
// form a unit matrix. Such a presentation exists exactly when the part is
// transitive (every direction of degree j is realized at degree -j), which
// holds for all the catalog algebras.
template <class F>
std::vector<NegBasisElement<F>> lead_basis(const SuperDomain& dom,
                                           const std::map<int, std::vector<VField<F>>>& parts) {
    std::vector<NegBasisElement<F>> out;
    Monomial one(dom.size());
    for (auto& [deg, fields] : parts) {
        if (deg == 0) continue;
        std::vector<size_t> dirs;
        for (size_t i = 0; i < dom.size(); ++i)
            if (dom.deg(i) == -deg) dirs.push_back(i);
        std::vector<VField<F>> work = fields;
        std::vector<std::pair<size_t, size_t>> pivots; // (work index, dir)
        for (size_t r = 0; r < work.size(); ++r) {
            for (auto& [wi, di] : pivots) {
                F c = work[r].coeff(di).coeff(one);
                if (!c.is_zero()) work[r] -= work[wi].scaled(c);
            }
            size_t mydir = dom.size();
            for (size_t di : dirs) {
                F c = work[r].coeff(di).coeff(one);
                if (!c.is_zero()) {
                    mydir = di;
                    work[r] = work[r].scaled(F::one() / c);
                    break;
                }
            }
            if (mydir == dom.size()) {
                // no constant part: keep as a leadless basis element (its
                // bracket conditions still apply; it just cannot seed the
                // integration, which only needs every direction covered).
                if (!work[r].is_zero()) {
                    NegBasisElement<F> e;
                    e.field = work[r];
                    e.degree = deg;
                    e.lead = static_cast<size_t>(-1);
                    auto par = work[r].parity();
                    e.parity = par.value_or(0);
                    out.push_back(std::move(e));
                }
                continue;
            }
            for (auto& [wi, di] : pivots) {
                F c = work[wi].coeff(mydir).coeff(one);
                if (!c.is_zero()) work[wi] -= work[r].scaled(c);
            }
            pivots.emplace_back(r, mydir);
        }
        if (pivots.size() != dirs.size())
            throw std::domain_error("nonpositive part: not transitive at degree " + std::to_string(deg));
        for (auto& [wi, di] : pivots) {
            NegBasisElement<F> e;
            e.field = work[wi];
            e.degree = deg;
            e.lead = di;
            auto par = work[wi].parity();
            e.parity = par.value_or(0);
            out.push_back(std::move(e));
        }
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------

template <class F>
class ProlongEngine {
  public:
    ProlongEngine(const NonpositivePart<F>& np, const ProlongOptions& opt)
        : dom_(np.dom), bracket_(np.bracket ? np.bracket : standard_bracket<F>()), opt_(opt),
          div_free_(np.div_free_ambient) {
        neg_ = detail::lead_basis<F>(*dom_, np.parts);
        depth_ = np.depth();
        for (auto& [deg, fields] : np.parts) {
            if (deg == 0) continue;
            GradedPiece<F> p;
            p.comp = DegreeComponent(*dom_, deg);
            p.ech = Echelon<F>(p.comp.dim());
            for (auto& f : fields) p.ech.add_row(p.comp.template coords<F>(f));
            neg_pieces_.emplace(deg, std::move(p));
        }
        check_closure(np);
    }

    const SuperDomain& domain() const { return *dom_; }
    int depth() const { return depth_; }
    const std::map<int, GradedPiece<F>>& negative_pieces() const { return neg_pieces_; }
    const std::vector<detail::NegBasisElement<F>>& negative_basis() const { return neg_; }
    const BracketFn<F>& bracket() const { return bracket_; }

    // Solve degree k >= 0. `target(d)` is the subspace [D, g_{-j}] must land
    // in at degree d = k - j (null means zero).
    GradedPiece<F> solve_degree(int k, const std::function<const GradedPiece<F>*(int)>& target) {
        GradedPiece<F> out;
        out.comp = DegreeComponent(*dom_, k);
        out.ech = Echelon<F>(out.comp.dim());
        if (out.comp.dim() == 0) return out;
        bool blocked = dom_->weight_rank() > 0 && opt_.force_method == 0;
        if (blocked) {
            for (auto& b : neg_)
                if (!b.field.weight()) blocked = false;
        }
        if (blocked) {
            solve_direct_blocked(k, target, out);
        } else {
            bool use_direct = (opt_.force_method == 1) ||
                              (opt_.force_method == 0 && out.comp.dim() <= opt_.direct_limit);
            if (F::characteristic != 2) use_direct = true;
            if (use_direct) solve_direct(k, target, out);
            else solve_hom(k, target, out);
        }
        if (div_free_) {
            Echelon<F> allowed = div_free_subspace(out.comp);
            out.ech = subspace_intersect(out.ech, allowed);
        }
        return out;
    }

    Echelon<F> div_free_subspace(const DegreeComponent& comp) {
        std::map<Monomial, size_t> idx;
        auto mons = monomials_of_degree(*dom_, comp.degree());
        for (size_t t = 0; t < mons.size(); ++t) idx[mons[t]] = t;
        auto basis = kernel_of<F>(comp.dim(), mons.size(), [&](size_t a) {
            Row<F> img(mons.size());
            VField<F> e = VField<F>::term(*dom_, comp.key(a).mon, comp.key(a).dir);
            DivPoly<F> dv = vf_div(e);
            for (auto& [m, c] : dv.terms()) img.set(idx.at(m), c);
            return img;
        });
        return basis;
    }

  private:
    std::vector<const detail::NegBasisElement<F>*> active_neg() const {
        std::vector<const detail::NegBasisElement<F>*> v;
        for (auto& b : neg_)
            if (!opt_.only_j1 || b.degree == -1) v.push_back(&b);
        return v;
    }

    void check_closure(const NonpositivePart<F>& np) {
        for (auto& [di, fi] : np.parts)
            for (auto& [dj, fj] : np.parts) {
                if (dj > di) continue;
                for (auto& x : fi)
                    for (auto& y : fj) {
                        if (di == 0 && dj == 0) continue; // checked by callers if wanted
                        VField<F> br = bracket_(x, y);
                        check_in_span(br, di + dj, "bracket");
                    }
            }
        if constexpr (F::characteristic == 2) {
            for (auto& [di, fi] : np.parts) {
                for (auto& x : fi) {
                    auto par = x.parity();
                    if (!par || *par == 0) continue;
                    check_in_span(vf_square(x), 2 * di, "square");
                }
            }
        }
    }

    void check_in_span(const VField<F>& v, int deg, const char* what) {
        if (v.is_zero()) return;
        if (deg == 0) return; // degree-0 closure is the caller's contract
        auto it = neg_pieces_.find(deg);
        if (it == neg_pieces_.end() ||
            !it->second.ech.member(it->second.comp.template coords<F>(v)))
            throw std::domain_error(std::string("nonpositive part: not closed under ") + what);
    }

    // ---- direct ambient solver ------------------------------------------

    // Weight-block decomposition: the bracket conditions are homogeneous for
    // the domain's weight grading, so the kernel splits into independent
    // blocks indexed by the weight of the unknown component. This is what
    // keeps the 15- and 20-indeterminate scans fast.
    struct WeightBlocked {
        std::vector<std::vector<int>> weights;            // distinct weights
        std::map<std::vector<int>, size_t> index;
        std::vector<std::vector<uint32_t>> keys;          // component keys per weight
        std::vector<std::map<std::vector<int>, size_t>*> dummy;
    };

    struct SubEchelon {
        std::vector<uint32_t> keys; // global key indices of this weight class
        std::map<uint32_t, size_t> local;
        Echelon<F> ech;             // target subspace restricted to the class
    };

    // cache: (degree, weight) -> restriction of the target echelon
    std::map<std::pair<int, std::vector<int>>, SubEchelon> sub_cache_;

    const SubEchelon& sub_echelon(int deg, const std::vector<int>& w, const DegreeComponent& comp,
                                  const GradedPiece<F>* tgt) {
        auto key = std::make_pair(deg, w);
        auto it = sub_cache_.find(key);
        if (it != sub_cache_.end()) return it->second;
        SubEchelon se;
        for (size_t i = 0; i < comp.dim(); ++i)
            if (comp.weight_of(i) == w) {
                se.local.emplace(static_cast<uint32_t>(i), se.keys.size());
                se.keys.push_back(static_cast<uint32_t>(i));
            }
        se.ech = Echelon<F>(se.keys.size());
        if (tgt) {
            for (size_t r = 0; r < tgt->ech.rank(); ++r) {
                if (comp.weight_of(tgt->ech.pivots()[r]) != w) continue;
                const Row<F>& row = tgt->ech.rows()[r];
                Row<F> loc(se.keys.size());
                for (size_t i = row.first_nonzero(); i != static_cast<size_t>(-1);
                     i = row.first_nonzero(i + 1)) {
                    auto li = se.local.find(static_cast<uint32_t>(i));
                    if (li == se.local.end())
                        throw std::domain_error("prolong: target row not weight-homogeneous");
                    loc.set(li->second, row.get(i));
                }
                se.ech.add_row(std::move(loc));
            }
        }
        return sub_cache_.emplace(std::move(key), std::move(se)).first->second;
    }

    void solve_direct_blocked(int k, const std::function<const GradedPiece<F>*(int)>& target,
                              GradedPiece<F>& out) {
        auto actives = active_neg();
        // group the unknown component keys by weight
        std::map<std::vector<int>, std::vector<uint32_t>> blocks;
        for (size_t i = 0; i < out.comp.dim(); ++i)
            blocks[out.comp.weight_of(i)].push_back(static_cast<uint32_t>(i));
        struct Tgt {
            DegreeComponent comp;
            const GradedPiece<F>* piece;
            std::vector<int> bweight;
        };
        std::vector<Tgt> tg;
        for (auto* b : actives) {
            Tgt t;
            t.comp = DegreeComponent(*dom_, k + b->degree);
            t.piece = target(k + b->degree);
            auto bw = b->field.weight();
            if (!bw) throw std::domain_error("prolong: negative element not weight-homogeneous");
            t.bweight = *bw;
            tg.push_back(std::move(t));
        }
        const unsigned rank = dom_->weight_rank();
        for (auto& [w, cols] : blocks) {
            // assemble the per-block constraint matrix
            std::vector<const SubEchelon*> ses(actives.size());
            std::vector<size_t> offset(actives.size());
            size_t width = 0;
            for (size_t bi = 0; bi < actives.size(); ++bi) {
                std::vector<int> tw(rank);
                for (unsigned r = 0; r < rank; ++r) tw[r] = w[r] + tg[bi].bweight[r];
                ses[bi] = &sub_echelon(k + actives[bi]->degree, tw, tg[bi].comp, tg[bi].piece);
                offset[bi] = width;
                width += ses[bi]->keys.size();
            }
            auto image = [&](size_t a) {
                VField<F> e = VField<F>::term(*dom_, out.comp.key(cols[a]).mon,
                                              out.comp.key(cols[a]).dir);
                Row<F> img(width);
                for (size_t bi = 0; bi < actives.size(); ++bi) {
                    VField<F> br = bracket_(e, actives[bi]->field);
                    if (br.is_zero()) continue;
                    Row<F> loc(ses[bi]->keys.size());
                    for (auto& [dir, poly] : br.coeffs())
                        for (auto& [m, c] : poly.terms()) {
                            auto gi = tg[bi].comp.index_of(dir, m);
                            if (!gi) throw std::domain_error("prolong: image outside component");
                            auto li = ses[bi]->local.find(static_cast<uint32_t>(*gi));
                            if (li == ses[bi]->local.end())
                                throw std::domain_error("prolong: image outside weight block");
                            loc.set(li->second, loc.get(li->second) + c);
                        }
                    ses[bi]->ech.reduce_inplace(loc);
                    for (size_t i = loc.first_nonzero(); i != static_cast<size_t>(-1);
                         i = loc.first_nonzero(i + 1))
                        img.set(offset[bi] + i, loc.get(i));
                }
                return img;
            };
            Echelon<F> ker = kernel_of<F>(cols.size(), width, image);
            for (auto& r : ker.rows()) {
                Row<F> full(out.comp.dim());
                for (size_t a = r.first_nonzero(); a != static_cast<size_t>(-1);
                     a = r.first_nonzero(a + 1))
                    full.set(cols[a], r.get(a));
                out.ech.add_row(std::move(full));
            }
        }
    }

    void solve_direct(int k, const std::function<const GradedPiece<F>*(int)>& target,
                      GradedPiece<F>& out) {
        auto actives = active_neg();
        struct Block {
            DegreeComponent comp;
            const GradedPiece<F>* tgt;
            const detail::NegBasisElement<F>* b;
            size_t offset;
        };
        std::vector<Block> blocks;
        size_t width = 0;
        for (auto* b : actives) {
            Block blk;
            blk.comp = DegreeComponent(*dom_, k + b->degree);
            blk.tgt = target(k + b->degree);
            blk.b = b;
            blk.offset = width;
            width += blk.comp.dim();
            blocks.push_back(std::move(blk));
        }
        auto image = [&](size_t a) {
            VField<F> e = VField<F>::term(*dom_, out.comp.key(a).mon, out.comp.key(a).dir);
            Row<F> img(width);
            for (auto& blk : blocks) {
                VField<F> br = bracket_(e, blk.b->field);
                Row<F> y = blk.comp.template coords<F>(br);
                if (blk.tgt) blk.tgt->ech.reduce_inplace(y);
                for (size_t i = y.first_nonzero(); i != static_cast<size_t>(-1);
                     i = y.first_nonzero(i + 1))
                    img.set(blk.offset + i, y.get(i));
            }
            return img;
        };
        Echelon<F> ker = kernel_of<F>(out.comp.dim(), width, image);
        for (auto& r : ker.rows()) out.ech.add_row(r);
    }

    // ---- hom-space solver (called for p = 2 only) ------------------------

    void solve_hom(int k, const std::function<const GradedPiece<F>*(int)>& target,
                   GradedPiece<F>& out) {
        auto actives = active_neg();
        const size_t nb = actives.size();
        std::vector<size_t> offset(nb, 0), count(nb, 0);
        std::vector<std::vector<VField<F>>> tgt_fields(nb);
        size_t udim = 0;
        for (size_t bi = 0; bi < nb; ++bi) {
            const GradedPiece<F>* t = target(k + actives[bi]->degree);
            offset[bi] = udim;
            if (t) {
                tgt_fields[bi] = t->basis_fields();
                count[bi] = tgt_fields[bi].size();
            }
            udim += count[bi];
        }
        if (udim == 0) return;

        // Solution space S over the phi coordinates, refined per condition.
        std::vector<Row<F>> S;
        S.reserve(udim);
        for (size_t u = 0; u < udim; ++u) {
            Row<F> r(udim);
            r.set(u, F::one());
            S.push_back(std::move(r));
        }

        Monomial one(dom_->size());
        auto neg_combo = [&](const VField<F>& v, int deg) {
            std::vector<std::pair<size_t, F>> combo;
            if (v.is_zero()) return combo;
            VField<F> rest = v;
            for (size_t bi = 0; bi < nb; ++bi) {
                if (actives[bi]->degree != deg || actives[bi]->lead == static_cast<size_t>(-1))
                    continue;
                F c = rest.coeff(actives[bi]->lead).coeff(one);
                if (!c.is_zero()) {
                    combo.emplace_back(bi, c);
                    rest -= actives[bi]->field.scaled(c);
                }
            }
            if (!rest.is_zero()) throw std::domain_error("prolong: bracket outside negative span");
            return combo;
        };

        // refine S by the condition sum_u phi_u * field_u = 0
        auto refine = [&](const std::vector<std::pair<size_t, VField<F>>>& contrib) {
            if (S.empty() || contrib.empty()) return;
            // S columns at the involved coordinates
            std::unordered_map<size_t, Row<F>> cols; // u -> |S|-row of coefficients
            for (auto& [u, fld] : contrib) {
                if (cols.count(u)) continue;
                Row<F> col(S.size());
                for (size_t s = 0; s < S.size(); ++s) col.set(s, S[s].get(u));
                cols.emplace(u, std::move(col));
            }
            // rows over |S| indexed by ambient key
            struct KeyHash {
                size_t operator()(const std::pair<size_t, Monomial>& k) const {
                    size_t h = k.first * 7919;
                    for (auto e : k.second.e) h = h * 131 + e;
                    return h;
                }
            };
            std::unordered_map<std::pair<size_t, Monomial>, Row<F>, KeyHash> rows;
            for (auto& [u, fld] : contrib) {
                const Row<F>& col = cols.at(u);
                if (row_is_zero(col)) continue;
                for (auto& [dir, poly] : fld.coeffs())
                    for (auto& [m, c] : poly.terms()) {
                        auto key = std::make_pair(dir, m);
                        auto it = rows.find(key);
                        if (it == rows.end()) it = rows.emplace(key, Row<F>(S.size())).first;
                        it->second.add_scaled(col, c);
                    }
            }
            Echelon<F> cons(S.size());
            for (auto& [key, r] : rows) cons.add_row(std::move(r));
            if (cons.rank() == 0) return;
            Echelon<F> K = nullspace_from_rows(cons, S.size());
            std::vector<Row<F>> ns;
            ns.reserve(K.rank());
            for (auto& kr : K.rows()) {
                Row<F> nr(udim);
                for (size_t s = kr.first_nonzero(); s != static_cast<size_t>(-1);
                     s = kr.first_nonzero(s + 1))
                    nr.add_scaled(S[s], kr.get(s));
                ns.push_back(std::move(nr));
            }
            S = std::move(ns);
        };

        for (size_t xi = 0; xi < nb && !S.empty(); ++xi) {
            for (size_t yi = xi; yi < nb && !S.empty(); ++yi) {
                const auto& X = *actives[xi];
                const auto& Y = *actives[yi];
                std::vector<std::pair<size_t, VField<F>>> contrib;
                if (xi == yi) {
                    if constexpr (F::characteristic == 2) {
                        if (X.parity == 0) continue;
                        // squaring condition: [phi(x), x] + phi(x^2) = 0   (p = 2)
                        for (size_t t = 0; t < count[xi]; ++t)
                            contrib.emplace_back(offset[xi] + t,
                                                 bracket_(tgt_fields[xi][t], X.field));
                        for (auto& [bj, c] : neg_combo(vf_square(X.field), 2 * X.degree))
                            for (size_t t = 0; t < count[bj]; ++t)
                                contrib.emplace_back(offset[bj] + t, tgt_fields[bj][t].scaled(c));
                    } else {
                        continue;
                    }
                } else {
                    // [phi(x), y] + [x, phi(y)] + phi([x, y]) = 0   (p = 2)
                    for (size_t t = 0; t < count[yi]; ++t)
                        contrib.emplace_back(offset[yi] + t, bracket_(X.field, tgt_fields[yi][t]));
                    for (size_t t = 0; t < count[xi]; ++t)
                        contrib.emplace_back(offset[xi] + t, bracket_(tgt_fields[xi][t], Y.field));
                    VField<F> br = bracket_(X.field, Y.field);
                    if (!br.is_zero())
                        for (auto& [bj, c] : neg_combo(br, X.degree + Y.degree))
                            for (size_t t = 0; t < count[bj]; ++t)
                                contrib.emplace_back(offset[bj] + t, tgt_fields[bj][t].scaled(c));
                }
                refine(contrib);
            }
        }
        if (S.empty()) return;

        // realize candidates and kill cap violations / bracket residues
        SuperDomain relaxed = relaxed_domain(k);
        std::vector<VField<F>> cand;
        std::vector<std::vector<std::pair<size_t, F>>> defects;
        std::unordered_map<uint64_t, size_t> defect_keys;
        auto defect_index = [&](uint64_t h) {
            auto it = defect_keys.find(h);
            if (it != defect_keys.end()) return it->second;
            size_t idx = defect_keys.size();
            defect_keys.emplace(h, idx);
            return idx;
        };
        for (auto& srow : S) {
            std::vector<VField<F>> phiv(nb, VField<F>(&relaxed));
            for (size_t bi = 0; bi < nb; ++bi) {
                VField<F> v(dom_);
                for (size_t t = 0; t < count[bi]; ++t) {
                    F c = srow.get(offset[bi] + t);
                    if (!c.is_zero()) v += tgt_fields[bi][t].scaled(c);
                }
                phiv[bi] = v.rebased(relaxed);
            }
            VField<F> full = integrate_phi(k, actives, phiv, relaxed);
            VField<F> legal(dom_);
            std::vector<std::pair<size_t, F>> def;
            for (auto& [dir, poly] : full.coeffs())
                for (auto& [m, c] : poly.terms()) {
                    if (monomial_legal(*dom_, m)) {
                        legal.add_coeff(dir, DivPoly<F>::monomial(*dom_, m, c));
                    } else {
                        uint64_t h = 0x9e3779b97f4a7c15ull ^ (dir * 1000003ull);
                        for (auto e : m.e) h = h * 1315423911ull + e;
                        def.emplace_back(defect_index(h), c);
                    }
                }
            VField<F> lr = legal.rebased(relaxed);
            for (size_t bi = 0; bi < nb; ++bi) {
                VField<F> resid =
                    bracket_(lr, actives[bi]->field.rebased(relaxed)) - phiv[bi];
                for (auto& [dir, poly] : resid.coeffs())
                    for (auto& [m, c] : poly.terms()) {
                        uint64_t h = (bi + 2) * 0x8da6b343ull ^ (dir * 1000003ull);
                        for (auto e : m.e) h = h * 1315423911ull + e;
                        def.emplace_back(defect_index(h), c);
                    }
            }
            cand.push_back(std::move(legal));
            defects.push_back(std::move(def));
        }
        if (defect_keys.empty()) {
            for (auto& c : cand) out.ech.add_row(out.comp.template coords<F>(c));
            return;
        }
        size_t nkeys = defect_keys.size();
        auto image = [&](size_t a) {
            Row<F> img(nkeys);
            for (auto& [idx, c] : defects[a]) img.set(idx, img.get(idx) + c);
            return img;
        };
        Echelon<F> good = kernel_of<F>(cand.size(), nkeys, image);
        for (auto& combo : good.rows()) {
            VField<F> v(dom_);
            for (size_t a = combo.first_nonzero(); a != static_cast<size_t>(-1);
                 a = combo.first_nonzero(a + 1))
                v += cand[a].scaled(combo.get(a));
            if (!v.is_zero()) out.ech.add_row(out.comp.template coords<F>(v));
        }
    }

    Echelon<F> nullspace_from_rows(const Echelon<F>& rows, size_t dim) {
        Echelon<F> out(dim);
        std::vector<char> is_pivot(dim, 0);
        for (auto p : rows.pivots()) is_pivot[p] = 1;
        for (size_t j = 0; j < dim; ++j) {
            if (is_pivot[j]) continue;
            Row<F> v(dim);
            v.set(j, F::one());
            for (size_t r = 0; r < rows.rank(); ++r) {
                F c = rows.rows()[r].get(j);
                if (!c.is_zero()) v.set(rows.pivots()[r], -c);
            }
            out.add_row(std::move(v));
        }
        return out;
    }

    SuperDomain relaxed_domain(int k) const {
        std::vector<unsigned> N(dom_->size());
        int maxdeg = 1;
        for (size_t i = 0; i < dom_->size(); ++i) maxdeg = std::max(maxdeg, dom_->deg(i));
        unsigned need = static_cast<unsigned>(std::max(1, k + maxdeg + depth_ + 2));
        for (size_t i = 0; i < dom_->size(); ++i) {
            unsigned nb = 1;
            unsigned long cap = dom_->characteristic();
            while (cap <= need) { cap *= dom_->characteristic(); ++nb; }
            N[i] = dom_->odd(i) ? dom_->shearing(i) : std::max(dom_->shearing(i), nb);
        }
        return dom_->with_shearing(N);
    }

    // Reconstruct the field with [D, b] = phi(b) by integrating along the
    // constant leads; works in the relaxed domain so cap violations show up
    // as explicit coefficients.
    VField<F> integrate_phi(int k, const std::vector<const detail::NegBasisElement<F>*>& actives,
                            const std::vector<VField<F>>& phiv, const SuperDomain& relaxed) {
        std::vector<size_t> lead_of(dom_->size(), static_cast<size_t>(-1));
        for (size_t bi = 0; bi < actives.size(); ++bi)
            if (actives[bi]->lead != static_cast<size_t>(-1)) lead_of[actives[bi]->lead] = bi;

        struct MemoHash {
            size_t operator()(const std::pair<size_t, Monomial>& kk) const {
                size_t h = kk.first * 7919;
                for (auto e : kk.second.e) h = h * 131 + e;
                return h;
            }
        };
        enum class St : uint8_t { Busy, Done };
        std::unordered_map<std::pair<size_t, Monomial>, std::pair<St, F>, MemoHash> memo;

        std::function<F(size_t, const Monomial&)> solve = [&](size_t i, const Monomial& m) -> F {
            if (monomial_degree(*dom_, m) != k + dom_->deg(i)) return F::zero();
            for (size_t idx = 0; idx < m.e.size(); ++idx)
                if (!relaxed.exponent_ok(idx, m.e[idx])) return F::zero();
            auto key = std::make_pair(i, m);
            auto it = memo.find(key);
            if (it != memo.end()) {
                if (it->second.first == St::Busy)
                    throw std::domain_error("prolong: cyclic reconstruction (lead structure violated)");
                return it->second.second;
            }
            memo.emplace(key, std::make_pair(St::Busy, F::zero()));
            size_t l = static_cast<size_t>(-1);
            // prefer the lead of deepest degree for the well-founded order
            for (size_t idx = 0; idx < m.e.size(); ++idx)
                if (m.e[idx] > 0 && lead_of[idx] != static_cast<size_t>(-1) &&
                    (l == static_cast<size_t>(-1) || dom_->deg(idx) > dom_->deg(l)))
                    l = idx;
            if (l == static_cast<size_t>(-1))
                throw std::domain_error("prolong: no lead covers a direction");
            size_t bi = lead_of[l];
            const auto& B = actives[bi]->field;
            Monomial mp = m;
            mp.e[l] -= 1;
            F val = phiv[bi].coeff(i).coeff(mp);
            // + D(b_i)|_mp
            {
                auto itb = B.coeffs().find(i);
                if (itb != B.coeffs().end())
                    for (auto& [mb, cb] : itb->second.terms())
                        for (size_t a = 0; a < dom_->size(); ++a) {
                            if (!mb.e[a]) continue;
                            Monomial mc = mb;
                            mc.e[a] -= 1;
                            bool ok = true;
                            Monomial mf(dom_->size());
                            F bin = F::one();
                            for (size_t t = 0; t < dom_->size(); ++t) {
                                if (mp.e[t] < mc.e[t]) { ok = false; break; }
                                mf.e[t] = static_cast<Exponent>(mp.e[t] - mc.e[t]);
                                if (dom_->odd(t)) {
                                    if (mp.e[t] > 1) { ok = false; break; }
                                } else if (mc.e[t]) {
                                    bin *= field_binom<F>(mp.e[t], mc.e[t]);
                                    if (bin.is_zero()) { ok = false; break; }
                                }
                            }
                            if (!ok) continue;
                            F fa = solve(a, mf);
                            if (!fa.is_zero()) val += fa * cb * bin;
                        }
            }
            // + sum_a (b_a d_a f_i)|_mp over correction terms of b
            for (auto& [a, bpoly] : B.coeffs()) {
                for (auto& [mb, cb] : bpoly.terms()) {
                    if (a == actives[bi]->lead && mb.is_one()) continue;
                    bool ok = true;
                    Monomial mf(dom_->size());
                    F bin = F::one();
                    for (size_t t = 0; t < dom_->size(); ++t) {
                        if (mp.e[t] < mb.e[t]) { ok = false; break; }
                        mf.e[t] = static_cast<Exponent>(mp.e[t] - mb.e[t]);
                        if (dom_->odd(t)) {
                            if (mp.e[t] > 1) { ok = false; break; }
                        } else if (mb.e[t]) {
                            bin *= field_binom<F>(mp.e[t], mb.e[t]);
                            if (bin.is_zero()) { ok = false; break; }
                        }
                    }
                    if (!ok) continue;
                    if (dom_->odd(a) && mf.e[a] + 1 > 1) continue;
                    mf.e[a] += 1;
                    F fi = solve(i, mf);
                    if (!fi.is_zero()) val += fi * cb * bin;
                }
            }
            memo[key] = std::make_pair(St::Done, val);
            return val;
        };

        DegreeComponent comp(*dom_, k);
        for (size_t idx = 0; idx < comp.dim(); ++idx) solve(comp.key(idx).dir, comp.key(idx).mon);
        VField<F> full(&relaxed);
        for (auto& [key, st] : memo)
            if (st.first == St::Done && !st.second.is_zero())
                full.add_coeff(key.first, DivPoly<F>::monomial(relaxed, key.second, st.second));
        return full;
    }

    const SuperDomain* dom_;
    BracketFn<F> bracket_;
    ProlongOptions opt_;
    bool div_free_ = false;
    std::vector<detail::NegBasisElement<F>> neg_;
    std::map<int, GradedPiece<F>> neg_pieces_;
    int depth_ = 0;
};

// ---------------------------------------------------------------------------
// Drivers.

template <class F>
ProlongResult<F> complete_prolong(const NonpositivePart<F>& np, const ProlongOptions& opt = {}) {
    ProlongEngine<F> eng(np, opt);
    ProlongResult<F> res;
    res.g = GradedSubspace<F>(np.dom);
    for (auto& [deg, piece] : eng.negative_pieces()) res.g.set_piece(deg, piece);

    auto resolver = [&](int d) -> const GradedPiece<F>* {
        if (!res.g.has(d)) return nullptr;
        return &res.g.piece(d);
    };

    if (opt.from_negative || !np.has_zero_part()) {
        res.g.set_piece(0, eng.solve_degree(0, resolver));
    } else {
        GradedPiece<F> p0;
        p0.comp = DegreeComponent(*np.dom, 0);
        p0.ech = Echelon<F>(p0.comp.dim());
        for (auto& f : np.parts.at(0)) p0.ech.add_row(p0.comp.template coords<F>(f));
        res.g.set_piece(0, std::move(p0));
    }

    int zeros = 0;
    int k = 1;
    for (; k <= opt.max_degree; ++k) {
        GradedPiece<F> gk = eng.solve_degree(k, resolver);
        size_t d = gk.ech.rank();
        res.g.set_piece(k, std::move(gk));
        res.top_degree = k;
        if (opt.stop_on_difference) {
            auto it = opt.stop_on_difference->find(k);
            if (it == opt.stop_on_difference->end() || it->second != d) {
                res.differed = true;
                break;
            }
        }
        zeros = (d == 0) ? zeros + 1 : 0;
        if (zeros >= eng.depth()) {
            res.stabilized = true;
            break;
        }
    }
    return res;
}

// Partial prolongation: given the complete result's graded subspace, replace
// degree >= `from_degree` targets by the designated subspaces in `h` and
// re-run upward. h must contain pieces for from_degree-1 ... (usually h1);
// degrees below from_degree-1 are taken from `base`.
template <class F>
ProlongResult<F> partial_prolong(const NonpositivePart<F>& np, const GradedSubspace<F>& base,
                                 const std::map<int, GradedPiece<F>>& h, int from_degree,
                                 const ProlongOptions& opt = {}) {
    ProlongEngine<F> eng(np, opt);
    ProlongResult<F> res;
    res.g = GradedSubspace<F>(np.dom);
    for (int d = base.min_degree(); d < from_degree; ++d)
        if (base.has(d)) res.g.set_piece(d, base.piece(d));
    for (auto& [d, piece] : h) res.g.set_piece(d, piece);

    auto resolver = [&](int d) -> const GradedPiece<F>* {
        if (!res.g.has(d)) return nullptr;
        return &res.g.piece(d);
    };

    int zeros = 0;
    int start = 0;
    for (auto& [d, piece] : h) start = std::max(start, d + 1);
    for (int k = start; k <= opt.max_degree; ++k) {
        GradedPiece<F> gk = eng.solve_degree(k, resolver);
        size_t dd = gk.ech.rank();
        res.g.set_piece(k, std::move(gk));
        res.top_degree = k;
        zeros = (dd == 0) ? zeros + 1 : 0;
        if (zeros >= eng.depth()) {
            res.stabilized = true;
            break;
        }
    }
    return res;
}

// Re-bucket fields by a new degree vector (a relabeling, no recomputation);
// elements are split monomial-wise, which is always possible.
template <class F>
GradedSubspace<F> regrade(const std::vector<VField<F>>& fields, const SuperDomain& newdom) {
    GradedSubspace<F> out(&newdom);
    for (auto& f : fields) {
        std::map<int, VField<F>> buckets;
        for (auto& [dir, poly] : f.coeffs())
            for (auto& [m, c] : poly.terms()) {
                int d = monomial_degree(newdom, m) - newdom.deg(dir);
                auto it = buckets.find(d);
                if (it == buckets.end()) it = buckets.emplace(d, VField<F>(&newdom)).first;
                it->second.add_coeff(dir, DivPoly<F>::monomial(newdom, m, c));
            }
        for (auto& [d, v] : buckets) out.add_field(d, v);
    }
    return out;
}

// Critical coordinates: coordinate i is noncritical iff raising N_i by one
// strictly increases the total dimension through the baseline cutoff. This
// is a certificate at the chosen cutoff, not a proof.
template <class F>
std::vector<size_t>
noncritical_coordinates(const std::function<NonpositivePart<F>(const std::vector<unsigned>&)>& builder,
                        const std::vector<unsigned>& baseN, const ProlongOptions& opt = {}) {
    NonpositivePart<F> base = builder(baseN);
    ProlongOptions o = opt;
    ProlongResult<F> ref = complete_prolong(base, o);
    o.max_degree = ref.top_degree;
    // dimensions (negative parts can only grow by new basis monomials, which
    // the builders transplant; positive degrees are compared one by one and
    // the recomputation stops at the first difference)
    std::map<int, size_t> refdims;
    for (int d = 1; d <= ref.top_degree; ++d) refdims[d] = ref.g.dim(d);
    std::vector<size_t> noncritical;
    for (size_t i = 0; i < baseN.size(); ++i) {
        if (base.dom->odd(i)) continue;
        std::vector<unsigned> N = baseN;
        N[i] += 1;
        NonpositivePart<F> np = builder(N);
        ProlongOptions oi = o;
        oi.stop_on_difference = &refdims;
        ProlongResult<F> r = complete_prolong(np, oi);
        size_t tot = 0, reft = 0;
        for (int d = r.g.min_degree(); d <= o.max_degree; ++d) tot += r.g.dim(d);
        for (int d = ref.g.min_degree(); d <= o.max_degree; ++d) reft += ref.g.dim(d);
        if (r.differed || tot > reft) noncritical.push_back(i);
    }
    return noncritical;
}

} // namespace mlie
