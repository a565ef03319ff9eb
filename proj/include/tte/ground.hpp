#pragma once
#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <variant>

#include "names.hpp"
#include "rational.hpp"

namespace tte {

// ======================================================================
// Concrete models.
//
// FiniteDiscrete and RationalLine are the ground models; ProductModel
// pairs two models so that every oracle below works on (iterated) binary
// products of ground models as well — that is what audits of product
// names run against.  Product base codes are word pairs <u1, u2>.
// ======================================================================

struct FiniteDiscrete {
    std::size_t points = 0;
    std::vector<std::pair<Word, std::vector<std::size_t>>> base;

    const std::vector<std::size_t>* extent(const Word& w) const {
        for (auto& [c, e] : base)
            if (c == w) return &e;
        return nullptr;
    }
    std::vector<Word> dom_codes() const {
        std::vector<Word> out;
        for (auto& [c, e] : base) out.push_back(c);
        return out;
    }
};

struct RationalLine {};

struct Model;
using ModelPtr = std::shared_ptr<const Model>;

struct ProductModel {
    ModelPtr left, right;
};

struct Model {
    std::variant<FiniteDiscrete, RationalLine, ProductModel> v;
};

inline ModelPtr make_model(FiniteDiscrete fd) {
    return std::make_shared<const Model>(Model{std::move(fd)});
}
inline ModelPtr make_model(RationalLine rl) {
    return std::make_shared<const Model>(Model{rl});
}
inline ModelPtr product_model(ModelPtr a, ModelPtr b) {
    return std::make_shared<const Model>(Model{ProductModel{std::move(a), std::move(b)}});
}

inline const FiniteDiscrete* as_fd(const Model& m) { return std::get_if<FiniteDiscrete>(&m.v); }
inline const RationalLine* as_rl(const Model& m) { return std::get_if<RationalLine>(&m.v); }
inline const ProductModel* as_prod(const Model& m) { return std::get_if<ProductModel>(&m.v); }

// ======================================================================
// Object specifications.
// ======================================================================

struct PointSpec {
    std::variant<std::size_t, Rat,
                 std::pair<std::shared_ptr<const PointSpec>, std::shared_ptr<const PointSpec>>>
        v;
};

struct FdSet {
    std::vector<std::size_t> pts;  // sorted, unique
};
struct ClosedIval {
    Rat lo, hi;  // lo <= hi
};
struct RlSet {
    std::vector<ClosedIval> parts;
};

struct SetSpec {
    std::variant<FdSet, RlSet,
                 std::pair<std::shared_ptr<const SetSpec>, std::shared_ptr<const SetSpec>>>
        v;
};
using CompactSpec = SetSpec;

struct OpenSpec {
    std::vector<Word> codes;
};

struct ObjectSpec {
    Kind kind;
    std::variant<PointSpec, OpenSpec, SetSpec> payload;
};

inline PointSpec fd_point(std::size_t i) { return {i}; }
inline PointSpec rl_point(Rat x) { return {x}; }
inline PointSpec pair_point(PointSpec a, PointSpec b) {
    return {std::make_pair(std::make_shared<const PointSpec>(std::move(a)),
                           std::make_shared<const PointSpec>(std::move(b)))};
}

inline SetSpec finite_set(std::vector<std::size_t> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return {FdSet{std::move(pts)}};
}
inline SetSpec interval_set(std::vector<ClosedIval> parts) {
    for (auto& p : parts)
        if (p.hi < p.lo) throw SpecMismatch("closed interval with hi < lo");
    return {RlSet{std::move(parts)}};
}
inline SetSpec pair_set(SetSpec a, SetSpec b) {
    return {std::make_pair(std::make_shared<const SetSpec>(std::move(a)),
                           std::make_shared<const SetSpec>(std::move(b)))};
}

inline ObjectSpec spec_point(PointSpec p) { return {Kind::point, std::move(p)}; }
inline ObjectSpec spec_open(std::vector<Word> codes) {
    return {Kind::open, OpenSpec{std::move(codes)}};
}
inline ObjectSpec spec_set(Kind k, SetSpec s) {
    if (k != Kind::subset && k != Kind::cover && k != Kind::min_cover)
        throw SpecMismatch("set payload requires a set-like kind");
    return {k, std::move(s)};
}

// ----------------------------------------------------------------------
// Sorted-vector set algebra for FiniteDiscrete extents.
// ----------------------------------------------------------------------

inline std::vector<std::size_t> vec_inter(const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
inline std::vector<std::size_t> vec_union(const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
inline bool vec_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ======================================================================
// Decidable oracles.  Every predicate below is exact for its model; the
// product cases reduce to the factors, so they stay exact under nesting.
// ======================================================================

inline bool model_in_dom(const Model& m, const Word& w) {
    if (auto* fd = as_fd(m)) return fd->extent(w) != nullptr;
    if (as_rl(m)) return interval_code_in_dom(w);
    auto* pr = as_prod(m);
    std::vector<Word> parts;
    try {
        parts = untuple_words(w);
    } catch (const MalformedName&) {
        return false;
    }
    return parts.size() == 2 && model_in_dom(*pr->left, parts[0]) &&
           model_in_dom(*pr->right, parts[1]);
}

namespace detail {
inline void require_dom(const Model& m, const Word& w) {
    if (!model_in_dom(m, w)) throw BadCode("code outside dom: " + w);
}
inline std::pair<Word, Word> split_pair_code(const Word& w) {
    auto parts = untuple_words(w);
    if (parts.size() != 2) throw BadCode("expected a pair code: " + w);
    return {parts[0], parts[1]};
}
}  // namespace detail

inline bool extent_empty(const Model& m, const Word& w) {
    detail::require_dom(m, w);
    if (auto* fd = as_fd(m)) return fd->extent(w)->empty();
    if (as_rl(m)) return false;  // dom codes have lo < hi
    auto* pr = as_prod(m);
    auto [u1, u2] = detail::split_pair_code(w);
    return extent_empty(*pr->left, u1) || extent_empty(*pr->right, u2);
}

inline bool extent_subset(const Model& m, const Word& w, const Word& u) {
    detail::require_dom(m, w);
    detail::require_dom(m, u);
    if (auto* fd = as_fd(m)) return vec_subset(*fd->extent(w), *fd->extent(u));
    if (as_rl(m)) {
        Ival a = interval_extent(w), b = interval_extent(u);
        return b.lo <= a.lo && a.hi <= b.hi;
    }
    auto* pr = as_prod(m);
    if (extent_empty(m, w)) return true;
    auto [w1, w2] = detail::split_pair_code(w);
    auto [u1, u2] = detail::split_pair_code(u);
    return extent_subset(*pr->left, w1, u1) && extent_subset(*pr->right, w2, u2);
}

// ν(w) ⊆ ν(u) ∩ ν(v)
inline bool extent_subset_inter(const Model& m, const Word& w, const Word& u, const Word& v) {
    detail::require_dom(m, w);
    detail::require_dom(m, u);
    detail::require_dom(m, v);
    if (auto* fd = as_fd(m))
        return vec_subset(*fd->extent(w), vec_inter(*fd->extent(u), *fd->extent(v)));
    if (as_rl(m)) {
        Ival a = interval_extent(w), b = interval_extent(u), c = interval_extent(v);
        Rat lo = std::max(b.lo, c.lo), hi = std::min(b.hi, c.hi);
        return lo <= a.lo && a.hi <= hi && a.lo < a.hi && lo < hi;
    }
    auto* pr = as_prod(m);
    if (extent_empty(m, w)) return true;
    auto [w1, w2] = detail::split_pair_code(w);
    auto [u1, u2] = detail::split_pair_code(u);
    auto [v1, v2] = detail::split_pair_code(v);
    return extent_subset_inter(*pr->left, w1, u1, v1) &&
           extent_subset_inter(*pr->right, w2, u2, v2);
}

inline bool extents_intersect(const Model& m, const Word& u, const Word& v) {
    detail::require_dom(m, u);
    detail::require_dom(m, v);
    if (auto* fd = as_fd(m)) return !vec_inter(*fd->extent(u), *fd->extent(v)).empty();
    if (as_rl(m)) {
        Ival a = interval_extent(u), b = interval_extent(v);
        return std::max(a.lo, b.lo) < std::min(a.hi, b.hi);
    }
    auto* pr = as_prod(m);
    auto [u1, u2] = detail::split_pair_code(u);
    auto [v1, v2] = detail::split_pair_code(v);
    return extents_intersect(*pr->left, u1, v1) && extents_intersect(*pr->right, u2, v2);
}

inline bool point_in_extent(const Model& m, const PointSpec& x, const Word& w) {
    detail::require_dom(m, w);
    if (auto* fd = as_fd(m)) {
        auto* i = std::get_if<std::size_t>(&x.v);
        if (!i) throw SpecMismatch("point spec does not match finite model");
        if (*i >= fd->points) throw SpecMismatch("point id out of range");
        auto& e = *fd->extent(w);
        return std::binary_search(e.begin(), e.end(), *i);
    }
    if (as_rl(m)) {
        auto* r = std::get_if<Rat>(&x.v);
        if (!r) throw SpecMismatch("point spec does not match rational model");
        Ival e = interval_extent(w);
        return e.lo < *r && *r < e.hi;
    }
    auto* pr = as_prod(m);
    auto* p = std::get_if<2>(&x.v);
    if (!p) throw SpecMismatch("point spec does not match product model");
    auto [u1, u2] = detail::split_pair_code(w);
    return point_in_extent(*pr->left, *p->first, u1) && point_in_extent(*pr->right, *p->second, u2);
}

inline bool set_empty(const SetSpec& s) {
    if (auto* f = std::get_if<FdSet>(&s.v)) return f->pts.empty();
    if (auto* r = std::get_if<RlSet>(&s.v)) return r->parts.empty();
    auto& p = std::get<2>(s.v);
    return set_empty(*p.first) || set_empty(*p.second);
}

inline bool set_intersects_extent(const Model& m, const SetSpec& s, const Word& w) {
    detail::require_dom(m, w);
    if (auto* fd = as_fd(m)) {
        auto* f = std::get_if<FdSet>(&s.v);
        if (!f) throw SpecMismatch("set spec does not match finite model");
        auto& e = *fd->extent(w);
        for (std::size_t p : f->pts)
            if (std::binary_search(e.begin(), e.end(), p)) return true;
        return false;
    }
    if (as_rl(m)) {
        auto* r = std::get_if<RlSet>(&s.v);
        if (!r) throw SpecMismatch("set spec does not match rational model");
        Ival e = interval_extent(w);
        for (auto& part : r->parts)
            if (e.lo < part.hi && part.lo < e.hi) return true;
        return false;
    }
    auto* pr = as_prod(m);
    auto* p = std::get_if<2>(&s.v);
    if (!p) throw SpecMismatch("set spec does not match product model");
    auto [u1, u2] = detail::split_pair_code(w);
    return set_intersects_extent(*pr->left, *p->first, u1) &&
           set_intersects_extent(*pr->right, *p->second, u2);
}

// ----------------------------------------------------------------------
// Cover decisions.
//
// cover_classes partitions a compact set into finitely many classes on
// which "which members of F contain this point" is constant, returning
// that member-index set per class.  F covers K iff no class has an empty
// index set; for product models the left classes recurse into the right
// factor, which is also how nested (left-associated) products work.
// ----------------------------------------------------------------------

inline std::vector<std::vector<std::size_t>> cover_classes(const Model& m, const SetSpec& k,
                                                           const std::vector<Word>& f);

namespace detail {

// classes of one closed interval [c, d] under open intervals
inline void closed_interval_classes(const Rat& c, const Rat& d, const std::vector<Ival>& exts,
                                    std::vector<std::vector<std::size_t>>& out) {
    std::vector<Rat> vals{c, d};
    for (auto& e : exts) {
        if (c < e.lo && e.lo < d) vals.push_back(e.lo);
        if (c < e.hi && e.hi < d) vals.push_back(e.hi);
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (std::size_t t = 0; t < vals.size(); ++t) {
        std::vector<std::size_t> j;
        for (std::size_t i = 0; i < exts.size(); ++i)
            if (exts[i].lo < vals[t] && vals[t] < exts[i].hi) j.push_back(i);
        out.push_back(std::move(j));
        if (t + 1 < vals.size()) {
            std::vector<std::size_t> jc;
            for (std::size_t i = 0; i < exts.size(); ++i)
                if (exts[i].lo <= vals[t] && vals[t + 1] <= exts[i].hi) jc.push_back(i);
            out.push_back(std::move(jc));
        }
    }
}

// classes of one open interval (a, b) under open intervals
inline void open_interval_classes(const Rat& a, const Rat& b, const std::vector<Ival>& exts,
                                  std::vector<std::vector<std::size_t>>& out) {
    std::vector<Rat> vals;
    for (auto& e : exts) {
        if (a < e.lo && e.lo < b) vals.push_back(e.lo);
        if (a < e.hi && e.hi < b) vals.push_back(e.hi);
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<Rat> cuts{a};
    cuts.insert(cuts.end(), vals.begin(), vals.end());
    cuts.push_back(b);
    for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
        std::vector<std::size_t> jc;
        for (std::size_t i = 0; i < exts.size(); ++i)
            if (exts[i].lo <= cuts[t] && cuts[t + 1] <= exts[i].hi) jc.push_back(i);
        out.push_back(std::move(jc));
        if (t + 2 < cuts.size()) {
            std::vector<std::size_t> j;
            for (std::size_t i = 0; i < exts.size(); ++i)
                if (exts[i].lo < cuts[t + 1] && cuts[t + 1] < exts[i].hi) j.push_back(i);
            out.push_back(std::move(j));
        }
    }
}

inline std::vector<std::vector<std::size_t>> product_point_classes(
    const Model& left, const Model& right,
    const std::function<std::vector<std::vector<std::size_t>>(const Model&,
                                                              const std::vector<Word>&)>& lcls,
    const std::function<std::vector<std::vector<std::size_t>>(const Model&,
                                                              const std::vector<Word>&)>& rcls,
    const std::vector<Word>& f) {
    std::vector<Word> firsts, seconds;
    for (auto& w : f) {
        auto [u1, u2] = split_pair_code(w);
        firsts.push_back(u1);
        seconds.push_back(u2);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& j1 : lcls(left, firsts)) {
        std::vector<Word> sub;
        for (std::size_t i : j1) sub.push_back(seconds[i]);
        for (auto& j2 : rcls(right, sub)) {
            std::vector<std::size_t> j;
            for (std::size_t idx : j2) j.push_back(j1[idx]);
            out.push_back(std::move(j));
        }
    }
    return out;
}

}  // namespace detail

inline std::vector<std::vector<std::size_t>> cover_classes(const Model& m, const SetSpec& k,
                                                           const std::vector<Word>& f) {
    if (auto* fd = as_fd(m)) {
        auto* s = std::get_if<FdSet>(&k.v);
        if (!s) throw SpecMismatch("set spec does not match finite model");
        std::vector<std::vector<std::size_t>> out;
        for (std::size_t p : s->pts) {
            std::vector<std::size_t> j;
            for (std::size_t i = 0; i < f.size(); ++i) {
                auto& e = *fd->extent(f[i]);
                if (std::binary_search(e.begin(), e.end(), p)) j.push_back(i);
            }
            out.push_back(std::move(j));
        }
        return out;
    }
    if (as_rl(m)) {
        auto* s = std::get_if<RlSet>(&k.v);
        if (!s) throw SpecMismatch("set spec does not match rational model");
        std::vector<Ival> exts;
        for (auto& w : f) exts.push_back(interval_extent(w));
        std::vector<std::vector<std::size_t>> out;
        for (auto& part : s->parts)
            detail::closed_interval_classes(part.lo, part.hi, exts, out);
        return out;
    }
    auto* pr = as_prod(m);
    auto* p = std::get_if<2>(&k.v);
    if (!p) throw SpecMismatch("set spec does not match product model");
    auto lcls = [&](const Model& mm, const std::vector<Word>& ff) {
        return cover_classes(mm, *p->first, ff);
    };
    auto rcls = [&](const Model& mm, const std::vector<Word>& ff) {
        return cover_classes(mm, *p->second, ff);
    };
    return detail::product_point_classes(*pr->left, *pr->right, lcls, rcls, f);
}

// K ⊆ ν(f_1) ∪ … ∪ ν(f_n)
inline bool covers(const Model& m, const CompactSpec& k, const std::vector<Word>& f) {
    for (auto& w : f) detail::require_dom(m, w);
    if (set_empty(k)) return true;
    for (auto& j : cover_classes(m, k, f))
        if (j.empty()) return false;
    return true;
}

// analogous classes for the open extent of w
inline std::vector<std::vector<std::size_t>> open_classes(const Model& m, const Word& w,
                                                          const std::vector<Word>& f) {
    detail::require_dom(m, w);
    if (auto* fd = as_fd(m)) {
        std::vector<std::vector<std::size_t>> out;
        for (std::size_t p : *fd->extent(w)) {
            std::vector<std::size_t> j;
            for (std::size_t i = 0; i < f.size(); ++i) {
                auto& e = *fd->extent(f[i]);
                if (std::binary_search(e.begin(), e.end(), p)) j.push_back(i);
            }
            out.push_back(std::move(j));
        }
        return out;
    }
    if (as_rl(m)) {
        Ival t = interval_extent(w);
        std::vector<Ival> exts;
        for (auto& u : f) exts.push_back(interval_extent(u));
        std::vector<std::vector<std::size_t>> out;
        detail::open_interval_classes(t.lo, t.hi, exts, out);
        return out;
    }
    auto* pr = as_prod(m);
    auto [w1, w2] = detail::split_pair_code(w);
    auto lcls = [&](const Model& mm, const std::vector<Word>& ff) {
        return open_classes(mm, w1, ff);
    };
    auto rcls = [&](const Model& mm, const std::vector<Word>& ff) {
        return open_classes(mm, w2, ff);
    };
    return detail::product_point_classes(*pr->left, *pr->right, lcls, rcls, f);
}

// ν(w) ⊆ ν(f_1) ∪ … ∪ ν(f_n)
inline bool open_subset_of_union(const Model& m, const Word& w, const std::vector<Word>& f) {
    for (auto& u : f) detail::require_dom(m, u);
    for (auto& j : open_classes(m, w, f))
        if (j.empty()) return false;
    return true;
}

// ∪ν(A) == ∪ν(B)
inline bool opens_equal(const Model& m, const std::vector<Word>& a, const std::vector<Word>& b) {
    for (auto& w : a)
        if (!open_subset_of_union(m, w, b)) return false;
    for (auto& w : b)
        if (!open_subset_of_union(m, w, a)) return false;
    return true;
}

// All dom codes, when the model has finitely many (finite factors only).
inline std::optional<std::vector<Word>> finite_dom_codes(const Model& m) {
    if (auto* fd = as_fd(m)) return fd->dom_codes();
    if (as_rl(m)) return std::nullopt;
    auto* pr = as_prod(m);
    auto l = finite_dom_codes(*pr->left), r = finite_dom_codes(*pr->right);
    if (!l || !r) return std::nullopt;
    std::vector<Word> out;
    for (auto& a : *l)
        for (auto& b : *r) out.push_back(tuple_words({a, b}));
    return out;
}

// ν(u) ∩ ν(v) as a set spec, for models whose factors are all finite.
inline SetSpec finite_inter_spec(const Model& m, const Word& u, const Word& v) {
    detail::require_dom(m, u);
    detail::require_dom(m, v);
    if (auto* fd = as_fd(m)) return finite_set(vec_inter(*fd->extent(u), *fd->extent(v)));
    if (as_rl(m)) throw SpecMismatch("intersection spec needs finite factors");
    auto* pr = as_prod(m);
    auto [u1, u2] = detail::split_pair_code(u);
    auto [v1, v2] = detail::split_pair_code(v);
    return pair_set(finite_inter_spec(*pr->left, u1, v1), finite_inter_spec(*pr->right, u2, v2));
}

// ======================================================================
// Spec validation: payload shape must match the kind, and its carriers
// must match the model factor-by-factor.
// ======================================================================

inline void check_point_spec(const Model& m, const PointSpec& p) {
    if (auto* fd = as_fd(m)) {
        auto* i = std::get_if<std::size_t>(&p.v);
        if (!i) throw SpecMismatch("point spec does not match finite model");
        if (*i >= fd->points) throw SpecMismatch("point id out of range");
        return;
    }
    if (as_rl(m)) {
        if (!std::holds_alternative<Rat>(p.v))
            throw SpecMismatch("point spec does not match rational model");
        return;
    }
    auto* pr = as_prod(m);
    auto* q = std::get_if<2>(&p.v);
    if (!q) throw SpecMismatch("point spec does not match product model");
    check_point_spec(*pr->left, *q->first);
    check_point_spec(*pr->right, *q->second);
}

inline void check_set_spec(const Model& m, const SetSpec& s) {
    if (auto* fd = as_fd(m)) {
        auto* f = std::get_if<FdSet>(&s.v);
        if (!f) throw SpecMismatch("set spec does not match finite model");
        for (std::size_t p : f->pts)
            if (p >= fd->points) throw SpecMismatch("set point out of range");
        return;
    }
    if (as_rl(m)) {
        auto* r = std::get_if<RlSet>(&s.v);
        if (!r) throw SpecMismatch("set spec does not match rational model");
        for (auto& part : r->parts)
            if (part.hi < part.lo) throw SpecMismatch("closed interval with hi < lo");
        return;
    }
    auto* pr = as_prod(m);
    auto* q = std::get_if<2>(&s.v);
    if (!q) throw SpecMismatch("set spec does not match product model");
    check_set_spec(*pr->left, *q->first);
    check_set_spec(*pr->right, *q->second);
}

inline void check_spec(const Model& m, Kind kind, const ObjectSpec& spec) {
    if (spec.kind != kind) throw SpecMismatch("spec kind does not match");
    switch (kind) {
        case Kind::point: {
            auto* p = std::get_if<PointSpec>(&spec.payload);
            if (!p) throw SpecMismatch("point kind needs a point spec");
            check_point_spec(m, *p);
            return;
        }
        case Kind::open: {
            auto* o = std::get_if<OpenSpec>(&spec.payload);
            if (!o) throw SpecMismatch("open kind needs an open spec");
            for (auto& c : o->codes)
                if (!model_in_dom(m, c)) throw SpecMismatch("open spec code outside dom: " + c);
            return;
        }
        case Kind::subset:
        case Kind::cover:
        case Kind::min_cover: {
            auto* s = std::get_if<SetSpec>(&spec.payload);
            if (!s) throw SpecMismatch("set-like kind needs a set spec");
            check_set_spec(m, *s);
            return;
        }
    }
    throw std::logic_error("check_spec: bad kind");
}

// ======================================================================
// Kind-defining token properties (shared by generators and audits).
// ======================================================================

inline bool token_satisfies(const Model& m, Kind kind, const ObjectSpec& spec, const Word& w) {
    if (spec.kind != kind) throw SpecMismatch("spec kind does not match");
    switch (kind) {
        case Kind::point: {
            auto* p = std::get_if<PointSpec>(&spec.payload);
            if (!p) throw SpecMismatch("point kind needs a point spec");
            return model_in_dom(m, w) && point_in_extent(m, *p, w);
        }
        case Kind::open: {
            auto* o = std::get_if<OpenSpec>(&spec.payload);
            if (!o) throw SpecMismatch("open kind needs an open spec");
            return model_in_dom(m, w) && open_subset_of_union(m, w, o->codes);
        }
        case Kind::subset: {
            auto* s = std::get_if<SetSpec>(&spec.payload);
            if (!s) throw SpecMismatch("subset kind needs a set spec");
            return model_in_dom(m, w) && set_intersects_extent(m, *s, w);
        }
        case Kind::cover:
        case Kind::min_cover: {
            auto* s = std::get_if<SetSpec>(&spec.payload);
            if (!s) throw SpecMismatch("cover kind needs a set spec");
            std::vector<Word> members;
            try {
                members = untuple_words(w);
            } catch (const MalformedName&) {
                return false;
            }
            for (auto& u : members)
                if (!model_in_dom(m, u)) return false;
            if (!covers(m, *s, members)) return false;
            if (kind == Kind::min_cover)
                for (auto& u : members)
                    if (!set_intersects_extent(m, *s, u)) return false;
            return true;
        }
    }
    throw std::logic_error("token_satisfies: bad kind");
}

// ======================================================================
// Model validation.
// ======================================================================

inline void validate_model(const Model& m) {
    if (auto* fd = as_fd(m)) {
        std::set<Word> codes;
        std::vector<std::size_t> all;
        for (auto& [c, e] : fd->base) {
            if (!is_word(c)) throw InvalidModel("base code is not a binary word: " + c);
            if (!codes.insert(c).second) throw InvalidModel("duplicate base code: " + c);
            if (!std::is_sorted(e.begin(), e.end()) ||
                std::adjacent_find(e.begin(), e.end()) != e.end())
                throw InvalidModel("extent not sorted/unique for code " + c);
            if (!e.empty() && e.back() >= fd->points)
                throw InvalidModel("extent point out of range for code " + c);
            all = vec_union(all, e);
        }
        if (all.size() != fd->points) throw InvalidModel("base does not cover the point set");
        for (std::size_t i = 0; i < fd->points; ++i)
            for (std::size_t j = i + 1; j < fd->points; ++j) {
                bool sep = false;
                for (auto& [c, e] : fd->base) {
                    bool bi = std::binary_search(e.begin(), e.end(), i);
                    bool bj = std::binary_search(e.begin(), e.end(), j);
                    if (bi != bj) sep = true;
                }
                if (!sep)
                    throw InvalidModel("T0 separation fails for points " + std::to_string(i) +
                                       "," + std::to_string(j));
            }
        for (auto& [cu, eu] : fd->base)
            for (auto& [cv, ev] : fd->base) {
                std::vector<std::size_t> inter = vec_inter(eu, ev), uni;
                for (auto& [cw, ew] : fd->base)
                    if (vec_subset(ew, inter)) uni = vec_union(uni, ew);
                if (uni != inter)
                    throw InvalidModel("base intersection not witnessed for codes " + cu + "," +
                                       cv);
            }
        return;
    }
    if (as_rl(m)) {
        // Witness existence is guaranteed by density; spot-check that the
        // canonical quarter-inset witnesses of a few intersections are sound.
        auto inset = [](Rat lo, Rat hi) {
            Rat d = (hi - lo) / Rat(4);
            return Ival{lo + d, hi - d};
        };
        std::vector<std::pair<Ival, Ival>> samples = {
            {{Rat(0), Rat(1)}, {Rat(1, 2), Rat(3, 2)}},
            {{Rat(-1), Rat(2)}, {Rat(0), Rat(1)}},
            {{Rat(1), Rat(2)}, {Rat(1), Rat(2)}},
        };
        for (auto& [a, b] : samples) {
            Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
            if (!(lo < hi)) throw InvalidModel("sample intersection unexpectedly empty");
            Ival w = inset(lo, hi);
            if (!(lo <= w.lo && w.lo < w.hi && w.hi <= hi))
                throw InvalidModel("inset witness not inside intersection");
        }
        return;
    }
    auto* pr = as_prod(m);
    validate_model(*pr->left);
    validate_model(*pr->right);
}

// ======================================================================
// Fair structured enumerations of rational-line codes.
//
// structured_rational walks every syntactic <sign, num, den> triple
// exactly once, in tiers by max numeral bit-length; structured intervals
// pair them along square shells.  graded_rational / graded_interval walk
// canonical codes of small values first — value grade max(|p|, q) — which
// keeps concrete covers and witnesses within small enumeration indices.
// ======================================================================

inline const SynRat& structured_rational(std::size_t k) {
    static std::vector<SynRat> cache;
    static unsigned bits = 0;
    while (cache.size() <= k) {
        ++bits;
        for (unsigned tot = bits + 1; tot <= 2 * bits; ++tot)
            for (unsigned ln = tot - bits; ln <= bits && ln + 1 <= tot; ++ln) {
                unsigned ld = tot - ln;
                if (std::max(ln, ld) != bits) continue;
                for (int sign = 0; sign < 2; ++sign)
                    for (std::uint64_t nv = 0; nv < (1ull << ln); ++nv)
                        for (std::uint64_t dv = 0; dv < (1ull << ld); ++dv) {
                            Word num, den;
                            for (unsigned b = ln; b-- > 0;)
                                num.push_back((nv >> b) & 1 ? '1' : '0');
                            for (unsigned b = ld; b-- > 0;)
                                den.push_back((dv >> b) & 1 ? '1' : '0');
                            cache.push_back(SynRat{sign == 1, num, den});
                        }
            }
    }
    return cache[k];
}

inline Word structured_interval_code(std::size_t n) {
    auto [i, j] = shell_cell(n);
    return tuple_words({structured_rational(i).code(), structured_rational(j).code()});
}

inline const Rat& graded_rational(std::size_t i) {
    static std::vector<Rat> cache;
    static std::int64_t g = 0;
    while (cache.size() <= i) {
        ++g;
        for (std::int64_t q = 1; q <= g; ++q)
            for (std::int64_t p = -g; p <= g; ++p) {
                if (std::max(p < 0 ? -p : p, q) != g) continue;
                if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
                cache.push_back(Rat(p, q));
            }
    }
    return cache[i];
}

inline const Ival& graded_interval(std::size_t k) {
    static std::vector<Ival> cache;
    static std::uint64_t shell = 0;
    while (cache.size() <= k) {
        auto [i, j] = shell_cell(shell++);
        Rat a = graded_rational(i), b = graded_rational(j);
        if (a < b) cache.push_back(Ival{a, b});
    }
    return cache[k];
}

}  // namespace tte
