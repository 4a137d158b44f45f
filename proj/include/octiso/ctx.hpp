/** @file ctx.hpp
 *  Scalar contexts: the one set of algorithms below is instantiated either with
 *  ring_ctx (boxed scalars over any supported ring) or fq_ctx (raw uint16 indices
 *  over a table-driven finite field, for enumeration-heavy work).
 */
#pragma once

#include <cstdint>
#include <vector>

#include "octiso/ring.hpp"

namespace octiso {

template <class C>
concept scalar_context = requires(const C& c, const typename C::elem& a, const typename C::elem& b) {
    { c.zero() } -> std::convertible_to<typename C::elem>;
    { c.one() } -> std::convertible_to<typename C::elem>;
    { c.add(a, b) } -> std::convertible_to<typename C::elem>;
    { c.sub(a, b) } -> std::convertible_to<typename C::elem>;
    { c.mul(a, b) } -> std::convertible_to<typename C::elem>;
    { c.neg(a) } -> std::convertible_to<typename C::elem>;
    { c.inv(a) } -> std::convertible_to<typename C::elem>;
    { c.eq(a, b) } -> std::convertible_to<bool>;
    { c.is_zero(a) } -> std::convertible_to<bool>;
    { c.is_unit(a) } -> std::convertible_to<bool>;
    { c.is_field() } -> std::convertible_to<bool>;
};

struct ring_ctx {
    const ring* R = nullptr;
    using elem = scalar;

    ring_ctx() = default;
    explicit ring_ctx(const ring* r) : R(r) {}
    explicit ring_ctx(const ring_ptr& r) : R(r.get()) {}

    elem zero() const { return R->zero(); }
    elem one() const { return R->one(); }
    elem from_long(long v) const { return R->from_long(v); }
    elem add(const elem& a, const elem& b) const { return R->add(a, b); }
    elem sub(const elem& a, const elem& b) const { return R->sub(a, b); }
    elem mul(const elem& a, const elem& b) const { return R->mul(a, b); }
    elem neg(const elem& a) const { return R->neg(a); }
    elem inv(const elem& a) const { return R->inv(a); }
    elem divexact(const elem& a, const elem& b) const { return R->divexact(a, b); }
    bool eq(const elem& a, const elem& b) const { return R->eq(a, b); }
    bool is_zero(const elem& a) const { return R->is_zero(a); }
    bool is_unit(const elem& a) const { return R->is_unit(a); }
    bool is_field() const { return R->is_field(); }
    bool is_integral_domain() const { return R->is_integral_domain(); }
    unsigned long size() const { return R->size(); }
    elem element(unsigned long i) const { return R->element(i); }
    std::string str(const elem& a) const { return R->str(a); }
};

struct fq_ctx {
    const ring* R = nullptr;
    int q = 0;
    const std::uint16_t* tadd = nullptr;
    const std::uint16_t* tmul = nullptr;
    const std::uint16_t* tneg = nullptr;
    const std::uint16_t* tinv = nullptr;

    using elem = std::uint16_t;

    fq_ctx() = default;
    explicit fq_ctx(const ring* r) { attach(r); }
    explicit fq_ctx(const ring_ptr& r) { attach(r.get()); }

    void attach(const ring* r) {
        require(r && r->kind == ring_kind::finite_field, "fq_ctx needs a finite field");
        R = r;
        q = r->fq_order;
        tadd = r->t_add.data();
        tmul = r->t_mul.data();
        tneg = r->t_neg.data();
        tinv = r->t_inv.data();
    }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from_long(long v) const {
        long m = v % R->fp;
        if (m < 0) m += R->fp;
        return elem(m);
    }
    elem add(elem a, elem b) const { return tadd[std::size_t(a) * q + b]; }
    elem sub(elem a, elem b) const { return tadd[std::size_t(a) * q + tneg[b]]; }
    elem mul(elem a, elem b) const { return tmul[std::size_t(a) * q + b]; }
    elem neg(elem a) const { return tneg[a]; }
    elem inv(elem a) const {
        if (a == 0) throw not_invertible("0");
        return tinv[a];
    }
    elem divexact(elem a, elem b) const { return mul(a, inv(b)); }
    bool eq(elem a, elem b) const { return a == b; }
    bool is_zero(elem a) const { return a == 0; }
    bool is_unit(elem a) const { return a != 0; }
    bool is_field() const { return true; }
    bool is_integral_domain() const { return true; }
    unsigned long size() const { return (unsigned long)q; }
    elem element(unsigned long i) const { return elem(i); }
    std::string str(elem a) const { return R->str(scalar(R, a)); }

    scalar lift(elem a) const { return scalar(R, a); }
    elem drop(const scalar& s) const {
        require(s.rng() == R, "scalar from a different ring");
        return s.fq();
    }
};

} // namespace octiso
