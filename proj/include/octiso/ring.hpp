/** @file ring.hpp
 *  Runtime-selected commutative rings with exact scalar arithmetic.
 *
 *  Supported: Z, Q, Z/n (n >= 2), F_q = F_p[x]/(f) with q <= 343 (table driven),
 *  R[t] and R[t,1/t] over any supported base. Every scalar is kept in a canonical
 *  form so equality is representational equality.
 */
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "octiso/common.hpp"

namespace octiso {

enum class ring_kind { integers, rationals, mod_n, finite_field, poly, laurent };

class ring;
using ring_ptr = std::shared_ptr<const ring>;

class scalar;

/// Polynomial payload: ascending coefficients over the base ring, no trailing zeros.
struct poly_data {
    std::vector<scalar> c;
};

/// Laurent payload: x = sum c[i] t^(low+i), first and last coefficients nonzero unless empty.
struct laurent_data {
    long low = 0;
    std::vector<scalar> c;
};

class scalar {
  public:
    using payload = std::variant<mpz_class, mpq_class, std::uint16_t, poly_data, laurent_data>;

    scalar() : ring_(nullptr) {}
    scalar(const ring* r, payload v) : ring_(r), v_(std::move(v)) {}

    const ring* rng() const { return ring_; }
    const payload& val() const { return v_; }
    payload& val() { return v_; }

    const mpz_class& z() const { return std::get<mpz_class>(v_); }
    const mpq_class& q() const { return std::get<mpq_class>(v_); }
    std::uint16_t fq() const { return std::get<std::uint16_t>(v_); }
    const poly_data& poly() const { return std::get<poly_data>(v_); }
    const laurent_data& laurent() const { return std::get<laurent_data>(v_); }

  private:
    const ring* ring_;
    payload v_;
};

namespace detail {
inline bool is_small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}
} // namespace detail

class ring : public std::enable_shared_from_this<ring> {
  public:
    ring_kind kind;

    // mod_n
    mpz_class modulus;

    // finite_field: F_p[x]/(f), elements indexed by base-p digit strings of their coefficients
    int fp = 0;
    int fdeg = 1;
    int fq_order = 0;
    std::vector<int> minpoly; // monic, length fdeg+1, coefficients in [0, p)
    std::vector<std::uint16_t> t_add, t_mul, t_neg, t_inv;

    // poly / laurent
    ring_ptr coeff;
    std::string var = "t";

    // ---- constructors ----

    static ring_ptr integers() {
        auto r = std::make_shared<ring>();
        r->kind = ring_kind::integers;
        return r;
    }

    static ring_ptr rationals() {
        auto r = std::make_shared<ring>();
        r->kind = ring_kind::rationals;
        return r;
    }

    static ring_ptr mod(const mpz_class& n) {
        require(n >= 2, "Z/n requires n >= 2");
        auto r = std::make_shared<ring>();
        r->kind = ring_kind::mod_n;
        r->modulus = n;
        return r;
    }

    /// F_p when f is empty or {0,1}; otherwise F_p[x]/(f) with f given by ascending
    /// integer coefficients (must be monic and irreducible, degree <= 4).
    static ring_ptr gf(int p, std::vector<int> f = {}) {
        require(p >= 2 && p <= 343 && detail::is_small_prime(p), "F_q requires prime p <= 343");
        auto r = std::make_shared<ring>();
        r->kind = ring_kind::finite_field;
        r->fp = p;
        if (f.empty()) f = {0, 1};
        for (auto& c : f) c = ((c % p) + p) % p;
        while (f.size() > 1 && f.back() == 0) f.pop_back();
        require(f.size() >= 2, "minimal polynomial must have degree >= 1");
        require(f.back() == 1, "minimal polynomial must be monic");
        r->fdeg = int(f.size()) - 1;
        require(r->fdeg <= 4, "extension degree must be <= 4");
        long q = 1;
        for (int i = 0; i < r->fdeg; ++i) q *= p;
        require(q <= 343, "field order must be <= 343");
        r->fq_order = int(q);
        r->minpoly = f;
        require(r->fdeg == 1 || fp_poly_irreducible(p, f), "minimal polynomial is reducible");
        r->build_tables();
        return r;
    }

    /// Field of order q = p^k; picks the lexicographically first irreducible monic f when none given.
    static ring_ptr gf_order(int q, std::vector<int> f = {}) {
        require(q >= 2 && q <= 343, "field order must be in [2, 343]");
        int p = 0;
        for (int d = 2; d <= q; ++d)
            if (q % d == 0) { p = d; break; }
        int k = 0;
        long m = 1;
        while (m < q) { m *= p; ++k; }
        require(m == q, "field order must be a prime power");
        if (k == 1) return gf(p, std::move(f));
        if (!f.empty()) return gf(p, std::move(f));
        // search f = x^k + c_{k-1} x^{k-1} + ... + c_0 in lexicographic (c_0, ..., c_{k-1}) order
        std::vector<int> c(k, 0);
        for (;;) {
            std::vector<int> cand(c.begin(), c.end());
            cand.push_back(1);
            if (fp_poly_irreducible(p, cand)) return gf(p, std::move(cand));
            int i = 0;
            while (i < k && ++c[i] == p) c[i++] = 0;
            require(i < k, "no irreducible polynomial found");
        }
    }

    static ring_ptr polynomials(ring_ptr base, std::string v = "t") {
        require(base != nullptr, "polynomial ring needs a base ring");
        auto r = std::make_shared<ring>();
        r->kind = ring_kind::poly;
        r->coeff = std::move(base);
        r->var = std::move(v);
        return r;
    }

    static ring_ptr laurent(ring_ptr base, std::string v = "t") {
        require(base != nullptr, "Laurent ring needs a base ring");
        auto r = std::make_shared<ring>();
        r->kind = ring_kind::laurent;
        r->coeff = std::move(base);
        r->var = std::move(v);
        return r;
    }

    static ring_ptr parse(const std::string& spec);
    std::string spec() const;

    // ---- element construction ----

    scalar zero() const { return from_long(0); }
    scalar one() const { return from_long(1); }

    scalar from_long(long v) const { return from_z(mpz_class(v)); }

    scalar from_z(const mpz_class& v) const {
        switch (kind) {
            case ring_kind::integers: return scalar(this, v);
            case ring_kind::rationals: return scalar(this, mpq_class(v));
            case ring_kind::mod_n: return scalar(this, canon_mod(v));
            case ring_kind::finite_field: {
                mpz_class m = canon(v, fp);
                return scalar(this, std::uint16_t(m.get_ui()));
            }
            case ring_kind::poly: {
                poly_data p;
                scalar c = coeff->from_z(v);
                if (!coeff->is_zero(c)) p.c.push_back(std::move(c));
                return scalar(this, std::move(p));
            }
            case ring_kind::laurent: {
                laurent_data l;
                scalar c = coeff->from_z(v);
                if (!coeff->is_zero(c)) l.c.push_back(std::move(c));
                return scalar(this, std::move(l));
            }
        }
        throw precondition_error("bad ring kind");
    }

    /// Element with the given coordinates over the prime field (finite fields only).
    scalar fq_from_digits(const std::vector<int>& digits) const {
        require(kind == ring_kind::finite_field, "fq_from_digits needs a finite field");
        long idx = 0, b = 1;
        for (int i = 0; i < fdeg; ++i) {
            int d = i < int(digits.size()) ? ((digits[i] % fp) + fp) % fp : 0;
            idx += d * b;
            b *= fp;
        }
        return scalar(this, std::uint16_t(idx));
    }

    // ---- predicates ----

    bool is_field() const {
        switch (kind) {
            case ring_kind::rationals:
            case ring_kind::finite_field: return true;
            case ring_kind::mod_n: return mpz_probab_prime_p(modulus.get_mpz_t(), 40) != 0;
            default: return false;
        }
    }

    bool is_integral_domain() const {
        switch (kind) {
            case ring_kind::integers:
            case ring_kind::rationals:
            case ring_kind::finite_field: return true;
            case ring_kind::mod_n: return is_field();
            case ring_kind::poly:
            case ring_kind::laurent: return coeff->is_integral_domain();
        }
        return false;
    }

    mpz_class characteristic() const {
        switch (kind) {
            case ring_kind::integers:
            case ring_kind::rationals: return 0;
            case ring_kind::mod_n: return modulus;
            case ring_kind::finite_field: return fp;
            case ring_kind::poly:
            case ring_kind::laurent: return coeff->characteristic();
        }
        return 0;
    }

    /// Number of elements for finite rings, 0 for infinite ones.
    unsigned long size() const {
        switch (kind) {
            case ring_kind::mod_n:
                return modulus.fits_ulong_p() ? modulus.get_ui() : 0;
            case ring_kind::finite_field: return fq_order;
            default: return 0;
        }
    }

    scalar element(unsigned long i) const {
        require(size() != 0 && i < size(), "element index out of range");
        if (kind == ring_kind::finite_field) return scalar(this, std::uint16_t(i));
        return from_z(mpz_class(i));
    }

    // ---- arithmetic ----

    bool is_zero(const scalar& a) const { return eq(a, zero_ref(a)); }

    bool eq(const scalar& a, const scalar& b) const {
        check(a); check(b);
        switch (kind) {
            case ring_kind::integers:
            case ring_kind::mod_n: return a.z() == b.z();
            case ring_kind::rationals: return a.q() == b.q();
            case ring_kind::finite_field: return a.fq() == b.fq();
            case ring_kind::poly: {
                const auto &x = a.poly().c, &y = b.poly().c;
                if (x.size() != y.size()) return false;
                for (size_t i = 0; i < x.size(); ++i)
                    if (!coeff->eq(x[i], y[i])) return false;
                return true;
            }
            case ring_kind::laurent: {
                const auto &x = a.laurent(), &y = b.laurent();
                if (x.c.size() != y.c.size()) return false;
                if (!x.c.empty() && x.low != y.low) return false;
                for (size_t i = 0; i < x.c.size(); ++i)
                    if (!coeff->eq(x.c[i], y.c[i])) return false;
                return true;
            }
        }
        return false;
    }

    scalar add(const scalar& a, const scalar& b) const {
        check(a); check(b);
        switch (kind) {
            case ring_kind::integers: return scalar(this, mpz_class(a.z() + b.z()));
            case ring_kind::rationals: return scalar(this, mpq_class(a.q() + b.q()));
            case ring_kind::mod_n: return scalar(this, canon_mod(a.z() + b.z()));
            case ring_kind::finite_field:
                return scalar(this, t_add[std::size_t(a.fq()) * fq_order + b.fq()]);
            case ring_kind::poly: {
                poly_data r;
                r.c = poly_add(a.poly().c, b.poly().c);
                return scalar(this, std::move(r));
            }
            case ring_kind::laurent: return laurent_make(laurent_add(a.laurent(), b.laurent()));
        }
        throw precondition_error("bad ring kind");
    }

    scalar neg(const scalar& a) const {
        check(a);
        switch (kind) {
            case ring_kind::integers: return scalar(this, mpz_class(-a.z()));
            case ring_kind::rationals: return scalar(this, mpq_class(-a.q()));
            case ring_kind::mod_n: return scalar(this, canon_mod(-a.z()));
            case ring_kind::finite_field: return scalar(this, t_neg[a.fq()]);
            case ring_kind::poly: {
                poly_data r;
                r.c.reserve(a.poly().c.size());
                for (const auto& c : a.poly().c) r.c.push_back(coeff->neg(c));
                return scalar(this, std::move(r));
            }
            case ring_kind::laurent: {
                laurent_data r = a.laurent();
                for (auto& c : r.c) c = coeff->neg(c);
                return scalar(this, std::move(r));
            }
        }
        throw precondition_error("bad ring kind");
    }

    scalar sub(const scalar& a, const scalar& b) const { return add(a, neg(b)); }

    scalar mul(const scalar& a, const scalar& b) const {
        check(a); check(b);
        switch (kind) {
            case ring_kind::integers: return scalar(this, mpz_class(a.z() * b.z()));
            case ring_kind::rationals: return scalar(this, mpq_class(a.q() * b.q()));
            case ring_kind::mod_n: return scalar(this, canon_mod(a.z() * b.z()));
            case ring_kind::finite_field:
                return scalar(this, t_mul[std::size_t(a.fq()) * fq_order + b.fq()]);
            case ring_kind::poly: {
                poly_data r;
                r.c = poly_mul(a.poly().c, b.poly().c);
                return scalar(this, std::move(r));
            }
            case ring_kind::laurent: {
                const auto &x = a.laurent(), &y = b.laurent();
                laurent_data r;
                r.low = x.low + y.low;
                r.c = poly_mul(x.c, y.c);
                return laurent_make(std::move(r));
            }
        }
        throw precondition_error("bad ring kind");
    }

    bool is_unit(const scalar& a) const {
        check(a);
        switch (kind) {
            case ring_kind::integers: return a.z() == 1 || a.z() == -1;
            case ring_kind::rationals: return a.q() != 0;
            case ring_kind::mod_n: {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), a.z().get_mpz_t(), modulus.get_mpz_t());
                return g == 1;
            }
            case ring_kind::finite_field: return a.fq() != 0;
            case ring_kind::poly: {
                const auto& c = a.poly().c;
                if (c.empty() || !coeff->is_unit(c[0])) return false;
                for (size_t i = 1; i < c.size(); ++i)
                    if (!coeff->is_nilpotent(c[i])) return false;
                return true;
            }
            case ring_kind::laurent: {
                // contract: units are monomials u * t^k with u a base-ring unit
                const auto& l = a.laurent();
                return l.c.size() == 1 && coeff->is_unit(l.c[0]);
            }
        }
        return false;
    }

    bool is_nilpotent(const scalar& a) const {
        check(a);
        switch (kind) {
            case ring_kind::integers:
            case ring_kind::rationals:
            case ring_kind::finite_field: return is_zero(a);
            case ring_kind::mod_n: {
                if (a.z() == 0) return true;
                mpz_class e = mpz_class(mpz_sizeinbase(modulus.get_mpz_t(), 2));
                mpz_class r;
                mpz_powm(r.get_mpz_t(), a.z().get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
                return r == 0;
            }
            case ring_kind::poly: {
                for (const auto& c : a.poly().c)
                    if (!coeff->is_nilpotent(c)) return false;
                return true;
            }
            case ring_kind::laurent: {
                for (const auto& c : a.laurent().c)
                    if (!coeff->is_nilpotent(c)) return false;
                return true;
            }
        }
        return false;
    }

    scalar inv(const scalar& a) const {
        check(a);
        if (!is_unit(a)) throw not_invertible(str(a));
        switch (kind) {
            case ring_kind::integers: return scalar(this, mpz_class(a.z()));
            case ring_kind::rationals: return scalar(this, mpq_class(1 / a.q()));
            case ring_kind::mod_n: {
                mpz_class r;
                int ok = mpz_invert(r.get_mpz_t(), a.z().get_mpz_t(), modulus.get_mpz_t());
                require(ok != 0, "invert failed after unit check");
                return scalar(this, canon_mod(r));
            }
            case ring_kind::finite_field: return scalar(this, t_inv[a.fq()]);
            case ring_kind::poly: {
                // constant unit plus nilpotent tail: Newton iteration, error squares each step
                scalar v = make_poly({coeff->inv(a.poly().c[0])});
                for (int guard = 0; guard < 512; ++guard) {
                    scalar e = sub(one(), mul(a, v));
                    if (is_zero(e)) return v;
                    v = mul(v, add(one(), e));
                }
                throw precondition_error("polynomial inverse did not terminate");
            }
            case ring_kind::laurent: {
                const auto& l = a.laurent();
                laurent_data r;
                r.low = -l.low;
                r.c.push_back(coeff->inv(l.c[0]));
                return scalar(this, std::move(r));
            }
        }
        throw precondition_error("bad ring kind");
    }

    /// Exact division: returns the unique c with a = b*c. Integral domains and fields only,
    /// except that any ring may divide by a unit.
    scalar divexact(const scalar& a, const scalar& b) const {
        check(a); check(b);
        if (is_unit(b)) return mul(a, inv(b));
        switch (kind) {
            case ring_kind::integers: {
                require(b.z() != 0, "division by zero");
                mpz_class q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.z().get_mpz_t(), b.z().get_mpz_t());
                require(r == 0, "divexact with nonzero remainder");
                return scalar(this, q);
            }
            case ring_kind::poly: {
                require(coeff->is_integral_domain(), "polynomial divexact needs a domain base");
                auto q = poly_divexact(a.poly().c, b.poly().c);
                poly_data r;
                r.c = std::move(q);
                return scalar(this, std::move(r));
            }
            case ring_kind::laurent: {
                require(coeff->is_integral_domain(), "Laurent divexact needs a domain base");
                const auto &x = a.laurent(), &y = b.laurent();
                require(!y.c.empty(), "division by zero");
                laurent_data r;
                r.low = x.low - y.low;
                r.c = poly_divexact(x.c, y.c);
                return laurent_make(std::move(r));
            }
            default: throw precondition_error("divexact unsupported for this ring");
        }
    }

    // ---- printing and parsing ----

    std::string str(const scalar& a) const;
    scalar parse_scalar(const std::string& text) const;

    // ---- helpers ----

    static bool fp_poly_irreducible(int p, const std::vector<int>& f);

    scalar make_poly(std::vector<scalar> coeffs) const {
        require(kind == ring_kind::poly, "make_poly needs a polynomial ring");
        while (!coeffs.empty() && coeff->is_zero(coeffs.back())) coeffs.pop_back();
        poly_data d;
        d.c = std::move(coeffs);
        return scalar(this, std::move(d));
    }

    scalar make_laurent(long low, std::vector<scalar> coeffs) const {
        require(kind == ring_kind::laurent, "make_laurent needs a Laurent ring");
        laurent_data d;
        d.low = low;
        d.c = std::move(coeffs);
        return laurent_make(std::move(d));
    }

  private:
    void check(const scalar& a) const {
        if (a.rng() != this) throw precondition_error("scalar used with a foreign ring");
    }

    scalar zero_ref(const scalar&) const { return zero(); }

    static mpz_class canon(const mpz_class& v, const mpz_class& n) {
        mpz_class r = v % n;
        if (r < 0) r += n;
        return r;
    }

    mpz_class canon_mod(const mpz_class& v) const { return canon(v, modulus); }

    std::vector<scalar> poly_add(const std::vector<scalar>& x, const std::vector<scalar>& y) const {
        const ring& B = *coeff;
        std::vector<scalar> r;
        size_t n = std::max(x.size(), y.size());
        r.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            scalar v = i < x.size() ? x[i] : B.zero();
            if (i < y.size()) v = B.add(v, y[i]);
            r.push_back(std::move(v));
        }
        while (!r.empty() && B.is_zero(r.back())) r.pop_back();
        return r;
    }

    std::vector<scalar> poly_mul(const std::vector<scalar>& x, const std::vector<scalar>& y) const {
        const ring& B = *coeff;
        if (x.empty() || y.empty()) return {};
        std::vector<scalar> r(x.size() + y.size() - 1, B.zero());
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j)
                r[i + j] = B.add(r[i + j], B.mul(x[i], y[j]));
        while (!r.empty() && B.is_zero(r.back())) r.pop_back();
        return r;
    }

    std::vector<scalar> poly_divexact(const std::vector<scalar>& x, std::vector<scalar> y) const {
        const ring& B = *coeff;
        while (!y.empty() && B.is_zero(y.back())) y.pop_back();
        require(!y.empty(), "division by zero polynomial");
        std::vector<scalar> rem = x;
        while (!rem.empty() && B.is_zero(rem.back())) rem.pop_back();
        if (rem.empty()) return {};
        require(rem.size() >= y.size(), "divexact with nonzero remainder");
        std::vector<scalar> q(rem.size() - y.size() + 1, B.zero());
        for (size_t k = q.size(); k-- > 0;) {
            if (rem.size() < y.size() + k) continue;
            if (rem.size() != y.size() + k) continue;
            scalar lead = rem.back();
            scalar qk = B.divexact(lead, y.back());
            q[k] = qk;
            for (size_t i = 0; i < y.size(); ++i) {
                size_t pos = k + i;
                rem[pos] = B.sub(rem[pos], B.mul(qk, y[i]));
            }
            while (!rem.empty() && B.is_zero(rem.back())) rem.pop_back();
        }
        require(rem.empty(), "divexact with nonzero remainder");
        return q;
    }

    scalar laurent_make(laurent_data d) const {
        const ring& B = *coeff;
        size_t lead = 0;
        while (lead < d.c.size() && B.is_zero(d.c[lead])) ++lead;
        if (lead > 0) {
            d.c.erase(d.c.begin(), d.c.begin() + long(lead));
            d.low += long(lead);
        }
        while (!d.c.empty() && B.is_zero(d.c.back())) d.c.pop_back();
        if (d.c.empty()) d.low = 0;
        return scalar(this, std::move(d));
    }

    laurent_data laurent_add(const laurent_data& x, const laurent_data& y) const {
        const ring& B = *coeff;
        if (x.c.empty()) return y;
        if (y.c.empty()) return x;
        long low = std::min(x.low, y.low);
        long hi = std::max(x.low + long(x.c.size()), y.low + long(y.c.size()));
        laurent_data r;
        r.low = low;
        r.c.assign(size_t(hi - low), B.zero());
        for (size_t i = 0; i < x.c.size(); ++i) r.c[size_t(x.low - low) + i] = x.c[i];
        for (size_t i = 0; i < y.c.size(); ++i) {
            auto& slot = r.c[size_t(y.low - low) + i];
            slot = B.add(slot, y.c[i]);
        }
        return r;
    }

    void build_tables() {
        int q = fq_order, p = fp, k = fdeg;
        auto digits = [&](int idx) {
            std::vector<int> d(k);
            for (int i = 0; i < k; ++i) { d[i] = idx % p; idx /= p; }
            return d;
        };
        auto index = [&](const std::vector<int>& d) {
            long idx = 0, b = 1;
            for (int i = 0; i < k; ++i) { idx += d[i] * b; b *= p; }
            return int(idx);
        };
        t_add.assign(std::size_t(q) * q, 0);
        t_mul.assign(std::size_t(q) * q, 0);
        t_neg.assign(q, 0);
        t_inv.assign(q, 0);
        for (int a = 0; a < q; ++a) {
            auto da = digits(a);
            std::vector<int> dn(k);
            for (int i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
            t_neg[a] = std::uint16_t(index(dn));
            for (int b = 0; b < q; ++b) {
                auto db = digits(b);
                std::vector<int> ds(k);
                for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
                t_add[std::size_t(a) * q + b] = std::uint16_t(index(ds));
                // multiply then reduce modulo the minimal polynomial
                std::vector<int> prod(2 * k - 1, 0);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                for (int d = 2 * k - 2; d >= k; --d) {
                    int c = prod[d];
                    if (c == 0) continue;
                    prod[d] = 0;
                    for (int i = 0; i < k; ++i)
                        prod[d - k + i] = ((prod[d - k + i] - c * minpoly[i]) % p + p) % p;
                }
                prod.resize(k);
                t_mul[std::size_t(a) * q + b] = std::uint16_t(index(prod));
            }
        }
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (t_mul[std::size_t(a) * q + b] == 1) { t_inv[a] = std::uint16_t(b); break; }
    }
};

inline bool ring::fp_poly_irreducible(int p, const std::vector<int>& f) {
    int deg = int(f.size()) - 1;
    if (deg == 1) return true;
    auto pmod = [&](std::vector<int> a, const std::vector<int>& m) {
        int dm = int(m.size()) - 1;
        for (int d = int(a.size()) - 1; d >= dm; --d) {
            int c = a[size_t(d)];
            if (c == 0) continue;
            // m is monic
            for (int i = 0; i <= dm; ++i)
                a[size_t(d - dm + i)] = ((a[size_t(d - dm + i)] - c * m[size_t(i)]) % p + p) % p;
        }
        while (a.size() > 1 && a.back() == 0) a.pop_back();
        return a;
    };
    // try all monic divisors of degree 1 .. deg/2
    for (int dd = 1; dd <= deg / 2; ++dd) {
        long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            std::vector<int> g(size_t(dd) + 1, 0);
            long t = idx;
            for (int i = 0; i < dd; ++i) { g[size_t(i)] = int(t % p); t /= p; }
            g[size_t(dd)] = 1;
            auto r = pmod(f, g);
            if (r.size() == 1 && r[0] == 0) return false;
        }
    }
    return true;
}

// ---- printing ----

namespace detail {
/// Render one signed monomial c * v^e, parenthesizing compound coefficients.
inline std::string monomial_str(const std::string& cs, const std::string& v, long e, bool lead) {
    std::string c = cs;
    bool neg = false;
    if (!c.empty() && c[0] == '-' && c.find_first_of("+-*^", 1) == std::string::npos) {
        neg = true;
        c = c.substr(1);
    }
    if (c.find_first_of("+-*^") != std::string::npos) {
        c = "(" + (neg ? "-" + c : c) + ")";
        neg = false;
    }
    std::string term;
    if (e == 0) {
        term = c;
    } else {
        std::string vp = e == 1 ? v : v + "^" + std::to_string(e);
        term = (c == "1") ? vp : c + "*" + vp;
    }
    std::string sign = neg ? "-" : (lead ? "" : "+");
    return sign + term;
}
} // namespace detail

inline std::string ring::str(const scalar& a) const {
    check(a);
    switch (kind) {
        case ring_kind::integers: return a.z().get_str();
        case ring_kind::rationals: return a.q().get_str();
        case ring_kind::mod_n: return a.z().get_str();
        case ring_kind::finite_field: {
            if (fdeg == 1) return std::to_string(int(a.fq()));
            int idx = a.fq();
            std::string out;
            bool lead = true;
            for (int d = fdeg - 1; d >= 0; --d) {
                long b = 1;
                for (int i = 0; i < d; ++i) b *= fp;
                int c = int(idx / b) % fp;
                if (c == 0) continue;
                out += detail::monomial_str(std::to_string(c), "x", d, lead);
                lead = false;
            }
            return lead ? "0" : out;
        }
        case ring_kind::poly: {
            const auto& c = a.poly().c;
            std::string out;
            bool lead = true;
            for (size_t d = c.size(); d-- > 0;) {
                if (coeff->is_zero(c[d])) continue;
                out += detail::monomial_str(coeff->str(c[d]), var, long(d), lead);
                lead = false;
            }
            return lead ? "0" : out;
        }
        case ring_kind::laurent: {
            const auto& l = a.laurent();
            std::string out;
            bool lead = true;
            for (size_t i = l.c.size(); i-- > 0;) {
                if (coeff->is_zero(l.c[i])) continue;
                out += detail::monomial_str(coeff->str(l.c[i]), var, l.low + long(i), lead);
                lead = false;
            }
            return lead ? "0" : out;
        }
    }
    return "?";
}

// ---- scalar literal parsing ----

namespace detail {
struct term_tok {
    bool negative = false;
    std::string coeff_text; // "" means 1
    long exp = 0;           // exponent of the ring variable
    bool has_var = false;
};

/// Split "c1*v^e1 + c2*v^e2 - ..." into terms. The variable name is matched literally.
inline std::vector<term_tok> tokenize_terms(const std::string& s, const std::string& v) {
    std::vector<term_tok> out;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(unsigned(s[i]))) ++i; };
    skip_ws();
    if (i >= s.size()) throw parse_error("empty scalar literal");
    while (i < s.size()) {
        term_tok t;
        skip_ws();
        if (s[i] == '+') { ++i; }
        else if (s[i] == '-') { t.negative = true; ++i; }
        else if (!out.empty()) throw parse_error("expected + or - in scalar literal");
        skip_ws();
        bool saw_any = false;
        // optional coefficient: parenthesized or a run of [0-9./-] (leading - handled above)
        if (i < s.size() && s[i] == '(') {
            int depth = 1;
            size_t j = i + 1;
            while (j < s.size() && depth > 0) {
                if (s[j] == '(') ++depth;
                if (s[j] == ')') --depth;
                ++j;
            }
            if (depth != 0) throw parse_error("unbalanced parentheses");
            t.coeff_text = s.substr(i + 1, j - i - 2);
            i = j;
            saw_any = true;
        } else if (i < s.size() && (std::isdigit(unsigned(s[i])))) {
            size_t j = i;
            while (j < s.size() && (std::isdigit(unsigned(s[j])) || s[j] == '/' || s[j] == '.')) ++j;
            t.coeff_text = s.substr(i, j - i);
            i = j;
            saw_any = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
        if (!v.empty() && s.compare(i, v.size(), v) == 0) {
            i += v.size();
            t.has_var = true;
            t.exp = 1;
            saw_any = true;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i; skip_ws();
                size_t j = i;
                if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
                size_t k = j;
                while (k < s.size() && std::isdigit(unsigned(s[k]))) ++k;
                if (k == j) throw parse_error("missing exponent");
                t.exp = std::stol(s.substr(i, k - i));
                i = k;
            }
        }
        if (!saw_any) throw parse_error("cannot read term in scalar literal: " + s.substr(i));
        skip_ws();
        out.push_back(std::move(t));
    }
    return out;
}
} // namespace detail

inline scalar ring::parse_scalar(const std::string& text) const {
    switch (kind) {
        case ring_kind::integers: {
            try {
                return scalar(this, mpz_class(text));
            } catch (const std::invalid_argument&) { throw parse_error("bad integer: " + text); }
        }
        case ring_kind::rationals: {
            try {
                mpq_class v(text);
                v.canonicalize();
                return scalar(this, v);
            } catch (const std::invalid_argument&) { throw parse_error("bad rational: " + text); }
        }
        case ring_kind::mod_n: {
            try {
                return from_z(mpz_class(text));
            } catch (const std::invalid_argument&) { throw parse_error("bad residue: " + text); }
        }
        case ring_kind::finite_field: {
            auto terms = detail::tokenize_terms(text, fdeg > 1 ? "x" : "");
            scalar acc = zero();
            scalar x = fdeg > 1 ? fq_from_digits({0, 1}) : one();
            for (const auto& t : terms) {
                if (t.exp < 0) throw parse_error("negative exponent in field element");
                mpz_class c;
                try {
                    c = t.coeff_text.empty() ? mpz_class(1) : mpz_class(t.coeff_text);
                } catch (const std::invalid_argument&) {
                    throw parse_error("bad coefficient: " + t.coeff_text);
                }
                if (t.negative) c = -c;
                scalar term = from_z(c);
                for (long e = 0; e < t.exp; ++e) term = mul(term, x);
                acc = add(acc, term);
            }
            return acc;
        }
        case ring_kind::poly:
        case ring_kind::laurent: {
            auto terms = detail::tokenize_terms(text, var);
            scalar acc = zero();
            for (const auto& t : terms) {
                if (kind == ring_kind::poly && t.exp < 0) throw parse_error("negative exponent in polynomial");
                scalar c = t.coeff_text.empty() ? coeff->one() : coeff->parse_scalar(t.coeff_text);
                if (t.negative) c = coeff->neg(c);
                scalar term = kind == ring_kind::poly
                                  ? make_poly([&] {
                                        std::vector<scalar> cs(size_t(t.exp) + 1, coeff->zero());
                                        cs.back() = c;
                                        return cs;
                                    }())
                                  : make_laurent(t.exp, {c});
                acc = add(acc, term);
            }
            return acc;
        }
    }
    throw precondition_error("bad ring kind");
}

// ---- ring spec parsing ----

inline ring_ptr ring::parse(const std::string& spec0) {
    std::string spec;
    for (char ch : spec0)
        if (!std::isspace(unsigned(ch))) spec += ch;
    require(!spec.empty(), "empty ring spec");
    // trailing [t] or [t,1/t] builds a polynomial or Laurent ring over the prefix
    if (spec.back() == ']') {
        auto lb = spec.rfind('[');
        if (lb == std::string::npos) throw parse_error("unbalanced ] in ring spec");
        std::string inside = spec.substr(lb + 1, spec.size() - lb - 2);
        std::string base = spec.substr(0, lb);
        auto comma = inside.find(',');
        if (comma == std::string::npos) {
            require(!inside.empty(), "missing variable in ring spec");
            return polynomials(parse(base), inside);
        }
        std::string v = inside.substr(0, comma);
        std::string rest = inside.substr(comma + 1);
        if (rest != "1/" + v) throw parse_error("expected " + v + ",1/" + v + " in ring spec");
        return laurent(parse(base), v);
    }
    if (spec == "Z") return integers();
    if (spec == "Q") return rationals();
    if (spec.rfind("Z/", 0) == 0) {
        try {
            return mod(mpz_class(spec.substr(2)));
        } catch (const std::invalid_argument&) { throw parse_error("bad modulus: " + spec); }
    }
    if (spec[0] == 'F') {
        auto eq = spec.find('=');
        std::string qs = eq == std::string::npos ? spec.substr(1) : spec.substr(1, eq - 1);
        int q = 0;
        try {
            q = std::stoi(qs);
        } catch (...) { throw parse_error("bad field order: " + spec); }
        if (eq == std::string::npos) return gf_order(q);
        // parse the defining polynomial over F_p
        int p = 0;
        for (int d = 2; d <= q; ++d)
            if (q % d == 0) { p = d; break; }
        require(p >= 2, "bad field order");
        auto base = gf(p);
        auto terms = detail::tokenize_terms(spec.substr(eq + 1), "x");
        int deg = 0;
        for (const auto& t : terms) deg = std::max(deg, int(t.exp));
        std::vector<int> f(size_t(deg) + 1, 0);
        for (const auto& t : terms) {
            long c = 1;
            if (!t.coeff_text.empty()) {
                try {
                    c = std::stol(t.coeff_text);
                } catch (...) { throw parse_error("bad coefficient in field spec: " + t.coeff_text); }
            }
            if (t.negative) c = -c;
            f[size_t(t.has_var ? t.exp : 0)] =
                int((((f[size_t(t.has_var ? t.exp : 0)] + c) % p) + p) % p);
        }
        return gf(p, std::move(f));
    }
    throw parse_error("unknown ring spec: " + spec);
}

inline std::string ring::spec() const {
    switch (kind) {
        case ring_kind::integers: return "Z";
        case ring_kind::rationals: return "Q";
        case ring_kind::mod_n: return "Z/" + modulus.get_str();
        case ring_kind::finite_field: {
            if (fdeg == 1) return "F" + std::to_string(fp);
            std::string f;
            bool lead = true;
            for (int d = fdeg; d >= 0; --d) {
                if (minpoly[size_t(d)] == 0) continue;
                f += detail::monomial_str(std::to_string(minpoly[size_t(d)]), "x", d, lead);
                lead = false;
            }
            return "F" + std::to_string(fq_order) + "=" + f;
        }
        case ring_kind::poly: return coeff->spec() + "[" + var + "]";
        case ring_kind::laurent: return coeff->spec() + "[" + var + ",1/" + var + "]";
    }
    return "?";
}

} // namespace octiso
