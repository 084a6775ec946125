#include "cmdihedral/charmod.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cmdihedral {

// ---------------------------------------------------------------------------
// residue groups

ResidueGroup::ResidueGroup(QuadraticField const & K, IdealRep const & modulus)
    : K_(K), modulus_(K.make_ideal(modulus.content, modulus.n, modulus.b))
{
    if (modulus_.norm() > max_modulus_norm)
        throw domain_error("residue_group: modulus norm exceeds 10^6");
    IdealHnf const h = K.hnf(modulus_);
    A_ = to_i64(h.A);
    B_ = to_i64(h.B);
    C_ = to_i64(h.C);
    primes_ = K.prime_factorization(modulus_);

    std::vector<IdealHnf> prime_hnf;
    for (auto const & P : primes_)
        prime_hnf.push_back(K.hnf(P.prime));
    auto const in_ideal = [](IdealHnf const & H, std::int64_t x, std::int64_t y) {
        std::int64_t const a = to_i64(H.A), b = to_i64(H.B), c = to_i64(H.C);
        return y % c == 0 && (x - (y / c) * b) % a == 0;
    };

    std::int64_t const n = A_ * C_;
    unit_pos_.assign(static_cast<std::size_t>(n), -1);
    for (std::int64_t r = 0; r < n; ++r) {
        std::int64_t const y = r / A_, x = r % A_;
        bool unit = true;
        for (auto const & H : prime_hnf)
            if (in_ideal(H, x, y)) {
                unit = false;
                break;
            }
        if (n == 1)
            unit = true;
        if (unit) {
            unit_pos_[static_cast<std::size_t>(r)] = static_cast<std::int64_t>(units_.size());
            units_.push_back(r);
        }
    }

    std::int64_t const wsq = to_i64(K.omega_sq_const());
    std::int64_t const delta = K.delta();
    auto const reduce_xy = [this](__int128 x, __int128 y) {
        __int128 yr = y % C_;
        if (yr < 0)
            yr += C_;
        __int128 const k = (y - yr) / C_;
        __int128 xr = (x - k * B_) % A_;
        if (xr < 0)
            xr += A_;
        return static_cast<std::int64_t>(yr * A_ + xr);
    };
    auto const mul = [&](std::size_t i, std::size_t j) {
        std::int64_t const r1 = units_[i], r2 = units_[j];
        __int128 const x1 = r1 % A_, y1 = r1 / A_, x2 = r2 % A_, y2 = r2 / A_;
        __int128 const yy = y1 * y2;
        std::int64_t const r = reduce_xy(x1 * x2 + yy * wsq, x1 * y2 + x2 * y1 + yy * delta);
        return static_cast<std::size_t>(unit_pos_[static_cast<std::size_t>(r)]);
    };
    std::size_t const identity = static_cast<std::size_t>(unit_pos_[static_cast<std::size_t>(residue({1, 0}))]);
    structure_ = decompose_abelian(units_.size(), identity, mul);
}

std::int64_t ResidueGroup::residue(QuadInt const & x) const
{
    Integer yr, xr;
    Integer const C(static_cast<long>(C_)), A(static_cast<long>(A_)), B(static_cast<long>(B_));
    mpz_fdiv_r(yr.get_mpz_t(), x.b.get_mpz_t(), C.get_mpz_t());
    Integer const k = (x.b - yr) / C;
    Integer const t = x.a - k * B;
    mpz_fdiv_r(xr.get_mpz_t(), t.get_mpz_t(), A.get_mpz_t());
    return to_i64(yr) * A_ + to_i64(xr);
}

QuadInt ResidueGroup::element(std::int64_t r) const
{
    return {Integer(static_cast<long>(r % A_)), Integer(static_cast<long>(r / A_))};
}

std::vector<QuadInt> ResidueGroup::generators() const
{
    std::vector<QuadInt> out;
    for (auto g : structure_.generators)
        out.push_back(element(units_[g]));
    return out;
}

std::int64_t ResidueGroup::unit_position(QuadInt const & x) const
{
    std::int64_t const p = unit_pos_[static_cast<std::size_t>(residue(x))];
    if (p < 0)
        throw domain_error("residue_group: element is not a unit modulo " + modulus_.str());
    return p;
}

std::vector<std::int64_t> ResidueGroup::log(QuadInt const & x) const
{
    return structure_.exponents(static_cast<std::size_t>(unit_position(x)));
}

// ---------------------------------------------------------------------------

int predict_conductor_at_v(int ord_alpha, std::int64_t ell, int k, int f, bool local_match)
{
    if (ell < 5 || !is_prime(ell))
        throw domain_error("predict_conductor_at_v: ell must be a prime >= 5");
    if (k < 2)
        throw domain_error("predict_conductor_at_v: weight must be >= 2");
    if (f != 1 && f != 2)
        throw domain_error("predict_conductor_at_v: residue degree must be 1 or 2");
    if (ord_alpha < 0)
        throw domain_error("predict_conductor_at_v: negative conductor exponent");
    if (ord_alpha >= 2)
        return ord_alpha;
    if (ord_alpha == 1)
        return local_match ? 0 : 1;
    std::int64_t const q1 = (f == 1 ? ell : ell * ell) - 1;
    return (k - 1) % q1 == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Hecke characters

HeckeChar::HeckeChar(HeckeSpec spec)
    : spec_(std::move(spec)),
      K_(spec_.disc),
      G_(K_, spec_.conductor),
      cl_(K_.class_group())
{
    spec_.conductor = G_.modulus();
    if (spec_.weight < 2)
        throw domain_error("hecke character: weight must be >= 2");
    auto const & orders = G_.orders();
    if (spec_.finite_part.size() != orders.size())
        throw domain_error("hecke character: finite part needs " + std::to_string(orders.size()) +
                           " exponents, got " + std::to_string(spec_.finite_part.size()));
    for (std::size_t i = 0; i < orders.size(); ++i) {
        spec_.finite_part[i] = mod_floor(spec_.finite_part[i], orders[i]);
        w_ = std::lcm(w_, orders[i] / std::gcd(spec_.finite_part[i], orders[i]));
    }
    eps_table_.resize(static_cast<std::size_t>(G_.order()));
    for (std::size_t p = 0; p < eps_table_.size(); ++p) {
        auto const ex = G_.structure().exponents(p);
        std::int64_t v = 0;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            std::int64_t const g = std::gcd(spec_.finite_part[i], orders[i]);
            std::int64_t const oi = orders[i] / g;
            v += (spec_.finite_part[i] / g) * ex[i] % oi * (w_ / oi);
        }
        eps_table_[p] = mod_floor(v, w_);
    }

    // exact conductor: nontrivial on units = 1 mod f/p for every p | f
    for (auto const & P : G_.primes()) {
        IdealRep const smaller =
            K_.divide_exact(K_.ideal_multiply(spec_.conductor, K_.conjugate(P.prime)), P.prime.norm());
        bool nontrivial = false;
        for (std::size_t p = 0; p < eps_table_.size() && !nontrivial; ++p) {
            QuadInt const x = G_.element(G_.unit_residues()[p]);
            if (eps_table_[p] != 0 && K_.contains(smaller, K_.sub(x, {1, 0})))
                nontrivial = true;
        }
        if (!nontrivial)
            throw domain_error("hecke character: conductor not exact at " + P.prime.str());
    }

    ValueRing base(K_, w_);
    unsigned const km1 = static_cast<unsigned>(spec_.weight - 1);
    for (auto const & u : K_.units()) {
        ValueElem const v = base.mul(base.zeta_power(eps_exponent(u)), base.from_quadint(K_.pow(u, km1)));
        if (!(v == base.one()))
            throw domain_error("hecke character: unit inconsistency at u = " + u.str());
    }

    // class extension
    Integer const fnorm = spec_.conductor.norm();
    auto const & cs = cl_.structure();
    for (std::size_t j = 0; j < cs.orders.size(); ++j) {
        std::optional<IdealRep> chosen;
        for (std::int64_t p = 2; p < 100000 && !chosen; ++p) {
            if (!is_prime(p) || mpz_divisible_ui_p(fnorm.get_mpz_t(), static_cast<unsigned long>(p)))
                continue;
            if (std::find(spec_.avoid.begin(), spec_.avoid.end(), p) != spec_.avoid.end())
                continue;
            for (auto const & P : K_.splitting_type(p).primes)
                if (K_.ideal_class(cl_, P) == cs.generators[j]) {
                    chosen = P;
                    break;
                }
        }
        if (!chosen)
            throw domain_error("hecke character: no prime ideal found in a generator class");
        std::int64_t const h = cs.orders[j];
        auto beta = K_.principal_generator(K_.ideal_pow(*chosen, static_cast<unsigned>(h)));
        if (!beta)
            throw domain_error("hecke character: b^h is not principal");
        ext_.push_back({*chosen, h, *beta, eps_exponent(*beta)});
    }
    ValueRing R = base;
    for (auto const & e : ext_) {
        ValueElem const c = R.mul(R.zeta_power(e.eps_beta), R.from_quadint(K_.pow(e.beta, km1)));
        R = R.with_root(e.order, c);
    }
    ring_ = std::make_shared<ValueRing const>(std::move(R));
    for (auto const & e : ext_) {
        Integer nk = 1;
        Integer const nb = K_.norm(e.beta);
        for (unsigned i = 0; i < km1; ++i)
            nk *= nb;
        ValueElem const num =
            ring_->mul(ring_->zeta_power(-e.eps_beta), ring_->from_quadint(K_.pow(K_.conj(e.beta), km1)));
        c_inv_.push_back(ring_->div_int(num, nk));
    }
}

std::int64_t HeckeChar::eps_exponent(QuadInt const & x) const
{
    return eps_table_[static_cast<std::size_t>(G_.unit_position(x))];
}

ValueElem HeckeChar::evaluate(IdealRep const & a, std::optional<std::vector<std::int64_t>> shifts) const
{
    if (!K_.coprime(a, spec_.conductor))
        throw domain_error("evaluate: ideal " + a.str() + " is not coprime to the conductor");
    auto const & cs = cl_.structure();
    auto const e = cl_.exponents(K_.ideal_class(cl_, a));
    if (shifts && shifts->size() != e.size())
        throw domain_error("evaluate: wrong number of decomposition shifts");
    IdealRep c = a;
    std::vector<std::int64_t> q(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) {
        q[j] = shifts ? (*shifts)[j] : (e[j] > 0 ? 1 : 0);
        std::int64_t const aj = q[j] * cs.orders[j] - e[j];
        if (aj < 0)
            throw domain_error("evaluate: decomposition shift too small");
        c = K_.ideal_multiply(c, K_.ideal_pow(ext_[j].prime, static_cast<unsigned>(aj)));
    }
    auto const gamma = K_.principal_generator(c);
    if (!gamma)
        throw domain_error("evaluate: internal error, ideal not principal");
    ValueRing const & R = *ring_;
    ValueElem v = R.mul(R.zeta_power(eps_exponent(*gamma)),
                        R.from_quadint(K_.pow(*gamma, static_cast<unsigned>(spec_.weight - 1))));
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] > 0)
            v = R.mul(v, R.t_power(j, e[j]));
        if (q[j] > 0)
            v = R.mul(v, R.pow(c_inv_[j], static_cast<std::uint64_t>(q[j])));
    }
    return v;
}

// ---------------------------------------------------------------------------
// reductions

namespace {

using elem = FiniteField::elem;

elem reduce_vec(FiniteField const & F, std::vector<Integer> const & v, std::vector<elem> const & mono)
{
    elem s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            s = F.add(s, F.mul(F.from_integer(v[i]), mono[i]));
    return s;
}

struct Enumerator {
    ValueRing const & R;
    FiniteField const & F;
    std::shared_ptr<FiniteField const> Fp;
    std::vector<std::int64_t> const & root_choice;
    std::vector<ReductionMap> out;
    bool complete = true;

    std::vector<elem> candidates(std::size_t L, std::vector<elem> const & mono)
    {
        auto const & layer = R.layers()[L];
        std::int64_t const n = F.order() - 1;
        std::vector<elem> c;
        switch (layer.kind) {
        case ValueRing::LayerKind::omega: {
            // roots of x^2 - delta x - C: (delta +- sqrt D)/2
            elem const d = F.from_integer(R.field().D());
            elem const half = F.inv(F.from_int(2));
            elem const del = F.from_int(R.field().delta());
            if (d == 0) {
                c.push_back(F.mul(del, half));
            } else if (F.log(d) % 2 == 0) {
                elem const s = F.exp(F.log(d) / 2);
                c.push_back(F.mul(F.add(del, s), half));
                c.push_back(F.mul(F.sub(del, s), half));
            }
            break;
        }
        case ValueRing::LayerKind::zeta: {
            std::int64_t const w = R.w();
            if (n % w != 0)
                break;
            for (std::int64_t j = 1; j <= w; ++j)
                if (std::gcd(j, w) == 1)
                    c.push_back(F.exp((n / w) * j));
            break;
        }
        case ValueRing::LayerKind::root: {
            elem const cb = reduce_vec(F, layer.relation[0], mono);
            std::int64_t const h = layer.degree;
            if (cb == 0) {
                c.push_back(0);
                break;
            }
            std::int64_t const Lc = F.log(cb);
            std::int64_t const g = std::gcd(h, n);
            if (Lc % g != 0)
                break;
            std::int64_t const m = n / g;
            std::int64_t const y0 = static_cast<std::int64_t>(
                static_cast<__int128>(Lc / g) * invmod((h / g) % m, m) % m);
            for (std::int64_t i = 0; i < g; ++i)
                c.push_back(F.exp(y0 + i * m));
            break;
        }
        }
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (layer.kind == ValueRing::LayerKind::root && !root_choice.empty() && !c.empty()) {
            auto const j = static_cast<std::size_t>(layer.root_index);
            std::int64_t const idx = root_choice.at(j);
            if (idx < 0 || idx >= static_cast<std::int64_t>(c.size()))
                throw domain_error("build_reductions: class part root index out of range");
            c = {c[static_cast<std::size_t>(idx)]};
        }
        return c;
    }

    void run(std::size_t L, std::vector<elem> & images, std::vector<elem> const & mono)
    {
        if (L == R.layers().size()) {
            out.push_back({F.characteristic(), F.degree(), Fp, images, mono});
            return;
        }
        auto const & layer = R.layers()[L];
        auto const cand = candidates(L, mono);
        if (cand.empty()) {
            complete = false;
            return;
        }
        for (elem g : cand) {
            // x^deg = sum rel_i x^i
            elem rhs = 0;
            for (int i = 0; i < layer.degree; ++i)
                rhs = F.add(rhs, F.mul(reduce_vec(F, layer.relation[i], mono), F.pow(g, i)));
            if (F.pow(g, layer.degree) != rhs)
                continue;
            std::vector<elem> next;
            next.reserve(mono.size() * static_cast<std::size_t>(layer.degree));
            elem gp = 1;
            for (int e = 0; e < layer.degree; ++e) {
                for (elem m : mono)
                    next.push_back(F.mul(m, gp));
                gp = F.mul(gp, g);
            }
            images.push_back(g);
            run(L + 1, images, next);
            images.pop_back();
        }
    }
};

}  // namespace

std::vector<ReductionMap> build_reductions(ValueRing const & R, std::int64_t ell,
                                           std::vector<std::int64_t> const & root_choice, std::size_t max_maps)
{
    if (ell < 3 || !is_prime(ell))
        throw domain_error("build_reductions: ell must be an odd prime");
    if (R.w() % ell == 0)
        throw domain_error("build_reductions: ell divides the root-of-unity order");
    if (!root_choice.empty() && root_choice.size() != R.root_count())
        throw domain_error("build_reductions: class part length mismatch");
    int const r_omega = (!R.embedded() && kronecker(R.field().D(), Integer(static_cast<long>(ell))) == -1) ? 2 : 1;
    int const r_zeta = static_cast<int>(multiplicative_order(ell % R.w(), R.w()));
    int r0 = std::lcm(r_omega, r_zeta);
    // every root of t^h = c must be available: adjoin the prime-to-ell h-th roots of unity
    for (std::size_t j = 0; j < R.root_count(); ++j) {
        std::int64_t const h = to_i64(prime_to_part(Integer(static_cast<long>(R.root_degree(j))), ell));
        if (h > 1)
            r0 = std::lcm(r0, static_cast<int>(multiplicative_order(ell % h, h)));
    }
    for (int r = r0;; r += r0) {
        double const q = std::pow(static_cast<double>(ell), r);
        if (q > static_cast<double>(FiniteField::max_order))
            break;
        auto F = std::make_shared<FiniteField const>(ell, r);
        Enumerator en{R, *F, F, root_choice, {}, true};
        std::vector<elem> images;
        en.run(0, images, std::vector<elem>{1});
        if (en.complete && !en.out.empty()) {
            if (en.out.size() > max_maps)
                en.out.resize(max_maps);
            return en.out;
        }
    }
    throw domain_error("build_reductions: no valid assignment within the field size cap");
}

FiniteField::elem reduce(ValueElem const & x, ReductionMap const & m)
{
    if (x.coeffs.size() != m.monomials.size())
        throw domain_error("reduce: element and reduction map belong to different rings");
    FiniteField const & F = *m.field;
    elem const d = F.from_integer(x.den);
    if (d == 0)
        throw domain_error("reduce: denominator divisible by the residue characteristic");
    elem const s = reduce_vec(F, x.coeffs, m.monomials);
    return x.den == 1 ? s : F.div(s, d);
}

}  // namespace cmdihedral
