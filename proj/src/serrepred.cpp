#include "cmdihedral/serrepred.hpp"

#include <numeric>

namespace cmdihedral {

std::string to_string(LocalCase c)
{
    switch (c) {
    case LocalCase::SplitTame: return "split_tame";
    case LocalCase::RamifiedLevel1: return "ramified_level1";
    case LocalCase::InertLevel2: return "inert_level2";
    case LocalCase::RamifiedLevel2: return "ramified_level2";
    }
    return "?";
}

void check_hypotheses(std::int64_t ell, std::int64_t disc, int k)
{
    if (ell < 5 || !is_prime(ell))
        throw domain_error("hypothesis: ell must be a prime >= 5");
    if (k < 2 || k > ell - 1)
        throw domain_error("hypothesis: weight must satisfy 2 <= k <= ell - 1");
    if (!Discriminant::is_fundamental(Integer(static_cast<long>(disc))))
        throw domain_error("hypothesis: D must be a negative fundamental discriminant");
}

LocalCase ramification_case(std::int64_t ell, SplitKind splitting, int k)
{
    if (ell < 5 || !is_prime(ell) || k < 2 || k > ell - 1)
        throw domain_error("ramification_case: need ell >= 5 prime and 2 <= k <= ell - 1");
    switch (splitting) {
    case SplitKind::split: return LocalCase::SplitTame;
    case SplitKind::inert: return LocalCase::InertLevel2;
    case SplitKind::ramified:
        if (ell == 2 * k - 1)
            return LocalCase::RamifiedLevel1;
        if (ell == 2 * k - 3)
            return LocalCase::RamifiedLevel2;
        throw domain_error("ramification_case: ell ramified but ell is neither 2k-1 nor 2k-3");
    }
    throw domain_error("ramification_case: bad splitting");
}

int delta_conductor_at_ell(LocalCase c)
{
    switch (c) {
    case LocalCase::SplitTame:
    case LocalCase::InertLevel2: return 0;
    case LocalCase::RamifiedLevel1:
    case LocalCase::RamifiedLevel2: return 1;
    }
    return 0;
}

Integer taguchi_level(QuadraticField const & K, IdealRep const & f_phi, std::int64_t ell)
{
    return prime_to_part(K.discriminant().magnitude(), ell) * prime_to_part(f_phi.norm(), ell);
}

Integer predicted_level(Integer const & n_rho, std::int64_t ell, bool ramified)
{
    if (n_rho <= 0)
        throw domain_error("predicted_level: N(rho) must be positive");
    if (mpz_divisible_ui_p(n_rho.get_mpz_t(), static_cast<unsigned long>(ell)))
        throw domain_error("predicted_level: N(rho) divisible by ell");
    return ramified ? n_rho * ell * ell : n_rho;
}

// ---------------------------------------------------------------------------

DirichletChar::DirichletChar(std::int64_t modulus, std::int64_t root_order, std::vector<std::int64_t> table)
    : modulus_(modulus), root_order_(root_order), table_(std::move(table))
{
    if (modulus < 1 || root_order < 1 || static_cast<std::int64_t>(table_.size()) != modulus)
        throw domain_error("DirichletChar: bad modulus, order or table size");
    for (std::int64_t n = 0; n < modulus; ++n) {
        bool const coprime = std::gcd(n, modulus) == 1;
        auto & e = table_[static_cast<std::size_t>(n)];
        if (!coprime)
            e = -1;
        else if (e < 0)
            throw domain_error("DirichletChar: zero value at a unit");
        else
            e %= root_order;
    }
}

DirichletChar DirichletChar::trivial(std::int64_t modulus)
{
    return {modulus, 1, std::vector<std::int64_t>(static_cast<std::size_t>(modulus), 0)};
}

DirichletChar DirichletChar::kronecker_char(std::int64_t disc, std::int64_t modulus)
{
    if (modulus % disc != 0)
        throw domain_error("kronecker_char: modulus must be a multiple of |D|");
    std::vector<std::int64_t> t(static_cast<std::size_t>(modulus));
    for (std::int64_t n = 0; n < modulus; ++n) {
        int const k = kronecker(disc, n);
        t[static_cast<std::size_t>(n)] = k == 0 ? -1 : (k == 1 ? 0 : 1);
    }
    // kronecker(D, n) with gcd(n, modulus) = 1 is never 0 since |D| divides the modulus
    return {modulus, 2, std::move(t)};
}

int DirichletChar::sign_value(std::int64_t n) const
{
    std::int64_t const e = exponent(n);
    if (e < 0)
        return 0;
    if (e == 0)
        return 1;
    if (2 * e == root_order_)
        return -1;
    throw domain_error("DirichletChar: value is not +-1");
}

DirichletChar DirichletChar::extend(std::int64_t modulus) const
{
    if (modulus % modulus_ != 0)
        throw domain_error("DirichletChar::extend: not a multiple of the modulus");
    std::vector<std::int64_t> t(static_cast<std::size_t>(modulus));
    for (std::int64_t n = 0; n < modulus; ++n)
        t[static_cast<std::size_t>(n)] = std::gcd(n, modulus) == 1 ? exponent(n) : -1;
    return {modulus, root_order_, std::move(t)};
}

DirichletChar DirichletChar::mul(DirichletChar const & o) const
{
    std::int64_t const M = std::lcm(modulus_, o.modulus_);
    std::int64_t const N = std::lcm(root_order_, o.root_order_);
    std::vector<std::int64_t> t(static_cast<std::size_t>(M));
    for (std::int64_t n = 0; n < M; ++n) {
        std::int64_t const a = exponent(n), b = o.exponent(n);
        t[static_cast<std::size_t>(n)] =
            (a < 0 || b < 0) ? -1 : (a * (N / root_order_) + b * (N / o.root_order_)) % N;
    }
    return {M, N, std::move(t)};
}

DirichletChar DirichletChar::pow(std::int64_t e) const
{
    std::vector<std::int64_t> t(table_);
    for (auto & x : t)
        if (x >= 0)
            x = static_cast<std::int64_t>(static_cast<__int128>(x) * mod_floor(e, root_order_) % root_order_);
    return {modulus_, root_order_, std::move(t)};
}

std::int64_t DirichletChar::order() const
{
    std::int64_t g = root_order_;
    for (auto x : table_)
        if (x >= 0)
            g = std::gcd(g, x);
    return root_order_ / g;
}

std::int64_t DirichletChar::conductor() const
{
    for (std::int64_t d : divisors(modulus_)) {
        bool ok = true;
        for (std::int64_t n = 1 % d; n < modulus_ && ok; n += d)
            if (table_[static_cast<std::size_t>(n)] > 0)
                ok = false;
        if (ok)
            return d;
    }
    return modulus_;
}

bool DirichletChar::operator==(DirichletChar const & o) const
{
    if (modulus_ != o.modulus_)
        return false;
    std::int64_t const N = std::lcm(root_order_, o.root_order_);
    for (std::int64_t n = 0; n < modulus_; ++n) {
        std::int64_t const a = exponent(n), b = o.exponent(n);
        if ((a < 0) != (b < 0))
            return false;
        if (a >= 0 && a * (N / root_order_) != b * (N / o.root_order_))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

Nebentypus nebentypus(HeckeChar const & chi)
{
    QuadraticField const & K = chi.field();
    std::int64_t const M = to_i64(chi.conductor().norm());
    std::int64_t const absd = to_i64(K.discriminant().magnitude());
    std::vector<std::int64_t> t(static_cast<std::size_t>(M));
    for (std::int64_t m = 0; m < M; ++m)
        t[static_cast<std::size_t>(m)] = std::gcd(m, M) == 1 ? chi.eps_exponent({m, 0}) : -1;
    DirichletChar eta(M, chi.w(), std::move(t));
    DirichletChar eps = DirichletChar::kronecker_char(-absd, M * absd).mul(eta.extend(M * absd));
    return {std::move(eta), std::move(eps)};
}

Integer m_prime(Integer const & M, QuadraticField const & K)
{
    if (M <= 0)
        throw domain_error("m_prime: M must be positive");
    Integer out = 1;
    if (M == 1)
        return out;
    Integer const absd = K.discriminant().magnitude();
    for (auto [p, e] : factor(M)) {
        bool const divides_d = mpz_divisible_ui_p(absd.get_mpz_t(), static_cast<unsigned long>(p));
        if (!divides_d && e % 2 != 0)
            throw domain_error("m_prime: odd exponent at p = " + std::to_string(p) + " not dividing D");
        int const x = divides_d ? (e + 1) / 2 : e / 2;
        for (int i = 0; i < x; ++i)
            out *= p;
    }
    return out;
}

DirichletChar twist_char(DirichletChar const & eps, std::int64_t ell)
{
    if (ell < 3 || !is_prime(ell))
        throw domain_error("twist_char: ell must be an odd prime");
    std::int64_t o = eps.order();
    std::int64_t lh = 1;
    while (o % ell == 0) {
        o /= ell;
        lh *= ell;
    }
    if (o != 1)
        throw domain_error("twist_char: order of eps is not a power of ell");
    return eps.pow((lh - 1) / 2);
}

Integer twisted_level(Integer const & mdk, Integer const & r)
{
    Integer out;
    Integer const r2 = r * r;
    mpz_lcm(out.get_mpz_t(), mdk.get_mpz_t(), r2.get_mpz_t());
    return out;
}

CharPoly charpoly_data(std::int64_t q, HeckeChar const & chi, DirichletChar const & eps, int k)
{
    if (k != chi.weight())
        throw domain_error("charpoly_data: weight does not match the character");
    QuadraticField const & K = chi.field();
    ValueRing const & R = chi.ring();
    Splitting const sp = K.splitting_type(q);
    if (sp.kind == SplitKind::ramified)
        throw domain_error("charpoly_data: q ramified in K");
    Integer const level = chi.conductor().norm() * K.discriminant().magnitude();
    if (mpz_divisible_ui_p(level.get_mpz_t(), static_cast<unsigned long>(q)))
        throw domain_error("charpoly_data: q divides the level");
    Integer qk = 1;
    for (int i = 0; i < k - 1; ++i)
        qk *= q;
    ValueElem const eps_q = R.root_of_unity(eps.root_order(), eps.exponent(q));
    ValueElem const det = R.scale(eps_q, qk);
    if (sp.kind == SplitKind::inert) {
        if (!(det == R.neg(chi.evaluate(K.rational_ideal(q)))))
            throw domain_error("charpoly_data: inert identity eps(q) q^(k-1) = -delta_H(q) fails");
        return {R.zero(), det};
    }
    ValueElem const a = chi.evaluate(sp.primes[0]);
    ValueElem const b = chi.evaluate(sp.primes[1]);
    ValueElem const d = chi.evaluate(K.rational_ideal(q));
    if (!(d == det))
        throw domain_error("charpoly_data: split identity delta_H(q q') = eps(q) q^(k-1) fails");
    return {R.add(a, b), d};
}

// ---------------------------------------------------------------------------

IdealRep delta_conductor(DihedralDatum const & d)
{
    check_hypotheses(d.ell, d.disc, d.k);
    QuadraticField K(d.disc);
    if (mpz_divisible_ui_p(d.f_phi_away.norm().get_mpz_t(), static_cast<unsigned long>(d.ell)))
        throw domain_error("datum: f_phi_away must be prime to ell");
    Splitting const sp = K.splitting_type(d.ell);
    LocalCase const lc = ramification_case(d.ell, sp.kind, d.k);
    int const ord = delta_conductor_at_ell(lc);
    IdealRep f = d.f_phi_away;
    if (ord > 0) {
        IdealRep const P = sp.kind == SplitKind::inert ? K.rational_ideal(d.ell) : sp.primes[0];
        f = K.ideal_multiply(f, K.ideal_pow(P, static_cast<unsigned>(ord)));
    }
    return f;
}

SerrePrediction predict(DihedralDatum const & d)
{
    IdealRep const f_delta = delta_conductor(d);
    QuadraticField K(d.disc);
    Splitting const sp = K.splitting_type(d.ell);
    SerrePrediction out;
    out.local_case = ramification_case(d.ell, sp.kind, d.k);
    bool const ramified = sp.kind == SplitKind::ramified;
    out.n_rho = taguchi_level(K, d.f_phi_away, d.ell);
    out.n_prime = predicted_level(out.n_rho, d.ell, ramified);
    out.mdk = f_delta.norm() * K.discriminant().magnitude();
    out.weight = d.k;
    out.ell_relation = out.local_case == LocalCase::RamifiedLevel1   ? "2k-1"
                       : out.local_case == LocalCase::RamifiedLevel2 ? "2k-3"
                                                                     : "none";
    out.nebentypus_conductor = 1;
    return out;
}

SerrePrediction predict_from_level(std::int64_t disc, std::int64_t ell, int k, Integer const & n_rho)
{
    check_hypotheses(ell, disc, k);
    QuadraticField K(disc);
    Splitting const sp = K.splitting_type(ell);
    SerrePrediction out;
    out.local_case = ramification_case(ell, sp.kind, k);
    bool const ramified = sp.kind == SplitKind::ramified;
    out.n_rho = n_rho;
    out.n_prime = predicted_level(n_rho, ell, ramified);
    // ell-part of M |D| is ell^{f ord_v + ord_ell |D|}, i.e. ell^2 or 1
    out.mdk = out.n_prime;
    out.weight = k;
    out.ell_relation = out.local_case == LocalCase::RamifiedLevel1   ? "2k-1"
                       : out.local_case == LocalCase::RamifiedLevel2 ? "2k-3"
                                                                     : "none";
    out.nebentypus_conductor = 1;
    return out;
}

}  // namespace cmdihedral
