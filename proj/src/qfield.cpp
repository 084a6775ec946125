#include "cmdihedral/qfield.hpp"

#include <algorithm>
#include <sstream>

namespace cmdihedral {

namespace {

Integer fdiv(Integer const & a, Integer const & b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer fmod(Integer const & a, Integer const & m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool divides(Integer const & d, Integer const & x)
{
    if (d == 0)
        return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

Integer gcd(Integer const & a, Integer const & b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool squarefree(Integer n)
{
    if (n < 0)
        n = -n;
    for (auto [p, e] : factor(n))
        if (e > 1)
            return false;
    return true;
}

/// HNF of the Z-lattice spanned by vectors (x, y) = x + y omega.
IdealHnf lattice_hnf(std::vector<std::pair<Integer, Integer>> const & gens)
{
    Integer A = 0;
    bool have_pivot = false;
    Integer px, py;
    for (auto const & [x, y] : gens) {
        if (y == 0) {
            A = gcd(A, x);
            continue;
        }
        if (!have_pivot) {
            px = x;
            py = y;
            have_pivot = true;
            continue;
        }
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), py.get_mpz_t(), y.get_mpz_t());
        Integer nx = s * px + t * x;
        Integer zero_x = (y / g) * px - (py / g) * x;
        A = gcd(A, zero_x);
        px = nx;
        py = g;
    }
    if (!have_pivot || A == 0)
        throw domain_error("lattice_hnf: lattice is not of full rank");
    if (py < 0) {
        px = -px;
        py = -py;
    }
    return {A, fmod(px, A), py};
}

}  // namespace

// ---------------------------------------------------------------------------

Discriminant::Discriminant(Integer const & d) : d_(d)
{
    if (!is_fundamental(d))
        throw domain_error("not a negative fundamental discriminant: " + d.get_str());
}

bool Discriminant::is_fundamental(Integer const & d)
{
    if (d >= 0)
        return false;
    Integer const r4 = fmod(d, 4);
    if (r4 == 1)
        return squarefree(d);
    if (r4 != 0)
        return false;
    Integer const m = d / 4;
    Integer const m4 = fmod(m, 4);
    return (m4 == 2 || m4 == 3) && squarefree(m);
}

std::string QuadInt::str() const
{
    std::ostringstream o;
    o << a << (b < 0 ? "-" : "+") << abs(b) << "*w";
    return o.str();
}

std::string QuadForm::str() const
{
    std::ostringstream o;
    o << "(" << a << "," << b << "," << c << ")";
    return o.str();
}

std::string IdealRep::str() const
{
    std::ostringstream o;
    if (content != 1)
        o << content << "*";
    o << "[" << n << "," << b << "]";
    return o.str();
}

// ---------------------------------------------------------------------------

QuadInt QuadraticField::mul(QuadInt const & x, QuadInt const & y) const
{
    Integer const bb = x.b * y.b;
    return {x.a * y.a + bb * omega_sq_const(), x.a * y.b + x.b * y.a + bb * delta()};
}

QuadInt QuadraticField::pow(QuadInt x, unsigned e) const
{
    QuadInt r{1, 0};
    while (e > 0) {
        if (e & 1U)
            r = mul(r, x);
        x = mul(x, x);
        e >>= 1U;
    }
    return r;
}

Integer QuadraticField::norm(QuadInt const & x) const
{
    return x.a * x.a + x.a * x.b * delta() - x.b * x.b * omega_sq_const();
}

std::vector<QuadInt> QuadraticField::units() const
{
    std::vector<QuadInt> out;
    if (D() == -4 || D() == -3) {
        // omega is i resp. a primitive sixth root of unity
        QuadInt const gen{0, 1};
        QuadInt x{1, 0};
        int const order = D() == -4 ? 4 : 6;
        for (int i = 0; i < order; ++i) {
            out.push_back(x);
            x = mul(x, gen);
        }
        return out;
    }
    out.push_back({1, 0});
    out.push_back({-1, 0});
    return out;
}

// ---------------------------------------------------------------------------

QuadForm QuadraticField::reduce(QuadForm f) const
{
    if (f.b * f.b - 4 * f.a * f.c != D())
        throw domain_error("reduce: form has wrong discriminant");
    if (f.a <= 0)
        throw domain_error("reduce: form is not positive definite");
    auto normalize = [&]() {
        Integer const k = fdiv(f.a - f.b, 2 * f.a);
        f.b += 2 * f.a * k;
        f.c = (f.b * f.b - D()) / (4 * f.a);
    };
    normalize();
    while (f.a > f.c) {
        std::swap(f.a, f.c);
        f.b = -f.b;
        normalize();
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

std::vector<QuadForm> QuadraticField::reduced_forms() const
{
    std::vector<QuadForm> out;
    Integer const absd = -D();
    for (Integer a = 1; 3 * a * a <= absd; ++a) {
        for (Integer b = -a + 1; b <= a; ++b) {
            if (fmod(b - D(), 2) != 0)
                continue;
            Integer const num = b * b - D();
            if (!divides(4 * a, num))
                continue;
            Integer const c = num / (4 * a);
            if (c < a)
                continue;
            if (b < 0 && a == c)
                continue;
            if (gcd(gcd(a, b), c) != 1)
                continue;
            out.push_back({a, b, c});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](QuadForm const & x, QuadForm const & y) {
        if (x.a != y.a)
            return x.a < y.a;
        if (abs(x.b) != abs(y.b))
            return abs(x.b) < abs(y.b);
        return x.b > y.b;
    });
    return out;
}

QuadForm QuadraticField::associated_form(IdealRep const & I) const
{
    return {I.n, I.b, (I.b * I.b - D()) / (4 * I.n)};
}

IdealRep QuadraticField::ideal_of_form(QuadForm const & f) const
{
    return make_ideal(1, f.a, f.b);
}

QuadForm QuadraticField::compose(QuadForm const & f, QuadForm const & g) const
{
    if (f.b * f.b - 4 * f.a * f.c != D() || g.b * g.b - 4 * g.a * g.c != D())
        throw domain_error("compose: mismatched discriminants");
    IdealRep const prod = ideal_multiply(ideal_of_form(f), ideal_of_form(g));
    return reduce(associated_form(prod));
}

ClassGroup QuadraticField::class_group() const
{
    std::vector<QuadForm> forms = reduced_forms();
    std::size_t const h = forms.size();
    std::map<std::pair<Integer, Integer>, std::size_t> idx;
    for (std::size_t i = 0; i < h; ++i)
        idx[{forms[i].a, forms[i].b}] = i;
    std::vector<std::size_t> table(h * h);
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = i; j < h; ++j) {
            QuadForm const r = compose(forms[i], forms[j]);
            std::size_t const k = idx.at({r.a, r.b});
            table[i * h + j] = k;
            table[j * h + i] = k;
        }
    }
    return ClassGroup(std::move(forms), std::move(table));
}

std::size_t QuadraticField::ideal_class(ClassGroup const & cl, IdealRep const & I) const
{
    return cl.index_of(reduce(associated_form(I)));
}

// ---------------------------------------------------------------------------

ClassGroup::ClassGroup(std::vector<QuadForm> forms, std::vector<std::size_t> table)
    : forms_(std::move(forms)), table_(std::move(table))
{
    for (std::size_t i = 0; i < forms_.size(); ++i)
        index_[{forms_[i].a, forms_[i].b}] = i;
    structure_ = decompose_abelian(forms_.size(), 0,
                                   [this](std::size_t i, std::size_t j) { return compose(i, j); });
}

std::size_t ClassGroup::index_of(QuadForm const & reduced) const
{
    auto it = index_.find({reduced.a, reduced.b});
    if (it == index_.end())
        throw domain_error("ClassGroup::index_of: form is not reduced or not in this group");
    return it->second;
}

std::size_t ClassGroup::inverse(std::size_t i) const
{
    for (std::size_t j = 0; j < forms_.size(); ++j)
        if (compose(i, j) == identity())
            return j;
    throw domain_error("ClassGroup::inverse: no inverse");
}

std::size_t ClassGroup::from_exponents(std::vector<std::int64_t> const & e) const
{
    std::int64_t const code = structure_.code_of(e);
    for (std::size_t i = 0; i < forms_.size(); ++i)
        if (structure_.log[i] == code)
            return i;
    throw domain_error("ClassGroup::from_exponents: bad exponent vector");
}

// ---------------------------------------------------------------------------

IdealRep QuadraticField::make_ideal(Integer const & content, Integer const & n, Integer const & b) const
{
    if (content <= 0 || n <= 0)
        throw domain_error("make_ideal: content and n must be positive");
    if (!divides(4 * n, b * b - D()))
        throw domain_error("make_ideal: b^2 != D mod 4n");
    // b mod 2n into (-n, n]
    Integer bb = fmod(b, 2 * n);
    if (bb > n)
        bb -= 2 * n;
    return {content, n, bb};
}

IdealHnf QuadraticField::hnf(IdealRep const & I) const
{
    return {I.content * I.n, I.content * ((I.b - delta()) / 2), I.content};
}

IdealRep QuadraticField::from_hnf(IdealHnf const & h) const
{
    if (!divides(h.C, h.A) || !divides(h.C, h.B))
        throw domain_error("from_hnf: lattice is not an ideal");
    Integer const n = h.A / h.C;
    Integer const b = 2 * (h.B / h.C) + delta();
    return make_ideal(h.C, n, b);
}

IdealRep QuadraticField::principal_ideal(QuadInt const & x) const
{
    if (x.a == 0 && x.b == 0)
        throw domain_error("principal_ideal: zero element");
    QuadInt const xw = mul(x, QuadInt{0, 1});
    return from_hnf(lattice_hnf({{x.a, x.b}, {xw.a, xw.b}}));
}

IdealRep QuadraticField::rational_ideal(Integer const & m) const
{
    if (m == 0)
        throw domain_error("rational_ideal: zero");
    return make_ideal(abs(m), 1, delta());
}

IdealRep QuadraticField::ideal_multiply(IdealRep const & I, IdealRep const & J) const
{
    IdealHnf const h1 = hnf(I);
    IdealHnf const h2 = hnf(J);
    QuadInt const g1[2] = {{h1.A, 0}, {h1.B, h1.C}};
    QuadInt const g2[2] = {{h2.A, 0}, {h2.B, h2.C}};
    std::vector<std::pair<Integer, Integer>> gens;
    for (auto const & x : g1)
        for (auto const & y : g2) {
            QuadInt const z = mul(x, y);
            gens.emplace_back(z.a, z.b);
        }
    return from_hnf(lattice_hnf(gens));
}

IdealRep QuadraticField::ideal_pow(IdealRep const & I, unsigned e) const
{
    IdealRep r = unit_ideal();
    for (unsigned i = 0; i < e; ++i)
        r = ideal_multiply(r, I);
    return r;
}

IdealRep QuadraticField::conjugate(IdealRep const & I) const
{
    return make_ideal(I.content, I.n, -I.b);
}

IdealRep QuadraticField::divide_exact(IdealRep const & I, Integer const & m) const
{
    IdealHnf const h = hnf(I);
    if (!divides(m, h.A) || !divides(m, h.B) || !divides(m, h.C))
        throw domain_error("divide_exact: ideal not divisible");
    return from_hnf({h.A / m, h.B / m, h.C / m});
}

bool QuadraticField::contains(IdealRep const & I, QuadInt const & x) const
{
    IdealHnf const h = hnf(I);
    if (!divides(h.C, x.b))
        return false;
    Integer const k = x.b / h.C;
    return divides(h.A, x.a - k * h.B);
}

bool QuadraticField::is_subset(IdealRep const & I, IdealRep const & J) const
{
    IdealHnf const h = hnf(I);
    return contains(J, {h.A, 0}) && contains(J, {h.B, h.C});
}

bool QuadraticField::coprime(IdealRep const & I, IdealRep const & J) const
{
    Integer const g = gcd(I.norm(), J.norm());
    if (g == 1)
        return true;
    for (auto [p, e] : factor(g)) {
        std::vector<IdealRep> primes = splitting_type(p).primes;
        if (primes.empty())
            primes.push_back(rational_ideal(p));
        for (auto const & P : primes)
            if (is_subset(I, P) && is_subset(J, P))
                return false;
    }
    return true;
}

Splitting QuadraticField::splitting_type(std::int64_t p) const
{
    if (!is_prime(p))
        throw domain_error("splitting_type: not a prime");
    int const k = kronecker(D(), Integer(static_cast<long>(p)));
    Integer const P(static_cast<long>(p));
    if (k == -1)
        return {SplitKind::inert, {}};
    if (k == 0) {
        Integer b;
        if (p == 2)
            b = fmod(D(), 8) == 0 ? 0 : 2;
        else
            b = delta() == 0 ? Integer(0) : P;
        return {SplitKind::ramified, {make_ideal(1, P, b)}};
    }
    Integer b;
    if (p == 2) {
        b = 1;
    } else {
        std::int64_t const s = sqrt_mod_prime(to_i64(fmod(D(), P)), p);
        std::int64_t const s1 = std::min(s, p - s);
        // of s1 and p - s1 exactly one has the parity of D
        b = Integer(static_cast<long>(s1 % 2 == delta() ? s1 : p - s1));
    }
    IdealRep const first = make_ideal(1, P, b);
    IdealRep const second = make_ideal(1, P, -b);
    if (first.b > 0)
        return {SplitKind::split, {first, second}};
    return {SplitKind::split, {second, first}};
}

std::vector<IdealRep> QuadraticField::ideals_of_norm(std::int64_t n) const
{
    if (n <= 0)
        throw domain_error("ideals_of_norm: n must be positive");
    std::vector<IdealRep> acc{unit_ideal()};
    for (auto [p, e] : factor(n)) {
        Splitting const sp = splitting_type(p);
        std::vector<IdealRep> local;
        switch (sp.kind) {
        case SplitKind::inert:
            if (e % 2 == 0) {
                Integer pk = 1;
                for (int i = 0; i < e / 2; ++i)
                    pk *= p;
                local.push_back(rational_ideal(pk));
            }
            break;
        case SplitKind::ramified:
            local.push_back(ideal_pow(sp.primes[0], static_cast<unsigned>(e)));
            break;
        case SplitKind::split:
            for (int i = 0; i <= e; ++i)
                local.push_back(ideal_multiply(ideal_pow(sp.primes[0], static_cast<unsigned>(i)),
                                               ideal_pow(sp.primes[1], static_cast<unsigned>(e - i))));
            break;
        }
        std::vector<IdealRep> next;
        for (auto const & I : acc)
            for (auto const & J : local)
                next.push_back(ideal_multiply(I, J));
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

int QuadraticField::ideal_valuation(IdealRep I, IdealRep const & P) const
{
    IdealRep const Pbar = conjugate(P);
    Integer const normP = P.norm();
    int v = 0;
    while (is_subset(I, P)) {
        I = divide_exact(ideal_multiply(I, Pbar), normP);
        ++v;
    }
    return v;
}

std::vector<PrimeFactor> QuadraticField::prime_factorization(IdealRep const & I) const
{
    std::vector<PrimeFactor> out;
    Integer const N = I.norm();
    if (N == 1)
        return out;
    for (auto [p, e] : factor(N)) {
        Splitting const sp = splitting_type(p);
        std::vector<IdealRep> primes = sp.primes;
        if (sp.kind == SplitKind::inert)
            primes.push_back(rational_ideal(p));
        for (auto const & P : primes) {
            int const v = ideal_valuation(I, P);
            if (v > 0)
                out.push_back({P, Integer(static_cast<long>(p)), v});
        }
    }
    return out;
}

std::optional<QuadInt> QuadraticField::principal_generator(IdealRep const & I) const
{
    Integer const N = I.norm();
    Integer const absd = -D();
    Integer const ybound = isqrt(4 * N / absd);
    for (Integer yabs = 0; yabs <= ybound; ++yabs) {
        for (int sy = 1; sy >= -1; sy -= 2) {
            if (yabs == 0 && sy < 0)
                continue;
            Integer const y = sy * yabs;
            Integer const rhs = 4 * N - y * y * absd;
            Integer s;
            if (!is_square(rhs, s))
                continue;
            for (int st = 1; st >= -1; st -= 2) {
                if (s == 0 && st < 0)
                    continue;
                Integer const twice_x = st * s - y * delta();
                if (fmod(twice_x, 2) != 0)
                    continue;
                QuadInt const alpha{twice_x / 2, y};
                if (contains(I, alpha))
                    return alpha;
            }
        }
    }
    return std::nullopt;
}

}  // namespace cmdihedral
