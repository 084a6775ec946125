#include "cmdihedral/kernels.hpp"

#include <cstdlib>
#include <string>

namespace cmdihedral {

int configured_threads()
{
    char const * env = std::getenv("CM_DIHEDRAL_THREADS");
    if (env == nullptr || *env == '\0')
        return 1;
    try {
        std::size_t used = 0;
        int const n = std::stoi(env, &used);
        if (used == std::string(env).size() && n > 0)
            return n;
    } catch (std::exception const &) {
    }
    throw domain_error("CM_DIHEDRAL_THREADS must be a positive integer");
}

namespace {

Integer series_coeff(std::vector<Integer> const & a, std::vector<Integer> const & b, std::size_t n)
{
    Integer s = 0;
    std::size_t const lo = n >= b.size() ? n - b.size() + 1 : 0;
    std::size_t const hi = std::min(n, a.size() - 1);
    for (std::size_t i = lo; i <= hi; ++i)
        if (a[i] != 0 && b[n - i] != 0)
            mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
    return s;
}

ValueElem theta_coeff(HeckeChar const & chi, std::int64_t n)
{
    QuadraticField const & K = chi.field();
    ValueRing const & R = chi.ring();
    ValueElem s = R.zero();
    for (auto const & I : K.ideals_of_norm(n))
        if (K.coprime(I, chi.conductor()))
            s = R.add(s, chi.evaluate(I));
    return s;
}

}  // namespace

std::vector<Integer> series_mul(std::vector<Integer> const & a, std::vector<Integer> const & b, std::size_t prec,
                                int threads)
{
    std::vector<Integer> out(prec + 1, 0);
    if (a.empty() || b.empty())
        return out;
    detail::parallel_for(0, static_cast<std::int64_t>(prec) + 1, threads, [&](std::int64_t n) {
        out[static_cast<std::size_t>(n)] = series_coeff(a, b, static_cast<std::size_t>(n));
    });
    return out;
}

std::vector<Integer> series_mul_serial(std::vector<Integer> const & a, std::vector<Integer> const & b,
                                       std::size_t prec)
{
    std::vector<Integer> out(prec + 1, 0);
    if (a.empty() || b.empty())
        return out;
    for (std::size_t n = 0; n <= prec; ++n)
        out[n] = series_coeff(a, b, n);
    return out;
}

std::vector<ValueElem> theta_coefficients(HeckeChar const & chi, std::size_t prec, int threads)
{
    std::vector<ValueElem> out(prec + 1, chi.ring().zero());
    detail::parallel_for(1, static_cast<std::int64_t>(prec) + 1, threads, [&](std::int64_t n) {
        out[static_cast<std::size_t>(n)] = theta_coeff(chi, n);
    });
    return out;
}

std::vector<ValueElem> theta_coefficients_serial(HeckeChar const & chi, std::size_t prec)
{
    std::vector<ValueElem> out(prec + 1, chi.ring().zero());
    for (std::size_t n = 1; n <= prec; ++n)
        out[n] = theta_coeff(chi, static_cast<std::int64_t>(n));
    return out;
}

std::vector<FiniteField::elem> reduce_coefficients(std::vector<ValueElem> const & c, ReductionMap const & m,
                                                   int threads)
{
    std::vector<FiniteField::elem> out(c.size(), 0);
    detail::parallel_for(0, static_cast<std::int64_t>(c.size()), threads, [&](std::int64_t i) {
        out[static_cast<std::size_t>(i)] = reduce(c[static_cast<std::size_t>(i)], m);
    });
    return out;
}

std::vector<FiniteField::elem> reduce_coefficients_serial(std::vector<ValueElem> const & c, ReductionMap const & m)
{
    std::vector<FiniteField::elem> out(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i] = reduce(c[i], m);
    return out;
}

}  // namespace cmdihedral
