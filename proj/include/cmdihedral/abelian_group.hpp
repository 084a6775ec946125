#pragma once

// Structure of a finite abelian group given by an element count, the index of
// the identity and a multiplication callback on element indices.

#include "cmdihedral/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cmdihedral {

struct abelian_structure {
    /// Invariant factors, largest first; each > 1.  Empty for the trivial group.
    std::vector<std::int64_t> orders;
    std::vector<std::size_t> generators;
    /// log[x] = a_0 + o_0 * (a_1 + o_1 * (...)) with x = prod g_i^{a_i}.
    std::vector<std::int64_t> log;

    std::vector<std::int64_t> exponents(std::size_t x) const
    {
        std::vector<std::int64_t> out(orders.size());
        std::int64_t code = log.at(x);
        for (std::size_t i = 0; i < orders.size(); ++i) {
            out[i] = code % orders[i];
            code /= orders[i];
        }
        return out;
    }

    std::int64_t code_of(std::vector<std::int64_t> const & exps) const
    {
        std::int64_t code = 0;
        for (std::size_t i = orders.size(); i-- > 0;)
            code = code * orders[i] + mod_floor(exps[i], orders[i]);
        return code;
    }

    std::int64_t group_order() const
    {
        std::int64_t n = 1;
        for (auto o : orders)
            n *= o;
        return n;
    }
};

namespace detail {

template <class Mul>
std::size_t group_pow(std::size_t x, std::int64_t e, std::size_t identity, Mul const & mul)
{
    std::size_t result = identity;
    std::size_t base = x;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

template <class Mul>
std::int64_t element_order(std::size_t x, std::int64_t group_order,
                           std::vector<prime_power> const & fac, std::size_t identity,
                           Mul const & mul)
{
    std::int64_t ord = group_order;
    for (auto [p, e] : fac) {
        for (int i = 0; i < e; ++i) {
            if (group_pow(x, ord / p, identity, mul) == identity)
                ord /= p;
            else
                break;
        }
    }
    return ord;
}

}  // namespace detail

template <class Mul>
abelian_structure decompose_abelian(std::size_t n, std::size_t identity, Mul const & mul)
{
    abelian_structure out;
    out.log.assign(n, 0);
    if (n == 1)
        return out;

    auto const fac = factor(static_cast<std::int64_t>(n));
    std::vector<std::int64_t> ord(n);
    for (std::size_t x = 0; x < n; ++x)
        ord[x] = detail::element_order(x, static_cast<std::int64_t>(n), fac, identity, mul);

    // per prime: cyclic p-factors (order, generator), largest first
    std::vector<std::vector<std::pair<std::int64_t, std::size_t>>> sylow;
    for (auto [p, e] : fac) {
        std::int64_t pe = 1;
        for (int i = 0; i < e; ++i)
            pe *= p;
        std::vector<std::size_t> members;
        for (std::size_t x = 0; x < n; ++x)
            if (pe % ord[x] == 0)
                members.push_back(x);

        std::vector<char> in_h(n, 0);
        std::vector<std::size_t> h_list{identity};
        in_h[identity] = 1;
        std::vector<std::pair<std::int64_t, std::size_t>> factors;
        while (static_cast<std::int64_t>(h_list.size()) < pe) {
            std::size_t best = identity;
            std::int64_t best_ord = 1;
            for (std::size_t x : members) {
                std::int64_t o = 1;
                std::size_t y = x;
                while (!in_h[y]) {
                    y = detail::group_pow(y, p, identity, mul);
                    o *= p;
                }
                if (o > best_ord) {
                    best_ord = o;
                    best = x;
                }
            }
            // a representative of best*H whose order equals its order modulo H
            std::size_t gen = identity;
            bool found = false;
            for (std::size_t h : h_list) {
                std::size_t z = mul(best, h);
                if (ord[z] == best_ord) {
                    gen = z;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw domain_error("decompose_abelian: lifting failed (input is not an abelian group)");
            std::vector<std::size_t> next;
            next.reserve(h_list.size() * static_cast<std::size_t>(best_ord));
            std::size_t power = identity;
            for (std::int64_t i = 0; i < best_ord; ++i) {
                for (std::size_t h : h_list)
                    next.push_back(mul(h, power));
                power = mul(power, gen);
            }
            for (std::size_t x : next)
                in_h[x] = 1;
            h_list = std::move(next);
            factors.emplace_back(best_ord, gen);
        }
        std::stable_sort(factors.begin(), factors.end(),
                         [](auto const & a, auto const & b) { return a.first > b.first; });
        sylow.push_back(std::move(factors));
    }

    std::size_t count = 0;
    for (auto const & f : sylow)
        count = std::max(count, f.size());
    for (std::size_t i = 0; i < count; ++i) {
        std::int64_t o = 1;
        std::size_t g = identity;
        for (auto const & f : sylow) {
            if (i < f.size()) {
                o *= f[i].first;
                g = mul(g, f[i].second);
            }
        }
        out.orders.push_back(o);
        out.generators.push_back(g);
    }

    std::vector<std::size_t> listing{identity};
    for (std::size_t i = 0; i < out.orders.size(); ++i) {
        std::vector<std::size_t> next;
        next.reserve(listing.size() * static_cast<std::size_t>(out.orders[i]));
        std::size_t power = identity;
        for (std::int64_t a = 0; a < out.orders[i]; ++a) {
            for (std::size_t x : listing)
                next.push_back(mul(x, power));
            power = mul(power, out.generators[i]);
        }
        listing = std::move(next);
    }
    if (listing.size() != n)
        throw domain_error("decompose_abelian: generators do not span the group");
    std::vector<char> seen(n, 0);
    for (std::size_t code = 0; code < listing.size(); ++code) {
        if (seen[listing[code]])
            throw domain_error("decompose_abelian: product is not direct");
        seen[listing[code]] = 1;
        out.log[listing[code]] = static_cast<std::int64_t>(code);
    }
    return out;
}

}  // namespace cmdihedral
