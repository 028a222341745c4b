#pragma once
#include <random>

#include <catch_amalgamated.hpp>

#include "braidcoh/braidcoh.hpp"
#include "braidcoh/io.hpp"
#include "oracle.hpp"

namespace t {
using namespace braidcoh;

inline const GroupTable& group(const std::string& name) { return GroupCatalog::instance().get(name); }

template <class F>
BraidedAlgebra<F> conj(const std::string& name, const F& f)
{
    return group_algebra_conjugation(group(name), f);
}

template <class F>
bool throws_kind(ErrorKind k, F&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == k;
    }
    return false;
}

// dense oracle complex built straight from the group table
inline oracle::Complex<oracle::Zp> oracle_group(const std::string& name, int64_t p)
{
    return oracle::group_complex(oracle::Zp{p}, group(name).mul);
}

inline oracle::Th oth(Theory t)
{
    switch (t) {
    case Theory::Hochschild: return oracle::Th::H;
    case Theory::YB: return oracle::Th::YB;
    case Theory::YBH: return oracle::Th::YBH;
    default: return oracle::Th::BC;
    }
}

template <class F>
bool zero_cochain_p(const Cochain<F>& c)
{
    for (auto& m : c)
        if (!m.is_zero()) return false;
    return true;
}
} // namespace t
