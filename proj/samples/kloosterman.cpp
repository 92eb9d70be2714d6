// The twisted Kloosterman sums K(a,b,t;n) for b = 7: direct sum next to the closed form.

#include <cstdio>

#include <hookdist/modular.hpp>

int main()
{
    using namespace hookdist;
    for (std::int64_t t : {2, 3, 4}) {
        for (std::int64_t n = 0; n < 7; ++n) {
            const KloostermanParams p{0, 7, t, n};
            const PrecComplex d = kloosterman_direct(p);
            const KloostermanClosed c = kloosterman_closed(p);
            const PrecComplex closed = c.value();
            std::printf("t=%lld n=%lld  direct %+.10f%+.10fi  closed %+.10f%+.10fi  |K|^2 = %lld\n",
                        static_cast<long long>(t), static_cast<long long>(n), to_double(d.re) + 0.0,
                        to_double(d.im) + 0.0, to_double(closed.re) + 0.0, to_double(closed.im) + 0.0,
                        static_cast<long long>(c.norm()));
        }
    }
}
